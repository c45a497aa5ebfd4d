#include "doctest.h"

#include "repglt/diagram.hpp"
#include "repglt/gln_oracle.hpp"
#include "repglt/rng.hpp"

using namespace repglt;

namespace {

DiagramLC cap() { return DiagramLC::basis(enumerate_matchings({1, 1}, {0, 0}).front()); }
DiagramLC cup() { return DiagramLC::basis(enumerate_matchings({0, 0}, {1, 1}).front()); }

DiagramLC random_diagram(Rng& rng, const ObjectWord& src, const ObjectWord& dst) {
    auto ms = enumerate_matchings(src, dst);
    DiagramLC d(src, dst);
    REQUIRE(!ms.empty());
    int terms = static_cast<int>(rng.range(1, std::min<long>(3, static_cast<long>(ms.size()))));
    for (int i = 0; i < terms; ++i) {
        UniPolyT coeff({Rational(rng.range(-3, 3)), Rational(rng.range(-2, 2))});
        d.add_term(ms[static_cast<std::size_t>(rng.range(0, static_cast<long>(ms.size()) - 1))], coeff);
    }
    return d;
}

ObjectWord random_word(Rng& rng, int max_total) {
    int total = static_cast<int>(rng.range(0, max_total));
    int bullets = static_cast<int>(rng.range(0, total));
    return {bullets, total - bullets};
}

} // namespace

TEST_CASE("matching enumeration counts") {
    CHECK(enumerate_matchings({1, 1}, {1, 1}).size() == 2);
    CHECK(enumerate_matchings({1, 1}, {0, 0}).size() == 1);
    CHECK(enumerate_matchings({1, 0}, {0, 1}).empty()); // balance fails
    CHECK(enumerate_matchings({2, 1}, {2, 1}).size() == 6);
    CHECK(enumerate_matchings({0, 0}, {0, 0}).size() == 1);
}

TEST_CASE("matching constructor enforces the color rules") {
    // src bullet paired with dst circle is illegal across rows
    CHECK_THROWS_AS(Matching({1, 0}, {0, 1}, {1, 0}), Error);
    // same-row pair must join opposite colors
    CHECK_THROWS_AS(Matching({2, 0}, {0, 0}, {1, 0}), Error);
}

TEST_CASE("composition traces chains and collects loop factors") {
    auto ev = cap(), coev = cup();
    auto loop = compose(ev, coev); // End((0,0))
    REQUIRE(loop.terms().size() == 1);
    CHECK(loop.terms()[0].second == UniPolyT::variable()); // factor t

    auto id10 = DiagramLC::identity(ObjectWord{1, 0});
    CHECK(compose(id10, id10) == id10);

    auto e = compose(coev, ev); // e in End((1,1))
    CHECK(compose(e, e) == e.scaled(UniPolyT::variable()));

    CHECK_THROWS_AS(compose(id10, DiagramLC::identity(ObjectWord{0, 1})), Error);
}

TEST_CASE("tensor and dual behave as stated") {
    auto id10 = DiagramLC::identity(ObjectWord{1, 0});
    auto id01 = DiagramLC::identity(ObjectWord{0, 1});
    CHECK(tensor(id10, id01) == DiagramLC::identity(ObjectWord{1, 1}));
    CHECK(dual(cap()) == cup());

    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        ObjectWord src = random_word(rng, 2), dst = random_word(rng, 2);
        auto ms = enumerate_matchings(src, dst);
        if (ms.empty()) continue;
        auto f = random_diagram(rng, src, dst);
        CHECK(dual(dual(f)) == f);
    }
}

TEST_CASE("closure traces") {
    CHECK(closure_trace(DiagramLC::identity(ObjectWord{1, 0})) == UniPolyT::variable());
    CHECK(closure_trace(DiagramLC::identity(ObjectWord{0, 0})) == UniPolyT(1));
    CHECK(closure_trace(DiagramLC::identity(ObjectWord{1, 1})) ==
          UniPolyT::monomial(2, Rational(1)));
    CHECK_THROWS_AS(closure_trace(cap()), Error);
}

TEST_CASE("composition is associative on random triples") {
    Rng rng(99);
    std::vector<ObjectWord> words = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}};
    int done = 0;
    while (done < 60) {
        ObjectWord a = words[static_cast<std::size_t>(rng.range(0, 5))];
        ObjectWord b = words[static_cast<std::size_t>(rng.range(0, 5))];
        ObjectWord c = words[static_cast<std::size_t>(rng.range(0, 5))];
        ObjectWord d = words[static_cast<std::size_t>(rng.range(0, 5))];
        if (enumerate_matchings(a, b).empty() || enumerate_matchings(b, c).empty() ||
            enumerate_matchings(c, d).empty())
            continue;
        auto f = random_diagram(rng, a, b);
        auto g = random_diagram(rng, b, c);
        auto h = random_diagram(rng, c, d);
        CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
        ++done;
    }
}

TEST_CASE("tensor and composition satisfy the interchange law") {
    Rng rng(123);
    std::vector<ObjectWord> words = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    int done = 0;
    while (done < 40) {
        ObjectWord a1 = words[static_cast<std::size_t>(rng.range(0, 3))];
        ObjectWord b1 = words[static_cast<std::size_t>(rng.range(0, 3))];
        ObjectWord c1 = words[static_cast<std::size_t>(rng.range(0, 3))];
        ObjectWord a2 = words[static_cast<std::size_t>(rng.range(0, 3))];
        ObjectWord b2 = words[static_cast<std::size_t>(rng.range(0, 3))];
        ObjectWord c2 = words[static_cast<std::size_t>(rng.range(0, 3))];
        if (enumerate_matchings(a1, b1).empty() || enumerate_matchings(b1, c1).empty() ||
            enumerate_matchings(a2, b2).empty() || enumerate_matchings(b2, c2).empty())
            continue;
        auto f1 = random_diagram(rng, a1, b1), g1 = random_diagram(rng, b1, c1);
        auto f2 = random_diagram(rng, a2, b2), g2 = random_diagram(rng, b2, c2);
        CHECK(tensor(compose(g1, f1), compose(g2, f2)) ==
              compose(tensor(g1, g2), tensor(f1, f2)));
        ++done;
    }
}

TEST_CASE("closure trace is symmetric") {
    Rng rng(321);
    std::vector<ObjectWord> words = {{1, 0}, {1, 1}, {2, 0}};
    for (int trial = 0; trial < 40; ++trial) {
        ObjectWord a = words[static_cast<std::size_t>(rng.range(0, 2))];
        ObjectWord b = words[static_cast<std::size_t>(rng.range(0, 2))];
        if (enumerate_matchings(a, b).empty() || enumerate_matchings(b, a).empty()) continue;
        auto f = random_diagram(rng, a, b);
        auto g = random_diagram(rng, b, a);
        CHECK(closure_trace(compose(f, g)) == closure_trace(compose(g, f)));
    }
}

TEST_CASE("concrete tensors intertwine diagram composition") {
    RationalField Q;
    std::vector<ObjectWord> words = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}};
    for (const auto& a : words)
        for (const auto& b : words)
            for (const auto& c : words) {
                auto fs = enumerate_matchings(a, b);
                auto gs = enumerate_matchings(b, c);
                if (fs.empty() || gs.empty()) continue;
                for (int n = 1; n <= 4; ++n)
                    for (const auto& f : fs)
                        for (const auto& g : gs) {
                            auto composed = compose_matchings(g, f);
                            Matrix<RationalField> lhs =
                                matching_to_tensor(Q, g, n) * matching_to_tensor(Q, f, n);
                            Matrix<RationalField> rhs = matching_to_tensor(Q, composed.matching, n);
                            Rational factor(1);
                            for (int i = 0; i < composed.loops; ++i) factor *= Rational(n);
                            CHECK(lhs == rhs.scaled(factor));
                        }
            }
}
