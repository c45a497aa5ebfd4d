#include "doctest.h"

#include "repglt/gln_oracle.hpp"
#include "repglt/rng.hpp"

using namespace repglt;

TEST_CASE("verma straightening satisfies the bracket relations") {
    // [E_ab, E_cd] v = δ_bc E_ad v − δ_da E_cb v on random PBW vectors
    Rng rng(606);
    auto run = [&](auto field, const std::vector<typename decltype(field)::Elem>& hw) {
        using F = decltype(field);
        VermaSpace<F> verma(field, LieData::gl(static_cast<int>(hw.size())), hw);
        int roots = static_cast<int>(verma.data().neg_roots.size());
        for (int trial = 0; trial < 40; ++trial) {
            typename VermaSpace<F>::Vec v;
            for (int terms = 0; terms < 2; ++terms) {
                PbwExps m{};
                for (int k = 0; k < roots; ++k) m[static_cast<std::size_t>(k)] = static_cast<int>(rng.range(0, 3));
                v[m] = field.from_integer(rng.range(1, 5));
            }
            int n = static_cast<int>(hw.size());
            int a = static_cast<int>(rng.range(0, n - 1)), b = static_cast<int>(rng.range(0, n - 1));
            int c = static_cast<int>(rng.range(0, n - 1)), d = static_cast<int>(rng.range(0, n - 1));
            auto lhs1 = verma.apply(a, b, verma.apply(c, d, v));
            auto lhs2 = verma.apply(c, d, verma.apply(a, b, v));
            typename VermaSpace<F>::Vec rhs;
            if (b == c) rhs = verma.apply(a, d, v);
            if (d == a)
                for (auto& [m, coef] : verma.apply(c, b, v)) {
                    auto it = rhs.find(m);
                    if (it == rhs.end())
                        rhs[m] = -coef;
                    else {
                        it->second = it->second - coef;
                        if (field.is_zero(it->second)) rhs.erase(it);
                    }
                }
            // lhs1 - lhs2 == rhs
            typename VermaSpace<F>::Vec diff = lhs1;
            for (auto& [m, coef] : lhs2) {
                auto it = diff.find(m);
                if (it == diff.end())
                    diff[m] = -coef;
                else {
                    it->second = it->second - coef;
                    if (field.is_zero(it->second)) diff.erase(it);
                }
            }
            CHECK(diff == rhs);
        }
    };
    RationalField Q;
    run(Q, {Rational(2), Rational(-1, 2), Rational(1)});
    FiniteField f7(7);
    run(f7, {f7.from_integer(3), f7.from_integer(1), f7.from_integer(0)});
    run(Q, std::vector<Rational>{Rational(5, 3), Rational(0)});
}

TEST_CASE("matching tensors have the expected delta patterns") {
    RationalField Q;
    auto id = Matching::identity(ObjectWord{1, 0});
    auto m2 = matching_to_tensor(Q, id, 2);
    CHECK(m2.rows() == 2);
    CHECK(m2.is_identity());

    auto evm = enumerate_matchings({1, 1}, {0, 0}).front();
    auto trace3 = matching_to_tensor(Q, evm, 3); // 1 x 9 row, ones on the diagonal pairs
    CHECK(trace3.rows() == 1);
    CHECK(trace3.cols() == 9);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(trace3.at(0, i * 3 + j) == (i == j ? Rational(1) : Rational(0)));

    // full contraction of the identity equals the rank
    for (int n = 1; n <= 5; ++n) {
        auto t = matching_to_tensor(Q, id, n);
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += t.at(i, i);
        CHECK(tr == Rational(n));
    }
}

TEST_CASE("hom dimensions against the diagrammatic count") {
    CHECK(hom_dim_gln(2, {2, 0}, {2, 0}) == 2);
    CHECK(hom_dim_gln(1, {1, 1}, {1, 1}) == 1); // degeneration at small rank
    CHECK(hom_dim_gln(3, {1, 1}, {1, 1}) == 2);
    CHECK(hom_dim_gln(4, {1, 0}, {0, 1}) == 0); // unbalanced
}

TEST_CASE("weyl dimension formula") {
    CHECK(weyl_dim({1, 0}) == 2);
    CHECK(weyl_dim({2, 0}) == 3);
    CHECK(weyl_dim({1, 0, -1}) == 8);
    CHECK(weyl_dim({2, 1, 0}) == 8);
    CHECK(weyl_dim({3, 3, 0}) == 10);
    CHECK_THROWS_AS(weyl_dim({0, 1}), Error);
}

TEST_CASE("explicit irreducibles at rank two") {
    RationalField Q;

    auto v = build_irreducible_gln(Q, std::vector<long>{1, 0});
    CHECK(v.dim == 2);
    CHECK(v.check_commutation_relations());
    // E_21 is the lowering matrix unit in the weight basis
    int hw = -1, low = -1;
    for (int i = 0; i < 2; ++i)
        (v.weight_offsets[static_cast<std::size_t>(i)][0] == 0 ? hw : low) = i;
    CHECK(v.e_mat(1, 0).at(low, hw) == Rational(1));
    CHECK(v.e_mat(1, 0).at(hw, low) == Rational(0));

    auto det = build_irreducible_gln(Q, std::vector<long>{1, 1});
    CHECK(det.dim == 1);
    CHECK(det.e_mat(0, 0).at(0, 0) == Rational(1));
    CHECK(det.e_mat(1, 1).at(0, 0) == Rational(1));
    CHECK(det.e_mat(0, 1).is_zero());
    CHECK(det.e_mat(1, 0).is_zero());

    auto sym2 = build_irreducible_gln(Q, std::vector<long>{2, 0});
    CHECK(sym2.dim == 3);
    CHECK(sym2.check_commutation_relations());
    // raising coefficients along the f-chain: e f v = 2 v, e f^2 v = 2 f v
    // (basis ordered by ascending weight offsets, so the chain is reversed)
    std::vector<Rational> raise_coeffs;
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 3; ++r)
            if (!sym2.e_mat(0, 1).at(r, c).is_zero()) raise_coeffs.push_back(sym2.e_mat(0, 1).at(r, c));
    REQUIRE(raise_coeffs.size() == 2);
    CHECK(raise_coeffs[0] == Rational(2));
    CHECK(raise_coeffs[1] == Rational(2));
}

TEST_CASE("rank-three construction matches the dimension formula") {
    RationalField Q;
    for (const auto& lam : std::vector<std::vector<long>>{
             {1, 0, 0}, {1, 1, 0}, {2, 0, 0}, {2, 1, 0}, {1, 0, -1}, {2, 2, 0}}) {
        auto mod = build_irreducible_gln(Q, lam);
        CHECK(mpz_class(mod.dim) == weyl_dim(lam));
        CHECK(mod.check_commutation_relations());
        CHECK(is_irreducible(mod));
        auto rep = singular_vectors(mod);
        CHECK(rep.total_dim() == 1);
        for (long o : rep.lines[0].weight_offset) CHECK(o == 0);
    }
    CHECK_THROWS_AS(build_irreducible_gln(Q, std::vector<long>{10, 0, 0}), Error); // dim 66 > bound
    CHECK_THROWS_AS(build_irreducible_gln(Q, std::vector<long>{0, 1, 0}), Error);  // non-dominant
}
