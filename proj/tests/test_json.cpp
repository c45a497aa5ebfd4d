#include "doctest.h"

#include "repglt/json_io.hpp"
#include "repglt/gln_oracle.hpp"
#include "repglt/modular_weyl.hpp"
#include "repglt/rng.hpp"

using namespace repglt;

TEST_CASE("scalar encodings round trip") {
    CHECK(rational_from_json(rational_to_json(Rational(-7, 3))) == Rational(-7, 3));
    CHECK(rational_from_json(Json(5)) == Rational(5));

    FiniteField f49(7, 2);
    auto x = f49.element({3, 1});
    CHECK(elem_from_json(f49, elem_to_json(f49, x)) == x);
    CHECK(elem_from_json(f49, Json("1/2")) == f49.from_rational(Rational(1, 2)));
    // mismatched field tags are rejected
    Json wrong = elem_to_json(f49, x);
    wrong["p"] = 5;
    CHECK_THROWS_AS(elem_from_json(f49, wrong), Error);

    UniPolyT p({Rational(1, 2), Rational(0), Rational(-3)});
    CHECK(poly_from_json(poly_to_json(p)) == p);
}

TEST_CASE("diagram encodings round trip") {
    Rng rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        ObjectWord src{static_cast<int>(rng.range(0, 2)), static_cast<int>(rng.range(0, 2))};
        ObjectWord dst{static_cast<int>(rng.range(0, 2)), static_cast<int>(rng.range(0, 2))};
        auto ms = enumerate_matchings(src, dst);
        if (ms.empty()) continue;
        DiagramLC d(src, dst);
        d.add_term(ms[static_cast<std::size_t>(rng.range(0, static_cast<long>(ms.size()) - 1))],
                   UniPolyT({Rational(1), Rational(rng.range(-2, 2))}));
        CHECK(diagram_from_json(diagram_to_json(d)) == d);
        for (const auto& m : ms) CHECK(matching_from_json(matching_to_json(m)) == m);
    }
}

TEST_CASE("series and factored polynomial encodings round trip") {
    RationalField Q;
    TruncSeries<RationalField> s(Q, 4);
    for (int k = 0; k <= 4; ++k) s.set_coeff(k, Rational(k, 3));
    CHECK(series_from_json(Q, series_to_json(Q, s)) == s);

    FiniteField f7(7);
    FactoredPoly<FiniteField> p(f7, {f7.from_integer(2), f7.from_integer(2), f7.from_integer(5)});
    CHECK(factored_from_json(f7, factored_to_json(f7, p)) == p);
}

TEST_CASE("yangian module encoding preserves structure and provenance") {
    FiniteField f7(7);
    auto a = evaluation_module(gl2_irreducible_modp(f7, f7.from_integer(1), f7.from_integer(0)));
    auto b = evaluation_module(gl2_irreducible_modp(f7, f7.from_integer(2), f7.from_integer(0)));
    auto t = tensor_module(apply_shift(a, f7.from_integer(3), 3), b);

    Json j = yangian_to_json(t);
    auto back = yangian_from_json(f7, j);
    CHECK(back.n == t.n);
    CHECK(back.dim == t.dim);
    CHECK(back.trunc == t.trunc);
    CHECK(back.exact == t.exact);
    for (int i = 0; i < t.n; ++i)
        for (int jj = 0; jj < t.n; ++jj)
            for (int m = 1; m <= t.trunc; ++m) CHECK(back.t(i, jj, m) == t.t(i, jj, m));
    REQUIRE(back.factors.size() == 2);
    CHECK(back.factors[0].shift == f7.from_integer(3));
    CHECK(back.has_provenance);
    // re-encoding is stable
    CHECK(yangian_to_json(back) == j);
}

TEST_CASE("weight and drinfeld data encodings round trip") {
    RationalField Q;
    DrinfeldDataCR<RationalField> data(Q);
    data.bullet.push_back(FactoredPoly<RationalField>(Q, {Rational(0), Rational(-1)}));
    data.circ.push_back(FactoredPoly<RationalField>(Q, {Rational(1, 2)}));
    auto hw = weight_from_drinfeld(data);

    auto hw2 = highest_weight_from_json(Q, highest_weight_to_json(Q, hw));
    CHECK(hw2 == hw);
    auto data2 = drinfeld_from_json(Q, drinfeld_to_json(Q, data));
    CHECK(data2 == data);
}

TEST_CASE("field spec parsing") {
    CHECK(FieldSpec::parse("q").rational);
    auto f = FieldSpec::parse("fp:7:2");
    CHECK(!f.rational);
    CHECK(f.p == 7);
    CHECK(f.m == 2);
    CHECK(FieldSpec::parse("fp:11").m == 1);
    CHECK_THROWS_AS(FieldSpec::parse("gf:9"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("fp:abc"), Error);
    CHECK(f.str() == "fp:7:2");
}
