#include "doctest.h"

#include "repglt/gln_oracle.hpp"
#include "repglt/modular_weyl.hpp"
#include "repglt/rng.hpp"
#include "repglt/yangian.hpp"

using namespace repglt;

namespace {

YangianModule<RationalField> ev2(long a, long b) {
    RationalField Q;
    return evaluation_module(build_irreducible_gln(Q, std::vector<long>{a, b}));
}

template <FieldLike F>
YangianModule<F> direct_sum(const YangianModule<F>& m) {
    YangianModule<F> out(m.field, m.n, 2 * m.dim, m.trunc, m.exact);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            for (int mm = 1; mm <= m.trunc; ++mm)
                for (int r = 0; r < m.dim; ++r)
                    for (int c = 0; c < m.dim; ++c) {
                        out.t(i, j, mm).at(r, c) = m.t(i, j, mm).at(r, c);
                        out.t(i, j, mm).at(m.dim + r, m.dim + c) = m.t(i, j, mm).at(r, c);
                    }
    return out;
}

// gl_n commutation relations for the degree-one coefficients
template <FieldLike F>
bool embedding_relations_hold(const YangianModule<F>& m) {
    for (int a = 0; a < m.n; ++a)
        for (int b = 0; b < m.n; ++b)
            for (int c = 0; c < m.n; ++c)
                for (int d = 0; d < m.n; ++d) {
                    Matrix<F> lhs = m.t(a, b, 1) * m.t(c, d, 1) - m.t(c, d, 1) * m.t(a, b, 1);
                    Matrix<F> rhs(m.field, m.dim, m.dim);
                    if (b == c) rhs = rhs + m.t(a, d, 1);
                    if (d == a) rhs = rhs - m.t(c, b, 1);
                    if (!(lhs == rhs)) return false;
                }
    return true;
}

} // namespace

TEST_CASE("evaluation modules have degree-one polynomial generators") {
    RationalField Q;
    auto mod = build_irreducible_gln(Q, std::vector<long>{1, 0});
    auto ev = evaluation_module(mod);
    CHECK(ev.trunc == 1);
    CHECK(ev.exact);
    CHECK(ev.t(0, 1, 1) == mod.e_mat(0, 1));
    CHECK(ev.t_coeff(0, 1, 2).is_zero());
    CHECK(ev.t_coeff(1, 1, 0).is_identity());
    CHECK(verify_rtt(ev));

    auto trivial = evaluation_module(build_irreducible_gln(Q, std::vector<long>{0, 0}));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(trivial.t(i, j, 1).is_zero());
}

TEST_CASE("shifts expand geometrically") {
    auto ev = ev2(1, 0);
    Rational z(2);
    auto sh = apply_shift(ev, z, 5);
    CHECK(!sh.exact);
    for (int m = 1; m <= 5; ++m) {
        Rational zpow(1);
        for (int i = 1; i < m; ++i) zpow *= z;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(sh.t(i, j, m) == ev.t(i, j, 1).scaled(zpow));
    }
    CHECK(verify_rtt(sh));
}

TEST_CASE("tensor products multiply dimensions and preserve the relation") {
    auto a = ev2(1, 0), b = ev2(2, 0);
    auto t = tensor_module(a, b);
    CHECK(t.dim == a.dim * b.dim);
    CHECK(t.trunc == 2);
    CHECK(t.exact);
    CHECK(verify_rtt(t));
    CHECK(embedding_relations_hold(t));

    // tensoring with the trivial module changes nothing
    RationalField Q;
    auto triv = evaluation_module(build_irreducible_gln(Q, std::vector<long>{0, 0}));
    auto at = tensor_module(a, triv);
    CHECK(at.dim == a.dim);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(at.t(i, j, 1) == a.t(i, j, 1));

    CHECK_THROWS_AS(tensor_module(a, evaluation_module(build_irreducible_gln(Q, std::vector<long>{1, 0, 0}))),
                    Error);
}

TEST_CASE("relation verification catches a perturbed generator") {
    auto ev = ev2(1, 0);
    RationalField Q;
    ev.t(0, 0, 1) = ev.t(0, 0, 1) + Matrix<RationalField>::unit(Q, 2, 0, 1);
    CHECK(!verify_rtt(ev));
}

TEST_CASE("singular spaces and weights") {
    SUBCASE("evaluation module weight is 1 + h_i u^{-1}") {
        auto ev = ev2(3, 1);
        auto sw = singular_and_weight(ev);
        REQUIRE(sw.basis.rows() == 1);
        REQUIRE(sw.weight.has_value());
        CHECK((*sw.weight)[0].coeff(1) == Rational(3));
        CHECK((*sw.weight)[1].coeff(1) == Rational(1));
    }
    SUBCASE("modular tensor with ordered parameters has a singular line") {
        FiniteField f7(7);
        auto l1 = evaluation_module(gl2_irreducible_modp(f7, f7.from_integer(1), f7.from_integer(0)));
        auto l2 = evaluation_module(gl2_irreducible_modp(f7, f7.from_integer(2), f7.from_integer(0)));
        auto t = tensor_module(l1, l2);
        CHECK(t.dim == 6);
        auto sw = singular_and_weight(t);
        CHECK(sw.basis.rows() == 1);
        CHECK(is_irreducible(t));
    }
    SUBCASE("a direct sum has a plane of singular vectors and no weight") {
        auto d = direct_sum(ev2(1, 0));
        auto sw = singular_and_weight(d);
        CHECK(sw.basis.rows() == 2);
        CHECK(!sw.weight.has_value());
        CHECK(!is_irreducible(d));
    }
}

TEST_CASE("renumeration criterion") {
    FiniteField f7(7);
    using P = std::pair<FFElem, FFElem>;
    auto fp = [&](long x) { return f7.from_integer(x); };

    auto good = renumeration_criterion(f7, std::vector<P>{{fp(1), fp(0)}, {fp(2), fp(0)}});
    CHECK(good.satisfied);

    auto bad = renumeration_criterion(f7, std::vector<P>{{fp(2), fp(0)}, {fp(1), fp(0)}});
    CHECK(!bad.satisfied);
    CHECK(bad.pairs[0] == P{fp(1), fp(0)});
    CHECK(bad.pairs[1] == P{fp(2), fp(0)});

    // all differences outside the prime subfield: vacuously satisfied
    FiniteField f49(7, 2);
    auto x = f49.generator();
    auto vac = renumeration_criterion(
        f49, std::vector<std::pair<FFElem, FFElem>>{{x, f49.zero()}, {x + f49.one(), f49.zero()}});
    CHECK(vac.satisfied);

    // characteristic-0 analog via integer differences
    RationalField Q;
    auto char0 = renumeration_criterion(
        Q, std::vector<std::pair<Rational, Rational>>{{Rational(2), Rational(0)}, {Rational(1), Rational(0)}});
    CHECK(!char0.satisfied);
    CHECK(char0.pairs[0].first == Rational(1));
}

TEST_CASE("drinfeld polynomials of provenance-built modules") {
    RationalField Q;
    SUBCASE("single factors") {
        auto p20 = drinfeld_of_module(ev2(2, 0));
        CHECK(p20.size() == 1);
        CHECK(p20[0] == FactoredPoly<RationalField>(Q, {Rational(0), Rational(-1)})); // u(u+1)
        auto p10 = drinfeld_of_module(ev2(1, 0));
        CHECK(p10[0] == FactoredPoly<RationalField>(Q, {Rational(0)})); // u
        auto p00 = drinfeld_of_module(ev2(0, 0));
        CHECK(p00[0].is_one());
    }
    SUBCASE("products multiply the string polynomials") {
        auto t = tensor_module(ev2(1, 0), ev2(2, 0));
        auto p = drinfeld_of_module(t);
        auto expected = gl2_string_poly(Q, Rational(1), Rational(0)) * gl2_string_poly(Q, Rational(2), Rational(0));
        CHECK(p[0] == expected);
    }
    SUBCASE("modules without provenance are rejected") {
        auto ev = ev2(1, 0);
        ev.has_provenance = false;
        ev.factors.clear();
        CHECK_THROWS_AS(drinfeld_of_module(ev), Error);
    }
    SUBCASE("rank three produces one polynomial per ratio") {
        auto m = evaluation_module(build_irreducible_gln(Q, std::vector<long>{2, 1, 0}));
        auto p = drinfeld_of_module(m);
        REQUIRE(p.size() == 2);
        CHECK(p[0] == FactoredPoly<RationalField>(Q, {Rational(-1)})); // ratio (u+2)/(u+1)
        CHECK(p[1] == FactoredPoly<RationalField>(Q, {Rational(0)}));  // ratio (u+1)/u
    }
    SUBCASE("rank three in positive characteristic reduces the same data") {
        FiniteField f7(7);
        auto m = evaluation_module(weyl_module_modp(7, {2, 1, 0}));
        auto p = drinfeld_of_module(m);
        REQUIRE(p.size() == 2);
        CHECK(p[0] == FactoredPoly<FiniteField>(f7, {f7.from_integer(-1)}));
        CHECK(p[1] == FactoredPoly<FiniteField>(f7, {f7.from_integer(0)}));
    }
}

TEST_CASE("quantum determinant") {
    RationalField Q;
    SUBCASE("trivial module gives the scalar 1") {
        auto qd = qdet_action(ev2(0, 0), 4);
        CHECK(qd.central);
        REQUIRE(qd.scalar.has_value());
        CHECK(*qd.scalar == TruncSeries<RationalField>::one(Q, 4));
    }
    SUBCASE("tensor scalar is the product of factor scalars") {
        auto a = ev2(1, 0), b = ev2(2, 1);
        auto qa = qdet_action(a, 6), qb = qdet_action(b, 6);
        auto qt = qdet_action(tensor_module(a, b), 6);
        CHECK(qt.central);
        REQUIRE(qt.scalar.has_value());
        CHECK((*qa.scalar * *qb.scalar).agrees_with(*qt.scalar));
    }
    SUBCASE("central in positive characteristic") {
        FiniteField f5(5);
        auto l = evaluation_module(gl2_irreducible_modp(f5, f5.from_integer(3), f5.from_integer(1)));
        auto qd = qdet_action(l, 5);
        CHECK(qd.central);
        REQUIRE(qd.scalar.has_value());
        // eigenvalue lambda_1(u) lambda_2(u-1)
        TruncSeries<FiniteField> l1 = TruncSeries<FiniteField>::one(f5, 5), l2 = l1;
        l1.set_coeff(1, f5.from_integer(3));
        l2.set_coeff(1, f5.from_integer(1));
        CHECK((l1 * series_shift_expand(l2, f5.one())).agrees_with(*qd.scalar));
    }
}

TEST_CASE("automorphism composition intertwines with the shifted action") {
    RationalField Q;
    for (Rational z : {Rational(1), Rational(1, 2), Rational(-2)}) {
        auto ev = ev2(2, 1);
        auto shifted = apply_shift(ev, z, 8);
        TruncSeries<RationalField> f = TruncSeries<RationalField>::one(Q, 8);
        f.set_coeff(1, -z);
        auto lhs = apply_twist(shifted, f);

        auto mod = build_irreducible_gln(Q, std::vector<long>{2, 1});
        for (int i = 0; i < 2; ++i)
            mod.e_mat(i, i) = mod.e_mat(i, i) - Matrix<RationalField>::identity(Q, mod.dim).scaled(z);
        mod.highest = {Rational(2) - z, Rational(1) - z};
        auto rhs = evaluation_module(mod);

        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int m = 1; m <= lhs.trunc; ++m) CHECK(lhs.t_coeff(i, j, m) == rhs.t_coeff(i, j, m));
        CHECK(verify_rtt(lhs));
    }
}

TEST_CASE("automorphism intertwining in positive characteristic") {
    FiniteField f7(7);
    auto z = f7.from_integer(4);
    auto ev = evaluation_module(gl2_irreducible_modp(f7, f7.from_integer(3), f7.from_integer(1)));
    auto shifted = apply_shift(ev, z, 6);
    TruncSeries<FiniteField> f = TruncSeries<FiniteField>::one(f7, 6);
    f.set_coeff(1, -z);
    auto lhs = apply_twist(shifted, f);

    auto mod = gl2_irreducible_modp(f7, f7.from_integer(3), f7.from_integer(1));
    for (int i = 0; i < 2; ++i)
        mod.e_mat(i, i) = mod.e_mat(i, i) - Matrix<FiniteField>::identity(f7, mod.dim).scaled(z);
    mod.highest = {f7.from_integer(3) - z, f7.from_integer(1) - z};
    auto rhs = evaluation_module(mod);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int m = 1; m <= lhs.trunc; ++m) CHECK(lhs.t_coeff(i, j, m) == rhs.t_coeff(i, j, m));
    CHECK(verify_rtt(lhs));
}

TEST_CASE("q_p multiples leave the weight ratio unchanged") {
    for (long p : {3L, 5L, 7L}) {
        FiniteField field(p);
        Rng rng(500 + p);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<FFElem> roots;
            for (long i = 0, n = rng.range(0, 4); i < n; ++i)
                roots.push_back(field.from_integer(rng.range(0, p - 1)));
            FactoredPoly<FiniteField> P(field, roots);
            // Q = P * q_p(u + c)
            std::vector<FFElem> extra;
            auto c = field.from_integer(rng.range(0, p - 1));
            for (long j = 0; j < p; ++j) extra.push_back(field.from_integer(j) - c);
            auto Qp = P * FactoredPoly<FiniteField>(field, extra);
            CHECK(P.shifted_arg(field.one()) * Qp == Qp.shifted_arg(field.one()) * P);
            CHECK(qp_normalize(field, Qp) == qp_normalize(field, P));
        }
    }
}
