#include "doctest.h"

#include "repglt/factored_poly.hpp"
#include "repglt/field.hpp"
#include "repglt/polynomial.hpp"
#include "repglt/rng.hpp"
#include "repglt/series.hpp"

using namespace repglt;

TEST_CASE("rationals stay reduced with positive denominators") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational::parse("-8/6") == Rational(-4, 3));
    CHECK(Rational(3, 1).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), Error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("bracket lift on prime subfield elements") {
    FiniteField f7(7), f5(5);
    CHECK(bracket_lift(f7.from_integer(3)) == 3);
    CHECK(bracket_lift(f7.from_integer(-1)) == 6);
    CHECK(bracket_lift(f5.from_integer(0)) == 0);

    FiniteField f49(7, 2);
    CHECK_THROWS_AS(bracket_lift(f49.generator()), Error);
    CHECK(bracket_lift(f49.from_integer(4)) == 4); // prime-subfield element of the extension

    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
        FiniteField f(p);
        for (long x = 0; x < p; ++x) {
            long lift = bracket_lift(f.from_integer(x));
            CHECK(lift == x);
            CHECK(f.from_integer(lift) == f.from_integer(x));
        }
    }
}

TEST_CASE("field axioms hold exactly on random inputs") {
    Rng rng(2024);
    RationalField Q;
    FiniteField f7(7), f9(3, 2), f121(11, 2);

    auto run = [&](auto field) {
        using F = decltype(field);
        auto rand_elem = [&]() -> typename F::Elem {
            if constexpr (std::is_same_v<F, RationalField>)
                return Rational(rng.range(-20, 20), rng.range(1, 9));
            else {
                std::vector<long> coords;
                for (int i = 0; i < field.degree(); ++i) coords.push_back(rng.range(0, field.characteristic() - 1));
                return field.element(coords);
            }
        };
        for (int trial = 0; trial < 200; ++trial) {
            auto a = rand_elem(), b = rand_elem(), c = rand_elem();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + field.zero() == a);
            CHECK(a * field.one() == a);
            CHECK(a - a == field.zero());
            if (!field.is_zero(a)) CHECK(a * field.inverse(a) == field.one());
        }
    };
    run(Q);
    run(f7);
    run(f9);
    run(f121);
}

TEST_CASE("finite field modulus is the least irreducible in counting order") {
    // x^2 + 1 is reducible mod 5 (2^2 = -1) and the scan settles on x^2 + 2
    FiniteField f25(5, 2);
    auto x = f25.generator();
    CHECK(x * x == f25.from_integer(-2));
    // -1 is a non-residue mod 7, so x^2 + 1 is the modulus there
    FiniteField f49(7, 2);
    auto y = f49.generator();
    CHECK(y * y == f49.from_integer(-1));
}

TEST_CASE("lagrange interpolation reproduces stated polynomials") {
    auto p = lagrange_interpolate({{Rational(2), Rational(3)}, {Rational(3), Rational(6)}, {Rational(4), Rational(10)}});
    // t(t+1)/2, cross-checked by evaluating back at the nodes
    CHECK(p == UniPolyT({Rational(0), Rational(1, 2), Rational(1, 2)}));
    for (long n : {2L, 3L, 4L}) CHECK(p.eval(Rational(n)) == Rational(n * (n + 1) / 2));

    CHECK(lagrange_interpolate({{Rational(0), Rational(5)}}) == UniPolyT(Rational(5)));
    auto sq = lagrange_interpolate({{Rational(1), Rational(1)}, {Rational(2), Rational(4)}, {Rational(3), Rational(9)}});
    CHECK(sq == UniPolyT({Rational(0), Rational(0), Rational(1)}));
    CHECK_THROWS_AS(lagrange_interpolate({{Rational(1), Rational(1)}, {Rational(1), Rational(2)}}), Error);
}

TEST_CASE("series shift re-expands correctly") {
    RationalField Q;
    TruncSeries<RationalField> s(Q, 3);
    s.set_coeff(1, Rational(1)); // u^{-1}

    SUBCASE("zero shift is the identity") {
        auto sh = series_shift_expand(s, Rational(0));
        CHECK(sh == s);
    }
    SUBCASE("shift by 1 gives the geometric expansion of 1/(u-1)") {
        auto sh = series_shift_expand(s, Rational(1));
        // independent check: sh * (1 - u^{-1}) recovers u^{-1}
        TruncSeries<RationalField> one_minus = TruncSeries<RationalField>::one(Q, 3);
        one_minus.set_coeff(1, Rational(-1));
        CHECK(sh * one_minus == s);
        for (int k = 1; k <= 3; ++k) CHECK(sh.coeff(k) == Rational(1));
        CHECK(sh.coeff(0) == Rational(0));
    }
    SUBCASE("constants are shift-invariant") {
        auto c = TruncSeries<RationalField>::constant(Q, Rational(5), 4);
        CHECK(series_shift_expand(c, Rational(17)) == c);
    }
    SUBCASE("shifting back inverts, up to truncation") {
        Rng rng(7);
        FiniteField f7(7);
        for (int trial = 0; trial < 50; ++trial) {
            TruncSeries<RationalField> r(Q, 6);
            for (int k = 0; k <= 6; ++k) r.set_coeff(k, Rational(rng.range(-5, 5), rng.range(1, 3)));
            Rational z(rng.range(-4, 4), rng.range(1, 2));
            CHECK(series_shift_expand(series_shift_expand(r, z), -z) == r);

            TruncSeries<FiniteField> rp(f7, 6);
            for (int k = 0; k <= 6; ++k) rp.set_coeff(k, f7.from_integer(rng.range(0, 6)));
            auto zp = f7.from_integer(rng.range(0, 6));
            CHECK(series_shift_expand(series_shift_expand(rp, zp), -zp) == rp);
        }
    }
}

TEST_CASE("series inversion needs constant term 1") {
    RationalField Q;
    TruncSeries<RationalField> s = TruncSeries<RationalField>::one(Q, 5);
    s.set_coeff(1, Rational(3));
    s.set_coeff(2, Rational(-2));
    CHECK(s * s.inverse() == TruncSeries<RationalField>::one(Q, 5));
    TruncSeries<RationalField> bad = TruncSeries<RationalField>::constant(Q, Rational(2), 5);
    CHECK_THROWS_AS(bad.inverse(), Error);
}

TEST_CASE("factored polynomials expand and re-extract over finite fields") {
    Rng rng(42);
    FiniteField f9(3, 2);
    auto elems = f9.all_elements();
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<FFElem> roots;
        long deg = rng.range(0, 5);
        for (long i = 0; i < deg; ++i) roots.push_back(elems[static_cast<std::size_t>(rng.range(0, 8))]);
        FactoredPoly<FiniteField> p(f9, roots);
        auto coeffs = p.expand();
        CHECK(static_cast<long>(coeffs.size()) == deg + 1);
        CHECK(coeffs.back() == f9.one());

        // brute-force scan of the field, dividing out each root found
        std::vector<FFElem> recovered;
        auto work = coeffs;
        bool progress = true;
        while (static_cast<long>(work.size()) > 1 && progress) {
            progress = false;
            for (const auto& cand : elems) {
                auto val = f9.zero();
                for (std::size_t i = work.size(); i-- > 0;) val = val * cand + work[i];
                if (!f9.is_zero(val)) continue;
                // synthetic division by (x - cand)
                std::vector<FFElem> q(work.size() - 1, f9.zero());
                auto carry = f9.zero();
                for (std::size_t i = work.size(); i-- > 1;) {
                    q[i - 1] = work[i] + carry;
                    carry = q[i - 1] * cand;
                }
                work = q;
                recovered.push_back(cand);
                progress = true;
                break;
            }
        }
        CHECK(FactoredPoly<FiniteField>(f9, recovered) == p);
    }
}

TEST_CASE("polynomial pretty printing and integer roots") {
    UniPolyT p({Rational(0), Rational(0), Rational(-1), Rational(0), Rational(1)}); // t^4 - t^2
    auto roots = integer_roots(p);
    REQUIRE(roots.has_value());
    CHECK(roots->size() == 4);
    CHECK(*factored_str(p) == "(t + 1)*t^2*(t - 1)");
    CHECK(!integer_roots(UniPolyT({Rational(1), Rational(0), Rational(1)})).has_value()); // t^2 + 1
    CHECK(p.str() == "t^4 - t^2");
}
