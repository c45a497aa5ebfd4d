#include "doctest.h"

#include "repglt/walled_brauer.hpp"
#include "repglt/gln_oracle.hpp"

using namespace repglt;

TEST_CASE("gram matrices and determinants at small rank") {
    CHECK(gram_determinant(0, 0) == UniPolyT(1));
    CHECK(gram_determinant(1, 0) == UniPolyT::variable());

    auto g = gram_matrix(1, 1);
    REQUIRE(g.basis.size() == 2);
    UniPolyT t = UniPolyT::variable(), t2 = UniPolyT::monomial(2, Rational(1));
    // trace form [[t^2, t], [t, t^2]], up to basis order
    CHECK(g.entries[0][0] == t2);
    CHECK(g.entries[1][1] == t2);
    CHECK(g.entries[0][1] == t);
    CHECK(g.entries[1][0] == t);
    CHECK(gram_determinant(1, 1) == UniPolyT({Rational(0), Rational(0), Rational(-1), Rational(0), Rational(1)}));

    CHECK_THROWS_AS(gram_determinant(3, 2), Error); // 120 > default bound
}

TEST_CASE("gram determinant roots are integers through three points") {
    for (int r = 0; r <= 3; ++r)
        for (int s = 0; r + s <= 3; ++s) {
            auto roots = integer_roots(gram_determinant(r, s));
            REQUIRE_MESSAGE(roots.has_value(), "witness inconclusive at (", r, ",", s, ")");
        }
}

TEST_CASE("symmetric group dimensions by hooks") {
    CHECK(symmetric_group_dim({1}) == 1);
    CHECK(symmetric_group_dim({2, 1}) == 2);
    CHECK(symmetric_group_dim({3, 2}) == 5);
    CHECK(symmetric_group_dim({2, 2, 1}) == 5);
}

TEST_CASE("young symmetrizer dimension polynomials") {
    UniPolyT t = UniPolyT::variable();
    CHECK(young_symmetrizer_dimension({1}) == t);
    CHECK(young_symmetrizer_dimension({2}) == UniPolyT({Rational(0), Rational(1, 2), Rational(1, 2)}));
    CHECK(young_symmetrizer_dimension({1, 1}) == UniPolyT({Rational(0), Rational(-1, 2), Rational(1, 2)}));
    CHECK_THROWS_AS(young_symmetrizer_dimension({3, 2, 1}), Error); // size 6 > bound
}

TEST_CASE("young symmetrizers are quasi-idempotent") {
    for (const auto& lam : std::vector<std::vector<long>>{{1}, {2}, {1, 1}, {3}, {2, 1}, {2, 2}, {3, 1}, {2, 1, 1}}) {
        long n = 0;
        for (long x : lam) n += x;
        mpz_class fact(1);
        for (long i = 2; i <= n; ++i) fact *= i;
        Rational h(fact, symmetric_group_dim(lam));
        auto c = young_symmetrizer(lam);
        CHECK(compose(c, c) == c.scaled(UniPolyT(h)));
    }
}

TEST_CASE("interpolated dimension polynomials") {
    CHECK(dimension_poly_interpolated(Bipartition({1}, {})) == UniPolyT::variable());
    CHECK(dimension_poly_interpolated(Bipartition({1}, {1})) ==
          UniPolyT({Rational(-1), Rational(0), Rational(1)}));
    CHECK(dimension_poly_interpolated(Bipartition({2}, {})) ==
          UniPolyT({Rational(0), Rational(1, 2), Rational(1, 2)}));
}

TEST_CASE("both dimension computations agree and extrapolate") {
    for (const auto& lam : std::vector<std::vector<long>>{{1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}, {4}, {2, 2}}) {
        Bipartition bp(lam, {});
        UniPolyT interp = dimension_poly_interpolated(bp);
        CHECK(interp == young_symmetrizer_dimension(lam));
        // out-of-sample agreement with the finite-rank oracle
        long n0 = bp.size() + bp.length() + 1;
        for (long n = n0 + bp.size() + 1; n <= n0 + bp.size() + 3; ++n) {
            auto w = restrict_bipartition(bp, static_cast<int>(n));
            CHECK(interp.eval(Rational(n)) == Rational(weyl_dim(w)));
        }
    }
    // mixed bipartition: interpolation only, still matches the oracle out of sample
    Bipartition mixed({2, 1}, {1});
    UniPolyT interp = dimension_poly_interpolated(mixed);
    long n0 = mixed.size() + mixed.length() + 1;
    for (long n = n0 + mixed.size() + 1; n <= n0 + mixed.size() + 3; ++n)
        CHECK(interp.eval(Rational(n)) == Rational(weyl_dim(restrict_bipartition(mixed, static_cast<int>(n)))));
}
