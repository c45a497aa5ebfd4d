#include "doctest.h"

#include "repglt/modular_weyl.hpp"
#include "repglt/rng.hpp"

using namespace repglt;

TEST_CASE("rank-two modular irreducibles and the dimension rule") {
    FiniteField f7(7);
    auto m = gl2_irreducible_modp(f7, f7.from_integer(3), f7.from_integer(0));
    CHECK(m.dim == 4);
    CHECK(m.check_commutation_relations());

    FiniteField f49(7, 2);
    auto ext = gl2_irreducible_modp(f49, f49.generator(), f49.zero()); // difference outside F_7
    CHECK(ext.dim == 7);
    CHECK(ext.check_commutation_relations());

    auto trivial = gl2_irreducible_modp(f7, f7.zero(), f7.zero());
    CHECK(trivial.dim == 1);
    CHECK(is_irreducible(trivial));

    CHECK_THROWS_AS(gl2_irreducible_modp(FiniteField(2), FiniteField(2).zero(), FiniteField(2).zero()), Error);
}

TEST_CASE("modular construction agrees with the generic Verma quotient") {
    // integral (α, β) with α − β = 3: same dimension and weights as V((3,0), 7)
    FiniteField f7(7);
    auto direct = gl2_irreducible_modp(f7, f7.from_integer(3), f7.from_integer(0));
    auto verma = weyl_module_modp(7, {3, 0});
    CHECK(direct.dim == verma.dim);
    CHECK(verma.check_commutation_relations());
    CHECK(is_irreducible(direct));
    CHECK(is_irreducible(verma));
}

TEST_CASE("weyl modules in characteristic p") {
    SUBCASE("irreducible above the bound") {
        auto m = weyl_module_modp(7, {3, 0});
        CHECK(m.dim == 4);
        CHECK(is_irreducible(m));
        auto rep = singular_vectors(m);
        CHECK(rep.total_dim() == 1);
    }
    SUBCASE("lambda = p is reducible with the predicted singular weights") {
        auto m = weyl_module_modp(5, {5, 0});
        CHECK(m.dim == 6);
        CHECK(!is_irreducible(m));
        // f^5 v is singular (coefficient 5(5-5+1) vanishes) and so is f v,
        // since e f v = λ v = 5 v ≡ 0; with the highest line that makes three
        auto rep = singular_vectors(m);
        REQUIRE(rep.total_dim() == 3);
        std::vector<std::vector<long>> weights;
        for (const auto& line : rep.lines)
            weights.push_back({5 + line.weight_offset[0], 0 + line.weight_offset[1]});
        CHECK(std::find(weights.begin(), weights.end(), std::vector<long>{0, 5}) != weights.end());
        CHECK(std::find(weights.begin(), weights.end(), std::vector<long>{4, 1}) != weights.end());
        for (const auto& w : weights) CHECK(linkage_condition({5, 0}, w, 5));
    }
    SUBCASE("rank three above the bound") {
        auto m = weyl_module_modp(7, {2, 1, 0});
        CHECK(m.dim == 8);
        CHECK(is_irreducible(m));
    }
    SUBCASE("even characteristic rejected") { CHECK_THROWS_AS(weyl_module_modp(2, {1, 0}), Error); }
}

TEST_CASE("linkage condition") {
    CHECK(linkage_condition({3, 0}, {3, 0}, 7));
    // reflection case: s(λ+ρ) = μ+ρ exactly, so any odd p works
    for (long p : {5L, 7L, 11L}) CHECK(linkage_condition({0, 0}, {-1, 1}, p));
    CHECK(!linkage_condition({1, 0}, {0, 0}, 7));
    // the singular weight of V((5,0), 5)
    CHECK(linkage_condition({5, 0}, {0, 5}, 5));
}

TEST_CASE("scan records reducibility below the bound and asserts it above") {
    auto rep = bound_scan(2, 6, {5, 7});
    CHECK(rep.bound_violations.empty());
    bool lambda_p = false;
    for (std::size_t i : rep.reducible_below_bound)
        if (rep.cells[i].lambda == std::vector<long>{5, 0} && rep.cells[i].p == 5) lambda_p = true;
    CHECK(lambda_p);
    for (const auto& cell : rep.cells) CHECK(cell.linkage_holds);

    auto csv = scan_report_csv(rep);
    CHECK(csv.find("lambda,p,") == 0);
    CHECK(csv.find("truncation-exceeded") == std::string::npos); // no leaks in this range
}

TEST_CASE("weight labels are consistent with the h-action") {
    auto m = weyl_module_modp(7, {2, 1, 0});
    FiniteField f7(7);
    for (int idx = 0; idx < m.dim; ++idx) {
        auto w = m.weight_int(idx);
        for (int a = 0; a < 3; ++a) {
            // E_aa acts diagonally by the weight on each weight vector
            std::vector<FFElem> basis(static_cast<std::size_t>(m.dim), f7.zero());
            basis[static_cast<std::size_t>(idx)] = f7.one();
            auto img = m.e_mat(a, a).apply(basis);
            for (int r = 0; r < m.dim; ++r) {
                auto want = r == idx ? f7.from_integer(w[static_cast<std::size_t>(a)]) : f7.zero();
                CHECK(img[static_cast<std::size_t>(r)] == want);
            }
        }
    }
}
