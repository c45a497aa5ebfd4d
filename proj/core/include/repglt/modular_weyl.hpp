#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "repglt/finite_field.hpp"
#include "repglt/gln_module.hpp"
#include "repglt/gln_oracle.hpp"

namespace repglt {

// L(α, β, p): irreducible gl_2 highest-weight module over F_{p^m} with basis
// f^k v for k = 0..l; l is found as the first singular position, which the
// dimension-rule tests compare against p − 1 resp. [α − β].
inline GlnModule<FiniteField> gl2_irreducible_modp(const FiniteField& field, const FFElem& alpha,
                                                   const FFElem& beta) {
    require(field.characteristic() % 2 == 1, "argument", "odd characteristic required");
    return gl2_highest_weight_module(field, alpha, beta, field.characteristic());
}

// Weyl module V(λ, p) for sl_n/gl_n at n in {2,3}: the char-p Verma quotient
// truncated to the characteristic-0 weight set; leaks surface as
// "truncation-exceeded".
inline GlnModule<FiniteField> weyl_module_modp(long p, const std::vector<long>& lambda,
                                               long dim_bound = 64) {
    require(p % 2 == 1, "argument", "odd characteristic required");
    FiniteField field(p, 1);
    return build_weyl_module(field, lambda, dim_bound);
}

// Some Weyl group element w with w(λ+ρ) ≡ μ+ρ coordinatewise mod p,
// ρ = (n−1, ..., 1, 0).
bool linkage_condition(const std::vector<long>& lambda, const std::vector<long>& mu, long p);

// One scan cell per (λ, p).
struct ScanCell {
    std::vector<long> lambda;
    long p = 0;
    bool bound_satisfied = false;          // p > λ_1 − λ_n + n
    std::string outcome;                   // "ok" or "truncation-exceeded"
    bool irreducible = false;              // meaningful when outcome == "ok"
    std::vector<std::vector<long>> singular_weights; // absolute weights
    bool linkage_holds = true;             // every non-highest singular weight linked to λ
};

struct ScanReport {
    int n = 0;
    std::vector<ScanCell> cells;
    // violations of the sufficiency bound (irreducibility must hold above it)
    std::vector<std::size_t> bound_violations;
    std::vector<std::size_t> reducible_below_bound;
};

// Exhaustive (λ, p) scan for λ_1 − λ_n ≤ max_gap (λ normalized to λ_n = 0).
// Above the bound p > λ_1 − λ_n + n irreducibility is asserted via
// bound_violations; below it behavior is recorded only.
ScanReport bound_scan(int n, long max_gap, const std::vector<long>& primes, long dim_bound = 64);

std::string scan_report_csv(const ScanReport& report);

} // namespace repglt
