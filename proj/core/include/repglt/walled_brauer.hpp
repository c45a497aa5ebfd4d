#pragma once

#include <vector>

#include "repglt/bipartition.hpp"
#include "repglt/diagram.hpp"
#include "repglt/polynomial.hpp"

namespace repglt {

// Trace form of the endomorphism algebra B_{r,s}(t) on its matching basis:
// entry (i,j) = closure_trace(b_i ∘ b_j).
struct GramData {
    std::vector<Matching> basis;
    std::vector<std::vector<UniPolyT>> entries;
};

GramData gram_matrix(int r, int s, long bound = 24);
UniPolyT gram_determinant(int r, int s, long bound = 24);

// Fraction-free determinant of a polynomial matrix (used by the gram form).
UniPolyT poly_matrix_det(std::vector<std::vector<UniPolyT>> m);

// Unnormalized Young symmetrizer of the canonical (row-filled) tableau, as
// an element of B_{|λ|,0}(t).
DiagramLC young_symmetrizer(const std::vector<long>& lambda, long bound = 5);

// Dimension of the S_n-irreducible of shape λ, by hook lengths.
mpz_class symmetric_group_dim(const std::vector<long>& lambda);

// closure_trace(c_λ) / h_λ with h_λ = |λ|! / dim(S-irreducible): the
// categorical dimension polynomial of the object labeled (λ, ∅).
UniPolyT young_symmetrizer_dimension(const std::vector<long>& lambda, long bound = 5);

// Lagrange interpolation of the finite-rank Weyl dimensions n ↦ dim V(λ|_n)
// sampled at n = n_0, ..., n_0 + |λ| with n_0 = |λ| + l(λ) + 1.
UniPolyT dimension_poly_interpolated(const Bipartition& lambda, long bound = 5);

} // namespace repglt
