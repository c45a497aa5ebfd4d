#pragma once

#include <vector>

#include "repglt/diagram.hpp"
#include "repglt/gln_module.hpp"
#include "repglt/matrix.hpp"

namespace repglt {

// Concrete invariant tensor of a matching over GL_n: the linear map
// V^{⊗r} ⊗ V*^{⊗s} → V^{⊗p} ⊗ V*^{⊗q} whose Kronecker pattern equates the
// indices along each pair. Rows are indexed by destination multi-indices,
// columns by source multi-indices (both big-endian base n).
template <FieldLike F>
Matrix<F> matching_to_tensor(const F& field, const Matching& m, int n) {
    require(n >= 1, "argument", "rank must be positive");
    const int sp = m.src().total();
    const int dp = m.dst().total();
    double entries = 1;
    for (int i = 0; i < sp + dp; ++i) entries *= n;
    require(entries <= (1 << 22), "size", "tensor exceeds the memory bound");

    long rows = 1, cols = 1;
    for (int i = 0; i < dp; ++i) rows *= n;
    for (int i = 0; i < sp; ++i) cols *= n;

    Matrix<F> out(field, static_cast<int>(rows), static_cast<int>(cols));
    std::vector<int> digit(static_cast<std::size_t>(sp + dp), 0); // src points then dst points
    while (true) {
        bool ok = true;
        for (int x = 0; x < sp + dp && ok; ++x) {
            int y = m.partner(x);
            if (y > x) ok = digit[static_cast<std::size_t>(x)] == digit[static_cast<std::size_t>(y)];
        }
        if (ok) {
            long r = 0, c = 0;
            for (int i = 0; i < dp; ++i) r = r * n + digit[static_cast<std::size_t>(sp + i)];
            for (int i = 0; i < sp; ++i) c = c * n + digit[static_cast<std::size_t>(i)];
            out.at(static_cast<int>(r), static_cast<int>(c)) = field.one();
        }
        int i = 0;
        for (; i < sp + dp; ++i) {
            if (++digit[static_cast<std::size_t>(i)] < n) break;
            digit[static_cast<std::size_t>(i)] = 0;
        }
        if (i == sp + dp) break;
    }
    return out;
}

// dim Hom_{GL_n} as the rank of the span of the matchings' tensors.
template <FieldLike F>
int hom_dim_gln(const F& field, int n, const ObjectWord& src, const ObjectWord& dst) {
    auto matchings = enumerate_matchings(src, dst);
    if (matchings.empty()) return 0;
    long width = 1;
    for (int i = 0; i < src.total() + dst.total(); ++i) width *= n;
    RowSpan<F> span(field, static_cast<int>(width));
    for (const auto& m : matchings) {
        Matrix<F> t = matching_to_tensor(field, m, n);
        std::vector<typename F::Elem> flat;
        flat.reserve(static_cast<std::size_t>(width));
        for (int r = 0; r < t.rows(); ++r)
            for (int c = 0; c < t.cols(); ++c) flat.push_back(t.at(r, c));
        span.add(std::move(flat));
    }
    return span.dim();
}

inline int hom_dim_gln(int n, const ObjectWord& src, const ObjectWord& dst) {
    return hom_dim_gln(RationalField{}, n, src, dst);
}

// Characteristic-0 irreducible with explicit generator matrices; the Verma
// quotient is exact here, so any truncation leak is an internal failure.
template <FieldLike F>
GlnModule<F> build_irreducible_gln(const F& field, const std::vector<long>& lambda, long dim_bound = 64) {
    require(field.characteristic() == 0, "argument",
            "irreducible construction expects characteristic 0; use the modular builder otherwise");
    GlnModule<F> mod = build_weyl_module(field, lambda, dim_bound);
    require(mpz_class(mod.dim) == weyl_dim(lambda), "construction",
            "dimension disagrees with the Weyl formula");
    return mod;
}

} // namespace repglt
