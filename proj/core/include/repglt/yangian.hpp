#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "repglt/drinfeld.hpp"
#include "repglt/gln_module.hpp"
#include "repglt/matrix.hpp"
#include "repglt/series.hpp"

namespace repglt {

// Explicit module over the rank-n RTT Yangian: dense matrices for the
// generators t_ij^{(m)}, 1 ≤ m ≤ trunc. `exact` means t_ij(u) is genuinely
// polynomial of degree ≤ trunc in u^{-1} (all higher coefficients vanish);
// otherwise coefficients beyond trunc are unknown and consumers clamp to it.
template <FieldLike F>
struct YangianModule {
    using Elem = typename F::Elem;

    F field;
    int n = 0;
    int dim = 0;
    int trunc = 0;
    bool exact = true;

    std::vector<Matrix<F>> coeffs; // (i*n + j)*trunc + (m-1)

    // provenance: evaluation factors (effective highest weight and shift)
    // and the accumulated twist series; empty when the module was edited by
    // hand (negative controls) or loaded without provenance.
    struct Factor {
        std::vector<Elem> hw;
        Elem shift;
    };
    std::vector<Factor> factors;
    bool has_provenance = false;
    std::optional<TruncSeries<F>> twist;

    YangianModule(F f, int rank, int dimension, int truncation, bool is_exact)
        : field(f), n(rank), dim(dimension), trunc(truncation), exact(is_exact),
          coeffs(static_cast<std::size_t>(rank) * rank * truncation, Matrix<F>(f, dimension, dimension)) {}

    Matrix<F>& t(int i, int j, int m) {
        return coeffs[static_cast<std::size_t>((i * n + j) * trunc + (m - 1))];
    }
    const Matrix<F>& t(int i, int j, int m) const {
        return coeffs[static_cast<std::size_t>((i * n + j) * trunc + (m - 1))];
    }

    // coefficient of u^{-m} in t_ij(u), with the m = 0 constant included
    Matrix<F> t_coeff(int i, int j, int m) const {
        if (m == 0) {
            Matrix<F> c(field, dim, dim);
            if (i == j) c = Matrix<F>::identity(field, dim);
            return c;
        }
        if (m > trunc) {
            require(exact, "truncation-exceeded", "coefficient beyond the recorded truncation");
            return Matrix<F>(field, dim, dim);
        }
        return t(i, j, m);
    }

    int avail() const { return exact ? 1 << 20 : trunc; }
};

// t_ij(u) = δ_ij + E_ij u^{-1} on an explicit gl_n module.
template <FieldLike F>
YangianModule<F> evaluation_module(const GlnModule<F>& mod) {
    YangianModule<F> out(mod.field, mod.n, mod.dim, 1, true);
    for (int i = 0; i < mod.n; ++i)
        for (int j = 0; j < mod.n; ++j) out.t(i, j, 1) = mod.e_mat(i, j);
    out.factors.push_back({mod.highest, mod.field.zero()});
    out.has_provenance = true;
    return out;
}

// τ_z: T(u) ↦ T(u − z), re-expanded; the result is a truncated series module.
template <FieldLike F>
YangianModule<F> apply_shift(const YangianModule<F>& m, const typename F::Elem& z, int out_trunc) {
    const F& field = m.field;
    out_trunc = std::min(out_trunc, m.avail());
    require(out_trunc >= 1, "argument", "shift needs a positive truncation order");

    bool zero_shift = field.is_zero(z);
    YangianModule<F> out(field, m.n, m.dim, out_trunc, zero_shift && m.exact && out_trunc >= m.trunc);
    std::vector<typename F::Elem> zpow(static_cast<std::size_t>(out_trunc) + 1, field.one());
    for (int j = 1; j <= out_trunc; ++j) zpow[static_cast<std::size_t>(j)] = zpow[static_cast<std::size_t>(j - 1)] * z;

    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            for (int mm = 1; mm <= out_trunc; ++mm) {
                Matrix<F> acc(field, m.dim, m.dim);
                int kmax = m.exact ? std::min(mm, m.trunc) : mm;
                for (int k = 1; k <= kmax; ++k) {
                    auto b = field.from_rational(binomial(mm - 1, mm - k));
                    if (field.is_zero(b)) continue;
                    acc = acc + m.t_coeff(i, j, k).scaled(b * zpow[static_cast<std::size_t>(mm - k)]);
                }
                out.t(i, j, mm) = acc;
            }

    out.factors = m.factors;
    for (auto& f : out.factors) f.shift = f.shift + z;
    out.has_provenance = m.has_provenance;
    if (m.twist) out.twist = m.twist->truncated(out_trunc);
    return out;
}

// R_f: T(u) ↦ f(u)T(u); f must have constant term 1. When f is genuinely a
// polynomial in u^{-1} of degree poly_degree and the module is exact, the
// result stays exact at trunc + poly_degree.
template <FieldLike F>
YangianModule<F> apply_twist(const YangianModule<F>& m, const TruncSeries<F>& f, int poly_degree = -1) {
    const F& field = m.field;
    require(f.coeff(0) == field.one(), "argument", "twist series must have constant term 1");

    bool keep_exact = m.exact && poly_degree >= 0;
    int out_trunc = keep_exact ? m.trunc + poly_degree : std::min(m.avail(), f.order());
    require(out_trunc >= 1, "argument", "twist needs a positive truncation order");

    YangianModule<F> out(field, m.n, m.dim, out_trunc, keep_exact);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            for (int mm = 1; mm <= out_trunc; ++mm) {
                Matrix<F> acc(field, m.dim, m.dim);
                for (int a = 0; a <= mm; ++a) {
                    if (a > f.order()) break;
                    if (field.is_zero(f.coeff(a))) continue;
                    int k = mm - a;
                    if (m.exact && k > m.trunc) continue;
                    acc = acc + m.t_coeff(i, j, k).scaled(f.coeff(a));
                }
                out.t(i, j, mm) = acc;
            }

    out.factors = m.factors;
    out.has_provenance = m.has_provenance;
    auto base = m.twist ? m.twist->truncated(out_trunc) : TruncSeries<F>::one(field, out_trunc);
    out.twist = base * f.truncated(out_trunc);
    return out;
}

// Δ(t_ij(u)) = Σ_k t_ik(u) ⊗ t_kj(u).
template <FieldLike F>
YangianModule<F> tensor_module(const YangianModule<F>& a, const YangianModule<F>& b) {
    require(a.n == b.n, "argument", "tensor factors have different rank");
    require(a.field == b.field, "argument", "tensor factors over different fields");
    const F& field = a.field;

    bool exact = a.exact && b.exact;
    int trunc = exact ? a.trunc + b.trunc : std::min(a.avail(), b.avail());
    YangianModule<F> out(field, a.n, a.dim * b.dim, trunc, exact);

    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j)
            for (int m = 1; m <= trunc; ++m) {
                Matrix<F> acc(field, out.dim, out.dim);
                for (int k = 0; k < a.n; ++k)
                    for (int x = 0; x <= m; ++x) {
                        if (a.exact && x > a.trunc) continue;
                        if (b.exact && m - x > b.trunc) continue;
                        acc = acc + Matrix<F>::kronecker(a.t_coeff(i, k, x), b.t_coeff(k, j, m - x));
                    }
                out.t(i, j, m) = acc;
            }

    out.factors = a.factors;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    out.has_provenance = a.has_provenance && b.has_provenance;
    if (a.twist || b.twist) {
        auto ta = a.twist ? a.twist->truncated(trunc) : TruncSeries<F>::one(field, trunc);
        auto tb = b.twist ? b.twist->truncated(trunc) : TruncSeries<F>::one(field, trunc);
        out.twist = ta * tb;
    }
    return out;
}

// Coefficientwise check of the defining relation on the double auxiliary
// space. The auxiliary block convention block(i,j) = t_ji makes the relation
// hold with R(u) = 1 + σ/u for the evaluation convention t_ij ↦ δ + E_ij/u;
// writing C_{ab}(i,k,j,l) = [blk(i,j,a), blk(k,l,b)], the relation reads
// C_{x+1,y} − C_{x,y+1} = blk(k,j,y)·blk(i,l,x) − blk(k,j,x)·blk(i,l,y).
template <FieldLike F>
bool verify_rtt(const YangianModule<F>& m) {
    const int limit = m.exact ? m.trunc + 1 : m.trunc - 1;
    auto blk = [&](int i, int j, int a) { return m.t_coeff(j, i, a); };
    for (int x = 0; x <= limit; ++x)
        for (int y = 0; y <= limit; ++y)
            for (int i = 0; i < m.n; ++i)
                for (int k = 0; k < m.n; ++k)
                    for (int j = 0; j < m.n; ++j)
                        for (int l = 0; l < m.n; ++l) {
                            auto comm = [&](int a, int b) {
                                Matrix<F> p = blk(i, j, a), q = blk(k, l, b);
                                return p * q - q * p;
                            };
                            Matrix<F> lhs = comm(x + 1, y) - comm(x, y + 1);
                            Matrix<F> rhs = blk(k, j, y) * blk(i, l, x) - blk(k, j, x) * blk(i, l, y);
                            if (!(lhs == rhs)) return false;
                        }
    return true;
}

// Basis (as rows) of the joint kernel of all raising coefficients t_ij^{(m)},
// i < j.
template <FieldLike F>
Matrix<F> singular_space(const YangianModule<F>& m) {
    int blocks = m.n * (m.n - 1) / 2 * m.trunc;
    Matrix<F> stacked(m.field, std::max(1, blocks * m.dim), m.dim);
    int row = 0;
    for (int i = 0; i < m.n; ++i)
        for (int j = i + 1; j < m.n; ++j)
            for (int mm = 1; mm <= m.trunc; ++mm) {
                for (int r = 0; r < m.dim; ++r)
                    for (int c = 0; c < m.dim; ++c) stacked.at(row + r, c) = m.t(i, j, mm).at(r, c);
                row += m.dim;
            }
    return stacked.kernel();
}

template <FieldLike F>
struct SingularWeight {
    Matrix<F> basis;                                  // rows span the singular space
    std::optional<std::vector<TruncSeries<F>>> weight; // eigen-series when the space is a line
};

template <FieldLike F>
SingularWeight<F> singular_and_weight(const YangianModule<F>& m) {
    const F& field = m.field;
    SingularWeight<F> out{singular_space(m), std::nullopt};
    if (out.basis.rows() != 1) return out;

    std::vector<typename F::Elem> w(static_cast<std::size_t>(m.dim), field.zero());
    for (int c = 0; c < m.dim; ++c) w[static_cast<std::size_t>(c)] = out.basis.at(0, c);
    int lead = 0;
    while (field.is_zero(w[static_cast<std::size_t>(lead)])) ++lead;

    std::vector<TruncSeries<F>> weight;
    for (int i = 0; i < m.n; ++i) {
        TruncSeries<F> s = TruncSeries<F>::one(field, m.trunc);
        for (int mm = 1; mm <= m.trunc; ++mm) {
            auto img = m.t(i, i, mm).apply(w);
            auto c = img[static_cast<std::size_t>(lead)] / w[static_cast<std::size_t>(lead)];
            for (std::size_t r = 0; r < img.size(); ++r)
                if (!(img[r] == c * w[r])) return out; // not an eigenvector: no weight
            s.set_coeff(mm, c);
        }
        weight.push_back(std::move(s));
    }
    out.weight = std::move(weight);
    return out;
}

// Irreducible = one-dimensional singular space that generates everything
// under the full coefficient action.
template <FieldLike F>
bool is_irreducible(const YangianModule<F>& m) {
    Matrix<F> basis = singular_space(m);
    if (basis.rows() != 1) return false;
    RowSpan<F> span(m.field, m.dim);
    std::vector<typename F::Elem> seed(static_cast<std::size_t>(m.dim), m.field.zero());
    for (int c = 0; c < m.dim; ++c) seed[static_cast<std::size_t>(c)] = basis.at(0, c);
    std::vector<std::vector<typename F::Elem>> frontier{seed};
    span.add(std::move(seed));
    while (!frontier.empty() && span.dim() < m.dim) {
        std::vector<std::vector<typename F::Elem>> next;
        for (const auto& v : frontier)
            for (const auto& mat : m.coeffs) {
                auto img = mat.apply(v);
                if (span.add(img)) next.push_back(std::move(img));
            }
        frontier = std::move(next);
    }
    return span.dim() == m.dim;
}

// Re-numeration of evaluation parameters: repeatedly promote the pair
// (α_j, β_k) with minimal bracket [α_j − β_k] among the remaining ones (the
// re-pairing may mix indices); `satisfied` reports whether the input order
// already meets the minimality condition. Characteristic 0 brackets are
// nonnegative integer differences.
template <FieldLike F>
struct Renumeration {
    std::vector<std::pair<typename F::Elem, typename F::Elem>> pairs;
    bool satisfied = false;
};

template <FieldLike F>
Renumeration<F> renumeration_criterion(const F& field,
                                       std::vector<std::pair<typename F::Elem, typename F::Elem>> pairs) {
    auto bracket = [&](const typename F::Elem& alpha, const typename F::Elem& beta, long& out) {
        if (!field.subfield_gap(beta, alpha, out)) return false;
        return field.characteristic() > 0 || out >= 0;
    };

    // does the given order satisfy the minimality condition?
    bool ok = true;
    for (std::size_t i = 0; i < pairs.size() && ok; ++i) {
        long own = 0;
        bool own_def = bracket(pairs[i].first, pairs[i].second, own);
        bool any_def = false;
        long best = 0;
        for (std::size_t j = i; j < pairs.size(); ++j)
            for (std::size_t k = i; k < pairs.size(); ++k) {
                long g;
                if (!bracket(pairs[j].first, pairs[k].second, g)) continue;
                if (!any_def || g < best) best = g;
                any_def = true;
            }
        if (own_def)
            ok = any_def && own == best;
        else
            ok = !any_def;
    }

    Renumeration<F> out;
    out.satisfied = ok;
    std::vector<typename F::Elem> alphas, betas;
    for (const auto& [a, b] : pairs) {
        alphas.push_back(a);
        betas.push_back(b);
    }
    while (!alphas.empty()) {
        std::size_t bj = alphas.size(), bk = 0;
        long best = 0;
        for (std::size_t j = 0; j < alphas.size(); ++j)
            for (std::size_t k = 0; k < betas.size(); ++k) {
                long g;
                if (!bracket(alphas[j], betas[k], g)) continue;
                if (bj == alphas.size() || g < best) {
                    best = g;
                    bj = j;
                    bk = k;
                }
            }
        if (bj == alphas.size()) {
            // no defined bracket remains: keep the leftover pairing as given
            for (std::size_t j = 0; j < alphas.size(); ++j) out.pairs.push_back({alphas[j], betas[j]});
            break;
        }
        out.pairs.push_back({alphas[bj], betas[bk]});
        alphas.erase(alphas.begin() + static_cast<long>(bj));
        betas.erase(betas.begin() + static_cast<long>(bk));
    }
    return out;
}

// Explicit rank-2 string polynomial (u + β)(u + β + 1)...(u + α − 1).
template <FieldLike F>
FactoredPoly<F> gl2_string_poly(const F& field, const typename F::Elem& alpha,
                                const typename F::Elem& beta) {
    long gap = 0;
    bool def = field.subfield_gap(beta, alpha, gap);
    require(def && (field.characteristic() > 0 || gap >= 0), "classification",
            "difference is not a nonnegative bracket");
    std::vector<typename F::Elem> roots;
    for (long j = 0; j < gap; ++j) roots.push_back(-(beta + field.from_integer(j)));
    return FactoredPoly<F>(field, std::move(roots));
}

// Per-entry highest-weight polynomials predicted by the provenance:
// λ_i(u) = Π_factors (u + hw_i − z), as factored data.
template <FieldLike F>
std::vector<FactoredPoly<F>> provenance_weight_polys(const YangianModule<F>& m) {
    require(m.has_provenance, "classification", "module carries no evaluation provenance");
    const F& field = m.field;
    std::vector<FactoredPoly<F>> out;
    for (int i = 0; i < m.n; ++i) {
        std::vector<typename F::Elem> roots;
        for (const auto& f : m.factors)
            roots.push_back(f.shift - f.hw[static_cast<std::size_t>(i)]);
        out.push_back(FactoredPoly<F>(field, std::move(roots)));
    }
    return out;
}

// Drinfeld polynomials P_1, ..., P_{n-1} of a provenance-built module with a
// unique singular line. The provenance prediction is validated against the
// eigen-series extracted from the matrices before any conversion happens.
template <FieldLike F>
std::vector<FactoredPoly<F>> drinfeld_of_module(const YangianModule<F>& m) {
    const F& field = m.field;
    auto sw = singular_and_weight(m);
    require(sw.basis.rows() == 1 && sw.weight.has_value(), "classification",
            "module has no unique singular line with an eigen-weight");

    auto polys = provenance_weight_polys(m);
    for (int i = 0; i < m.n; ++i) {
        // true eigen-series: product over factors of 1 + hw_i (u − z)^{-1},
        // times the accumulated twist
        auto predicted = TruncSeries<F>::one(field, m.trunc);
        for (const auto& fac : m.factors) {
            TruncSeries<F> lin = TruncSeries<F>::one(field, m.trunc);
            if (m.trunc >= 1) lin.set_coeff(1, fac.hw[static_cast<std::size_t>(i)]);
            predicted = predicted * series_shift_expand(lin, fac.shift);
        }
        if (m.twist) predicted = predicted * m.twist->truncated(m.trunc);
        require(predicted.agrees_with((*sw.weight)[static_cast<std::size_t>(i)]), "classification",
                "provenance disagrees with the extracted weight");
    }

    std::vector<FactoredPoly<F>> out;
    for (int i = 0; i + 1 < m.n; ++i)
        out.push_back(ratio_to_polynomial(field, polys[static_cast<std::size_t>(i)],
                                          polys[static_cast<std::size_t>(i + 1)]));
    return out;
}

// qdet T(u) = Σ_s sgn(s) t_{1,s(1)}(u−n+1) ... t_{n,s(n)}(u) evaluated on the
// module, with centrality and scalar reports.
template <FieldLike F>
struct QdetResult {
    std::vector<Matrix<F>> series; // coefficients of u^0 ... u^{-order}
    bool central = false;
    std::optional<TruncSeries<F>> scalar;
};

namespace detail {

template <FieldLike F>
std::vector<Matrix<F>> mat_series_shift(const F& field, const std::vector<Matrix<F>>& s,
                                        const typename F::Elem& z) {
    const int n = static_cast<int>(s.size()) - 1;
    std::vector<Matrix<F>> out(s.size(), Matrix<F>(field, s[0].rows(), s[0].cols()));
    out[0] = s[0];
    std::vector<typename F::Elem> zpow(static_cast<std::size_t>(n) + 1, field.one());
    for (int j = 1; j <= n; ++j) zpow[static_cast<std::size_t>(j)] = zpow[static_cast<std::size_t>(j - 1)] * z;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= m; ++k) {
            auto b = field.from_rational(binomial(m - 1, m - k));
            if (field.is_zero(b)) continue;
            out[static_cast<std::size_t>(m)] =
                out[static_cast<std::size_t>(m)] + s[static_cast<std::size_t>(k)].scaled(b * zpow[static_cast<std::size_t>(m - k)]);
        }
    return out;
}

template <FieldLike F>
std::vector<Matrix<F>> mat_series_mul(const F& field, const std::vector<Matrix<F>>& a,
                                      const std::vector<Matrix<F>>& b) {
    std::vector<Matrix<F>> out(a.size(), Matrix<F>(field, a[0].rows(), a[0].cols()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    return out;
}

} // namespace detail

template <FieldLike F>
QdetResult<F> qdet_action(const YangianModule<F>& m, int order = -1) {
    const F& field = m.field;
    if (order < 0) order = m.exact ? m.trunc * m.n + 2 : m.trunc;
    order = std::min(order, m.avail());

    std::vector<int> perm(static_cast<std::size_t>(m.n));
    for (int i = 0; i < m.n; ++i) perm[static_cast<std::size_t>(i)] = i;

    auto t_series = [&](int i, int j) {
        std::vector<Matrix<F>> s;
        for (int k = 0; k <= order; ++k) s.push_back(m.t_coeff(i, j, k));
        return s;
    };

    std::vector<Matrix<F>> q(static_cast<std::size_t>(order) + 1, Matrix<F>(field, m.dim, m.dim));
    do {
        int inv = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;

        std::vector<Matrix<F>> prod;
        for (int i = 0; i < m.n; ++i) {
            auto fac = detail::mat_series_shift(field, t_series(i, perm[static_cast<std::size_t>(i)]),
                                                field.from_integer(m.n - 1 - i));
            prod = i == 0 ? fac : detail::mat_series_mul(field, prod, fac);
        }
        for (std::size_t k = 0; k < q.size(); ++k)
            q[k] = (inv % 2 == 0) ? q[k] + prod[k] : q[k] - prod[k];
    } while (std::next_permutation(perm.begin(), perm.end()));

    QdetResult<F> out;
    out.series = q;
    out.central = true;
    for (const auto& qk : q) {
        for (int i = 0; i < m.n && out.central; ++i)
            for (int j = 0; j < m.n && out.central; ++j)
                for (int mm = 1; mm <= m.trunc && out.central; ++mm) {
                    const auto& t = m.t(i, j, mm);
                    if (!(qk * t == t * qk)) out.central = false;
                }
        if (!out.central) break;
    }

    bool scalar = true;
    TruncSeries<F> s(field, order);
    for (int k = 0; k <= order && scalar; ++k) {
        typename F::Elem c = field.zero();
        scalar = q[static_cast<std::size_t>(k)].scalar_value(c);
        if (scalar) s.set_coeff(k, c);
    }
    if (scalar && m.dim > 0) out.scalar = s;
    return out;
}

} // namespace repglt
