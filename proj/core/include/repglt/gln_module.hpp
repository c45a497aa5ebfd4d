#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repglt/matrix.hpp"
#include "repglt/verma.hpp"

namespace repglt {

// Explicit gl_n-module: dense generator matrices E_ab (zero-based pair,
// stored at a*n+b) over an exact field, with a weight label per basis vector.
template <FieldLike F>
struct GlnModule {
    using Elem = typename F::Elem;

    F field;
    int n = 0;
    int dim = 0;
    std::vector<Matrix<F>> E;                      // n*n generator matrices
    std::vector<std::vector<long>> weight_offsets; // per basis vector, μ − λ
    std::vector<Elem> highest;                     // h-eigenvalues of the highest vector
    std::vector<long> highest_int;                 // integral λ (empty for the (α,β) family)

    explicit GlnModule(F f) : field(f) {}

    const Matrix<F>& e_mat(int a, int b) const { return E[static_cast<std::size_t>(a * n + b)]; }
    Matrix<F>& e_mat(int a, int b) { return E[static_cast<std::size_t>(a * n + b)]; }

    std::vector<long> weight_int(int idx) const {
        require(!highest_int.empty(), "argument", "module has no integral weight labels");
        std::vector<long> w = highest_int;
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] += weight_offsets[static_cast<std::size_t>(idx)][i];
        return w;
    }

    // [E_ab, E_cd] = δ_bc E_ad − δ_da E_cb as matrix identities.
    bool check_commutation_relations() const {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        Matrix<F> lhs = e_mat(a, b) * e_mat(c, d) - e_mat(c, d) * e_mat(a, b);
                        Matrix<F> rhs(field, dim, dim);
                        if (b == c) rhs = rhs + e_mat(a, d);
                        if (d == a) rhs = rhs - e_mat(c, b);
                        if (!(lhs == rhs)) return false;
                    }
        return true;
    }
};

// Quotient of the Verma module M(λ) by the submodule generated by the
// canonical singular vectors f_i^{λ_i - λ_{i+1} + 1} v, computed weight
// space by weight space inside the truncation to the characteristic-0
// weight set. A generator image with a nonzero residue outside that set
// (modulo the submodule's own weight space there) raises
// "truncation-exceeded"; over Q this never happens and the result is the
// irreducible V(λ).
template <FieldLike F>
GlnModule<F> build_weyl_module(const F& field, const std::vector<long>& lambda, long dim_bound = 64) {
    const int n = static_cast<int>(lambda.size());
    require(n >= 2 && n <= 3, "argument", "rank must be 2 or 3");
    for (int i = 0; i + 1 < n; ++i)
        require(lambda[static_cast<std::size_t>(i)] >= lambda[static_cast<std::size_t>(i + 1)], "argument",
                "weight is not dominant");
    require(weyl_dim(lambda) <= dim_bound, "size", "module dimension exceeds the configured bound");

    LieData data = LieData::gl(n);
    std::vector<typename F::Elem> hw;
    for (long c : lambda) hw.push_back(field.from_integer(c));
    VermaSpace<F> verma(field, data, hw);

    // singular generators w_i = f_i^{d_i + 1} v
    std::vector<std::pair<PbwExps, std::vector<long>>> singular; // (monomial, weight offset)
    for (int i = 0; i + 1 < n; ++i) {
        long d = lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(i + 1)];
        PbwExps m{};
        m[static_cast<std::size_t>(data.root_index(i + 1, i))] = static_cast<int>(d + 1);
        singular.push_back({m, pbw_weight_offset(data, m)});
    }

    struct WeightSpace {
        std::vector<PbwExps> monos;
        std::map<PbwExps, int> index;
        RowSpan<F> nspan;
        std::vector<int> reps; // local indices of quotient representatives
        WeightSpace(F f, int w) : nspan(f, w) {}
    };
    std::map<std::vector<long>, WeightSpace> spaces;

    auto get_space = [&](const std::vector<long>& offset) -> WeightSpace& {
        auto it = spaces.find(offset);
        if (it != spaces.end()) return it->second;
        auto monos = kostant_monomials(data, offset);
        WeightSpace ws(field, static_cast<int>(monos.size()));
        ws.monos = monos;
        for (std::size_t i = 0; i < monos.size(); ++i) ws.index[monos[i]] = static_cast<int>(i);
        // N at this weight: all PBW-lowerings of the singular generators
        for (const auto& [gen, goff] : singular) {
            std::vector<long> need(offset.size());
            for (std::size_t i = 0; i < offset.size(); ++i) need[i] = offset[i] - goff[i];
            for (const auto& m : kostant_monomials(data, need)) {
                typename VermaSpace<F>::Vec vec{{gen, field.one()}};
                for (std::size_t k = data.neg_roots.size(); k-- > 0;) {
                    auto [c, d] = data.neg_roots[k];
                    for (int rep = 0; rep < m[k]; ++rep) vec = verma.apply(c, d, vec);
                }
                std::vector<typename F::Elem> dense(monos.size(), field.zero());
                for (const auto& [mm, cc] : vec) {
                    auto pos = ws.index.find(mm);
                    require(pos != ws.index.end(), "construction", "weight bookkeeping failure");
                    dense[static_cast<std::size_t>(pos->second)] = cc;
                }
                ws.nspan.add(std::move(dense));
            }
        }
        std::vector<bool> pivot(monos.size(), false);
        for (int lead : ws.nspan.leads()) pivot[static_cast<std::size_t>(lead)] = true;
        for (std::size_t i = 0; i < monos.size(); ++i)
            if (!pivot[i]) ws.reps.push_back(static_cast<int>(i));
        return spaces.emplace(offset, std::move(ws)).first->second;
    };

    auto q_offsets = irreducible_weight_offsets(lambda);
    std::map<std::vector<long>, bool> in_q;
    for (const auto& off : q_offsets) in_q[off] = true;

    GlnModule<F> out(field);
    out.n = n;
    out.highest = hw;
    out.highest_int = lambda;

    std::map<std::vector<long>, int> base_index; // global index of first rep at this weight
    for (const auto& off : q_offsets) {
        WeightSpace& ws = get_space(off);
        base_index[off] = out.dim;
        for (std::size_t r = 0; r < ws.reps.size(); ++r) {
            out.weight_offsets.push_back(off);
            ++out.dim;
        }
    }

    out.E.assign(static_cast<std::size_t>(n * n), Matrix<F>(field, out.dim, out.dim));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Matrix<F>& mat = out.e_mat(a, b);
            for (const auto& off : q_offsets) {
                WeightSpace& ws = get_space(off);
                int base = base_index[off];
                std::vector<long> target = off;
                target[static_cast<std::size_t>(a)] += 1;
                target[static_cast<std::size_t>(b)] -= 1;

                for (std::size_t r = 0; r < ws.reps.size(); ++r) {
                    auto img = verma.apply_mono(a, b, ws.monos[static_cast<std::size_t>(ws.reps[r])]);
                    if (img.empty()) continue;
                    WeightSpace& tws = get_space(target);
                    std::vector<typename F::Elem> dense(tws.monos.size(), field.zero());
                    for (const auto& [mm, cc] : img) {
                        auto pos = tws.index.find(mm);
                        require(pos != tws.index.end(), "construction", "weight bookkeeping failure");
                        dense[static_cast<std::size_t>(pos->second)] = cc;
                    }
                    dense = tws.nspan.reduce(std::move(dense));
                    bool inside = in_q.count(target) > 0;
                    if (!inside) {
                        for (const auto& x : dense)
                            require(field.is_zero(x), "truncation-exceeded",
                                    "generator action leaks outside the truncated weight set");
                        continue;
                    }
                    int tbase = base_index[target];
                    for (std::size_t s = 0; s < tws.reps.size(); ++s)
                        mat.at(tbase + static_cast<int>(s), base + static_cast<int>(r)) =
                            dense[static_cast<std::size_t>(tws.reps[s])];
                    // residue off the representatives must vanish
                    for (std::size_t i = 0; i < dense.size(); ++i) {
                        bool is_rep = std::find(tws.reps.begin(), tws.reps.end(), static_cast<int>(i)) != tws.reps.end();
                        if (!is_rep)
                            require(field.is_zero(dense[i]), "construction", "quotient reduction failure");
                    }
                }
            }
        }
    return out;
}

// Highest-weight gl_2 module with arbitrary field parameters (α, β): basis
// f^k v up to the first singular position, actions by the rank-one formulas
// e·f^k v = k(α − β − k + 1) f^{k−1} v. Errors with "size" when no singular
// position exists within the bound (infinite-dimensional in char 0).
template <FieldLike F>
GlnModule<F> gl2_highest_weight_module(const F& field, const typename F::Elem& alpha,
                                       const typename F::Elem& beta, long dim_bound = 64) {
    using Elem = typename F::Elem;
    Elem diff = alpha - beta;
    long ell = -1;
    for (long k = 1; k <= dim_bound; ++k) {
        Elem coef = field.from_integer(k) * (diff - field.from_integer(k - 1));
        if (field.is_zero(coef)) { ell = k - 1; break; }
    }
    require(ell >= 0, "size", "no finite highest-weight quotient within the bound");

    const int d = static_cast<int>(ell) + 1;
    GlnModule<F> out(field);
    out.n = 2;
    out.dim = d;
    out.highest = {alpha, beta};
    out.E.assign(4, Matrix<F>(field, d, d));
    for (int k = 0; k < d; ++k) {
        out.weight_offsets.push_back({-static_cast<long>(k), static_cast<long>(k)});
        out.e_mat(0, 0).at(k, k) = alpha - field.from_integer(k);
        out.e_mat(1, 1).at(k, k) = beta + field.from_integer(k);
        if (k + 1 < d) out.e_mat(1, 0).at(k + 1, k) = field.one();
        if (k >= 1)
            out.e_mat(0, 1).at(k - 1, k) = field.from_integer(k) * (diff - field.from_integer(k - 1));
    }
    return out;
}

// One reported line per weight: a basis of the joint kernel of all raising
// generators inside that weight space.
template <FieldLike F>
struct SingularReport {
    struct Line {
        std::vector<long> weight_offset;
        std::vector<typename F::Elem> vec; // global coordinates
    };
    std::vector<Line> lines;
    int total_dim() const { return static_cast<int>(lines.size()); }
};

template <FieldLike F>
SingularReport<F> singular_vectors(const GlnModule<F>& mod) {
    const F& field = mod.field;
    std::map<std::vector<long>, std::vector<int>> by_weight;
    for (int i = 0; i < mod.dim; ++i) by_weight[mod.weight_offsets[static_cast<std::size_t>(i)]].push_back(i);

    SingularReport<F> report;
    for (const auto& [off, cols] : by_weight) {
        int blocks = 0;
        for (int a = 0; a < mod.n; ++a)
            for (int b = a + 1; b < mod.n; ++b) ++blocks;
        Matrix<F> stacked(field, blocks * mod.dim, static_cast<int>(cols.size()));
        int blk = 0;
        for (int a = 0; a < mod.n; ++a)
            for (int b = a + 1; b < mod.n; ++b) {
                for (int r = 0; r < mod.dim; ++r)
                    for (std::size_t c = 0; c < cols.size(); ++c)
                        stacked.at(blk * mod.dim + r, static_cast<int>(c)) = mod.e_mat(a, b).at(r, cols[c]);
                ++blk;
            }
        Matrix<F> ker = stacked.kernel();
        for (int k = 0; k < ker.rows(); ++k) {
            typename SingularReport<F>::Line line;
            line.weight_offset = off;
            line.vec.assign(static_cast<std::size_t>(mod.dim), field.zero());
            for (std::size_t c = 0; c < cols.size(); ++c)
                line.vec[static_cast<std::size_t>(cols[c])] = ker.at(k, static_cast<int>(c));
            report.lines.push_back(std::move(line));
        }
    }
    return report;
}

// Irreducible = the singular vectors span exactly the highest line and that
// line generates the module under the full generator action.
template <FieldLike F>
bool is_irreducible(const GlnModule<F>& mod) {
    auto report = singular_vectors(mod);
    if (report.total_dim() != 1) return false;
    RowSpan<F> span(mod.field, mod.dim);
    std::vector<std::vector<typename F::Elem>> frontier{report.lines[0].vec};
    span.add(report.lines[0].vec);
    while (!frontier.empty() && span.dim() < mod.dim) {
        std::vector<std::vector<typename F::Elem>> next;
        for (const auto& v : frontier)
            for (const auto& mat : mod.E) {
                auto w = mat.apply(v);
                if (span.add(w)) next.push_back(std::move(w));
            }
        frontier = std::move(next);
    }
    return span.dim() == mod.dim;
}

} // namespace repglt
