#pragma once

#include <array>
#include <map>
#include <vector>

#include "repglt/error.hpp"
#include "repglt/matrix.hpp"

namespace repglt {

// Negative root data of gl_n (n <= 3), zero-based: f-generators E_{i,j} with
// i > j, listed in the fixed PBW order used for monomials.
struct LieData {
    int n = 0;
    std::vector<std::pair<int, int>> neg_roots;

    static LieData gl(int n) {
        require(n >= 2 && n <= 3, "argument", "rank must be 2 or 3");
        LieData d;
        d.n = n;
        if (n == 2)
            d.neg_roots = {{1, 0}};
        else
            d.neg_roots = {{1, 0}, {2, 0}, {2, 1}};
        return d;
    }

    int root_index(int a, int b) const {
        for (std::size_t k = 0; k < neg_roots.size(); ++k)
            if (neg_roots[k] == std::make_pair(a, b)) return static_cast<int>(k);
        return -1;
    }
};

// PBW monomial in the f-generators: exponents aligned with LieData::neg_roots.
using PbwExps = std::array<int, 3>;

// weight offset (relative to the highest weight) of a monomial
inline std::vector<long> pbw_weight_offset(const LieData& d, const PbwExps& e) {
    std::vector<long> off(static_cast<std::size_t>(d.n), 0);
    for (std::size_t k = 0; k < d.neg_roots.size(); ++k) {
        off[static_cast<std::size_t>(d.neg_roots[k].first)] += e[k];
        off[static_cast<std::size_t>(d.neg_roots[k].second)] -= e[k];
    }
    return off;
}

// All PBW exponent tuples with the given weight offset (a Kostant partition
// enumeration; offsets are sums of negative roots, so this is finite).
std::vector<PbwExps> kostant_monomials(const LieData& d, const std::vector<long>& offset);

// Verma module over an arbitrary exact field with highest weight given by
// field elements; vectors are finite PBW-monomial combinations and the full
// gl_n action is realized by recursive straightening.
template <FieldLike F>
class VermaSpace {
public:
    using Elem = typename F::Elem;
    using Vec = std::map<PbwExps, Elem>;

    VermaSpace(F field, LieData data, std::vector<Elem> highest)
        : field_(field), data_(std::move(data)), hw_(std::move(highest)) {}

    const LieData& data() const { return data_; }
    const std::vector<Elem>& highest() const { return hw_; }

    Vec apply(int a, int b, const Vec& v) const {
        Vec out;
        for (const auto& [mono, coef] : v) {
            if (field_.is_zero(coef)) continue;
            Vec img = apply_mono(a, b, mono);
            for (auto& [m2, c2] : img) accumulate(out, m2, c2 * coef);
        }
        return out;
    }

    Vec apply_mono(int a, int b, const PbwExps& mono) const {
        int first = -1;
        for (std::size_t k = 0; k < data_.neg_roots.size(); ++k)
            if (mono[k] > 0) { first = static_cast<int>(k); break; }

        if (first < 0) {
            Vec out;
            if (a == b) {
                accumulate(out, mono, hw_[static_cast<std::size_t>(a)]);
            } else if (a > b) {
                PbwExps m = mono;
                m[static_cast<std::size_t>(data_.root_index(a, b))] = 1;
                accumulate(out, m, field_.one());
            }
            return out;
        }

        if (a > b) {
            int idx = data_.root_index(a, b);
            if (idx <= first) {
                Vec out;
                PbwExps m = mono;
                m[static_cast<std::size_t>(idx)] += 1;
                accumulate(out, m, field_.one());
                return out;
            }
        }

        PbwExps rest = mono;
        rest[static_cast<std::size_t>(first)] -= 1;
        Vec out = prepend(first, apply_mono(a, b, rest));
        // [E_ab, E_cd] = δ_bc E_ad − δ_da E_cb with f_first = E_cd
        auto [c, d] = data_.neg_roots[static_cast<std::size_t>(first)];
        if (b == c)
            for (auto& [m2, c2] : apply_mono(a, d, rest)) accumulate(out, m2, c2);
        if (d == a)
            for (auto& [m2, c2] : apply_mono(c, b, rest)) accumulate(out, m2, -c2);
        return out;
    }

    // f_k * v, restored to PBW order
    Vec prepend(int k, const Vec& v) const {
        Vec out;
        for (const auto& [mono, coef] : v) {
            if (field_.is_zero(coef)) continue;
            int first = static_cast<int>(data_.neg_roots.size());
            for (std::size_t j = 0; j < data_.neg_roots.size(); ++j)
                if (mono[j] > 0) { first = static_cast<int>(j); break; }
            if (first >= k) {
                PbwExps m = mono;
                m[static_cast<std::size_t>(k)] += 1;
                accumulate(out, m, coef);
            } else {
                auto [c, d] = data_.neg_roots[static_cast<std::size_t>(k)];
                for (auto& [m2, c2] : apply_mono(c, d, mono)) accumulate(out, m2, c2 * coef);
            }
        }
        return out;
    }

private:
    void accumulate(Vec& v, const PbwExps& m, const Elem& c) const {
        auto it = v.find(m);
        if (it == v.end()) {
            if (!field_.is_zero(c)) v.emplace(m, c);
            return;
        }
        it->second = it->second + c;
        if (field_.is_zero(it->second)) v.erase(it);
    }

    F field_;
    LieData data_;
    std::vector<Elem> hw_;
};

// Weights of the characteristic-0 irreducible: all integer vectors with
// coordinates in [λ_n, λ_1], the same coordinate sum, and dominant sort
// dominated by λ. Returned as offsets μ − λ in a deterministic order.
std::vector<std::vector<long>> irreducible_weight_offsets(const std::vector<long>& lambda);

mpz_class weyl_dim(const std::vector<long>& lambda);

} // namespace repglt
