#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "repglt/bipartition.hpp"
#include "repglt/factored_poly.hpp"
#include "repglt/series.hpp"

namespace repglt {

// Evaluation datum: bipartitions η_k with scalar shifts c_k; under the
// standard-action flag the shifts must sum to zero.
template <FieldLike F>
struct EvaluationData {
    struct Term {
        Bipartition eta;
        typename F::Elem c;
    };
    std::vector<Term> terms;
    bool standard_gl_action = false;

    void validate(const F& field) const {
        auto sum = field.zero();
        for (const auto& t : terms) {
            require(!t.eta.empty(), "argument", "evaluation bipartition must be nonempty");
            sum = sum + t.c;
        }
        if (standard_gl_action)
            require(field.is_zero(sum), "argument", "standard action requires shifts summing to zero");
    }
};

// Highest weight in stabilized form: λ•_1..λ•_l, λ∘_1..λ∘_l and the master
// entry λ^m; entries beyond the stored lists equal λ^m (resp. λ^m(−u)).
// Defined up to simultaneous multiplication; canonical_form strips the
// common factor.
template <FieldLike F>
struct HighestWeightCR {
    F field;
    std::vector<FactoredPoly<F>> bullet;
    std::vector<FactoredPoly<F>> circ;
    FactoredPoly<F> master;

    explicit HighestWeightCR(F f) : field(f), master(FactoredPoly<F>::one(f)) {}

    int stab_bullet() const { return static_cast<int>(bullet.size()); }
    int stab_circ() const { return static_cast<int>(circ.size()); }

    // i-th (1-based) entry of the full sequence
    FactoredPoly<F> bullet_entry(int i) const {
        return i <= stab_bullet() ? bullet[static_cast<std::size_t>(i - 1)] : master;
    }
    // λ∘_i read in the bullet variable: g_i(u) = λ∘_i(−u)
    FactoredPoly<F> circ_entry_neg(int i) const {
        return i <= stab_circ() ? circ[static_cast<std::size_t>(i - 1)].negated_arg() : master;
    }

    // drop stored entries that already equal the stabilized value
    void trim() {
        while (!bullet.empty() && bullet.back() == master) bullet.pop_back();
        FactoredPoly<F> mneg = master.negated_arg();
        while (!circ.empty() && circ.back() == mneg) circ.pop_back();
    }

    HighestWeightCR canonical_form() const {
        HighestWeightCR out = *this;
        out.trim();
        FactoredPoly<F> common = out.master;
        for (const auto& p : out.bullet) common = common.gcd(p);
        for (const auto& p : out.circ) common = common.gcd(p.negated_arg());
        if (!common.is_one()) {
            out.master = *out.master.divided_by(common);
            for (auto& p : out.bullet) p = *p.divided_by(common);
            for (auto& p : out.circ) p = (*p.negated_arg().divided_by(common)).negated_arg();
        }
        return out;
    }

    friend bool operator==(const HighestWeightCR& a, const HighestWeightCR& b) {
        auto x = a.canonical_form(), y = b.canonical_form();
        return x.bullet == y.bullet && x.circ == y.circ && x.master == y.master;
    }

    // Restriction to rank n: position i carries λ•_i for i ≤ l(λ•), position
    // n−i+1 carries λ∘_i(−u) for i ≤ l(λ∘), and λ^m elsewhere.
    std::vector<FactoredPoly<F>> restrict_to_rank(int n) const {
        require(n >= stab_bullet() + stab_circ(), "argument",
                "rank too small for the stabilization lengths");
        std::vector<FactoredPoly<F>> out;
        for (int i = 1; i <= n; ++i) {
            if (i <= stab_bullet())
                out.push_back(bullet[static_cast<std::size_t>(i - 1)]);
            else if (n - i + 1 <= stab_circ())
                out.push_back(circ[static_cast<std::size_t>(n - i)].negated_arg());
            else
                out.push_back(master);
        }
        return out;
    }
};

template <FieldLike F>
struct DrinfeldDataCR {
    F field;
    std::vector<FactoredPoly<F>> bullet;
    std::vector<FactoredPoly<F>> circ;

    explicit DrinfeldDataCR(F f) : field(f) {}

    void trim() {
        while (!bullet.empty() && bullet.back().is_one()) bullet.pop_back();
        while (!circ.empty() && circ.back().is_one()) circ.pop_back();
    }

    friend bool operator==(const DrinfeldDataCR& a, const DrinfeldDataCR& b) {
        DrinfeldDataCR x = a, y = b;
        x.trim();
        y.trim();
        return x.bullet == y.bullet && x.circ == y.circ;
    }
};

// λ•_i(u) = Π_k (u + (η•_k)_i + c_k), λ∘_i(u) = Π_k (u + (η∘_k)_i − c_k),
// λ^m = Π_k (u + c_k); every entry has degree = number of factors.
template <FieldLike F>
HighestWeightCR<F> weight_from_evaluation(const F& field, const EvaluationData<F>& data) {
    data.validate(field);
    HighestWeightCR<F> hw(field);
    int lb = 0, lc = 0;
    for (const auto& t : data.terms) {
        lb = std::max(lb, static_cast<int>(t.eta.bullet.size()));
        lc = std::max(lc, static_cast<int>(t.eta.circ.size()));
    }
    std::vector<typename F::Elem> mroots;
    for (const auto& t : data.terms) mroots.push_back(-t.c);
    hw.master = FactoredPoly<F>(field, mroots);
    for (int i = 1; i <= lb; ++i) {
        std::vector<typename F::Elem> roots;
        for (const auto& t : data.terms)
            roots.push_back(-(field.from_integer(t.eta.bullet_row(i)) + t.c));
        hw.bullet.push_back(FactoredPoly<F>(field, std::move(roots)));
    }
    for (int i = 1; i <= lc; ++i) {
        std::vector<typename F::Elem> roots;
        for (const auto& t : data.terms)
            roots.push_back(-(field.from_integer(t.eta.circ_row(i)) - t.c));
        hw.circ.push_back(FactoredPoly<F>(field, std::move(roots)));
    }
    return hw;
}

// Greedy maximal strings within each Z-coset (F_p-coset in characteristic p):
// pick a root whose predecessor is absent, extend, repeat.
template <FieldLike F>
struct StringDecomposition {
    struct Str {
        typename F::Elem start;
        long length;
    };
    std::vector<Str> strings;
};

template <FieldLike F>
StringDecomposition<F> string_decompose(const F& field, std::vector<typename F::Elem> roots) {
    if (field.characteristic() > 0)
        require(static_cast<long>(roots.size()) < field.characteristic() - 1, "size",
                "root multiset too large for the characteristic");
    std::sort(roots.begin(), roots.end());
    StringDecomposition<F> out;

    std::vector<bool> used(roots.size(), false);
    auto count_remaining = [&](const typename F::Elem& x) {
        long c = 0;
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (!used[i] && roots[i] == x) ++c;
        return c;
    };
    auto take = [&](const typename F::Elem& x) {
        for (std::size_t i = 0; i < roots.size(); ++i)
            if (!used[i] && roots[i] == x) { used[i] = true; return; }
    };

    std::size_t left = roots.size();
    while (left > 0) {
        // first unused root (in canonical order) with no remaining predecessor
        std::size_t pick = roots.size();
        for (std::size_t i = 0; i < roots.size(); ++i) {
            if (used[i]) continue;
            if (count_remaining(roots[i] - field.one()) == 0) { pick = i; break; }
        }
        require(pick < roots.size(), "construction", "no string start found"); // impossible within bounds
        typename F::Elem start = roots[pick];
        typename F::Elem cur = start;
        long len = 0;
        while (count_remaining(cur) > 0) {
            take(cur);
            ++len;
            --left;
            cur = cur + field.one();
        }
        out.strings.push_back({start, len});
    }
    return out;
}

// Canonical q_p-representative: remove full prime-subfield cosets from the
// root multiset (each removal divides by q_p(u+c) = (u+c)^p − (u+c)).
// Characteristic 0 is a no-op.
template <FieldLike F>
FactoredPoly<F> qp_normalize(const F& field, const FactoredPoly<F>& poly) {
    long p = field.characteristic();
    if (p == 0) return poly;
    require(p <= 1000000, "size", "characteristic too large for coset normalization");

    std::map<typename F::Elem, std::vector<typename F::Elem>> cosets;
    for (const auto& r : poly.roots()) cosets[field.coset_key(r)].push_back(r);
    std::vector<typename F::Elem> out;
    for (auto& [key, roots] : cosets) {
        while (static_cast<long>(roots.size()) >= p) {
            // try to remove one copy of every residue base + j
            std::vector<typename F::Elem> rest = roots;
            bool full = true;
            for (long j = 0; j < p && full; ++j) {
                auto x = key + field.from_integer(j);
                auto it = std::find(rest.begin(), rest.end(), x);
                if (it == rest.end())
                    full = false;
                else
                    rest.erase(it);
            }
            if (!full) break;
            roots = std::move(rest);
        }
        out.insert(out.end(), roots.begin(), roots.end());
    }
    return FactoredPoly<F>(field, std::move(out));
}

namespace detail {

// perfect matching of numerator roots a to denominator roots b with b − a a
// positive subfield gap; first-fit with backtracking over sorted candidates
template <FieldLike F>
bool match_coset(const F& field, const std::vector<typename F::Elem>& nums,
                 const std::vector<typename F::Elem>& dens, std::vector<bool>& used, std::size_t i,
                 std::vector<long>& gaps) {
    if (i == nums.size()) return true;
    for (std::size_t j = 0; j < dens.size(); ++j) {
        if (used[j]) continue;
        long gap = 0;
        if (!field.subfield_gap(nums[i], dens[j], gap)) continue;
        if (gap < 1) continue;
        used[j] = true;
        gaps[i] = gap;
        std::vector<long> rest = gaps;
        if (match_coset(field, nums, dens, used, i + 1, gaps)) return true;
        gaps = rest;
        used[j] = false;
    }
    return false;
}

} // namespace detail

// Solve P(u+1)/P(u) = num/den for monic P in factored form; the string roots
// are {a+1, ..., b} for each matched pair. The telescoping identity is
// re-checked by cross multiplication before returning.
template <FieldLike F>
FactoredPoly<F> ratio_to_polynomial(const F& field, const FactoredPoly<F>& num,
                                    const FactoredPoly<F>& den) {
    FactoredPoly<F> g = num.gcd(den);
    FactoredPoly<F> n = *num.divided_by(g);
    FactoredPoly<F> d = *den.divided_by(g);

    std::map<typename F::Elem, std::pair<std::vector<typename F::Elem>, std::vector<typename F::Elem>>> cosets;
    for (const auto& r : n.roots()) cosets[field.coset_key(r)].first.push_back(r);
    for (const auto& r : d.roots()) cosets[field.coset_key(r)].second.push_back(r);

    std::vector<typename F::Elem> proots;
    for (auto& [key, pair] : cosets) {
        auto& [nums, dens] = pair;
        require(nums.size() == dens.size(), "classification",
                "weight ratio admits no polynomial solution (unbalanced coset)");
        std::sort(nums.begin(), nums.end());
        std::sort(dens.begin(), dens.end());
        std::vector<bool> used(dens.size(), false);
        std::vector<long> gaps(nums.size(), 0);
        require(detail::match_coset(field, nums, dens, used, 0, gaps), "classification",
                "weight ratio admits no polynomial solution (no positive-gap matching)");
        for (std::size_t i = 0; i < nums.size(); ++i)
            for (long s = 1; s <= gaps[i]; ++s)
                proots.push_back(nums[i] + field.from_integer(s));
    }
    FactoredPoly<F> p(field, std::move(proots));

    // P(u+1) * den == P(u) * num
    require(p.shifted_arg(field.one()) * den == p * num, "classification",
            "telescoping identity failed");
    // the matching may assemble full prime-subfield cosets out of separate
    // pairs; q_p(u+c+1) and q_p(u+c) share a root multiset, so normalizing
    // keeps the identity while producing the canonical representative
    return qp_normalize(field, p);
}

template <FieldLike F>
DrinfeldDataCR<F> drinfeld_from_weight(const HighestWeightCR<F>& hw) {
    const F& field = hw.field;
    DrinfeldDataCR<F> out(field);
    for (int i = 1; i <= hw.stab_bullet(); ++i)
        out.bullet.push_back(ratio_to_polynomial(field, hw.bullet_entry(i), hw.bullet_entry(i + 1)));
    for (int i = 1; i <= hw.stab_circ(); ++i)
        out.circ.push_back(ratio_to_polynomial(field, hw.circ_entry_neg(i + 1), hw.circ_entry_neg(i)));
    out.trim();
    return out;
}

// Telescoping-product construction of a weight with the prescribed Drinfeld
// data; the result is validated by the round trip before being returned.
template <FieldLike F>
HighestWeightCR<F> weight_from_drinfeld(const DrinfeldDataCR<F>& data) {
    const F& field = data.field;
    DrinfeldDataCR<F> p = data;
    for (auto& q : p.bullet) q = qp_normalize(field, q);
    for (auto& q : p.circ) q = qp_normalize(field, q);
    p.trim();
    const int nb = static_cast<int>(p.bullet.size());
    const int nc = static_cast<int>(p.circ.size());
    auto shift1 = [&](const FactoredPoly<F>& q) { return q.shifted_arg(field.one()); }; // q(u+1)

    HighestWeightCR<F> hw(field);
    FactoredPoly<F> bullets_plain = FactoredPoly<F>::one(field);
    for (const auto& q : p.bullet) bullets_plain = bullets_plain * q;
    FactoredPoly<F> circs_shifted = FactoredPoly<F>::one(field);
    for (const auto& q : p.circ) circs_shifted = circs_shifted * shift1(q);

    hw.master = bullets_plain * circs_shifted;
    for (int i = 1; i <= nb; ++i) {
        FactoredPoly<F> acc = FactoredPoly<F>::one(field);
        for (int j = 1; j <= nb; ++j) {
            const auto& q = p.bullet[static_cast<std::size_t>(j - 1)];
            acc = acc * (j < i ? q : shift1(q));
        }
        hw.bullet.push_back(acc * circs_shifted);
    }
    for (int i = 1; i <= nc; ++i) {
        FactoredPoly<F> acc = FactoredPoly<F>::one(field);
        for (int j = 1; j <= nc; ++j) {
            const auto& q = p.circ[static_cast<std::size_t>(j - 1)];
            acc = acc * (j < i ? shift1(q) : q);
        }
        hw.circ.push_back((bullets_plain * acc).negated_arg());
    }
    hw = hw.canonical_form();

    require(drinfeld_from_weight(hw) == p, "construction",
            "weight construction failed its round-trip check");
    return hw;
}

// Classification label (P, f): f must have constant term 1 and, without the
// nonstandard-action flag, vanishing u^{-1} coefficient.
template <FieldLike F>
struct GlTLabel {
    DrinfeldDataCR<F> P;
    TruncSeries<F> f;
    bool nonstandard_action = false;
};

template <FieldLike F>
GlTLabel<F> make_gl_t_label(const DrinfeldDataCR<F>& P, const TruncSeries<F>& f,
                            bool nonstandard_action = false) {
    const F& field = P.field;
    require(f.coeff(0) == field.one(), "argument", "label series must have constant term 1");
    if (!nonstandard_action && f.order() >= 1)
        require(field.is_zero(f.coeff(1)), "argument",
                "label series must have no u^{-1} term under the standard action");
    GlTLabel<F> out{P, f, nonstandard_action};
    out.P.trim();
    return out;
}

template <FieldLike F>
bool labels_equal(const GlTLabel<F>& a, const GlTLabel<F>& b) {
    const F& field = a.P.field;
    DrinfeldDataCR<F> x = a.P, y = b.P;
    for (auto& q : x.bullet) q = qp_normalize(field, q);
    for (auto& q : x.circ) q = qp_normalize(field, q);
    for (auto& q : y.bullet) q = qp_normalize(field, q);
    for (auto& q : y.circ) q = qp_normalize(field, q);
    return x == y && a.f.agrees_with(b.f) && a.nonstandard_action == b.nonstandard_action;
}

// Witness pairs (t_n, p_n) with q(t_n) ≡ 0 mod p_n, p_n ≤ bound prime.
struct WitnessPair {
    long t = 0;
    long p = 0;
    long gap = 0; // p − t
};
std::vector<WitnessPair> find_modular_specializations(const std::vector<long>& q, long bound);

} // namespace repglt
