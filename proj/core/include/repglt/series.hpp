#pragma once

#include <string>
#include <vector>

#include "repglt/error.hpp"
#include "repglt/field.hpp"

namespace repglt {

// Truncated power series in u^{-1}: coefficients of u^0, ..., u^{-order}.
// Binary operations carry the minimum of the operand truncation orders.
template <FieldLike F>
class TruncSeries {
public:
    using Elem = typename F::Elem;

    TruncSeries(F field, int order)
        : field_(field), c_(static_cast<std::size_t>(order) + 1, field.zero()) {
        require(order >= 0, "argument", "negative truncation order");
    }

    static TruncSeries constant(F field, const Elem& value, int order) {
        TruncSeries s(field, order);
        s.c_[0] = value;
        return s;
    }
    static TruncSeries one(F field, int order) { return constant(field, field.one(), order); }

    const F& field() const { return field_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Elem& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    void set_coeff(int k, const Elem& v) { c_[static_cast<std::size_t>(k)] = v; }

    TruncSeries truncated(int order) const {
        TruncSeries s(field_, order);
        for (int k = 0; k <= std::min(order, this->order()); ++k) s.c_[static_cast<std::size_t>(k)] = coeff(k);
        return s;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        int n = std::min(a.order(), b.order());
        TruncSeries r(a.field_, n);
        for (int k = 0; k <= n; ++k) r.c_[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        int n = std::min(a.order(), b.order());
        TruncSeries r(a.field_, n);
        for (int k = 0; k <= n; ++k) r.c_[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        int n = std::min(a.order(), b.order());
        TruncSeries r(a.field_, n);
        for (int i = 0; i <= n; ++i) {
            if (a.field_.is_zero(a.coeff(i))) continue;
            for (int j = 0; i + j <= n; ++j)
                r.c_[static_cast<std::size_t>(i + j)] = r.coeff(i + j) + a.coeff(i) * b.coeff(j);
        }
        return r;
    }

    TruncSeries scaled(const Elem& s) const {
        TruncSeries r = *this;
        for (auto& c : r.c_) c = c * s;
        return r;
    }

    // Multiplicative inverse; requires constant term 1.
    TruncSeries inverse() const {
        require(coeff(0) == field_.one(), "domain", "series inversion requires constant term 1");
        TruncSeries r(field_, order());
        r.c_[0] = field_.one();
        for (int k = 1; k <= order(); ++k) {
            Elem acc = field_.zero();
            for (int j = 1; j <= k; ++j) acc = acc + coeff(j) * r.coeff(k - j);
            r.c_[static_cast<std::size_t>(k)] = -acc;
        }
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        if (a.order() != b.order()) return false;
        for (int k = 0; k <= a.order(); ++k)
            if (!(a.coeff(k) == b.coeff(k))) return false;
        return true;
    }

    // Equality of the coefficients both operands carry.
    bool agrees_with(const TruncSeries& o) const {
        int n = std::min(order(), o.order());
        for (int k = 0; k <= n; ++k)
            if (!(coeff(k) == o.coeff(k))) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!field_.is_zero(c)) return false;
        return true;
    }

private:
    F field_;
    std::vector<Elem> c_;
};

// Re-expansion of s(u - z) as a series in u^{-1}:
// (u - z)^{-k} = u^{-k} * sum_{j>=0} C(k+j-1, j) z^j u^{-j}.
template <FieldLike F>
TruncSeries<F> series_shift_expand(const TruncSeries<F>& s, const typename F::Elem& z) {
    const F& field = s.field();
    int n = s.order();
    TruncSeries<F> r(field, n);
    r.set_coeff(0, s.coeff(0));
    std::vector<typename F::Elem> zpow(static_cast<std::size_t>(n) + 1, field.one());
    for (int j = 1; j <= n; ++j) zpow[static_cast<std::size_t>(j)] = zpow[static_cast<std::size_t>(j - 1)] * z;
    for (int m = 1; m <= n; ++m) {
        auto acc = field.zero();
        for (int k = 1; k <= m; ++k) {
            if (field.is_zero(s.coeff(k))) continue;
            auto binom = field.from_rational(binomial(m - 1, m - k));
            acc = acc + s.coeff(k) * binom * zpow[static_cast<std::size_t>(m - k)];
        }
        r.set_coeff(m, acc);
    }
    return r;
}

} // namespace repglt
