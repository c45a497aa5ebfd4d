#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "repglt/error.hpp"
#include "repglt/field.hpp"
#include "repglt/series.hpp"

namespace repglt {

// Monic polynomial given by its exact root multiset; the canonical carrier
// for weight and Drinfeld-polynomial arithmetic. Roots kept sorted, so
// equality is order-insensitive multiset equality.
template <FieldLike F>
class FactoredPoly {
public:
    using Elem = typename F::Elem;

    explicit FactoredPoly(F field) : field_(field) {}
    FactoredPoly(F field, std::vector<Elem> roots) : field_(field), roots_(std::move(roots)) {
        std::sort(roots_.begin(), roots_.end());
    }

    static FactoredPoly one(F field) { return FactoredPoly(field); }

    const F& field() const { return field_; }
    const std::vector<Elem>& roots() const { return roots_; }
    int degree() const { return static_cast<int>(roots_.size()); }
    bool is_one() const { return roots_.empty(); }

    friend bool operator==(const FactoredPoly& a, const FactoredPoly& b) { return a.roots_ == b.roots_; }
    friend bool operator!=(const FactoredPoly& a, const FactoredPoly& b) { return !(a == b); }

    friend FactoredPoly operator*(const FactoredPoly& a, const FactoredPoly& b) {
        std::vector<Elem> r = a.roots_;
        r.insert(r.end(), b.roots_.begin(), b.roots_.end());
        return FactoredPoly(a.field_, std::move(r));
    }

    // Multiset difference; nullopt when b's roots are not contained in a's.
    std::optional<FactoredPoly> divided_by(const FactoredPoly& b) const {
        std::vector<Elem> rest = roots_;
        for (const auto& r : b.roots_) {
            auto it = std::find(rest.begin(), rest.end(), r);
            if (it == rest.end()) return std::nullopt;
            rest.erase(it);
        }
        return FactoredPoly(field_, std::move(rest));
    }

    // Multiset intersection (the monic gcd of split polynomials).
    FactoredPoly gcd(const FactoredPoly& b) const {
        std::vector<Elem> rest = b.roots_, common;
        for (const auto& r : roots_) {
            auto it = std::find(rest.begin(), rest.end(), r);
            if (it == rest.end()) continue;
            rest.erase(it);
            common.push_back(r);
        }
        return FactoredPoly(field_, std::move(common));
    }

    // P(u + c): roots shift by -c.
    FactoredPoly shifted_arg(const Elem& c) const {
        std::vector<Elem> r;
        r.reserve(roots_.size());
        for (const auto& x : roots_) r.push_back(x - c);
        return FactoredPoly(field_, std::move(r));
    }

    // Monic normalization of P(-u): roots negate.
    FactoredPoly negated_arg() const {
        std::vector<Elem> r;
        r.reserve(roots_.size());
        for (const auto& x : roots_) r.push_back(-x);
        return FactoredPoly(field_, std::move(r));
    }

    Elem eval(const Elem& x) const {
        auto acc = field_.one();
        for (const auto& r : roots_) acc = acc * (x - r);
        return acc;
    }

    // Dense monic coefficients, ascending.
    std::vector<Elem> expand() const {
        std::vector<Elem> c{field_.one()};
        for (const auto& r : roots_) {
            std::vector<Elem> next(c.size() + 1, field_.zero());
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i + 1] = next[i + 1] + c[i];
                next[i] = next[i] - r * c[i];
            }
            c = std::move(next);
        }
        return c;
    }

    // u^{-deg} * P(u) = prod (1 - r u^{-1}) as a series with constant term 1.
    TruncSeries<F> to_series(int order) const {
        auto s = TruncSeries<F>::one(field_, order);
        for (const auto& r : roots_) {
            TruncSeries<F> lin = TruncSeries<F>::one(field_, order);
            if (order >= 1) lin.set_coeff(1, -r);
            s = s * lin;
        }
        return s;
    }

private:
    F field_;
    std::vector<Elem> roots_;
};

} // namespace repglt
