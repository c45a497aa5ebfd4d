#include "repglt/polynomial.hpp"

#include <algorithm>
#include <map>

#include "repglt/error.hpp"

namespace repglt {

UniPolyT UniPolyT::monomial(int k, const Rational& coeff) {
    UniPolyT p;
    if (coeff.is_zero()) return p;
    p.c_.assign(static_cast<std::size_t>(k) + 1, Rational(0));
    p.c_.back() = coeff;
    return p;
}

UniPolyT UniPolyT::operator-() const {
    UniPolyT r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPolyT& UniPolyT::operator+=(const UniPolyT& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPolyT& UniPolyT::operator-=(const UniPolyT& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPolyT operator*(const UniPolyT& a, const UniPolyT& b) {
    if (a.is_zero() || b.is_zero()) return UniPolyT();
    UniPolyT r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

UniPolyT UniPolyT::scaled(const Rational& s) const {
    UniPolyT r = *this;
    for (auto& c : r.c_) c *= s;
    r.trim();
    return r;
}

UniPolyT UniPolyT::shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    UniPolyT r;
    r.c_.assign(c_.size() + static_cast<std::size_t>(k), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<std::size_t>(k)] = c_[i];
    return r;
}

Rational UniPolyT::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPolyT UniPolyT::exact_divide(const UniPolyT& d) const {
    require(!d.is_zero(), "argument", "polynomial division by zero");
    UniPolyT rem = *this, q;
    q.c_.assign(c_.size(), Rational(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        Rational f = rem.leading() / d.leading();
        q.c_[static_cast<std::size_t>(k)] += f;
        rem -= d.scaled(f).shifted_up(k);
    }
    require(rem.is_zero(), "argument", "polynomial division is not exact");
    q.trim();
    return q;
}

std::string UniPolyT::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c.is_zero()) continue;
        bool neg = c < Rational(0);
        Rational a = neg ? -c : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit = a.is_one();
        if (k == 0 || !unit) out += a.str();
        if (k > 0) {
            if (!unit) out += "*";
            out += "t";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

UniPolyT lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    require(!points.empty(), "argument", "interpolation needs at least one point");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            require(points[i].first != points[j].first, "argument",
                    "duplicate interpolation abscissa " + points[i].first.str());

    UniPolyT result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        UniPolyT basis(Rational(1));
        Rational denom(1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis *= UniPolyT({-points[j].first, Rational(1)});
            denom *= points[i].first - points[j].first;
        }
        result += basis.scaled(points[i].second / denom);
    }
    return result;
}

std::optional<std::vector<mpz_class>> integer_roots(const UniPolyT& p) {
    if (p.is_zero()) return std::nullopt;
    if (p.degree() == 0) return std::vector<mpz_class>{};

    // clear denominators
    mpz_class lcm(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) z.push_back(c.num() * (lcm / c.den()));

    std::vector<mpz_class> roots;
    // strip powers of t
    std::size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    for (std::size_t i = 0; i < low; ++i) roots.push_back(0);
    z.erase(z.begin(), z.begin() + static_cast<long>(low));

    // Cauchy bound on root size, capped; gram determinants only have small
    // integer roots, anything past the cap is reported as inconclusive.
    mpz_class bound(1), lead = z.back();
    for (const auto& c : z) {
        mpz_class a = abs(c) / abs(lead) + 1;
        if (a > bound) bound = a;
    }
    bound += 1;
    if (bound > 1000000) return std::nullopt;
    long b = bound.get_si();

    auto eval_at = [&](const std::vector<mpz_class>& f, long x) {
        mpz_class acc(0);
        for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
        return acc;
    };
    auto divide_out = [&](std::vector<mpz_class>& f, long r) {
        // f / (t - r), synthetic division; caller guarantees divisibility
        std::vector<mpz_class> q(f.size() - 1);
        mpz_class carry(0);
        for (std::size_t i = f.size(); i-- > 1;) {
            q[i - 1] = f[i] + carry;
            carry = q[i - 1] * r;
        }
        f = std::move(q);
    };

    for (long r = -b; r <= b && z.size() > 1; ++r) {
        while (z.size() > 1 && eval_at(z, r) == 0) {
            roots.push_back(r);
            divide_out(z, r);
        }
    }
    if (z.size() > 1) return std::nullopt; // does not split over Z
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::optional<std::string> factored_str(const UniPolyT& p) {
    auto roots = integer_roots(p);
    if (!roots) return std::nullopt;
    std::map<mpz_class, int> mult;
    for (const auto& r : *roots) mult[r]++;
    std::string out;
    if (!p.leading().is_one() || mult.empty()) out = p.leading().str();
    for (const auto& [r, k] : mult) {
        if (!out.empty()) out += "*";
        std::string fac;
        if (r == 0) fac = "t";
        else if (r > 0) fac = "(t - " + r.get_str() + ")";
        else fac = "(t + " + mpz_class(-r).get_str() + ")";
        out += fac;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

} // namespace repglt
