#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "repglt/field.hpp"
#include "repglt/rational.hpp"

namespace repglt {

// Univariate polynomial over Q in the loop/interpolation parameter t.
// Coefficients ascending; highest stored coefficient nonzero unless zero.
class UniPolyT {
public:
    UniPolyT() = default;
    UniPolyT(const Rational& constant) { c_.push_back(constant); trim(); }
    UniPolyT(long constant) : UniPolyT(Rational(constant)) {}
    explicit UniPolyT(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPolyT variable() { return monomial(1, Rational(1)); }
    static UniPolyT monomial(int k, const Rational& coeff);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Rational(0);
    }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

    UniPolyT operator-() const;
    UniPolyT& operator+=(const UniPolyT& o);
    UniPolyT& operator-=(const UniPolyT& o);
    friend UniPolyT operator+(UniPolyT a, const UniPolyT& b) { return a += b; }
    friend UniPolyT operator-(UniPolyT a, const UniPolyT& b) { return a -= b; }
    friend UniPolyT operator*(const UniPolyT& a, const UniPolyT& b);
    UniPolyT& operator*=(const UniPolyT& o) { return *this = *this * o; }
    UniPolyT scaled(const Rational& s) const;
    UniPolyT shifted_up(int k) const; // multiply by t^k

    friend bool operator==(const UniPolyT& a, const UniPolyT& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPolyT& a, const UniPolyT& b) { return !(a == b); }

    Rational eval(const Rational& x) const;

    template <FieldLike F>
    typename F::Elem eval_in(const F& field, const typename F::Elem& x) const {
        auto acc = field.zero();
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * x + field.from_rational(c_[i]);
        return acc;
    }

    // Quotient of an exact division; error "argument" if the division leaves
    // a remainder (used by the fraction-free determinant).
    UniPolyT exact_divide(const UniPolyT& d) const;

    std::string str() const; // e.g. "t^2 - 1", "1/2*t^2 + 1/2*t"

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

// Unique polynomial of degree < #points through the given points.
// Duplicate abscissae raise "argument".
UniPolyT lagrange_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

// All roots (with multiplicity) when the polynomial splits into integer-linear
// factors times a constant; nullopt when it does not split over Z or when the
// bounded candidate scan is inconclusive (callers report that distinctly).
std::optional<std::vector<mpz_class>> integer_roots(const UniPolyT& p);

// "t^2*(t - 1)*(t + 1)" style display when the polynomial splits over Z.
std::optional<std::string> factored_str(const UniPolyT& p);

} // namespace repglt
