#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "repglt/error.hpp"

namespace repglt {

// Arbitrary-precision rational, always reduced, denominator > 0.
// Thin value wrapper around GMP's mpq_class; every arithmetic result is
// canonical because mpq arithmetic preserves canonical form.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(long num, long den) {
        require(den != 0, "domain", "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) {
        require(den != 0, "domain", "rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Parses "a", "-a" or "a/b".
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            fail("json", "malformed rational literal: " + s);
        require(q.get_den() != 0, "domain", "rational with zero denominator");
        q.canonicalize();
        return Rational(std::move(q));
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }

    mpz_class to_integer() const {
        require(is_integer(), "domain", "rational " + str() + " is not an integer");
        return v_.get_num();
    }

    long to_long() const {
        mpz_class z = to_integer();
        require(z.fits_slong_p(), "size", "integer does not fit a machine word");
        return z.get_si();
    }

    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return q;
    }

    // r - floor(r), in [0, 1); keys Z-cosets.
    Rational fractional_part() const { return *this - Rational(floor()); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        require(!o.is_zero(), "domain", "division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        require(!is_zero(), "domain", "inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    std::string str() const { return v_.get_str(); }

private:
    mpq_class v_;
};

inline Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

// Exact scalar field of characteristic zero. Stateless; mirrors the
// interface of FiniteField so algorithms can be generic over the field.
struct RationalField {
    using Elem = Rational;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_integer(long n) const { return Rational(n); }
    Elem from_integer(const mpz_class& n) const { return Rational(n); }
    Elem from_rational(const Rational& r) const { return r; }
    long characteristic() const { return 0; }

    bool is_zero(const Elem& x) const { return x.is_zero(); }
    Elem inverse(const Elem& x) const { return x.inverse(); }

    // Canonical representative of the Z-coset of x.
    Elem coset_key(const Elem& x) const { return x.fractional_part(); }

    // b - a when it lies in Z (the prime "subfield" analog); the value is the
    // actual integer, possibly negative.
    bool subfield_gap(const Elem& a, const Elem& b, long& out) const {
        Rational d = b - a;
        if (!d.is_integer()) return false;
        out = d.to_long();
        return true;
    }

    std::string describe() const { return "q"; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

} // namespace repglt
