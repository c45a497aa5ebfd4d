#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "repglt/error.hpp"
#include "repglt/rational.hpp"

namespace repglt {

// Shared, interned description of F_{p^m}: the prime, the extension degree
// and the fixed monic irreducible modulus (ascending coefficients, the scan
// picks the least one in base-p counting order on (c_{m-1},...,c_0)).
// Contexts are immortal, so elements can hold plain pointers.
struct FFContext {
    long p = 0;
    int m = 1;
    std::vector<long> modulus; // size m+1, modulus[m] == 1

    static const FFContext* get(long p, int m);
};

constexpr int kMaxExtensionDegree = 4;

// Element of F_{p^m}, m <= 4. Coordinates are kept in [0, p) relative to the
// context's modulus; storage is inline so field scans stay allocation-free.
class FFElem {
public:
    FFElem() : ctx_(nullptr) { c_.fill(0); }
    FFElem(const FFContext* ctx, std::array<long, kMaxExtensionDegree> c) : ctx_(ctx), c_(c) {}

    const FFContext* ctx() const { return ctx_; }
    long p() const { return ctx_->p; }
    int m() const { return ctx_->m; }
    long coord(int i) const { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (int i = 0; i < m(); ++i)
            if (c_[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    }

    bool in_prime_subfield() const {
        for (int i = 1; i < m(); ++i)
            if (c_[static_cast<std::size_t>(i)] != 0) return false;
        return true;
    }

    friend bool operator==(const FFElem& a, const FFElem& b) {
        a.check_ctx(b);
        for (int i = 0; i < a.m(); ++i)
            if (a.c_[static_cast<std::size_t>(i)] != b.c_[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    friend bool operator!=(const FFElem& a, const FFElem& b) { return !(a == b); }

    // Deterministic total order (coordinate-lexicographic); used only for
    // canonical sorting of root multisets.
    friend bool operator<(const FFElem& a, const FFElem& b) {
        a.check_ctx(b);
        for (int i = a.m() - 1; i >= 0; --i) {
            auto ai = a.c_[static_cast<std::size_t>(i)], bi = b.c_[static_cast<std::size_t>(i)];
            if (ai != bi) return ai < bi;
        }
        return false;
    }

    friend FFElem operator+(const FFElem& a, const FFElem& b) {
        a.check_ctx(b);
        FFElem r(a.ctx_, {});
        for (int i = 0; i < a.m(); ++i) {
            long s = a.c_[static_cast<std::size_t>(i)] + b.c_[static_cast<std::size_t>(i)];
            if (s >= a.p()) s -= a.p();
            r.c_[static_cast<std::size_t>(i)] = s;
        }
        return r;
    }
    friend FFElem operator-(const FFElem& a, const FFElem& b) {
        a.check_ctx(b);
        FFElem r(a.ctx_, {});
        for (int i = 0; i < a.m(); ++i) {
            long s = a.c_[static_cast<std::size_t>(i)] - b.c_[static_cast<std::size_t>(i)];
            if (s < 0) s += a.p();
            r.c_[static_cast<std::size_t>(i)] = s;
        }
        return r;
    }
    FFElem operator-() const {
        FFElem r(ctx_, {});
        for (int i = 0; i < m(); ++i)
            r.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] == 0 ? 0 : p() - c_[static_cast<std::size_t>(i)];
        return r;
    }

    friend FFElem operator*(const FFElem& a, const FFElem& b);
    friend FFElem operator/(const FFElem& a, const FFElem& b);

    FFElem& operator+=(const FFElem& o) { return *this = *this + o; }
    FFElem& operator-=(const FFElem& o) { return *this = *this - o; }
    FFElem& operator*=(const FFElem& o) { return *this = *this * o; }
    FFElem& operator/=(const FFElem& o) { return *this = *this / o; }

    FFElem inverse() const;

    std::string str() const;

private:
    void check_ctx(const FFElem& o) const {
        require(ctx_ == o.ctx_, "field-mismatch", "operands from different finite fields");
    }

    const FFContext* ctx_;
    std::array<long, kMaxExtensionDegree> c_;

    friend class FiniteField;
};

// Field object for F_{p^m}; cheap to copy (one pointer).
class FiniteField {
public:
    using Elem = FFElem;

    explicit FiniteField(long p, int m = 1) : ctx_(FFContext::get(p, m)) {}

    long characteristic() const { return ctx_->p; }
    int degree() const { return ctx_->m; }
    const FFContext* ctx() const { return ctx_; }

    Elem zero() const { return FFElem(ctx_, {}); }
    Elem one() const { return from_integer(1); }

    Elem from_integer(long n) const {
        long r = n % ctx_->p;
        if (r < 0) r += ctx_->p;
        std::array<long, kMaxExtensionDegree> c{};
        c[0] = r;
        return FFElem(ctx_, c);
    }
    Elem from_integer(const mpz_class& n) const {
        mpz_class r = n % ctx_->p;
        if (r < 0) r += ctx_->p;
        return from_integer(r.get_si());
    }
    Elem from_rational(const Rational& q) const {
        Elem d = from_integer(q.den());
        require(!d.is_zero(), "domain",
                "denominator of " + q.str() + " vanishes in characteristic " + std::to_string(ctx_->p));
        return from_integer(q.num()) / d;
    }

    Elem element(const std::vector<long>& coords) const {
        require(static_cast<int>(coords.size()) <= ctx_->m, "argument", "too many coordinates for field element");
        std::array<long, kMaxExtensionDegree> c{};
        for (std::size_t i = 0; i < coords.size(); ++i) {
            long r = coords[i] % ctx_->p;
            if (r < 0) r += ctx_->p;
            c[i] = r;
        }
        return FFElem(ctx_, c);
    }

    // Generator x of the polynomial basis (only meaningful for m >= 2).
    Elem generator() const {
        std::array<long, kMaxExtensionDegree> c{};
        require(ctx_->m >= 2, "argument", "prime field has no extension generator");
        c[1] = 1;
        return FFElem(ctx_, c);
    }

    bool is_zero(const Elem& x) const { return x.is_zero(); }
    Elem inverse(const Elem& x) const { return x.inverse(); }

    // Whole field, in coordinate-counting order; guarded for small fields.
    std::vector<Elem> all_elements() const;

    // Canonical representative of the F_p-coset of x (first coordinate zeroed).
    Elem coset_key(const Elem& x) const {
        std::array<long, kMaxExtensionDegree> c{};
        for (int i = 1; i < ctx_->m; ++i) c[static_cast<std::size_t>(i)] = x.coord(i);
        return FFElem(ctx_, c);
    }

    // When b - a lies in the prime subfield, out = its bracket [b-a] in [0,p).
    bool subfield_gap(const Elem& a, const Elem& b, long& out) const {
        Elem d = b - a;
        if (!d.in_prime_subfield()) return false;
        out = d.coord(0);
        return true;
    }

    std::string describe() const {
        std::string s = "fp:" + std::to_string(ctx_->p);
        if (ctx_->m > 1) s += ":" + std::to_string(ctx_->m);
        return s;
    }

    friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.ctx_ == b.ctx_; }

private:
    const FFContext* ctx_;
};

// Minimal nonnegative integer lift of a prime-subfield element.
long bracket_lift(const FFElem& x);

} // namespace repglt
