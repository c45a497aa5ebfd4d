#include "repglt/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace repglt {
namespace {

using Poly = std::vector<long>; // ascending coefficients mod p

long mulmod(long a, long b, long p) {
    return static_cast<long>(static_cast<__int128>(a) * b % p);
}

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    return trim(r);
}

// a mod f, f monic
Poly poly_mod(Poly a, const Poly& f, long p) {
    a = trim(std::move(a));
    while (a.size() >= f.size()) {
        long lead = a.back();
        std::size_t shift = a.size() - f.size();
        if (lead != 0)
            for (std::size_t i = 0; i < f.size(); ++i) {
                long& c = a[i + shift];
                c = (c - mulmod(lead, f[i], p)) % p;
                if (c < 0) c += p;
            }
        a = trim(std::move(a));
    }
    return a;
}

Poly poly_powmod(Poly base, long e, const Poly& f, long p) {
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) r = poly_mod(poly_mul(r, base, p), f, p);
        base = poly_mod(poly_mul(base, base, p), f, p);
        e >>= 1;
    }
    return r;
}

long inv_mod(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt; t = nt; nt = tmp;
        tmp = r - q * nr; r = nr; nr = tmp;
    }
    require(r == 1, "domain", "inverse of zero residue");
    return t < 0 ? t + p : t;
}

Poly poly_gcd(Poly a, Poly b, long p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        // make b monic before reducing
        long inv = inv_mod(b.back(), p);
        for (auto& c : b) c = mulmod(c, inv, p);
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin test: f monic of degree m is irreducible over F_p iff
// x^(p^m) == x (mod f) and gcd(x^(p^(m/q)) - x, f) = 1 for prime q | m.
bool irreducible(const Poly& f, long p, int m) {
    auto frob_iter = [&](int k) {
        Poly x{0, 1};
        Poly r = x;
        for (int i = 0; i < k; ++i) r = poly_powmod(r, p, f, p);
        return r;
    };
    Poly xm = frob_iter(m);
    Poly x{0, 1};
    // xm - x == 0 ?
    Poly diff = xm;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] - 1) % p;
    if (diff[1] < 0) diff[1] += p;
    if (!trim(diff).empty()) return false;
    for (int q : {2, 3}) {
        if (m % q != 0) continue;
        Poly xq = frob_iter(m / q);
        Poly d = xq;
        d.resize(std::max<std::size_t>(d.size(), 2), 0);
        d[1] = (d[1] - 1) % p;
        if (d[1] < 0) d[1] += p;
        d = trim(d);
        if (d.empty()) return false;
        Poly g = poly_gcd(f, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

bool is_prime(long p) {
    if (p < 2) return false;
    mpz_class z(static_cast<long>(p));
    return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

} // namespace

const FFContext* FFContext::get(long p, int m) {
    require(is_prime(p), "argument", "characteristic " + std::to_string(p) + " is not prime");
    require(m >= 1 && m <= kMaxExtensionDegree, "argument",
            "extension degree must lie in [1, " + std::to_string(kMaxExtensionDegree) + "]");

    static std::mutex mu;
    static std::map<std::pair<long, int>, std::unique_ptr<FFContext>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = registry[{p, m}];
    if (slot) return slot.get();

    auto ctx = std::make_unique<FFContext>();
    ctx->p = p;
    ctx->m = m;
    if (m == 1) {
        ctx->modulus = {0, 1}; // x, by convention; unused for arithmetic
    } else {
        // scan monic x^m + c_{m-1}x^{m-1} + ... + c_0 in counting order
        std::vector<long> c(static_cast<std::size_t>(m), 0);
        bool found = false;
        while (!found) {
            Poly f(c.begin(), c.end());
            f.push_back(1);
            if (irreducible(f, p, m)) {
                ctx->modulus = f;
                found = true;
                break;
            }
            int i = 0;
            for (; i < m; ++i) {
                if (++c[static_cast<std::size_t>(i)] < p) break;
                c[static_cast<std::size_t>(i)] = 0;
            }
            require(i < m, "construction", "no irreducible modulus found"); // cannot happen
        }
    }
    slot = std::move(ctx);
    return slot.get();
}

FFElem operator*(const FFElem& a, const FFElem& b) {
    a.check_ctx(b);
    const long p = a.p();
    const int m = a.m();
    FFElem r(a.ctx_, {});
    if (m == 1) {
        r.c_[0] = mulmod(a.c_[0], b.c_[0], p);
        return r;
    }
    std::array<long, 2 * kMaxExtensionDegree - 1> prod{};
    for (int i = 0; i < m; ++i) {
        if (a.c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < m; ++j)
            prod[static_cast<std::size_t>(i + j)] =
                (prod[static_cast<std::size_t>(i + j)] +
                 mulmod(a.c_[static_cast<std::size_t>(i)], b.c_[static_cast<std::size_t>(j)], p)) % p;
    }
    const auto& f = a.ctx_->modulus;
    for (int d = 2 * m - 2; d >= m; --d) {
        long lead = prod[static_cast<std::size_t>(d)];
        if (lead == 0) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        for (int i = 0; i < m; ++i) {
            long& c = prod[static_cast<std::size_t>(d - m + i)];
            c = (c - mulmod(lead, f[static_cast<std::size_t>(i)], p)) % p;
            if (c < 0) c += p;
        }
    }
    for (int i = 0; i < m; ++i) r.c_[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
    return r;
}

FFElem FFElem::inverse() const {
    require(!is_zero(), "domain", "inverse of zero field element");
    const long p = this->p();
    if (m() == 1) {
        FFElem r(ctx_, {});
        r.c_[0] = inv_mod(c_[0], p);
        return r;
    }
    // extended Euclid in F_p[x] against the modulus
    Poly r0(ctx_->modulus), r1(c_.begin(), c_.begin() + m());
    r1 = trim(std::move(r1));
    Poly s0{}, s1{1};
    while (true) {
        long inv = inv_mod(r1.back(), p);
        Poly r1m = r1, s1m = s1;
        for (auto& c : r1m) c = mulmod(c, inv, p);
        for (auto& c : s1m) c = mulmod(c, inv, p);
        if (r1m.size() == 1) {
            s1m = poly_mod(std::move(s1m), ctx_->modulus, p);
            FFElem out(ctx_, {});
            for (std::size_t i = 0; i < s1m.size(); ++i) out.c_[i] = s1m[i];
            return out;
        }
        // r0 = q*r1m + rem
        Poly rem = r0, q(r0.size(), 0);
        while (rem.size() >= r1m.size()) {
            long lead = rem.back();
            std::size_t shift = rem.size() - r1m.size();
            q[shift] = (q[shift] + lead) % p;
            for (std::size_t i = 0; i < r1m.size(); ++i) {
                long& c = rem[i + shift];
                c = (c - mulmod(lead, r1m[i], p)) % p;
                if (c < 0) c += p;
            }
            rem = trim(std::move(rem));
        }
        Poly snew = s0;
        Poly qs = poly_mul(q, s1m, p);
        snew.resize(std::max(snew.size(), qs.size()), 0);
        for (std::size_t i = 0; i < qs.size(); ++i) {
            snew[i] = (snew[i] - qs[i]) % p;
            if (snew[i] < 0) snew[i] += p;
        }
        r0 = r1m;
        r1 = std::move(rem);
        s0 = s1m;
        s1 = trim(std::move(snew));
        require(!r1.empty(), "domain", "element not invertible"); // cannot happen in a field
    }
}

FFElem operator/(const FFElem& a, const FFElem& b) { return a * b.inverse(); }

std::string FFElem::str() const {
    std::string s = "[";
    for (int i = 0; i < m(); ++i) {
        if (i) s += ",";
        s += std::to_string(coord(i));
    }
    s += "]@" + std::to_string(p());
    if (m() > 1) s += "^" + std::to_string(m());
    return s;
}

std::vector<FFElem> FiniteField::all_elements() const {
    double count = 1;
    for (int i = 0; i < ctx_->m; ++i) count *= static_cast<double>(ctx_->p);
    require(count <= 1e6, "size", "field too large to enumerate");
    std::vector<FFElem> out;
    out.reserve(static_cast<std::size_t>(count));
    std::array<long, kMaxExtensionDegree> c{};
    while (true) {
        out.push_back(FFElem(ctx_, c));
        int i = 0;
        for (; i < ctx_->m; ++i) {
            if (++c[static_cast<std::size_t>(i)] < ctx_->p) break;
            c[static_cast<std::size_t>(i)] = 0;
        }
        if (i == ctx_->m) break;
    }
    return out;
}

long bracket_lift(const FFElem& x) {
    require(x.in_prime_subfield(), "domain", "element lies outside the prime subfield");
    return x.coord(0);
}

} // namespace repglt
