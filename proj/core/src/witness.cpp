#include "repglt/drinfeld.hpp"

#include <cstdlib>

namespace repglt {
namespace {

bool small_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> divisors(long n) {
    n = std::labs(n);
    std::vector<long> out;
    for (long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d != n / d) out.push_back(n / d);
        }
    return out;
}

// den^deg * q(num/den), exactly
mpz_class scaled_eval(const std::vector<long>& c, long num, long den) {
    mpz_class acc(0), n(num), d(den);
    for (std::size_t i = c.size(); i-- > 0;) {
        mpz_class npow, dpow;
        mpz_pow_ui(npow.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(i));
        mpz_pow_ui(dpow.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(c.size() - 1 - i));
        acc += c[i] * npow * dpow;
    }
    return acc;
}

} // namespace

std::vector<WitnessPair> find_modular_specializations(const std::vector<long>& q, long bound) {
    std::vector<long> c = q;
    while (!c.empty() && c.back() == 0) c.pop_back();
    require(c.size() >= 2, "argument", "polynomial must be nonconstant");
    require(c.front() != 0, "argument", "polynomial has the rational root 0");

    for (long num : divisors(c.front()))
        for (long den : divisors(c.back()))
            for (int sign : {1, -1})
                require(scaled_eval(c, sign * num, den) != 0, "argument",
                        "polynomial has a rational root and admits no witness sequence");

    std::vector<WitnessPair> out;
    for (long p = 2; p <= bound; ++p) {
        if (!small_prime(p)) continue;
        for (long t = 0; t < p; ++t) {
            long acc = 0;
            for (std::size_t i = c.size(); i-- > 0;) {
                acc = (acc * t + c[i]) % p;
                if (acc < 0) acc += p;
            }
            if (acc == 0) out.push_back({t, p, p - t});
        }
    }
    return out;
}

} // namespace repglt
