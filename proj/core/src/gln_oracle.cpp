#include "repglt/verma.hpp"

#include <algorithm>

namespace repglt {

mpz_class weyl_dim(const std::vector<long>& lambda) {
    const int n = static_cast<int>(lambda.size());
    for (int i = 0; i + 1 < n; ++i)
        require(lambda[static_cast<std::size_t>(i)] >= lambda[static_cast<std::size_t>(i + 1)], "argument",
                "weight is not dominant");
    mpz_class num(1), den(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            num *= lambda[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(j)] + j - i;
            den *= j - i;
        }
    return num / den;
}

std::vector<PbwExps> kostant_monomials(const LieData& d, const std::vector<long>& offset) {
    std::vector<PbwExps> out;
    long sum = 0;
    for (long x : offset) sum += x;
    if (sum != 0) return out;

    if (d.n == 2) {
        // single root (1,0): offset must be (-x, x)
        long x = offset[1];
        if (x >= 0 && offset[0] == -x && x <= INT32_MAX) {
            PbwExps m{};
            m[0] = static_cast<int>(x);
            out.push_back(m);
        }
        return out;
    }
    // roots (1,0), (2,0), (2,1) with exponents x, y, z:
    // offset = (-x - y, x - z, y + z)
    for (long x = std::max(0L, offset[1]); x <= -offset[0]; ++x) {
        long y = -offset[0] - x;
        long z = x - offset[1];
        if (y < 0 || z < 0) continue;
        if (y + z != offset[2]) continue;
        PbwExps m{};
        m[0] = static_cast<int>(x);
        m[1] = static_cast<int>(y);
        m[2] = static_cast<int>(z);
        out.push_back(m);
    }
    return out;
}

std::vector<std::vector<long>> irreducible_weight_offsets(const std::vector<long>& lambda) {
    const int n = static_cast<int>(lambda.size());
    const long hi = lambda.front(), lo = lambda.back();
    long total = 0;
    for (long x : lambda) total += x;

    auto dominated = [&](std::vector<long> mu) {
        std::sort(mu.begin(), mu.end(), std::greater<long>());
        long ps = 0, pl = 0;
        for (int i = 0; i < n; ++i) {
            ps += mu[static_cast<std::size_t>(i)];
            pl += lambda[static_cast<std::size_t>(i)];
            if (ps > pl) return false;
        }
        return true;
    };

    std::vector<std::vector<long>> out;
    std::vector<long> mu(static_cast<std::size_t>(n), lo);
    while (true) {
        long s = 0;
        for (long x : mu) s += x;
        if (s == total && dominated(mu)) {
            std::vector<long> off(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) off[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)] - lambda[static_cast<std::size_t>(i)];
            out.push_back(off);
        }
        int i = 0;
        for (; i < n; ++i) {
            if (++mu[static_cast<std::size_t>(i)] <= hi) break;
            mu[static_cast<std::size_t>(i)] = lo;
        }
        if (i == n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace repglt
