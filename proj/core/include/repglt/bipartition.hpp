#pragma once

#include <string>
#include <vector>

#include "repglt/error.hpp"

namespace repglt {

// Pair of partitions (λ•, λ∘) labeling the simple objects; rows weakly
// decreasing and positive.
struct Bipartition {
    std::vector<long> bullet;
    std::vector<long> circ;

    Bipartition() = default;
    Bipartition(std::vector<long> b, std::vector<long> c) : bullet(std::move(b)), circ(std::move(c)) {
        validate(bullet);
        validate(circ);
    }

    long size() const {
        long s = 0;
        for (long x : bullet) s += x;
        for (long x : circ) s += x;
        return s;
    }
    int length() const { return static_cast<int>(bullet.size() + circ.size()); }

    long bullet_row(int i) const { // 1-based, 0 beyond the partition
        return (i >= 1 && i <= static_cast<int>(bullet.size())) ? bullet[static_cast<std::size_t>(i - 1)] : 0;
    }
    long circ_row(int i) const {
        return (i >= 1 && i <= static_cast<int>(circ.size())) ? circ[static_cast<std::size_t>(i - 1)] : 0;
    }

    bool empty() const { return bullet.empty() && circ.empty(); }

    friend bool operator==(const Bipartition& a, const Bipartition& b) {
        return a.bullet == b.bullet && a.circ == b.circ;
    }

    static void validate(const std::vector<long>& part) {
        for (std::size_t i = 0; i < part.size(); ++i) {
            require(part[i] > 0, "argument", "partition entries must be positive");
            if (i) require(part[i - 1] >= part[i], "argument", "partition must be weakly decreasing");
        }
    }
};

// (λ|_n)_i = λ•_i − λ∘_{n−i+1}; weakly decreasing whenever n ≥ l(λ).
inline std::vector<long> restrict_bipartition(const Bipartition& bp, int n) {
    require(n >= bp.length(), "argument",
            "restriction undefined: rank " + std::to_string(n) + " below length " + std::to_string(bp.length()));
    std::vector<long> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        w[static_cast<std::size_t>(i - 1)] = bp.bullet_row(i) - bp.circ_row(n - i + 1);
    return w;
}

} // namespace repglt
