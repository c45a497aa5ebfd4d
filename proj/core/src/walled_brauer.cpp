#include "repglt/walled_brauer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "repglt/verma.hpp"

namespace repglt {
namespace {

long factorial(long n) {
    long f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

Matching permutation_matching(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<int> partner(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        partner[static_cast<std::size_t>(i)] = n + sigma[static_cast<std::size_t>(i)];
        partner[static_cast<std::size_t>(n + sigma[static_cast<std::size_t>(i)])] = i;
    }
    ObjectWord w{n, 0};
    return Matching(w, w, std::move(partner));
}

// enumerate all permutations of each block of a set partition, composed into
// one permutation of {0..n-1}; callback receives (perm, parity)
void for_each_block_permutation(int n, const std::vector<std::vector<int>>& blocks,
                                const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<std::vector<int>> perms(blocks.size());
    std::function<void(std::size_t, std::vector<int>&, int)> rec =
        [&](std::size_t bi, std::vector<int>& acc, int parity) {
            if (bi == blocks.size()) {
                fn(acc, parity);
                return;
            }
            const auto& block = blocks[bi];
            std::vector<int> idx(block.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end());
            do {
                // parity of this arrangement
                int inv = 0;
                for (std::size_t i = 0; i < idx.size(); ++i)
                    for (std::size_t j = i + 1; j < idx.size(); ++j)
                        if (idx[i] > idx[j]) ++inv;
                for (std::size_t i = 0; i < block.size(); ++i)
                    acc[static_cast<std::size_t>(block[i])] = block[static_cast<std::size_t>(idx[i])];
                rec(bi + 1, acc, parity ^ (inv & 1));
            } while (std::next_permutation(idx.begin(), idx.end()));
        };
    std::vector<int> acc(static_cast<std::size_t>(n));
    std::iota(acc.begin(), acc.end(), 0);
    rec(0, acc, 0);
}

} // namespace

GramData gram_matrix(int r, int s, long bound) {
    require(r >= 0 && s >= 0, "argument", "negative object word");
    require(factorial(r + s) <= bound, "size",
            "algebra dimension " + std::to_string(factorial(r + s)) + " exceeds the bound");
    ObjectWord w{r, s};
    GramData g;
    g.basis = enumerate_matchings(w, w);
    const std::size_t d = g.basis.size();
    g.entries.assign(d, std::vector<UniPolyT>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            auto comp = compose_matchings(g.basis[i], g.basis[j]);
            UniPolyT entry = UniPolyT(1).shifted_up(comp.loops + closure_loops(comp.matching));
            g.entries[i][j] = entry;
            g.entries[j][i] = entry;
        }
    return g;
}

UniPolyT poly_matrix_det(std::vector<std::vector<UniPolyT>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return UniPolyT(1);
    UniPolyT prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].is_zero()) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) { swap = i; break; }
            if (swap < 0) return UniPolyT();
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(swap)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                UniPolyT num = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)]
                             - m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num.exact_divide(prev);
            }
        prev = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    UniPolyT det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign < 0 ? -det : det;
}

UniPolyT gram_determinant(int r, int s, long bound) {
    return poly_matrix_det(gram_matrix(r, s, bound).entries);
}

mpz_class symmetric_group_dim(const std::vector<long>& lambda) {
    Bipartition::validate(lambda);
    long n = 0;
    for (long x : lambda) n += x;
    std::vector<long> conj;
    for (long j = 0; !lambda.empty() && j < lambda.front(); ++j) {
        long c = 0;
        for (long x : lambda)
            if (x > j) ++c;
        conj.push_back(c);
    }
    mpz_class hooks(1);
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (long j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j) + (conj[static_cast<std::size_t>(j)] - static_cast<long>(i)) - 1;
    mpz_class fact(1);
    for (long i = 2; i <= n; ++i) fact *= i;
    return fact / hooks;
}

DiagramLC young_symmetrizer(const std::vector<long>& lambda, long bound) {
    Bipartition::validate(lambda);
    long n = 0;
    for (long x : lambda) n += x;
    require(n >= 1, "argument", "empty partition has no symmetrizer");
    require(n <= bound, "size", "partition size exceeds the bound");

    // canonical tableau: fill rows left to right, top to bottom
    std::vector<std::vector<int>> rows, cols;
    int next = 0;
    for (long len : lambda) {
        std::vector<int> row;
        for (long j = 0; j < len; ++j) row.push_back(next++);
        rows.push_back(row);
    }
    for (long j = 0; !lambda.empty() && j < lambda.front(); ++j) {
        std::vector<int> col;
        for (std::size_t i = 0; i < lambda.size(); ++i)
            if (lambda[i] > j) col.push_back(rows[i][static_cast<std::size_t>(j)]);
        cols.push_back(col);
    }

    ObjectWord w{static_cast<int>(n), 0};
    DiagramLC c(w, w);
    for_each_block_permutation(static_cast<int>(n), rows, [&](const std::vector<int>& p, int) {
        for_each_block_permutation(static_cast<int>(n), cols, [&](const std::vector<int>& q, int q_par) {
            // group-algebra product p·q acts as the composite permutation p∘q
            std::vector<int> pq(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                pq[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(q[static_cast<std::size_t>(i)])];
            c.add_term(permutation_matching(pq), UniPolyT(q_par ? -1 : 1));
        });
    });
    return c;
}

UniPolyT young_symmetrizer_dimension(const std::vector<long>& lambda, long bound) {
    DiagramLC c = young_symmetrizer(lambda, bound);
    long n = 0;
    for (long x : lambda) n += x;
    mpz_class fact(1);
    for (long i = 2; i <= n; ++i) fact *= i;
    Rational h{fact, symmetric_group_dim(lambda)}; // hook-length content |λ|!/dim
    return closure_trace(c).scaled(h.inverse());
}

UniPolyT dimension_poly_interpolated(const Bipartition& lambda, long bound) {
    require(lambda.size() <= bound, "size", "bipartition size exceeds the bound");
    const long n0 = lambda.size() + lambda.length() + 1;
    std::vector<std::pair<Rational, Rational>> pts;
    for (long n = n0; n <= n0 + lambda.size(); ++n) {
        auto w = restrict_bipartition(lambda, static_cast<int>(n));
        pts.push_back({Rational(n), Rational(weyl_dim(w))});
    }
    return lagrange_interpolate(pts);
}

} // namespace repglt
