#include "repglt/modular_weyl.hpp"

#include <numeric>

namespace repglt {

bool linkage_condition(const std::vector<long>& lambda, const std::vector<long>& mu, long p) {
    require(lambda.size() == mu.size(), "argument", "weight length mismatch");
    require(p >= 3, "argument", "odd prime required");
    const int n = static_cast<int>(lambda.size());
    std::vector<long> lrho(static_cast<std::size_t>(n)), mrho(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        lrho[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (n - 1 - i);
        mrho[static_cast<std::size_t>(i)] = mu[static_cast<std::size_t>(i)] + (n - 1 - i);
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = (lrho[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] -
                  mrho[static_cast<std::size_t>(i)]) % p == 0;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

ScanReport bound_scan(int n, long max_gap, const std::vector<long>& primes, long dim_bound) {
    require(n == 2 || n == 3, "argument", "rank must be 2 or 3");
    ScanReport report;
    report.n = n;

    std::vector<std::vector<long>> lambdas;
    if (n == 2) {
        for (long g = 0; g <= max_gap; ++g) lambdas.push_back({g, 0});
    } else {
        for (long a = 0; a <= max_gap; ++a)
            for (long b = 0; b <= a; ++b) lambdas.push_back({a, b, 0});
    }

    for (const auto& lambda : lambdas)
        for (long p : primes) {
            ScanCell cell;
            cell.lambda = lambda;
            cell.p = p;
            cell.bound_satisfied = p > lambda.front() - lambda.back() + n;
            try {
                auto mod = weyl_module_modp(p, lambda, dim_bound);
                cell.outcome = "ok";
                auto report_s = singular_vectors(mod);
                for (const auto& line : report_s.lines) {
                    std::vector<long> w = lambda;
                    for (std::size_t i = 0; i < w.size(); ++i) w[i] += line.weight_offset[i];
                    if (std::find(cell.singular_weights.begin(), cell.singular_weights.end(), w) ==
                        cell.singular_weights.end())
                        cell.singular_weights.push_back(w);
                }
                cell.irreducible = is_irreducible(mod);
                for (const auto& w : cell.singular_weights)
                    if (w != lambda && !linkage_condition(lambda, w, p)) cell.linkage_holds = false;
            } catch (const Error& e) {
                if (e.code() != "truncation-exceeded") throw;
                cell.outcome = "truncation-exceeded";
            }
            std::size_t idx = report.cells.size();
            if (cell.bound_satisfied && !(cell.outcome == "ok" && cell.irreducible))
                report.bound_violations.push_back(idx);
            if (!cell.bound_satisfied && cell.outcome == "ok" && !cell.irreducible)
                report.reducible_below_bound.push_back(idx);
            report.cells.push_back(std::move(cell));
        }
    return report;
}

std::string scan_report_csv(const ScanReport& report) {
    std::string out = "lambda,p,bound_satisfied,outcome,irreducible,singular_weights,linkage_holds\n";
    auto join = [](const std::vector<long>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(v[i]);
        }
        return s;
    };
    for (const auto& c : report.cells) {
        out += join(c.lambda) + "," + std::to_string(c.p) + "," + (c.bound_satisfied ? "1" : "0") + "," +
               c.outcome + "," + (c.outcome == "ok" && c.irreducible ? "1" : "0") + ",";
        for (std::size_t i = 0; i < c.singular_weights.size(); ++i) {
            if (i) out += "|";
            out += join(c.singular_weights[i]);
        }
        out += std::string(",") + (c.linkage_holds ? "1" : "0") + "\n";
    }
    return out;
}

} // namespace repglt
