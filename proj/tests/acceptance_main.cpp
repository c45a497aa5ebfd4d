#include <cstdlib>
#include <iostream>
#include <string>

#include "repglt/selftest.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 1;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    auto results = repglt::run_acceptance(seed);
    std::cout << repglt::acceptance_table(results);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES PRESENT") << "\n";
    return all ? 0 : 1;
}
