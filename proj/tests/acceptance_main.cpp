// Acceptance harness: runs every verification criterion and prints one
// PASS/FAIL line per criterion.  Exit status is the number of failures.

#include <chrono>
#include <cstdio>

#include "cfdiv/acceptance.hpp"

int main()
{
    int failures = 0;
    for (int id = 1; id <= cfdiv::kNumCriteria; ++id) {
        const auto start = std::chrono::steady_clock::now();
        cfdiv::CriterionResult r{id, "?", false, {}, {}};
        try {
            r = cfdiv::run_criterion(id);
        } catch (const std::exception& e) {
            r.failures.push_back(std::string("unhandled exception: ") +
                                 e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        std::printf("[%s] criterion %2d: %s (%.1fs)\n",
                    r.passed ? "PASS" : "FAIL", id, r.name.c_str(), secs);
        if (!r.passed) {
            ++failures;
            std::size_t shown = 0;
            for (const auto& msg : r.failures) {
                if (++shown > 8) {
                    std::printf("    ... %zu further failures\n",
                                r.failures.size() - 8);
                    break;
                }
                std::printf("    - %s\n", msg.c_str());
            }
        }
        std::fflush(stdout);
    }
    return failures;
}
