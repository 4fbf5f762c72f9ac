#ifndef CFDIV_ACCEPTANCE_HPP_
#define CFDIV_ACCEPTANCE_HPP_

#include <map>
#include <string>
#include <vector>

namespace cfdiv {

/** Outcome of one verification criterion (see run_criterion). */
struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::vector<std::string> failures;      // empty when passed
    std::map<std::string, double> metrics;  // headline numbers for reports
};

/** Runs verification criterion id in [1, 16]. */
CriterionResult run_criterion(int id);

constexpr int kNumCriteria = 16;

/** CLI suite names mapped to their criterion id. */
const std::map<std::string, int>& suite_criteria();

}  // namespace cfdiv

#endif  // CFDIV_ACCEPTANCE_HPP_
