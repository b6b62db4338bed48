#ifndef WARING_VERIFY_HPP
#define WARING_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace waring::verify {

struct CriterionResult {
    std::string id;      // "C1".."C9"
    std::string label;
    std::string detail;  // deterministic counts, no timings
    bool pass = false;
    bool note = false;     // informational (C9)
    bool skipped = false;  // budget exceeded
};

struct Options {
    std::uint64_t seed = 42;
    std::string suite = "all";   // apolarity | strata | partitions | hypersurface | all
    double budget_seconds = 0;   // 0 = unlimited; skipping makes the report partial
};

bool suite_known(const std::string& suite);

std::vector<CriterionResult> run(const Options& opts);

// One line per criterion; returns the process exit code (0 iff no criterion
// failed or was skipped).
int print_report(const std::vector<CriterionResult>& results, std::ostream& os);

}  // namespace waring::verify

#endif
