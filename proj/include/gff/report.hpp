#ifndef GFF_REPORT_HPP
#define GFF_REPORT_HPP

#include <string>
#include <vector>

namespace gff {

// One named residual with its threshold. Thresholds are computed alongside
// the residual (they may scale with the data) so a report is self-describing.
struct CheckResult {
    std::string name;
    double residual;
    double threshold;

    bool pass() const { return residual <= threshold; }
};

inline bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass()) return false;
    return true;
}

}  // namespace gff

#endif  // GFF_REPORT_HPP
