#ifndef INCPOLY_HARNESS_REPORT_HPP
#define INCPOLY_HARNESS_REPORT_HPP

#include "incpoly/harness/instance.hpp"

namespace incpoly::harness {

std::string artifact_version();

// A check holds iff margin >= -tolerance. Margins are signed slack: positive
// means room to spare, negative means the inequality was missed by that much.
struct CheckResult {
    std::string id;
    bool holds = true;
    double margin = 0;
    double tolerance = 0;
    double runtime_s = 0;
    std::string detail;
};

bool within_tolerance(double margin, double tolerance);

struct VerificationReport {
    std::string version = artifact_version();
    std::optional<std::uint64_t> seed;
    std::optional<InstanceSpec> instance;
    std::vector<CheckResult> checks;

    bool all_hold() const;
};

// Field order is fixed. Runtimes are emitted only when timing is set so that
// default output is byte-for-byte reproducible.
Json to_json(const VerificationReport& r, bool timing = false);
VerificationReport report_from_json(const Json& j);

// Recomputes each verdict from its margin and tolerance; a check passes only
// if both the recorded and recomputed verdicts hold.
VerificationReport recheck(VerificationReport r);

} // namespace incpoly::harness

#endif // INCPOLY_HARNESS_REPORT_HPP
