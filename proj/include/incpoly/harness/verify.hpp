#ifndef INCPOLY_HARNESS_VERIFY_HPP
#define INCPOLY_HARNESS_VERIFY_HPP

#include "incpoly/bounds.hpp"
#include "incpoly/harness/corpus.hpp"
#include "incpoly/harness/report.hpp"
#include "incpoly/hull.hpp"
#include "incpoly/majorization.hpp"

namespace incpoly::harness {

// Every check id, in report order.
const std::vector<std::string>& check_ids();
// Comma-separated ids, or "all". Throws ParseError on unknown ids.
std::vector<std::string> parse_check_selection(std::string_view csv);

inline constexpr double containment_tolerance = 1e-9;
inline constexpr double identity_tolerance = 1e-10;
inline constexpr double radius_tolerance = 1e-12;
inline constexpr double recovery_tolerance = 1e-9;
inline const std::vector<double> majorization_powers{1.0, 1.5, 2.0, 4.0};

// Checker primitives shared by instance verification and the self-test.
CheckResult containment_check(std::string id, const Hull<double>& hull, const RootList<double>& zeros, double tol);
CheckResult majorization_check(std::string id, const std::vector<MajorizationReport<double>>& reports);
CheckResult identity_check(std::string id, const Polynomial<double>& computed, const Polynomial<double>& expected,
                           double tol);
CheckResult disc_check(std::string id, const std::vector<ContainmentResult<double>>& results, double tol);

// Runs the selected checks (all when empty) in check_ids() order. Failures
// inside a check are recorded as violations with the error text.
VerificationReport verify_instance(const InstanceSpec& spec, const std::vector<std::string>& ids = {});

// Fabricated violating inputs pushed through each checker primitive. A sound
// checker reports every one of them as a violation.
VerificationReport self_test_report();

struct CheckAggregate {
    std::string id;
    std::size_t evaluated = 0;
    std::size_t violations = 0;
    double worst_margin = 0;
};

struct FuzzSummary {
    std::uint64_t seed = 0;
    std::string family;
    std::size_t trials = 0;
    std::vector<CheckAggregate> checks;
    // Shrunk failing instances, labelled with the failing check ids.
    std::vector<InstanceSpec> reproducers;

    std::size_t violations() const;
};

// family empty cycles through every family.
FuzzSummary run_fuzz(std::uint64_t seed, std::size_t trials, std::optional<Family> family);
Json to_json(const FuzzSummary& s);

// Greedily drops roots while the named checks still fail.
InstanceSpec shrink_instance(const InstanceSpec& spec, const std::vector<std::string>& failing);

} // namespace incpoly::harness

#endif // INCPOLY_HARNESS_VERIFY_HPP
