#ifndef INCPOLY_HARNESS_INSTANCE_HPP
#define INCPOLY_HARNESS_INSTANCE_HPP

#include <cstdint>
#include <optional>

#include "incpoly/harness/io.hpp"
#include "incpoly/polynomial.hpp"

namespace incpoly::harness {

// A problem instance as read from or written to JSON. Indices are 0-based in
// memory and 1-based in JSON ("pivot", "pairs").
struct InstanceSpec {
    std::vector<std::complex<double>> roots;
    // Absent means uniform.
    std::optional<std::vector<double>> gamma;
    std::optional<Index> pivot;
    std::string label;
    std::optional<std::uint64_t> seed;
    // Explicit g_ij weights for the pairwise combination.
    std::vector<PairWeight> pairs;
    // Ascending coefficients of a decomposition target.
    std::optional<std::vector<std::complex<double>>> target;
    // A point for hull recovery.
    std::optional<std::complex<double>> point;

    Index size() const noexcept { return static_cast<Index>(roots.size()); }
    RootList<double> root_list() const;
    Weights<double> weights() const;
    Index pivot_or_last() const;
    Polynomial<double> target_polynomial() const;
};

// Throws ParseError on malformed input, unknown keys or inconsistent lengths.
InstanceSpec instance_from_json(const Json& j);
Json to_json(const InstanceSpec& spec);
InstanceSpec read_instance(const std::string& path);

} // namespace incpoly::harness

#endif // INCPOLY_HARNESS_INSTANCE_HPP
