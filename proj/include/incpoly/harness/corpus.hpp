#ifndef INCPOLY_HARNESS_CORPUS_HPP
#define INCPOLY_HARNESS_CORPUS_HPP

#include <array>
#include <string_view>

#include "incpoly/harness/instance.hpp"

namespace incpoly::harness {

enum class Family { uniform_disc, real_rooted, clustered, repeated_roots, boundary_gamma };
enum class GammaFamily { uniform, random, boundary };

inline constexpr std::array<Family, 5> all_families{Family::uniform_disc, Family::real_rooted, Family::clustered,
                                                   Family::repeated_roots, Family::boundary_gamma};

std::string_view family_name(Family f);
Family parse_family(std::string_view name);
std::string_view gamma_family_name(GammaFamily g);

// Roots for a family, n uniform in [min_n, max_n]:
//   uniform-disc    radius sqrt(u) * 2, uniform angle
//   real-rooted     uniform on [-2, 2]
//   clustered       1 to 3 uniform-disc centers, offsets of radius <= 0.05
//   repeated-roots  distinct uniform-disc points, each used twice (one single
//                   left over when n is odd), shuffled
//   boundary-gamma  uniform-disc roots
// The repeated-roots family never takes boundary weights: those can make
// double zeros of the combination, which double precision only resolves to
// about 1e-8.
InstanceSpec generate_instance(Family f, GammaFamily g, std::uint64_t seed, Index min_n = 2, Index max_n = 12);

// The default weight family for a family and trial index: boundary for
// boundary-gamma, otherwise cycling uniform / random / boundary (uniform /
// random for repeated-roots).
GammaFamily gamma_family_for(Family f, std::uint64_t trial);

// count instances cycling through every family, instance i seeded with
// derive_seed(seed, i).
std::vector<InstanceSpec> seeded_corpus(std::uint64_t seed, std::size_t count);

} // namespace incpoly::harness

#endif // INCPOLY_HARNESS_CORPUS_HPP
