#ifndef INCPOLY_HARNESS_SVG_HPP
#define INCPOLY_HARNESS_SVG_HPP

#include <string>

#include "incpoly/bounds.hpp"
#include "incpoly/hull.hpp"

namespace incpoly::harness {

struct Scene {
    RootList<double> roots;
    RootList<double> zeros;
    std::vector<Disc<double>> discs;
};

// SVG 1.1 document on a fixed 800x800 viewport: hull outline, roots as filled
// dots, zeros as crosses, discs as dashed circles. Pure text, deterministic.
std::string render_svg(const Scene& scene);

} // namespace incpoly::harness

#endif // INCPOLY_HARNESS_SVG_HPP
