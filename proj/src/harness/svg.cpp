#include "incpoly/harness/svg.hpp"

#include <cstdio>
#include <sstream>

namespace incpoly::harness {

namespace {

    constexpr double size = 800;
    constexpr double pad = 40;

    std::string num(double x)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", x == 0 ? 0.0 : x);
        return buf;
    }

    struct Frame {
        double cx, cy, unit;

        double x(std::complex<double> z) const { return size / 2 + (z.real() - cx) * unit; }
        double y(std::complex<double> z) const { return size / 2 - (z.imag() - cy) * unit; }
    };

    Frame fit(const Scene& s)
    {
        double lo_x = 1e300, hi_x = -1e300, lo_y = 1e300, hi_y = -1e300;
        const auto add = [&](std::complex<double> z, double r) {
            lo_x = std::min(lo_x, z.real() - r);
            hi_x = std::max(hi_x, z.real() + r);
            lo_y = std::min(lo_y, z.imag() - r);
            hi_y = std::max(hi_y, z.imag() + r);
        };
        for (Index i = 0; i < s.roots.size(); ++i)
            add(s.roots[i], 0);
        for (Index i = 0; i < s.zeros.size(); ++i)
            add(s.zeros[i], 0);
        for (const auto& d : s.discs)
            add(d.center, d.radius);
        if (lo_x > hi_x)
            return {0, 0, 1};
        const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
        return {(lo_x + hi_x) / 2, (lo_y + hi_y) / 2, (size - 2 * pad) / span};
    }

} // namespace

std::string render_svg(const Scene& s)
{
    const Frame f = fit(s);
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" "
           "viewBox=\"0 0 800 800\">\n"
        << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";

    for (const auto& d : s.discs)
        out << "  <circle cx=\"" << num(f.x(d.center)) << "\" cy=\"" << num(f.y(d.center)) << "\" r=\""
            << num(d.radius * f.unit) << "\" fill=\"none\" stroke=\"#3366cc\" stroke-dasharray=\"6 4\"/>\n";

    if (s.roots.size() > 0) {
        const Hull<double> h = convex_hull(s.roots);
        if (h.kind == Hull<double>::Kind::polygon) {
            out << "  <polygon points=\"";
            for (std::size_t i = 0; i < h.vertices.size(); ++i)
                out << (i ? " " : "") << num(f.x(h.vertices[i])) << "," << num(f.y(h.vertices[i]));
            out << "\" fill=\"none\" stroke=\"black\"/>\n";
        } else if (h.kind == Hull<double>::Kind::segment) {
            out << "  <line x1=\"" << num(f.x(h.vertices[0])) << "\" y1=\"" << num(f.y(h.vertices[0])) << "\" x2=\""
                << num(f.x(h.vertices[1])) << "\" y2=\"" << num(f.y(h.vertices[1])) << "\" stroke=\"black\"/>\n";
        }
    }

    for (Index i = 0; i < s.roots.size(); ++i)
        out << "  <circle cx=\"" << num(f.x(s.roots[i])) << "\" cy=\"" << num(f.y(s.roots[i]))
            << "\" r=\"4\" fill=\"black\"/>\n";

    for (Index i = 0; i < s.zeros.size(); ++i) {
        const double x = f.x(s.zeros[i]), y = f.y(s.zeros[i]);
        out << "  <path d=\"M " << num(x - 5) << " " << num(y - 5) << " L " << num(x + 5) << " " << num(y + 5)
            << " M " << num(x - 5) << " " << num(y + 5) << " L " << num(x + 5) << " " << num(y - 5)
            << "\" stroke=\"#cc3333\" stroke-width=\"2\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace incpoly::harness
