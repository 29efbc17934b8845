#ifndef INCPOLY_HULL_HPP
#define INCPOLY_HULL_HPP

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "incpoly/polynomial.hpp"

namespace incpoly {

// Convex hull of a planar point set, degenerate-aware.
template <class Real = double>
struct Hull {
    enum class Kind { point, segment, polygon };

    Kind kind = Kind::point;
    // Counterclockwise, starting at the lexicographically smallest (re, im)
    // vertex. A segment lists its two endpoints in that order.
    std::vector<Complex<Real>> vertices;
    // For every vertex, the first index in the generating list holding it.
    std::vector<Index> source_indices;
};

namespace detail {

    template <class Real>
    Real cross(const Complex<Real>& o, const Complex<Real>& a, const Complex<Real>& b)
    {
        const Complex<Real> u = a - o, v = b - o;
        return u.real() * v.imag() - u.imag() * v.real();
    }

    template <class Real>
    Real segment_distance(const Complex<Real>& z, const Complex<Real>& p, const Complex<Real>& q)
    {
        const Complex<Real> d = q - p;
        const Real len2 = std::norm(d);
        if (len2 == Real(0))
            return std::abs(z - p);
        Real s = (std::conj(d) * (z - p)).real() / len2;
        s = std::clamp(s, Real(0), Real(1));
        return std::abs(z - (p + s * d));
    }

} // namespace detail

template <class Real>
Real default_tolerance(const RootList<Real>& roots)
{
    return Real(1e-9) * scale_of(roots);
}

// Andrew's monotone chain on lexicographic (re, im) order. Turns with
// |cross| <= 1e-12 * scale^2 count as collinear and are dropped.
template <class Real>
Hull<Real> convex_hull(const RootList<Real>& points)
{
    const Index n = points.size();
    if (n < 1)
        throw InvalidArgument("convex_hull: empty point set");
    require_finite(points, "convex_hull");
    const Real scale = scale_of(points);
    const Real flat = Real(1e-12) * scale * scale;

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index(0));
    std::stable_sort(order.begin(), order.end(), [&](Index x, Index y) {
        if (points[x].real() != points[y].real())
            return points[x].real() < points[y].real();
        return points[x].imag() < points[y].imag();
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](Index x, Index y) { return points[x] == points[y]; }),
                order.end());

    Hull<Real> h;
    const Index first = order.front();
    Real spread(0);
    for (Index i : order)
        spread = std::max(spread, std::abs(points[i] - points[first]));
    if (order.size() == 1 || spread <= Real(1e-12) * scale) {
        h.kind = Hull<Real>::Kind::point;
        h.vertices = {points[first]};
        h.source_indices = {first};
        return h;
    }

    std::vector<Index> chain(2 * order.size());
    std::size_t k = 0;
    for (Index i : order) {
        while (k >= 2 && detail::cross(points[chain[k - 2]], points[chain[k - 1]], points[i]) <= flat)
            --k;
        chain[k++] = i;
    }
    for (std::size_t idx = order.size() - 1, lower = k + 1; idx-- > 0;) {
        const Index i = order[idx];
        while (k >= lower && detail::cross(points[chain[k - 2]], points[chain[k - 1]], points[i]) <= flat)
            --k;
        chain[k++] = i;
    }
    chain.resize(k - 1);

    if (chain.size() < 3) {
        h.kind = Hull<Real>::Kind::segment;
        const Index last = order.back();
        h.vertices = {points[first], points[last]};
        h.source_indices = {first, last};
        return h;
    }
    h.kind = Hull<Real>::Kind::polygon;
    for (Index i : chain) {
        h.vertices.push_back(points[i]);
        h.source_indices.push_back(i);
    }
    return h;
}

// Distance to the boundary, positive inside a polygon and negative outside.
// Points and segments have empty interior, so the value is never positive.
template <class Real>
Real signed_distance(const Hull<Real>& h, const Complex<Real>& z)
{
    const auto& v = h.vertices;
    switch (h.kind) {
    case Hull<Real>::Kind::point:
        return -std::abs(z - v[0]);
    case Hull<Real>::Kind::segment:
        return -detail::segment_distance(z, v[0], v[1]);
    case Hull<Real>::Kind::polygon:
        break;
    }
    bool inside = true;
    Real nearest = std::numeric_limits<Real>::infinity();
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Complex<Real>& p = v[i];
        const Complex<Real>& q = v[(i + 1) % v.size()];
        if (detail::cross(p, q, z) < Real(0))
            inside = false;
        nearest = std::min(nearest, detail::segment_distance(z, p, q));
    }
    return inside ? nearest : -nearest;
}

// Closed-hull membership with boundary slack: "in or on" the hull.
template <class Real>
bool contains(const Hull<Real>& h, const Complex<Real>& z, Real tol)
{
    if (tol < Real(0))
        throw InvalidArgument("contains: negative tolerance");
    return signed_distance(h, z) >= -tol;
}

// Convex coordinates t (support of at most three points) with
// sum t_i (a - z_i) = 0. Polygons are fan-triangulated from their first
// vertex; the triangle whose smallest barycentric coordinate is largest wins.
template <class Real>
Weights<Real> barycentric_t(const RootList<Real>& roots, const Complex<Real>& a)
{
    const Hull<Real> h = convex_hull(roots);
    const Real tol = default_tolerance(roots);
    const Real sd = signed_distance(h, a);
    if (sd < -tol)
        throw OutsideHull("barycentric_t: point lies outside the hull", static_cast<double>(-sd));

    RealVector<Real> t = RealVector<Real>::Zero(roots.size());
    const auto& v = h.vertices;
    const auto& src = h.source_indices;
    switch (h.kind) {
    case Hull<Real>::Kind::point:
        t[src[0]] = Real(1);
        return Weights<Real>(t);
    case Hull<Real>::Kind::segment: {
        const Complex<Real> d = v[1] - v[0];
        const Real s = std::clamp((std::conj(d) * (a - v[0])).real() / std::norm(d), Real(0), Real(1));
        t[src[0]] += Real(1) - s;
        t[src[1]] += s;
        return Weights<Real>::normalized(t);
    }
    case Hull<Real>::Kind::polygon:
        break;
    }

    std::size_t best = 1;
    Real best_min = -std::numeric_limits<Real>::infinity();
    Real best_l[3] = {Real(1), Real(0), Real(0)};
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        const Complex<Real> e1 = v[i] - v[0], e2 = v[i + 1] - v[0], r = a - v[0];
        const Real det = e1.real() * e2.imag() - e1.imag() * e2.real();
        const Real l1 = (r.real() * e2.imag() - r.imag() * e2.real()) / det;
        const Real l2 = (e1.real() * r.imag() - e1.imag() * r.real()) / det;
        const Real l0 = Real(1) - l1 - l2;
        const Real m = std::min({l0, l1, l2});
        if (m > best_min) {
            best_min = m;
            best = i;
            best_l[0] = l0;
            best_l[1] = l1;
            best_l[2] = l2;
        }
    }
    const Index corner[3] = {src[0], src[best], src[best + 1]};
    for (int c = 0; c < 3; ++c)
        t[corner[c]] += std::max(best_l[c], Real(0));
    return Weights<Real>::normalized(t);
}

// Weights gamma making `a` a zero of A_n^gamma: gamma_i proportional to
// t_i |a - z_i|^2. When `a` coincides with a root z_k the weights are
// gamma_k = 0 and uniform elsewhere.
template <class Real>
Weights<Real> recover_gamma(const RootList<Real>& roots, const Complex<Real>& a)
{
    const Index n = roots.size();
    if (n < 2)
        throw InvalidArgument("recover_gamma: need at least two roots");
    if (!is_finite(a))
        throw InvalidArgument("recover_gamma: non-finite point");
    const Real scale = scale_of(roots);
    const Weights<Real> t = barycentric_t(roots, a);

    Weights<Real> gamma;
    Index coincide = -1;
    for (Index k = 0; k < n && coincide < 0; ++k)
        if (std::abs(a - roots[k]) <= Real(1e-12) * scale)
            coincide = k;
    if (coincide >= 0) {
        RealVector<Real> g = RealVector<Real>::Constant(n, Real(1) / Real(n - 1));
        g[coincide] = Real(0);
        gamma = Weights<Real>::normalized(g);
    } else {
        RealVector<Real> g(n);
        for (Index i = 0; i < n; ++i)
            g[i] = t[i] * std::norm(a - roots[i]);
        gamma = Weights<Real>::normalized(g);
    }

    const Real residual = std::abs(convex_combination(roots, gamma)(a));
    if (!(residual <= Real(1e-9) * std::pow(Real(1) + scale, Real(n - 1))))
        throw NumericalError("recover_gamma: recovered weights do not annihilate the point");
    return gamma;
}

} // namespace incpoly

#endif // INCPOLY_HULL_HPP
