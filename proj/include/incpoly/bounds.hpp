#ifndef INCPOLY_BOUNDS_HPP
#define INCPOLY_BOUNDS_HPP

#include <limits>
#include <numbers>
#include <vector>

#include "incpoly/companion.hpp"

namespace incpoly {

template <class Real = double>
struct Disc {
    Complex<Real> center;
    Real radius = Real(0);
};

// Gershgorin row discs of the reduced companion, one per non-pivot root.
template <class Real = double>
struct DiscUnion {
    std::vector<Disc<Real>> discs;
    // Original index of the pivot root.
    Index pivot = -1;
    // Original index of the root that generated each disc.
    std::vector<Index> rows;
};

namespace detail {

    template <class Real>
    void check_instance(const RootList<Real>& roots, const Weights<Real>& gamma, Index pivot, const char* what)
    {
        if (roots.size() < 2)
            throw InvalidArgument(std::string(what) + ": need at least two roots");
        if (gamma.size() != roots.size())
            throw InvalidArgument(std::string(what) + ": weight/root length mismatch");
        if (pivot < 0 || pivot >= roots.size())
            throw InvalidArgument(std::string(what) + ": pivot out of range");
        require_finite(roots, what);
    }

    template <class Real>
    Real radius_from_radicand(Real radicand, Real factor, Real scale)
    {
        if (radicand < Real(0)) {
            if (radicand < Real(-1e-12) * scale * scale)
                throw NumericalError("trace disc: radicand is negative beyond rounding");
            radicand = Real(0);
        }
        return std::sqrt(factor) * std::sqrt(radicand);
    }

} // namespace detail

// Spectral disc of the reduced companion M built from tr M and tr M*M:
//   center = sum_j (1 - gamma_j) z_j / (n - 1)
//   radius = sqrt((n-2)/(n-1)) * ( sum_{j != p} |(1-gamma_j) z_j + gamma_j z_p|^2
//            + (n-2) sum_{j != p} gamma_j^2 |z_p - z_j|^2
//            - |sum_j (1 - gamma_j) z_j|^2 / (n-1) )^(1/2).
// With uniform weights the center is the plain root mean. The radius is
// unchanged by translating every root, so it is evaluated on roots measured
// from the center, where the subtraction loses far less.
template <class Real>
Disc<Real> trace_disc(const RootList<Real>& roots, const Weights<Real>& gamma, Index pivot)
{
    detail::check_instance(roots, gamma, pivot, "trace_disc");
    const Index n = roots.size();

    Complex<Real> trace(0);
    for (Index j = 0; j < n; ++j)
        trace += (Real(1) - gamma[j]) * roots[j];

    Disc<Real> d;
    d.center = gamma.is_uniform() ? Complex<Real>(roots.sum() / Real(n)) : Complex<Real>(trace / Real(n - 1));
    if (n == 2)
        return d;

    const RootList<Real> w = roots.array() - d.center;
    const Complex<Real> wp = w[pivot];
    Complex<Real> shifted_trace(0);
    Real diag(0), off(0);
    for (Index j = 0; j < n; ++j) {
        if (j == pivot)
            continue;
        const Complex<Real> entry = (Real(1) - gamma[j]) * w[j] + gamma[j] * wp;
        shifted_trace += entry;
        diag += std::norm(entry);
        off += gamma[j] * gamma[j] * std::norm(wp - w[j]);
    }
    const Real radicand = diag + Real(n - 2) * off - std::norm(shifted_trace) / Real(n - 1);
    d.radius = detail::radius_from_radicand(radicand, Real(n - 2) / Real(n - 1), scale_of(roots));
    return d;
}

template <class Real>
Disc<Real> trace_disc(const RootList<Real>& roots, const Weights<Real>& gamma)
{
    return trace_disc(roots, gamma, roots.size() - 1);
}

// The uniform-weight specialization: a disc about the root mean holding every
// critical point of prod (z - z_j).
template <class Real>
Disc<Real> derivative_disc(const RootList<Real>& roots)
{
    if (roots.size() < 2)
        throw InvalidArgument("derivative_disc: need at least two roots");
    return trace_disc(roots, Weights<Real>::uniform(roots.size()), roots.size() - 1);
}

// sqrt((m-1)/m) * (tr A*A - |tr A|^2 / m)^(1/2), evaluated entrywise on any
// square matrix. Bounds |lambda - tr A / m| for every eigenvalue. The radicand
// equals the squared Frobenius norm of A - (tr A / m) I, which is how it is
// summed.
template <class Real>
Real trace_radius(const ComplexMatrix<Real>& a)
{
    const Index m = a.rows();
    if (m != a.cols() || m < 1)
        throw InvalidArgument("trace_radius: matrix must be square and nonempty");
    ComplexMatrix<Real> centered = a;
    centered.diagonal().array() -= a.trace() / Real(m);
    return std::sqrt(Real(m - 1) / Real(m)) * centered.norm();
}

// Disc j (j != pivot): center (1 - gamma_j) z_j + gamma_j z_p,
// radius (n - 2) gamma_j |z_p - z_j|.
template <class Real>
DiscUnion<Real> gershgorin_union(const RootList<Real>& roots, const Weights<Real>& gamma, Index pivot)
{
    detail::check_instance(roots, gamma, pivot, "gershgorin_union");
    const Index n = roots.size();
    const Complex<Real> zp = roots[pivot];
    DiscUnion<Real> u;
    u.pivot = pivot;
    for (Index j = 0; j < n; ++j) {
        if (j == pivot)
            continue;
        Disc<Real> d;
        d.center = (Real(1) - gamma[j]) * roots[j] + gamma[j] * zp;
        d.radius = Real(n - 2) * gamma[j] * std::abs(zp - roots[j]);
        u.discs.push_back(d);
        u.rows.push_back(j);
    }
    return u;
}

enum class PivotCriterion { min_total_area, min_max_radius };

// Pivot minimizing the union's total disc area or largest radius. Values
// within 1e-12 relative of the running best count as ties and keep the
// smaller index.
template <class Real>
Index best_pivot(const RootList<Real>& roots, const Weights<Real>& gamma, PivotCriterion criterion)
{
    if (roots.size() < 2)
        throw InvalidArgument("best_pivot: need at least two roots");
    Index best = 0;
    Real best_value = std::numeric_limits<Real>::infinity();
    for (Index p = 0; p < roots.size(); ++p) {
        const DiscUnion<Real> u = gershgorin_union(roots, gamma, p);
        Real value(0);
        for (const auto& d : u.discs) {
            if (criterion == PivotCriterion::min_total_area)
                value += std::numbers::pi_v<Real> * d.radius * d.radius;
            else
                value = std::max(value, d.radius);
        }
        if (p == 0 || value < best_value - Real(1e-12) * std::max(Real(1), std::abs(best_value))) {
            best = p;
            best_value = value;
        }
    }
    return best;
}

template <class Real = double>
struct ContainmentResult {
    bool contained = true;
    // Largest distance by which any zero exceeds the nearest disc boundary,
    // zero when all are inside.
    Real max_violation = Real(0);
};

template <class Real>
ContainmentResult<Real> disc_contains_all(const Disc<Real>& d, const RootList<Real>& zeros, Real tol)
{
    ContainmentResult<Real> r;
    for (Index i = 0; i < zeros.size(); ++i) {
        const Real excess = std::abs(zeros[i] - d.center) - d.radius;
        r.max_violation = std::max(r.max_violation, excess);
        if (excess > tol)
            r.contained = false;
    }
    return r;
}

template <class Real>
ContainmentResult<Real> disc_contains_all(const DiscUnion<Real>& u, const RootList<Real>& zeros, Real tol)
{
    ContainmentResult<Real> r;
    for (Index i = 0; i < zeros.size(); ++i) {
        Real excess = std::numeric_limits<Real>::infinity();
        for (const auto& d : u.discs)
            excess = std::min(excess, std::abs(zeros[i] - d.center) - d.radius);
        r.max_violation = std::max(r.max_violation, excess);
        if (excess > tol)
            r.contained = false;
    }
    return r;
}

} // namespace incpoly

#endif // INCPOLY_BOUNDS_HPP
