#ifndef INCPOLY_TYPES_HPP
#define INCPOLY_TYPES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "incpoly/error.hpp"

namespace incpoly {

template <class Real>
using Complex = std::complex<Real>;

template <class Real>
using ComplexVector = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, 1>;

template <class Real>
using ComplexMatrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <class Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// Ordered multiset of complex numbers. Index k identifies the incomplete
// polynomial g_k, so order matters and duplicates are allowed.
template <class Real>
using RootList = ComplexVector<Real>;

using Index = Eigen::Index;

template <class Real>
bool is_finite(const Complex<Real>& z)
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <class Real>
void require_finite(const RootList<Real>& roots, const char* what)
{
    for (Index i = 0; i < roots.size(); ++i) {
        if (!is_finite(roots[i]))
            throw InvalidArgument(std::string(what) + ": non-finite value at index " + std::to_string(i));
    }
}

// 1 + max |z_j|, the normalization every tolerance is measured against.
template <class Real>
Real scale_of(const RootList<Real>& roots)
{
    Real m(0);
    for (Index i = 0; i < roots.size(); ++i)
        m = std::max(m, std::abs(roots[i]));
    return Real(1) + m;
}

// Copy of `roots` with entry `skip` removed.
template <class Real>
RootList<Real> without(const RootList<Real>& roots, Index skip)
{
    RootList<Real> out(roots.size() - 1);
    for (Index i = 0, o = 0; i < roots.size(); ++i)
        if (i != skip)
            out[o++] = roots[i];
    return out;
}

template <class Real>
RootList<Real> without(const RootList<Real>& roots, Index skip_a, Index skip_b)
{
    RootList<Real> out(roots.size() - 2);
    for (Index i = 0, o = 0; i < roots.size(); ++i)
        if (i != skip_a && i != skip_b)
            out[o++] = roots[i];
    return out;
}

} // namespace incpoly

#endif // INCPOLY_TYPES_HPP
