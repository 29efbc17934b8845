#ifndef INCPOLY_COMPANION_HPP
#define INCPOLY_COMPANION_HPP

#include "incpoly/polynomial.hpp"

namespace incpoly {

// D-companion matrices whose characteristic polynomials are z * A_n^gamma
// (full kind, D(I - Lambda J)) or A_n^gamma itself (reduced kind,
// D(I - Lambda J) + z_p Lambda J over the non-pivot roots).
template <class Real = double>
struct CompanionMatrix {
    enum class Kind { full, reduced };

    ComplexMatrix<Real> entries;
    Kind kind = Kind::full;
    // Original index of the root playing the role of the eliminated root
    // (reduced kind only, -1 otherwise).
    Index pivot = -1;

    Index dimension() const noexcept { return entries.rows(); }
};

inline constexpr Index max_char_poly_dimension = 64;

template <class Real>
CompanionMatrix<Real> build_full(const RootList<Real>& roots, const Weights<Real>& gamma)
{
    const Index n = roots.size();
    if (n < 2)
        throw InvalidArgument("build_full: need at least two roots");
    if (gamma.size() != n)
        throw InvalidArgument("build_full: weight/root length mismatch");
    require_finite(roots, "build_full");

    CompanionMatrix<Real> m;
    m.kind = CompanionMatrix<Real>::Kind::full;
    m.entries.resize(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            m.entries(i, j) = roots[i] * (Real(i == j ? 1 : 0) - gamma[i]);
    return m;
}

template <class Real>
CompanionMatrix<Real> build_reduced(const RootList<Real>& roots, const Weights<Real>& gamma, Index pivot)
{
    const Index n = roots.size();
    if (n < 2)
        throw InvalidArgument("build_reduced: need at least two roots");
    if (gamma.size() != n)
        throw InvalidArgument("build_reduced: weight/root length mismatch");
    if (pivot < 0 || pivot >= n)
        throw InvalidArgument("build_reduced: pivot out of range");
    require_finite(roots, "build_reduced");

    const Complex<Real> zp = roots[pivot];
    CompanionMatrix<Real> m;
    m.kind = CompanionMatrix<Real>::Kind::reduced;
    m.pivot = pivot;
    m.entries.resize(n - 1, n - 1);
    for (Index i = 0, r = 0; i < n; ++i) {
        if (i == pivot)
            continue;
        const Real g = gamma[i];
        const Complex<Real> off = g * (zp - roots[i]);
        m.entries.row(r).setConstant(off);
        m.entries(r, r) = (Real(1) - g) * roots[i] + g * zp;
        ++r;
    }
    return m;
}

template <class Real>
CompanionMatrix<Real> build_reduced(const RootList<Real>& roots, const Weights<Real>& gamma)
{
    return build_reduced(roots, gamma, roots.size() - 1);
}

// Monic characteristic polynomial det(zI - A) by the Faddeev-LeVerrier trace
// recursion.
template <class Real>
Polynomial<Real> char_poly(const ComplexMatrix<Real>& a)
{
    const Index m = a.rows();
    if (m != a.cols())
        throw InvalidArgument("char_poly: matrix is not square");
    if (m < 1)
        throw InvalidArgument("char_poly: empty matrix");
    if (m > max_char_poly_dimension)
        throw InvalidArgument("char_poly: dimension exceeds 64");

    ComplexVector<Real> c(m + 1);
    c[m] = Complex<Real>(1);
    ComplexMatrix<Real> acc = ComplexMatrix<Real>::Zero(m, m);
    ComplexMatrix<Real> prod(m, m);
    for (Index k = 1; k <= m; ++k) {
        acc.diagonal().array() += c[m - k + 1];
        prod.noalias() = a * acc;
        c[m - k] = -prod.trace() / Real(k);
        acc.swap(prod);
    }
    return Polynomial<Real>(std::move(c));
}

template <class Real>
Polynomial<Real> char_poly(const CompanionMatrix<Real>& m)
{
    return char_poly(m.entries);
}

// det(zI - M) for the reduced companion, expanded through the rank-one
// determinant identity:
//   prod_{j != p}(z - z_j) + sum_{k != p} gamma_k (z_k - z_p) prod_{j != k,p}(z - z_j).
template <class Real>
Polynomial<Real> reduced_char_poly_closed_form(const RootList<Real>& roots, const Weights<Real>& gamma, Index pivot)
{
    const Index n = roots.size();
    if (n < 2)
        throw InvalidArgument("reduced_char_poly_closed_form: need at least two roots");
    if (gamma.size() != n)
        throw InvalidArgument("reduced_char_poly_closed_form: weight/root length mismatch");
    if (pivot < 0 || pivot >= n)
        throw InvalidArgument("reduced_char_poly_closed_form: pivot out of range");

    ComplexVector<Real> c = ComplexVector<Real>::Zero(n);
    c += incomplete(roots, pivot).coeffs();
    for (Index k = 0; k < n; ++k) {
        if (k == pivot || gamma[k] == Real(0))
            continue;
        const Polynomial<Real> gkp = second_order_incomplete(roots, k, pivot);
        c.head(gkp.coeffs().size()) += (gamma[k] * (roots[k] - roots[pivot])) * gkp.coeffs();
    }
    return Polynomial<Real>(std::move(c));
}

} // namespace incpoly

#endif // INCPOLY_COMPANION_HPP
