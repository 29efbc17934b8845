#ifndef INCPOLY_POLYNOMIAL_HPP
#define INCPOLY_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "incpoly/types.hpp"
#include "incpoly/weights.hpp"

namespace incpoly {

// Dense complex polynomial, coefficients ascending by degree.
//
// Trailing coefficients with modulus <= 1e-14 * (largest modulus) are trimmed
// on construction, so the leading coefficient of a nonzero polynomial is never
// negligible. The zero polynomial is stored as the single coefficient 0.
template <class Real = double>
class Polynomial {
public:
    static constexpr double trim_tolerance = 1e-14;

    Polynomial()
        : coeffs_(ComplexVector<Real>::Zero(1))
    {
    }

    explicit Polynomial(ComplexVector<Real> coeffs, bool degenerate = false)
        : coeffs_(std::move(coeffs)), degenerate_(degenerate)
    {
        if (coeffs_.size() == 0)
            coeffs_ = ComplexVector<Real>::Zero(1);
        for (Index i = 0; i < coeffs_.size(); ++i)
            if (!is_finite(coeffs_[i]))
                throw InvalidArgument("polynomial: non-finite coefficient");
        trim();
    }

    Polynomial(std::initializer_list<Complex<Real>> coeffs)
        : Polynomial(from_list(coeffs))
    {
    }

    Index degree() const noexcept { return coeffs_.size() - 1; }
    const ComplexVector<Real>& coeffs() const noexcept { return coeffs_; }
    Complex<Real> operator[](Index k) const { return k <= degree() ? coeffs_[k] : Complex<Real>(0); }
    Complex<Real> leading() const { return coeffs_[degree()]; }
    bool is_zero() const noexcept { return degree() == 0 && coeffs_[0] == Complex<Real>(0); }

    // Set when an operation fell back to a documented degenerate convention
    // (derivative of order above the degree, the empty incomplete product).
    bool degenerate() const noexcept { return degenerate_; }

    Real max_abs_coeff() const { return coeffs_.cwiseAbs().maxCoeff(); }

    // Horner evaluation.
    Complex<Real> operator()(const Complex<Real>& z) const
    {
        Complex<Real> acc = coeffs_[degree()];
        for (Index k = degree() - 1; k >= 0; --k)
            acc = acc * z + coeffs_[k];
        return acc;
    }

    Polynomial monic() const
    {
        if (is_zero())
            throw InvalidArgument("polynomial: cannot normalize the zero polynomial");
        return Polynomial(ComplexVector<Real>(coeffs_ / leading()), degenerate_);
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        const Index m = std::max(a.coeffs_.size(), b.coeffs_.size());
        ComplexVector<Real> c = ComplexVector<Real>::Zero(m);
        c.head(a.coeffs_.size()) += a.coeffs_;
        c.head(b.coeffs_.size()) += b.coeffs_;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator-(const Polynomial& a) { return Polynomial(ComplexVector<Real>(-a.coeffs_)); }

    friend Polynomial operator*(const Complex<Real>& s, const Polynomial& p)
    {
        return Polynomial(ComplexVector<Real>(s * p.coeffs_));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        ComplexVector<Real> c = ComplexVector<Real>::Zero(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (Index i = 0; i < a.coeffs_.size(); ++i)
            for (Index j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }

private:
    static ComplexVector<Real> from_list(std::initializer_list<Complex<Real>> coeffs)
    {
        ComplexVector<Real> c(static_cast<Index>(coeffs.size()));
        Index i = 0;
        for (const auto& x : coeffs)
            c[i++] = x;
        return c;
    }

    void trim()
    {
        const Real cutoff = Real(trim_tolerance) * max_abs_coeff();
        Index last = coeffs_.size() - 1;
        while (last > 0 && std::abs(coeffs_[last]) <= cutoff)
            --last;
        if (last + 1 != coeffs_.size())
            coeffs_.conservativeResize(last + 1);
    }

    ComplexVector<Real> coeffs_;
    bool degenerate_ = false;
};

template <class Real>
Complex<Real> evaluate(const Polynomial<Real>& p, const Complex<Real>& z)
{
    return p(z);
}

// Largest coefficient discrepancy divided by the larger max-modulus
// coefficient of the two operands.
template <class Real>
Real coefficient_distance(const Polynomial<Real>& a, const Polynomial<Real>& b)
{
    const Index m = std::max(a.degree(), b.degree());
    const Real ref = std::max(a.max_abs_coeff(), b.max_abs_coeff());
    Real worst(0);
    for (Index k = 0; k <= m; ++k)
        worst = std::max(worst, std::abs(a[k] - b[k]));
    return ref > Real(0) ? worst / ref : worst;
}

// Coefficient equality: |a_k - b_k| <= max(rel * larger max-modulus
// coefficient, 1e-14) for every k.
template <class Real>
bool approx_equal(const Polynomial<Real>& a, const Polynomial<Real>& b, double rel = 1e-12)
{
    const Index m = std::max(a.degree(), b.degree());
    const Real bound = std::max(Real(rel) * std::max(a.max_abs_coeff(), b.max_abs_coeff()), Real(1e-14));
    for (Index k = 0; k <= m; ++k)
        if (std::abs(a[k] - b[k]) > bound)
            return false;
    return true;
}

// Monic polynomial with the given zeros, expanded by sequential
// multiplication in input order.
template <class Real>
Polynomial<Real> from_roots(const RootList<Real>& roots)
{
    if (roots.size() == 0)
        throw InvalidArgument("from_roots: empty root list");
    require_finite(roots, "from_roots");
    const Index n = roots.size();
    ComplexVector<Real> c = ComplexVector<Real>::Zero(n + 1);
    c[0] = Complex<Real>(1);
    for (Index m = 0; m < n; ++m) {
        // c holds a degree-m polynomial; multiply by (z - roots[m]).
        for (Index i = m + 1; i >= 1; --i)
            c[i] = c[i - 1] - roots[m] * c[i];
        c[0] = -roots[m] * c[0];
    }
    return Polynomial<Real>(std::move(c));
}

template <class Real>
Polynomial<Real> derivative(const Polynomial<Real>& p, Index order = 1)
{
    if (order < 1)
        throw InvalidArgument("derivative: order must be positive");
    if (order > p.degree())
        return Polynomial<Real>(ComplexVector<Real>::Zero(1), true);
    const Index d = p.degree() - order;
    ComplexVector<Real> c(d + 1);
    for (Index k = 0; k <= d; ++k) {
        // (k+order)! / k!
        Real falling(1);
        for (Index j = k + 1; j <= k + order; ++j)
            falling *= Real(j);
        c[k] = falling * p[k + order];
    }
    return Polynomial<Real>(std::move(c));
}

// g_k(z) = prod_{j != k} (z - z_j). For a single root the empty product 1 is
// returned with the degenerate flag set.
template <class Real>
Polynomial<Real> incomplete(const RootList<Real>& roots, Index k)
{
    if (k < 0 || k >= roots.size())
        throw InvalidArgument("incomplete: index out of range");
    if (roots.size() == 1)
        return Polynomial<Real>(ComplexVector<Real>::Ones(1), true);
    return from_roots(without(roots, k));
}

// g_ij(z): the product with both factors i and j removed.
template <class Real>
Polynomial<Real> second_order_incomplete(const RootList<Real>& roots, Index i, Index j)
{
    const Index n = roots.size();
    if (i == j)
        throw InvalidArgument("second_order_incomplete: indices must differ");
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw InvalidArgument("second_order_incomplete: index out of range");
    if (n == 2)
        return Polynomial<Real>(ComplexVector<Real>::Ones(1));
    return from_roots(without(roots, i, j));
}

// A_n^gamma = sum_k gamma_k g_k, a monic polynomial of degree n-1.
template <class Real>
Polynomial<Real> convex_combination(const RootList<Real>& roots, const Weights<Real>& gamma)
{
    const Index n = roots.size();
    if (n < 2)
        throw InvalidArgument("convex_combination: need at least two roots");
    if (gamma.size() != n)
        throw InvalidArgument("convex_combination: weight/root length mismatch");
    ComplexVector<Real> c = ComplexVector<Real>::Zero(n);
    for (Index k = 0; k < n; ++k) {
        if (gamma[k] == Real(0))
            continue;
        c += gamma[k] * incomplete(roots, k).coeffs();
    }
    return Polynomial<Real>(std::move(c));
}

// sum_k gamma_k sum_{j != k} g_kj, left un-normalized (leading coefficient
// n-1). Coincides with the derivative of A_n^gamma.
template <class Real>
Polynomial<Real> second_order_gamma_combination(const RootList<Real>& roots, const Weights<Real>& gamma)
{
    const Index n = roots.size();
    if (n < 3)
        throw InvalidArgument("second_order_gamma_combination: need at least three roots");
    if (gamma.size() != n)
        throw InvalidArgument("second_order_gamma_combination: weight/root length mismatch");
    ComplexVector<Real> c = ComplexVector<Real>::Zero(n - 1);
    for (Index k = 0; k < n; ++k) {
        if (gamma[k] == Real(0))
            continue;
        for (Index j = 0; j < n; ++j)
            if (j != k)
                c += gamma[k] * second_order_incomplete(roots, k, j).coeffs();
    }
    return Polynomial<Real>(std::move(c));
}

struct PairWeight {
    Index i;
    Index j;
    double weight;
};

// sum r_ij g_ij over the listed pairs; the r_ij must be a convex weighting.
// This family is not hull-contained in general.
template <class Real>
Polynomial<Real> pairwise_combination(const RootList<Real>& roots, const std::vector<PairWeight>& pairs)
{
    const Index n = roots.size();
    if (n < 2)
        throw InvalidArgument("pairwise_combination: need at least two roots");
    if (pairs.empty())
        throw InvalidArgument("pairwise_combination: no pairs");
    RealVector<Real> raw(static_cast<Index>(pairs.size()));
    for (std::size_t p = 0; p < pairs.size(); ++p)
        raw[static_cast<Index>(p)] = Real(pairs[p].weight);
    const Weights<Real> r(raw);
    ComplexVector<Real> c = ComplexVector<Real>::Zero(n - 1);
    for (std::size_t p = 0; p < pairs.size(); ++p)
        c += r[static_cast<Index>(p)] * second_order_incomplete(roots, pairs[p].i, pairs[p].j).coeffs();
    return Polynomial<Real>(std::move(c));
}

// B_n(z) = prod (z - |z_j|).
template <class Real>
RootList<Real> absolute_roots(const RootList<Real>& roots)
{
    RootList<Real> a(roots.size());
    for (Index i = 0; i < roots.size(); ++i)
        a[i] = Complex<Real>(std::abs(roots[i]), Real(0));
    return a;
}

template <class Real>
Polynomial<Real> absolute_value_poly(const RootList<Real>& roots)
{
    return from_roots(absolute_roots(roots));
}

template <class Real>
struct DecompositionResult {
    enum class Reason { negative_real, nonreal };

    struct Offense {
        Index index;
        Complex<Real> coefficient;
        std::vector<Reason> reasons;
    };

    // lambda_k = target(z_k) / g_k(z_k), reported in both branches.
    ComplexVector<Real> coefficients;
    std::optional<Weights<Real>> weights;
    std::vector<Offense> offenses;

    bool feasible() const noexcept { return weights.has_value(); }
};

// Expands a monic degree n-1 target in the basis {g_k} (distinct roots only)
// and decides whether the expansion is a convex combination.
template <class Real>
DecompositionResult<Real> lagrange_decompose(const RootList<Real>& roots, const Polynomial<Real>& target)
{
    constexpr double tol = 1e-10;
    const Index n = roots.size();
    if (n < 2)
        throw InvalidArgument("lagrange_decompose: need at least two roots");
    require_finite(roots, "lagrange_decompose");
    const Real scale = scale_of(roots);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (std::abs(roots[i] - roots[j]) <= Real(tol) * scale)
                throw InvalidArgument("lagrange_decompose: confluent basis unsupported (repeated roots)");
    if (target.degree() != n - 1)
        throw InvalidArgument("lagrange_decompose: target degree must be n-1");
    if (std::abs(target.leading() - Complex<Real>(1)) > Real(1e-12))
        throw InvalidArgument("lagrange_decompose: target must be monic");

    DecompositionResult<Real> result;
    result.coefficients.resize(n);
    for (Index k = 0; k < n; ++k) {
        Complex<Real> gk(1);
        for (Index j = 0; j < n; ++j)
            if (j != k)
                gk *= roots[k] - roots[j];
        result.coefficients[k] = target(roots[k]) / gk;
    }

    ComplexVector<Real> check = ComplexVector<Real>::Zero(n);
    for (Index k = 0; k < n; ++k)
        check += result.coefficients[k] * incomplete(roots, k).coeffs();
    if (!approx_equal(Polynomial<Real>(check), target, tol))
        throw NumericalError("lagrange_decompose: basis expansion does not reproduce the target");

    using Reason = typename DecompositionResult<Real>::Reason;
    for (Index k = 0; k < n; ++k) {
        const Complex<Real> l = result.coefficients[k];
        std::vector<Reason> reasons;
        if (l.real() < Real(-tol))
            reasons.push_back(Reason::negative_real);
        if (std::abs(l.imag()) > Real(tol))
            reasons.push_back(Reason::nonreal);
        if (!reasons.empty())
            result.offenses.push_back({k, l, std::move(reasons)});
    }
    if (result.offenses.empty()) {
        RealVector<Real> re(n);
        for (Index k = 0; k < n; ++k)
            re[k] = std::max(result.coefficients[k].real(), Real(0));
        result.weights = Weights<Real>::normalized(re);
    }
    return result;
}

} // namespace incpoly

#endif // INCPOLY_POLYNOMIAL_HPP
