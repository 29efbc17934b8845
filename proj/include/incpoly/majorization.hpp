#ifndef INCPOLY_MAJORIZATION_HPP
#define INCPOLY_MAJORIZATION_HPP

#include <cstdio>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "incpoly/roots.hpp"

namespace incpoly {

inline constexpr double majorization_tolerance = 1e-9;

// A map phi for which t -> phi(exp(t)) is convex and nondecreasing. Validity
// is sampled on 64-point grids, not proved.
template <class Real = double>
struct ScalarTransform {
    std::string name;
    std::function<Real(Real)> apply;

    static ScalarTransform power(Real p)
    {
        std::string label = "t^" + format_exponent(p);
        return {label, [p](Real t) { return std::pow(t, p); }};
    }

    static ScalarTransform identity() { return {"t", [](Real t) { return t; }}; }

    // Throws InvalidArgument when a sampled check fails.
    void validate() const
    {
        constexpr int grid = 64;
        if (!apply)
            throw InvalidArgument("transform " + name + ": no function");
        Real prev = apply(Real(0));
        if (!std::isfinite(prev))
            throw InvalidArgument("transform " + name + ": not finite at 0");
        for (int i = 1; i < grid; ++i) {
            const Real x = Real(8) * Real(i) / Real(grid - 1);
            const Real y = apply(x);
            if (!std::isfinite(y) || y < prev - Real(1e-12) * std::max(Real(1), std::abs(prev)))
                throw InvalidArgument("transform " + name + ": not nondecreasing on [0, 8]");
            prev = y;
        }
        std::vector<Real> f(grid);
        for (int i = 0; i < grid; ++i)
            f[static_cast<std::size_t>(i)] = apply(std::exp(Real(-8) + Real(11) * Real(i) / Real(grid - 1)));
        for (std::size_t i = 1; i + 1 < f.size(); ++i) {
            const Real slack = Real(1e-9) * std::max({Real(1), std::abs(f[i - 1]), std::abs(f[i + 1])});
            if (f[i] < f[i - 1] - slack)
                throw InvalidArgument("transform " + name + ": phi(exp(t)) decreasing");
            if (f[i - 1] - Real(2) * f[i] + f[i + 1] < -slack)
                throw InvalidArgument("transform " + name + ": phi(exp(t)) not convex");
        }
    }

private:
    static std::string format_exponent(Real p)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%g", static_cast<double>(p));
        return buf;
    }
};

// Prefix comparison of two descending modulus lists.
//
// For product mode, per_k_margin holds the log-domain difference
// sum log|right| - sum log|left| (possibly +-inf); for phi-sum mode it holds
// sum phi|right| - sum phi|left|. relative_margin normalizes the linear-domain
// difference by max(1, right prefix value), and the inequality at k holds when
// relative_margin[k] >= -tolerance.
template <class Real = double>
struct MajorizationReport {
    enum class Mode { product, phi_sum };

    Mode mode = Mode::product;
    std::string phi_name;
    std::vector<Real> left_moduli;
    std::vector<Real> right_moduli;
    std::vector<Real> per_k_margin;
    std::vector<Real> relative_margin;
    double tolerance = majorization_tolerance;
    // First prefix length (1-based) at which the inequality fails.
    std::optional<Index> violated_at;

    bool holds() const noexcept { return !violated_at.has_value(); }

    Real worst_margin() const
    {
        Real w = std::numeric_limits<Real>::infinity();
        for (Real m : relative_margin)
            w = std::min(w, m);
        return w;
    }
};

namespace detail {

    template <class Real>
    std::vector<Real> moduli(const SortedRoots<Real>& r)
    {
        std::vector<Real> m(static_cast<std::size_t>(r.size()));
        for (Index i = 0; i < r.size(); ++i)
            m[static_cast<std::size_t>(i)] = std::abs(r[i]);
        return m;
    }

    template <class Real>
    void check_descending(const std::vector<Real>& m, const char* side)
    {
        for (std::size_t i = 1; i < m.size(); ++i)
            if (m[i] > m[i - 1])
                throw InvalidArgument(std::string("majorization: ") + side + " list not in descending modulus order");
    }

    template <class Real>
    void prepare(MajorizationReport<Real>& rep, const SortedRoots<Real>& w, const SortedRoots<Real>& z, Index& upto)
    {
        if (w.size() > z.size())
            throw InvalidArgument("majorization: left list longer than right list");
        const SortedRoots<Real> padded = w.padded(z.size());
        rep.left_moduli = moduli(padded);
        rep.right_moduli = moduli(z);
        check_descending(rep.left_moduli, "left");
        check_descending(rep.right_moduli, "right");
        if (upto < 0)
            upto = z.size();
        if (upto > z.size())
            throw InvalidArgument("majorization: prefix range exceeds list length");
    }

} // namespace detail

// prod_{j<=k} |w_j| <= prod_{j<=k} |z_j| for k = 1..upto (default: all), with
// w zero-padded to the length of z. Products are accumulated as sums of
// logarithms; an exact zero sends its side to -inf.
template <class Real>
MajorizationReport<Real> product_majorization(const SortedRoots<Real>& w, const SortedRoots<Real>& z, Index upto = -1)
{
    MajorizationReport<Real> rep;
    rep.mode = MajorizationReport<Real>::Mode::product;
    rep.phi_name = "product";
    detail::prepare(rep, w, z, upto);

    constexpr Real inf = std::numeric_limits<Real>::infinity();
    const Real tol = Real(rep.tolerance);
    Real left(0), right(0);
    for (Index k = 0; k < upto; ++k) {
        const auto s = static_cast<std::size_t>(k);
        left += rep.left_moduli[s] == Real(0) ? -inf : std::log(rep.left_moduli[s]);
        right += rep.right_moduli[s] == Real(0) ? -inf : std::log(rep.right_moduli[s]);

        Real log_margin;
        if (left == -inf && right == -inf)
            log_margin = Real(0);
        else
            log_margin = right - left;

        Real rel;
        if (right == -inf)
            rel = -std::exp(left);
        else if (right >= Real(0))
            rel = -std::expm1(left - right);
        else
            rel = std::exp(right) - std::exp(left);

        rep.per_k_margin.push_back(log_margin);
        rep.relative_margin.push_back(rel);
        if (!(rel >= -tol) && !rep.violated_at)
            rep.violated_at = k + 1;
    }
    return rep;
}

// sum_{j<=k} phi(|w_j|) <= sum_{j<=k} phi(|z_j|) for k = 1..upto, w padded
// with zeros to the length of z.
template <class Real>
MajorizationReport<Real> phi_sum_majorization(const SortedRoots<Real>& w, const SortedRoots<Real>& z,
                                              const ScalarTransform<Real>& phi, Index upto = -1)
{
    phi.validate();
    MajorizationReport<Real> rep;
    rep.mode = MajorizationReport<Real>::Mode::phi_sum;
    rep.phi_name = phi.name;
    detail::prepare(rep, w, z, upto);

    const Real tol = Real(rep.tolerance);
    Real left(0), right(0);
    for (Index k = 0; k < upto; ++k) {
        const auto s = static_cast<std::size_t>(k);
        left += phi.apply(rep.left_moduli[s]);
        right += phi.apply(rep.right_moduli[s]);
        const Real margin = right - left;
        const Real rel = margin / std::max(Real(1), std::abs(right));
        rep.per_k_margin.push_back(margin);
        rep.relative_margin.push_back(rel);
        if (!(rel >= -tol) && !rep.violated_at)
            rep.violated_at = k + 1;
    }
    return rep;
}

// Zeros of B_n^gamma, the combination built on the moduli |z_j|. They lie in
// an interval of [0, inf); any imaginary part above 1e-9 or real part below
// -1e-9 is reported as numerical breakdown.
template <class Real>
SortedRoots<Real> absolute_combination_zeros(const RootList<Real>& roots, const Weights<Real>& gamma)
{
    const SortedRoots<Real> v = zeros_of_combination(absolute_roots(roots), gamma);
    for (Index i = 0; i < v.size(); ++i)
        if (std::abs(v[i].imag()) > Real(1e-9) || v[i].real() < Real(-1e-9))
            throw NumericalError("compare_with_absolute: zero of the modulus combination is not real and nonnegative");
    return v;
}

// prod |w_j| <= prod |v_j| for k = 1..n-1, where w are the zeros of
// A_n^gamma and v those of B_n^gamma. No padding.
template <class Real>
MajorizationReport<Real> compare_with_absolute(const RootList<Real>& roots, const Weights<Real>& gamma)
{
    if (roots.size() < 2)
        throw InvalidArgument("compare_with_absolute: need at least two roots");
    const SortedRoots<Real> w = zeros_of_combination(roots, gamma);
    const SortedRoots<Real> v = absolute_combination_zeros(roots, gamma);
    return product_majorization(w, v, roots.size() - 1);
}

template <class Real>
MajorizationReport<Real> compare_with_absolute(const RootList<Real>& roots, const Weights<Real>& gamma,
                                               const ScalarTransform<Real>& phi)
{
    if (roots.size() < 2)
        throw InvalidArgument("compare_with_absolute: need at least two roots");
    const SortedRoots<Real> w = zeros_of_combination(roots, gamma);
    const SortedRoots<Real> v = absolute_combination_zeros(roots, gamma);
    return phi_sum_majorization(w, v, phi, roots.size() - 1);
}

} // namespace incpoly

#endif // INCPOLY_MAJORIZATION_HPP
