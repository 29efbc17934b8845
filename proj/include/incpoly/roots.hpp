#ifndef INCPOLY_ROOTS_HPP
#define INCPOLY_ROOTS_HPP

#include <algorithm>
#include <limits>
#include <numeric>
#include <numbers>
#include <vector>

#include "incpoly/companion.hpp"
#include "incpoly/polynomial.hpp"

namespace incpoly {

inline constexpr Index max_root_degree = 64;

// Raised when simultaneous iteration fails to converge. Carries the best
// iterate and its largest residual.
class RootFindingError : public NumericalError {
public:
    RootFindingError(const std::string& msg, std::vector<std::complex<double>> best, double residual)
        : NumericalError(msg), best_(std::move(best)), residual_(residual)
    {
    }

    const std::vector<std::complex<double>>& best_iterate() const noexcept { return best_; }
    double residual() const noexcept { return residual_; }

private:
    std::vector<std::complex<double>> best_;
    double residual_;
};

// Raised when the coefficient-expansion route and the companion-matrix route
// to the zeros of A_n^gamma disagree.
class CrossCheckError : public NumericalError {
public:
    CrossCheckError(const std::string& msg, double distance)
        : NumericalError(msg), distance_(distance)
    {
    }

    double distance() const noexcept { return distance_; }

private:
    double distance_;
};

namespace detail {

    // p(z), p'(z) and sum |a_k| |z|^k in one Horner pass.
    template <class Real>
    struct HornerValue {
        Complex<Real> value;
        Complex<Real> slope;
        Real magnitude;
    };

    template <class Real>
    HornerValue<Real> horner(const ComplexVector<Real>& a, const Complex<Real>& z)
    {
        const Index d = a.size() - 1;
        Complex<Real> p = a[d];
        Complex<Real> dp(0);
        Real mag = std::abs(a[d]);
        const Real r = std::abs(z);
        for (Index k = d - 1; k >= 0; --k) {
            dp = dp * z + p;
            p = p * z + a[k];
            mag = mag * r + std::abs(a[k]);
        }
        return {p, dp, mag};
    }

    template <class Real>
    ComplexVector<Real> initial_circle(const ComplexVector<Real>& a, Real radius_factor, Real offset)
    {
        const Index d = a.size() - 1;
        Real cauchy(0);
        for (Index k = 0; k < d; ++k)
            cauchy = std::max(cauchy, std::abs(a[k] / a[d]));
        cauchy += Real(1);
        const Real radius = radius_factor * cauchy;
        const Real two_pi = Real(2) * std::numbers::pi_v<Real>;
        ComplexVector<Real> z(d);
        for (Index k = 0; k < d; ++k)
            z[k] = std::polar(radius, two_pi * Real(k) / Real(d) + offset);
        return z;
    }

    // Value indistinguishable from rounding noise in the Horner recurrence.
    template <class Real>
    bool at_noise_level(const HornerValue<Real>& h, Index degree)
    {
        constexpr Real eps = std::numeric_limits<Real>::epsilon();
        return std::abs(h.value) <= Real(4) * eps * Real(degree + 1) * h.magnitude;
    }

    template <class Real>
    bool small_step(const Complex<Real>& step, const Complex<Real>& z)
    {
        return std::abs(step) <= Real(1e-13) * (Real(1) + std::abs(z));
    }

    template <class Real>
    Real max_residual(const ComplexVector<Real>& a, const ComplexVector<Real>& z)
    {
        Real worst(0);
        for (Index i = 0; i < z.size(); ++i)
            worst = std::max(worst, std::abs(horner(a, z[i]).value));
        return worst;
    }

    template <class Real>
    std::vector<std::complex<double>> to_double(const ComplexVector<Real>& z)
    {
        std::vector<std::complex<double>> out;
        out.reserve(static_cast<std::size_t>(z.size()));
        for (Index i = 0; i < z.size(); ++i)
            out.emplace_back(static_cast<double>(z[i].real()), static_cast<double>(z[i].imag()));
        return out;
    }

    template <class Real>
    struct NewtonStep {
        // p(z) / p'(z), or zero when p'(z) vanishes.
        Complex<Real> ratio;
        bool flat = false;
        bool noise = false;
    };

    // Aberth-Ehrlich sweeps with in-place updates, driven by any evaluator
    // returning the Newton ratio at a point. Returns true on convergence.
    template <class Real, class Eval>
    bool aberth_with(const Eval& eval, ComplexVector<Real>& z, int max_sweeps)
    {
        const Index d = z.size();
        std::vector<bool> done(static_cast<std::size_t>(d), false);
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            bool all = true;
            for (Index i = 0; i < d; ++i) {
                if (done[static_cast<std::size_t>(i)])
                    continue;
                const NewtonStep<Real> n = eval(z[i]);
                if (n.noise) {
                    done[static_cast<std::size_t>(i)] = true;
                    continue;
                }
                Complex<Real> repulsion(0);
                for (Index j = 0; j < d; ++j)
                    if (j != i && z[i] != z[j])
                        repulsion += Real(1) / (z[i] - z[j]);
                Complex<Real> step;
                if (n.flat)
                    step = Complex<Real>(Real(1e-8) * (Real(1) + std::abs(z[i])), Real(0));
                else
                    step = n.ratio / (Real(1) - n.ratio * repulsion);
                if (!is_finite(step))
                    return false;
                z[i] -= step;
                if (small_step(step, z[i]))
                    done[static_cast<std::size_t>(i)] = true;
                else
                    all = false;
            }
            if (all)
                return true;
        }
        return false;
    }

    template <class Real>
    bool aberth(const ComplexVector<Real>& a, ComplexVector<Real>& z, int max_sweeps)
    {
        const Index d = z.size();
        const auto eval = [&](const Complex<Real>& x) {
            const HornerValue<Real> h = horner(a, x);
            NewtonStep<Real> n;
            n.noise = at_noise_level(h, d);
            n.flat = h.slope == Complex<Real>(0);
            if (!n.flat)
                n.ratio = h.value / h.slope;
            return n;
        };
        return aberth_with<Real>(eval, z, max_sweeps);
    }

    template <class Real>
    bool durand_kerner(const ComplexVector<Real>& a, ComplexVector<Real>& z, int max_sweeps)
    {
        const Index d = z.size();
        const Complex<Real> lead = a[d];
        for (int sweep = 0; sweep < max_sweeps; ++sweep) {
            bool all = true;
            for (Index i = 0; i < d; ++i) {
                const HornerValue<Real> h = horner(a, z[i]);
                if (at_noise_level(h, d))
                    continue;
                Complex<Real> denom = lead;
                for (Index j = 0; j < d; ++j)
                    if (j != i)
                        denom *= z[i] - z[j];
                if (denom == Complex<Real>(0))
                    denom = Complex<Real>(std::numeric_limits<Real>::epsilon());
                const Complex<Real> step = h.value / denom;
                if (!is_finite(step))
                    return false;
                z[i] -= step;
                if (!small_step(step, z[i]))
                    all = false;
            }
            if (all)
                return true;
        }
        return false;
    }

} // namespace detail

// All zeros of p with multiplicity, by Aberth-Ehrlich simultaneous iteration
// started on a circle of radius 0.9 * (Cauchy bound). Exact zero roots are
// split off first. Multiple roots come back as tight clusters.
template <class Real>
RootList<Real> find_roots(const Polynomial<Real>& p)
{
    constexpr int sweep_cap = 500;
    if (p.degree() < 1)
        throw InvalidArgument("find_roots: degree must be at least 1");
    if (p.degree() > max_root_degree)
        throw InvalidArgument("find_roots: degree exceeds 64");

    const ComplexVector<Real>& full = p.coeffs();
    Index zeros = 0;
    while (full[zeros] == Complex<Real>(0))
        ++zeros;
    const ComplexVector<Real> a = full.tail(full.size() - zeros);
    const Index d = a.size() - 1;

    RootList<Real> out = RootList<Real>::Zero(p.degree());
    if (d == 0)
        return out;
    if (d == 1) {
        out[0] = -a[0] / a[1];
        return out;
    }

    ComplexVector<Real> z = detail::initial_circle(a, Real(0.9), Real(0.376));
    if (!detail::aberth(a, z, sweep_cap)) {
        ComplexVector<Real> restart = detail::initial_circle(a, Real(1.1), Real(0.376) + Real(0.5) / Real(d));
        if (!detail::durand_kerner(a, restart, sweep_cap)) {
            const Real r1 = detail::max_residual(a, z);
            const Real r2 = detail::max_residual(a, restart);
            const bool first = !(r2 < r1);
            throw RootFindingError("find_roots: no convergence after restart",
                                   detail::to_double(first ? z : restart),
                                   static_cast<double>(first ? r1 : r2));
        }
        z = restart;
    }

    const Real maxcoeff = p.max_abs_coeff();
    for (Index i = 0; i < d; ++i) {
        const Real bound = Real(1e-9) * maxcoeff * std::pow(Real(1) + std::abs(z[i]), Real(p.degree()));
        if (!(std::abs(p(z[i])) <= bound))
            throw RootFindingError("find_roots: residual bound exceeded", detail::to_double(z),
                                   static_cast<double>(detail::max_residual(a, z)));
    }
    out.head(d) = z;
    return out;
}

// A RootList ordered by descending modulus; ties by ascending principal
// argument, then by original position.
template <class Real = double>
struct SortedRoots {
    RootList<Real> roots;
    // Position of each entry in the unsorted input, -1 for padding.
    std::vector<Index> source;

    Index size() const noexcept { return roots.size(); }
    Complex<Real> operator[](Index i) const { return roots[i]; }

    // Appends exact zeros up to length n.
    SortedRoots padded(Index n) const
    {
        if (n < size())
            throw InvalidArgument("padded: target length below current length");
        SortedRoots out;
        out.roots = RootList<Real>::Zero(n);
        out.roots.head(size()) = roots;
        out.source = source;
        out.source.resize(static_cast<std::size_t>(n), -1);
        return out;
    }
};

template <class Real>
Real principal_argument(const Complex<Real>& z)
{
    // +0.0 folds a negative-zero imaginary part onto the upper branch.
    return std::atan2(z.imag() + Real(0), z.real());
}

template <class Real>
SortedRoots<Real> sort_desc_modulus(const RootList<Real>& r)
{
    const Index n = r.size();
    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index(0));
    std::vector<Real> mod(static_cast<std::size_t>(n)), arg(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        mod[static_cast<std::size_t>(i)] = std::abs(r[i]);
        arg[static_cast<std::size_t>(i)] = principal_argument(r[i]);
    }
    std::sort(order.begin(), order.end(), [&](Index x, Index y) {
        const auto sx = static_cast<std::size_t>(x), sy = static_cast<std::size_t>(y);
        if (mod[sx] != mod[sy])
            return mod[sx] > mod[sy];
        if (arg[sx] != arg[sy])
            return arg[sx] < arg[sy];
        return x < y;
    });
    SortedRoots<Real> out;
    out.roots.resize(n);
    out.source = order;
    for (Index i = 0; i < n; ++i)
        out.roots[i] = r[order[static_cast<std::size_t>(i)]];
    return out;
}

// Smallest t such that the two multisets can be matched one-to-one with every
// matched pair within distance t (bottleneck matching). Infinite when the
// sizes differ.
template <class Real>
Real multiset_distance(const RootList<Real>& a, const RootList<Real>& b)
{
    const Index n = a.size();
    if (n != b.size())
        return std::numeric_limits<Real>::infinity();
    if (n == 0)
        return Real(0);
    const auto sn = static_cast<std::size_t>(n);
    std::vector<Real> dist(sn * sn);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            dist[static_cast<std::size_t>(i) * sn + static_cast<std::size_t>(j)] = std::abs(a[i] - b[j]);
    std::vector<Real> levels = dist;
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    auto perfect = [&](Real t) {
        std::vector<Index> match_b(sn, -1);
        for (std::size_t i = 0; i < sn; ++i) {
            std::vector<bool> seen(sn, false);
            // Kuhn augmenting path.
            auto augment = [&](auto&& self, std::size_t u) -> bool {
                for (std::size_t v = 0; v < sn; ++v) {
                    if (seen[v] || dist[u * sn + v] > t)
                        continue;
                    seen[v] = true;
                    if (match_b[v] < 0 || self(self, static_cast<std::size_t>(match_b[v]))) {
                        match_b[v] = static_cast<Index>(u);
                        return true;
                    }
                }
                return false;
            };
            if (!augment(augment, i))
                return false;
        }
        return true;
    };

    std::size_t lo = 0, hi = levels.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (perfect(levels[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return levels[lo];
}

namespace detail {

    // One summand w * prod_{j not in {skip_a, skip_b}} (x - z_j).
    template <class Real>
    struct FactoredTerm {
        Real weight;
        Index skip_a;
        Index skip_b = -1;
    };

    // Newton ratio of a weighted sum of partial root products, evaluated in
    // factored form.
    template <class Real>
    auto factored_sum(const RootList<Real>& roots, std::vector<FactoredTerm<Real>> terms)
    {
        return [&roots, terms = std::move(terms)](const Complex<Real>& x) {
            constexpr Real eps = std::numeric_limits<Real>::epsilon();
            const Index n = roots.size();
            Complex<Real> value(0), slope(0);
            Real magnitude(0);
            for (const FactoredTerm<Real>& t : terms) {
                if (t.weight == Real(0))
                    continue;
                Complex<Real> v(1), dv(0);
                for (Index j = 0; j < n; ++j) {
                    if (j == t.skip_a || j == t.skip_b)
                        continue;
                    dv = dv * (x - roots[j]) + v;
                    v *= x - roots[j];
                }
                value += t.weight * v;
                slope += t.weight * dv;
                magnitude += std::abs(t.weight) * std::abs(v);
            }
            NewtonStep<Real> s;
            s.noise = std::abs(value) <= Real(4) * eps * Real(n) * magnitude;
            s.flat = slope == Complex<Real>(0);
            if (!s.flat)
                s.ratio = value / slope;
            return s;
        };
    }

    template <class Real>
    auto factored_combination(const RootList<Real>& roots, const Weights<Real>& gamma)
    {
        std::vector<FactoredTerm<Real>> terms;
        for (Index k = 0; k < roots.size(); ++k)
            terms.push_back({gamma[k], k});
        return factored_sum(roots, std::move(terms));
    }

    // Newton ratio of the k-th derivative of prod (x - z_j). Expanding
    // prod ((x - z_j) + h) in h gives p^(k)(x) / k! as the h^k coefficient,
    // computed from the local offsets x - z_j only.
    template <class Real>
    auto shifted_taylor(const RootList<Real>& roots, Index order)
    {
        return [&roots, order](const Complex<Real>& x) {
            constexpr Real eps = std::numeric_limits<Real>::epsilon();
            const Index n = roots.size();
            ComplexVector<Real> c = ComplexVector<Real>::Zero(n + 1);
            RealVector<Real> m = RealVector<Real>::Zero(n + 1);
            c[0] = Complex<Real>(1);
            m[0] = Real(1);
            for (Index j = 0; j < n; ++j) {
                const Complex<Real> d = x - roots[j];
                for (Index i = j + 1; i >= 1; --i) {
                    c[i] = c[i] * d + c[i - 1];
                    m[i] = m[i] * std::abs(d) + m[i - 1];
                }
                c[0] *= d;
                m[0] *= std::abs(d);
            }
            NewtonStep<Real> s;
            s.noise = std::abs(c[order]) <= Real(4) * eps * Real(n) * m[order];
            const Complex<Real> slope = Real(order + 1) * c[order + 1];
            s.flat = slope == Complex<Real>(0);
            if (!s.flat)
                s.ratio = c[order] / slope;
            return s;
        };
    }

    // Newton ratio of det(xI - M) through an LU factorization:
    // det'/det = tr (xI - M)^{-1}.
    template <class Real>
    auto matrix_determinant(const ComplexMatrix<Real>& m)
    {
        return [&m](const Complex<Real>& x) {
            constexpr Real eps = std::numeric_limits<Real>::epsilon();
            const Index dim = m.rows();
            ComplexMatrix<Real> shifted = -m;
            shifted.diagonal().array() += x;
            const Real norm = shifted.cwiseAbs().rowwise().sum().maxCoeff();
            const Eigen::PartialPivLU<ComplexMatrix<Real>> lu(shifted);
            Real smallest = std::numeric_limits<Real>::infinity();
            for (Index i = 0; i < dim; ++i)
                smallest = std::min(smallest, std::abs(lu.matrixLU()(i, i)));
            NewtonStep<Real> s;
            s.noise = smallest <= Real(4) * eps * Real(dim) * norm;
            if (s.noise)
                return s;
            const Complex<Real> tr = lu.inverse().trace();
            s.flat = tr == Complex<Real>(0);
            if (!s.flat)
                s.ratio = Real(1) / tr;
            return s;
        };
    }

    // Aberth sweeps with a better conditioned evaluator, starting from roots
    // of the expanded coefficients. Falls back to the start on failure.
    template <class Real, class Eval>
    RootList<Real> refine(const RootList<Real>& start, const Eval& eval)
    {
        ComplexVector<Real> z = start;
        if (!aberth_with<Real>(eval, z, 100))
            return start;
        return z;
    }

} // namespace detail

template <class Real = double>
struct CombinationZeros {
    // From the direct coefficient expansion, sorted by descending modulus.
    SortedRoots<Real> zeros;
    // Eigenvalue route through the reduced companion matrix.
    RootList<Real> companion_zeros;
    Real cross_check_distance;
    Real cross_check_tolerance;
};

// Zeros of A_n^gamma computed twice: from the expanded coefficients and from
// the characteristic polynomial of the reduced companion at `pivot`. Each set
// is then refined against its own unexpanded form (the factored sum, and
// det(zI - M)), since monomial coefficients lose accuracy on clustered roots.
// The two multisets must agree to 1e-7 * scale.
template <class Real>
CombinationZeros<Real> combination_zeros(const RootList<Real>& roots, const Weights<Real>& gamma, Index pivot)
{
    const Polynomial<Real> direct = convex_combination(roots, gamma);
    CombinationZeros<Real> out;
    const CompanionMatrix<Real> m = build_reduced(roots, gamma, pivot);
    const Polynomial<Real> via_matrix = char_poly(m);
    const RootList<Real> first = detail::refine(find_roots(direct), detail::factored_combination(roots, gamma));
    out.companion_zeros = detail::refine(find_roots(via_matrix), detail::matrix_determinant(m.entries));
    out.cross_check_distance = multiset_distance(first, out.companion_zeros);
    out.cross_check_tolerance = Real(1e-7) * scale_of(roots);
    if (!(out.cross_check_distance <= out.cross_check_tolerance))
        throw CrossCheckError("zeros_of_combination: expansion and companion routes disagree",
                              static_cast<double>(out.cross_check_distance));
    out.zeros = sort_desc_modulus(first);
    return out;
}

template <class Real>
SortedRoots<Real> zeros_of_combination(const RootList<Real>& roots, const Weights<Real>& gamma, Index pivot)
{
    return combination_zeros(roots, gamma, pivot).zeros;
}

template <class Real>
SortedRoots<Real> zeros_of_combination(const RootList<Real>& roots, const Weights<Real>& gamma)
{
    return zeros_of_combination(roots, gamma, roots.size() - 1);
}

// Zeros of the k-th derivative of prod (z - z_j), 1 <= k <= n-1, sorted.
template <class Real>
SortedRoots<Real> derivative_zeros(const RootList<Real>& roots, Index order)
{
    if (order < 1 || order >= roots.size())
        throw InvalidArgument("derivative_zeros: order must lie in [1, n-1]");
    const RootList<Real> start = find_roots(derivative(from_roots(roots), order));
    return sort_desc_modulus(detail::refine(start, detail::shifted_taylor(roots, order)));
}

// Zeros of sum_k gamma_k sum_{j != k} g_kj (n >= 3), sorted.
template <class Real>
SortedRoots<Real> second_order_zeros(const RootList<Real>& roots, const Weights<Real>& gamma)
{
    const Polynomial<Real> p = second_order_gamma_combination(roots, gamma);
    std::vector<detail::FactoredTerm<Real>> terms;
    for (Index k = 0; k < roots.size(); ++k)
        for (Index j = k + 1; j < roots.size(); ++j)
            terms.push_back({gamma[k] + gamma[j], k, j});
    return sort_desc_modulus(detail::refine(find_roots(p), detail::factored_sum(roots, std::move(terms))));
}

// Zeros of sum w_ij g_ij over explicit index pairs, sorted.
template <class Real>
SortedRoots<Real> pairwise_zeros(const RootList<Real>& roots, const std::vector<PairWeight>& pairs)
{
    const Polynomial<Real> p = pairwise_combination(roots, pairs);
    std::vector<detail::FactoredTerm<Real>> terms;
    for (const PairWeight& w : pairs)
        terms.push_back({Real(w.weight), w.i, w.j});
    return sort_desc_modulus(detail::refine(find_roots(p), detail::factored_sum(roots, std::move(terms))));
}

} // namespace incpoly

#endif // INCPOLY_ROOTS_HPP
