#ifndef INCPOLY_WEIGHTS_HPP
#define INCPOLY_WEIGHTS_HPP

#include <cmath>
#include <string>

#include "incpoly/types.hpp"

namespace incpoly {

// Nonnegative reals summing to one: the convex coefficients gamma, the
// Lagrange coefficients of a feasible decomposition, and hull coordinates t.
template <class Real = double>
class Weights {
public:
    static constexpr double sum_tolerance = 1e-12;
    static constexpr double clamp_tolerance = 1e-14;

    Weights() = default;

    // Validates and normalizes. Entries in [-1e-14, 0) are clamped to zero and
    // the result is rescaled to sum exactly (to rounding) to one.
    explicit Weights(RealVector<Real> values)
        : values_(std::move(values))
    {
        if (values_.size() == 0)
            throw InvalidArgument("weights: empty");
        Real sum(0);
        for (Index i = 0; i < values_.size(); ++i) {
            Real& v = values_[i];
            if (!std::isfinite(v))
                throw InvalidArgument("weights: non-finite entry at index " + std::to_string(i));
            if (v < Real(-clamp_tolerance))
                throw InvalidArgument("weights: negative entry at index " + std::to_string(i));
            if (v < Real(0))
                v = Real(0);
            sum += v;
        }
        if (std::abs(sum - Real(1)) > Real(sum_tolerance))
            throw InvalidArgument("weights: entries sum to " + std::to_string(static_cast<double>(sum)) + ", expected 1");
        values_ /= sum;
    }

    Weights(std::initializer_list<Real> values)
        : Weights(from_list(values))
    {
    }

    static Weights uniform(Index n)
    {
        if (n < 1)
            throw InvalidArgument("weights: uniform of size < 1");
        Weights w;
        w.values_ = RealVector<Real>::Constant(n, Real(1) / Real(n));
        return w;
    }

    static Weights indicator(Index n, Index k)
    {
        if (k < 0 || k >= n)
            throw InvalidArgument("weights: indicator index out of range");
        Weights w;
        w.values_ = RealVector<Real>::Zero(n);
        w.values_[k] = Real(1);
        return w;
    }

    // Rescales arbitrary nonnegative entries with positive sum onto the simplex.
    static Weights normalized(const RealVector<Real>& raw)
    {
        Real sum(0);
        for (Index i = 0; i < raw.size(); ++i) {
            if (!std::isfinite(raw[i]) || raw[i] < Real(0))
                throw InvalidArgument("weights: entries must be finite and nonnegative");
            sum += raw[i];
        }
        if (!(sum > Real(0)))
            throw InvalidArgument("weights: entries sum to zero");
        Weights w;
        w.values_ = raw / sum;
        return w;
    }

    Index size() const noexcept { return values_.size(); }
    Real operator[](Index i) const { return values_[i]; }
    const RealVector<Real>& values() const noexcept { return values_; }

    // True when every entry is bitwise equal, i.e. the uniform weights 1/n.
    bool is_uniform() const noexcept
    {
        for (Index i = 1; i < values_.size(); ++i)
            if (values_[i] != values_[0])
                return false;
        return true;
    }

private:
    static RealVector<Real> from_list(std::initializer_list<Real> values)
    {
        RealVector<Real> v(static_cast<Index>(values.size()));
        Index i = 0;
        for (Real x : values)
            v[i++] = x;
        return v;
    }

    RealVector<Real> values_;
};

} // namespace incpoly

#endif // INCPOLY_WEIGHTS_HPP
