#ifndef INCPOLY_ERROR_HPP
#define INCPOLY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace incpoly {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Caller passed something outside an operation's precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A numerical safeguard fired: an iteration did not converge, two independent
// computation routes disagree, or a provably nonnegative quantity went
// negative. These signal breakdown, never a property violation.
class NumericalError : public Error {
public:
    using Error::Error;
};

// A point was required to lie in a convex hull and does not.
class OutsideHull : public Error {
public:
    OutsideHull(const std::string& msg, double distance)
        : Error(msg), distance_(distance)
    {
    }

    double distance() const noexcept { return distance_; }

private:
    double distance_;
};

} // namespace incpoly

#endif // INCPOLY_ERROR_HPP
