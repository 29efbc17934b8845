#ifndef INCPOLY_INCPOLY_HPP
#define INCPOLY_INCPOLY_HPP

#include "incpoly/bounds.hpp"
#include "incpoly/companion.hpp"
#include "incpoly/error.hpp"
#include "incpoly/hull.hpp"
#include "incpoly/majorization.hpp"
#include "incpoly/polynomial.hpp"
#include "incpoly/roots.hpp"
#include "incpoly/types.hpp"
#include "incpoly/weights.hpp"

#endif // INCPOLY_INCPOLY_HPP
