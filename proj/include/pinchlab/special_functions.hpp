#ifndef PINCHLAB_SPECIAL_FUNCTIONS_HPP
#define PINCHLAB_SPECIAL_FUNCTIONS_HPP

#include <complex>

#include "pinchlab/errors.hpp"

namespace pinchlab {

using cdouble = std::complex<double>;

// Log of the Gamma function for complex z, accurate to better than 1e-12
// relative for |z| <= 1e4.  exp(log_gamma(z)) == Gamma(z); identities that
// involve the imaginary part alone are only guaranteed mod 2*pi*i (the
// reflected half-plane Re z < 1/2 uses the log-sine formula, which fixes
// the branch only up to whole turns).
//
// Throws PoleError when z is within 1e-14 of a non-positive integer.
cdouble log_gamma(cdouble z);

// base^s = exp(s * log base) on the real logarithm branch.  The base must
// be a strictly positive real (every call site in this library raises a
// positive real quantity to a complex power); anything else is a
// DomainError.
cdouble complex_pow(cdouble base, cdouble s);

// log(1 - exp(-x)) for x > 0, accurate across the whole double range
// (x from 1e-300 up to ~745, where 1 - e^-x rounds to 1).
double log1m_exp(double x);

// log(1 + w) for complex w, |w| < 1.  Series evaluation below |w| = 1e-4
// keeps the absolute error of long near-unit products at the epsilon level.
cdouble log1p_complex(cdouble w);

// log(sin(pi z)) mod 2*pi*i, overflow-safe for large |Im z|.
cdouble log_sin_pi(cdouble z);

// True when z is within tol of a non-positive integer.
bool near_nonpositive_integer(cdouble z, double tol);

}  // namespace pinchlab

#endif
