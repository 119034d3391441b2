#pragma once

#include <vector>

#include "amoeba/laurent.hpp"

namespace amoeba {

// Roots of sum_k c[k] w^k. Exactly-zero leading coefficients are trimmed;
// zero trailing coefficients contribute roots at 0. Degrees 1 and 2 use
// closed forms, higher degrees a balanced companion matrix followed by a
// Newton polish.
std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs);

// Aberth-Ehrlich simultaneous refinement from a warm start. Returns false
// when not converged within max_iters (roots may still be partially improved).
bool aberth_refine(const std::vector<Complex>& coeffs, std::vector<Complex>& roots,
                   int max_iters = 60, double tol = 1e-13);

// Warm-start path for sweeps: refine the previous sample's roots, falling
// back to the companion matrix when refinement stalls.
std::vector<Complex> polynomial_roots_warm(const std::vector<Complex>& coeffs,
                                           const std::vector<Complex>& prev);

Complex horner(const std::vector<Complex>& coeffs, Complex w);

// Real roots of a real-coefficient polynomial (imaginary parts filtered at
// imag_tol * (1 + |root|)).
std::vector<double> real_roots(const std::vector<Complex>& coeffs, double imag_tol = 1e-9);

// Scale-normalized product of squared root gaps; a proxy for the
// discriminant magnitude used to flag near-multiple roots.
double normalized_root_separation(const std::vector<Complex>& roots);

}  // namespace amoeba
