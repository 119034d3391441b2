#pragma once

#include <optional>

#include "amoeba/laurent.hpp"

namespace amoeba {

// Witness that f is real up to multiplication by a constant: a*f(z1/b1, z2/b2)
// has real coefficients. All three constants are unit modulus; only the
// phases matter.
struct RealityWitness {
  Complex a{1.0, 0.0};
  Complex b1{1.0, 0.0};
  Complex b2{1.0, 0.0};
};

// Solves the mod-pi congruence system
//   alpha + j*beta1 + k*beta2 + arg(a_jk) = 0  (mod pi)  for all (j,k)
// by integer elimination over the support lattice, enumerating the finitely
// many lattice-index candidates, and verifying every congruence within 1e-9.
// A found witness is polished by least squares and, when all phases are
// rational multiples of pi, snapped to the exact rationals.
//
// Absence of a witness is a valid result, not an error.
std::optional<RealityWitness> real_up_to_constant(const LaurentPolynomial& f);

// a*f(z1/b1, z2/b2) with the residual imaginary parts checked against
// 1e-12 * max|a_jk| and then dropped. Throws on check failure.
LaurentPolynomial apply_reality_witness(const LaurentPolynomial& f, const RealityWitness& w);

}  // namespace amoeba
