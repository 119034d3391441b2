#pragma once

#include <array>
#include <complex>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "amoeba/errors.hpp"

namespace amoeba {

using Complex = std::complex<double>;

struct MonomialExponent {
  int j = 0;
  int k = 0;

  friend auto operator<=>(const MonomialExponent&, const MonomialExponent&) = default;
};

// 2x2 integer matrix acting on exponents, used for SL(2,Z) substitutions.
struct IntMat2 {
  int a = 1, b = 0;
  int c = 0, d = 1;

  int det() const { return a * d - b * c; }
  MonomialExponent apply(MonomialExponent e) const {
    return {a * e.j + b * e.k, c * e.j + d * e.k};
  }
  IntMat2 operator*(const IntMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

// A bivariate Laurent polynomial: finite support with complex coefficients.
// Stored coefficients are nonzero; the default-constructed value is the zero
// polynomial, which the operations below either tolerate or reject per their
// preconditions.
class LaurentPolynomial {
 public:
  using TermMap = std::map<MonomialExponent, Complex>;

  LaurentPolynomial() = default;

  static LaurentPolynomial monomial(MonomialExponent e, Complex coeff);
  static LaurentPolynomial constant(Complex value);
  static LaurentPolynomial from_terms(const std::vector<std::pair<MonomialExponent, Complex>>& terms);

  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  // Combines like terms and drops coefficients that cancel to zero.
  void add_term(MonomialExponent e, Complex coeff);

  Complex coefficient(MonomialExponent e) const;
  double max_coefficient_modulus() const;

  Complex eval(Complex z1, Complex z2) const;

  // Partial derivatives as Laurent polynomials (exponents may go negative).
  LaurentPolynomial derivative_z1() const;
  LaurentPolynomial derivative_z2() const;

  bool is_real(double tol = 0.0) const;

  LaurentPolynomial operator+(const LaurentPolynomial& rhs) const;
  LaurentPolynomial operator-(const LaurentPolynomial& rhs) const;
  LaurentPolynomial operator*(const LaurentPolynomial& rhs) const;
  LaurentPolynomial operator*(Complex scalar) const;
  LaurentPolynomial operator-() const;

  bool operator==(const LaurentPolynomial&) const = default;

  std::string to_string() const;

 private:
  TermMap terms_;
};

// Polynomial with every coefficient conjugated; evaluating the result at
// (conj z1, conj z2) equals the conjugate of f(z1, z2).
LaurentPolynomial conjugate_reflect(const LaurentPolynomial& f);

// Monomial substitution: exponent (j,k) -> M * (j,k). Throws for |det M| != 1.
LaurentPolynomial apply_unimodular(const LaurentPolynomial& f, const IntMat2& m);

// Coefficient action of z1 -> c1*z1, z2 -> c2*z2: a_{jk} -> a_{jk} c1^j c2^k.
// f(z1/b1, z2/b2) is scale_variables(f, 1/b1, 1/b2).
LaurentPolynomial scale_variables(const LaurentPolynomial& f, Complex c1, Complex c2);

// cos/sin of p*pi with exact values at integer and half-integer p, so that
// coefficients written as e^{i p pi} stay exactly real or imaginary.
double cospi(double p);
double sinpi(double p);
Complex unit_phase_pi(double p);  // e^{i p pi}

}  // namespace amoeba
