#include "amoeba/laurent.hpp"

#include <cmath>
#include <sstream>

namespace amoeba {

namespace {
bool coeff_is_zero(Complex c) { return c.real() == 0.0 && c.imag() == 0.0; }
}  // namespace

LaurentPolynomial LaurentPolynomial::monomial(MonomialExponent e, Complex coeff) {
  LaurentPolynomial p;
  p.add_term(e, coeff);
  return p;
}

LaurentPolynomial LaurentPolynomial::constant(Complex value) {
  return monomial({0, 0}, value);
}

LaurentPolynomial LaurentPolynomial::from_terms(
    const std::vector<std::pair<MonomialExponent, Complex>>& terms) {
  LaurentPolynomial p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

void LaurentPolynomial::add_term(MonomialExponent e, Complex coeff) {
  if (coeff_is_zero(coeff)) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, coeff);
    return;
  }
  it->second += coeff;
  if (coeff_is_zero(it->second)) terms_.erase(it);
}

Complex LaurentPolynomial::coefficient(MonomialExponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

double LaurentPolynomial::max_coefficient_modulus() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

Complex LaurentPolynomial::eval(Complex z1, Complex z2) const {
  Complex sum = 0.0;
  for (const auto& [e, c] : terms_) {
    sum += c * std::pow(z1, e.j) * std::pow(z2, e.k);
  }
  return sum;
}

LaurentPolynomial LaurentPolynomial::derivative_z1() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) {
    if (e.j != 0) out.add_term({e.j - 1, e.k}, c * double(e.j));
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::derivative_z2() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) {
    if (e.k != 0) out.add_term({e.j, e.k - 1}, c * double(e.k));
  }
  return out;
}

bool LaurentPolynomial::is_real(double tol) const {
  const double scale = max_coefficient_modulus();
  for (const auto& [e, c] : terms_) {
    if (std::abs(c.imag()) > tol * scale) return false;
  }
  return true;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& rhs) const {
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& rhs) const {
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& rhs) const {
  LaurentPolynomial out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      out.add_term({e1.j + e2.j, e1.k + e2.k}, c1 * c2);
    }
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(Complex scalar) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(e, c * scalar);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const { return *this * Complex(-1.0); }

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.imag() == 0.0) {
      os << c.real();
    } else {
      os << "(" << c.real() << "," << c.imag() << ")";
    }
    if (e.j != 0) os << "*x^" << e.j;
    if (e.k != 0) os << "*y^" << e.k;
  }
  return os.str();
}

LaurentPolynomial conjugate_reflect(const LaurentPolynomial& f) {
  LaurentPolynomial out;
  for (const auto& [e, c] : f.terms()) out.add_term(e, std::conj(c));
  return out;
}

LaurentPolynomial apply_unimodular(const LaurentPolynomial& f, const IntMat2& m) {
  if (m.det() != 1 && m.det() != -1) {
    throw Error(ErrorCode::NonUnimodularMatrix,
                "apply_unimodular: matrix determinant must be +1 or -1");
  }
  LaurentPolynomial out;
  for (const auto& [e, c] : f.terms()) out.add_term(m.apply(e), c);
  return out;
}

LaurentPolynomial scale_variables(const LaurentPolynomial& f, Complex c1, Complex c2) {
  LaurentPolynomial out;
  for (const auto& [e, c] : f.terms()) {
    out.add_term(e, c * std::pow(c1, e.j) * std::pow(c2, e.k));
  }
  return out;
}

double cospi(double p) {
  double r = std::fmod(p, 2.0);
  if (r < 0) r += 2.0;
  if (r == 0.0) return 1.0;
  if (r == 0.5 || r == 1.5) return 0.0;
  if (r == 1.0) return -1.0;
  return std::cos(r * M_PI);
}

double sinpi(double p) {
  double r = std::fmod(p, 2.0);
  if (r < 0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == 1.5) return -1.0;
  return std::sin(r * M_PI);
}

Complex unit_phase_pi(double p) { return {cospi(p), sinpi(p)}; }

}  // namespace amoeba
