#include "amoeba/reality.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace amoeba {

namespace {

constexpr double kResidualTol = 1e-9;
constexpr double kImagTol = 1e-12;

double mod_pi_distance(double v) { return std::abs(std::remainder(v, M_PI)); }

struct SupportPhase {
  long long j, k;
  double theta;  // arg of coefficient
};

struct Row {
  long long j, k;
  double gamma;
};

// Exact rational p/q used only to snap and re-verify phases that are rational
// multiples of pi.
struct Rat {
  long long n = 0, d = 1;
  void reduce() {
    if (d < 0) { n = -n; d = -d; }
    long long g = std::gcd(std::abs(n), d);
    if (g > 1) { n /= g; d /= g; }
  }
};

bool rational_of_pi(double v, long long max_den, double tol, Rat* out) {
  // continued-fraction best approximation of v/pi
  double x = v / M_PI;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double y = x;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(y);
    if (fl > 1e17 || fl < -1e17) break;
    long long a = (long long)fl;
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = y - fl;
    if (rem < 1e-15) break;
    y = 1.0 / rem;
  }
  if (q1 == 0) return false;
  if (std::abs(x - double(p1) / double(q1)) > tol) return false;
  *out = Rat{p1, q1};
  out->reduce();
  return true;
}

struct Candidate {
  double alpha, beta1, beta2;
};

double residual(const std::vector<SupportPhase>& pts, const Candidate& c) {
  double worst = 0.0;
  for (const auto& p : pts) {
    worst = std::max(worst,
                     mod_pi_distance(c.alpha + double(p.j) * c.beta1 + double(p.k) * c.beta2 + p.theta));
  }
  return worst;
}

// One linear least-squares pass against the nearest pi-multiples, turning a
// candidate that passes at 1e-9 into a machine-precision witness.
Candidate polish(const std::vector<SupportPhase>& pts, Candidate c) {
  const int n = int(pts.size());
  Eigen::MatrixXd A(n, 3);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) {
    const auto& p = pts[i];
    double v = c.alpha + double(p.j) * c.beta1 + double(p.k) * c.beta2 + p.theta;
    double m = std::round(v / M_PI);
    A(i, 0) = 1.0;
    A(i, 1) = double(p.j);
    A(i, 2) = double(p.k);
    b(i) = m * M_PI - p.theta;
  }
  Eigen::Vector3d sol = A.colPivHouseholderQr().solve(b);
  Candidate refined{sol(0), sol(1), sol(2)};
  return residual(pts, refined) <= residual(pts, c) ? refined : c;
}

// If every phase in play is a rational multiple of pi, re-verify the witness
// exactly and snap the returned phases to those rationals.
bool snap_rational(const std::vector<SupportPhase>& pts, Candidate* c) {
  Rat ra, rb1, rb2;
  if (!rational_of_pi(c->alpha, 720, 1e-9, &ra)) return false;
  if (!rational_of_pi(c->beta1, 720, 1e-9, &rb1)) return false;
  if (!rational_of_pi(c->beta2, 720, 1e-9, &rb2)) return false;
  for (const auto& p : pts) {
    Rat rt;
    if (!rational_of_pi(p.theta, 1 << 20, 1e-11, &rt)) return false;
    // alpha + j beta1 + k beta2 + theta must be an integer (in units of pi)
    long long d = std::lcm(std::lcm(ra.d, rb1.d), std::lcm(rb2.d, rt.d));
    long long num = ra.n * (d / ra.d) + p.j * rb1.n * (d / rb1.d) +
                    p.k * rb2.n * (d / rb2.d) + rt.n * (d / rt.d);
    if (num % d != 0) return false;
  }
  c->alpha = M_PI * double(ra.n) / double(ra.d);
  c->beta1 = M_PI * double(rb1.n) / double(rb1.d);
  c->beta2 = M_PI * double(rb2.n) / double(rb2.d);
  return true;
}

}  // namespace

std::optional<RealityWitness> real_up_to_constant(const LaurentPolynomial& f) {
  if (f.empty()) {
    throw Error(ErrorCode::EmptyPolynomial, "real_up_to_constant: empty polynomial");
  }

  std::vector<SupportPhase> pts;
  pts.reserve(f.term_count());
  for (const auto& [e, c] : f.terms()) {
    pts.push_back({e.j, e.k, std::arg(c)});
  }

  // Difference rows vs the first support point; the congruence becomes
  //   (dj)*beta1 + (dk)*beta2 = gamma  (mod pi).
  const SupportPhase& p0 = pts.front();
  std::vector<Row> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    rows.push_back({pts[i].j - p0.j, pts[i].k - p0.k, -(pts[i].theta - p0.theta)});
  }

  // Integer (Euclidean) elimination on the first column, then the second.
  // Row ops are valid on the torus R/piZ, so gamma just follows along.
  auto eliminate_column = [](std::vector<Row*>& active, int col) -> Row* {
    auto val = [col](Row* r) { return col == 0 ? r->j : r->k; };
    for (;;) {
      Row* pivot = nullptr;
      for (Row* r : active) {
        if (val(r) != 0 && (!pivot || std::abs(val(r)) < std::abs(val(pivot)))) pivot = r;
      }
      if (!pivot) return nullptr;
      bool reduced_any = false;
      for (Row* r : active) {
        if (r == pivot || val(r) == 0) continue;
        long long q = val(r) / val(pivot);
        if (q != 0) {
          r->j -= q * pivot->j;
          r->k -= q * pivot->k;
          r->gamma -= double(q) * pivot->gamma;
        }
        if (val(r) != 0) reduced_any = true;
      }
      if (!reduced_any) {
        std::erase(active, pivot);
        return pivot;
      }
    }
  };

  std::vector<Row*> active;
  for (auto& r : rows) active.push_back(&r);
  Row* pivot1 = eliminate_column(active, 0);
  Row* pivot2 = eliminate_column(active, 1);
  // Remaining rows have zero integer part; their gamma must vanish mod pi,
  // which the final verification enforces.

  auto enumerate = [&](long long count) { return std::max<long long>(1, std::abs(count)); };
  const long long n2 = pivot2 ? enumerate(pivot2->k) : 1;
  const long long n1 = pivot1 ? enumerate(pivot1->j) : 1;

  for (long long s2 = 0; s2 < n2; ++s2) {
    double beta2 = pivot2 ? (pivot2->gamma + double(s2) * M_PI) / double(pivot2->k) : 0.0;
    for (long long s1 = 0; s1 < n1; ++s1) {
      double beta1 = 0.0;
      if (pivot1) {
        beta1 = (pivot1->gamma - double(pivot1->k) * beta2 + double(s1) * M_PI) /
                double(pivot1->j);
      }
      double alpha = -(p0.theta + double(p0.j) * beta1 + double(p0.k) * beta2);
      Candidate cand{alpha, beta1, beta2};
      if (residual(pts, cand) > kResidualTol) continue;
      cand = polish(pts, cand);
      snap_rational(pts, &cand);
      RealityWitness w;
      w.a = Complex(std::cos(cand.alpha), std::sin(cand.alpha));
      w.b1 = Complex(std::cos(-cand.beta1), std::sin(-cand.beta1));
      w.b2 = Complex(std::cos(-cand.beta2), std::sin(-cand.beta2));
      return w;
    }
  }
  return std::nullopt;
}

LaurentPolynomial apply_reality_witness(const LaurentPolynomial& f, const RealityWitness& w) {
  const double scale = f.max_coefficient_modulus();
  LaurentPolynomial out;
  for (const auto& [e, c] : f.terms()) {
    Complex rotated = c * w.a * std::pow(w.b1, -e.j) * std::pow(w.b2, -e.k);
    if (std::abs(rotated.imag()) > kImagTol * scale) {
      throw Error(ErrorCode::InternalInconsistency,
                  "apply_reality_witness: residual imaginary part above tolerance");
    }
    out.add_term(e, Complex(rotated.real(), 0.0));
  }
  return out;
}

}  // namespace amoeba
