#pragma once

// Numerical layer: the twisted convolution algebra of Z^n with exponential
// phase cocycle, its finite-dimensional clock/shift representations at
// rational parameters, a smooth finite-trace idempotent, and bimodule inner
// products of sampled functions on the line.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "ncpt/heisenberg.hpp"
#include "ncpt/intmat.hpp"

namespace ncpt {

using Complex = std::complex<double>;
using LatticePoint = std::vector<long long>;

inline constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;

/// Integer exponent matrix of the phase picked up when reordering a pair of
/// lattice translations: entry (i, j), i < j, multiplies the (i, j) angle.
[[nodiscard]] inline IntMatrix phase_exponents(const LatticePoint& a, const LatticePoint& b) {
  std::vector<Int> ai(a.begin(), a.end()), bi(b.begin(), b.end());
  return transgression_pairing(ai, bi);
}

/// Finitely supported function on Z^n with complex values.
struct TwistedElement {
  int n = 0;
  std::map<LatticePoint, Complex> coeffs;

  [[nodiscard]] Complex at(const LatticePoint& m) const {
    auto it = coeffs.find(m);
    return it == coeffs.end() ? Complex(0.0, 0.0) : it->second;
  }

  void add(const LatticePoint& m, Complex c) {
    if (m.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("TwistedElement: lattice point has wrong length");
    auto [it, inserted] = coeffs.try_emplace(m, c);
    if (!inserted) it->second += c;
  }

  void prune(double tol) {
    for (auto it = coeffs.begin(); it != coeffs.end();)
      it = (std::abs(it->second) <= tol) ? coeffs.erase(it) : std::next(it);
  }
};

[[nodiscard]] inline TwistedElement element_zero(int n) {
  if (n < 1) throw std::invalid_argument("TwistedElement: rank must be positive");
  return TwistedElement{n, {}};
}

[[nodiscard]] inline TwistedElement element_delta(int n, const LatticePoint& m,
                                                  Complex c = {1.0, 0.0}) {
  auto e = element_zero(n);
  e.add(m, c);
  return e;
}

[[nodiscard]] inline TwistedElement element_add(const TwistedElement& f,
                                                const TwistedElement& g) {
  if (f.n != g.n) throw std::invalid_argument("TwistedElement: rank mismatch");
  TwistedElement r = f;
  for (const auto& [m, c] : g.coeffs) r.add(m, c);
  return r;
}

[[nodiscard]] inline TwistedElement element_scale(const TwistedElement& f, Complex s) {
  TwistedElement r = f;
  for (auto& [m, c] : r.coeffs) c *= s;
  return r;
}

[[nodiscard]] inline TwistedElement element_sub(const TwistedElement& f,
                                                const TwistedElement& g) {
  return element_add(f, element_scale(g, {-1.0, 0.0}));
}

[[nodiscard]] inline double l1_norm(const TwistedElement& f) {
  double s = 0.0;
  for (const auto& [m, c] : f.coeffs) s += std::abs(c);
  return s;
}

[[nodiscard]] inline double sup_norm(const TwistedElement& f) {
  double s = 0.0;
  for (const auto& [m, c] : f.coeffs) s = std::max(s, std::abs(c));
  return s;
}

/// Twisted convolution algebra of Z^n with angles theta_{ij} (PairIndex
/// order, one angle per pair i < j, in units of full turns).
class TwistedAlgebra {
 public:
  TwistedAlgebra(int n, std::vector<double> theta_upper) : n_(n), theta_(std::move(theta_upper)) {
    if (n < 1) throw std::invalid_argument("TwistedAlgebra: rank must be positive");
    if (theta_.size() != pair_count(n))
      throw std::invalid_argument("TwistedAlgebra: need one angle per pair i < j");
  }

  /// Two-generator algebra with a single angle.
  [[nodiscard]] static TwistedAlgebra rotation(double theta) { return {2, {theta}}; }

  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] double theta(int i, int j) const { return theta_[PairIndex(n_).index(i, j)]; }

  /// Total phase angle (in turns) of the cocycle at (a, b).
  [[nodiscard]] double phase_turns(const LatticePoint& a, const LatticePoint& b) const {
    require_point(a);
    require_point(b);
    double s = 0.0;
    PairIndex pi(n_);
    for (std::size_t p = 0; p < pi.count(); ++p) {
      auto [i, j] = pi.pair(p);
      s += theta_[p] * static_cast<double>(b[static_cast<std::size_t>(i - 1)]) *
           static_cast<double>(a[static_cast<std::size_t>(j - 1)]);
    }
    return s;
  }

  [[nodiscard]] Complex omega(const LatticePoint& a, const LatticePoint& b) const {
    return std::polar(1.0, two_pi * phase_turns(a, b));
  }

  /// (f * g)(s) = sum over t + r = s of f(t) g(r) omega(t, r).
  [[nodiscard]] TwistedElement multiply(const TwistedElement& f, const TwistedElement& g) const {
    require_element(f);
    require_element(g);
    TwistedElement out = element_zero(n_);
    for (const auto& [t, ct] : f.coeffs)
      for (const auto& [r, cr] : g.coeffs) {
        LatticePoint s(t.size());
        for (std::size_t k = 0; k < s.size(); ++k) s[k] = t[k] + r[k];
        out.add(s, ct * cr * omega(t, r));
      }
    return out;
  }

  /// f*(s) = conj(omega(s, -s)) * conj(f(-s)); an involution making each
  /// delta a unitary.
  [[nodiscard]] TwistedElement star(const TwistedElement& f) const {
    require_element(f);
    TwistedElement out = element_zero(n_);
    for (const auto& [m, c] : f.coeffs) {
      LatticePoint neg(m.size());
      for (std::size_t k = 0; k < m.size(); ++k) neg[k] = -m[k];
      out.add(neg, std::conj(omega(neg, m)) * std::conj(c));
    }
    return out;
  }

  /// Canonical trace: the coefficient at the origin.
  [[nodiscard]] Complex trace(const TwistedElement& f) const {
    require_element(f);
    return f.at(LatticePoint(static_cast<std::size_t>(n_), 0));
  }

 private:
  void require_point(const LatticePoint& a) const {
    if (a.size() != static_cast<std::size_t>(n_))
      throw std::invalid_argument("TwistedAlgebra: lattice point has wrong length");
  }
  void require_element(const TwistedElement& f) const {
    if (f.n != n_) throw std::invalid_argument("TwistedAlgebra: element rank mismatch");
  }

  int n_;
  std::vector<double> theta_;
};

// --- clock and shift matrices -----------------------------------------------------

struct ClockShiftPair {
  Eigen::MatrixXcd U;  ///< diag(zeta^0 .. zeta^{q-1}), zeta = exp(2 pi i p / q)
  Eigen::MatrixXcd V;  ///< cyclic shift e_k -> e_{k+1 mod q}
};

[[nodiscard]] inline ClockShiftPair clock_shift(int p, int q) {
  if (q < 1) throw std::invalid_argument("clock_shift: q must be positive");
  if (std::gcd(p, q) != 1)
    throw std::invalid_argument("clock_shift: p and q must be coprime");
  ClockShiftPair cs{Eigen::MatrixXcd::Zero(q, q), Eigen::MatrixXcd::Zero(q, q)};
  for (int k = 0; k < q; ++k) {
    long long e = (static_cast<long long>(p) * k) % q;
    if (e < 0) e += q;
    cs.U(k, k) = std::polar(1.0, two_pi * static_cast<double>(e) / static_cast<double>(q));
    cs.V((k + 1) % q, k) = 1.0;
  }
  return cs;
}

/// Image of f under the q-dimensional clock/shift representation sending the
/// first generator to the shift and the second to the clock: the lattice
/// point (m1, m2) contributes its coefficient times the matrix with entry
/// zeta^{m2 j} at ((j + m1) mod q, j). Exactly multiplicative for the
/// two-generator algebra at angle p / q.
[[nodiscard]] inline Eigen::MatrixXcd represent_clock_shift(const TwistedAlgebra& alg,
                                                            const TwistedElement& f, int p,
                                                            int q) {
  if (alg.rank() != 2 || f.n != 2)
    throw std::invalid_argument("represent_clock_shift: two-generator algebra only");
  if (q < 1) throw std::invalid_argument("represent_clock_shift: q must be positive");
  if (std::abs(alg.theta(1, 2) - static_cast<double>(p) / static_cast<double>(q)) > 1e-12)
    throw std::invalid_argument("represent_clock_shift: algebra angle must equal p / q");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(q, q);
  for (const auto& [m, c] : f.coeffs) {
    for (int j = 0; j < q; ++j) {
      long long row = ((m[0] + j) % q + q) % q;
      long long e = ((static_cast<long long>(p) * m[1] % q) * j) % q;
      if (e < 0) e += q;
      out(static_cast<Eigen::Index>(row), j) +=
          c * std::polar(1.0, two_pi * static_cast<double>(e) / static_cast<double>(q));
    }
  }
  return out;
}

[[nodiscard]] inline Complex normalized_trace(const Eigen::MatrixXcd& m) {
  return m.trace() / static_cast<double>(m.rows());
}

[[nodiscard]] inline double operator_norm(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

/// Eigenvalues of a Hermitian matrix, ascending.
[[nodiscard]] inline std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  return out;
}

// --- smooth bump profile and the finite-trace idempotent ---------------------------

/// C-infinity step: 0 for t <= 0, 1 for t >= 1, exp(-1/t) based in between.
[[nodiscard]] inline double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  double a = std::exp(-1.0 / t);
  double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

[[nodiscard]] inline double wrap_unit(double x) {
  double y = x - std::floor(x);
  return (y >= 1.0) ? 0.0 : y;  // guard against floor rounding
}

/// Periodized plateau of width theta: rises smoothly on [shift, shift+delta],
/// holds 1 until shift+theta, falls with the complementary ramp on
/// [shift+theta, shift+theta+delta], and is 0 elsewhere (all mod 1).
[[nodiscard]] inline double plateau_h(double x, double theta, double delta, double shift) {
  double y = wrap_unit(x - shift);
  if (y < delta) return smooth_step(y / delta);
  if (y <= theta) return 1.0;
  if (y < theta + delta) return 1.0 - smooth_step((y - theta) / delta);
  return 0.0;
}

/// sqrt(h (1 - h)) on the rising ramp only, 0 elsewhere; the signature
/// matches plateau_h so the two can be passed interchangeably.
[[nodiscard]] inline double plateau_g(double x, [[maybe_unused]] double theta, double delta,
                                      double shift) {
  double y = wrap_unit(x - shift);
  if (y <= 0.0 || y >= delta) return 0.0;
  double h = smooth_step(y / delta);
  return std::sqrt(std::max(0.0, h * (1.0 - h)));
}

/// Fourier coefficients c_k, k = -truncation .. truncation, of a 1-periodic
/// function, by the N-point rectangle rule (spectrally accurate here).
[[nodiscard]] inline std::vector<Complex> fourier_coefficients(
    const std::function<double(double)>& fn, int truncation, std::size_t n_points = 4096) {
  if (truncation < 0) throw std::invalid_argument("fourier_coefficients: negative truncation");
  if (n_points == 0) throw std::invalid_argument("fourier_coefficients: need sample points");
  std::vector<double> samples(n_points);
  for (std::size_t j = 0; j < n_points; ++j)
    samples[j] = fn(static_cast<double>(j) / static_cast<double>(n_points));
  std::vector<Complex> out(static_cast<std::size_t>(2 * truncation + 1));
  for (int k = -truncation; k <= truncation; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n_points; ++j) {
      double ang = -two_pi * static_cast<double>(k) * static_cast<double>(j) /
                   static_cast<double>(n_points);
      acc += samples[j] * std::polar(1.0, ang);
    }
    out[static_cast<std::size_t>(k + truncation)] = acc / static_cast<double>(n_points);
  }
  return out;
}

struct RieffelOptions {
  int truncation = 32;             ///< Fourier cutoff in each variable
  std::size_t quadrature_points = 4096;
  std::optional<double> delta;     ///< ramp width; default min(theta, 1-theta)/2
  double shift = 0.0;              ///< plateau offset
};

struct RieffelProjection {
  TwistedElement element;       ///< Hermitian by construction
  double theta = 0.0;
  double delta = 0.0;
  double shift = 0.0;
  int truncation = 0;
  std::vector<Complex> h_hat;   ///< plateau coefficients, k = -D..D
  std::vector<Complex> g_hat;   ///< ramp coefficients, k = -D..D
};

/// Smooth idempotent of trace theta in the two-generator algebra: the
/// plateau applied to the first generator, plus the ramp times the second
/// generator and the adjoint of that part. The plateau and ramp satisfy
///   g(x) g(x + theta) = 0,
///   g(x) (h(x) + h(x + theta)) = g(x),
///   h(x)^2 + g(x)^2 + g(x - theta)^2 = h(x),
/// which make the element idempotent up to Fourier truncation error.
[[nodiscard]] inline RieffelProjection rieffel_projection(const TwistedAlgebra& alg,
                                                          RieffelOptions opt = {}) {
  if (alg.rank() != 2)
    throw std::invalid_argument("rieffel_projection: two-generator algebra only");
  const double theta = alg.theta(1, 2);
  if (!(theta > 0.0 && theta < 1.0))
    throw std::invalid_argument("rieffel_projection: angle must lie strictly between 0 and 1");
  const double default_delta = std::min(theta, 1.0 - theta) / 2.0;
  const double delta = opt.delta.value_or(default_delta);
  if (!(delta > 0.0 && delta <= default_delta + 1e-15))
    throw std::invalid_argument("rieffel_projection: ramp width out of range");
  const int d = opt.truncation;
  const double shift = opt.shift;

  RieffelProjection out;
  out.theta = theta;
  out.delta = delta;
  out.shift = shift;
  out.truncation = d;
  out.h_hat = fourier_coefficients([&](double x) { return plateau_h(x, theta, delta, shift); },
                                   d, opt.quadrature_points);
  out.g_hat = fourier_coefficients([&](double x) { return plateau_g(x, theta, delta, shift); },
                                   d, opt.quadrature_points);

  TwistedElement h_part = element_zero(2);
  TwistedElement gv_part = element_zero(2);
  for (int k = -d; k <= d; ++k) {
    h_part.add({k, 0}, out.h_hat[static_cast<std::size_t>(k + d)]);
    gv_part.add({k, 1}, out.g_hat[static_cast<std::size_t>(k + d)]);
  }
  out.element = element_add(h_part, element_add(gv_part, alg.star(gv_part)));
  return out;
}

// --- sampled functions on the line and bimodule inner products ----------------------

/// Uniform complex samples on [a, b] (endpoints included), linearly
/// interpolated between nodes and zero outside the window.
struct SampledFunction {
  double a = 0.0;
  double b = 0.0;
  std::vector<Complex> values;

  [[nodiscard]] double step() const {
    return (b - a) / static_cast<double>(values.size() - 1);
  }

  [[nodiscard]] Complex value_at(double x) const {
    if (x < a || x > b) return {0.0, 0.0};
    double t = (x - a) / step();
    auto i = static_cast<std::size_t>(std::floor(t));
    if (i + 1 >= values.size()) return values.back();
    double frac = t - static_cast<double>(i);
    return values[i] * (1.0 - frac) + values[i + 1] * frac;
  }
};

[[nodiscard]] inline SampledFunction sample_function(const std::function<Complex(double)>& fn,
                                                     double a, double b, std::size_t n_points) {
  if (!(b > a) || n_points < 2)
    throw std::invalid_argument("sample_function: need b > a and at least two points");
  SampledFunction s{a, b, std::vector<Complex>(n_points)};
  for (std::size_t i = 0; i < n_points; ++i)
    s.values[i] = fn(a + (b - a) * static_cast<double>(i) / static_cast<double>(n_points - 1));
  return s;
}

/// Trapezoid integral of conj(xi(x + m (theta + 1))) eta(x) exp(-2 pi i n x)
/// over eta's window, scaled by theta + 1. Both functions must share the
/// same grid; the shifted factor is read through interpolation.
[[nodiscard]] inline Complex module_inner_product(const SampledFunction& xi,
                                                  const SampledFunction& eta, double theta,
                                                  long long m, long long n) {
  if (xi.a != eta.a || xi.b != eta.b || xi.values.size() != eta.values.size())
    throw std::invalid_argument("module_inner_product: grids must match");
  const double eps = theta + 1.0;
  const double h = eta.step();
  const std::size_t count = eta.values.size();
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < count; ++i) {
    double x = eta.a + h * static_cast<double>(i);
    Complex term = std::conj(xi.value_at(x + static_cast<double>(m) * eps)) * eta.values[i] *
                   std::polar(1.0, -two_pi * static_cast<double>(n) * x);
    double w = (i == 0 || i + 1 == count) ? 0.5 : 1.0;
    acc += w * term;
  }
  return eps * h * acc;
}

}  // namespace ncpt
