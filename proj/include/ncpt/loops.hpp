#pragma once

// Winding number of a sampled loop in the punctured plane: sum of phase
// increments between consecutive samples, closing step included. Steps of
// half a turn or more are rejected as undersampling instead of being
// silently misread.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncpt {

/// Raised when consecutive samples are too far apart in phase for the
/// increment to be read unambiguously.
struct AliasingError : std::runtime_error {
  explicit AliasingError(const std::string& what) : std::runtime_error(what) {}
};

struct WindingOptions {
  double tolerance = 1e-6;  ///< allowed distance (in turns) from an integer
};

/// Winding number of the closed loop through the given samples. Requires at
/// least three samples, none of them zero; each consecutive phase increment
/// (including the one closing the loop) must be strictly less than half a
/// turn in absolute value, and the accumulated total must sit within the
/// tolerance of a whole number of turns.
[[nodiscard]] inline long long winding_of_loop(const std::vector<std::complex<double>>& samples,
                                               const WindingOptions& opt = {}) {
  constexpr double pi = std::numbers::pi_v<double>;
  if (samples.size() < 3)
    throw std::invalid_argument("winding_of_loop: need at least three samples");
  for (const auto& z : samples)
    if (std::abs(z) == 0.0)
      throw std::invalid_argument("winding_of_loop: samples must avoid the origin");
  double total = 0.0;
  const std::size_t count = samples.size();
  for (std::size_t t = 0; t < count; ++t) {
    const auto& cur = samples[t];
    const auto& nxt = samples[(t + 1) % count];
    double step = std::arg(nxt / cur);
    if (!(std::abs(step) < pi))
      throw AliasingError("winding_of_loop: a phase step of half a turn or more between "
                          "samples " + std::to_string(t) + " and " +
                          std::to_string((t + 1) % count) + " cannot be read unambiguously");
    total += step;
  }
  double turns = total / (2.0 * pi);
  double rounded = std::round(turns);
  if (std::abs(turns - rounded) > opt.tolerance)
    throw std::invalid_argument("winding_of_loop: accumulated phase is not a whole number of "
                                "turns within tolerance");
  return static_cast<long long>(rounded);
}

}  // namespace ncpt
