#pragma once

// Fundamental-group action on the exterior algebra: commuting unipotent
// generators indexed by pairs {i, j}, with a loop's action given by the
// winding matrix times the loop class. Matrices are taken in a chosen
// ordered basis of the even or odd half.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ncpt/exterior.hpp"
#include "ncpt/intmat.hpp"

namespace ncpt {

/// Action of the pair generator for {i, j} raised to the t-th power:
/// e_J -> e_J + t * (-1)^m * e_{J minus {i,j}} when {i,j} is contained in J
/// (m = number of elements of J strictly between i and j), identity otherwise.
/// The single-generator images again omit {i, j}, so powers are linear in t.
[[nodiscard]] inline ExteriorElement pair_generator_apply(const ExteriorElement& x, int i,
                                                          int j, const Int& t) {
  const int n = x.rank();
  if (i < 1 || j <= i || j > n)
    throw std::invalid_argument("pair_generator_apply: need 1 <= i < j <= n");
  if (t == 0) return x;
  ExteriorElement r = x;
  for (const auto& [set, c] : x.terms()) {
    bool has_i = std::binary_search(set.begin(), set.end(), i);
    bool has_j = std::binary_search(set.begin(), set.end(), j);
    if (!has_i || !has_j) continue;
    std::size_t between = 0;
    IndexSet reduced;
    reduced.reserve(set.size() - 2);
    for (int v : set) {
      if (v == i || v == j) continue;
      if (v > i && v < j) ++between;
      reduced.push_back(v);
    }
    Int sign = (between % 2 == 0) ? 1 : -1;
    r.add_term(reduced, t * sign * c);
  }
  return r;
}

/// Shape check for a winding matrix of a rank-n bundle over a b-torus:
/// one row per generator pair, one column per base circle.
inline void require_winding_shape(int n, const IntMatrix& w) {
  PairIndex pi(n);
  if (w.rows() != pi.count())
    throw std::invalid_argument("winding matrix: row count must equal the number of pairs");
  if (w.cols() < 1)
    throw std::invalid_argument("winding matrix: need at least one column");
}

/// Exponent vector t = W * gamma, listed in PairIndex order.
[[nodiscard]] inline std::vector<Int> loop_exponents(int n, const IntMatrix& w,
                                                     const std::vector<Int>& gamma) {
  require_winding_shape(n, w);
  if (gamma.size() != w.cols())
    throw std::invalid_argument("loop_exponents: loop class length must equal base rank");
  return w.apply(gamma);
}

/// Action of the loop gamma: the product over all pairs p of the p-th
/// generator raised to (W * gamma)_p. The generators commute, so the
/// enumeration order does not affect the result.
[[nodiscard]] inline ExteriorElement monodromy_apply(const ExteriorElement& x,
                                                     const IntMatrix& w,
                                                     const std::vector<Int>& gamma) {
  const int n = x.rank();
  auto t = loop_exponents(n, w, gamma);
  PairIndex pi(n);
  ExteriorElement r = x;
  for (std::size_t p = 0; p < pi.count(); ++p) {
    auto [i, j] = pi.pair(p);
    r = pair_generator_apply(r, i, j, t[p]);
  }
  return r;
}

/// Matrix of the loop action on the chosen parity half, in the chosen basis
/// order: column j holds the coordinates of the image of basis vector j.
[[nodiscard]] inline IntMatrix monodromy_matrix(int n, const IntMatrix& w,
                                                const std::vector<Int>& gamma, int parity,
                                                BasisOrder order) {
  auto basis = basis_index_sets(n, parity, order);
  IntMatrix m(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    auto image = monodromy_apply(ExteriorElement::basis(n, basis[col]), w, gamma);
    auto coords = coordinates(image, parity, order);
    for (std::size_t row = 0; row < basis.size(); ++row) m.at(row, col) = coords[row];
  }
  return m;
}

/// Both parity blocks for one loop.
struct MonodromyPair {
  IntMatrix even;
  IntMatrix odd;
};

[[nodiscard]] inline MonodromyPair monodromy_pair(int n, const IntMatrix& w,
                                                  const std::vector<Int>& gamma,
                                                  BasisOrder order) {
  return {monodromy_matrix(n, w, gamma, 0, order), monodromy_matrix(n, w, gamma, 1, order)};
}

/// Reads the pair exponent back off the action: the coefficient of the empty
/// wedge in M(e_k ^ e_l) - e_k ^ e_l equals the {k, l} entry of W * gamma.
[[nodiscard]] inline Int pair_readout(int n, const IntMatrix& w, const std::vector<Int>& gamma,
                                      int k, int l) {
  auto x = ExteriorElement::basis(n, {k, l});
  auto diff = monodromy_apply(x, w, gamma) - x;
  return diff.coefficient({});
}

/// True when every loop acts as the identity on the whole algebra;
/// equivalent to W = 0 because the pair readout recovers each entry.
[[nodiscard]] inline bool monodromy_is_trivial(int n, const IntMatrix& w) {
  require_winding_shape(n, w);
  return w.is_zero();
}

/// Named check that the action is additive in the winding matrix: the loop
/// action for w1 + w2 equals the product of the actions for w1 and w2, on
/// both parity blocks. Holds for all inputs because the commuting generators
/// are each linear in their exponent.
[[nodiscard]] inline bool additivity_check(int n, const IntMatrix& w1, const IntMatrix& w2,
                                           const std::vector<Int>& gamma,
                                           BasisOrder order = BasisOrder::Lex) {
  require_winding_shape(n, w1);
  require_winding_shape(n, w2);
  if (w1.rows() != w2.rows() || w1.cols() != w2.cols())
    throw std::invalid_argument("additivity_check: winding matrix shapes differ");
  auto sum = monodromy_pair(n, w1 + w2, gamma, order);
  auto a = monodromy_pair(n, w1, gamma, order);
  auto b = monodromy_pair(n, w2, gamma, order);
  return sum.even == a.even * b.even && sum.odd == a.odd * b.odd;
}

}  // namespace ncpt
