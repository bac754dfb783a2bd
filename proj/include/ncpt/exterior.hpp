#pragma once

// Integral exterior algebra on n generators: sparse Z-linear combinations of
// basis wedges e_J indexed by strictly increasing subsets J of {1..n}, wedge
// product with inversion-count signs, Z/2 grading, and two total orders on
// the rank-n basis used when flattening elements to coordinate vectors.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncpt/intmat.hpp"

namespace ncpt {

/// Strictly increasing 1-based index set naming a basis wedge e_J.
using IndexSet = std::vector<int>;

[[nodiscard]] inline bool is_valid_index_set(const IndexSet& j, int n) {
  int prev = 0;
  for (int v : j) {
    if (v <= prev || v > n) return false;
    prev = v;
  }
  return true;
}

/// Sign of merging two disjoint increasing sets: parity of the number of
/// pairs (a, b) with a in j, b in k, a > b. Returns 0 when they intersect.
[[nodiscard]] inline int merge_sign(const IndexSet& j, const IndexSet& k) {
  std::size_t inversions = 0;
  for (int a : j)
    for (int b : k) {
      if (a == b) return 0;
      if (a > b) ++inversions;
    }
  return (inversions % 2 == 0) ? 1 : -1;
}

/// Element of Lambda*(Z^n): finitely supported map from index sets to
/// integers, zero coefficients pruned eagerly.
class ExteriorElement {
 public:
  explicit ExteriorElement(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("ExteriorElement: rank must be positive");
  }

  [[nodiscard]] static ExteriorElement zero(int n) { return ExteriorElement(n); }

  [[nodiscard]] static ExteriorElement basis(int n, IndexSet j) {
    ExteriorElement e(n);
    if (!is_valid_index_set(j, n))
      throw std::invalid_argument("ExteriorElement: index set must be strictly increasing in 1..n");
    e.terms_[std::move(j)] = 1;
    return e;
  }

  [[nodiscard]] static ExteriorElement generator(int n, int i) { return basis(n, {i}); }

  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<IndexSet, Int>& terms() const { return terms_; }

  [[nodiscard]] Int coefficient(const IndexSet& j) const {
    auto it = terms_.find(j);
    return it == terms_.end() ? Int(0) : it->second;
  }

  void set_coefficient(IndexSet j, Int c) {
    if (!is_valid_index_set(j, n_))
      throw std::invalid_argument("ExteriorElement: index set must be strictly increasing in 1..n");
    if (c == 0)
      terms_.erase(j);
    else
      terms_[std::move(j)] = std::move(c);
  }

  void add_term(const IndexSet& j, const Int& c) {
    if (c == 0) return;
    if (!is_valid_index_set(j, n_))
      throw std::invalid_argument("ExteriorElement: index set must be strictly increasing in 1..n");
    Int& slot = terms_[j];
    slot += c;
    if (slot == 0) terms_.erase(j);
  }

  /// Degree when homogeneous, nullopt for 0 or mixed-degree elements.
  [[nodiscard]] std::optional<std::size_t> homogeneous_degree() const {
    std::optional<std::size_t> deg;
    for (const auto& [j, c] : terms_) {
      if (!deg)
        deg = j.size();
      else if (*deg != j.size())
        return std::nullopt;
    }
    return deg;
  }

  /// True when all terms have degrees of the given parity (0 even, 1 odd).
  [[nodiscard]] bool has_parity(int parity) const {
    for (const auto& [j, c] : terms_)
      if (static_cast<int>(j.size() % 2) != parity) return false;
    return true;
  }

  friend bool operator==(const ExteriorElement& x, const ExteriorElement& y) {
    return x.n_ == y.n_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const ExteriorElement& x, const ExteriorElement& y) {
    return !(x == y);
  }

  ExteriorElement operator+(const ExteriorElement& o) const {
    require_same_rank(o);
    ExteriorElement r = *this;
    for (const auto& [j, c] : o.terms_) r.add_term(j, c);
    return r;
  }

  ExteriorElement operator-(const ExteriorElement& o) const {
    require_same_rank(o);
    ExteriorElement r = *this;
    for (const auto& [j, c] : o.terms_) r.add_term(j, -c);
    return r;
  }

  ExteriorElement operator-() const {
    ExteriorElement r(n_);
    for (const auto& [j, c] : terms_) r.terms_[j] = -c;
    return r;
  }

  ExteriorElement operator*(const Int& s) const {
    ExteriorElement r(n_);
    if (s == 0) return r;
    for (const auto& [j, c] : terms_) r.terms_[j] = c * s;
    return r;
  }

  [[nodiscard]] ExteriorElement wedge(const ExteriorElement& o) const {
    require_same_rank(o);
    ExteriorElement r(n_);
    for (const auto& [j, cj] : terms_)
      for (const auto& [k, ck] : o.terms_) {
        int sign = merge_sign(j, k);
        if (sign == 0) continue;
        IndexSet merged;
        merged.reserve(j.size() + k.size());
        std::merge(j.begin(), j.end(), k.begin(), k.end(), std::back_inserter(merged));
        r.add_term(merged, sign * cj * ck);
      }
    return r;
  }

  [[nodiscard]] std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [j, c] : terms_) {
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      first = false;
      Int a = abs(c);
      std::string name;
      if (j.empty()) {
        name = "1";
      } else {
        std::ostringstream ns;
        for (std::size_t t = 0; t < j.size(); ++t) {
          if (t) ns << "^";
          ns << "e" << j[t];
        }
        name = ns.str();
      }
      if (a == 1 && !j.empty()) os << name;
      else if (j.empty()) os << a;
      else os << a << "*" << name;
    }
    return os.str();
  }

 private:
  void require_same_rank(const ExteriorElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("ExteriorElement: rank mismatch");
  }

  int n_;
  std::map<IndexSet, Int> terms_;
};

[[nodiscard]] inline ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  return a.wedge(b);
}

/// Split into the even-degree and odd-degree parts; their sum is the input.
[[nodiscard]] inline std::pair<ExteriorElement, ExteriorElement> grade_split(
    const ExteriorElement& x) {
  ExteriorElement even(x.rank()), odd(x.rank());
  for (const auto& [j, c] : x.terms()) (j.size() % 2 == 0 ? even : odd).add_term(j, c);
  return {even, odd};
}

// --- ordered bases of Lambda*(Z^n) and its even/odd halves --------------------

/// Total order on basis index sets when flattening to coordinates.
enum class BasisOrder {
  Lex,   ///< by degree, then lexicographically
  Dim3,  ///< fixed hand-picked order for n = 3 (see dim3 lists below)
};

namespace detail {
inline const std::vector<IndexSet>& dim3_even() {
  static const std::vector<IndexSet> v = {{}, {1, 2}, {2, 3}, {1, 3}};
  return v;
}
inline const std::vector<IndexSet>& dim3_odd() {
  static const std::vector<IndexSet> v = {{1}, {2}, {3}, {1, 2, 3}};
  return v;
}

inline void emit_subsets(int n, std::size_t deg, std::vector<IndexSet>& out) {
  IndexSet cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (cur.size() == deg) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
}
}  // namespace detail

/// All index sets of the given degree parity (0 even, 1 odd) in the chosen order.
[[nodiscard]] inline std::vector<IndexSet> basis_index_sets(int n, int parity,
                                                            BasisOrder order) {
  if (n < 1) throw std::invalid_argument("basis_index_sets: rank must be positive");
  if (parity != 0 && parity != 1)
    throw std::invalid_argument("basis_index_sets: parity must be 0 or 1");
  if (order == BasisOrder::Dim3) {
    if (n != 3) throw std::invalid_argument("basis_index_sets: Dim3 order requires n = 3");
    return parity == 0 ? detail::dim3_even() : detail::dim3_odd();
  }
  std::vector<IndexSet> out;
  for (std::size_t deg = static_cast<std::size_t>(parity); deg <= static_cast<std::size_t>(n);
       deg += 2)
    detail::emit_subsets(n, deg, out);
  return out;
}

/// Every index set, all degrees: Lex lists by (degree, lexicographic); Dim3
/// lists its even half followed by its odd half.
[[nodiscard]] inline std::vector<IndexSet> basis_index_sets(int n, BasisOrder order) {
  if (n < 1) throw std::invalid_argument("basis_index_sets: rank must be positive");
  if (order == BasisOrder::Dim3) {
    if (n != 3) throw std::invalid_argument("basis_index_sets: Dim3 order requires n = 3");
    std::vector<IndexSet> out = detail::dim3_even();
    const auto& odd = detail::dim3_odd();
    out.insert(out.end(), odd.begin(), odd.end());
    return out;
  }
  std::vector<IndexSet> out;
  for (std::size_t deg = 0; deg <= static_cast<std::size_t>(n); ++deg)
    detail::emit_subsets(n, deg, out);
  return out;
}

/// Coordinates of a parity-homogeneous element in the chosen ordered basis.
[[nodiscard]] inline std::vector<Int> coordinates(const ExteriorElement& x, int parity,
                                                  BasisOrder order) {
  if (!x.has_parity(parity))
    throw std::invalid_argument("coordinates: element has terms of the other parity");
  auto basis = basis_index_sets(x.rank(), parity, order);
  std::vector<Int> v(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) v[i] = x.coefficient(basis[i]);
  return v;
}

[[nodiscard]] inline ExteriorElement from_coordinates(int n, int parity, BasisOrder order,
                                                      const std::vector<Int>& v) {
  auto basis = basis_index_sets(n, parity, order);
  if (v.size() != basis.size())
    throw std::invalid_argument("from_coordinates: coordinate length mismatch");
  ExteriorElement x(n);
  for (std::size_t i = 0; i < basis.size(); ++i) x.set_coefficient(basis[i], v[i]);
  return x;
}

// --- pair indexing for degree-2 data -------------------------------------------

/// Lexicographic enumeration of pairs (i, j), 1 <= i < j <= n:
/// (1,2), (1,3), ..., (1,n), (2,3), ..., (n-1,n).
struct PairIndex {
  explicit PairIndex(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("PairIndex: need n >= 1");
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) pairs_.push_back({i, j});
  }

  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] std::size_t count() const { return pairs_.size(); }
  [[nodiscard]] std::pair<int, int> pair(std::size_t p) const { return pairs_[p]; }

  [[nodiscard]] std::size_t index(int i, int j) const {
    if (i < 1 || j <= i || j > n_)
      throw std::invalid_argument("PairIndex: need 1 <= i < j <= n");
    // offset of row i, then distance j - i - 1 inside it
    std::size_t base = 0;
    for (int r = 1; r < i; ++r) base += static_cast<std::size_t>(n_ - r);
    return base + static_cast<std::size_t>(j - i - 1);
  }

  [[nodiscard]] const std::vector<std::pair<int, int>>& all() const { return pairs_; }

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace ncpt
