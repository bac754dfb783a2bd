#pragma once

// Exact integer linear algebra: dense matrices over arbitrary-precision
// integers, Hermite and Smith normal forms with transform tracking,
// factorization of unimodular matrices into elementary and permutation
// generators, and left-multiplication orbit decisions under GL_k(Z) / SL_k(Z).

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ncpt {

using Int = boost::multiprecision::cpp_int;

/// Thrown when an operation requires |det| = 1 and the argument fails that.
struct NotUnimodular : std::invalid_argument {
  explicit NotUnimodular(const std::string& what) : std::invalid_argument(what) {}
};

/// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("IntMatrix: dimensions must be positive");
  }

  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0)
      throw std::invalid_argument("IntMatrix: dimensions must be positive");
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_)
        throw std::invalid_argument("IntMatrix: ragged initializer");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  [[nodiscard]] static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  [[nodiscard]] Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  [[nodiscard]] const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  [[nodiscard]] bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& v) { return v == 0; });
  }

  [[nodiscard]] bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }

  IntMatrix operator+(const IntMatrix& o) const {
    require_same_shape(o);
    IntMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
  }

  IntMatrix operator-(const IntMatrix& o) const {
    require_same_shape(o);
    IntMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
  }

  IntMatrix operator-() const {
    IntMatrix r = *this;
    for (auto& v : r.a_) v = -v;
    return r;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
      throw std::invalid_argument("IntMatrix: product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& v = at(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }

  IntMatrix operator*(const Int& s) const {
    IntMatrix r = *this;
    for (auto& v : r.a_) v *= s;
    return r;
  }

  [[nodiscard]] std::vector<Int> apply(const std::vector<Int>& x) const {
    if (x.size() != cols_)
      throw std::invalid_argument("IntMatrix: vector length mismatch");
    std::vector<Int> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
  }

  [[nodiscard]] IntMatrix transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  [[nodiscard]] IntMatrix pow(unsigned long e) const {
    if (!is_square()) throw std::invalid_argument("IntMatrix::pow: not square");
    IntMatrix r = identity(rows_);
    IntMatrix b = *this;
    while (e > 0) {
      if (e & 1u) r = r * b;
      b = b * b;
      e >>= 1u;
    }
    return r;
  }

  void row_swap(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }
  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
  }
  /// row i += m * row l
  void row_addmul(std::size_t i, std::size_t l, const Int& m) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) += m * at(l, c);
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
  }
  void col_negate(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) = -at(r, i);
  }
  /// col i += m * col l
  void col_addmul(std::size_t i, std::size_t l, const Int& m) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, i) += m * at(r, l);
  }

  [[nodiscard]] std::string to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i == 0 ? "[" : " ");
      os << "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) os << ", ";
        os << at(i, j);
      }
      os << "]" << (i + 1 == rows_ ? "]" : ",\n");
    }
    return os.str();
  }

 private:
  void require_same_shape(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("IntMatrix: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
[[nodiscard]] inline Int det(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: not square");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row_swap(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

/// Floor division (quotient rounded toward -infinity); divisor must be > 0.
[[nodiscard]] inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

struct HnfResult {
  IntMatrix H;  ///< row-style Hermite normal form
  IntMatrix U;  ///< unimodular, H = U * M
};

/// Row-style Hermite normal form: H = U*M with U unimodular, H in row
/// echelon shape, pivots positive, entries above each pivot reduced into
/// [0, pivot). H is the canonical representative of the GL_k(Z) left orbit.
[[nodiscard]] inline HnfResult hnf(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(rows);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclidean reduction of column c over rows r..end.
    for (;;) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        if (piv == rows || abs(h.at(i, c)) < abs(h.at(piv, c))) piv = i;
      }
      if (piv == rows) break;  // column all zero below r
      if (piv != r) {
        h.row_swap(r, piv);
        u.row_swap(r, piv);
      }
      if (h.at(r, c) < 0) {
        h.row_negate(r);
        u.row_negate(r);
      }
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h.at(i, c) == 0) continue;
        Int q = floor_div(h.at(i, c), h.at(r, c));
        if (q != 0) {
          h.row_addmul(i, r, -q);
          u.row_addmul(i, r, -q);
        }
        if (h.at(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h.at(r, c) == 0) continue;  // no pivot in this column
    // Reduce entries above the pivot into [0, pivot).
    for (std::size_t i = 0; i < r; ++i) {
      Int q = floor_div(h.at(i, c), h.at(r, c));
      if (q != 0) {
        h.row_addmul(i, r, -q);
        u.row_addmul(i, r, -q);
      }
    }
    ++r;
  }
  return {h, u};
}

/// Number of nonzero rows of a row-echelon matrix.
[[nodiscard]] inline std::size_t echelon_rank(const IntMatrix& h) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (h.at(i, j) != 0) { nz = true; break; }
    if (nz) ++rank;
  }
  return rank;
}

/// Inverse of a unimodular matrix (H = I forces M^{-1} = U); nullopt if
/// the matrix is not unimodular.
[[nodiscard]] inline std::optional<IntMatrix> inverse_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  auto [h, u] = hnf(m);
  if (!h.is_identity()) return std::nullopt;
  return u;
}

struct SnfResult {
  IntMatrix S;  ///< diagonal, nonnegative, divisor chain d_i | d_{i+1}
  IntMatrix U;  ///< unimodular row transform
  IntMatrix V;  ///< unimodular column transform, S = U * M * V
};

/// Smith normal form with both transforms.
[[nodiscard]] inline SnfResult snf(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix s = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);
  const std::size_t t_max = std::min(rows, cols);
  for (std::size_t t = 0; t < t_max; ++t) {
    // Find minimal nonzero entry of the trailing submatrix.
    auto find_pivot = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (s.at(i, j) == 0) continue;
          if (!best || abs(s.at(i, j)) < abs(s.at(best->first, best->second)))
            best = {{i, j}};
        }
      return best;
    };
    if (!find_pivot()) break;  // trailing block is zero
    for (;;) {
      auto p = find_pivot();
      if (p->first != t) { s.row_swap(t, p->first); u.row_swap(t, p->first); }
      if (p->second != t) { s.col_swap(t, p->second); v.col_swap(t, p->second); }
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.at(i, t) == 0) continue;
        Int q = s.at(i, t) / s.at(t, t);
        if (q != 0) { s.row_addmul(i, t, -q); u.row_addmul(i, t, -q); }
        if (s.at(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.at(t, j) == 0) continue;
        Int q = s.at(t, j) / s.at(t, t);
        if (q != 0) { s.col_addmul(j, t, -q); v.col_addmul(j, t, -q); }
        if (s.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;
      // Pivot divides the rest of its row/col; enforce divisibility of the
      // trailing block by folding an offending row into row t.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows && fixed; ++i)
        for (std::size_t j = t + 1; j < cols && fixed; ++j)
          if (s.at(i, j) % s.at(t, t) != 0) {
            s.row_addmul(t, i, 1);
            u.row_addmul(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (s.at(t, t) < 0) { s.row_negate(t); u.row_negate(t); }
  }
  return {s, u, v};
}

// --- unimodular factorization ------------------------------------------------

/// I + m * e_{k,l} (1-based indices, k != l). Left action adds m * row l to row k.
struct Elementary {
  int k = 0, l = 0;
  Int m;
  friend bool operator==(const Elementary& a, const Elementary& b) {
    return a.k == b.k && a.l == b.l && a.m == b.m;
  }
};

/// Column j carries e_{sigma(j)} (1-based images), i.e. matrix (delta_{i,sigma(j)}).
struct Permutation {
  std::vector<int> sigma;
  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.sigma == b.sigma;
  }
};

using GeneratorToken = std::variant<Elementary, Permutation>;

[[nodiscard]] inline IntMatrix token_matrix(std::size_t n, const GeneratorToken& t) {
  if (const auto* e = std::get_if<Elementary>(&t)) {
    IntMatrix m = IntMatrix::identity(n);
    m.at(static_cast<std::size_t>(e->k - 1), static_cast<std::size_t>(e->l - 1)) = e->m;
    return m;
  }
  const auto& p = std::get<Permutation>(t);
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    m.at(static_cast<std::size_t>(p.sigma[j] - 1), j) = 1;
  return m;
}

[[nodiscard]] inline GeneratorToken token_inverse(const GeneratorToken& t) {
  if (const auto* e = std::get_if<Elementary>(&t)) return Elementary{e->k, e->l, -e->m};
  const auto& p = std::get<Permutation>(t);
  std::vector<int> inv(p.sigma.size());
  for (std::size_t j = 0; j < p.sigma.size(); ++j)
    inv[static_cast<std::size_t>(p.sigma[j] - 1)] = static_cast<int>(j + 1);
  return Permutation{inv};
}

struct UnimodularFactorization {
  std::size_t n = 0;
  std::vector<GeneratorToken> factors;  ///< product in list order equals the input

  [[nodiscard]] IntMatrix product() const {
    IntMatrix m = IntMatrix::identity(n);
    for (const auto& t : factors) m = m * token_matrix(n, t);
    return m;
  }
};

/// If m is a permutation matrix, recover sigma (1-based column images).
[[nodiscard]] inline std::optional<std::vector<int>> as_permutation(const IntMatrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  std::vector<int> sigma(n, 0);
  std::vector<bool> used(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t ones = 0, where = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (m.at(i, j) == 0) continue;
      if (m.at(i, j) != 1) return std::nullopt;
      ++ones;
      where = i;
    }
    if (ones != 1 || used[where]) return std::nullopt;
    used[where] = true;
    sigma[j] = static_cast<int>(where + 1);
  }
  return sigma;
}

/// Factor a unimodular matrix into elementary and permutation generators whose
/// ordered product reconstructs the input exactly. det = -1 contributes one
/// leading transposition; permutation matrices are returned as single tokens.
/// Throws NotUnimodular when |det| != 1, and for the 1x1 matrix [-1], which the
/// generator alphabet cannot express.
[[nodiscard]] inline UnimodularFactorization factor_unimodular(const IntMatrix& psi) {
  if (!psi.is_square())
    throw NotUnimodular("factor_unimodular: matrix is not square");
  const std::size_t n = psi.rows();
  const Int d = det(psi);
  if (d != 1 && d != -1)
    throw NotUnimodular("factor_unimodular: determinant is not +1 or -1");

  UnimodularFactorization out{n, {}};
  if (psi.is_identity()) return out;
  if (auto sigma = as_permutation(psi)) {
    out.factors.emplace_back(Permutation{*sigma});
    return out;
  }

  IntMatrix a = psi;
  if (d == -1) {
    if (n == 1)
      throw NotUnimodular(
          "factor_unimodular: [-1] is not a product of elementary and permutation generators");
    std::vector<int> sw(n);
    std::iota(sw.begin(), sw.end(), 1);
    std::swap(sw[0], sw[1]);
    out.factors.emplace_back(Permutation{sw});
    a.row_swap(0, 1);  // a = P * psi now has det +1
  }

  struct Op { std::size_t i, l; Int m; };
  std::vector<Op> ops;  // applied to a on the left, in order
  auto addmul = [&](std::size_t i, std::size_t l, const Int& m) {
    if (m == 0) return;
    a.row_addmul(i, l, m);
    ops.push_back({i, l, m});
  };
  // (R_i, R_j) -> (R_j, -R_i) as three elementary operations.
  auto signed_swap = [&](std::size_t i, std::size_t j) {
    addmul(i, j, 1);
    addmul(j, i, -1);
    addmul(i, j, 1);
  };

  for (std::size_t c = 0; c < n; ++c) {
    if (a.at(c, c) == 0) {
      std::size_t r = c + 1;
      while (r < n && a.at(r, c) == 0) ++r;
      if (r == n) throw std::logic_error("factor_unimodular: lost rank");
      signed_swap(c, r);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      while (a.at(r, c) != 0) {
        Int q = a.at(r, c) / a.at(c, c);
        addmul(r, c, -q);
        if (a.at(r, c) != 0) signed_swap(c, r);
      }
    }
    if (a.at(c, c) < 0) {
      if (c + 1 >= n) throw std::logic_error("factor_unimodular: sign imbalance");
      // Two signed swaps negate both rows; row c+1 keeps its zero prefix.
      signed_swap(c, c + 1);
      signed_swap(c, c + 1);
    }
  }
  for (std::size_t c = n; c-- > 1;)
    for (std::size_t r = 0; r < c; ++r)
      if (a.at(r, c) != 0) addmul(r, c, -a.at(r, c));
  if (!a.is_identity()) throw std::logic_error("factor_unimodular: reduction failed");

  // ops_T ... ops_1 * A0 = I, hence A0 = inv(op_1) * ... * inv(op_T).
  for (const auto& op : ops)
    out.factors.emplace_back(Elementary{static_cast<int>(op.i + 1),
                                        static_cast<int>(op.l + 1), -op.m});
  return out;
}

// --- left-multiplication orbits ----------------------------------------------

/// Some G in GL_k(Z) with B = G * A, or nullopt when the HNF orbits differ.
[[nodiscard]] inline std::optional<IntMatrix> gl_orbit_transform(const IntMatrix& a,
                                                                 const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  auto ra = hnf(a);
  auto rb = hnf(b);
  if (ra.H != rb.H) return std::nullopt;
  auto ub_inv = inverse_unimodular(rb.U);
  IntMatrix g = (*ub_inv) * ra.U;  // B = U_B^{-1} * U_A * A
  if (g * a != b) throw std::logic_error("gl_orbit_transform: witness failed re-check");
  return g;
}

[[nodiscard]] inline bool gl_orbit_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return hnf(a).H == hnf(b).H;
}

/// Some G in SL_k(Z) with B = G * A. When the only rational solution has
/// det -1 (full row rank) there is no SL witness; when rank < k the HNF
/// transform's zero row yields a determinant-flip stabilizer.
[[nodiscard]] inline std::optional<IntMatrix> sl_orbit_transform(const IntMatrix& a,
                                                                 const IntMatrix& b) {
  auto g0 = gl_orbit_transform(a, b);
  if (!g0) return std::nullopt;
  if (det(*g0) == 1) return g0;
  const std::size_t k = a.rows();
  auto ra = hnf(a);
  if (echelon_rank(ra.H) == k) return std::nullopt;  // G unique over Q, det -1
  IntMatrix dflip = IntMatrix::identity(k);
  dflip.at(k - 1, k - 1) = -1;  // fixes H: its last row is zero
  auto ua_inv = inverse_unimodular(ra.U);
  IntMatrix stab = (*ua_inv) * dflip * ra.U;
  IntMatrix g = (*g0) * stab;
  if (det(g) != 1 || g * a != b)
    throw std::logic_error("sl_orbit_transform: witness failed re-check");
  return g;
}

[[nodiscard]] inline bool sl_orbit_equal(const IntMatrix& a, const IntMatrix& b) {
  return sl_orbit_transform(a, b).has_value();
}

// --- block conjugacy ---------------------------------------------------------

/// D_v = [[1, v^T], [0, I_n]] for a length-n integer vector v.
[[nodiscard]] inline IntMatrix affine_block(const std::vector<Int>& v) {
  const std::size_t n = v.size();
  IntMatrix m = IntMatrix::identity(n + 1);
  for (std::size_t j = 0; j < n; ++j) m.at(0, j + 1) = v[j];
  return m;
}

/// Given unimodular T with T * D_v = D_w * T, return X in GL_n(Z) with
/// v = X * w. The intertwining relation forces the lower-left block of T to
/// vanish unless v = w = 0; in the first case X is +-(lower-right block)^T,
/// in the second X = I. Throws when the precondition fails.
[[nodiscard]] inline std::optional<IntMatrix> conjugating_block(const std::vector<Int>& v,
                                                                const std::vector<Int>& w,
                                                                const IntMatrix& t) {
  if (v.size() != w.size())
    throw std::invalid_argument("conjugating_block: vector length mismatch");
  const std::size_t n = v.size();
  if (n == 0) throw std::invalid_argument("conjugating_block: empty vectors");
  if (t.rows() != n + 1 || t.cols() != n + 1)
    throw std::invalid_argument("conjugating_block: T has wrong shape");
  Int dt = det(t);
  if (dt != 1 && dt != -1)
    throw NotUnimodular("conjugating_block: T is not unimodular");
  if (t * affine_block(v) != affine_block(w) * t)
    throw std::invalid_argument("conjugating_block: T does not intertwine the two blocks");

  bool y_zero = true;
  for (std::size_t i = 1; i <= n; ++i)
    if (t.at(i, 0) != 0) { y_zero = false; break; }

  if (y_zero) {
    const Int& a = t.at(0, 0);  // +-1 since det T = a * det Y
    IntMatrix x(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x.at(i, j) = a * t.at(j + 1, i + 1);
    Int dx = det(x);
    if (dx != 1 && dx != -1) return std::nullopt;
    if (x.apply(w) != v) return std::nullopt;
    return x;
  }
  // Nonzero lower-left block forces v = 0, and conjugacy of the two affine
  // blocks then forces w = 0; the identity witnesses the (empty) relation.
  IntMatrix x = IntMatrix::identity(n);
  if (x.apply(w) != v) return std::nullopt;
  return x;
}

}  // namespace ncpt
