#pragma once

// Integer Heisenberg-type group on n generators: elements are (central, vec)
// with central in Z^{n(n-1)/2} (one coordinate per pair i < j) and vec in Z^n.
// Includes exact normal forms, word evaluation and parsing, the bilinear
// pairing produced by reordering generators, and automorphisms induced by
// GL_n(Z) through the elementary/permutation factorization.

#include <cctype>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncpt/exterior.hpp"
#include "ncpt/intmat.hpp"

namespace ncpt {

/// U_i U_j U_i^-1 U_j^-1 = V_ij ^ (this exponent), for i < j.
inline constexpr int uu_commutator_exponent = -1;

[[nodiscard]] inline std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

/// Group element (central, vec). Multiplication appends vectors and picks up
/// the reordering pairing between the left factor's vector and the right's.
struct HeisenbergElement {
  int n = 0;
  std::vector<Int> central;  ///< PairIndex order over pairs i < j
  std::vector<Int> vec;      ///< exponents of the non-central generators

  [[nodiscard]] static HeisenbergElement identity(int n) {
    if (n < 1) throw std::invalid_argument("HeisenbergElement: rank must be positive");
    HeisenbergElement g;
    g.n = n;
    g.central.assign(pair_count(n), 0);
    g.vec.assign(static_cast<std::size_t>(n), 0);
    return g;
  }

  /// U_i = (0, f_i)
  [[nodiscard]] static HeisenbergElement u(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("HeisenbergElement::u: index out of range");
    auto g = identity(n);
    g.vec[static_cast<std::size_t>(i - 1)] = 1;
    return g;
  }

  /// V_ij = (e_ij, 0), i < j
  [[nodiscard]] static HeisenbergElement v(int n, int i, int j) {
    auto g = identity(n);
    g.central[PairIndex(n).index(i, j)] = 1;
    return g;
  }

  [[nodiscard]] bool is_identity() const {
    auto zero = [](const std::vector<Int>& xs) {
      for (const auto& x : xs)
        if (x != 0) return false;
      return true;
    };
    return zero(central) && zero(vec);
  }

  friend bool operator==(const HeisenbergElement& a, const HeisenbergElement& b) {
    return a.n == b.n && a.central == b.central && a.vec == b.vec;
  }
  friend bool operator!=(const HeisenbergElement& a, const HeisenbergElement& b) {
    return !(a == b);
  }
};

/// Pairing picked up when the product x_m * x_l is rewritten in normal order:
/// entry (i, j), i < j, is l_i * m_j; all other entries zero. Returned as an
/// n x n integer matrix (coefficients of the commutator generators).
[[nodiscard]] inline IntMatrix transgression_pairing(const std::vector<Int>& m,
                                                     const std::vector<Int>& l) {
  if (m.size() != l.size() || m.empty())
    throw std::invalid_argument("transgression_pairing: need equal positive lengths");
  const std::size_t n = m.size();
  IntMatrix eta(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) eta.at(i, j) = l[i] * m[j];
  return eta;
}

/// Unit complex number exp(2 pi i <Theta a, b>) for a strictly
/// upper-triangular real matrix Theta; the bilinear exponent is
/// sum_{i<j} Theta_ij * a_j * b_i, the weighted readout of the pairing
/// above. Satisfies the multiplier identity
/// w(a,b) w(a+b,c) = w(b,c) w(a,b+c).
[[nodiscard]] inline std::complex<double> transgression_cocycle(
    const std::vector<std::vector<double>>& theta, const std::vector<Int>& a,
    const std::vector<Int>& b) {
  const std::size_t n = theta.size();
  if (n == 0) throw std::invalid_argument("transgression_cocycle: empty matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (theta[i].size() != n)
      throw std::invalid_argument("transgression_cocycle: matrix must be square");
    for (std::size_t j = 0; j <= i && j < n; ++j)
      if (theta[i][j] != 0.0)
        throw std::invalid_argument(
            "transgression_cocycle: matrix must be strictly upper triangular");
  }
  if (a.size() != n || b.size() != n)
    throw std::invalid_argument("transgression_cocycle: vector length mismatch");
  double turns = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (theta[i][j] == 0.0) continue;
      turns += theta[i][j] * static_cast<double>(a[j] * b[i]);
    }
  return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

[[nodiscard]] inline HeisenbergElement multiply(const HeisenbergElement& a,
                                                const HeisenbergElement& b) {
  if (a.n != b.n) throw std::invalid_argument("HeisenbergElement: rank mismatch");
  HeisenbergElement r = HeisenbergElement::identity(a.n);
  PairIndex pi(a.n);
  for (std::size_t p = 0; p < pi.count(); ++p) {
    auto [i, j] = pi.pair(p);
    r.central[p] = a.central[p] + b.central[p] +
                   b.vec[static_cast<std::size_t>(i - 1)] * a.vec[static_cast<std::size_t>(j - 1)];
  }
  for (std::size_t k = 0; k < a.vec.size(); ++k) r.vec[k] = a.vec[k] + b.vec[k];
  return r;
}

[[nodiscard]] inline HeisenbergElement inverse(const HeisenbergElement& a) {
  HeisenbergElement r = HeisenbergElement::identity(a.n);
  PairIndex pi(a.n);
  for (std::size_t p = 0; p < pi.count(); ++p) {
    auto [i, j] = pi.pair(p);
    r.central[p] = -a.central[p] +
                   a.vec[static_cast<std::size_t>(i - 1)] * a.vec[static_cast<std::size_t>(j - 1)];
  }
  for (std::size_t k = 0; k < a.vec.size(); ++k) r.vec[k] = -a.vec[k];
  return r;
}

/// g^k for any integer k: (central, vec)^k = (k*central + C(k,2)*upper(vec x vec), k*vec).
[[nodiscard]] inline HeisenbergElement power(const HeisenbergElement& a, const Int& k) {
  HeisenbergElement r = HeisenbergElement::identity(a.n);
  const Int choose2 = k * (k - 1) / 2;
  PairIndex pi(a.n);
  for (std::size_t p = 0; p < pi.count(); ++p) {
    auto [i, j] = pi.pair(p);
    r.central[p] = k * a.central[p] +
                   choose2 * a.vec[static_cast<std::size_t>(i - 1)] *
                       a.vec[static_cast<std::size_t>(j - 1)];
  }
  for (std::size_t t = 0; t < a.vec.size(); ++t) r.vec[t] = k * a.vec[t];
  return r;
}

[[nodiscard]] inline HeisenbergElement commutator(const HeisenbergElement& a,
                                                  const HeisenbergElement& b) {
  return multiply(multiply(a, b), multiply(inverse(a), inverse(b)));
}

// --- words and normal forms ----------------------------------------------------

/// One factor of a word: U_i^exp ('U', j unused) or V_{i,j}^exp ('V', i < j).
struct GenPower {
  char kind = 'U';
  int i = 0;
  int j = 0;
  Int exp = 1;
  friend bool operator==(const GenPower& a, const GenPower& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j && a.exp == b.exp;
  }
};

using HeisenbergWord = std::vector<GenPower>;

[[nodiscard]] inline HeisenbergElement generator_power(int n, const GenPower& g) {
  if (g.kind == 'U') return power(HeisenbergElement::u(n, g.i), g.exp);
  if (g.kind == 'V') return power(HeisenbergElement::v(n, g.i, g.j), g.exp);
  throw std::invalid_argument("generator_power: unknown kind");
}

[[nodiscard]] inline HeisenbergElement evaluate_word(int n, const HeisenbergWord& w) {
  HeisenbergElement r = HeisenbergElement::identity(n);
  for (const auto& g : w) r = multiply(r, generator_power(n, g));
  return r;
}

/// Normal order: central factors first (PairIndex order), then U_1..U_n.
/// The product of these tokens reproduces the element exactly.
[[nodiscard]] inline HeisenbergWord normal_form_tokens(const HeisenbergElement& g) {
  HeisenbergWord w;
  PairIndex pi(g.n);
  for (std::size_t p = 0; p < pi.count(); ++p) {
    if (g.central[p] == 0) continue;
    auto [i, j] = pi.pair(p);
    w.push_back({'V', i, j, g.central[p]});
  }
  for (int i = 1; i <= g.n; ++i) {
    const Int& e = g.vec[static_cast<std::size_t>(i - 1)];
    if (e != 0) w.push_back({'U', i, 0, e});
  }
  return w;
}

[[nodiscard]] inline std::string word_to_string(const HeisenbergWord& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  bool first = true;
  for (const auto& g : w) {
    if (!first) os << " ";
    first = false;
    if (g.kind == 'U')
      os << "U" << g.i;
    else
      os << "V" << g.i << "," << g.j;
    if (g.exp != 1) os << "^" << g.exp;
  }
  return os.str();
}

[[nodiscard]] inline std::string normal_form_string(const HeisenbergElement& g) {
  return word_to_string(normal_form_tokens(g));
}

/// Parses words like "U1 U2 U1^-1 V1,3^2". V with indices out of order is
/// folded to the increasing pair with negated exponent. When n is not forced
/// by the caller it is inferred as the largest index in the word (at least 1).
[[nodiscard]] inline std::pair<int, HeisenbergWord> parse_heisenberg_word(
    const std::string& text, std::optional<int> n_hint = std::nullopt) {
  HeisenbergWord w;
  int max_index = 1;
  std::istringstream in(text);
  std::string tok;
  auto parse_int = [](const std::string& s, std::size_t& pos) -> long long {
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = (s[pos++] == '-');
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("word parse: expected an integer in '" + s + "'");
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      v = v * 10 + (s[pos++] - '0');
    return neg ? -v : v;
  };
  while (in >> tok) {
    if (tok == "e") continue;  // identity letter, as printed for the empty word
    std::size_t pos = 0;
    char kind = tok[pos];
    if (kind != 'U' && kind != 'V')
      throw std::invalid_argument("word parse: token must start with U or V: '" + tok + "'");
    ++pos;
    GenPower g;
    g.kind = kind;
    g.i = static_cast<int>(parse_int(tok, pos));
    if (g.i < 1) throw std::invalid_argument("word parse: indices are 1-based: '" + tok + "'");
    if (kind == 'V') {
      if (pos >= tok.size() || tok[pos] != ',')
        throw std::invalid_argument("word parse: V needs two indices: '" + tok + "'");
      ++pos;
      g.j = static_cast<int>(parse_int(tok, pos));
      if (g.j < 1 || g.j == g.i)
        throw std::invalid_argument("word parse: V needs two distinct 1-based indices: '" + tok + "'");
    }
    g.exp = 1;
    if (pos < tok.size()) {
      if (tok[pos] != '^')
        throw std::invalid_argument("word parse: unexpected character in '" + tok + "'");
      ++pos;
      g.exp = parse_int(tok, pos);
      if (pos != tok.size())
        throw std::invalid_argument("word parse: trailing characters in '" + tok + "'");
    }
    if (kind == 'V' && g.i > g.j) {
      std::swap(g.i, g.j);
      g.exp = -g.exp;
    }
    max_index = std::max({max_index, g.i, g.j});
    w.push_back(std::move(g));
  }
  int n = n_hint.value_or(max_index);
  if (n < max_index)
    throw std::invalid_argument("word parse: an index exceeds the requested rank");
  return {n, w};
}

// --- automorphisms induced by GL_n(Z) --------------------------------------------

/// Automorphism determined by generator images. The stored images always
/// satisfy the defining relations, so applying by normal-order expansion is
/// an exact endomorphism. Instances are built from the canonical
/// elementary/permutation factorization of an integer matrix; the vector
/// part of the image of g is always transpose(psi)^{-1} times the vector
/// part of g, and central generators transform by the induced map on wedges.
class UpsilonAutomorphism {
 public:
  [[nodiscard]] static UpsilonAutomorphism identity(int n) {
    UpsilonAutomorphism a;
    a.n_ = n;
    a.psi_ = IntMatrix::identity(static_cast<std::size_t>(n));
    PairIndex pi(n);
    for (int i = 1; i <= n; ++i) a.u_images_.push_back(HeisenbergElement::u(n, i));
    for (std::size_t p = 0; p < pi.count(); ++p) {
      auto [i, j] = pi.pair(p);
      a.v_images_.push_back(HeisenbergElement::v(n, i, j));
    }
    return a;
  }

  [[nodiscard]] static UpsilonAutomorphism from_token(int n, const GeneratorToken& tok) {
    UpsilonAutomorphism a = identity(n);
    a.tokens_ = {tok};
    a.psi_ = token_matrix(static_cast<std::size_t>(n), tok);
    auto tinv = inverse_unimodular(a.psi_)->transpose();

    if (const auto* e = std::get_if<Elementary>(&tok)) {
      // U_k -> U_l^{-m} U_k, other generators fixed.
      auto& img = a.u_images_[static_cast<std::size_t>(e->k - 1)];
      img = multiply(power(HeisenbergElement::u(n, e->l), -e->m),
                     HeisenbergElement::u(n, e->k));
    } else {
      const auto& p = std::get<Permutation>(tok);
      for (int i = 1; i <= n; ++i)
        a.u_images_[static_cast<std::size_t>(i - 1)] =
            HeisenbergElement::u(n, p.sigma[static_cast<std::size_t>(i - 1)]);
    }

    // Central generators transform by the wedge square of tinv.
    PairIndex pi(n);
    for (std::size_t p = 0; p < pi.count(); ++p) {
      auto [i, j] = pi.pair(p);
      auto col = [&](int c) {
        ExteriorElement x(n);
        for (int r = 1; r <= n; ++r)
          x.add_term({r}, tinv.at(static_cast<std::size_t>(r - 1),
                                  static_cast<std::size_t>(c - 1)));
        return x;
      };
      auto w = col(i).wedge(col(j));
      HeisenbergElement img = HeisenbergElement::identity(n);
      for (std::size_t q = 0; q < pi.count(); ++q) {
        auto [k, l] = pi.pair(q);
        img.central[q] = w.coefficient({k, l});
      }
      a.v_images_[p] = img;
    }
    return a;
  }

  /// Built by folding the token automorphisms of the canonical factorization.
  [[nodiscard]] static UpsilonAutomorphism from_matrix(const IntMatrix& psi) {
    auto fact = factor_unimodular(psi);
    const int n = static_cast<int>(fact.n);
    UpsilonAutomorphism acc = identity(n);
    for (const auto& tok : fact.factors) acc = acc.compose(from_token(n, tok));
    return acc;
  }

  [[nodiscard]] int rank() const { return n_; }
  [[nodiscard]] const IntMatrix& matrix() const { return psi_; }
  [[nodiscard]] const std::vector<GeneratorToken>& tokens() const { return tokens_; }
  [[nodiscard]] const HeisenbergElement& u_image(int i) const {
    return u_images_[static_cast<std::size_t>(i - 1)];
  }
  [[nodiscard]] const HeisenbergElement& v_image(int i, int j) const {
    return v_images_[PairIndex(n_).index(i, j)];
  }

  /// Expand g in normal order and push it through the generator images.
  [[nodiscard]] HeisenbergElement apply(const HeisenbergElement& g) const {
    if (g.n != n_) throw std::invalid_argument("UpsilonAutomorphism: rank mismatch");
    HeisenbergElement out = HeisenbergElement::identity(n_);
    for (std::size_t p = 0; p < v_images_.size(); ++p)
      if (g.central[p] != 0) out = multiply(out, power(v_images_[p], g.central[p]));
    for (std::size_t i = 0; i < u_images_.size(); ++i)
      if (g.vec[i] != 0) out = multiply(out, power(u_images_[i], g.vec[i]));
    return out;
  }

  /// this after inner; token lists concatenate, matrices multiply.
  [[nodiscard]] UpsilonAutomorphism compose(const UpsilonAutomorphism& inner) const {
    if (n_ != inner.n_) throw std::invalid_argument("UpsilonAutomorphism: rank mismatch");
    UpsilonAutomorphism r;
    r.n_ = n_;
    r.psi_ = psi_ * inner.psi_;
    r.tokens_ = tokens_;
    r.tokens_.insert(r.tokens_.end(), inner.tokens_.begin(), inner.tokens_.end());
    for (const auto& u : inner.u_images_) r.u_images_.push_back(apply(u));
    for (const auto& v : inner.v_images_) r.v_images_.push_back(apply(v));
    return r;
  }

  /// Exact two-sided inverse: fold the reversed, inverted token list.
  [[nodiscard]] UpsilonAutomorphism inverse() const {
    UpsilonAutomorphism acc = identity(n_);
    for (auto it = tokens_.rbegin(); it != tokens_.rend(); ++it)
      acc = acc.compose(from_token(n_, token_inverse(*it)));
    return acc;
  }

 private:
  UpsilonAutomorphism() : psi_(1, 1) {}

  int n_ = 0;
  IntMatrix psi_;
  std::vector<GeneratorToken> tokens_;
  std::vector<HeisenbergElement> u_images_;   ///< images of U_1..U_n
  std::vector<HeisenbergElement> v_images_;   ///< images of V_ij, PairIndex order
};

[[nodiscard]] inline UpsilonAutomorphism upsilon(const IntMatrix& psi) {
  return UpsilonAutomorphism::from_matrix(psi);
}

}  // namespace ncpt
