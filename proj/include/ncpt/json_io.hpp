#pragma once

// JSON conversions shared by the library and the command-line tool: exact
// integers (decimal strings outside the int64 range), integer matrices and
// vectors, and floating-point values rounded to a fixed number of
// significant digits so repeated runs serialize byte-identically.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncpt/exterior.hpp"
#include "ncpt/heisenberg.hpp"
#include "ncpt/intmat.hpp"
#include "ncpt/nctorus.hpp"

namespace ncpt {

using Json = nlohmann::json;

/// Number when it fits in 64 bits, decimal string otherwise.
[[nodiscard]] inline Json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

[[nodiscard]] inline Int json_to_int(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      return Int(s);
    } catch (const std::exception&) {
      throw std::invalid_argument("expected an integer, got the string '" + s + "'");
    }
  }
  throw std::invalid_argument("expected an integer (number or decimal string)");
}

[[nodiscard]] inline Json intvec_to_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

[[nodiscard]] inline std::vector<Int> json_to_intvec(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of integers");
  std::vector<Int> v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(json_to_int(x));
  return v;
}

/// Matrix document: {"rows": r, "cols": c, "data": [[...], ...]}.
[[nodiscard]] inline Json matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"cols", m.cols()}, {"data", std::move(rows)}, {"rows", m.rows()}};
}

namespace detail {
[[nodiscard]] inline IntMatrix matrix_from_rows(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("expected a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty())
    throw std::invalid_argument("expected non-empty rows of integers");
  const std::size_t cols = j[0].size();
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw std::invalid_argument("expected a rectangular array of integers");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = json_to_int(j[i][c]);
  }
  return m;
}
}  // namespace detail

/// Accepts the matrix document form above or a bare array of rows.
[[nodiscard]] inline IntMatrix json_to_matrix(const Json& j) {
  if (j.is_array()) return detail::matrix_from_rows(j);
  if (!j.is_object() || !j.contains("data"))
    throw std::invalid_argument("expected a matrix document or an array of rows");
  IntMatrix m = detail::matrix_from_rows(j.at("data"));
  if (j.contains("rows") && j.at("rows").get<std::size_t>() != m.rows())
    throw std::invalid_argument("matrix document: 'rows' disagrees with the data");
  if (j.contains("cols") && j.at("cols").get<std::size_t>() != m.cols())
    throw std::invalid_argument("matrix document: 'cols' disagrees with the data");
  return m;
}

/// Round to the given number of significant digits (matching "%.*g"), with
/// negative zero folded to zero. All floats must pass through here before
/// entering a JSON document.
[[nodiscard]] inline double round_sig(double x, int digits = 12) {
  if (x == 0.0) return 0.0;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  double y = std::strtod(buf, nullptr);
  return (y == 0.0) ? 0.0 : y;
}

[[nodiscard]] inline Json number_json(double x, int digits = 12) {
  return Json(round_sig(x, digits));
}

[[nodiscard]] inline Json complex_json(const Complex& z, int digits = 12) {
  return Json{{"im", round_sig(z.imag(), digits)}, {"re", round_sig(z.real(), digits)}};
}

/// Keys sort lexicographically (the default object representation), so the
/// dump of a fully rounded document is reproducible byte for byte.
[[nodiscard]] inline std::string canonical_dump(const Json& j, int indent = 2) {
  return j.dump(indent);
}

// --- element documents -----------------------------------------------------------
//
// Value-bearing documents keep full double precision (the serializer emits
// shortest round-trip representations); computed diagnostics are rounded by
// the caller before insertion.

/// {"n": rank, "terms": [{"J": [...], "c": coeff}, ...]}, terms listed by
/// degree and then lexicographically (the default basis order).
[[nodiscard]] inline Json exterior_to_json(const ExteriorElement& x) {
  std::vector<const IndexSet*> keys;
  for (const auto& [j, c] : x.terms()) keys.push_back(&j);
  std::sort(keys.begin(), keys.end(), [](const IndexSet* a, const IndexSet* b) {
    if (a->size() != b->size()) return a->size() < b->size();
    return *a < *b;
  });
  Json terms = Json::array();
  for (const IndexSet* j : keys) {
    Json idx = Json::array();
    for (int v : *j) idx.push_back(v);
    terms.push_back(Json{{"J", std::move(idx)}, {"c", int_to_json(x.coefficient(*j))}});
  }
  return Json{{"n", x.rank()}, {"terms", std::move(terms)}};
}

[[nodiscard]] inline ExteriorElement exterior_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
    throw std::invalid_argument("exterior element: expected {n, terms}");
  ExteriorElement x(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("J") || !t.contains("c"))
      throw std::invalid_argument("exterior element: each term needs J and c");
    IndexSet set;
    for (const auto& v : t.at("J")) set.push_back(v.get<int>());
    x.add_term(set, json_to_int(t.at("c")));
  }
  return x;
}

/// {"n": rank, "central": [[i, j, c], ...] (nonzero entries, pair order),
///  "vector": [...]}.
[[nodiscard]] inline Json heisenberg_to_json(const HeisenbergElement& g) {
  PairIndex pi(g.n);
  Json central = Json::array();
  for (std::size_t p = 0; p < pi.count(); ++p) {
    if (g.central[p] == 0) continue;
    auto [i, j] = pi.pair(p);
    central.push_back(Json::array({i, j, int_to_json(g.central[p])}));
  }
  return Json{{"central", std::move(central)}, {"n", g.n}, {"vector", intvec_to_json(g.vec)}};
}

[[nodiscard]] inline HeisenbergElement heisenberg_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("vector"))
    throw std::invalid_argument("group element: expected {n, central, vector}");
  const int n = j.at("n").get<int>();
  HeisenbergElement g = HeisenbergElement::identity(n);
  auto vec = json_to_intvec(j.at("vector"));
  if (vec.size() != g.vec.size())
    throw std::invalid_argument("group element: vector length must equal the rank");
  g.vec = std::move(vec);
  PairIndex pi(n);
  if (j.contains("central"))
    for (const auto& e : j.at("central")) {
      if (!e.is_array() || e.size() != 3)
        throw std::invalid_argument("group element: central entries are [i, j, c] triples");
      g.central[pi.index(e[0].get<int>(), e[1].get<int>())] += json_to_int(e[2]);
    }
  return g;
}

/// An algebra element together with its angle matrix:
/// {"n": rank, "theta": [[i, j, value], ...], "terms": [{"m": [...], "re": x,
///  "im": y}, ...]}. Angles list every pair in pair order.
[[nodiscard]] inline Json twisted_to_json(const TwistedAlgebra& alg, const TwistedElement& f) {
  if (alg.rank() != f.n)
    throw std::invalid_argument("twisted element: algebra and element ranks differ");
  PairIndex pi(f.n);
  Json theta = Json::array();
  for (std::size_t p = 0; p < pi.count(); ++p) {
    auto [i, j] = pi.pair(p);
    theta.push_back(Json::array({i, j, alg.theta(i, j)}));
  }
  Json terms = Json::array();
  for (const auto& [m, c] : f.coeffs) {
    Json mv = Json::array();
    for (long long v : m) mv.push_back(v);
    terms.push_back(Json{{"im", c.imag()}, {"m", std::move(mv)}, {"re", c.real()}});
  }
  return Json{{"n", f.n}, {"terms", std::move(terms)}, {"theta", std::move(theta)}};
}

struct TwistedDocument {
  TwistedAlgebra algebra;
  TwistedElement element;
};

[[nodiscard]] inline TwistedDocument twisted_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
    throw std::invalid_argument("twisted element: expected {n, theta, terms}");
  const int n = j.at("n").get<int>();
  PairIndex pi(n);
  std::vector<double> theta(pi.count(), 0.0);
  if (j.contains("theta"))
    for (const auto& e : j.at("theta")) {
      if (!e.is_array() || e.size() != 3)
        throw std::invalid_argument("twisted element: theta entries are [i, j, value] triples");
      theta[pi.index(e[0].get<int>(), e[1].get<int>())] = e[2].get<double>();
    }
  TwistedAlgebra alg(n, theta);
  TwistedElement f = element_zero(n);
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("m") || !t.contains("re") || !t.contains("im"))
      throw std::invalid_argument("twisted element: each term needs m, re, im");
    LatticePoint m;
    for (const auto& v : t.at("m")) m.push_back(v.get<long long>());
    if (m.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("twisted element: lattice point length must equal the rank");
    f.add(m, Complex(t.at("re").get<double>(), t.at("im").get<double>()));
  }
  return {std::move(alg), std::move(f)};
}

}  // namespace ncpt
