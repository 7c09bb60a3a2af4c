#pragma once

// Simply-laced root data in the fundamental-weight basis.
//
// Node numbering follows Bourbaki and is 1-based throughout the public API:
//   A_t: 1 - 2 - ... - t
//   D_t: 1 - 2 - ... - (t-2), with t-2 joined to both t-1 and t
//   E_t: 1 - 3 - 4 - 5 - ... - t, with 2 joined to 4

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "minuscule/error.hpp"
#include "minuscule/rational.hpp"

namespace minuscule {

enum class Family { A, D, E };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::D: return 'D';
    case Family::E: return 'E';
  }
  return '?';
}

inline Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  if (s == "E" || s == "e") return Family::E;
  throw ConfigurationError("unsupported Cartan family '" + s + "'");
}

/// Coordinates m_i = (mu, alpha_i^vee) in the fundamental-weight basis.
struct Weight {
  std::vector<Rational> coords;

  Weight() = default;
  explicit Weight(std::vector<Rational> c) : coords(std::move(c)) {}
  Weight(std::initializer_list<int> c) {
    coords.reserve(c.size());
    for (int v : c) coords.emplace_back(v);
  }

  std::size_t size() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) { return a.coords < b.coords; }
};

/// The fundamental weight omega_k (1-based node) for a rank-t datum.
inline Weight fundamental_weight(std::size_t rank, int node) {
  if (node < 1 || static_cast<std::size_t>(node) > rank)
    throw ConfigurationError("node " + std::to_string(node) + " out of range 1.." +
                             std::to_string(rank));
  Weight w(std::vector<Rational>(rank, Rational(0)));
  w[static_cast<std::size_t>(node - 1)] = 1;
  return w;
}

inline std::string weight_to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += is_integer(w[i]) ? w[i].str() : to_fraction_string(w[i]);
  }
  return out + ")";
}

namespace detail {

inline RationalMatrix invert_exact(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  RationalMatrix m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InternalError("Cartan matrix is singular");
    std::swap(m[pivot], m[col]);
    const Rational inv = 1 / m[col][col];
    for (auto& x : m[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  RationalMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
  return inv;
}

}  // namespace detail

struct CartanDatum {
  Family family = Family::A;
  std::size_t rank = 0;
  std::vector<std::vector<int>> cartan;
  RationalMatrix inv_cartan;
  Rational omega_sq{2};

  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

  void check_node(int node) const {
    if (node < 1 || static_cast<std::size_t>(node) > rank)
      throw ConfigurationError("node " + std::to_string(node) + " out of range for " + name());
  }
  int entry(int i, int j) const {
    return cartan[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
  }
  /// True when s_i and s_j commute (distinct, non-adjacent nodes).
  bool commute(int i, int j) const { return i != j && entry(i, j) == 0; }

  void check_dimension(const Weight& w) const {
    if (w.size() != rank)
      throw DomainError("weight " + weight_to_string(w) + " has " + std::to_string(w.size()) +
                        " coordinates, expected " + std::to_string(rank));
  }
};

inline CartanDatum build_cartan(Family family, std::size_t rank) {
  const bool ok = (family == Family::A && rank >= 1) || (family == Family::D && rank >= 3) ||
                  (family == Family::E && (rank == 6 || rank == 7));
  if (!ok)
    throw ConfigurationError(std::string("unsupported Cartan type (") + family_letter(family) +
                             ", " + std::to_string(rank) + ")");

  CartanDatum cd;
  cd.family = family;
  cd.rank = rank;
  cd.cartan.assign(rank, std::vector<int>(rank, 0));
  auto join = [&](std::size_t i, std::size_t j) {
    cd.cartan[i - 1][j - 1] = -1;
    cd.cartan[j - 1][i - 1] = -1;
  };
  for (std::size_t i = 0; i < rank; ++i) cd.cartan[i][i] = 2;

  switch (family) {
    case Family::A:
      for (std::size_t i = 1; i < rank; ++i) join(i, i + 1);
      break;
    case Family::D:
      for (std::size_t i = 1; i + 2 < rank; ++i) join(i, i + 1);
      join(rank - 2, rank - 1);
      join(rank - 2, rank);
      break;
    case Family::E:
      join(1, 3);
      join(2, 4);
      for (std::size_t i = 3; i < rank; ++i) join(i, i + 1);
      break;
  }
  cd.inv_cartan = detail::invert_exact(cd.cartan);
  return cd;
}

/// (omega_i, omega_j) = (A^-1)_ij * Omega^2 / 2, 1-based nodes.
inline Rational fundamental_gram(const CartanDatum& cd, int i, int j) {
  return cd.inv_cartan[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] *
         cd.omega_sq / 2;
}

inline Rational inner_product(const CartanDatum& cd, const Weight& mu, const Weight& nu) {
  cd.check_dimension(mu);
  cd.check_dimension(nu);
  Rational sum = 0;
  for (std::size_t i = 0; i < cd.rank; ++i) {
    if (mu[i] == 0) continue;
    for (std::size_t j = 0; j < cd.rank; ++j) {
      if (nu[j] == 0) continue;
      sum += mu[i] * nu[j] * cd.inv_cartan[i][j];
    }
  }
  return sum * cd.omega_sq / 2;
}

/// The simple root alpha_i written in fundamental coordinates: row i of A.
inline Weight simple_root(const CartanDatum& cd, int node) {
  cd.check_node(node);
  Weight w(std::vector<Rational>(cd.rank));
  for (std::size_t j = 0; j < cd.rank; ++j) w[j] = cd.cartan[static_cast<std::size_t>(node - 1)][j];
  return w;
}

inline Rational coroot_pairing(const CartanDatum& cd, const Weight& mu, int node) {
  cd.check_node(node);
  cd.check_dimension(mu);
  return mu[static_cast<std::size_t>(node - 1)];
}

inline Weight simple_reflection(const CartanDatum& cd, int node, const Weight& mu) {
  cd.check_node(node);
  cd.check_dimension(mu);
  const auto i = static_cast<std::size_t>(node - 1);
  if (mu[i] == 0) return mu;
  const Rational m = mu[i];
  Weight out = mu;
  for (std::size_t j = 0; j < cd.rank; ++j) out[j] -= m * cd.cartan[i][j];
  return out;
}

inline bool is_integral(const Weight& w) {
  for (const auto& c : w.coords)
    if (!is_integer(c)) return false;
  return true;
}

inline bool is_dominant(const Weight& w) {
  for (const auto& c : w.coords)
    if (c < 0) return false;
  return true;
}

/// Nodes k whose fundamental weight is minuscule.
inline std::vector<int> minuscule_catalog(const CartanDatum& cd) {
  const int t = static_cast<int>(cd.rank);
  std::vector<int> nodes;
  switch (cd.family) {
    case Family::A:
      for (int k = 1; k <= t; ++k) nodes.push_back(k);
      break;
    case Family::D:
      nodes = {1, t - 1, t};
      break;
    case Family::E:
      if (t == 6) nodes = {1, 6};
      else nodes = {7};
      break;
  }
  return nodes;
}

}  // namespace minuscule
