#pragma once

// The Weyl orbit of a dominant weight, ordered opposite to the root order:
// lambda is the bottom and mu < mu - alpha_i whenever (mu, alpha_i^vee) = 1.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "minuscule/cartan.hpp"
#include "minuscule/error.hpp"

namespace minuscule {

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

struct OrbitCover {
  std::size_t lower;
  std::size_t upper;
  int label;
  friend bool operator==(const OrbitCover&, const OrbitCover&) = default;
};

struct OrbitPoset {
  std::vector<Weight> weights;
  std::vector<std::size_t> layer;  // BFS distance from lambda
  std::vector<OrbitCover> covers;
  std::size_t bottom = 0;
  std::size_t top = 0;
  std::map<Weight, std::size_t> index;

  std::size_t size() const { return weights.size(); }

  std::optional<std::size_t> find(const Weight& w) const {
    auto it = index.find(w);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  /// Covers leaving weight u upward, in label order.
  std::vector<OrbitCover> covers_from(std::size_t u) const {
    std::vector<OrbitCover> out;
    for (const auto& c : covers)
      if (c.lower == u) out.push_back(c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
    return out;
  }
};

inline OrbitPoset generate_orbit(const CartanDatum& cd, const Weight& lambda,
                                 std::size_t cap = kDefaultOrbitCap) {
  cd.check_dimension(lambda);
  if (!is_integral(lambda)) throw DomainError("weight " + weight_to_string(lambda) + " is not integral");
  if (!is_dominant(lambda)) throw DomainError("weight " + weight_to_string(lambda) + " is not dominant");

  OrbitPoset orbit;
  auto add = [&](const Weight& w, std::size_t depth) {
    if (orbit.weights.size() >= cap)
      throw ResourceError("orbit of " + weight_to_string(lambda) + " in " + cd.name() +
                          " exceeds cap of " + std::to_string(cap) + " weights");
    orbit.index.emplace(w, orbit.weights.size());
    orbit.weights.push_back(w);
    orbit.layer.push_back(depth);
  };

  add(lambda, 0);
  std::vector<std::size_t> frontier{0};
  std::size_t depth = 0;
  while (!frontier.empty()) {
    ++depth;
    std::vector<Weight> next;
    for (std::size_t u : frontier) {
      for (int i = 1; i <= static_cast<int>(cd.rank); ++i) {
        Weight v = simple_reflection(cd, i, orbit.weights[u]);
        if (!orbit.index.count(v)) next.push_back(std::move(v));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    frontier.clear();
    for (auto& w : next) {
      frontier.push_back(orbit.weights.size());
      add(w, depth);
    }
  }

  for (std::size_t u = 0; u < orbit.size(); ++u) {
    for (int i = 1; i <= static_cast<int>(cd.rank); ++i) {
      if (orbit.weights[u][static_cast<std::size_t>(i - 1)] != 1) continue;
      const auto v = orbit.find(simple_reflection(cd, i, orbit.weights[u]));
      if (!v) throw InternalError("orbit not closed under s_" + std::to_string(i));
      orbit.covers.push_back({u, *v, i});
    }
  }
  orbit.bottom = 0;
  orbit.top = orbit.size() - 1;
  return orbit;
}

struct MinusculeReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

namespace detail {

/// Reflexive order relation: up[u][v] iff u <= v, via cover reachability.
inline std::vector<std::vector<bool>> orbit_order(const OrbitPoset& orbit) {
  const std::size_t n = orbit.size();
  std::vector<std::vector<std::size_t>> succ(n);
  for (const auto& c : orbit.covers) succ[c.lower].push_back(c.upper);
  std::vector<std::vector<bool>> up(n, std::vector<bool>(n, false));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> stack{s};
    up[s][s] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto v : succ[u])
        if (!up[s][v]) {
          up[s][v] = true;
          stack.push_back(v);
        }
    }
  }
  return up;
}

}  // namespace detail

/// Checks the pairing bound, unique extremes, the lattice property and
/// distributivity over all triples.
inline MinusculeReport verify_minuscule(const CartanDatum& cd, const OrbitPoset& orbit) {
  MinusculeReport report;
  for (const auto& w : orbit.weights) {
    for (std::size_t i = 0; i < cd.rank; ++i) {
      if (w[i] < -1 || w[i] > 1) {
        report.fail("weight " + weight_to_string(w) + " has pairing " + w[i].str() + " with node " +
                    std::to_string(i + 1));
        break;
      }
    }
  }
  if (!report.ok) return report;

  const std::size_t n = orbit.size();
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (const auto& c : orbit.covers) {
    ++outdeg[c.lower];
    ++indeg[c.upper];
  }
  std::vector<std::size_t> minima, maxima;
  for (std::size_t u = 0; u < n; ++u) {
    if (indeg[u] == 0) minima.push_back(u);
    if (outdeg[u] == 0) maxima.push_back(u);
  }
  if (minima.size() != 1 || minima[0] != orbit.bottom)
    report.fail("orbit has " + std::to_string(minima.size()) + " minimal weights");
  if (maxima.size() != 1 || maxima[0] != orbit.top)
    report.fail("orbit has " + std::to_string(maxima.size()) + " maximal weights");
  if (!report.ok) return report;

  const auto le = detail::orbit_order(orbit);
  auto bound = [&](std::size_t a, std::size_t b, bool upper) -> std::optional<std::size_t> {
    std::vector<std::size_t> common;
    for (std::size_t z = 0; z < n; ++z)
      if (upper ? (le[a][z] && le[b][z]) : (le[z][a] && le[z][b])) common.push_back(z);
    if (common.empty()) return std::nullopt;
    // The only candidate is the common bound of least (resp. greatest) depth.
    auto z = common.front();
    for (auto y : common)
      if (upper ? orbit.layer[y] < orbit.layer[z] : orbit.layer[y] > orbit.layer[z]) z = y;
    for (auto y : common)
      if (upper ? !le[z][y] : !le[y][z]) return std::nullopt;
    return z;
  };

  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n)), join = meet;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const auto j = bound(a, b, true);
      const auto m = bound(a, b, false);
      if (!j || !m) {
        report.fail("weights " + weight_to_string(orbit.weights[a]) + " and " +
                    weight_to_string(orbit.weights[b]) + " lack a " + (j ? "meet" : "join"));
        return report;
      }
      join[a][b] = join[b][a] = *j;
      meet[a][b] = meet[b][a] = *m;
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]]) {
          report.fail("distributivity fails on (" + weight_to_string(orbit.weights[a]) + ", " +
                      weight_to_string(orbit.weights[b]) + ", " + weight_to_string(orbit.weights[c]) +
                      ")");
          return report;
        }
  return report;
}

/// Bottom-to-top saturated chain, taking the smallest label at each step.
inline std::vector<int> saturated_chain(const OrbitPoset& orbit) {
  std::vector<int> word;
  std::size_t u = orbit.bottom;
  while (u != orbit.top) {
    const auto up = orbit.covers_from(u);
    if (up.empty()) throw DomainError("saturated chain stalls below the top weight");
    word.push_back(up.front().label);
    u = up.front().upper;
  }
  return word;
}

}  // namespace minuscule
