#pragma once

// Distributions on J(P), down-degree expectations, toggle symmetry, and the
// exact LP over the toggle-symmetric polytope.

#include <cstddef>
#include <string>
#include <vector>

#include "minuscule/error.hpp"
#include "minuscule/heap.hpp"
#include "minuscule/ideals.hpp"
#include "minuscule/rational.hpp"
#include "minuscule/simplex.hpp"
#include "minuscule/stats.hpp"

namespace minuscule {

class Distribution {
 public:
  Distribution() = default;

  /// Throws DomainError unless entries are nonnegative and sum to one.
  explicit Distribution(std::vector<Rational> probs) : probs_(std::move(probs)) {
    Rational total = 0;
    for (std::size_t k = 0; k < probs_.size(); ++k) {
      if (probs_[k] < 0)
        throw DomainError("negative probability at ideal " + std::to_string(k));
      total += probs_[k];
    }
    if (total != 1) throw DomainError("probabilities sum to " + to_fraction_string(total));
  }

  /// Normalizes nonnegative integer weights.
  static Distribution from_weights(const std::vector<BigInt>& weights) {
    BigInt total = 0;
    for (const auto& w : weights) total += w;
    if (total <= 0) throw DomainError("weights have no positive mass");
    std::vector<Rational> probs;
    probs.reserve(weights.size());
    for (const auto& w : weights) probs.emplace_back(w, total);
    return Distribution(std::move(probs));
  }

  std::size_t size() const { return probs_.size(); }
  const Rational& operator[](std::size_t k) const { return probs_[k]; }
  const std::vector<Rational>& probs() const { return probs_; }

 private:
  std::vector<Rational> probs_;
};

inline Rational expectation(const Distribution& mu, const std::vector<Rational>& f) {
  if (mu.size() != f.size())
    throw DomainError("distribution over " + std::to_string(mu.size()) + " ideals, statistic over " +
                      std::to_string(f.size()));
  Rational sum = 0;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (mu[k] != 0) sum += mu[k] * f[k];
  return sum;
}

inline Rational expectation(const IdealLattice& L, const Distribution& mu, const std::vector<Rational>& f) {
  if (mu.size() != L.size()) throw DomainError("distribution does not match the lattice");
  return expectation(mu, f);
}

inline Distribution uni(const IdealLattice& L) {
  return Distribution::from_weights(std::vector<BigInt>(L.size(), BigInt(1)));
}

/// P(I) proportional to the number of maximal chains through I, counted
/// along cover edges.
inline Distribution maxchain(const IdealLattice& L) {
  const std::size_t n = L.size();
  std::vector<BigInt> down(n, 0), up(n, 0);
  down[0] = 1;
  up[n - 1] = 1;
  // Ideals are sorted by cardinality, and covers go from lower to higher index.
  for (const auto& c : L.covers) down[c.upper] += down[c.lower];
  for (auto it = L.covers.rbegin(); it != L.covers.rend(); ++it) up[it->lower] += up[it->upper];
  std::vector<BigInt> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = down[k] * up[k];
  return Distribution::from_weights(w);
}

enum class ChainMode { Strict, Multichain };

inline const char* chain_mode_name(ChainMode m) { return m == ChainMode::Strict ? "strict" : "multi"; }

/// Weighted chain counts through every ideal, for all lengths 0..max_k.
///
/// Strict: chains I_0 < ... < I_k containing I.
/// Multichain: multichains I_0 <= ... <= I_k, each counted once per
/// position equal to I.
class ChainCounter {
 public:
  ChainCounter(const IdealLattice& L, ChainMode mode, std::size_t max_k) : mode_(mode) {
    const std::size_t n = L.size();
    std::vector<std::vector<std::size_t>> lower(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b) {
          if (mode == ChainMode::Multichain) lower[a].push_back(b);
          continue;
        }
        if (L.ideals[b].is_subset_of(L.ideals[a])) lower[a].push_back(b);
      }
    std::vector<std::vector<std::size_t>> upper(n);
    for (std::size_t a = 0; a < n; ++a)
      for (auto b : lower[a]) upper[b].push_back(a);

    // down_[j][I]: chains of j+1 elements ending at I; up_ symmetric.
    down_.assign(max_k + 1, std::vector<BigInt>(n, 0));
    up_.assign(max_k + 1, std::vector<BigInt>(n, 0));
    for (std::size_t I = 0; I < n; ++I) down_[0][I] = up_[0][I] = 1;
    for (std::size_t j = 1; j <= max_k; ++j)
      for (std::size_t I = 0; I < n; ++I) {
        for (auto J : lower[I]) down_[j][I] += down_[j - 1][J];
        for (auto J : upper[I]) up_[j][I] += up_[j - 1][J];
      }
  }

  std::size_t max_k() const { return down_.size() - 1; }

  std::vector<BigInt> weights(std::size_t k) const {
    if (k > max_k()) throw DomainError("chain length " + std::to_string(k) + " beyond precomputed range");
    const std::size_t n = down_[0].size();
    std::vector<BigInt> w(n, 0);
    for (std::size_t I = 0; I < n; ++I)
      for (std::size_t j = 0; j <= k; ++j) w[I] += down_[j][I] * up_[k - j][I];
    return w;
  }

  Distribution distribution(std::size_t k) const { return Distribution::from_weights(weights(k)); }

 private:
  ChainMode mode_;
  std::vector<std::vector<BigInt>> down_, up_;
};

inline Distribution chain_k(const IdealLattice& L, std::size_t k, ChainMode mode = ChainMode::Strict) {
  if (mode == ChainMode::Strict && k > L.max_rank())
    throw DomainError("strict " + std::to_string(k) + "-chains exceed the maximal rank " +
                      std::to_string(L.max_rank()));
  return ChainCounter(L, mode, k).distribution(k);
}

struct ToggleSymmetryViolation {
  std::size_t element;
  Rational expected_plus;
  Rational expected_minus;
};

struct ToggleSymmetryReport {
  std::vector<ToggleSymmetryViolation> violations;
  bool ok() const { return violations.empty(); }
};

inline ToggleSymmetryReport is_toggle_symmetric(const Heap& h, const IdealLattice& L, const Distribution& mu) {
  if (mu.size() != L.size()) throw DomainError("distribution does not match the lattice");
  std::vector<Rational> plus(h.size(), Rational(0)), minus(h.size(), Rational(0));
  for (std::size_t k = 0; k < L.size(); ++k) {
    if (mu[k] == 0) continue;
    for (std::size_t p = 0; p < h.size(); ++p) {
      if (can_add(h, L.ideals[k], p)) plus[p] += mu[k];
      else if (can_remove(h, L.ideals[k], p)) minus[p] += mu[k];
    }
  }
  ToggleSymmetryReport report;
  for (std::size_t p = 0; p < h.size(); ++p)
    if (plus[p] != minus[p]) report.violations.push_back({p, plus[p], minus[p]});
  return report;
}

inline Distribution orbit_distribution(const IdealLattice& L, const std::vector<std::size_t>& orbit) {
  if (orbit.empty()) throw DomainError("empty orbit");
  std::vector<BigInt> w(L.size(), 0);
  for (auto k : orbit) w.at(k) += 1;
  return Distribution::from_weights(w);
}

/// The toggle-symmetric polytope: mu >= 0, sum mu = 1, and
/// E(mu; T+_p) - E(mu; T-_p) = 0 for every element p.
struct TogglePolytope {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
};

inline TogglePolytope toggle_polytope(const Heap& h, const IdealLattice& L) {
  TogglePolytope poly;
  poly.a.assign(h.size() + 1, std::vector<Rational>(L.size(), Rational(0)));
  poly.b.assign(h.size() + 1, Rational(0));
  for (std::size_t k = 0; k < L.size(); ++k) {
    poly.a[0][k] = 1;
    for (std::size_t p = 0; p < h.size(); ++p) {
      if (can_add(h, L.ideals[k], p)) poly.a[p + 1][k] = 1;
      else if (can_remove(h, L.ideals[k], p)) poly.a[p + 1][k] = -1;
    }
  }
  poly.b[0] = 1;
  return poly;
}

inline constexpr std::size_t kDefaultLpIdealCap = 1000;

struct LpVertex {
  Rational value;
  Distribution distribution;
  std::vector<std::size_t> basis;
};

struct TcdeCertificate {
  LpVertex min;
  LpVertex max;
  bool constant() const { return min.value == max.value; }
};

/// Optimizes `objective` over the toggle-symmetric polytope.
inline LpVertex lp_vertex(const Heap& h, const IdealLattice& L, const std::vector<Rational>& objective,
                          bool maximize, std::size_t cap = kDefaultLpIdealCap) {
  if (L.size() > cap)
    throw ResourceError("LP over " + std::to_string(L.size()) + " ideals exceeds cap of " +
                        std::to_string(cap));
  auto poly = toggle_polytope(h, L);
  ExactSimplex<Rational> lp(std::move(poly.a), std::move(poly.b));
  auto sol = maximize ? lp.maximize(objective) : lp.minimize(objective);
  if (sol.status == LpStatus::Infeasible)
    throw InternalError("toggle-symmetric polytope reported infeasible");
  if (sol.status == LpStatus::Unbounded) throw InternalError("LP over a polytope reported unbounded");
  return {sol.value, Distribution(std::move(sol.x)), std::move(sol.basis)};
}

inline TcdeCertificate lp_tcde_certificate(const Heap& h, const IdealLattice& L,
                                           std::size_t cap = kDefaultLpIdealCap) {
  const auto f = ddeg_statistic(h, L);
  return {lp_vertex(h, L, f, false, cap), lp_vertex(h, L, f, true, cap)};
}

struct OrbitMean {
  std::vector<std::size_t> members;
  Rational mean;
  bool toggle_symmetric = false;
};

struct HomomesyReport {
  Rational constant;
  std::vector<OrbitMean> orbits;
  bool ok() const {
    for (const auto& o : orbits)
      if (o.mean != constant || !o.toggle_symmetric) return false;
    return true;
  }
};

inline HomomesyReport homomesy_report(const Heap& h, const IdealLattice& L, const IdealAction& action,
                                      const Rational& constant) {
  HomomesyReport report;
  report.constant = constant;
  for (auto& cycle : action_orbits(L, action)) {
    OrbitMean o;
    Rational total = 0;
    for (auto k : cycle) total += ddeg(h, L.ideals[k]);
    o.mean = total / static_cast<long>(cycle.size());
    o.toggle_symmetric = is_toggle_symmetric(h, L, orbit_distribution(L, cycle)).ok();
    o.members = std::move(cycle);
    report.orbits.push_back(std::move(o));
  }
  return report;
}

}  // namespace minuscule
