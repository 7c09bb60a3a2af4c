#pragma once

// Toggle-eligibility indicators, down-degree, and the exact identities that
// tie label counts and indicator sums on J(P_lambda) to inner products.

#include <cstddef>
#include <string>
#include <vector>

#include "minuscule/cartan.hpp"
#include "minuscule/heap.hpp"
#include "minuscule/ideals.hpp"
#include "minuscule/rational.hpp"

namespace minuscule {

struct ToggleSnapshot {
  std::vector<int> plus;   // 1 iff the toggle adds p
  std::vector<int> minus;  // 1 iff the toggle removes p

  int signed_value(std::size_t p) const { return plus[p] - minus[p]; }
};

inline ToggleSnapshot snapshot(const Heap& h, const OrderIdeal& I) {
  ToggleSnapshot s;
  s.plus.assign(h.size(), 0);
  s.minus.assign(h.size(), 0);
  for (std::size_t p = 0; p < h.size(); ++p) {
    s.plus[p] = can_add(h, I, p) ? 1 : 0;
    s.minus[p] = can_remove(h, I, p) ? 1 : 0;
  }
  return s;
}

/// Number of maximal elements of I.
inline int ddeg(const Heap& h, const OrderIdeal& I) {
  int d = 0;
  for (std::size_t p = 0; p < h.size(); ++p) d += can_remove(h, I, p) ? 1 : 0;
  return d;
}

inline int updeg(const Heap& h, const OrderIdeal& I) {
  int d = 0;
  for (std::size_t p = 0; p < h.size(); ++p) d += can_add(h, I, p) ? 1 : 0;
  return d;
}

inline std::vector<Rational> ddeg_statistic(const Heap& h, const IdealLattice& L) {
  std::vector<Rational> f;
  f.reserve(L.size());
  for (const auto& I : L.ideals) f.emplace_back(ddeg(h, I));
  return f;
}

/// |I ∩ P^i|
inline int f_label(const Heap& h, const OrderIdeal& I, int node) {
  int c = 0;
  for (std::size_t p = 0; p < h.size(); ++p)
    if (h.label[p] == node && I.contains(p)) ++c;
  return c;
}

/// 2 (lambda, lambda) / Omega^2
inline Rational tcde_constant(const CartanDatum& cd, const Weight& lambda) {
  return 2 * inner_product(cd, lambda, lambda) / cd.omega_sq;
}

/// (alpha_i, alpha_i); Omega^2 for every node of a simply-laced datum.
inline Rational root_length_sq(const CartanDatum& cd, int node) {
  const auto a = simple_root(cd, node);
  return inner_product(cd, a, a);
}

inline Rational pairing_with_fundamental(const CartanDatum& cd, const Weight& mu, int node) {
  return inner_product(cd, mu, fundamental_weight(cd.rank, node));
}

struct CheckOutcome {
  Rational lhs;
  Rational rhs;
  bool ok() const { return lhs == rhs; }
};

/// Context shared by the per-ideal identity checks.
struct IdentityContext {
  const CartanDatum& cd;
  const Heap& h;
  const IdealLattice& L;
  Weight lambda;

  IdentityContext(const CartanDatum& c, const Heap& heap, const IdealLattice& lattice)
      : cd(c), h(heap), L(lattice) {
    if (!heap.highest_weight) throw DomainError("heap carries no highest weight");
    lambda = *heap.highest_weight;
  }

  const Weight& phi_of(std::size_t ideal) const { return L.phi_image.at(ideal); }
};

inline CheckOutcome check_f_formula(const IdentityContext& ctx, std::size_t ideal, int node) {
  const auto& I = ctx.L.ideals[ideal];
  const Rational lhs = f_label(ctx.h, I, node);
  const Rational rhs = 2 *
                       (pairing_with_fundamental(ctx.cd, ctx.lambda, node) -
                        pairing_with_fundamental(ctx.cd, ctx.phi_of(ideal), node)) /
                       root_length_sq(ctx.cd, node);
  return {lhs, rhs};
}

inline CheckOutcome check_eq2(const IdentityContext& ctx, std::size_t ideal, int node) {
  const auto snap = snapshot(ctx.h, ctx.L.ideals[ideal]);
  Rational lhs = 0;
  for (auto p : label_fiber(ctx.h, node)) lhs += snap.signed_value(p);
  return {lhs, coroot_pairing(ctx.cd, ctx.phi_of(ideal), node)};
}

/// Sum over the fiber of (j-1) T+ - j T-, with j the 1-based heap-order position.
inline CheckOutcome check_eq3(const IdentityContext& ctx, std::size_t ideal, int node) {
  const auto& I = ctx.L.ideals[ideal];
  const auto snap = snapshot(ctx.h, I);
  const auto fiber = label_fiber(ctx.h, node);
  Rational lhs = 0;
  for (std::size_t j = 1; j <= fiber.size(); ++j) {
    const auto p = fiber[j - 1];
    lhs += Rational(static_cast<long>(j) - 1) * snap.plus[p] - Rational(static_cast<long>(j)) * snap.minus[p];
  }
  const Rational rhs = Rational(f_label(ctx.h, I, node)) * coroot_pairing(ctx.cd, ctx.phi_of(ideal), node);
  return {lhs, rhs};
}

/// X_i from the indicators, against (2/(alpha_i,alpha_i)) (phi, omega_i)(phi, alpha_i^vee).
inline CheckOutcome check_x(const IdentityContext& ctx, std::size_t ideal, int node) {
  const auto snap = snapshot(ctx.h, ctx.L.ideals[ideal]);
  const auto fiber = label_fiber(ctx.h, node);
  const Rational len = root_length_sq(ctx.cd, node);
  const Rational weight_term = 2 * pairing_with_fundamental(ctx.cd, ctx.lambda, node) / len;
  Rational lhs = 0;
  for (std::size_t j = 1; j <= fiber.size(); ++j) {
    const auto p = fiber[j - 1];
    const int t = snap.signed_value(p);
    lhs += snap.minus[p];
    lhs -= Rational(static_cast<long>(j) - 1) * t;
    lhs += weight_term * t;
  }
  const auto& mu = ctx.phi_of(ideal);
  const Rational rhs =
      2 / len * pairing_with_fundamental(ctx.cd, mu, node) * coroot_pairing(ctx.cd, mu, node);
  return {lhs, rhs};
}

inline Rational x_statistic(const IdentityContext& ctx, std::size_t ideal, int node) {
  return check_x(ctx, ideal, node).lhs;
}

/// ddeg(I) against the constant plus sum_{i,j} c_ij T_{p_ij}(I),
/// c_ij = (j-1) - 2 (lambda, omega_i) / (alpha_i, alpha_i).
inline CheckOutcome check_pointwise_identity(const IdentityContext& ctx, std::size_t ideal) {
  const auto& I = ctx.L.ideals[ideal];
  const auto snap = snapshot(ctx.h, I);
  Rational rhs = tcde_constant(ctx.cd, ctx.lambda);
  for (int i = 1; i <= static_cast<int>(ctx.cd.rank); ++i) {
    const auto fiber = label_fiber(ctx.h, i);
    const Rational shift = 2 * pairing_with_fundamental(ctx.cd, ctx.lambda, i) / root_length_sq(ctx.cd, i);
    for (std::size_t j = 1; j <= fiber.size(); ++j)
      rhs += (Rational(static_cast<long>(j) - 1) - shift) * snap.signed_value(fiber[j - 1]);
  }
  return {Rational(ddeg(ctx.h, I)), rhs};
}

/// sum_i X_i(I) against the constant.
inline CheckOutcome check_x_sum(const IdentityContext& ctx, std::size_t ideal) {
  Rational sum = 0;
  for (int i = 1; i <= static_cast<int>(ctx.cd.rank); ++i) sum += x_statistic(ctx, ideal, i);
  return {sum, tcde_constant(ctx.cd, ctx.lambda)};
}

}  // namespace minuscule
