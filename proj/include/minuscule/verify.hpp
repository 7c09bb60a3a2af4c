#pragma once

// Case construction and the full per-case verification suite.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "minuscule/cartan.hpp"
#include "minuscule/cde.hpp"
#include "minuscule/error.hpp"
#include "minuscule/heap.hpp"
#include "minuscule/ideals.hpp"
#include "minuscule/orbit.hpp"
#include "minuscule/stats.hpp"

namespace minuscule {

struct CaseSpec {
  Family family = Family::A;
  std::size_t rank = 1;
  int node = 1;
  std::size_t orbit_cap = kDefaultOrbitCap;
  std::size_t ideal_cap = kDefaultIdealCap;

  /// e.g. "A3-w2"
  std::string name() const {
    return std::string(1, family_letter(family)) + std::to_string(rank) + "-w" + std::to_string(node);
  }
};

/// Raised when a case's weight fails verify_minuscule.
class NonMinusculeError : public DomainError {
 public:
  NonMinusculeError(const std::string& what, MinusculeReport r) : DomainError(what), report(std::move(r)) {}
  MinusculeReport report;
};

struct CaseBundle {
  CaseSpec spec;
  CartanDatum cd;
  Weight lambda;
  OrbitPoset orbit;
  Heap heap;
  IdealLattice lattice;
  Rational constant;
};

inline CaseBundle build_case(const CaseSpec& spec) {
  CaseBundle b;
  b.spec = spec;
  b.cd = build_cartan(spec.family, spec.rank);
  b.lambda = fundamental_weight(spec.rank, spec.node);
  b.orbit = generate_orbit(b.cd, b.lambda, spec.orbit_cap);
  auto report = verify_minuscule(b.cd, b.orbit);
  if (!report.ok) {
    const std::string what = spec.name() + " is not minuscule: " + report.failures.front();
    throw NonMinusculeError(what, std::move(report));
  }
  b.heap = heap_from_word(b.cd, saturated_chain(b.orbit));
  b.heap.highest_weight = b.lambda;
  b.lattice = enumerate_ideals(b.cd, b.heap, spec.ideal_cap);
  b.constant = tcde_constant(b.cd, b.lambda);
  return b;
}

/// A up to rank 7 (all nodes), D3..D8 (minuscule nodes), E6 (nodes 1, 6), E7 (node 7).
inline std::vector<CaseSpec> default_catalog() {
  std::vector<CaseSpec> out;
  auto add_all = [&](Family f, std::size_t t) {
    const auto cd = build_cartan(f, t);
    for (int k : minuscule_catalog(cd)) out.push_back({f, t, k});
  };
  for (std::size_t t = 1; t <= 7; ++t) add_all(Family::A, t);
  for (std::size_t t = 3; t <= 8; ++t) add_all(Family::D, t);
  add_all(Family::E, 6);
  add_all(Family::E, 7);
  return out;
}

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t linear_extensions = 100;
  std::size_t convex_combinations = 8;
  std::size_t lp_ideal_cap = kDefaultLpIdealCap;
  bool strict_chains = true;
  bool multichains = true;
  GyrationOrder gyration_order = GyrationOrder::EvenFirst;
};

struct CheckRow {
  explicit CheckRow(std::string name) : check(std::move(name)) {}

  std::string check;
  std::size_t instances = 0;
  std::size_t failures = 0;
  bool skipped = false;
  std::vector<std::string> samples;  // first few failure descriptions

  void record(bool ok, const std::string& what = {}) {
    ++instances;
    if (ok) return;
    ++failures;
    if (samples.size() < 5) samples.push_back(what);
  }
};

struct ExpectationRow {
  std::string distribution;
  Rational expectation;
  bool equal = false;
};

struct CaseReport {
  std::string name;
  Rational constant;
  std::size_t heap_size = 0;
  std::size_t ideal_count = 0;
  std::vector<CheckRow> checks;
  std::vector<ExpectationRow> expectations;
  std::optional<TcdeCertificate> certificate;

  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& c : checks) f += c.failures;
    return f;
  }
  bool any_skipped() const {
    return std::any_of(checks.begin(), checks.end(), [](const auto& c) { return c.skipped; });
  }
};

namespace detail {

inline std::string fmt_outcome(const std::string& where, const CheckOutcome& o) {
  return where + ": lhs " + to_fraction_string(o.lhs) + " rhs " + to_fraction_string(o.rhs);
}

inline std::string ideal_tag(const IdealLattice& L, std::size_t k) {
  return "ideal " + std::to_string(k) + " [" + L.ideals[k].to_bit_string(L.heap_size) + "]";
}

}  // namespace detail

inline void check_heap_structure(const CaseBundle& b, const VerifyOptions& opt, CaseReport& report) {
  const auto& h = b.heap;
  CheckRow comparable{"heap.equal_labels_comparable"};
  CheckRow no_fiber_covers{"heap.fiber_has_no_covers"};
  for (std::size_t p = 0; p < h.size(); ++p)
    for (std::size_t q = p + 1; q < h.size(); ++q)
      if (h.label[p] == h.label[q])
        comparable.record(h.comparable(p, q), "elements " + std::to_string(p) + "," + std::to_string(q));
  for (const auto& [p, q] : h.covers)
    no_fiber_covers.record(h.label[p] != h.label[q], "cover " + std::to_string(p) + "<" + std::to_string(q));
  report.checks.push_back(comparable);
  report.checks.push_back(no_fiber_covers);

  CheckRow rules{"heap.equal_label_rules_agree"};
  const auto literal = heap_from_word(b.cd, h.label, EqualLabelRule::AdjacentOnly);
  rules.record(literal.below == h.below, "adjacent-only order differs");
  report.checks.push_back(rules);

  CheckRow extensions{"heap.linear_extensions_isomorphic"};
  std::mt19937_64 rng(opt.seed);
  auto names = h.canonical_name;
  std::sort(names.begin(), names.end());
  for (std::size_t n = 0; n < opt.linear_extensions; ++n) {
    const auto ext = random_linear_extension(h, rng);
    const auto rebuilt = heap_from_word(b.cd, word_of(h, ext));
    auto rebuilt_names = rebuilt.canonical_name;
    std::sort(rebuilt_names.begin(), rebuilt_names.end());
    extensions.record(heaps_isomorphic(h, rebuilt).has_value() && rebuilt_names == names,
                      "extension " + std::to_string(n));
  }
  report.checks.push_back(extensions);
}

inline void check_structure(const CaseBundle& b, const VerifyOptions& opt, CaseReport& report) {
  const auto& L = b.lattice;
  CheckRow size{"structure.ideal_count_equals_orbit"};
  size.record(L.size() == b.orbit.size(),
              std::to_string(L.size()) + " ideals vs " + std::to_string(b.orbit.size()) + " weights");
  report.checks.push_back(size);

  CheckRow bijection{"structure.phi_bijective"};
  std::vector<std::size_t> where(L.size());
  std::vector<bool> used(b.orbit.size(), false);
  for (std::size_t k = 0; k < L.size(); ++k) {
    const auto w = b.orbit.find(L.phi_image[k]);
    const bool fresh = w && !used[*w];
    bijection.record(fresh, detail::ideal_tag(L, k) + " maps to " + weight_to_string(L.phi_image[k]));
    if (fresh) {
      used[*w] = true;
      where[k] = *w;
    }
  }
  report.checks.push_back(bijection);

  CheckRow order{"structure.phi_order_isomorphism"};
  if (bijection.failures == 0 && size.failures == 0) {
    const auto le = detail::orbit_order(b.orbit);
    for (std::size_t a = 0; a < L.size(); ++a)
      for (std::size_t c = 0; c < L.size(); ++c)
        order.record(L.ideals[a].is_subset_of(L.ideals[c]) == le[where[a]][where[c]],
                     detail::ideal_tag(L, a) + " vs " + detail::ideal_tag(L, c));
  } else {
    order.record(false, "phi is not a bijection");
  }
  report.checks.push_back(order);

  CheckRow independence{"phi.linear_extension_independent"};
  std::mt19937_64 rng(opt.seed + 1);
  for (std::size_t k = 0; k < L.size(); ++k) {
    const auto ext = random_linear_extension(b.heap, L.ideals[k], rng);
    independence.record(phi_along(b.cd, b.heap, ext) == L.phi_image[k], detail::ideal_tag(L, k));
  }
  report.checks.push_back(independence);

  CheckRow commutation{"commutation.phi_toggle_reflection"};
  const auto comm = verify_commutation(b.cd, b.heap, L);
  commutation.instances = comm.instances;
  commutation.failures = comm.violations.size();
  for (std::size_t v = 0; v < std::min<std::size_t>(5, comm.violations.size()); ++v)
    commutation.samples.push_back(detail::ideal_tag(L, comm.violations[v].ideal) + " node " +
                                  std::to_string(comm.violations[v].node));
  report.checks.push_back(commutation);
}

inline void check_identities(const CaseBundle& b, CaseReport& report) {
  const IdentityContext ctx(b.cd, b.heap, b.lattice);
  const auto& L = b.lattice;
  CheckRow f{"identity.label_count_formula"}, eq2{"identity.signed_toggle_sum"}, eq3{"identity.weighted_toggle_sum"},
      x{"identity.x_statistic"}, pointwise{"identity.pointwise_ddeg"}, xsum{"identity.x_sum_constant"},
      degrees{"degree.matches_cover_graph"};

  std::vector<int> down(L.size(), 0), up(L.size(), 0);
  for (const auto& c : L.covers) {
    ++down[c.upper];
    ++up[c.lower];
  }
  for (std::size_t k = 0; k < L.size(); ++k) {
    const auto tag = detail::ideal_tag(L, k);
    for (int i = 1; i <= static_cast<int>(b.cd.rank); ++i) {
      const auto where = tag + " node " + std::to_string(i);
      const auto o1 = check_f_formula(ctx, k, i);
      f.record(o1.ok(), detail::fmt_outcome(where, o1));
      const auto o2 = check_eq2(ctx, k, i);
      eq2.record(o2.ok(), detail::fmt_outcome(where, o2));
      const auto o3 = check_eq3(ctx, k, i);
      eq3.record(o3.ok(), detail::fmt_outcome(where, o3));
      const auto o4 = check_x(ctx, k, i);
      x.record(o4.ok(), detail::fmt_outcome(where, o4));
    }
    const auto p = check_pointwise_identity(ctx, k);
    pointwise.record(p.ok(), detail::fmt_outcome(tag, p));
    const auto s = check_x_sum(ctx, k);
    xsum.record(s.ok(), detail::fmt_outcome(tag, s));
    degrees.record(ddeg(b.heap, L.ideals[k]) == down[k] && updeg(b.heap, L.ideals[k]) == up[k], tag);
  }
  for (auto* row : {&f, &eq2, &eq3, &x, &pointwise, &xsum, &degrees}) report.checks.push_back(*row);
}

inline void check_distributions(const CaseBundle& b, const VerifyOptions& opt, CaseReport& report) {
  const auto& L = b.lattice;
  const auto& h = b.heap;
  const auto f = ddeg_statistic(h, L);

  auto assess = [&](const std::string& name, const Distribution& mu, CheckRow& symmetric, CheckRow& cde) {
    const auto e = expectation(L, mu, f);
    report.expectations.push_back({name, e, e == b.constant});
    symmetric.record(is_toggle_symmetric(h, L, mu).ok(), name);
    cde.record(e == b.constant, name + ": " + to_fraction_string(e));
  };

  CheckRow sym_basic{"toggle_symmetry.uni_maxchain"}, cde_basic{"cde.uni_maxchain"};
  assess("uni", uni(L), sym_basic, cde_basic);
  const auto mc = maxchain(L);
  assess("maxchain", mc, sym_basic, cde_basic);
  report.checks.push_back(sym_basic);
  report.checks.push_back(cde_basic);

  const std::size_t r = L.max_rank();
  for (auto mode : {ChainMode::Strict, ChainMode::Multichain}) {
    if (mode == ChainMode::Strict && !opt.strict_chains) continue;
    if (mode == ChainMode::Multichain && !opt.multichains) continue;
    const std::string m = chain_mode_name(mode);
    CheckRow sym{"toggle_symmetry.chain_" + m}, cde{"cde.chain_" + m};
    const ChainCounter counter(L, mode, r);
    for (std::size_t k = 0; k <= r; ++k) {
      const auto mu = counter.distribution(k);
      assess("chain_" + m + "(" + std::to_string(k) + ")", mu, sym, cde);
      if (mode == ChainMode::Strict && k == r) {
        CheckRow same{"cde.maxchain_equals_strict_chain_r"};
        same.record(mu.probs() == mc.probs(), "maxchain differs from chain(r)");
        report.checks.push_back(same);
      }
      if (k == 0) {
        CheckRow same{"cde.chain0_equals_uni_" + m};
        same.record(mu.probs() == uni(L).probs(), "chain(0) differs from uni");
        report.checks.push_back(same);
      }
    }
    report.checks.push_back(sym);
    report.checks.push_back(cde);
  }
}

inline void check_lp(const CaseBundle& b, const VerifyOptions& opt, CaseReport& report) {
  const auto& L = b.lattice;
  const auto& h = b.heap;
  CheckRow cert{"lp.tcde_certificate"};
  CheckRow combos{"lp.vertex_combinations"};
  if (L.size() > opt.lp_ideal_cap) {
    cert.skipped = combos.skipped = true;
    report.checks.push_back(cert);
    report.checks.push_back(combos);
    return;
  }
  const auto c = lp_tcde_certificate(h, L, opt.lp_ideal_cap);
  cert.record(c.min.value == b.constant && c.max.value == b.constant,
              "min " + to_fraction_string(c.min.value) + " max " + to_fraction_string(c.max.value));
  report.certificate = c;
  report.checks.push_back(cert);

  // Random vertices from random objectives, mixed with random rational weights.
  std::mt19937_64 rng(opt.seed + 2);
  std::uniform_int_distribution<int> coeff(-5, 5), mix(1, 9);
  std::vector<Distribution> vertices{c.min.distribution, c.max.distribution};
  for (std::size_t n = 0; n < 4; ++n) {
    std::vector<Rational> objective(L.size());
    for (auto& v : objective) v = coeff(rng);
    vertices.push_back(lp_vertex(h, L, objective, n % 2 == 0, opt.lp_ideal_cap).distribution);
  }
  const auto f = ddeg_statistic(h, L);
  for (std::size_t n = 0; n < opt.convex_combinations; ++n) {
    std::vector<Rational> probs(L.size(), Rational(0));
    Rational total = 0;
    std::vector<int> weights;
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      weights.push_back(mix(rng));
      total += weights.back();
    }
    for (std::size_t v = 0; v < vertices.size(); ++v)
      for (std::size_t k = 0; k < L.size(); ++k) probs[k] += vertices[v][k] * weights[v] / total;
    const Distribution mu(std::move(probs));
    bool ok = expectation(L, mu, f) == b.constant;
    for (std::size_t p = 0; p < h.size() && ok; ++p) {
      Rational signed_sum = 0;
      for (std::size_t k = 0; k < L.size(); ++k) signed_sum += mu[k] * snapshot(h, L.ideals[k]).signed_value(p);
      ok = signed_sum == 0;
    }
    combos.record(ok, "combination " + std::to_string(n));
  }
  report.checks.push_back(combos);
}

inline void check_dynamics(const CaseBundle& b, const VerifyOptions& opt, CaseReport& report) {
  const auto& L = b.lattice;
  const auto& h = b.heap;
  CheckRow agree{"rowmotion.definitions_agree"};
  for (std::size_t k = 0; k < L.size(); ++k)
    agree.record(rowmotion(h, L.ideals[k]) == rowmotion_by_toggles(h, L.ideals[k]), detail::ideal_tag(L, k));
  report.checks.push_back(agree);

  auto run = [&](const std::string& name, const IdealAction& action) {
    CheckRow mean{"homomesy." + name}, sym{"toggle_symmetry." + name + "_orbits"};
    const auto hr = homomesy_report(h, L, action, b.constant);
    for (const auto& o : hr.orbits) {
      const auto tag = "orbit of " + detail::ideal_tag(L, o.members.front());
      mean.record(o.mean == b.constant, tag + " mean " + to_fraction_string(o.mean));
      sym.record(o.toggle_symmetric, tag);
    }
    report.checks.push_back(mean);
    report.checks.push_back(sym);
  };
  run("rowmotion", rowmotion_action(h));
  run("gyration", gyration_action(h, opt.gyration_order));
}

inline CaseReport verify_case(const CaseBundle& b, const VerifyOptions& opt = {}) {
  CaseReport report;
  report.name = b.spec.name();
  report.constant = b.constant;
  report.heap_size = b.heap.size();
  report.ideal_count = b.lattice.size();
  CheckRow minuscule{"orbit.minuscule"};
  minuscule.record(verify_minuscule(b.cd, b.orbit).ok);
  report.checks.push_back(minuscule);
  check_heap_structure(b, opt, report);
  check_structure(b, opt, report);
  check_identities(b, report);
  check_distributions(b, opt, report);
  check_lp(b, opt, report);
  check_dynamics(b, opt, report);
  return report;
}

}  // namespace minuscule
