// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Usage: acceptance [path-to-minuscule-cli]

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "minuscule/io.hpp"
#include "minuscule/minuscule.hpp"
#include "support/oracles.hpp"

namespace {

using namespace minuscule;
using Clock = std::chrono::steady_clock;

// Exact comparisons only; no tolerance anywhere.
constexpr double kGridSeconds = 5.0;
constexpr double kExceptionalSeconds = 30.0;
constexpr std::size_t kLpIdealLimit = 1000;
constexpr std::size_t kExtensionsPerCase = 100;
constexpr std::uint64_t kExtensionSeed = 1;

int failed_criteria = 0;

void report(int n, bool ok, const std::string& detail) {
  if (!ok) ++failed_criteria;
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << n << ": " << detail << std::endl;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << "s";
  return out.str();
}

oracle::Relation relation_of(const Heap& h) {
  oracle::Relation r(h.size(), std::vector<bool>(h.size(), false));
  for (std::size_t p = 0; p < h.size(); ++p)
    for (std::size_t q = 0; q < h.size(); ++q) r[p][q] = h.less(p, q);
  return r;
}

bool identities_hold(const CaseBundle& b, std::size_t& instances) {
  const IdentityContext ctx(b.cd, b.heap, b.lattice);
  bool ok = true;
  for (std::size_t k = 0; k < b.lattice.size(); ++k) {
    for (int i = 1; i <= static_cast<int>(b.cd.rank); ++i) {
      ok = ok && check_f_formula(ctx, k, i).ok() && check_eq2(ctx, k, i).ok() && check_eq3(ctx, k, i).ok() &&
           check_x(ctx, k, i).ok();
      instances += 4;
    }
    ok = ok && check_pointwise_identity(ctx, k).ok();
    ++instances;
  }
  return ok;
}

void criterion_grid() {
  const auto start = Clock::now();
  bool ok = true;
  std::size_t cases = 0;
  std::string first_bad;
  for (std::size_t a = 2; a <= 4; ++a)
    for (std::size_t bb = a; bb <= 4; ++bb) {
      const auto b = build_case({Family::A, a + bb - 1, static_cast<int>(a)});
      const bool iso = oracle::find_isomorphism(relation_of(b.heap), oracle::grid(a, bb)).has_value();
      const Rational expected(static_cast<long>(a * bb), static_cast<long>(a + bb));
      const auto inv = oracle::cofactor_inverse(b.cd.cartan);
      const bool constant_ok = inv[a - 1][a - 1] == expected && b.constant == expected;
      const bool mean_ok = expectation(b.lattice, uni(b.lattice), ddeg_statistic(b.heap, b.lattice)) == expected;
      if (!(iso && constant_ok && mean_ok) && first_bad.empty()) first_bad = b.spec.name();
      ok = ok && iso && constant_ok && mean_ok;
      ++cases;
    }
  const double t = seconds_since(start);
  report(1, ok && t < kGridSeconds,
         std::to_string(cases) + " grid cases, isomorphic to a x b, E(uni; ddeg) = ab/(a+b)" +
             (first_bad.empty() ? "" : ", first failure " + first_bad) + ", " + fixed(t) + " (limit " +
             fixed(kGridSeconds) + ")");
}

void criterion_exceptional() {
  const auto start = Clock::now();
  struct Expected {
    std::size_t rank;
    int node;
    std::size_t heap;
    std::size_t ideals;
    Rational constant;
  };
  bool ok = true;
  std::string detail;
  for (const auto& e : {Expected{6, 6, 16, 27, Rational(4, 3)}, Expected{7, 7, 27, 56, Rational(3, 2)}}) {
    const auto b = build_case({Family::E, e.rank, e.node});
    std::size_t instances = 0;
    const bool ids = identities_hold(b, instances) && verify_commutation(b.cd, b.heap, b.lattice).ok();
    const bool shape = b.heap.size() == e.heap && b.lattice.size() == e.ideals && b.constant == e.constant;
    ok = ok && ids && shape;
    detail += b.spec.name() + ": heap " + std::to_string(b.heap.size()) + ", ideals " +
              std::to_string(b.lattice.size()) + ", constant " + to_fraction_string(b.constant) + ", " +
              std::to_string(instances) + " identity instances; ";
  }
  const double t = seconds_since(start);
  report(2, ok && t < kExceptionalSeconds, detail + fixed(t) + " (limit " + fixed(kExceptionalSeconds) + ")");
}

void criterion_identities(const std::vector<CaseBundle>& catalog) {
  std::size_t instances = 0;
  bool ok = true;
  std::string first_bad;
  for (const auto& b : catalog) {
    const bool case_ok = identities_hold(b, instances);
    if (!case_ok && first_bad.empty()) first_bad = b.spec.name();
    ok = ok && case_ok;
  }
  report(3, ok,
         std::to_string(instances) + " identity instances over " + std::to_string(catalog.size()) +
             " cases, zero tolerance" + (first_bad.empty() ? "" : ", first failure " + first_bad));
}

void criterion_commutation(const std::vector<CaseBundle>& catalog) {
  std::size_t instances = 0, failures = 0;
  for (const auto& b : catalog) {
    const auto r = verify_commutation(b.cd, b.heap, b.lattice);
    instances += r.instances;
    failures += r.ok() ? 0 : 1;
  }
  report(4, failures == 0,
         std::to_string(instances) + " (ideal, node) pairs, " + std::to_string(failures) + " failing cases");
}

void criterion_chains(const std::vector<CaseBundle>& catalog) {
  std::size_t checked = 0;
  bool ok = true;
  std::string first_bad;
  for (const auto& b : catalog) {
    const auto f = ddeg_statistic(b.heap, b.lattice);
    const auto base = expectation(b.lattice, uni(b.lattice), f);
    const auto r = b.lattice.max_rank();
    for (auto mode : {ChainMode::Strict, ChainMode::Multichain}) {
      const ChainCounter counter(b.lattice, mode, r);
      for (std::size_t k = 0; k <= r; ++k) {
        const bool eq = expectation(b.lattice, counter.distribution(k), f) == base;
        if (!eq && first_bad.empty()) first_bad = b.spec.name() + " " + chain_mode_name(mode) + " k=" + std::to_string(k);
        ok = ok && eq;
        ++checked;
      }
    }
  }
  report(5, ok,
         std::to_string(checked) + " chain distributions (strict and multi, 0 <= k <= r) match E(uni; ddeg)" +
             (first_bad.empty() ? "" : ", first failure " + first_bad));
}

void criterion_lp(const std::vector<CaseBundle>& catalog) {
  std::size_t certified = 0, skipped = 0;
  bool catalog_ok = true;
  std::string first_bad;
  for (const auto& b : catalog) {
    if (b.lattice.size() > kLpIdealLimit) {
      ++skipped;
      continue;
    }
    const auto cert = lp_tcde_certificate(b.heap, b.lattice, kLpIdealLimit);
    const bool eq = cert.min.value == b.constant && cert.max.value == b.constant;
    if (!eq && first_bad.empty()) first_bad = b.spec.name();
    catalog_ok = catalog_ok && eq;
    ++certified;
  }

  const auto v = heap_from_word(build_cartan(Family::A, 3), {1, 3, 2});
  const auto Lv = enumerate_ideals(v);
  const auto cv = lp_tcde_certificate(v, Lv);
  const bool v_separates = cv.min.value != cv.max.value;

  report(6, catalog_ok && v_separates,
         std::to_string(certified) + " cases with LP min = LP max = constant" +
             (skipped ? ", " + std::to_string(skipped) + " above the ideal limit" : std::string()) +
             (first_bad.empty() ? "" : ", first failure " + first_bad) + "; V control poset min " +
             to_fraction_string(cv.min.value) + ", max " + to_fraction_string(cv.max.value) +
             (v_separates ? " (separated)" : " (not separated)"));

  const auto claw = heap_from_word(build_cartan(Family::D, 4), {2, 1, 3, 4});
  const auto Lc = enumerate_ideals(claw);
  const auto cc = lp_tcde_certificate(claw, Lc);
  std::cout << "[INFO] supplementary control: claw poset (one element below three) min "
            << to_fraction_string(cc.min.value) << ", max " << to_fraction_string(cc.max.value)
            << (cc.constant() ? " (not separated)" : " (separated)") << std::endl;
}

void criterion_homomesy(const std::vector<CaseBundle>& catalog) {
  std::size_t orbits = 0;
  bool ok = true;
  std::string first_bad;
  for (const auto& b : catalog) {
    for (const auto& action : {rowmotion_action(b.heap), gyration_action(b.heap)}) {
      const auto r = homomesy_report(b.heap, b.lattice, action, b.constant);
      orbits += r.orbits.size();
      if (!r.ok() && first_bad.empty()) first_bad = b.spec.name();
      ok = ok && r.ok();
    }
  }
  report(7, ok,
         std::to_string(orbits) + " rowmotion and gyration orbits with mean equal to the constant and "
                                  "toggle-symmetric orbit distributions" +
             (first_bad.empty() ? "" : ", first failure " + first_bad));
}

std::vector<std::vector<int>> extension_words(const CaseBundle& b, std::uint64_t seed, bool& ok) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<int>> words;
  for (std::size_t n = 0; n < kExtensionsPerCase; ++n) {
    const auto ext = random_linear_extension(b.heap, rng);
    const auto word = word_of(b.heap, ext);
    const auto rebuilt = heap_from_word(b.cd, word);
    const auto iso = heaps_isomorphic(b.heap, rebuilt);
    bool names = iso.has_value();
    for (std::size_t p = 0; names && p < b.heap.size(); ++p)
      names = b.heap.canonical_name[p] == rebuilt.canonical_name[(*iso)[p]];
    ok = ok && names;
    words.push_back(word);
  }
  return words;
}

void criterion_heap_robustness(const std::vector<CaseBundle>& catalog) {
  bool ok = true, reproducible = true;
  std::size_t rebuilt = 0;
  for (std::size_t c = 0; c < catalog.size(); ++c) {
    const auto seed = kExtensionSeed + c;
    const auto first = extension_words(catalog[c], seed, ok);
    bool again_ok = true;
    reproducible = reproducible && extension_words(catalog[c], seed, again_ok) == first;
    rebuilt += first.size();
  }
  report(8, ok && reproducible,
         std::to_string(rebuilt) + " seeded linear extensions rebuild isomorphic heaps with matching names" +
             std::string(reproducible ? ", reproducible" : ", NOT reproducible"));
}

void criterion_structure(const std::vector<CaseBundle>& catalog) {
  bool ok = true;
  std::size_t pairs = 0;
  std::string first_bad;
  for (const auto& b : catalog) {
    bool case_ok = b.lattice.size() == b.orbit.size();
    const auto le = detail::orbit_order(b.orbit);
    std::vector<std::size_t> where;
    std::set<std::size_t> image;
    for (const auto& w : b.lattice.phi_image) {
      const auto u = b.orbit.find(w);
      case_ok = case_ok && u.has_value();
      where.push_back(u.value_or(0));
      image.insert(u.value_or(0));
    }
    case_ok = case_ok && image.size() == b.orbit.size();
    for (std::size_t x = 0; case_ok && x < b.lattice.size(); ++x)
      for (std::size_t y = 0; y < b.lattice.size(); ++y) {
        case_ok = case_ok && b.lattice.ideals[x].is_subset_of(b.lattice.ideals[y]) == le[where[x]][where[y]];
        ++pairs;
      }
    if (!case_ok && first_bad.empty()) first_bad = b.spec.name();
    ok = ok && case_ok;
  }
  report(9, ok,
         "|J(P)| = |orbit| and phi preserves and reflects order on " + std::to_string(pairs) + " ordered pairs" +
             (first_bad.empty() ? "" : ", first failure " + first_bad));
}

std::string run_capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

std::string in_process_sweep() {
  VerifyOptions opt;
  opt.seed = 1;
  std::string out;
  for (const auto& spec : default_catalog()) out += io::case_report_json(verify_case(build_case(spec), opt)).dump(2);
  return out;
}

void criterion_determinism(const std::string& cli) {
  bool ok = in_process_sweep() == in_process_sweep();
  std::string detail = "in-process reports identical";
  if (!ok) detail = "in-process reports differ";
  if (!cli.empty()) {
    int s1 = 0, s2 = 0;
    const std::string cmd = "'" + cli + "' verify --all --seed=1 --format=json";
    const auto a = run_capture(cmd, s1);
    const auto b = run_capture(cmd, s2);
    const bool same = s1 == 0 && s2 == 0 && !a.empty() && a == b;
    ok = ok && same;
    detail += "; two CLI sweeps " + std::string(same ? "byte-identical" : "differ or failed") + " (" +
              std::to_string(a.size()) + " bytes)";
  } else {
    detail += "; CLI path not given, CLI sweep not run";
    ok = false;
  }
  report(10, ok, detail);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  try {
    criterion_grid();
    criterion_exceptional();
    std::vector<CaseBundle> catalog;
    for (const auto& spec : default_catalog()) catalog.push_back(build_case(spec));
    criterion_identities(catalog);
    criterion_commutation(catalog);
    criterion_chains(catalog);
    criterion_lp(catalog);
    criterion_homomesy(catalog);
    criterion_heap_robustness(catalog);
    criterion_structure(catalog);
    criterion_determinism(cli);
  } catch (const std::exception& e) {
    std::cout << "[FAIL] aborted: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (failed_criteria == 0 ? "all criteria passed" : std::to_string(failed_criteria) + " criteria failed")
            << std::endl;
  return failed_criteria == 0 ? 0 : 1;
}
