// Command-line front end: build, verify and orbits.
//
// Exit codes: 0 success, 1 check failure, 2 domain or usage error,
// 3 resource cap exceeded (or a sweep entry skipped on a cap).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "minuscule/minuscule.hpp"

namespace fs = std::filesystem;
using namespace minuscule;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitDomain = 2;
constexpr int kExitResource = 3;

struct CaseArgs {
  std::string family;
  std::size_t rank = 0;
  int node = 0;
  std::size_t cap_orbit = kDefaultOrbitCap;
  std::size_t cap_ideals = kDefaultIdealCap;

  CaseSpec spec() const {
    CaseSpec s{parse_family(family), rank, node, cap_orbit, cap_ideals};
    const auto cd = build_cartan(s.family, s.rank);
    cd.check_node(node);
    return s;
  }
};

void add_case_args(CLI::App* cmd, CaseArgs& args, bool required) {
  auto* f = cmd->add_option("family", args.family, "Cartan family: A, D or E");
  auto* r = cmd->add_option("rank", args.rank, "Rank of the Cartan datum");
  auto* n = cmd->add_option("node", args.node, "Node k of the fundamental weight (Bourbaki numbering)");
  if (required) {
    f->required();
    r->required();
    n->required();
  }
  cmd->add_option("--cap-orbit", args.cap_orbit, "Maximum orbit size");
  cmd->add_option("--cap-ideals", args.cap_ideals, "Maximum number of order ideals");
}

/// Writes via a temporary file and a rename.
void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << content;
  }
  fs::rename(tmp, path);
}

int report_non_minuscule(const CaseSpec& spec, const NonMinusculeError& e) {
  io::Json j;
  j["case"] = spec.name();
  j["minuscule"] = false;
  j["failures"] = e.report.failures;
  std::cout << j.dump(2) << '\n';
  std::cerr << "error: " << e.what() << '\n';
  return kExitDomain;
}

int run_build(const CaseArgs& args, const std::string& format, const std::string& out_dir) {
  const auto spec = args.spec();
  const auto bundle = build_case(spec);
  if (format == "dot") {
    const auto heap = io::heap_dot(bundle.heap, spec.name() + "-heap");
    const auto orbit = io::orbit_dot(bundle.orbit, spec.name() + "-orbit");
    if (out_dir.empty()) {
      std::cout << heap << orbit;
    } else {
      write_file(fs::path(out_dir) / (spec.name() + "-heap.dot"), heap);
      write_file(fs::path(out_dir) / (spec.name() + "-orbit.dot"), orbit);
      write_file(fs::path(out_dir) / (spec.name() + "-ideals.dot"), io::lattice_dot(bundle.lattice));
    }
    return kExitOk;
  }
  if (format != "json") throw CLI::ValidationError("--format", "build supports json or dot");
  const auto text = io::bundle_json(bundle).dump(2) + "\n";
  if (out_dir.empty()) {
    std::cout << text;
  } else {
    write_file(fs::path(out_dir) / (spec.name() + ".json"), text);
    write_file(fs::path(out_dir) / (spec.name() + "-heap.dot"), io::heap_dot(bundle.heap, spec.name() + "-heap"));
    write_file(fs::path(out_dir) / (spec.name() + "-orbit.dot"),
               io::orbit_dot(bundle.orbit, spec.name() + "-orbit"));
  }
  return kExitOk;
}

int run_verify(const CaseArgs& args, bool all, const std::string& format, const std::string& chain_mode,
               std::uint64_t seed, std::size_t extensions, const std::string& gyration, const std::string& out_dir) {
  VerifyOptions opt;
  opt.seed = seed;
  opt.linear_extensions = extensions;
  opt.strict_chains = chain_mode != "multi";
  opt.multichains = chain_mode != "strict";
  opt.gyration_order = gyration == "odd" ? GyrationOrder::OddFirst : GyrationOrder::EvenFirst;
  if (format != "json" && format != "csv") throw CLI::ValidationError("--format", "verify supports json or csv");

  std::vector<CaseSpec> cases;
  if (all) {
    for (auto s : default_catalog()) {
      s.orbit_cap = args.cap_orbit;
      s.ideal_cap = args.cap_ideals;
      cases.push_back(s);
    }
  } else {
    if (args.family.empty()) throw CLI::ValidationError("verify", "give a case (FAMILY RANK NODE) or --all");
    cases.push_back(args.spec());
  }

  io::Json doc;
  io::Json case_docs = io::Json::array();
  std::string csv = io::checks_csv_header();
  std::size_t failures = 0;
  std::vector<std::string> skipped;
  for (const auto& spec : cases) {
    std::optional<CaseBundle> bundle;
    try {
      bundle = build_case(spec);
    } catch (const NonMinusculeError& e) {
      if (!all) return report_non_minuscule(spec, e);
      throw;
    } catch (const ResourceError& e) {
      if (!all) throw;
      std::cerr << "skipped " << spec.name() << ": " << e.what() << '\n';
      skipped.push_back(spec.name());
      io::Json j;
      j["case"] = spec.name();
      j["skipped"] = e.what();
      case_docs.push_back(j);
      csv += spec.name() + ",build,0,0,true\n";
      continue;
    }
    const auto report = verify_case(*bundle, opt);
    failures += report.failures();
    if (report.any_skipped()) skipped.push_back(spec.name());
    auto j = io::case_report_json(report);
    if (!out_dir.empty()) write_file(fs::path(out_dir) / (spec.name() + ".json"), j.dump(2) + "\n");
    case_docs.push_back(std::move(j));
    csv += io::case_report_csv(report);
  }
  doc["cases"] = case_docs;
  io::Json summary;
  summary["cases"] = cases.size();
  summary["failures"] = failures;
  summary["skipped"] = skipped;
  doc["summary"] = summary;

  const std::string text = format == "json" ? doc.dump(2) + "\n" : csv;
  std::cout << text;
  if (!out_dir.empty()) write_file(fs::path(out_dir) / (format == "json" ? "report.json" : "report.csv"), text);

  if (failures) return kExitCheckFailure;
  if (!skipped.empty()) return kExitResource;
  return kExitOk;
}

int run_orbits(const CaseArgs& args, const std::string& action, const std::string& format,
               const std::string& gyration, const std::string& out_dir) {
  const auto spec = args.spec();
  const auto bundle = build_case(spec);
  const auto& h = bundle.heap;
  const auto order = gyration == "odd" ? GyrationOrder::OddFirst : GyrationOrder::EvenFirst;
  const auto act = action == "gyration" ? gyration_action(h, order) : rowmotion_action(h);
  const auto report = homomesy_report(h, bundle.lattice, act, bundle.constant);

  std::string text;
  if (format == "csv") {
    text = "size,ddeg_mean,matches_constant\n";
    for (const auto& o : report.orbits)
      text += std::to_string(o.members.size()) + "," + to_fraction_string(o.mean) + "," +
              (o.mean == report.constant ? "true" : "false") + "\n";
  } else if (format == "json") {
    io::Json j;
    j["case"] = spec.name();
    j["action"] = action;
    j["constant"] = io::rational_json(report.constant);
    io::Json rows = io::Json::array();
    for (const auto& o : report.orbits) {
      io::Json row;
      row["size"] = o.members.size();
      row["ddeg_mean"] = io::rational_json(o.mean);
      row["matches_constant"] = o.mean == report.constant;
      row["toggle_symmetric"] = o.toggle_symmetric;
      row["members"] = o.members;
      rows.push_back(row);
    }
    j["orbits"] = rows;
    text = j.dump(2) + "\n";
  } else {
    throw CLI::ValidationError("--format", "orbits supports csv or json");
  }
  std::cout << text;
  if (!out_dir.empty())
    write_file(fs::path(out_dir) / (spec.name() + "-" + action + (format == "csv" ? ".csv" : ".json")), text);
  return report.ok() ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minuscule heaps, toggle dynamics and exact down-degree certificates"};
  app.require_subcommand(1);

  std::string build_format, verify_format, orbits_format, out_dir;
  std::string chain_mode = "strict", action = "rowmotion", gyration = "even";
  std::uint64_t seed = 1;
  std::size_t extensions = 100;
  bool all = false;

  CaseArgs build_args, verify_args, orbit_args;
  auto* build = app.add_subcommand("build", "Emit Cartan data, orbit, heap, ideals and phi");
  add_case_args(build, build_args, true);
  build->add_option("--format", build_format, "json or dot")->default_val("json");
  build->add_option("--out", out_dir, "Output directory");

  auto* verify = app.add_subcommand("verify", "Run every check on one case or on the default catalog");
  add_case_args(verify, verify_args, false);
  verify->add_flag("--all", all, "Sweep the default catalog");
  verify->add_option("--format", verify_format, "json or csv")->default_val("json");
  verify->add_option("--chain-mode", chain_mode, "strict (default), multi or both")
      ->check(CLI::IsMember({"strict", "multi", "both"}));
  verify->add_option("--seed", seed, "Seed for randomized property sweeps");
  verify->add_option("--extensions", extensions, "Random linear extensions per case");
  verify->add_option("--gyration-order", gyration, "even or odd rank phase first")
      ->check(CLI::IsMember({"even", "odd"}));
  verify->add_option("--out", out_dir, "Output directory");

  auto* orbits = app.add_subcommand("orbits", "Orbit sizes and down-degree means under an action");
  add_case_args(orbits, orbit_args, true);
  orbits->add_option("--action", action, "rowmotion or gyration")
      ->check(CLI::IsMember({"rowmotion", "gyration"}));
  orbits->add_option("--format", orbits_format, "csv or json")->default_val("csv");
  orbits->add_option("--gyration-order", gyration, "even or odd rank phase first")
      ->check(CLI::IsMember({"even", "odd"}));
  orbits->add_option("--out", out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  try {
    if (*build) return run_build(build_args, build_format, out_dir);
    if (*verify)
      return run_verify(verify_args, all, verify_format, chain_mode, seed, extensions, gyration, out_dir);
    if (*orbits) return run_orbits(orbit_args, action, orbits_format, gyration, out_dir);
  } catch (const NonMinusculeError& e) {
    io::Json j;
    j["minuscule"] = false;
    j["failures"] = e.report.failures;
    std::cout << j.dump(2) << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitCheckFailure;
  }
  return kExitOk;
}
