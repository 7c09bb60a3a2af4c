#pragma once

// JSON, CSV and Graphviz output. Every rational is written as a "num/den"
// string; key order is fixed so output is byte-stable.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "minuscule/cartan.hpp"
#include "minuscule/cde.hpp"
#include "minuscule/heap.hpp"
#include "minuscule/ideals.hpp"
#include "minuscule/orbit.hpp"
#include "minuscule/verify.hpp"

namespace minuscule::io {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& q) { return to_fraction_string(q); }

inline Json weight_json(const Weight& w) {
  Json a = Json::array();
  for (const auto& c : w.coords) {
    if (is_integer(c)) a.push_back(c.convert_to<long long>());
    else a.push_back(to_fraction_string(c));
  }
  return a;
}

inline Json cartan_json(const CartanDatum& cd) {
  Json j;
  j["family"] = std::string(1, family_letter(cd.family));
  j["rank"] = cd.rank;
  j["numbering"] = "bourbaki";
  j["matrix"] = cd.cartan;
  Json inv = Json::array();
  for (const auto& row : cd.inv_cartan) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(rational_json(v));
    inv.push_back(r);
  }
  j["inverse"] = inv;
  j["omega_sq"] = rational_json(cd.omega_sq);
  return j;
}

inline Json orbit_json(const OrbitPoset& orbit) {
  Json j;
  Json weights = Json::array();
  for (const auto& w : orbit.weights) weights.push_back(weight_json(w));
  j["weights"] = weights;
  Json covers = Json::array();
  for (const auto& c : orbit.covers) covers.push_back(Json::array({c.lower, c.upper, c.label}));
  j["covers"] = covers;
  j["bottom"] = orbit.bottom;
  j["top"] = orbit.top;
  return j;
}

inline Json heap_json(const Heap& h) {
  Json j;
  j["size"] = h.size();
  Json elements = Json::array();
  for (std::size_t p = 0; p < h.size(); ++p) {
    Json e;
    e["id"] = p;
    e["label"] = h.label[p];
    e["rank"] = h.rank[p];
    e["canonical_name"] = Json::array({h.canonical_name[p].first, h.canonical_name[p].second});
    elements.push_back(e);
  }
  j["elements"] = elements;
  Json covers = Json::array();
  for (const auto& [p, q] : h.covers) covers.push_back(Json::array({p, q}));
  j["covers"] = covers;
  return j;
}

inline Json lattice_json(const IdealLattice& L) {
  Json j;
  Json ideals = Json::array();
  for (const auto& I : L.ideals) ideals.push_back(I.to_bit_string(L.heap_size));
  j["ideals"] = ideals;
  Json covers = Json::array();
  for (const auto& c : L.covers) covers.push_back(Json::array({c.lower, c.upper, c.element}));
  j["covers"] = covers;
  if (!L.phi_image.empty()) {
    Json phi = Json::array();
    for (const auto& w : L.phi_image) phi.push_back(weight_json(w));
    j["phi"] = phi;
  }
  return j;
}

inline Json bundle_json(const CaseBundle& b) {
  Json j;
  j["case"] = b.spec.name();
  j["cartan"] = cartan_json(b.cd);
  j["lambda"] = weight_json(b.lambda);
  j["constant"] = rational_json(b.constant);
  j["orbit"] = orbit_json(b.orbit);
  j["heap"] = heap_json(b.heap);
  j["lattice"] = lattice_json(b.lattice);
  return j;
}

inline Json distribution_json(const Distribution& mu) {
  Json a = Json::array();
  for (const auto& p : mu.probs()) a.push_back(rational_json(p));
  return a;
}

inline Json lp_vertex_json(const LpVertex& v) {
  Json j;
  j["value"] = rational_json(v.value);
  j["basis"] = v.basis;
  j["distribution"] = distribution_json(v.distribution);
  return j;
}

inline Json case_report_json(const CaseReport& r) {
  Json j;
  j["case"] = r.name;
  j["constant"] = rational_json(r.constant);
  j["heap_size"] = r.heap_size;
  j["ideals"] = r.ideal_count;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json row;
    row["check"] = c.check;
    row["instances"] = c.instances;
    row["failures"] = c.failures;
    if (c.skipped) row["skipped"] = true;
    if (!c.samples.empty()) row["samples"] = c.samples;
    checks.push_back(row);
  }
  j["checks"] = checks;
  Json expectations = Json::array();
  for (const auto& e : r.expectations) {
    Json row;
    row["case"] = r.name;
    row["distribution"] = e.distribution;
    row["expectation"] = rational_json(e.expectation);
    row["constant"] = rational_json(r.constant);
    row["equal"] = e.equal;
    expectations.push_back(row);
  }
  j["expectations"] = expectations;
  if (r.certificate) {
    Json lp;
    lp["min"] = lp_vertex_json(r.certificate->min);
    lp["max"] = lp_vertex_json(r.certificate->max);
    j["lp_certificate"] = lp;
  }
  return j;
}

inline std::string checks_csv_header() { return "case,check,instances,failures,skipped\n"; }

inline std::string case_report_csv(const CaseReport& r) {
  std::ostringstream out;
  for (const auto& c : r.checks)
    out << r.name << ',' << c.check << ',' << c.instances << ',' << c.failures << ','
        << (c.skipped ? "true" : "false") << '\n';
  return out.str();
}

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

/// Hasse diagram of the heap, drawn bottom-up, nodes annotated with labels.
inline std::string heap_dot(const Heap& h, const std::string& name = "heap") {
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (std::size_t p = 0; p < h.size(); ++p)
    out << "  p" << p << " [label=" << dot_quote(std::to_string(h.label[p])) << ", xlabel="
        << dot_quote("(" + std::to_string(h.canonical_name[p].first) + "," +
                     std::to_string(h.canonical_name[p].second) + ")")
        << "];\n";
  for (const auto& [p, q] : h.covers) out << "  p" << p << " -> p" << q << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string orbit_dot(const OrbitPoset& orbit, const std::string& name = "orbit") {
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t u = 0; u < orbit.size(); ++u)
    out << "  w" << u << " [label=" << dot_quote(weight_to_string(orbit.weights[u])) << "];\n";
  for (const auto& c : orbit.covers)
    out << "  w" << c.lower << " -> w" << c.upper << " [label=" << dot_quote(std::to_string(c.label))
        << "];\n";
  out << "}\n";
  return out.str();
}

inline std::string lattice_dot(const IdealLattice& L, const std::string& name = "ideals") {
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t k = 0; k < L.size(); ++k)
    out << "  i" << k << " [label=" << dot_quote(L.ideals[k].to_bit_string(L.heap_size)) << "];\n";
  for (const auto& c : L.covers)
    out << "  i" << c.lower << " -> i" << c.upper << " [label=" << dot_quote(std::to_string(c.element))
        << "];\n";
  out << "}\n";
  return out.str();
}

}  // namespace minuscule::io
