#pragma once

// Code files, JSON reports and campaign artifacts.
//
// Code file: first line "n k", then k lines of n characters from {0,1}.
// Weight enumerators serialize as [[i, A_i], ...] with A_i > 0.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "campaigns.hpp"
#include "cyclotomic.hpp"
#include "decomposition.hpp"
#include "equivalence.hpp"
#include "gf2.hpp"
#include "lcd_theory.hpp"

namespace lcdforge {

using Json = nlohmann::ordered_json;

class CodeFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline BinaryCode read_code(std::istream& in, const std::string& name = "<input>") {
  auto fail = [&](std::size_t line, const std::string& what) {
    throw CodeFormatError(name + ":" + std::to_string(line) + ": " + what);
  };
  std::string line;
  if (!std::getline(in, line)) fail(1, "missing \"n k\" header");
  std::istringstream header(line);
  long long n = -1;
  long long k = -1;
  std::string extra;
  if (!(header >> n >> k) || (header >> extra)) fail(1, "header must be \"n k\"");
  if (n < 0 || k < 0 || k > n) fail(1, "header needs 0 <= k <= n");
  if (static_cast<std::size_t>(n) > kMaxLength) fail(1, "length exceeds " + std::to_string(kMaxLength));
  std::vector<std::string> rows;
  for (long long r = 0; r < k; ++r) {
    if (!std::getline(in, line)) fail(static_cast<std::size_t>(r) + 2, "expected " + std::to_string(k) + " rows");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.size() != static_cast<std::size_t>(n)) {
      fail(static_cast<std::size_t>(r) + 2, "row length " + std::to_string(line.size()) + " differs from n = " +
                                                std::to_string(n));
    }
    if (line.find_first_not_of("01") != std::string::npos) fail(static_cast<std::size_t>(r) + 2, "row has a character outside {0,1}");
    rows.push_back(line);
  }
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) fail(static_cast<std::size_t>(k) + 2, "trailing data after rows");
  }
  BinaryCode c = BinaryCode::from_strings(rows, static_cast<std::size_t>(n));
  if (c.dimension() != static_cast<std::size_t>(k)) fail(1, "rows are linearly dependent (rank " +
                                                              std::to_string(c.dimension()) + ")");
  return c;
}

inline BinaryCode read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CodeFormatError(path.string() + ": cannot open");
  return read_code(in, path.string());
}

inline void write_code(std::ostream& out, const BinaryCode& c) {
  out << c.length() << ' ' << c.dimension() << '\n';
  for (const auto& g : c.generator()) out << g.to_string() << '\n';
}

inline void write_code_file(const std::filesystem::path& path, const BinaryCode& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot write");
  write_code(out, c);
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

inline Json to_json(const WeightEnumerator& we) {
  Json a = Json::array();
  for (std::size_t i = 0; i < we.coeffs.size(); ++i) {
    if (we.coeffs[i] > 0) a.push_back(Json::array({i, we.coeffs[i]}));
  }
  return a;
}

inline WeightEnumerator weight_enumerator_from_json(const Json& j) {
  WeightEnumerator we;
  for (const auto& p : j) {
    const auto i = p.at(0).get<std::size_t>();
    if (we.coeffs.size() <= i) we.coeffs.resize(i + 1, 0);
    we.coeffs[i] = p.at(1).get<std::uint64_t>();
  }
  return we;
}

inline Json generator_json(const BinaryCode& c) {
  Json rows = Json::array();
  for (const auto& g : c.generator()) rows.push_back(g.to_string());
  return rows;
}

inline Json to_json(const ModuleCode& m, const Factorization& fz) {
  Json rows = Json::array();
  for (const auto& r : m.rows) {
    Json row = Json::array();
    for (const auto& a : r) row.push_back(a.to_string());
    rows.push_back(row);
  }
  return Json{{"ideal", m.ideal}, {"factor", fz.ideals.at(m.ideal).factor.to_string()}, {"dimension", m.dimension()},
              {"rows", rows}};
}

inline Json to_json(const Factorization& fz) {
  Json factors = Json::array();
  for (std::size_t j = 0; j < fz.ideals.size(); ++j) {
    const auto& I = fz.ideals[j];
    factors.push_back(Json{{"index", j},
                           {"factor", I.factor.to_string()},
                           {"kind", to_string(I.kind)},
                           {"idempotent", I.idempotent.to_string()},
                           {"partner", I.partner},
                           {"degree", I.degree}});
  }
  return Json{{"p", fz.p}, {"m", fz.m}, {"s", fz.s}, {"t", fz.t}, {"factorization", fz.to_string()}, {"factors", factors}};
}

inline Json to_json(const CodeChecks& c) {
  return Json{{"lcd_triangle", c.lcd_triangle},   {"sigma_automorphism", c.sigma_automorphism},
              {"paired_dimensions", c.paired_dimensions}, {"macwilliams", c.macwilliams},
              {"pi_dual", c.pi_dual},             {"phi_dual", c.phi_dual},
              {"module_duals", c.module_duals},   {"direct_sum", c.direct_sum},
              {"dimension_ledger", c.dimension_ledger}};
}

inline Json to_json(const ClassifiedCode& c) {
  Json j{{"label", c.label},
         {"reference_labels", c.reference_labels},
         {"n", c.code.length()},
         {"k", c.code.dimension()},
         {"d", c.distance ? Json(*c.distance) : Json(nullptr)},
         {"meets_target", c.meets_target},
         {"automorphism_order", c.automorphism_order},
         {"weight_enumerator", to_json(c.weight_enumerator)},
         {"weight_enumerator_text", c.weight_enumerator.to_string('y')},
         {"checks", to_json(c.checks)},
         {"generator", generator_json(c.code)},
         {"members", c.members}};
  return j;
}

inline Json to_json(const StageReport& s) {
  Json codes = Json::array();
  for (const auto& c : s.codes) codes.push_back(to_json(c));
  Json facts = Json::object();
  for (const auto& [k, v] : s.facts) facts[k] = v;
  return Json{{"name", s.name},
              {"primary", s.primary},
              {"p", s.p},
              {"c", s.c},
              {"f", s.f},
              {"n", s.n},
              {"k", s.k},
              {"target_distance", s.target_distance},
              {"require_lcd", s.require_lcd},
              {"candidates", s.candidates},
              {"orbits", s.orbits},
              {"lcd_survivors", s.lcd_survivors},
              {"distance_survivors", s.distance_survivors},
              {"classes", s.codes.size()},
              {"distinct_weight_enumerators", s.distinct_weight_enumerators()},
              {"max_distance", s.max_distance ? Json(*s.max_distance) : Json(nullptr)},
              {"facts", facts},
              {"codes", codes}};
}

inline Json to_json(const CampaignReport& r) {
  Json stages = Json::array();
  for (const auto& s : r.stages) stages.push_back(to_json(s));
  return Json{{"campaign", r.campaign}, {"stages", stages}};
}

/// Distance, weight enumerator, hull and automorphism summary of one code.
inline Json analyze_json(const BinaryCode& c, std::size_t cap = kDefaultEnumerationCap) {
  const auto we = weight_enumerator(c, cap);
  const auto d = we.min_weight();
  Json j{{"n", c.length()},
         {"k", c.dimension()},
         {"d", d ? Json(*d) : Json(nullptr)},
         {"hull_dim", hull(c).dimension()},
         {"is_lcd", is_lcd(c)},
         {"weight_enumerator", to_json(we)},
         {"weight_enumerator_text", we.to_string('y')}};
  try {
    const auto g = automorphism_group(c);
    Json gens = Json::array();
    for (const auto& p : g.generators) gens.push_back(cycle_notation(p));
    j["automorphism_order"] = g.order;
    j["automorphism_generators"] = gens;
  } catch (const SizeBoundError& e) {
    j["automorphism_order"] = nullptr;
    j["automorphism_note"] = e.what();
  }
  return j;
}

inline Json to_json(const LcdVerdict& v) {
  Json levels = Json::array();
  for (const auto& l : v.levels) {
    levels.push_back(Json{{"name", l.name},
                          {"hull_dimension", l.hull_dimension},
                          {"witness", l.witness ? Json(l.witness->to_string()) : Json(nullptr)}});
  }
  return Json{{"is_lcd", v.is_lcd}, {"levels", levels}};
}

inline Json decomposition_json(const BinaryCode& code, const SigmaPermutation& sigma) {
  const auto fz = factor_xp_minus1(sigma.p());
  const auto d = decompose(code, sigma, fz);
  Json modules = Json::array();
  for (const auto& m : d.modules) modules.push_back(to_json(m, fz));
  const auto v = lcd_via_structure(code, sigma, fz);
  return Json{{"sigma", sigma.to_string()},
              {"p", sigma.p()},
              {"c", sigma.c()},
              {"f", sigma.f()},
              {"n", code.length()},
              {"k", code.dimension()},
              {"k_pi", d.k_pi()},
              {"module_dimensions", d.module_dimensions()},
              {"c_pi", generator_json(d.c_pi)},
              {"modules", modules},
              {"is_lcd", is_lcd(code)},
              {"lcd_via_structure", v.is_lcd},
              {"lcd_verdict", to_json(v)},
              {"k1_equals_k2", k1_equals_k2_check(d, fz)}};
}

/// Parses 1-based cycle notation "(1,2,3)(4,5,6)" into a permutation of degree n.
inline Permutation parse_cycles(std::string_view text, std::size_t n) {
  Permutation perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::vector<bool> used(n, false);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++pos;
    std::vector<std::size_t> cyc;
    for (;;) {
      skip();
      std::size_t v = 0;
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') v = v * 10 + static_cast<std::size_t>(text[pos++] - '0');
      if (pos == start) throw std::invalid_argument("cycle notation: expected a point");
      if (v < 1 || v > n) throw std::invalid_argument("cycle notation: point " + std::to_string(v) + " out of range");
      if (used[v - 1]) throw std::invalid_argument("cycle notation: point " + std::to_string(v) + " repeated");
      used[v - 1] = true;
      cyc.push_back(v - 1);
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw std::invalid_argument("cycle notation: expected ',' or ')'");
    }
    for (std::size_t t = 0; t < cyc.size(); ++t) perm[cyc[t]] = cyc[(t + 1) % cyc.size()];
    skip();
  }
  return perm;
}

struct NormalForm {
  SigmaPermutation sigma;
  Permutation relabel;  // coordinate i of the input moves to relabel[i]
};

/// Conjugates a permutation whose nontrivial cycles all have the same odd
/// prime length into the block form (1..p)(p+1..2p)...; fixed points follow
/// in increasing order.
inline NormalForm normal_form(const Permutation& perm) {
  const std::size_t n = perm.size();
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> fixed;
  std::vector<bool> seen(n, false);
  for (auto v : perm) {
    if (v >= n || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
  seen.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cyc;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    if (cyc.size() == 1) {
      fixed.push_back(i);
    } else {
      cycles.push_back(std::move(cyc));
    }
  }
  if (cycles.empty()) throw std::invalid_argument("permutation has no nontrivial cycle");
  const std::size_t p = cycles.front().size();
  for (const auto& c : cycles) {
    if (c.size() != p) throw std::invalid_argument("cycles of different lengths");
  }
  if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("cycle length " + std::to_string(p) + " is not an odd prime");
  NormalForm nf{SigmaPermutation(static_cast<int>(p), static_cast<int>(cycles.size()), static_cast<int>(fixed.size())),
                Permutation(n)};
  std::size_t next = 0;
  for (const auto& c : cycles) {
    for (auto v : c) nf.relabel[v] = next++;
  }
  for (auto v : fixed) nf.relabel[v] = next++;
  return nf;
}

/// Deterministic JSON text: fixed key order, two-space indent, trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot write");
  out << text;
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

/// Campaign names accepted by run_all.
inline const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names{"p7", "p11", "p17"};
  return names;
}

/// The full report for one campaign as run_all produces it.
inline CampaignReport run_campaign(const std::string& name, const CampaignOptions& opt) {
  if (name == "p11") return campaign_p11(opt);
  if (name == "p17") return campaign_p17(opt);
  if (name != "p7") throw std::invalid_argument("unknown campaign " + name);
  CampaignReport rep;
  rep.campaign = "p7";
  std::set<std::string> seen;
  for (int f : {0, 1, 2}) {
    for (auto& s : campaign_p7(f, opt).stages) {
      if (seen.insert(s.name).second) rep.stages.push_back(std::move(s));
    }
  }
  return rep;
}

/// Writes <dir>/<campaign>/report.json and one code file per target-meeting
/// class of each primary stage, <dir>/<campaign>/<stage>_<index>.code.
/// Returns the written code file paths.
inline std::vector<std::filesystem::path> write_campaign(const CampaignReport& rep, const std::filesystem::path& dir) {
  const auto base = dir / rep.campaign;
  std::filesystem::create_directories(base);
  std::vector<std::filesystem::path> files;
  Json j = to_json(rep);
  for (std::size_t si = 0; si < rep.stages.size(); ++si) {
    const auto& s = rep.stages[si];
    for (std::size_t ci = 0; ci < s.codes.size(); ++ci) {
      if (!s.primary || !s.codes[ci].meets_target) continue;
      std::ostringstream name;
      name << s.name << '_' << std::setw(2) << std::setfill('0') << ci << ".code";
      write_code_file(base / name.str(), s.codes[ci].code);
      j["stages"][si]["codes"][ci]["file"] = name.str();
      files.push_back(base / name.str());
    }
  }
  write_text_file(base / "report.json", dump(j));
  return files;
}

/// Runs the named campaigns (all when empty) and writes their artifacts.
inline std::vector<CampaignReport> run_all(const std::filesystem::path& dir, const std::vector<std::string>& names = {},
                                           const CampaignOptions& opt = {}) {
  std::vector<CampaignReport> out;
  for (const auto& n : names.empty() ? campaign_names() : names) {
    out.push_back(run_campaign(n, opt));
    write_campaign(out.back(), dir);
  }
  return out;
}

}  // namespace lcdforge
