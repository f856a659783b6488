// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "checks.hpp"
#include "lcdforge/campaigns.hpp"

using namespace lcdforge;
using namespace lcdforge::testing;

namespace {

// Pinned tolerances.
constexpr double kP7RuntimeLimitSeconds = 60.0;
constexpr double kP11RuntimeLimitSeconds = 600.0;
constexpr double kPropertyRuntimeLimitSeconds = 120.0;
constexpr std::size_t kPropertyMinCodes = 1000;
constexpr std::size_t kPropertyPerPrime = 200;  // six primes
constexpr std::uint64_t kPropertySeed = 20241019;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Criterion {
  explicit Criterion(int i) : id(i) {}

  int id;
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok: " : "MISMATCH: ") + what);
  }
};

void report(const Criterion& c, std::vector<bool>& results) {
  std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id;
  for (const auto& n : c.notes) std::cout << " | " << n;
  std::cout << std::endl;
  results.push_back(c.pass);
}

std::vector<std::uint64_t> aut_orders(const StageReport& s) {
  std::vector<std::uint64_t> v;
  for (const auto& c : s.codes) v.push_back(c.automorphism_order);
  std::sort(v.begin(), v.end());
  return v;
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

/// A weight enumerator printed with an ellipsis: the terms before "..." are
/// the complete low-weight part, the terms after it the complete high-weight part.
struct PrintedEnumerator {
  std::map<std::size_t, std::uint64_t> leading;
  std::map<std::size_t, std::uint64_t> trailing;
};

std::map<std::size_t, std::uint64_t> parse_terms(const std::string& s) {
  std::map<std::size_t, std::uint64_t> out;
  static const std::regex term(R"((\d*)(y(\^(\d+))?)?)");
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, '+')) {
    if (t.empty()) continue;
    std::smatch m;
    if (!std::regex_match(t, m, term)) throw std::invalid_argument("bad term " + t);
    const std::uint64_t coef = m[1].length() ? std::stoull(m[1]) : 1;
    const std::size_t w = !m[2].matched ? 0 : (m[4].matched ? std::stoul(m[4]) : 1);
    out[w] = coef;
  }
  return out;
}

PrintedEnumerator parse_printed(const std::string& s) {
  const auto pos = s.find("...");
  PrintedEnumerator p;
  p.leading = parse_terms(s.substr(0, pos));
  if (pos != std::string::npos) p.trailing = parse_terms(s.substr(pos + 3));
  return p;
}

/// Compares every printed coefficient, and the zero coefficients inside the
/// printed low and high ranges.
bool matches_printed(const WeightEnumerator& we, const std::string& printed, std::size_t n) {
  const auto p = parse_printed(printed);
  const auto at = [&](std::size_t w) -> std::uint64_t { return w < we.coeffs.size() ? we.coeffs[w] : 0; };
  const std::size_t low_end = p.leading.empty() ? 0 : p.leading.rbegin()->first;
  for (std::size_t w = 0; w <= low_end; ++w) {
    const auto it = p.leading.find(w);
    if (at(w) != (it == p.leading.end() ? 0 : it->second)) return false;
  }
  if (!p.trailing.empty()) {
    for (std::size_t w = p.trailing.begin()->first; w <= n; ++w) {
      const auto it = p.trailing.find(w);
      if (at(w) != (it == p.trailing.end() ? 0 : it->second)) return false;
    }
  }
  return true;
}

struct TableRow {
  std::string label;
  std::string printed;
};

// [34,16,8] classification, rows labelled (j1,j2,i).
const std::vector<TableRow> kN34K16Rows{
    {"(j1,j2,i)=(0,0,1)", "1+153y^8+952y^10+4369y^12+...+935y^24+136y^26+17y^28"},
    {"(j1,j2,i)=(0,0,2)", "1+153y^8+952y^10+4369y^12+...+935y^24+136y^26+17y^28"},
    {"(j1,j2,i)=(0,0,3)", "1+170y^8+918y^10+4318y^12+...+884y^24+102y^26+34y^28"},
    {"(j1,j2,i)=(0,0,5)", "1+153y^8+952y^10+4369y^12+...+935y^24+136y^26+17y^28"},
    {"(j1,j2,i)=(0,0,7)", "1+119y^8+1071y^10+4284y^12+...+901y^24+187y^26"},
    {"(j1,j2,i)=(3,0,0)", "1+187y^8+884y^10+4267y^12+...+833y^24+68y^26+51y^28"},
    {"(j1,j2,i)=(3,0,2)", "1+204y^8+918y^10+4148y^12+...+1054y^24+102y^26"},
    {"(j1,j2,i)=(3,0,3)", "1+153y^8+901y^10+4556y^12+...+1071y^24+153y^26"},
    {"(j1,j2,i)=(3,0,6)", "1+204y^8+918y^10+4148y^12+...+1054y^24+102y^26"},
    {"(j1,j2,i)=(5,0,0)", "1+102y^8+1156y^10+4148y^12+...+816y^24+204y^26"},
};

// [34,17,8] codes, rows labelled (j1,j2,i) and C_pi.
const std::vector<TableRow> kN34K17Rows{
    {"(j1,j2,i)=(0,0,3)|pi=(01)", "1+170y^8+527y^9+918y^10+...+391y^25+102y^26+34y^27+34y^28"},
    {"(j1,j2,i)=(3,0,0)|pi=(10)", "1+187y^8+493y^9+884y^10+...+493y^25+68y^26+51y^28"},
    {"(j1,j2,i)=(3,0,6)|pi=(01)", "1+204y^8+442y^9+918y^10+...+374y^25+102y^26+34y^27+17y^29"},
};

void check_rows(Criterion& c, const StageReport& s, const std::vector<TableRow>& rows) {
  std::set<const ClassifiedCode*> hit;
  for (const auto& r : rows) {
    const auto* cls = s.find_reference_label(r.label);
    if (cls == nullptr) {
      c.require(false, s.name + " " + r.label + " not located");
      continue;
    }
    hit.insert(cls);
    c.require(matches_printed(cls->weight_enumerator, r.printed, s.n) && cls->distance == 8,
              s.name + " " + r.label + " printed coefficients");
  }
  c.require(hit.size() == s.codes.size(), s.name + " every class carries a row label (" +
                                              std::to_string(hit.size()) + "/" + std::to_string(s.codes.size()) +
                                              ")");
}

bool lcd_checks_hold(const StageReport& s) {
  return std::all_of(s.codes.begin(), s.codes.end(), [](const ClassifiedCode& c) { return c.checks.all(); });
}

}  // namespace

int main() {
  std::vector<bool> results;
  std::vector<CampaignReport> all_reports;

  {
    Criterion c{1};
    const auto t0 = Clock::now();
    const auto rep = campaign_p7(0);
    const double secs = seconds_since(t0);
    const auto& s = rep.stage("p7_f0");
    c.require(s.codes.size() == 3, std::to_string(s.codes.size()) + " classes (want 3)");
    c.require(s.n == 28 && s.k == 6, "[" + std::to_string(s.n) + "," + std::to_string(s.k) + "]");
    c.require(std::all_of(s.codes.begin(), s.codes.end(),
                          [](const ClassifiedCode& x) {
                            return x.weight_enumerator.to_string() == "1+21y^12+21y^14+14y^16+7y^18";
                          }),
              "every WE 1+21y^12+21y^14+14y^16+7y^18");
    c.require(aut_orders(s) == std::vector<std::uint64_t>{7, 14, 42}, "|Aut| " + join(aut_orders(s)));
    c.require(lcd_checks_hold(s), "LCD and structure checks");
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << secs << " s < " << kP7RuntimeLimitSeconds << " s";
    c.require(secs < kP7RuntimeLimitSeconds, t.str());
    report(c, results);
    all_reports.push_back(rep);
  }

  {
    Criterion c{2};
    const auto r1 = campaign_p7(1);
    const auto& s1 = r1.stage("p7_f1");
    c.require(s1.codes.size() == 24, "f=1: " + std::to_string(s1.codes.size()) + " inequivalent [29,7] LCD codes (want 24)");
    c.require(s1.n == 29 && s1.k == 7, "f=1 parameters");
    c.require(s1.max_distance && *s1.max_distance < 12,
              "f=1 max d = " + (s1.max_distance ? std::to_string(*s1.max_distance) : "none") + " < 12");
    c.require(lcd_checks_hold(s1), "f=1 LCD and structure checks");
    const auto r2 = campaign_p7(2);
    const auto& s2 = r2.stage("p7_f2");
    c.require(s2.max_distance && *s2.max_distance <= 10,
              "f=2 max d = " + (s2.max_distance ? std::to_string(*s2.max_distance) : "none") + " <= 10");
    c.require(s2.distance_survivors == 0, "f=2 no d >= 12 survivor");
    report(c, results);
    all_reports.push_back(r1);
    all_reports.push_back(r2);
  }

  const auto t11 = Clock::now();
  const auto p11 = campaign_p11();
  const double secs11 = seconds_since(t11);
  all_reports.push_back(p11);
  {
    Criterion c{3};
    const auto& s = p11.stage("p11_n33_k10");
    c.require(s.candidates == 8649, std::to_string(s.candidates) + " tuples");
    c.require(s.codes.size() == 3, std::to_string(s.codes.size()) + " inequivalent [33,10,12] LCD codes (want 3)");
    const std::string we12 = "1+132y^12+187y^14+242y^16+286y^18+110y^20+55y^22+11y^24";
    const std::string we3 = "1+99y^12+275y^14+209y^16+198y^18+187y^20+55y^22";
    std::size_t n12 = 0;
    std::size_t n3 = 0;
    for (const auto& x : s.codes) {
      n12 += x.weight_enumerator.to_string() == we12;
      n3 += x.weight_enumerator.to_string() == we3;
    }
    c.require(n12 >= 2 && n3 >= 1, "WE counts " + std::to_string(n12) + " x first, " + std::to_string(n3) + " x second");
    for (const auto* l : {"C_{0,1,5,0}", "C_{1,1,22,1}", "C_{5,0,10,0}"}) {
      const auto* x = s.find_reference_label(l);
      c.require(x != nullptr, std::string(l) + " located");
    }
    const auto* a = s.find_reference_label("C_{0,1,5,0}");
    const auto* b = s.find_reference_label("C_{1,1,22,1}");
    const auto* d = s.find_reference_label("C_{5,0,10,0}");
    if (a && b && d) {
      c.require(a->weight_enumerator.to_string() == we12 && b->weight_enumerator.to_string() == we12 &&
                    d->weight_enumerator.to_string() == we3,
                "labelled codes carry the stated WEs");
    }
    c.require(lcd_checks_hold(s), "LCD and structure checks");
    c.require(secs11 < kP11RuntimeLimitSeconds, "runtime " + std::to_string(secs11) + " s");
    report(c, results);
  }

  {
    Criterion c{4};
    const auto& s = p11.stage("p11_n35_k11");
    c.require(s.codes.size() == 2, std::to_string(s.codes.size()) + " [35,11,12] LCD codes (want 2)");
    for (const auto* l : {"C_{0,1,5,0}|pi=(00111)", "C_{5,0,10,0}|pi=(11111)"}) {
      const auto* x = s.find_reference_label(l);
      c.require(x != nullptr && x->distance == 12, std::string(l) + " located with d = 12");
    }
    c.require(lcd_checks_hold(s), "LCD and structure checks");
    c.require(p11.stage("p11_n33_k11").distance_survivors == 0, "zero [33,11,12] survivors");
    report(c, results);
  }

  const auto p17 = campaign_p17({}, TauReading::tau_power, true);
  all_reports.push_back(p17);
  {
    Criterion c{5};
    const auto& s = p17.stage("p17_k1");
    c.require(s.fact("surviving_j") == "5,10", "surviving j {" + s.fact("surviving_j") + "}");
    c.require(s.codes.size() == 1, std::to_string(s.codes.size()) + " class");
    if (s.codes.size() == 1) {
      c.require(s.codes[0].weight_enumerator.to_string() == "1+68y^14+68y^16+68y^18+34y^20+17y^24", "[34,8,14] WE");
      c.require(s.codes[0].automorphism_order == 136, "[34,8,14] |Aut| = " + std::to_string(s.codes[0].automorphism_order));
    }
    c.require(s.fact("coset_weights") == "13,13,10", "coset weights " + s.fact("coset_weights"));
    const auto& a = p17.stage("p17_n34_k9");
    const auto& b = p17.stage("p17_n36_k9");
    c.require(a.codes.size() == 1 && b.codes.size() == 1, "one [34,9,13] and one [36,9,14] code");
    if (a.codes.size() == 1) {
      c.require(a.codes[0].weight_enumerator.to_string() ==
                    "1+51y^13+68y^14+68y^15+68y^16+18y^17+68y^18+68y^19+34y^20+51y^21+17y^24",
                "[34,9,13] WE");
      c.require(a.codes[0].automorphism_order == 68, "[34,9,13] |Aut| = " + std::to_string(a.codes[0].automorphism_order));
    }
    if (b.codes.size() == 1) {
      c.require(b.codes[0].weight_enumerator.to_string() ==
                    "1+68y^14+51y^15+68y^16+68y^17+68y^18+18y^19+34y^20+68y^21+51y^23+17y^24",
                "[36,9,14] WE");
      c.require(b.codes[0].automorphism_order == 68,
                "[36,9,14] |Aut| = " + std::to_string(b.codes[0].automorphism_order) + " (want 68)");
    }
    c.require(lcd_checks_hold(s) && lcd_checks_hold(a) && lcd_checks_hold(b), "LCD and structure checks");
    report(c, results);
  }

  {
    Criterion c{6};
    const auto& s = p17.stage("p17_n34_k16");
    c.require(s.codes.size() == 10, std::to_string(s.codes.size()) + " [34,16,8] classes (want 10)");
    c.require(s.distinct_weight_enumerators() == 7, std::to_string(s.distinct_weight_enumerators()) + " distinct WEs (want 7)");
    check_rows(c, s, kN34K16Rows);
    const auto& e = p17.stage("p17_n34_k17");
    c.require(e.codes.size() == 3, std::to_string(e.codes.size()) + " [34,17,8] classes (want 3)");
    check_rows(c, e, kN34K17Rows);
    c.require(lcd_checks_hold(s) && lcd_checks_hold(e), "LCD and structure checks");
    report(c, results);
  }

  {
    Criterion c{7};
    const auto t0 = Clock::now();
    const auto r = structural_properties(kPropertyPerPrime, kPropertySeed);
    const double secs = seconds_since(t0);
    c.require(r.codes >= kPropertyMinCodes, std::to_string(r.codes) + " codes");
    c.require(r.fixed_even_split == 0, "fixed/even split");
    c.require(r.pi_inner == 0, "pi inner products");
    c.require(r.pi_dual == 0, "C_pi duality");
    c.require(r.phi_dual == 0, "C_phi Hermitian duality");
    c.require(r.module_duals == 0, "module-pairing duals");
    c.require(r.dimension == 0, "dimension formula");
    c.require(r.hull_extension == 0, "hull-extension bound");
    c.require(r.lcd_agreement == 0, "is_lcd vs lcd_via_structure");
    c.require(r.roundtrip == 0, "assemble/decompose round trip");
    c.require(secs < kPropertyRuntimeLimitSeconds, "runtime " + std::to_string(secs) + " s");
    report(c, results);
  }

  {
    Criterion c{8};
    for (int p : {3, 5, 7, 11, 13, 17, 19, 23}) c.require(idempotent_structure(p).all(), "p = " + std::to_string(p));
    const auto f7 = factor_xp_minus1(7);
    const std::set<std::string> got7{f7.ideals[1].idempotent.to_string(), f7.ideals[2].idempotent.to_string()};
    c.require(got7 == std::set<std::string>{"1+x+x^2+x^4", "1+x^3+x^5+x^6"}, "p = 7 idempotents verbatim");
    const auto f17 = factor_xp_minus1(17);
    const std::set<std::string> got17{f17.ideals[1].idempotent.to_string(), f17.ideals[2].idempotent.to_string()};
    c.require(got17 == std::set<std::string>{"x+x^2+x^4+x^8+x^9+x^13+x^15+x^16", "x^3+x^5+x^6+x^7+x^10+x^11+x^12+x^14"},
              "p = 17 idempotents verbatim");
    report(c, results);
  }

  {
    Criterion c{9};
    std::size_t total = 0;
    std::size_t bad = 0;
    for (const auto& r : all_reports) {
      for (const auto& s : r.stages) {
        for (const auto& x : s.codes) {
          ++total;
          // Recomputed here rather than read from the stored check flag.
          const auto dual = dual_code(x.code);
          if (!(weight_enumerator(dual, kDualEnumerationCap) == macwilliams_transform(weight_enumerator(x.code)))) ++bad;
        }
      }
    }
    c.require(total > 0 && bad == 0, std::to_string(total - bad) + "/" + std::to_string(total) + " classified codes");
    report(c, results);
  }

  const auto passed = static_cast<std::size_t>(std::count(results.begin(), results.end(), true));
  std::cout << passed << "/" << results.size() << " criteria pass" << std::endl;
  return passed == results.size() ? 0 : 1;
}
