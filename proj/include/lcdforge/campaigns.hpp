#pragma once

// Classification campaigns for binary LCD codes with an automorphism of
// order 7 (c = 4), 11 (c = 3) and 17 (c = 2).
//
// Every stage follows one pipeline: enumerate module tuples in label order,
// optionally collapse decomposition-symmetry orbits, assemble, filter on
// LCD and minimum distance, then classify the survivors by weight
// enumerator and exact permutation equivalence. Orbit members are
// equivalent codes, so survivor sets expand exactly from representatives.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "decomposition.hpp"
#include "equivalence.hpp"
#include "gf2.hpp"
#include "lcd_theory.hpp"

namespace lcdforge {

/// Enumeration cap for the dual side of the MacWilliams cross-check.
inline constexpr std::size_t kDualEnumerationCap = 28;

struct CampaignEvent {
  std::string stage;
  std::string event;
  std::vector<std::pair<std::string, double>> fields;
};

struct CampaignOptions {
  bool orbit_reduce = true;
  unsigned threads = 1;
  std::function<void(const CampaignEvent&)> on_event;
};

struct Candidate {
  std::string label;
  ModuleTuple tuple;
};

struct CodeChecks {
  bool lcd_triangle = false;      // is_lcd, lcd_via_structure, module_lcd_check agree on true
  bool sigma_automorphism = false;
  bool paired_dimensions = false;  // k of reciprocal module pairs agree
  bool macwilliams = false;
  bool pi_dual = false;
  bool phi_dual = false;
  bool module_duals = false;
  bool direct_sum = false;
  bool dimension_ledger = false;

  bool all() const {
    return lcd_triangle && sigma_automorphism && paired_dimensions && macwilliams && pi_dual && phi_dual &&
           module_duals && direct_sum && dimension_ledger;
  }
};

struct ClassifiedCode {
  std::string label;                     // least member label
  std::vector<std::string> members;      // candidate labels in this class, orbit-expanded
  std::vector<std::string> reference_labels;  // reference labels equivalent to this class
  ModuleTuple tuple;
  BinaryCode code;
  std::optional<int> distance;
  WeightEnumerator weight_enumerator;
  std::uint64_t automorphism_order = 0;
  bool meets_target = false;
  CodeChecks checks;
};

struct StageReport {
  std::string name;
  int p = 0;
  int c = 0;
  int f = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  int target_distance = 0;
  bool require_lcd = true;
  bool primary = true;
  std::size_t candidates = 0;
  std::size_t orbits = 0;            // evaluated representatives
  std::size_t lcd_survivors = 0;     // candidates, orbit-expanded
  std::size_t distance_survivors = 0;  // candidates, orbit-expanded
  std::vector<std::string> survivor_labels;
  std::vector<ClassifiedCode> codes;  // pairwise inequivalent
  std::optional<int> max_distance;    // over classified codes
  std::vector<std::pair<std::string, std::string>> facts;
  double seconds = 0;

  std::size_t distinct_weight_enumerators() const {
    std::set<std::vector<std::uint64_t>> s;
    for (const auto& c : codes) s.insert(c.weight_enumerator.coeffs);
    return s.size();
  }
  const ClassifiedCode* find_reference_label(std::string_view l) const {
    for (const auto& c : codes) {
      if (std::find(c.reference_labels.begin(), c.reference_labels.end(), l) != c.reference_labels.end()) return &c;
    }
    return nullptr;
  }
  std::string fact(std::string_view key) const {
    for (const auto& [k2, v] : facts) {
      if (k2 == key) return v;
    }
    return "";
  }
};

struct CampaignReport {
  std::string campaign;
  std::vector<StageReport> stages;

  const StageReport& stage(std::string_view name) const {
    for (const auto& s : stages) {
      if (s.name == name) return s;
    }
    throw std::out_of_range("no stage " + std::string(name));
  }
};

struct StageSpec {
  std::string name;
  SigmaPermutation sigma;
  int target_distance = 0;
  bool require_lcd = true;
  bool classify_all = false;  // classify every LCD code, not only those meeting the target
  std::vector<Candidate> reference;  // labelled codes to locate among the classes
  bool primary = true;               // false for diagnostic scans and negative-result bounds
};

namespace detail {

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

inline void emit(const CampaignOptions& o, const std::string& stage, std::string event,
                 std::vector<std::pair<std::string, double>> fields) {
  if (o.on_event) o.on_event(CampaignEvent{stage, std::move(event), std::move(fields)});
}

inline CodeChecks check_code(const BinaryCode& code, const SigmaPermutation& sigma, const Factorization& fz) {
  CodeChecks ch;
  const auto d = decompose(code, sigma, fz);
  ch.lcd_triangle = is_lcd(code) && lcd_via_structure(code, sigma, fz).is_lcd && module_lcd_check(d.modules, fz).ok;
  ch.sigma_automorphism = is_automorphism(code, sigma);
  ch.paired_dimensions = k1_equals_k2_check(d, fz);
  const auto dual = dual_code(code);
  ch.macwilliams = weight_enumerator(dual, kDualEnumerationCap) == macwilliams_transform(weight_enumerator(code));
  const auto t = duality_transfer(code, sigma, fz);
  ch.pi_dual = t.pi_dual;
  ch.phi_dual = t.phi_dual;
  ch.module_duals = t.module_duals;
  ch.direct_sum = t.direct_sum;
  ch.dimension_ledger = t.dimension_ledger;
  return ch;
}

}  // namespace detail

/// Runs one enumerate / reduce / filter / classify pipeline.
inline StageReport run_stage(const StageSpec& spec, const Factorization& fz, const std::vector<Candidate>& cands,
                             const CampaignOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  StageReport rep;
  rep.name = spec.name;
  rep.p = spec.sigma.p();
  rep.c = spec.sigma.c();
  rep.f = spec.sigma.f();
  rep.n = spec.sigma.n();
  rep.target_distance = spec.target_distance;
  rep.require_lcd = spec.require_lcd;
  rep.primary = spec.primary;
  rep.candidates = cands.size();

  std::vector<CandidateOrbit> orbits;
  if (opt.orbit_reduce) {
    std::vector<ModuleTuple> tuples;
    for (const auto& c : cands) tuples.push_back(c.tuple);
    orbits = orbit_reduce(tuples, fz, spec.sigma.c(), spec.sigma.f());
  } else {
    for (std::size_t i = 0; i < cands.size(); ++i) orbits.push_back(CandidateOrbit{i, {i}});
  }
  rep.orbits = orbits.size();
  detail::emit(opt, spec.name, "enumerated",
               {{"candidates", static_cast<double>(cands.size())}, {"orbits", static_cast<double>(orbits.size())}});

  struct Outcome {
    bool lcd = false;
    bool meets = false;
    bool keep = false;
    std::optional<BinaryCode> code;
  };
  std::vector<Outcome> out(orbits.size());
  detail::parallel_for(orbits.size(), opt.threads, [&](std::size_t i) {
    const auto& t = cands[orbits[i].representative].tuple;
    BinaryCode code = assemble_code(t.c_pi, t.modules, fz, spec.sigma);
    Outcome& o = out[i];
    if (i == 0) rep.k = code.dimension();
    o.lcd = !spec.require_lcd || is_lcd(code);
    if (!o.lcd) return;
    o.meets = min_distance_at_least(code, spec.target_distance);
    o.keep = spec.classify_all || o.meets;
    if (o.keep) o.code = std::move(code);
  });

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (out[i].lcd) rep.lcd_survivors += orbits[i].members.size();
    if (out[i].lcd && out[i].meets) {
      rep.distance_survivors += orbits[i].members.size();
      for (auto m : orbits[i].members) rep.survivor_labels.push_back(cands[m].label);
    }
    if (out[i].keep) kept.push_back(i);
  }
  detail::emit(opt, spec.name, "filtered",
               {{"lcd", static_cast<double>(rep.lcd_survivors)},
                {"distance", static_cast<double>(rep.distance_survivors)},
                {"classify", static_cast<double>(kept.size())}});

  for (auto i : kept) {
    const BinaryCode& code = *out[i].code;
    const auto we = weight_enumerator(code);
    const std::string& label = cands[orbits[i].representative].label;
    bool placed = false;
    for (auto& cls : rep.codes) {
      if (cls.weight_enumerator == we && are_equivalent(cls.code, code).equivalent) {
        for (auto m : orbits[i].members) cls.members.push_back(cands[m].label);
        placed = true;
        break;
      }
    }
    if (placed) continue;
    ClassifiedCode cls;
    cls.label = label;
    for (auto m : orbits[i].members) cls.members.push_back(cands[m].label);
    cls.tuple = cands[orbits[i].representative].tuple;
    cls.code = code;
    cls.weight_enumerator = we;
    cls.distance = we.min_weight();
    cls.meets_target = out[i].meets;
    rep.codes.push_back(std::move(cls));
  }
  for (auto& cls : rep.codes) {
    cls.automorphism_order = automorphism_group_order(cls.code);
    cls.checks = detail::check_code(cls.code, spec.sigma, fz);
    if (cls.distance && (!rep.max_distance || *cls.distance > *rep.max_distance)) rep.max_distance = cls.distance;
  }
  for (const auto& r : spec.reference) {
    const BinaryCode code = assemble_code(r.tuple.c_pi, r.tuple.modules, fz, spec.sigma);
    for (auto& cls : rep.codes) {
      if (cls.code.dimension() == code.dimension() && are_equivalent(cls.code, code).equivalent) {
        cls.reference_labels.push_back(r.label);
        break;
      }
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail::emit(opt, spec.name, "classified",
               {{"classes", static_cast<double>(rep.codes.size())}, {"seconds", rep.seconds}});
  return rep;
}

namespace detail {

/// "e2", "xe2", "x^3e2"; "0" for a negative exponent.
inline std::string power_label(int a, const std::string& unit) {
  if (a < 0) return "0";
  if (a == 0) return unit;
  if (a == 1) return "x" + unit;
  return "x^" + std::to_string(a) + unit;
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline BitVector bits_from(std::string_view s) { return BitVector::from_string(s); }

/// Odd-weight vectors of length len in ascending word order.
inline std::vector<BitVector> odd_weight_vectors(std::size_t len) {
  std::vector<BitVector> out;
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << len); ++w) {
    if (std::popcount(w) % 2 == 1) out.push_back(BitVector::from_word(len, w));
  }
  return out;
}

inline std::size_t ideal_of(const Factorization& fz, const RingPoly& e) {
  auto j = fz.ideal_containing(e);
  if (!j || *j == 0) throw std::logic_error("element " + e.to_string() + " lies in no nontrivial ideal");
  return *j;
}

inline Candidate with_c_pi(const Candidate& base, const BinaryCode& c_pi, const std::string& suffix) {
  Candidate c = base;
  c.tuple.c_pi = c_pi;
  c.label = base.label + "|" + suffix;
  return c;
}

inline std::string rows_label(const BinaryCode& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.generator().size(); ++i) s += (i ? ";" : "") + c.generator()[i].to_string();
  return s + ")";
}

}  // namespace detail

// ---------------------------------------------------------------------------
// p = 7, c = 4

struct P7Elements {
  Factorization fz = factor_xp_minus1(7);
  RingPoly e1 = RingPoly::from_exponents(7, {0, 1, 2, 4});
  RingPoly e2 = RingPoly::from_exponents(7, {0, 3, 5, 6});
  std::size_t i1 = detail::ideal_of(fz, e1);
  std::size_t i2 = detail::ideal_of(fz, e2);
};

/// M_1 choice (0: [4,1,3], 1: [4,1,4]) and M_2 exponents (-1 for a zero entry).
inline Candidate p7_candidate(const P7Elements& el, int m1, const std::vector<int>& a, std::size_t f) {
  const int p = 7;
  std::vector<RingPoly> r1(4, el.e1);
  if (m1 == 0) r1[3] = RingPoly::zero(p);
  std::vector<RingPoly> r2;
  std::string l2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    r2.push_back(a[i] < 0 ? RingPoly::zero(p) : el.e2.shifted(a[i]));
    l2 += (i ? "," : "") + detail::power_label(a[i], "e2");
  }
  Candidate c;
  c.label = std::string(m1 == 0 ? "(e1,e1,e1,0)" : "(e1,e1,e1,e1)") + "|(" + l2 + ")";
  std::vector<int> lab{m1};
  lab.insert(lab.end(), a.begin(), a.end());
  c.tuple = normalized(ModuleTuple{lab, BinaryCode(4 + f),
                                   {make_module(el.fz, el.i1, 4, {r1}), make_module(el.fz, el.i2, 4, {r2})}});
  return c;
}

/// The three labelled [28,6,12] codes.
inline std::vector<Candidate> p7_reference(const P7Elements& el, std::size_t f) {
  return {p7_candidate(el, 0, {0, 1, -1, 0}, f), p7_candidate(el, 0, {0, 1, 2, 0}, f),
          p7_candidate(el, 1, {0, 1, 2, 5}, f)};
}

/// M_1 in {(e1,e1,e1,0), (e1,e1,e1,e1)}, M_2 over every projective point of
/// I_2^4 (first nonzero entry e2).
inline std::vector<Candidate> p7_base_candidates(const P7Elements& el) {
  std::vector<Candidate> out;
  for (int m1 = 0; m1 < 2; ++m1) {
    std::vector<int> a(4);
    for (a[0] = -1; a[0] <= 6; ++a[0]) {
      for (a[1] = -1; a[1] <= 6; ++a[1]) {
        for (a[2] = -1; a[2] <= 6; ++a[2]) {
          for (a[3] = -1; a[3] <= 6; ++a[3]) {
            const auto first = std::find_if(a.begin(), a.end(), [](int v) { return v >= 0; });
            if (first == a.end() || *first != 0) continue;
            out.push_back(p7_candidate(el, m1, a, 0));
          }
        }
      }
    }
  }
  return out;
}

/// The four C_pi generator matrices for f = 2 (cycle part | fixed part).
inline std::vector<std::vector<std::string>> p7_f2_c_pi_matrices() {
  return {{"110000", "101000"}, {"110000", "101110"}, {"110000", "101011"}, {"110000", "101111"}};
}

inline CampaignReport campaign_p7(int f, const CampaignOptions& opt = {}) {
  if (f < 0 || f > 6) throw std::invalid_argument("p = 7 campaign covers 0 <= f <= 6");
  const P7Elements el;
  CampaignReport rep;
  rep.campaign = "p7";
  {
    StageSpec spec{"p7_f0", SigmaPermutation(7, 4, 0), 12, true, false, p7_reference(el, 0)};
    const auto cands = p7_base_candidates(el);
    auto s0 = run_stage(spec, el.fz, cands, opt);
    // M_1 = [4,1,4] with every M_2 entry nonzero.
    std::set<std::string> m414;
    {
      const std::set<std::string> surv(s0.survivor_labels.begin(), s0.survivor_labels.end());
      for (const auto& c : cands) {
        const auto& l = c.tuple.label;
        if (l[0] == 1 && std::all_of(l.begin() + 1, l.end(), [](int v) { return v >= 0; }) && surv.count(c.label)) {
          m414.insert(c.label);
        }
      }
    }
    std::string m414_classes;
    for (const auto& cls : s0.codes) {
      if (std::any_of(cls.members.begin(), cls.members.end(), [&](const auto& m) { return m414.count(m) > 0; })) {
        m414_classes += (m414_classes.empty() ? "" : ";") + cls.label;
      }
    }
    s0.facts.emplace_back("m1_414_nonzero_survivors", std::to_string(m414.size()));
    s0.facts.emplace_back("m1_414_nonzero_classes", m414_classes);
    rep.stages.push_back(std::move(s0));
  }
  if (f == 0) return rep;
  const auto bases = p7_reference(el, static_cast<std::size_t>(f));
  const std::size_t len = 4 + static_cast<std::size_t>(f);
  if (f == 1) {
    // C_pi ranges over the LCD [5,1,3] and [5,1,5] codes; the second stage
    // adds weight-one generators so the negative result covers every LCD C_pi.
    std::vector<Candidate> cands;
    std::vector<Candidate> all;
    for (const auto& b : bases) {
      for (const auto& u : detail::odd_weight_vectors(len)) {
        auto c = detail::with_c_pi(b, BinaryCode(len, {u}), "pi=(" + u.to_string() + ")");
        if (u.weight() >= 3) cands.push_back(c);
        all.push_back(std::move(c));
      }
    }
    rep.stages.push_back(run_stage(StageSpec{"p7_f1", SigmaPermutation(7, 4, 1), 12, true, true, {}}, el.fz, cands, opt));
    rep.stages.push_back(
        run_stage(StageSpec{"p7_f1_all_odd", SigmaPermutation(7, 4, 1), 12, true, true, {}, false}, el.fz, all, opt));
    return rep;
  }
  if (f == 2) {
    std::vector<BinaryCode> pis;
    for (const auto& m : p7_f2_c_pi_matrices()) {
      Permutation perm{0, 1, 2, 3, 4, 5};
      do {
        std::vector<BitVector> rows;
        for (const auto& r : m) rows.push_back(apply_permutation(detail::bits_from(r), perm));
        BinaryCode pi(len, rows);
        if (std::find(pis.begin(), pis.end(), pi) == pis.end()) pis.push_back(pi);
      } while (std::next_permutation(perm.begin(), perm.begin() + 4));
    }
    std::vector<Candidate> cands;
    for (const auto& b : bases) {
      for (const auto& pi : pis) cands.push_back(detail::with_c_pi(b, pi, "pi=" + detail::rows_label(pi)));
    }
    StageSpec spec{"p7_f2", SigmaPermutation(7, 4, 2), 12, true, true, {}};
    rep.stages.push_back(run_stage(spec, el.fz, cands, opt));
  }
  // Any C_pi with a word of weight <= 3 gives a supercode of E (+) <lift(u)>;
  // the distance of that code bounds the distance of C.
  std::vector<Candidate> cands;
  for (const auto& b : bases) {
    for (std::uint64_t w = 1; w < (std::uint64_t{1} << len); ++w) {
      if (std::popcount(w) > 3 || (w & 0xF) == 0) continue;
      const auto u = BitVector::from_word(len, w);
      cands.push_back(detail::with_c_pi(b, BinaryCode(len, {u}), "pi=(" + u.to_string() + ")"));
    }
  }
  StageSpec spec{"p7_f" + std::to_string(f) + "_light_c_pi", SigmaPermutation(7, 4, f), 12, false, true, {}, false};
  rep.stages.push_back(run_stage(spec, el.fz, cands, opt));
  return rep;
}

// ---------------------------------------------------------------------------
// p = 11, c = 3

struct P11Elements {
  Factorization fz = factor_xp_minus1(11);
  RingPoly e = RingPoly::from_exponents(11, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  RingPoly alpha = RingPoly::from_exponents(11, {9, 2});
  RingPoly beta = RingPoly::from_exponents(11, {10, 8, 7, 6, 2, 0});
  RingPoly gamma = e.shifted(1);
  std::size_t ideal = detail::ideal_of(fz, e);
  std::uint64_t alpha_order = ideal_element_order(alpha, e);
  std::uint64_t beta_order = ideal_element_order(beta, e);

  RingPoly element(int i, int j) const {
    return fz.ideals[ideal].power(alpha, static_cast<std::uint64_t>(i)) *
           fz.ideals[ideal].power(beta, static_cast<std::uint64_t>(j));
  }
};

inline Candidate p11_candidate(const P11Elements& el, int i1, int j1, int i2, int j2, std::size_t f) {
  Candidate c;
  c.label = "C_{" + detail::join_ints({i1, j1, i2, j2}) + "}";
  c.tuple = normalized(ModuleTuple{
      {i1, j1, i2, j2},
      BinaryCode(3 + f),
      {make_module(el.fz, el.ideal, 3, {{el.e, el.element(i1, j1), el.element(i2, j2)}})}});
  return c;
}

inline std::vector<Candidate> p11_reference(const P11Elements& el, std::size_t f) {
  return {p11_candidate(el, 0, 1, 5, 0, f), p11_candidate(el, 1, 1, 22, 1, f), p11_candidate(el, 5, 0, 10, 0, f)};
}

inline CampaignReport campaign_p11(const CampaignOptions& opt = {}) {
  const P11Elements el;
  CampaignReport rep;
  rep.campaign = "p11";
  std::vector<Candidate> cands;
  for (int i1 = 0; i1 < static_cast<int>(el.alpha_order); ++i1) {
    for (int j1 = 0; j1 < static_cast<int>(el.beta_order); ++j1) {
      for (int i2 = 0; i2 < static_cast<int>(el.alpha_order); ++i2) {
        for (int j2 = 0; j2 < static_cast<int>(el.beta_order); ++j2) cands.push_back(p11_candidate(el, i1, j1, i2, j2, 0));
      }
    }
  }
  StageSpec base{"p11_n33_k10", SigmaPermutation(11, 3, 0), 12, true, false, p11_reference(el, 0)};
  auto s1 = run_stage(base, el.fz, cands, opt);
  {
    std::size_t violating = 0;
    std::set<std::string> surv(s1.survivor_labels.begin(), s1.survivor_labels.end());
    std::size_t excluded_survivors = 0;
    for (const auto& c : cands) {
      const auto& l = c.tuple.label;
      const bool constraint =
          !(el.e + el.fz.ideals[el.ideal].power(el.alpha, static_cast<std::uint64_t>(l[0])) +
            el.fz.ideals[el.ideal].power(el.alpha, static_cast<std::uint64_t>(l[2])))
               .is_zero();
      if (!constraint) ++violating;
      if (!constraint && surv.count(c.label)) ++excluded_survivors;
    }
    s1.facts.emplace_back("alpha_order", std::to_string(el.alpha_order));
    s1.facts.emplace_back("beta_order", std::to_string(el.beta_order));
    s1.facts.emplace_back("gamma_order", std::to_string(ideal_element_order(el.gamma, el.e)));
    s1.facts.emplace_back("constraint_violating_candidates", std::to_string(violating));
    s1.facts.emplace_back("constraint_violating_survivors", std::to_string(excluded_survivors));
    std::map<std::string, std::vector<int>> exps;
    for (const auto& c : cands) exps.emplace(c.label, c.tuple.label);
    std::size_t low = 0;
    for (const auto& cls : s1.codes) {
      const bool any = std::any_of(cls.members.begin(), cls.members.end(), [&](const std::string& m) {
        const auto& l = exps.at(m);
        return l[1] <= 1 && l[3] <= 1;
      });
      if (any) ++low;
    }
    // Classes reachable with beta exponents in {0, 1}; the rest need both
    // exponents of a module row to be 1 and 2.
    s1.facts.emplace_back("classes_beta_exponents_le_1", std::to_string(low));
    s1.facts.emplace_back("classes_needing_beta_exponent_2", std::to_string(s1.codes.size() - low));
  }
  // k_pi = 1 with no fixed points, over every survivor.
  std::vector<Candidate> ext33;
  {
    std::set<std::string> surv(s1.survivor_labels.begin(), s1.survivor_labels.end());
    for (const auto& c : cands) {
      if (!surv.count(c.label)) continue;
      for (const auto& u : detail::odd_weight_vectors(3)) {
        ext33.push_back(detail::with_c_pi(c, BinaryCode(3, {u}), "pi=(" + u.to_string() + ")"));
      }
    }
  }
  rep.stages.push_back(std::move(s1));
  rep.stages.push_back(run_stage(StageSpec{"p11_n33_k11", SigmaPermutation(11, 3, 0), 12, true, false, {}}, el.fz,
                                 ext33, opt));
  std::vector<Candidate> ext35;
  for (const auto& b : p11_reference(el, 2)) {
    for (const auto& u : detail::odd_weight_vectors(5)) {
      ext35.push_back(detail::with_c_pi(b, BinaryCode(5, {u}), "pi=(" + u.to_string() + ")"));
    }
  }
  std::vector<Candidate> ref35;
  {
    const auto r = p11_reference(el, 2);
    ref35.push_back(detail::with_c_pi(r[0], BinaryCode(5, {detail::bits_from("00111")}), "pi=(00111)"));
    ref35.push_back(detail::with_c_pi(r[2], BinaryCode(5, {detail::bits_from("11111")}), "pi=(11111)"));
  }
  rep.stages.push_back(run_stage(StageSpec{"p11_n35_k11", SigmaPermutation(11, 3, 2), 12, true, false, ref35}, el.fz,
                                 ext35, opt));
  return rep;
}

// ---------------------------------------------------------------------------
// p = 17, c = 2

enum class TauReading { tau_power, substituted_delta };

struct P17Elements {
  Factorization fz = factor_xp_minus1(17);
  RingPoly e1 = RingPoly::from_exponents(17, {1, 2, 4, 8, 9, 13, 15, 16});
  RingPoly e2 = RingPoly::from_exponents(17, {3, 5, 6, 7, 10, 11, 12, 14});
  RingPoly delta = RingPoly::from_exponents(17, {3, 7, 8, 9, 10, 14});
  RingPoly tau = RingPoly::from_exponents(17, {1, 3, 8, 9, 14, 16});
  std::size_t i1 = detail::ideal_of(fz, e1);
  std::size_t i2 = detail::ideal_of(fz, e2);
  std::uint64_t delta_order = ideal_element_order(delta, e1);
  std::uint64_t tau_order = ideal_element_order(tau, e2);

  RingPoly delta_power(int j) const { return fz.ideals[i1].power(delta, static_cast<std::uint64_t>(j)); }
  /// The G_2 element indexed by j under the chosen reading.
  RingPoly g2_power(int j, TauReading r) const {
    if (r == TauReading::tau_power) return fz.ideals[i2].power(tau, static_cast<std::uint64_t>(j));
    return delta_power(j).substitute(3);
  }
};

inline Candidate p17_k1_candidate(const P17Elements& el, int i, int j, std::size_t f) {
  Candidate c;
  c.label = "(i,j)=(" + detail::join_ints({i, j}) + ")";
  c.tuple = normalized(ModuleTuple{
      {i, j}, BinaryCode(2 + f), {make_module(el.fz, el.i1, 2, {{el.e1, el.delta_power(j).shifted(i)}})}});
  return c;
}

inline Candidate p17_k11_candidate(const P17Elements& el, int j1, int j2, int i, TauReading r) {
  Candidate c;
  c.label = "(j1,j2,i)=(" + detail::join_ints({j1, j2, i}) + ")";
  c.tuple = normalized(ModuleTuple{{j1, j2, i},
                                   BinaryCode(2),
                                   {make_module(el.fz, el.i1, 2, {{el.e1, el.delta_power(j1)}}),
                                    make_module(el.fz, el.i2, 2, {{el.e2, el.g2_power(j2, r).shifted(i)}})}});
  return c;
}

/// M1 = <(e1, delta^j)>, M2 = <(e2, x^i g2(j))>: the G_2 exponent follows
/// the G_1 exponent, so the pair is fixed by the norm condition.
inline Candidate p17_paired_candidate(const P17Elements& el, int j, int i, TauReading r) {
  Candidate c = p17_k11_candidate(el, j, j, i, r);
  c.label = "(j,i)=(" + detail::join_ints({j, i}) + ")";
  return c;
}

/// Table rows (j1, j2, i) of the [34,16,8] classification.
inline std::vector<std::vector<int>> p17_table_labels() {
  return {{0, 0, 1}, {0, 0, 2}, {0, 0, 3}, {0, 0, 5}, {0, 0, 7}, {3, 0, 0}, {3, 0, 2}, {3, 0, 3}, {3, 0, 6}, {5, 0, 0}};
}

/// A table row as a paired candidate. j1 = 0 would make M1 Hermitian
/// self-orthogonal, so row exponent 0 stands for j = 1; j2 is relative to j1.
inline Candidate p17_table_candidate(const P17Elements& el, const std::vector<int>& row, TauReading r) {
  Candidate c = p17_paired_candidate(el, row[0] == 0 ? 1 : row[0], row[2], r);
  c.label = "(j1,j2,i)=(" + detail::join_ints(row) + ")";
  return c;
}

inline std::vector<Candidate> p17_paired_candidates(const P17Elements& el, TauReading r) {
  std::vector<Candidate> out;
  for (int j = 0; j < static_cast<int>(el.delta_order); ++j) {
    for (int i = 0; i < 17; ++i) out.push_back(p17_paired_candidate(el, j, i, r));
  }
  return out;
}

inline std::vector<Candidate> p17_k11_candidates(const P17Elements& el, TauReading r) {
  std::vector<Candidate> out;
  for (int j1 = 0; j1 < static_cast<int>(el.delta_order); ++j1) {
    for (int j2 = 0; j2 < static_cast<int>(el.tau_order); ++j2) {
      for (int i = 0; i < 17; ++i) out.push_back(p17_k11_candidate(el, j1, j2, i, r));
    }
  }
  return out;
}

/// independent = true adds the scan with unrelated G_1 and G_2 exponents.
inline CampaignReport campaign_p17(const CampaignOptions& opt = {}, TauReading reading = TauReading::tau_power,
                                   bool independent = true) {
  const P17Elements el;
  CampaignReport rep;
  rep.campaign = "p17";

  std::vector<Candidate> k1;
  for (int i = 0; i < 17; ++i) {
    for (int j = 0; j < static_cast<int>(el.delta_order); ++j) k1.push_back(p17_k1_candidate(el, i, j, 0));
  }
  auto s1 = run_stage(StageSpec{"p17_k1", SigmaPermutation(17, 2, 0), 13, true, false, {p17_k1_candidate(el, 0, 5, 0)}},
                      el.fz, k1, opt);
  {
    std::set<int> js;
    for (const auto& c : k1) {
      if (std::find(s1.survivor_labels.begin(), s1.survivor_labels.end(), c.label) != s1.survivor_labels.end()) {
        js.insert(c.tuple.label[1]);
      }
    }
    std::string s;
    for (int j : js) s += (s.empty() ? "" : ",") + std::to_string(j);
    s1.facts.emplace_back("surviving_j", s);
    s1.facts.emplace_back("delta_order", std::to_string(el.delta_order));
    s1.facts.emplace_back("tau_order", std::to_string(el.tau_order));
    const auto base = p17_k1_candidate(el, 0, 5, 0);
    const BinaryCode e = assemble_code(base.tuple.c_pi, base.tuple.modules, el.fz, SigmaPermutation(17, 2, 0));
    auto ones = [](std::size_t from, std::size_t to) {
      BitVector v(34);
      for (std::size_t i = from; i < to; ++i) v.set(i);
      return v;
    };
    s1.facts.emplace_back("coset_weights", std::to_string(coset_min_weight(e, ones(0, 17))) + "," +
                                               std::to_string(coset_min_weight(e, ones(17, 34))) + "," +
                                               std::to_string(coset_min_weight(e, ones(0, 34))));
  }
  rep.stages.push_back(std::move(s1));

  std::vector<Candidate> n34;
  for (const auto& u : detail::odd_weight_vectors(2)) {
    n34.push_back(detail::with_c_pi(p17_k1_candidate(el, 0, 5, 0), BinaryCode(2, {u}), "pi=(" + u.to_string() + ")"));
  }
  rep.stages.push_back(
      run_stage(StageSpec{"p17_n34_k9", SigmaPermutation(17, 2, 0), 13, true, false, {}}, el.fz, n34, opt));
  std::vector<Candidate> n36;
  for (const auto& u : detail::odd_weight_vectors(4)) {
    n36.push_back(detail::with_c_pi(p17_k1_candidate(el, 0, 5, 2), BinaryCode(4, {u}), "pi=(" + u.to_string() + ")"));
  }
  rep.stages.push_back(
      run_stage(StageSpec{"p17_n36_k9", SigmaPermutation(17, 2, 2), 14, true, false, {}}, el.fz, n36, opt));

  std::vector<Candidate> table;
  for (const auto& l : p17_table_labels()) table.push_back(p17_table_candidate(el, l, reading));
  rep.stages.push_back(run_stage(StageSpec{"p17_n34_k16", SigmaPermutation(17, 2, 0), 8, true, false, table}, el.fz,
                                 p17_paired_candidates(el, reading), opt));
  if (independent) {
    rep.stages.push_back(run_stage(StageSpec{"p17_n34_k16_independent", SigmaPermutation(17, 2, 0), 8, true, false,
                                             table, false},
                                   el.fz, p17_k11_candidates(el, reading), opt));
  }

  std::vector<Candidate> ext;
  for (const auto& b : table) {
    for (const auto& u : detail::odd_weight_vectors(2)) {
      ext.push_back(detail::with_c_pi(b, BinaryCode(2, {u}), "pi=(" + u.to_string() + ")"));
    }
  }
  std::vector<Candidate> ref17{
      detail::with_c_pi(table[2], BinaryCode(2, {detail::bits_from("01")}), "pi=(01)"),
      detail::with_c_pi(table[5], BinaryCode(2, {detail::bits_from("10")}), "pi=(10)"),
      detail::with_c_pi(table[8], BinaryCode(2, {detail::bits_from("01")}), "pi=(01)")};
  rep.stages.push_back(
      run_stage(StageSpec{"p17_n34_k17", SigmaPermutation(17, 2, 0), 8, true, false, ref17}, el.fz, ext, opt));
  return rep;
}

}  // namespace lcdforge
