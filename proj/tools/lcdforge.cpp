// lcdforge: campaigns, code analysis and decomposition from the command line.
//
// Exit status: 0 ok, 1 computational failure, 2 usage or input error.
// Errors are reported as one JSON line on stderr; campaign progress is
// logged as JSON event lines on stderr.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcdforge/campaigns.hpp"
#include "lcdforge/io.hpp"

namespace lf = lcdforge;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  std::string subcommand;
  bool json = false;
  bool quiet = false;
  unsigned threads = 1;
  bool orbit_reduce = true;
  int p = 0;
  std::optional<int> f;
  std::string out;
  std::string g2_reading = "tau";
  bool independent = true;
  std::vector<std::string> campaigns;
  std::vector<std::string> inputs;
  std::string sigma;
  std::string perm;
  std::size_t cap = lf::kDefaultEnumerationCap;

  std::filesystem::path out_dir() const {
    if (!out.empty()) return out;
    if (const char* env = std::getenv("LCDFORGE_OUT"); env && *env) return env;
    return "data";
  }

  /// Rejects flag combinations before any computation starts.
  void validate() const {
    if (threads == 0) throw UsageError("--threads must be at least 1");
    if (subcommand == "campaign") {
      if (p != 7 && p != 11 && p != 17) throw UsageError("--p must be 7, 11 or 17");
      if (f && p != 7) throw UsageError("--f applies to --p 7 only");
      if (f && (*f < 0 || *f > 6)) throw UsageError("--f must lie in 0..6");
      if (g2_reading != "tau" && g2_reading != "substituted") throw UsageError("--g2-reading must be tau or substituted");
      if (p != 17 && (g2_reading != "tau" || !independent)) {
        throw UsageError("--g2-reading and --skip-independent apply to --p 17 only");
      }
    }
    if (subcommand == "factor" && (p < 3 || p % 2 == 0 || !lf::is_prime(static_cast<std::uint64_t>(p)) ||
                                   p > lf::kMaxModulus)) {
      throw UsageError("--p must be an odd prime at most " + std::to_string(lf::kMaxModulus));
    }
    if (subcommand == "decompose" && sigma.empty() == perm.empty()) {
      throw UsageError("decompose needs exactly one of --sigma and --perm");
    }
    if (subcommand == "analyze" && (cap == 0 || cap > 32)) throw UsageError("--cap must lie in 1..32");
    for (const auto& c : campaigns) {
      if (std::find(lf::campaign_names().begin(), lf::campaign_names().end(), c) == lf::campaign_names().end()) {
        throw UsageError("unknown campaign " + c);
      }
    }
  }
};

void error_line(const std::string& kind, const std::string& message) {
  std::cerr << lf::Json{{"event", "error"}, {"kind", kind}, {"message", message}}.dump() << std::endl;
}

lf::CampaignOptions campaign_options(const CliConfig& cfg) {
  lf::CampaignOptions o;
  o.orbit_reduce = cfg.orbit_reduce;
  o.threads = cfg.threads;
  if (!cfg.quiet) {
    o.on_event = [](const lf::CampaignEvent& e) {
      lf::Json j{{"event", e.event}, {"stage", e.stage}};
      for (const auto& [k, v] : e.fields) j[k] = v;
      std::cerr << j.dump() << std::endl;
    };
  }
  return o;
}

lf::SigmaPermutation parse_sigma(const std::string& text) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("--sigma must be \"p,c,f\"");
    }
  }
  if (v.size() != 3) throw UsageError("--sigma must be \"p,c,f\"");
  try {
    return lf::SigmaPermutation(v[0], v[1], v[2]);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--sigma: ") + e.what());
  }
}

bool checks_hold(const lf::CampaignReport& r) {
  for (const auto& s : r.stages) {
    if (!s.require_lcd) continue;
    for (const auto& c : s.codes) {
      if (!c.checks.all()) return false;
    }
  }
  return true;
}

void print_summary(const lf::CampaignReport& r) {
  for (const auto& s : r.stages) {
    std::cout << s.name << ": [" << s.n << "," << s.k << "] candidates " << s.candidates << ", orbits " << s.orbits
              << ", LCD " << s.lcd_survivors << ", d>=" << s.target_distance << " " << s.distance_survivors
              << ", classes " << s.codes.size() << ", max d "
              << (s.max_distance ? std::to_string(*s.max_distance) : "-") << "\n";
    for (const auto& [k, v] : s.facts) std::cout << "  " << k << " = " << v << "\n";
    for (const auto& c : s.codes) {
      if (s.codes.size() > 12 && !c.meets_target) continue;
      std::cout << "  " << c.label << "  d=" << (c.distance ? std::to_string(*c.distance) : "-")
                << " |Aut|=" << c.automorphism_order << "  " << c.weight_enumerator.to_string('y');
      for (const auto& l : c.reference_labels) std::cout << "  [" << l << "]";
      std::cout << "\n";
    }
  }
}

int cmd_campaign(const CliConfig& cfg) {
  const auto opt = campaign_options(cfg);
  lf::CampaignReport rep;
  if (cfg.p == 7) {
    rep = cfg.f ? lf::campaign_p7(*cfg.f, opt) : lf::run_campaign("p7", opt);
  } else if (cfg.p == 11) {
    rep = lf::campaign_p11(opt);
  } else {
    rep = lf::campaign_p17(opt, cfg.g2_reading == "tau" ? lf::TauReading::tau_power : lf::TauReading::substituted_delta,
                           cfg.independent);
  }
  const auto files = lf::write_campaign(rep, cfg.out_dir());
  if (cfg.json) {
    std::cout << lf::dump(lf::to_json(rep));
  } else {
    print_summary(rep);
    std::cout << "wrote " << files.size() << " code files and " << (cfg.out_dir() / rep.campaign / "report.json").string()
              << "\n";
  }
  if (!checks_hold(rep)) {
    error_line("computation", "a classified code failed a structural check");
    return kFailure;
  }
  return kOk;
}

int cmd_run_all(const CliConfig& cfg) {
  const auto reports = lf::run_all(cfg.out_dir(), cfg.campaigns, campaign_options(cfg));
  bool ok = true;
  lf::Json summary = lf::Json::array();
  for (const auto& r : reports) {
    ok = ok && checks_hold(r);
    std::size_t files = 0;
    for (const auto& s : r.stages) {
      for (const auto& c : s.codes) files += s.primary && c.meets_target ? 1 : 0;
    }
    summary.push_back(lf::Json{{"campaign", r.campaign}, {"code_files", files}});
  }
  if (cfg.json) {
    std::cout << lf::dump(summary);
  } else {
    for (const auto& s : summary) {
      std::cout << s["campaign"].get<std::string>() << ": " << s["code_files"].get<std::size_t>() << " code files\n";
    }
  }
  if (!ok) {
    error_line("computation", "a classified code failed a structural check");
    return kFailure;
  }
  return kOk;
}

int cmd_analyze(const CliConfig& cfg) {
  const auto code = lf::read_code_file(cfg.inputs.at(0));
  const auto j = lf::analyze_json(code, cfg.cap);
  if (cfg.json) {
    std::cout << lf::dump(j);
    return kOk;
  }
  std::cout << "n=" << j["n"] << " k=" << j["k"] << " d=" << (j["d"].is_null() ? "-" : j["d"].dump())
            << " hull_dim=" << j["hull_dim"] << " lcd=" << (j["is_lcd"].get<bool>() ? "yes" : "no") << "\n";
  std::cout << "weight enumerator: " << j["weight_enumerator_text"].get<std::string>() << "\n";
  if (j["automorphism_order"].is_null()) {
    std::cout << "|Aut|: not computed (" << j["automorphism_note"].get<std::string>() << ")\n";
  } else {
    std::cout << "|Aut|=" << j["automorphism_order"] << "\n";
  }
  return kOk;
}

int cmd_factor(const CliConfig& cfg) {
  const auto fz = lf::factor_xp_minus1(cfg.p);
  if (cfg.json) {
    std::cout << lf::dump(lf::to_json(fz));
    return kOk;
  }
  std::cout << fz.to_string() << "\n";
  return kOk;
}

int cmd_decompose(const CliConfig& cfg) {
  auto code = lf::read_code_file(cfg.inputs.at(0));
  lf::Json extra = lf::Json::object();
  lf::SigmaPermutation sigma;
  if (!cfg.perm.empty()) {
    lf::NormalForm nf;
    try {
      nf = lf::normal_form(lf::parse_cycles(cfg.perm, code.length()));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--perm: ") + e.what());
    }
    code = lf::apply_permutation(code, nf.relabel);
    sigma = nf.sigma;
    extra["relabel"] = lf::cycle_notation(nf.relabel);
  } else {
    sigma = parse_sigma(cfg.sigma);
  }
  if (sigma.n() != code.length()) {
    throw UsageError("sigma has degree " + std::to_string(sigma.n()) + " but the code has length " +
                     std::to_string(code.length()));
  }
  auto j = lf::decomposition_json(code, sigma);
  for (auto& [k, v] : extra.items()) j[k] = v;
  if (cfg.json) {
    std::cout << lf::dump(j);
    return kOk;
  }
  std::cout << "sigma=" << j["sigma"].get<std::string>() << " (p=" << sigma.p() << ", c=" << sigma.c()
            << ", f=" << sigma.f() << ")\n";
  if (j.contains("relabel")) std::cout << "relabeling: " << j["relabel"].get<std::string>() << "\n";
  std::cout << "k=" << j["k"] << " k_pi=" << j["k_pi"] << " module dimensions " << j["module_dimensions"].dump() << "\n";
  std::cout << "C_pi:";
  for (const auto& r : j["c_pi"]) std::cout << " " << r.get<std::string>();
  std::cout << "\n";
  for (const auto& m : j["modules"]) {
    if (m["dimension"].get<std::size_t>() == 0) continue;
    std::cout << "M_" << m["ideal"] << " over (" << m["factor"].get<std::string>() << "):";
    for (const auto& r : m["rows"]) {
      std::cout << " (";
      for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? ", " : "") << r[i].get<std::string>();
      std::cout << ")";
    }
    std::cout << "\n";
  }
  std::cout << "lcd=" << (j["is_lcd"].get<bool>() ? "yes" : "no")
            << " via structure=" << (j["lcd_via_structure"].get<bool>() ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_equiv(const CliConfig& cfg) {
  const auto a = lf::read_code_file(cfg.inputs.at(0));
  const auto b = lf::read_code_file(cfg.inputs.at(1));
  const auto cert = lf::are_equivalent(a, b);
  if (cfg.json) {
    lf::Json j{{"equivalent", cert.equivalent}};
    j["permutation"] = cert.equivalent ? lf::Json(lf::cycle_notation(cert.permutation)) : lf::Json(nullptr);
    std::cout << lf::dump(j);
    return kOk;
  }
  std::cout << (cert.equivalent ? "equivalent " + lf::cycle_notation(cert.permutation) : std::string("inequivalent"))
            << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Binary LCD codes with a prime-order automorphism"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", cfg.json, "Emit results as JSON");
  app.add_flag("--quiet", cfg.quiet, "Suppress JSON event lines on stderr");
  app.add_option("--threads", cfg.threads, "Worker threads for candidate evaluation")->capture_default_str();

  auto* campaign = app.add_subcommand("campaign", "Run one classification campaign");
  campaign->add_option("--p", cfg.p, "Prime order: 7, 11 or 17")->required();
  campaign->add_option("--f", cfg.f, "Fixed points for p = 7 (0..6); default runs f = 0, 1, 2");
  campaign->add_flag("!--no-orbit-reduce", cfg.orbit_reduce, "Evaluate every candidate");
  campaign->add_option("--out", cfg.out, "Output directory (default $LCDFORGE_OUT or ./data)");
  campaign->add_option("--g2-reading", cfg.g2_reading, "p = 17 G_2 element: tau or substituted");
  campaign->add_flag("!--skip-independent", cfg.independent, "p = 17: skip the unpaired exponent scan");

  auto* run_all = app.add_subcommand("run-all", "Run campaigns and write every artifact");
  run_all->add_option("--out", cfg.out, "Output directory (default $LCDFORGE_OUT or ./data)");
  run_all->add_option("--campaign", cfg.campaigns, "Restrict to p7, p11 or p17 (repeatable)");
  run_all->add_flag("!--no-orbit-reduce", cfg.orbit_reduce, "Evaluate every candidate");

  auto* analyze = app.add_subcommand("analyze", "Distance, weight enumerator, hull and |Aut| of a code file");
  analyze->add_option("file", cfg.inputs, "Code file")->required()->expected(1);
  analyze->add_option("--cap", cfg.cap, "Largest dimension enumerated exhaustively")->capture_default_str();

  auto* factor = app.add_subcommand("factor", "Factor x^p - 1 over GF(2)");
  factor->add_option("--p", cfg.p, "Odd prime")->required();

  auto* decompose = app.add_subcommand("decompose", "Decompose a code under sigma");
  decompose->add_option("file", cfg.inputs, "Code file")->required()->expected(1);
  decompose->add_option("--sigma", cfg.sigma, "Cycle type \"p,c,f\" in block form");
  decompose->add_option("--perm", cfg.perm, "Automorphism in 1-based cycle notation");

  auto* equiv = app.add_subcommand("equiv", "Permutation equivalence of two code files");
  equiv->add_option("files", cfg.inputs, "Two code files")->required()->expected(2);

  if (argc <= 1) {
    std::cerr << app.help();
    return kUsage;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_line("usage", e.what());
    return kUsage;
  }
  for (const auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  try {
    cfg.validate();
    if (cfg.subcommand == "campaign") return cmd_campaign(cfg);
    if (cfg.subcommand == "run-all") return cmd_run_all(cfg);
    if (cfg.subcommand == "analyze") return cmd_analyze(cfg);
    if (cfg.subcommand == "factor") return cmd_factor(cfg);
    if (cfg.subcommand == "decompose") return cmd_decompose(cfg);
    if (cfg.subcommand == "equiv") return cmd_equiv(cfg);
    throw UsageError("unknown subcommand");
  } catch (const UsageError& e) {
    error_line("usage", e.what());
    return kUsage;
  } catch (const lf::CodeFormatError& e) {
    error_line("input", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    error_line("computation", e.what());
    return kFailure;
  }
}
