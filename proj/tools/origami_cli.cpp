// origami: command-line front end for the origami engine.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "origami/origami_lib.hpp"

namespace {

using namespace origami;

enum Exit { kOk = 0, kVerificationFailed = 1, kInputError = 2, kBudget = 3 };

std::size_t to_size(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw InputError(std::string("bad ") + what + ": " + s);
  }
}

Origami family_member(const std::vector<std::string>& f) {
  if (f.empty()) throw InputError("--family needs a name");
  const std::string& name = f[0];
  auto arg = [&](std::size_t k) {
    if (k >= f.size()) throw InputError("--family " + name + ": missing argument");
    return to_size(f[k], "family argument");
  };
  std::size_t expected = name == "Cr2" ? 2 : 3;
  if (f.size() != expected) throw InputError("--family " + name + ": wrong number of arguments");
  if (name == "L") return L(arg(1), arg(2));
  if (name == "Cr2") return Cr2(arg(1));
  if (name == "Ogn" || name == "O") return Ogn(arg(1), arg(2));
  throw InputError("unknown family " + name + " (L, Cr2, Ogn)");
}

struct OrigamiInput {
  std::string spec;
  std::vector<std::string> family;

  void attach(CLI::App* cmd) {
    cmd->add_option("origami", spec, "cycle notation \"(..)|(..) [n=k]\" or {\"n\",\"r\",\"u\"} JSON");
    cmd->add_option("--family", family, "L a b | Cr2 j | Ogn g n")->expected(2, 3);
  }

  Origami get() const {
    if (!family.empty() && !spec.empty()) throw InputError("give either an origami or --family, not both");
    if (!family.empty()) return family_member(family);
    if (spec.empty()) throw InputError("no origami given");
    return parse_origami_spec(spec);
  }
};

std::vector<std::uint64_t> parse_moduli(const std::vector<std::string>& raw) {
  std::vector<std::uint64_t> out;
  for (const auto& s : raw) {
    std::size_t m = to_size(s, "modulus");
    if (m == 0) throw InputError("modulus must be positive");
    out.push_back(m);
  }
  return out;
}

int print_theorem(const TheoremReport& rep, bool as_json) {
  if (as_json) {
    std::cout << json(rep).dump(2) << '\n';
  } else {
    for (const auto& c : rep.checks) std::cout << (c.ok ? "PASS " : "FAIL ") << c.subject << ": " << c.detail << '\n';
    std::cout << "theorem " << rep.theorem << ": " << (rep.ok() ? "verified" : "VIOLATED") << '\n';
  }
  return rep.ok() ? kOk : kVerificationFailed;
}

std::pair<std::size_t, std::size_t> parse_gn(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw InputError("expected g,n but got " + s);
  return {to_size(s.substr(0, comma), "g"), to_size(s.substr(comma + 1), "n")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Veech groups, levels and congruence deficiency of origamis"};
  app.require_subcommand(1);
  std::size_t budget = kDefaultPointBudget;
  app.add_option("--point-budget", budget, "largest CRT domain allowed for a modulus")->capture_default_str();

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "full pipeline on one origami");
  OrigamiInput analyze_in;
  analyze_in.attach(analyze_cmd);
  std::vector<std::string> analyze_mods;
  bool analyze_certs = false, analyze_json = false, analyze_csv = false;
  analyze_cmd->add_option("--mod", analyze_mods, "extra moduli m for e_m, f_m");
  analyze_cmd->add_flag("--certificates", analyze_certs, "attach verified certificates");
  auto* json_flag = analyze_cmd->add_flag("--json", analyze_json, "JSON report");
  analyze_cmd->add_flag("--csv", analyze_csv, "one CSV row with header")->excludes(json_flag);

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "dump the SL(2,Z)-orbit as JSON");
  OrigamiInput orbit_in;
  orbit_in.attach(orbit_cmd);

  // table1
  auto* table_cmd = app.add_subcommand("table1", "orbit invariants of the stratum (2) as CSV");
  std::size_t max_squares = 11, jobs = 1;
  table_cmd->add_option("--max-squares", max_squares)->capture_default_str();
  table_cmd->add_option("--jobs", jobs, "rows computed in parallel")->capture_default_str();

  // theorems
  auto* thm_cmd = app.add_subcommand("theorems", "check the deficiency theorems on instances");
  int thm = 0;
  std::size_t j_min = 3, j_max = 11, m_max = 60, enum_squares = 5;
  std::vector<std::string> gn_raw;
  bool thm_json = false;
  thm_cmd->add_option("--thm", thm, "1, 2, 3 or 5")->required()->check(CLI::IsMember({1, 2, 3, 5}));
  thm_cmd->add_option("--j-min", j_min)->capture_default_str();
  thm_cmd->add_option("--j-max", j_max)->capture_default_str();
  thm_cmd->add_option("--m-max", m_max, "moduli checked for theorem 1")->capture_default_str();
  thm_cmd->add_option("--squares", enum_squares, "theorem 1: all reduced origamis up to this size")
      ->capture_default_str();
  thm_cmd->add_option("--gn", gn_raw, "theorem 5: g,n pairs");
  thm_cmd->add_option("--jobs", jobs)->capture_default_str();
  thm_cmd->add_flag("--json", thm_json);

  // families
  auto* fam_cmd = app.add_subcommand("families", "print family members or enumerate origamis");
  std::vector<std::string> fam_args;
  std::vector<int> stratum_filter;
  fam_cmd->add_option("args", fam_args, "L a b | Cr2 j | Ogn g n | enumerate n")->required();
  fam_cmd->add_option("--stratum", stratum_filter, "enumerate: zero orders, e.g. --stratum 2");

  // deficiency-scan
  auto* scan_cmd = app.add_subcommand("deficiency-scan", "e_m and f_m for m = 1..m_max as CSV");
  OrigamiInput scan_in;
  scan_in.attach(scan_cmd);
  std::size_t scan_max = 60;
  scan_cmd->add_option("--m-max", scan_max)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze_cmd) {
      AnalyzeOptions opt;
      opt.moduli = parse_moduli(analyze_mods);
      opt.certificates = analyze_certs;
      opt.point_budget = budget;
      AnalysisReport r = analyze(analyze_in.get(), opt);
      bool certs_ok = std::all_of(r.certificates.begin(), r.certificates.end(),
                                  [](const Certificate& c) { return c.verdict; });
      if (analyze_json) {
        std::cout << json(r).dump(2) << '\n';
      } else if (analyze_csv) {
        std::cout << analysis_csv_header() << '\n' << analysis_csv_row(r) << '\n';
      } else {
        std::cout << "squares " << r.n << "  genus " << r.genus << "  stratum " << stratum_to_string(r.stratum) << '\n'
                  << "d " << r.d << "  level " << r.level << "  cusps " << r.s << "  pair (" << r.width_inf << ','
                  << r.width_zero << ")  curve genus " << r.curve_genus << '\n'
                  << "e " << r.e << "  f " << r.f << "  congruence " << (r.congruence ? "yes" : "no")
                  << "  totally non-congruence " << (r.totally_noncongruence ? "yes" : "no") << '\n';
        for (const auto& m : r.moduli) std::cout << "m " << m.m << "  e " << m.e << "  f " << m.f << '\n';
        for (const auto& c : r.certificates)
          std::cout << to_string(c.kind) << ": " << (c.verdict ? "verified" : "FAILED") << '\n';
      }
      return certs_ok ? kOk : kVerificationFailed;
    }

    if (*orbit_cmd) {
      OrbitTable t = orbit(orbit_in.get());
      json points = json::array(), paths = json::array();
      for (std::size_t i = 0; i < t.d(); ++i) {
        points.push_back(to_string(t.encodings[i]));
        paths.push_back(word_to_string(t.path_word[i]));
      }
      json out = {{"d", t.d()},
                  {"points", points},
                  {"paths", paths},
                  {"sigma_T", to_cycle_string(t.sigma_T)},
                  {"sigma_Tprime", to_cycle_string(t.sigma_Tp)}};
      std::cout << out.dump(2) << '\n';
      return kOk;
    }

    if (*table_cmd) {
      std::cout << table1_csv(table1(max_squares, jobs, budget));
      return kOk;
    }

    if (*thm_cmd) {
      switch (thm) {
        case 1: {
          std::vector<Origami> items;
          for (std::size_t n = 1; n <= enum_squares; ++n)
            for (auto& o : enumerate_origamis(n)) items.push_back(std::move(o));
          for (const auto& spec : table1_specs(11)) {
            Origami o = L(spec.a, spec.b);
            if (cusp_data(orbit(o)).level <= 105) items.push_back(o);
          }
          return print_theorem(check_theorem1(items, m_max, budget), thm_json);
        }
        case 2: {
          std::vector<std::pair<std::string, Origami>> items;
          for (const auto& spec : table1_specs(j_max, j_min))
            items.emplace_back("L(" + std::to_string(spec.a) + "," + std::to_string(spec.b) + ")", L(spec.a, spec.b));
          return print_theorem(check_theorem2(items, budget), thm_json);
        }
        case 3: return print_theorem(check_theorem3(j_min, j_max, jobs, budget), thm_json);
        case 5: {
          std::vector<std::pair<std::size_t, std::size_t>> params;
          for (const auto& s : gn_raw) params.push_back(parse_gn(s));
          if (params.empty()) params = {{3, 7}, {3, 11}, {3, 13}, {4, 11}, {4, 13}};
          return print_theorem(check_theorem5(params, budget), thm_json);
        }
      }
    }

    if (*fam_cmd) {
      if (fam_args[0] == "enumerate") {
        if (fam_args.size() != 2) throw InputError("families enumerate n");
        std::optional<std::vector<int>> filter;
        if (!stratum_filter.empty()) {
          std::sort(stratum_filter.rbegin(), stratum_filter.rend());
          filter = stratum_filter;
        }
        for (const auto& o : enumerate_origamis(to_size(fam_args[1], "n"), filter)) std::cout << to_string(o) << '\n';
      } else {
        std::cout << to_string(family_member(fam_args)) << '\n';
      }
      return kOk;
    }

    if (*scan_cmd) {
      OrbitTable t = orbit(scan_in.get());
      VeechGroupData v = veech_generators(t);
      std::cout << "m,image_order,e,f\n";
      for (std::uint64_t m = 1; m <= scan_max; ++m) {
        if (crt_domain_size(m) > budget) {
          std::cerr << "skipping m=" << m << ": over the point budget\n";
          continue;
        }
        DeficiencyResult r = deficiency(v, m, budget);
        std::cout << m << ',' << r.image_order.str() << ',' << r.e << ',' << r.f << '\n';
      }
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kOk;
}
