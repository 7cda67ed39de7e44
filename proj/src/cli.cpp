#include "eprgame/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "eprgame/errors.hpp"
#include "eprgame/io.hpp"

namespace eprgame {

namespace {

const char* const kPlayerKeys[3] = {"alice", "bob", "chris"};

struct Options {
  std::string format = "table";
  std::string tol;
  bool exact = false;
  std::string output;
  std::optional<std::uint64_t> seed;
  bool no_zeros = false;
  std::string profile;
  std::array<std::string, 2> files;
};

struct Report {
  Json json;
  std::string table;
  int exit_code = kExitPass;
};

// ---- table rendering from the JSON model ----

std::string plain(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_number()) return to_string(v.get<double>());
  return v.dump();
}

std::string fixed5(const Json& v) {
  if (!v.is_number()) return plain(v);
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.5f", v.get<double>());
  return buffer;
}

std::string joined(const Json& values, const std::function<std::string(const Json&)>& fmt,
                   const std::string& sep = " ") {
  std::string out;
  for (const Json& v : values) {
    if (!out.empty()) out += sep;
    out += fmt(v);
  }
  return out;
}

std::string yes_no(const Json& v) { return v.get<bool>() ? "yes" : "no"; }
std::string pass_fail(const Json& v) { return v.get<bool>() ? "pass" : "fail"; }

std::string profile_label(const Json& profile) { return "(" + joined(profile, plain, ",") + ")"; }

std::string coins_label(const Json& coins) {
  std::vector<std::string> values;
  for (const char* key : kPlayerKeys) {
    for (const Json& v : coins[key]) values.push_back(plain(v));
  }
  if (std::all_of(values.begin(), values.end(), [&](const std::string& s) { return s == values[0]; })) {
    return "r=s=r'=s'=r''=s''=" + values[0];
  }
  return "r=" + values[0] + " s=" + values[1] + " r'=" + values[2] + " s'=" + values[3] +
         " r''=" + values[4] + " s''=" + values[5];
}

std::string witness_label(const Json& w) {
  return "witness p" + plain(w["index"]) + ": product " + plain(w["product"]) + " vs " +
         plain(w["value"]) + " (deviation " + plain(w["deviation"]) + ")";
}

std::string index_list(const Json& indices) {
  return joined(indices, [](const Json& i) { return "p" + plain(i); });
}

// ---- helpers shared by commands ----

template <Scalar T>
T tolerance(const Options& opt, const T& fallback) {
  if (opt.tol.empty()) return fallback;
  try {
    const Rational v = parse_rational(opt.tol);
    if (v < 0) throw InputError("--tol: must be non-negative", {"--tol"});
    return from_rational<T>(v);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("--tol: ") + e.what(), {"--tol"});
  }
}

template <Scalar T>
Json triple_json(const std::array<T, 3>& v) {
  return Json::array({number_to_json(v[0]), number_to_json(v[1]), number_to_json(v[2])});
}

template <Scalar T>
Json payoff_json(const PayoffTriple<T>& v) {
  return Json{{"alice", number_to_json(v.alice)},
              {"bob", number_to_json(v.bob)},
              {"chris", number_to_json(v.chris)}};
}

template <Scalar T>
Json profile_json(const MixedProfile<T>& m) {
  return Json::array({number_to_json(m.x), number_to_json(m.y), number_to_json(m.z)});
}

Json corner_json(PureProfile p) {
  auto v = [](Setting s) { return s == Setting::kFirst ? 1 : 0; };
  return Json::array({v(p.alice), v(p.bob), v(p.chris)});
}

template <Scalar T>
Json factorizability_json(const FactorizabilityResult<T>& f) {
  Json out{{"verdict", f.verdict == Verdict::kFactorizable ? "factorizable" : "non-factorizable"},
           {"coins", coins_to_json(f.candidate)},
           {"max_deviation", number_to_json(f.max_deviation)},
           {"max_deviation_index", f.max_deviation_index},
           {"witness", nullptr}};
  if (f.witness) {
    out["witness"] = Json{{"index", f.witness->index},
                          {"product", number_to_json(f.witness->product)},
                          {"value", number_to_json(f.witness->value)},
                          {"deviation", number_to_json(f.witness->deviation)}};
  }
  return out;
}

std::string factorizability_table(const Json& f) {
  if (f["verdict"] == "factorizable") return "factorizable, " + coins_label(f["coins"]);
  return "non-factorizable, " + witness_label(f["witness"]);
}

// ---- commands ----

template <Scalar T>
Report game_check_pd(const Options& opt) {
  const SymmetricGame<T> game =
      game_from_json<T>(load_json_file(opt.files.at(0)), tolerance(opt, default_constraint_tol<T>()));
  const PdReport pd = classify_generalized_pd(game);
  Report r;
  r.json = {{"game", game_to_json(game)},
            {"condition_a", pd.condition_a},
            {"condition_b", pd.condition_b},
            {"condition_c", pd.condition_c},
            {"violated_inequalities", pd.violated_inequalities},
            {"is_generalized_pd", pd.is_generalized_pd}};
  r.table = "generalized PD: " + yes_no(r.json["is_generalized_pd"]) + "\n" +
            "condition (a): " + pass_fail(r.json["condition_a"]) + "\n" +
            "condition (b): " + pass_fail(r.json["condition_b"]) + "\n" +
            "condition (c): " + pass_fail(r.json["condition_c"]) + "\n";
  if (!pd.violated_inequalities.empty()) {
    r.table += "violated: " + joined(r.json["violated_inequalities"], plain) + "\n";
  }
  r.exit_code = pd.is_generalized_pd ? kExitPass : kExitFail;
  return r;
}

template <Scalar T>
Report payoff(const Options& opt) {
  const SymmetricGame<T> game =
      game_from_json<T>(load_json_file(opt.files.at(0)), default_constraint_tol<T>());
  const JointProbabilitySet<T> p = behavior_from_json<T>(load_json_file(opt.files.at(1)));
  const MixedProfile<T> m = profile_from_string<T>(opt.profile);
  Report r;
  r.json = {{"profile", profile_json(m)}, {"payoffs", payoff_json(payoffs_from_joint(game, p, m))}};
  const Json& pay = r.json["payoffs"];
  r.table = "payoffs at " + profile_label(r.json["profile"]) + ": alice=" + plain(pay["alice"]) +
            " bob=" + plain(pay["bob"]) + " chris=" + plain(pay["chris"]) + "\n";
  return r;
}

template <Scalar T>
Report probs_check(const Options& opt) {
  const JointProbabilitySet<T> p = behavior_from_json<T>(load_json_file(opt.files.at(0)));
  const T tol = tolerance(opt, default_constraint_tol<T>());
  const NormalizationReport<T> norm = check_normalization(p, tol);
  const NoSignalingReport<T> ns = check_no_signaling(p, tol);

  Json residuals = Json::array();
  for (const T& v : norm.residuals) residuals.push_back(number_to_json(v));
  Json chains = Json::array();
  for (const ChainCheck<T>& c : ns.chains) {
    Json values = Json::array();
    for (const T& v : c.values) values.push_back(number_to_json(v));
    chains.push_back({{"player", kPlayerKeys[static_cast<std::size_t>(c.player)]},
                      {"setting", c.setting == Setting::kFirst ? 1 : 2},
                      {"sign", c.sign},
                      {"values", values},
                      {"spread", number_to_json(c.spread)},
                      {"pass", c.pass}});
  }
  Report r;
  r.json = {{"normalization",
             {{"pass", norm.pass}, {"residuals", residuals}, {"out_of_range", norm.out_of_range}}},
            {"no_signaling", {{"pass", ns.pass}, {"chains", chains}}}};
  bool pass = norm.pass && ns.pass;
  r.table = "normalization: " + pass_fail(r.json["normalization"]["pass"]) + "\n";
  if (!norm.out_of_range.empty()) {
    r.table += "  outside [0,1]: " + index_list(r.json["normalization"]["out_of_range"]) + "\n";
  }
  for (std::size_t ctx = 0; ctx < kContextCount; ++ctx) {
    if (abs_value(norm.residuals[ctx]) > tol) {
      r.table += "  context " + std::to_string(ctx + 1) + " residual " + plain(residuals[ctx]) + "\n";
    }
  }
  r.table += "no-signaling: " + pass_fail(r.json["no_signaling"]["pass"]) + "\n";
  for (const Json& c : chains) {
    if (!c["pass"].get<bool>()) {
      r.table += "  " + plain(c["player"]) + " setting " + plain(c["setting"]) + " outcome " +
                 (c["sign"].get<int>() > 0 ? "+1" : "-1") + ": " + joined(c["values"], plain) + "\n";
    }
  }
  if (!opt.no_zeros) {
    const ZeroReport zeros = check_embedding_zeros(p, tol);
    r.json["embedding_zeros"] = {{"pass", zeros.pass}, {"violators", zeros.violators}};
    r.table += "embedding zeros: " + pass_fail(r.json["embedding_zeros"]["pass"]);
    if (!zeros.pass) {
      r.table += " (" + std::to_string(zeros.violators.size()) + " violators: " +
                 index_list(r.json["embedding_zeros"]["violators"]) + ")";
    }
    r.table += "\n";
    pass = pass && zeros.pass;
  }
  r.json["pass"] = pass;
  r.exit_code = pass ? kExitPass : kExitFail;
  return r;
}

template <Scalar T>
Report probs_factorize(const Options& opt) {
  const JointProbabilitySet<T> p = behavior_from_json<T>(load_json_file(opt.files.at(0)));
  Report r;
  try {
    const FactorizabilityResult<T> f =
        opt.tol.empty() ? factorizability_certificate(p)
                        : factorizability_certificate(p, tolerance(opt, T(0)), tolerance(opt, T(0)));
    r.json = factorizability_json(f);
    r.table = factorizability_table(r.json) + "\n";
    r.exit_code = f.verdict == Verdict::kFactorizable ? kExitPass : kExitFail;
  } catch (const NotABehavior& e) {
    r.json = {{"verdict", "not-a-behavior"}, {"problems", e.details()}};
    r.table = "not a no-signaling behavior\n";
    for (const auto& d : e.details()) r.table += "  " + d + "\n";
    r.exit_code = kExitFail;
  }
  return r;
}

template <Scalar T>
Report probs_complete(const Options& opt) {
  const IndependentProbabilities<T> u = independents_from_json<T>(load_json_file(opt.files.at(0)));
  const JointProbabilitySet<T> p = complete_unchecked(u);
  const std::vector<std::string> violations =
      completion_violations(p, tolerance(opt, default_constraint_tol<T>()));
  Report r;
  r.json = behavior_to_json(p);
  r.json["feasible"] = violations.empty();
  r.json["violations"] = violations;
  r.table = violations.empty() ? "feasible\n" : "infeasible\n";
  for (const auto& v : violations) r.table += "  " + v + "\n";
  for (std::size_t i = 1; i <= kEntryCount; ++i) {
    if (std::find(kZeroIndices.begin(), kZeroIndices.end(), i) != kZeroIndices.end()) continue;
    r.table += "p" + std::to_string(i) + " = " + plain(r.json["p"][i - 1]) + "\n";
  }
  r.exit_code = violations.empty() ? kExitPass : kExitFail;
  return r;
}

Report probs_sample(const Options& opt) {
  const std::uint64_t seed = opt.seed.value_or(0);
  Report r;
  r.json = behavior_to_json(random_nosignaling_sample(seed));
  r.json["seed"] = seed;
  r.table = "sample seed " + std::to_string(seed) + "\n";
  for (std::size_t i = 1; i <= kEntryCount; ++i) {
    if (std::find(kZeroIndices.begin(), kZeroIndices.end(), i) != kZeroIndices.end()) continue;
    r.table += "p" + std::to_string(i) + " = " + plain(r.json["p"][i - 1]) + "\n";
  }
  return r;
}

template <Scalar T>
Report ne_verify(const Options& opt) {
  const SymmetricGame<T> game =
      game_from_json<T>(load_json_file(opt.files.at(0)), default_constraint_tol<T>());
  const JointProbabilitySet<T> p = behavior_from_json<T>(load_json_file(opt.files.at(1)));
  const MixedProfile<T> m = profile_from_string<T>(opt.profile);
  const NeVerdict<T> v = verify_ne(game, p, m, tolerance(opt, default_ne_tol<T>()));
  Report r;
  r.json = {{"profile", profile_json(m)},
            {"is_ne", v.is_ne},
            {"margins", triple_json(v.margins)},
            {"deviations", triple_json(v.deviations)}};
  r.table = "NE at " + profile_label(r.json["profile"]) + ": " + yes_no(r.json["is_ne"]) + "\n" +
            "margins " + joined(r.json["margins"], fixed5) + "\n";
  r.exit_code = v.is_ne ? kExitPass : kExitFail;
  return r;
}

template <Scalar T>
Report ne_enumerate(const Options& opt) {
  const SymmetricGame<T> game =
      game_from_json<T>(load_json_file(opt.files.at(0)), default_constraint_tol<T>());
  const JointProbabilitySet<T> p = behavior_from_json<T>(load_json_file(opt.files.at(1)));
  const std::vector<PureProfile> ne = enumerate_pure_ne(game, p, tolerance(opt, default_ne_tol<T>()));
  Report r;
  r.json = {{"equilibria", Json::array()}};
  for (const PureProfile& profile : ne) r.json["equilibria"].push_back(corner_json(profile));
  r.table = "pure NE: " + (ne.empty() ? std::string("none") : joined(r.json["equilibria"], profile_label)) + "\n";
  r.exit_code = ne.empty() ? kExitFail : kExitPass;
  return r;
}

template <Scalar T>
Report ne_ccc_margins(const Options& opt) {
  const PdRatios<T> ratios = ratios_from_json<T>(load_json_file(opt.files.at(0)));
  const JointProbabilitySet<T> p = behavior_from_json<T>(load_json_file(opt.files.at(1)));
  const T tol = tolerance(opt, default_constraint_tol<T>());
  Report r;
  try {
    const std::array<T, 3> margins = ccc_margins(ratios, p, tol);
    const bool is_ne = std::all_of(margins.begin(), margins.end(), [&](const T& m) { return m >= -tol; });
    r.json = {{"margins", triple_json(margins)}, {"is_ne", is_ne}};
    r.table = "margins " + joined(r.json["margins"], fixed5) + "\n" +
              "(C,C,C) NE: " + yes_no(r.json["is_ne"]) + "\n";
    r.exit_code = is_ne ? kExitPass : kExitFail;
  } catch (const ConstraintViolation& e) {
    r.json = {{"margins", nullptr}, {"is_ne", nullptr}, {"problems", e.details()}};
    r.table = "behavior violates the reduced constraints\n";
    for (const auto& d : e.details()) r.table += "  " + d + "\n";
    r.exit_code = kExitFail;
  }
  return r;
}

Report quantum_generate(const Options& opt) {
  const TripartiteState state = state_from_json(load_json_file(opt.files.at(0)));
  const MeasurementSetup setup = setup_from_json(load_json_file(opt.files.at(1)));
  const JointProbabilitySet<double> p = born_joint_probabilities(state, setup);
  const double tol = tolerance(opt, kClampTol);
  Report r;
  r.json = behavior_to_json(p);
  r.json["normalization_pass"] = check_normalization(p, tol).pass;
  r.json["no_signaling_pass"] = check_no_signaling(p, tol).pass;
  for (std::size_t ctx = 0; ctx < kContextCount; ++ctx) {
    r.table += to_string(kCanonicalProfiles[ctx]) + ":";
    for (std::size_t o = 0; o < kOutcomeCount; ++o) r.table += " " + fixed5(r.json["p"][ctx * 8 + o]);
    r.table += "\n";
  }
  r.table += "normalization: " + pass_fail(r.json["normalization_pass"]) + "\n" +
             "no-signaling: " + pass_fail(r.json["no_signaling_pass"]) + "\n";
  return r;
}

template <Scalar T>
Report search_ccc(const Options& opt) {
  SearchProblem<T> prob = problem_from_json<T>(load_json_file(opt.files.at(0)));
  if (opt.seed) prob.seed = *opt.seed;
  const SearchResult<T> result = search_ccc_feasible(prob);
  Report r;
  const bool ok = result.status == SearchStatus::kFeasible;
  r.json = {{"status", ok ? "feasible" : "infeasible"}, {"solves", result.solves}, {"note", result.note}};
  r.table = std::string(ok ? "feasible" : "infeasible") + (result.note.empty() ? "" : " (" + result.note + ")") + "\n";
  if (ok) {
    r.json["p"] = behavior_to_json(*result.behavior)["p"];
    r.json["independent"] = independents_to_json(result.independent);
    r.json["margins"] = triple_json(result.margins);
    r.json["factorizability"] = factorizability_json(*result.factorizability);
    r.table += "margins " + joined(r.json["margins"], fixed5) + "\n" +
               "certificate: " + factorizability_table(r.json["factorizability"]) + "\n";
    for (std::size_t k = 0; k < kIndependentIndices.size(); ++k) {
      const std::string key = "p" + std::to_string(kIndependentIndices[k]);
      r.table += key + " = " + plain(r.json["independent"][key]) + "\n";
    }
  }
  r.exit_code = ok ? kExitPass : kExitFail;
  return r;
}

void write_report(const Report& report, const Options& opt, std::ostream& out) {
  const std::string text = opt.format == "json" ? report.json.dump(2) + "\n" : report.table;
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output);
  if (!file) throw InputError(opt.output + ": cannot write file", {opt.output});
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Three-player games over shared EPR-Bohm behaviors", "eprgame"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--tol", opt.tol,
                 "Tolerance for the command's checks (number or fraction); defaults: 1e-12 for "
                 "linear constraints, 1e-9 for factorization products and NE margins, 1e-10 for "
                 "quantum closure, 0 with --exact");
  app.add_flag("--exact", opt.exact, "Exact rational arithmetic");
  app.add_option("-o,--output", opt.output, "Write the report to a file");
  app.add_option("--seed", opt.seed, "Seed for sampling and randomized search");
  app.add_flag("--no-zeros", opt.no_zeros, "probs check: skip the embedding-zero check");

  std::function<Report()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help,
                  std::vector<std::string> file_names, std::function<Report()> body) {
    CLI::App* cmd = parent->add_subcommand(name, help);
    for (std::size_t i = 0; i < file_names.size(); ++i) {
      cmd->add_option(file_names[i], opt.files[i], file_names[i] + " file")->required();
    }
    cmd->callback([&action, body] { action = body; });
    return cmd;
  };
  auto typed = [&](auto double_body, auto exact_body) -> std::function<Report()> {
    return [&opt, double_body, exact_body] { return opt.exact ? exact_body(opt) : double_body(opt); };
  };

  CLI::App* game = app.add_subcommand("game", "Game commands")->require_subcommand(1);
  leaf(game, "check-pd", "Classify a symmetric game as generalized Prisoner's Dilemma", {"game"},
       typed(game_check_pd<double>, game_check_pd<Rational>));

  leaf(&app, "payoff", "Payoffs of a mixed profile over a behavior or coins", {"game", "behavior"},
       typed(payoff<double>, payoff<Rational>))
      ->add_option("--profile", opt.profile, "x,y,z")
      ->required();

  CLI::App* probs = app.add_subcommand("probs", "Behavior commands")->require_subcommand(1);
  leaf(probs, "check", "Normalization, no-signaling and embedding zeros", {"behavior"},
       typed(probs_check<double>, probs_check<Rational>));
  leaf(probs, "factorize", "Factorizability certificate", {"behavior"},
       typed(probs_factorize<double>, probs_factorize<Rational>));
  leaf(probs, "complete", "Complete a behavior from its ten independent entries", {"independents"},
       typed(probs_complete<double>, probs_complete<Rational>));
  probs->add_subcommand("sample", "Random zero-constrained no-signaling behavior")
      ->callback([&] { action = [&] { return probs_sample(opt); }; });

  CLI::App* ne = app.add_subcommand("ne", "Nash equilibrium commands")->require_subcommand(1);
  leaf(ne, "verify", "Check a mixed profile for equilibrium", {"game", "behavior"},
       typed(ne_verify<double>, ne_verify<Rational>))
      ->add_option("--profile", opt.profile, "x,y,z")
      ->required();
  leaf(ne, "enumerate", "List pure-strategy equilibria", {"game", "behavior"},
       typed(ne_enumerate<double>, ne_enumerate<Rational>));
  leaf(ne, "ccc-margins", "(C,C,C) equilibrium margins from payoff ratios", {"ratios", "behavior"},
       typed(ne_ccc_margins<double>, ne_ccc_margins<Rational>));

  CLI::App* quantum = app.add_subcommand("quantum", "Quantum behaviors")->require_subcommand(1);
  leaf(quantum, "generate", "Born-rule behavior of a state and measurement setup", {"state", "setup"},
       [&opt] { return quantum_generate(opt); });

  CLI::App* search = app.add_subcommand("search", "Behavior search")->require_subcommand(1);
  leaf(search, "ccc", "Find a behavior making (C,C,C) an equilibrium", {"problem"},
       typed(search_ccc<double>, search_ccc<Rational>));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (opt.exact && (app.got_subcommand("quantum") || probs->got_subcommand("sample"))) {
      throw InputError("--exact: not supported by this command", {"--exact"});
    }
    const Report report = action();
    write_report(report, opt, out);
    return report.exit_code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace eprgame
