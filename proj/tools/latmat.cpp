// Command-line front end: validation, classification, axiom checking,
// supermatroid enumeration, theorem verification and greedy runs, all
// reporting JSON. Exit codes: 0 pass, 1 axiom failure or counterexample,
// 2 usage or parse error.

#include <chrono>
#include <ctime>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latmat/serialize.hpp"

namespace {

using namespace latmat;

struct run_config {
  std::string lattice_ref;
  std::string ideal_path;
  std::string bases_path;
  std::string fn_path;
  std::string axiom;
  std::string variant;
  std::string suite = "all";
  std::string out_path;
  std::string x_name, y_name, xring_name;
  std::string fn_spec;  // inline generator, e.g. "concave:1,1,0" or "height"
  int k = -1;
  long long seed = 0;
  int jobs = 1;
  bool force = false;
  bool no_timestamp = false;
};

lattice resolve_lattice(const std::string& ref) {
  if (ref.rfind("boolean_", 0) == 0) return boolean_lattice(std::stoi(ref.substr(8)));
  if (ref.rfind("diamond_", 0) == 0) return diamond(std::stoi(ref.substr(8)));
  if (ref.rfind("chain_", 0) == 0) return chain(std::stoi(ref.substr(6)));
  if (ref.rfind("subspace_", 0) == 0) {
    auto rest = ref.substr(9);
    auto us = rest.find('_');
    if (us == std::string::npos) throw error(errc::parse_error, "expected subspace_Q_N");
    return subspace_lattice(std::stoi(rest.substr(0, us)), std::stoi(rest.substr(us + 1)));
  }
  for (const auto& name : corpus_names())
    if (ref == name || name.rfind(ref + "_", 0) == 0) return corpus(name).lat;
  return load_lattice(ref);
}

std::string now_string() {
  std::time_t t = std::time(nullptr);
  char buf[64];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

void emit(const run_config& cfg, const std::string& command, json result) {
  json report;
  report["command"] = command;
  if (!cfg.no_timestamp) report["timestamp"] = now_string();
  report["result"] = std::move(result);
  std::string text = report.dump(2) + "\n";
  if (cfg.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.out_path);
    if (!out) throw error(errc::io_error, "cannot write " + cfg.out_path);
    out << text;
  }
}

lattice_fn resolve_fn(const lattice& L, const run_config& cfg) {
  if (!cfg.fn_path.empty()) return fn_from_json(L, load_json_file(cfg.fn_path));
  const std::string& spec = cfg.fn_spec;
  if (spec == "height") return lattice_fn::of_height(L);
  if (spec.rfind("concave:", 0) == 0) {
    std::vector<rat> inc;
    std::string rest = spec.substr(8);
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      inc.push_back(parse_rat(rest.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return concave_of_height(L, inc);
  }
  if (spec.rfind("random-strong-dr", 0) == 0)
    return random_monotone_strong_dr(L, static_cast<std::uint64_t>(cfg.seed));
  throw error(errc::parse_error, "no function given (use --fn or --fn-spec)");
}

int cmd_validate(const run_config& cfg) {
  json result;
  try {
    lattice L = resolve_lattice(cfg.lattice_ref);
    result["valid"] = true;
    result["elements"] = L.size();
    result["height"] = L.height(L.top());
    result["bottom"] = L.name(L.bottom());
    result["top"] = L.name(L.top());
    emit(cfg, "validate", result);
    return 0;
  } catch (const error& e) {
    if (e.code() == errc::parse_error || e.code() == errc::io_error) throw;
    result["valid"] = false;
    result["error"] = to_string(e.code());
    result["message"] = e.what();
    emit(cfg, "validate", result);
    return 1;
  }
}

int cmd_classify(const run_config& cfg) {
  lattice L = resolve_lattice(cfg.lattice_ref);
  classification_flags f = classify(L);
  json result;
  result["distributive"] = f.distributive;
  result["modular"] = f.modular;
  result["lower_semimodular"] = f.lower_semimodular;
  result["upper_semimodular"] = f.upper_semimodular;
  result["lower_locally_modular"] = f.lower_locally_modular;
  result["lower_locally_distributive"] = f.lower_locally_distributive;
  result["atomic"] = f.atomic;
  result["graded"] = f.graded;
  emit(cfg, "classify", result);
  return 0;
}

int cmd_check(const run_config& cfg) {
  lattice L = resolve_lattice(cfg.lattice_ref);
  lattice Ldual = dualize(L);
  axiom_report rep;
  const std::string& ax = cfg.axiom;

  auto need_ideal = [&]() {
    if (cfg.ideal_path.empty()) throw CLI::ValidationError("--ideal required for " + ax);
    return ideal_set(L, members_from_json(L, load_json_file(cfg.ideal_path)));
  };
  auto need_fn = [&]() {
    if (cfg.fn_path.empty() && cfg.fn_spec.empty())
      throw CLI::ValidationError("--fn required for " + ax);
    return resolve_fn(L, cfg);
  };

  if (ax == "height") {
    rep = check_height(L, need_ideal());
  } else if (ax == "independence") {
    independence_variant v = independence_variant::I2;
    if (cfg.variant == "I2l") v = independence_variant::I2l;
    else if (cfg.variant == "I2w") v = independence_variant::I2w;
    else if (!cfg.variant.empty() && cfg.variant != "I2")
      throw CLI::ValidationError("unknown independence variant " + cfg.variant);
    rep = check_independence(L, need_ideal(), v);
  } else if (ax == "rank") {
    rank_variant v = rank_variant::R3_downward;
    if (cfg.variant == "upward" || cfg.variant == "R3u") v = rank_variant::R3u_upward;
    else if (cfg.variant == "bidirectional" || cfg.variant == "R3b") v = rank_variant::R3b_bidirectional;
    else if (cfg.variant == "prime" || cfg.variant == "R3s") v = rank_variant::R3s_prime;
    else if (cfg.variant == "sano" || cfg.variant == "R3'") v = rank_variant::R3p_sano;
    else if (!cfg.variant.empty() && cfg.variant != "downward" && cfg.variant != "R3")
      throw CLI::ValidationError("unknown rank variant " + cfg.variant);
    lattice_fn f = need_fn();
    std::vector<int> values(L.size());
    for (elem x = 0; x < L.size(); ++x) {
      if (f.at(x).denominator() != 1)
        throw error(errc::parse_error, "rank values must be integers");
      values[x] = static_cast<int>(f.at(x).numerator());
    }
    rep = check_rank(L, rank_fn(L, values), v, &Ldual);
  } else if (ax == "base") {
    if (cfg.bases_path.empty()) throw CLI::ValidationError("--bases required for base");
    rep = check_base(L, base_family(L, members_from_json(L, load_json_file(cfg.bases_path))));
  } else if (ax == "dependence") {
    if (cfg.ideal_path.empty()) throw CLI::ValidationError("--ideal required for dependence");
    // the file lists the dependent (filter) members
    rep = check_dependence(L, dependent_set(L, members_from_json(L, load_json_file(cfg.ideal_path))));
  } else if (ax == "downward-dr") {
    rep = check_downward_dr(L, need_fn());
  } else if (ax == "downward-dr-strict") {
    rep = check_downward_dr(L, need_fn(), true);
  } else if (ax == "upward-dr") {
    rep = check_upward_dr(L, Ldual, need_fn());
  } else if (ax == "bidirectional-dr") {
    rep = check_bidirectional_dr(L, need_fn());
  } else if (ax == "lattice-submodular") {
    rep = check_lattice_submodular(L, need_fn());
  } else if (ax == "strong-dr") {
    rep = check_strong_dr(L, need_fn());
  } else if (ax == "downward-dr-prime") {
    rep = check_downward_dr_prime(L, need_fn());
  } else if (ax == "monotone") {
    rep = check_monotone(L, need_fn());
  } else if (ax == "valuated") {
    if (cfg.k < 0) throw CLI::ValidationError("--k required for valuated");
    rep = check_valuated(L, need_fn(), cfg.k);
  } else {
    throw CLI::ValidationError("unknown axiom " + ax);
  }
  emit(cfg, "check", report_to_json(rep));
  return rep.verdict ? 0 : 1;
}

int cmd_enumerate(const run_config& cfg) {
  lattice L = resolve_lattice(cfg.lattice_ref);
  std::vector<ideal_set> all = enumerate_supermatroids(L, cfg.force);
  for (const auto& I : all) {
    json line;
    line["members"] = members_to_json(L, I.members());
    std::cout << line.dump() << "\n";
  }
  return 0;
}

int cmd_verify(const run_config& cfg) {
  lattice L = resolve_lattice(cfg.lattice_ref);
  json suites = json::array();
  bool all_ok = true;
  auto run = [&](const suite_result& r) {
    suites.push_back(suite_to_json(r));
    all_ok = all_ok && r.ok();
  };
  const std::string& s = cfg.suite;
  classification_flags flags = classify(L);
  if (s == "modular-equivalence" || (s == "all" && flags.modular))
    run(verify_modular_equivalence(L, cfg.jobs));
  if (s == "llm" || s == "all") run(verify_llm_suite(L));
  if (s == "lemmas" || s == "all") run(verify_lemma_suite(L));
  if (s == "exchange" || (s == "all" && flags.modular)) run(verify_exchange_suite(L, cfg.jobs));
  if (s == "dual" || (s == "all" && flags.modular)) run(verify_dual_suite(L));
  if (suites.empty()) throw CLI::ValidationError("unknown suite " + s);
  json result;
  result["ok"] = all_ok;
  result["suites"] = std::move(suites);
  emit(cfg, "verify-theorems", result);
  return all_ok ? 0 : 1;
}

int cmd_greedy(const run_config& cfg) {
  lattice L = resolve_lattice(cfg.lattice_ref);
  lattice_fn f = resolve_fn(L, cfg);
  json result;
  if (!cfg.ideal_path.empty()) {
    ideal_set I(L, members_from_json(L, load_json_file(cfg.ideal_path)));
    approximation_record rec = approximation_report(L, f, I);
    result = approximation_to_json(L, rec);
  } else {
    if (cfg.k < 0) throw CLI::ValidationError("greedy needs --ideal or --k");
    greedy_trace t = greedy_valuated(L, f, cfg.k);
    result = trace_to_json(L, t);
  }
  emit(cfg, "greedy", result);
  return 0;
}

int cmd_exchange(const run_config& cfg) {
  lattice L = resolve_lattice(cfg.lattice_ref);
  base_family B = [&]() {
    if (!cfg.bases_path.empty())
      return base_family(L, members_from_json(L, load_json_file(cfg.bases_path)));
    if (!cfg.ideal_path.empty())
      return bases_of(L, ideal_set(L, members_from_json(L, load_json_file(cfg.ideal_path))));
    throw CLI::ValidationError("exchange needs --bases or --ideal");
  }();
  json result;
  if (!cfg.x_name.empty()) {
    if (cfg.y_name.empty() || cfg.xring_name.empty())
      throw CLI::ValidationError("exchange needs --x, --y and --xring together");
    exchange_witness w = verify_strong_exchange(L, B, L.index_of(cfg.x_name),
                                                L.index_of(cfg.y_name),
                                                L.index_of(cfg.xring_name));
    result = exchange_witness_to_json(L, w);
    emit(cfg, "exchange", result);
    return 0;
  }
  // exhaustive over all admissible triples
  json triples = json::array();
  bool ok = true;
  for (elem X : B.members())
    for (elem Y : B.members()) {
      elem XmY = L.meet(X, Y);
      for (elem Xo : L.lower_covers(X)) {
        if (!L.leq(XmY, Xo)) continue;
        json t;
        t["X"] = L.name(X);
        t["Y"] = L.name(Y);
        t["Xring"] = L.name(Xo);
        try {
          exchange_witness w = verify_strong_exchange(L, B, X, Y, Xo);
          t["witness"] = exchange_witness_to_json(L, w);
        } catch (const error& e) {
          t["error"] = e.what();
          ok = false;
        }
        triples.push_back(std::move(t));
      }
    }
  result["ok"] = ok;
  result["triples"] = std::move(triples);
  emit(cfg, "exchange", result);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact finite-lattice and supermatroid toolkit"};
  app.require_subcommand(1);
  run_config cfg;

  auto add_common = [&](CLI::App* sub, bool needs_lattice = true) {
    if (needs_lattice)
      sub->add_option("--lattice", cfg.lattice_ref,
                      "built-in name (boolean_N, diamond_K, chain_K, subspace_Q_N, fig2..fig6) "
                      "or a JSON file path")
          ->required();
    sub->add_option("--out", cfg.out_path, "write the report to a file instead of stdout");
    sub->add_flag("--no-timestamp", cfg.no_timestamp, "omit the timestamp field");
    sub->add_option("--jobs", cfg.jobs, "worker threads for exhaustive suites");
    sub->add_option("--seed", cfg.seed, "seed for generated functions");
    sub->add_flag("--force", cfg.force, "override enumeration size guards");
  };

  CLI::App* validate = app.add_subcommand("validate", "build and validate a lattice");
  add_common(validate);

  CLI::App* cls = app.add_subcommand("classify", "classification flags of a lattice");
  add_common(cls);

  CLI::App* check = app.add_subcommand("check", "run one axiom checker");
  add_common(check);
  check->add_option("--axiom", cfg.axiom, "height|independence|rank|base|dependence|downward-dr|"
                                          "upward-dr|bidirectional-dr|lattice-submodular|strong-dr|"
                                          "downward-dr-prime|monotone|valuated")
      ->required();
  check->add_option("--variant", cfg.variant, "axiom variant (I2|I2l|I2w, downward|upward|bidirectional|prime|sano)");
  check->add_option("--ideal", cfg.ideal_path, "JSON array of ideal members (filter members for dependence)");
  check->add_option("--bases", cfg.bases_path, "JSON array of base members");
  check->add_option("--fn", cfg.fn_path, "JSON lattice function");
  check->add_option("--fn-spec", cfg.fn_spec, "inline function: height|concave:v1,v2,...|random-strong-dr");
  check->add_option("--k", cfg.k, "slice height for valuated");

  CLI::App* enumerate = app.add_subcommand("enumerate", "stream every supermatroid as JSON lines");
  add_common(enumerate);

  CLI::App* verify = app.add_subcommand("verify-theorems", "exhaustive theorem suites");
  add_common(verify);
  verify->add_option("--suite", cfg.suite, "modular-equivalence|llm|lemmas|exchange|dual|all");

  CLI::App* greedy = app.add_subcommand("greedy", "greedy maximization with trace and report");
  add_common(greedy);
  greedy->add_option("--fn", cfg.fn_path, "JSON lattice function");
  greedy->add_option("--fn-spec", cfg.fn_spec, "inline function: height|concave:...|random-strong-dr");
  greedy->add_option("--ideal", cfg.ideal_path, "supermatroid constraint (JSON member array)");
  greedy->add_option("--k", cfg.k, "number of unconstrained greedy steps");

  CLI::App* exchange = app.add_subcommand("exchange", "strong exchange witnesses");
  add_common(exchange);
  exchange->add_option("--ideal", cfg.ideal_path, "supermatroid (JSON member array)");
  exchange->add_option("--bases", cfg.bases_path, "base family (JSON member array)");
  exchange->add_option("--x", cfg.x_name, "base X");
  exchange->add_option("--y", cfg.y_name, "base Y");
  exchange->add_option("--xring", cfg.xring_name, "lower cover of X above X meet Y");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(cfg);
    if (cls->parsed()) return cmd_classify(cfg);
    if (check->parsed()) return cmd_check(cfg);
    if (enumerate->parsed()) return cmd_enumerate(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    if (greedy->parsed()) return cmd_greedy(cfg);
    if (exchange->parsed()) return cmd_exchange(cfg);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const latmat::error& e) {
    if (e.code() == latmat::errc::parse_error || e.code() == latmat::errc::io_error ||
        e.code() == latmat::errc::unknown_element || e.code() == latmat::errc::too_large ||
        e.code() == latmat::errc::unknown_corpus_entry) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
