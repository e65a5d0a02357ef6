#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "wordmap/error.hpp"
#include "wordmap/kernel_lab.hpp"
#include "wordmap/laws.hpp"
#include "wordmap/quotient_lab.hpp"
#include "wordmap/weyl.hpp"
#include "wordmap/word_map.hpp"

namespace {

using namespace wordmap;
using cli::Json;

struct Options {
  std::string group = "SL2:p=3";
  int n = 2;
  std::string word;
  std::string tuple;
  std::string sigma;
  std::string tau;
  std::string subgroup = "all";
  std::string s;
  std::string laws = "abcdefgh";
  std::string tower = "derived";
  std::string factors;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100000;
  std::uint64_t samples = 1000;
  std::size_t cap = kDefaultEnumerationCap;
  bool cap_given = false;
  std::uint64_t tuple_cap = kDefaultTupleCap;
  int max_rank = 8;
  int target = 0;
  unsigned threads = 0;
};

/// One subcommand's result. `passed` drives the exit code.
struct Outcome {
  Json body;
  SearchMode mode = SearchMode::exhaustive;
  bool passed = true;
  std::string summary;
};

Group make_group(const Options& o) {
  return Group(GroupDescriptor::parse(o.group),
               cli::resolve_enumeration_cap(o.cap, o.cap_given));
}

std::string yes_no(bool b) { return b ? "pass" : "FAIL"; }

Outcome run_eval(const Options& o) {
  const auto g = make_group(o);
  const auto x = cli::parse_tuple(g, o.tuple);
  if (x.empty())
    throw Error(ErrorKind::invalid_argument, "tuple is empty");
  const auto w = Word::parse(o.word, static_cast<int>(x.size()));
  const auto result = evaluate(w, x);
  Outcome out;
  out.body["group"] = g.descriptor().to_string();
  out.body["word"] = w.to_string();
  out.body["tuple"] = cli::tuple_json(x);
  out.body["result"] = cli::matrix_json(result);
  out.body["verdict"] = Json{{"in_group", g.contains(result)}, {"is_identity", result.is_identity()}};
  out.passed = g.contains(result);
  out.summary = w.to_string() + " -> " + result.to_string();
  return out;
}

Outcome run_compose(const Options& o) {
  const auto sigmas = cli::resolve_sigma(o.sigma, o.n);
  const auto taus = cli::resolve_sigma(o.tau, o.n);
  if (sigmas.size() != 1 || taus.size() != 1)
    throw Error(ErrorKind::invalid_argument, "compose needs a single sigma and a single tau");
  const auto& sigma = sigmas.front().second;
  const auto& tau = taus.front().second;
  const auto c = compose(sigma, tau);
  Outcome out;
  out.body["sigma"] = cli::endomorphism_json(sigma);
  out.body["tau"] = cli::endomorphism_json(tau);
  out.body["result"] = cli::endomorphism_json(c);
  Json verdicts = Json::object();
  if (!o.tuple.empty()) {
    const auto g = make_group(o);
    const auto x = cli::parse_tuple(g, o.tuple);
    const bool ok = check_anti_homomorphism(sigma, tau, x);
    verdicts["anti_homomorphism"] = ok;
    out.passed = ok;
  }
  out.body["verdicts"] = verdicts;
  out.summary = sigma.to_string() + " o " + tau.to_string() + " = " + c.to_string();
  return out;
}

Outcome run_props(const Options& o) {
  const auto g = make_group(o);
  Outcome out;
  out.mode = SearchMode::exhaustive;
  auto laws = Json::array();
  for (char c : o.laws) {
    const auto r = run_law(g, parse_law(c), o.n, o.samples, o.seed, o.tuple_cap);
    if (r.mode == SearchMode::sampled)
      out.mode = SearchMode::sampled;
    out.passed = out.passed && r.passed;
    laws.push_back({{"law", std::string(1, to_char(r.law))},
                    {"passed", r.passed},
                    {"mode", to_string(r.mode)},
                    {"instances", r.instances},
                    {"failures", r.failures},
                    {"seed", r.seed},
                    {"detail", r.detail}});
    out.summary += std::string("law ") + to_char(r.law) + ": " + yes_no(r.passed) + " (" +
                   std::to_string(r.instances) + " instances)\n";
  }
  out.body["group"] = g.descriptor().to_string();
  out.body["n"] = o.n;
  out.body["samples"] = o.samples;
  out.body["verdicts"] = laws;
  return out;
}

Outcome run_kernel_witness(const Options& o) {
  const auto g = make_group(o);
  const auto r = kernel_witness_solvable(g, o.n, o.tuple_cap, o.samples, o.seed,
                                         parse_tower(o.tower));
  Outcome out;
  out.mode = r.mode;
  out.passed = r.passed();
  out.body["group"] = g.descriptor().to_string();
  out.body["n"] = o.n;
  out.body["derived_length"] = r.derived_length;
  out.body["tower"] = to_string(r.tower);
  out.body["sigma"] = cli::endomorphism_json(r.sigma);
  out.body["tau"] = cli::endomorphism_json(r.tau);
  out.body["verdicts"] = {{"sigma_is_identity", r.sigma_is_identity},
                          {"tuples_checked", r.tuples_checked},
                          {"counterexamples", r.counterexamples},
                          {"sigma_X_is_identity", r.counterexamples == 0},
                          {"passed", r.passed()}};
  out.summary = "derived length " + std::to_string(r.derived_length) + ", " +
                std::to_string(r.tuples_checked) + " tuples (" + std::string(to_string(r.mode)) +
                "), counterexamples " + std::to_string(r.counterexamples);
  return out;
}

Outcome run_faithful_search(const Options& o) {
  const auto g = make_group(o);
  const auto sigmas = cli::resolve_sigma(o.sigma.empty() ? "all" : o.sigma, o.n);
  const auto suite = generator_faithfulness_suite(g, sigmas, o.budget, o.seed);
  Outcome out;
  out.passed = suite.all_nontrivial;
  auto rows = Json::array();
  for (const auto& r : suite.generators) {
    if (r.result.mode == SearchMode::sampled)
      out.mode = SearchMode::sampled;
    Json row{{"name", r.name},
             {"sigma", r.sigma.to_string()},
             {"found", r.result.found()},
             {"mode", to_string(r.result.mode)},
             {"examined", r.result.examined}};
    row["witness"] = r.result.witness ? cli::tuple_json(*r.result.witness) : Json(nullptr);
    if (!r.result.found())
      row["note"] = r.result.mode == SearchMode::sampled ? "none found (sampled, not exhaustive)"
                                                          : "sigma_X is the identity on G^n";
    rows.push_back(row);
    out.summary += r.name + ": " + (r.result.found() ? "witness" : "none found") + " after " +
                   std::to_string(r.result.examined) + "\n";
  }
  out.body["group"] = g.descriptor().to_string();
  out.body["n"] = o.n;
  out.body["budget"] = o.budget;
  out.body["verdicts"] = rows;
  if (o.n == 1)
    out.body["non_involutions"] = count_non_involutions(g);
  return out;
}

Json orbit_summary(const OrbitSpace& space) {
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t total = 0;
  bool divides = true;
  for (auto sz : space.orbit_sizes()) {
    ++histogram[sz];
    total += sz;
    divides = divides && space.subgroup().size() % sz == 0;
  }
  auto hist = Json::array();
  for (auto [size, count] : histogram)
    hist.push_back({{"orbit_size", size}, {"count", count}});
  return {{"subgroup_order", space.subgroup().size()},
          {"tuple_count", space.space().size()},
          {"orbit_count", space.orbit_count()},
          {"size_histogram", hist},
          {"sizes_divide_subgroup_order", divides},
          {"sizes_sum_to_tuple_count", total == space.space().size()}};
}

Outcome run_orbits(const Options& o) {
  const auto g = make_group(o);
  const OrbitSpace space(g, o.n, cli::parse_subgroup(g, o.subgroup), o.tuple_cap);
  Outcome out;
  out.body["group"] = g.descriptor().to_string();
  out.body["n"] = o.n;
  out.body["subgroup"] = o.subgroup;
  out.body["verdicts"] = orbit_summary(space);
  out.passed = out.body["verdicts"]["sizes_divide_subgroup_order"].get<bool>() &&
               out.body["verdicts"]["sizes_sum_to_tuple_count"].get<bool>();
  out.summary = std::to_string(space.orbit_count()) + " orbits of |S| = " +
                std::to_string(space.subgroup().size()) + " on " +
                std::to_string(space.space().size()) + " tuples";
  return out;
}

Outcome run_kernel_criterion(const Options& o) {
  const auto g = make_group(o);
  const OrbitSpace space(g, o.n, cli::parse_subgroup(g, o.subgroup), o.tuple_cap);
  const auto sigmas = cli::resolve_sigma(o.sigma.empty() ? "conj" : o.sigma, o.n);
  Outcome out;
  auto rows = Json::array();
  for (const auto& [name, sigma] : sigmas) {
    const auto r = lemma_kernel_criterion(sigma, space);
    const auto note = categorical_quotient_note(sigma, space);
    out.passed = out.passed && r.consistent && note.agree;
    Json row{{"name", name},
             {"sigma", sigma.to_string()},
             {"in_kernel", r.in_kernel},
             {"orbit_permutation_trivial", r.orbit_permutation_trivial},
             {"consistent", r.consistent},
             {"closed_orbit_form_agrees", note.agree},
             {"tuples_checked", r.tuples_checked}};
    row["uniform_witness"] = r.uniform_witness ? cli::matrix_json(*r.uniform_witness) : Json(nullptr);
    rows.push_back(row);
    out.summary += name + ": in_kernel=" + (r.in_kernel ? "true" : "false") + ", orbits " +
                   (r.orbit_permutation_trivial ? "fixed" : "moved") + "\n";
  }
  out.body["group"] = g.descriptor().to_string();
  out.body["n"] = o.n;
  out.body["subgroup"] = o.subgroup;
  out.body["orbit_count"] = space.orbit_count();
  out.body["verdicts"] = rows;
  return out;
}

Outcome run_power_scan(const Options& o) {
  const auto g = make_group(o);
  std::vector<Matrix> targets;
  if (o.s.empty() || o.s == "all") {
    targets = g.elements();
  } else {
    targets.push_back(cli::parse_matrix(g, Json::parse(o.s)));
  }
  Outcome out;
  auto rows = Json::array();
  std::uint64_t exponent = g.exponent();
  for (const auto& s : targets) {
    const auto r = power_identity_cascade(g, s);
    // a noncentral s admits no power d at all
    const bool noncentral_ok = r.central || r.powers.empty();
    out.passed = out.passed && r.cascade_holds && noncentral_ok;
    rows.push_back({{"s", cli::matrix_json(s)},
                    {"central", r.central},
                    {"order", r.order},
                    {"powers", r.powers},
                    {"cascade_holds", r.cascade_holds},
                    {"noncentral_has_no_power", noncentral_ok}});
  }
  out.body["group"] = g.descriptor().to_string();
  out.body["exponent"] = exponent;
  out.body["verdicts"] = rows;
  out.summary = std::to_string(targets.size()) + " elements scanned, exponent " +
                std::to_string(exponent);
  return out;
}

/// w0 != -1 exactly for A_l (l >= 2), D_l (l odd) and E6.
bool expected_minus_one(weyl::CartanType t) {
  if (t.series == 'A')
    return t.rank == 1;
  if (t.series == 'D')
    return t.rank % 2 == 0;
  if (t.series == 'E')
    return t.rank != 6;
  return true;
}

Json weyl_row(weyl::CartanType t, bool& ok) {
  const auto rs = weyl::build_root_system(t);
  const auto w0 = weyl::longest_element(rs);
  const bool minus_one = w0.is_minus_identity();
  const bool expected = expected_minus_one(t);
  ok = ok && minus_one == expected && w0.word.size() == rs.positive_roots.size();
  return {{"factor", t.to_string()},
          {"minus_one", minus_one},
          {"positive_roots", rs.positive_roots.size()},
          {"w0_length", w0.word.size()},
          {"expected_minus_one", expected},
          {"verdict", minus_one ? "w0 = -1" : "w0 != -1: inversion descends nontrivially"}};
}

Outcome run_weyl_classify(const Options& o) {
  std::vector<weyl::CartanType> factors;
  std::string_view rest = o.factors;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    factors.push_back(weyl::CartanType::parse(rest.substr(0, comma)));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
  }
  const auto result = weyl::classify_factors(factors);
  Outcome out;
  auto rows = Json::array();
  for (const auto& f : factors)
    rows.push_back(weyl_row(f, out.passed));
  out.body["factors"] = rows;
  out.body["embedding_for_n1"] = result.embedding_for_n1;
  out.body["witnessing_factor"] =
      result.witnessing_factor ? Json(result.witnessing_factor->to_string()) : Json(nullptr);
  out.body["verdicts"] = {{"table_matches_rule", out.passed}};
  out.summary = result.embedding_for_n1
                    ? "embedding for n = 1 via " + result.witnessing_factor->to_string()
                    : "no factor with w0 != -1";
  return out;
}

Outcome run_weyl_table(const Options& o) {
  Outcome out;
  auto rows = Json::array();
  std::string falses;
  for (const auto& t : weyl::irreducible_types(o.max_rank)) {
    auto row = weyl_row(t, out.passed);
    if (!row["minus_one"].get<bool>())
      falses += (falses.empty() ? "" : ",") + t.to_string();
    rows.push_back(std::move(row));
  }
  out.body["max_rank"] = o.max_rank;
  out.body["table"] = rows;
  out.body["verdicts"] = {{"table_matches_rule", out.passed}};
  out.summary = "w0 != -1 for: " + falses;
  return out;
}

Outcome run_braid_verify(const Options& o) {
  Outcome out;
  auto rows = Json::array();
  for (int rank = 2; rank <= o.n; ++rank) {
    const auto failures = artin_relation_failures(rank);
    bool witnesses = true;
    for (int i = 1; i < rank; ++i) {
      const auto b = braid_generator(rank, i);
      witnesses = witnesses && compose(b, b.inverse()).is_identity() &&
                  compose(b.inverse(), b).is_identity();
    }
    const bool ok = failures.empty() && witnesses;
    out.passed = out.passed && ok;
    rows.push_back({{"rank", rank},
                    {"failed_relations", failures},
                    {"inverse_witnesses_valid", witnesses},
                    {"passed", ok}});
    out.summary += "B_" + std::to_string(rank) + ": " + yes_no(ok) + "\n";
  }
  out.body["max_rank"] = o.n;
  out.body["verdicts"] = rows;
  return out;
}

Outcome run_embed_verify(const Options& o) {
  const int target = o.target > 0 ? o.target : o.n + 2;
  std::mt19937_64 rng(o.seed);
  std::uint64_t failures = 0;
  for (std::uint64_t k = 0; k < o.samples; ++k) {
    const auto sigma = random_automorphism(o.n, rng);
    const auto tau = random_automorphism(o.n, rng);
    const auto lhs = embed_aut(compose(sigma, tau), target);
    const auto rhs = compose(embed_aut(sigma, target), embed_aut(tau, target));
    const bool inv_ok = compose(embed_aut(sigma, target), embed_aut(sigma, target).inverse())
                            .is_identity();
    if (!(lhs == rhs) || !inv_ok)
      ++failures;
  }
  Outcome out;
  out.mode = SearchMode::sampled;
  out.passed = failures == 0;
  out.body["source_rank"] = o.n;
  out.body["target_rank"] = target;
  out.body["verdicts"] = {{"pairs", o.samples}, {"failures", failures}, {"passed", out.passed}};
  out.summary = std::to_string(o.samples) + " pairs, " + std::to_string(failures) + " failures";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using Handler = std::function<Outcome(const Options&)>;
  struct Command {
    std::string name;
    std::string description;
    Handler handler;
  };
  const std::vector<Command> commands = {
      {"eval", "evaluate a word on a tuple", run_eval},
      {"compose", "compose two endomorphisms and check the action", run_compose},
      {"props", "run the law suite", run_props},
      {"kernel-witness", "nonidentity automorphism acting trivially on a solvable G", run_kernel_witness},
      {"faithful-search", "find x with sigma_X(x) != x", run_faithful_search},
      {"orbits", "diagonal-conjugation orbit space", run_orbits},
      {"kernel-criterion", "kernel test on the orbit space", run_kernel_criterion},
      {"power-scan", "power identities g^d = s g s^-1", run_power_scan},
      {"weyl-classify", "does a product of Cartan types have a factor with w0 != -1", run_weyl_classify},
      {"weyl-table", "w0 = -1 table over irreducible types", run_weyl_table},
      {"braid-verify", "Artin relations in Aut(F_n)", run_braid_verify},
      {"embed-verify", "embedding Aut(F_n) into Aut(F_m) preserves composition", run_embed_verify},
  };

  Options o;
  CLI::App app{"Word maps on finite matrix groups"};
  app.require_subcommand(1);
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, description, handler] : commands) {
    auto* sub = app.add_subcommand(name, description);
    sub->add_option("--group", o.group, "G, e.g. SL2:p=5, GL:s=2,p=2, Borel:s=2,p=5");
    sub->add_option("--n", o.n, "tuple length / free group rank");
    sub->add_option("--word", o.word, "word such as \"f1 f2^-1\"");
    sub->add_option("--tuple", o.tuple, "JSON array of matrices");
    sub->add_option("--sigma", o.sigma, "endomorphism file, inline JSON/text or builtin");
    sub->add_option("--tau", o.tau, "second endomorphism for compose");
    sub->add_option("--subgroup", o.subgroup, "all | trivial | center | gen:<json> | elements:<json>");
    sub->add_option("--s", o.s, "group element as JSON matrix, or 'all'");
    sub->add_option("--laws", o.laws, "law letters to run");
    sub->add_option("--tower", o.tower, "kernel-witness tower word: derived | theta");
    sub->add_option("--factors", o.factors, "comma-separated Cartan types");
    sub->add_option("--seed", o.seed, "RNG seed");
    sub->add_option("--budget", o.budget, "tuples examined by faithful-search");
    sub->add_option("--samples", o.samples, "random instances");
    sub->add_option("--cap", o.cap, "enumeration cap (overrides WORDMAP_CAP)");
    sub->add_option("--tuple-cap", o.tuple_cap, "largest |G|^n handled exhaustively");
    sub->add_option("--max-rank", o.max_rank, "largest rank in weyl-table");
    sub->add_option("--target", o.target, "target rank for embed-verify");
    sub->add_option("--threads", o.threads, "worker threads (0 = hardware)");
    subs[name] = sub;
  }

  if (argc >= 2) {
    const std::string first = argv[1];
    const bool known = subs.count(first) || first == "-h" || first == "--help";
    if (!known) {
      Json err{{"error", {{"kind", "unknown-subcommand"}, {"message", "unknown subcommand '" + first + "'"}}}};
      std::cout << err.dump(2) << '\n';
      std::cerr << "unknown subcommand '" << first << "'\n";
      return 2;
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string command;
  Handler handler;
  for (const auto& [name, description, h] : commands)
    if (subs[name]->parsed()) {
      command = name;
      handler = h;
    }
  o.cap_given = subs[command]->count("--cap") > 0;
  if (o.threads > 0)
    set_worker_count(o.threads);

  const auto start = std::chrono::steady_clock::now();
  Json report;
  report["command"] = command;
  report["seed"] = o.seed;
  report["mode"] = to_string(SearchMode::exhaustive);
  int exit_code = 0;
  try {
    auto out = handler(o);
    report["mode"] = to_string(out.mode);
    for (auto& [key, value] : out.body.items())
      report[key] = value;
    report["passed"] = out.passed;
    exit_code = out.passed ? 0 : 1;
    std::cerr << command << ": " << (out.passed ? "all verdicts pass" : "some verdicts FAIL") << '\n'
              << out.summary << (out.summary.ends_with('\n') ? "" : "\n");
  } catch (const Error& e) {
    report["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    std::cerr << command << ": error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    exit_code = 1;
  } catch (const std::exception& e) {
    report["error"] = {{"kind", "parse-error"}, {"message", e.what()}};
    std::cerr << command << ": error: " << e.what() << '\n';
    exit_code = 1;
  }
  const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  report["timing_ms"] = static_cast<std::int64_t>(elapsed.count());
  std::cout << report.dump(2) << '\n';
  return exit_code;
}
