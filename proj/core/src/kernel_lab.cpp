#include "wordmap/kernel_lab.hpp"

#include <algorithm>
#include <random>

#include "wordmap/error.hpp"
#include "wordmap/laws.hpp"

namespace wordmap {

namespace {

bool fixes(const Endomorphism& sigma, std::span<const Matrix> x) {
  const auto y = wordmap::apply(sigma, x);
  return std::equal(y.begin(), y.end(), x.begin(), x.end());
}

}  // namespace

std::string_view to_string(Tower t) noexcept {
  return t == Tower::derived ? "derived" : "theta";
}

Tower parse_tower(std::string_view text) {
  if (text == "derived")
    return Tower::derived;
  if (text == "theta")
    return Tower::theta;
  throw Error(ErrorKind::parse_error, "tower must be 'derived' or 'theta'");
}

KernelWitnessReport kernel_witness_solvable(const Group& group, int n, std::uint64_t tuple_cap,
                                            std::uint64_t samples, std::uint64_t seed,
                                            Tower tower) {
  if (n < 3)
    throw Error(ErrorKind::invalid_argument, "the theta construction needs n >= 3");
  const auto length = group.derived_length();
  if (!length)
    throw Error(ErrorKind::not_solvable, group.descriptor().to_string() + " is nonsolvable");
  // trivial G has derived length 0; theta_1 already vanishes there
  const int s = std::max(1, *length);

  const Word t = tower == Tower::derived ? derived_word(n, s) : theta(n, s);
  auto [sigma, tau] = tail_kernel_pair(n, t);
  KernelWitnessReport report{sigma, tau, *length, tower, sigma.is_identity()};
  report.seed = seed;

  auto bad = [&](std::span<const Matrix> x) {
    return !evaluate(t, x).is_identity() || !fixes(sigma, x);
  };

  if (group.enumerable() && tuple_count(group.order(), n, tuple_cap)) {
    report.mode = SearchMode::exhaustive;
    TupleSpace space(group, n, tuple_cap);
    report.tuples_checked = space.size();
    report.counterexamples = space.count_if(bad);
  } else {
    report.mode = SearchMode::sampled;
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < samples; ++k)
      if (bad(random_tuple(group, n, rng)))
        ++report.counterexamples;
    report.tuples_checked = samples;
  }
  return report;
}

FaithfulnessResult faithfulness_search(const Group& group, const Endomorphism& sigma,
                                       std::uint64_t budget, std::uint64_t seed) {
  if (sigma.is_identity())
    throw Error(ErrorKind::invalid_argument, "faithfulness search needs sigma != 1");
  const int n = sigma.rank();
  FaithfulnessResult result;
  result.seed = seed;

  if (group.enumerable() && tuple_count(group.order(), n, budget)) {
    result.mode = SearchMode::exhaustive;
    TupleSpace space(group, n, budget);
    auto hit = space.find_first([&](std::span<const Matrix> x) { return !fixes(sigma, x); });
    result.examined = hit ? *hit + 1 : space.size();
    if (hit)
      result.witness = space.tuple(*hit);
  } else {
    result.mode = SearchMode::sampled;
    std::mt19937_64 rng(seed);
    for (std::uint64_t k = 0; k < budget; ++k) {
      auto x = random_tuple(group, n, rng);
      ++result.examined;
      if (!fixes(sigma, x)) {
        result.witness = std::move(x);
        break;
      }
    }
  }
  if (result.witness && fixes(sigma, *result.witness))
    throw Error(ErrorKind::well_definedness, "faithfulness witness failed re-verification");
  return result;
}

FaithfulnessSuiteReport generator_faithfulness_suite(
    const Group& group, const std::vector<std::pair<std::string, Endomorphism>>& generators,
    std::uint64_t budget, std::uint64_t seed) {
  if (generators.empty())
    throw Error(ErrorKind::invalid_argument, "generator list is empty");
  FaithfulnessSuiteReport report;
  report.all_nontrivial = true;
  for (const auto& [name, sigma] : generators) {
    auto r = faithfulness_search(group, sigma, budget, seed);
    report.all_nontrivial = report.all_nontrivial && r.found();
    report.generators.push_back({name, sigma, std::move(r)});
  }
  return report;
}

std::vector<std::pair<std::string, Endomorphism>> named_nielsen_generators(int n) {
  static const char* kNames[] = {"inversion", "swap", "cycle", "transvection"};
  std::vector<std::pair<std::string, Endomorphism>> out;
  auto gens = nielsen_generators(n);
  for (std::size_t i = 0; i < gens.size(); ++i)
    out.emplace_back(kNames[i], std::move(gens[i]));
  return out;
}

std::vector<std::pair<std::string, Endomorphism>> named_braid_generators(int n) {
  std::vector<std::pair<std::string, Endomorphism>> out;
  for (int i = 1; i < n; ++i)
    out.emplace_back("braid" + std::to_string(i), braid_generator(n, i));
  return out;
}

std::uint64_t count_non_involutions(const Group& group) {
  const auto& el = group.elements();
  return static_cast<std::uint64_t>(
      std::count_if(el.begin(), el.end(), [](const Matrix& g) { return !(g * g).is_identity(); }));
}

}  // namespace wordmap
