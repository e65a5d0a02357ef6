#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordmap/endomorphism.hpp"
#include "wordmap/group.hpp"
#include "wordmap/word_map.hpp"

namespace wordmap {

/// Word placed after f_n in the kernel witness.
enum class Tower {
  derived,  // derived_word: vanishes on every solvable G of derived length <= s
  theta,    // theta: iterated commutators, vanishes only when G is nilpotent of class <= s
};

std::string_view to_string(Tower t) noexcept;
Tower parse_tower(std::string_view text);

/// Certificate that a nonidentity automorphism acts trivially on G^n.
struct KernelWitnessReport {
  Endomorphism sigma;
  Endomorphism tau;
  int derived_length = 0;
  Tower tower = Tower::derived;
  bool sigma_is_identity = true;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t tuples_checked = 0;
  /// Tuples where sigma_X(x) != x or the tower word is not e. Zero for a valid run.
  std::uint64_t counterexamples = 0;
  std::uint64_t seed = 0;

  bool passed() const noexcept { return !sigma_is_identity && counterexamples == 0; }
};

/**
 * For solvable G of derived length s and n >= 3, builds sigma with
 * sigma(f_n) = f_n t_s for the chosen tower word t_s and checks sigma_X = id
 * on G^n, exhaustively when |G|^n <= tuple_cap and on `samples` random
 * tuples otherwise.
 *
 * Throws Error(not_solvable) for nonsolvable G and Error(invalid_argument)
 * for n < 3.
 */
KernelWitnessReport kernel_witness_solvable(const Group& group, int n,
                                            std::uint64_t tuple_cap = kDefaultTupleCap,
                                            std::uint64_t samples = 10'000,
                                            std::uint64_t seed = 0,
                                            Tower tower = Tower::derived);

struct FaithfulnessResult {
  std::optional<Tuple> witness;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t examined = 0;
  std::uint64_t seed = 0;

  bool found() const noexcept { return witness.has_value(); }
};

/**
 * Looks for x with sigma_X(x) != x. Exhaustive (in lexicographic order, so
 * the first witness is returned) when |G|^n <= budget and G is enumerable,
 * otherwise `budget` seeded random tuples. "Not found" in sampled mode says
 * nothing about triviality.
 */
FaithfulnessResult faithfulness_search(const Group& group, const Endomorphism& sigma,
                                       std::uint64_t budget, std::uint64_t seed = 0);

struct GeneratorResult {
  std::string name;
  Endomorphism sigma;
  FaithfulnessResult result;
};

struct FaithfulnessSuiteReport {
  std::vector<GeneratorResult> generators;
  /// True when every generator has a witness.
  bool all_nontrivial = false;
};

FaithfulnessSuiteReport generator_faithfulness_suite(
    const Group& group, const std::vector<std::pair<std::string, Endomorphism>>& generators,
    std::uint64_t budget, std::uint64_t seed = 0);

/// Named Nielsen generators of Aut(F_n): inversion, swap, cycle, transvection.
std::vector<std::pair<std::string, Endomorphism>> named_nielsen_generators(int n);
/// Artin generators sigma_1..sigma_{n-1}.
std::vector<std::pair<std::string, Endomorphism>> named_braid_generators(int n);

/// Elements with g^2 != e; the inversion f_1 -> f_1^-1 acts trivially on G
/// exactly when this is zero.
std::uint64_t count_non_involutions(const Group& group);

}  // namespace wordmap
