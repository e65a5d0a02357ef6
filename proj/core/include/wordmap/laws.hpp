#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "wordmap/endomorphism.hpp"
#include "wordmap/group.hpp"
#include "wordmap/word_map.hpp"

namespace wordmap {

/// The eight structural laws satisfied by the word maps sigma_X.
enum class Law { a, b, c, d, e, f, g, h };

char to_char(Law law) noexcept;
/// Accepts 'a'..'h'; throws Error(invalid_argument).
Law parse_law(char c);
inline constexpr Law kAllLaws[] = {Law::a, Law::b, Law::c, Law::d, Law::e, Law::f, Law::g, Law::h};

/// A group homomorphism G -> H used for the equivariance law.
struct Homomorphism {
  std::string name;
  std::function<Matrix(const Matrix&)> map;
};

/// det: G -> GL_1(F_p).
Homomorphism determinant_hom();
/// Diagonal part of an upper triangular matrix (Borel -> torus).
Homomorphism diagonal_hom();
/// g -> h g h^-1.
Homomorphism inner_hom(const Matrix& h);

// Single-instance checks. Each returns true when the law holds on the inputs.

/// (a) apply(compose(sigma, tau), x) == apply(tau, apply(sigma, x)).
bool check_anti_homomorphism(const Endomorphism& sigma, const Endomorphism& tau,
                             std::span<const Matrix> x);
/// (b) the identity endomorphism acts as the identity.
bool check_identity_law(std::span<const Matrix> x);
/// (c) x in S^n implies sigma_X(x) in S^n. Inputs outside S^n are rejected.
bool check_subgroup_preservation(const Endomorphism& sigma, std::span<const Matrix> x,
                                 const std::function<bool(const Matrix&)>& in_subgroup);
/// (e) gamma_n . sigma_X == sigma_Y . gamma_n.
bool check_equivariance(const Endomorphism& sigma, std::span<const Matrix> x,
                        const Homomorphism& gamma);
/// (f) sigma_X(x z) == sigma_X(x) sigma_X(z) and sigma_X(z) central, for z central.
bool check_center_law(const Group& group, const Endomorphism& sigma, std::span<const Matrix> x,
                      std::span<const Matrix> z);
/// (g) sigma_X(g x g^-1) == g sigma_X(x) g^-1.
bool check_conjugation_law(const Endomorphism& sigma, std::span<const Matrix> x, const Matrix& g);
/// (h) finite analog of regularity: sigma_X is a total map G^n -> G^n.
bool check_morphism_law(const Group& group, const Endomorphism& sigma, std::span<const Matrix> x);

/// Common fixed points of the Nielsen generators on G^n.
struct FixedSetReport {
  int n = 0;
  SearchMode mode = SearchMode::exhaustive;
  std::uint64_t examined = 0;
  /// Tuples fixed by every generator (exhaustive mode: all of them).
  std::uint64_t fixed_count = 0;
  /// Tuples predicted: only (e,...,e) when n > 1, {g : g^2 = e} when n = 1.
  std::uint64_t predicted_count = 0;
  /// Every examined tuple is fixed iff it is predicted.
  bool matches = false;
  std::vector<Tuple> fixed;
};

/// Exhaustive when |G|^n <= tuple_cap, else `samples` random tuples.
FixedSetReport nielsen_fixed_set(const Group& group, int n, std::uint64_t tuple_cap,
                                 std::uint64_t samples, std::uint64_t seed);

struct LawReport {
  Law law = Law::a;
  bool passed = false;
  SearchMode mode = SearchMode::sampled;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
  std::string detail;
};

/// Runs one law on `samples` seeded random instances over G^n (law d uses
/// nielsen_fixed_set).
LawReport run_law(const Group& group, Law law, int n, std::uint64_t samples, std::uint64_t seed,
                  std::uint64_t tuple_cap = kDefaultTupleCap);

/// Random tuple of reduced words, up to max_syllables each.
Endomorphism random_endomorphism(int rank, std::mt19937_64& rng, int max_syllables = 6);
/// Random product of Nielsen generators and their inverses; carries a witness.
Endomorphism random_automorphism(int rank, std::mt19937_64& rng, int length = 6);
Tuple random_tuple(const Group& group, int n, std::mt19937_64& rng);

}  // namespace wordmap
