#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wordmap/endomorphism.hpp"
#include "wordmap/group.hpp"
#include "wordmap/word_map.hpp"

namespace wordmap {

/// Checks closure of an explicit element list inside G and returns it as a
/// subgroup. Throws Error(not_subgroup).
Subgroup subgroup_from_elements(const Group& group, std::vector<Matrix> elements);
/// <gens> inside G.
Subgroup subgroup_from_generators(const Group& group, const std::vector<Matrix>& gens);

/**
 * Orbits of a finite subgroup S acting on G^n by diagonal conjugation.
 *
 * Orbit ids are assigned in increasing order of their representative, the
 * lexicographically least member.
 */
class OrbitSpace {
 public:
  OrbitSpace(const Group& group, int n, Subgroup subgroup,
             std::uint64_t tuple_cap = kDefaultTupleCap);

  const Group& group() const noexcept { return space_.group(); }
  int n() const noexcept { return space_.n(); }
  const Subgroup& subgroup() const noexcept { return subgroup_; }
  const TupleSpace& space() const noexcept { return space_; }

  std::size_t orbit_count() const noexcept { return representatives_.size(); }
  std::uint32_t orbit_of(std::uint64_t tuple_index) const { return orbit_of_.at(tuple_index); }
  std::uint32_t orbit_of(std::span<const Matrix> x) const { return orbit_of(space_.index_of(x)); }
  std::uint64_t representative(std::uint32_t orbit) const { return representatives_.at(orbit); }
  std::uint64_t orbit_size(std::uint32_t orbit) const { return sizes_.at(orbit); }
  const std::vector<std::uint64_t>& orbit_sizes() const noexcept { return sizes_; }

  /// Index of s . x for the k-th element s of S.
  std::uint64_t act(std::size_t k, std::uint64_t tuple_index) const;

 private:
  TupleSpace space_;
  Subgroup subgroup_;
  std::vector<std::vector<std::uint32_t>> conj_;  // conj_[k][g] = index of s_k g s_k^-1
  std::vector<std::uint32_t> orbit_of_;
  std::vector<std::uint64_t> representatives_;
  std::vector<std::uint64_t> sizes_;
};

/// Orbit permutation [x] -> [sigma_X(x)]. Requires an inverse witness;
/// throws Error(well_definedness) if some orbit is split by sigma_X.
std::vector<std::uint32_t> descended_action(const Endomorphism& sigma, const OrbitSpace& space);

bool is_identity_permutation(const std::vector<std::uint32_t>& perm) noexcept;

struct KernelCriterionReport {
  /// Every x lies in the union over s in S of the intersections of
  /// X_{sigma(f_i),s,i}; on a finite X this is exactly kernel membership.
  bool in_kernel = false;
  /// A single s with X = X_{sigma(f_1),s,1} = ... = X_{sigma(f_n),s,n}.
  std::optional<Matrix> uniform_witness;
  bool orbit_permutation_trivial = false;
  /// in_kernel agrees with the orbit permutation.
  bool consistent = false;
  std::uint64_t tuples_checked = 0;
};

KernelCriterionReport lemma_kernel_criterion(const Endomorphism& sigma, const OrbitSpace& space);

/// Integers d in [0, exponent(G)) with g^d = s g s^-1 for every g in G.
std::vector<std::uint64_t> power_identity_scan(const Group& group, const Matrix& s);

/// g^(d^r - 1) = e for all g. Throws Error(invalid_argument) when d^r - 1 = 0.
bool exponent_identity_check(const Group& group, std::int64_t d, int r);

/// Replays the power-identity cascade for one element s: every d found by
/// the scan must satisfy the exponent identity with r = ord(s).
struct PowerCascadeReport {
  Matrix s;
  bool central = false;
  std::uint64_t order = 0;
  std::uint64_t exponent = 0;
  std::vector<std::uint64_t> powers;
  /// True when every d != 1 in `powers` passes exponent_identity_check.
  bool cascade_holds = true;
};

PowerCascadeReport power_identity_cascade(const Group& group, const Matrix& s);

/// For finite S every orbit is closed, so the closed-orbit criterion and
/// the orbit criterion evaluate the same condition. Both are computed
/// separately and compared.
struct QuotientNote {
  bool closed_orbit_form = false;
  bool orbit_form = false;
  bool agree = false;
  bool uniform_witness_exists = false;
  std::size_t orbit_count = 0;
};

QuotientNote categorical_quotient_note(const Endomorphism& sigma, const OrbitSpace& space);

}  // namespace wordmap
