#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordmap/matrix.hpp"

namespace wordmap {

enum class Family { gl, sl2, borel, unipotent };

std::string_view to_string(Family f) noexcept;

/// Names one of the concrete matrix groups: GL_s(F_p), SL_2(F_p), the upper
/// triangular Borel subgroup of GL_s, or its unitriangular subgroup.
struct GroupDescriptor {
  Family family = Family::gl;
  int dim = 2;
  std::uint32_t p = 2;

  /// Grammar: "SL2:p=5", "GL:s=3,p=2", "Borel:s=2,p=5", "Unipotent:s=3,p=3".
  static GroupDescriptor parse(std::string_view text);
  std::string to_string() const;
  /// Throws Error(invalid_descriptor).
  void validate() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

inline constexpr std::size_t kDefaultEnumerationCap = 200'000;

/// Finite set of matrices kept sorted for lookup and deterministic output.
class Subgroup {
 public:
  Subgroup() = default;
  /// Takes any element list; sorts and deduplicates.
  explicit Subgroup(std::vector<Matrix> elements);

  const std::vector<Matrix>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(const Matrix& m) const;
  bool is_trivial() const noexcept { return elements_.size() <= 1; }

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  std::vector<Matrix> elements_;
};

/// Closure of gens under multiplication; always contains identity.
Subgroup generate_subgroup(const Matrix& identity, std::span<const Matrix> gens);

/// True when the finite set is closed under multiplication (hence a group).
bool is_closed(std::span<const Matrix> elements);

/// Small generating set found greedily in sorted element order.
std::vector<Matrix> generating_set(const Subgroup& h);

/// [H, H] as the normal closure of commutators of generators.
Subgroup commutator_subgroup(const Subgroup& h);

/**
 * Handle on a concrete finite matrix group.
 *
 * Copies share an immutable cache holding the element list, center and
 * derived series; each is computed at most once and on first request.
 */
class Group {
 public:
  explicit Group(GroupDescriptor descriptor,
                 std::size_t enumeration_cap = kDefaultEnumerationCap);
  static Group parse(std::string_view text, std::size_t enumeration_cap = kDefaultEnumerationCap) {
    return Group(GroupDescriptor::parse(text), enumeration_cap);
  }

  const GroupDescriptor& descriptor() const noexcept { return descriptor_; }
  int dim() const noexcept { return descriptor_.dim; }
  std::uint32_t modulus() const noexcept { return descriptor_.p; }
  std::size_t enumeration_cap() const noexcept { return cap_; }

  /// |G| from the closed-form count, saturating at UINT64_MAX.
  std::uint64_t order() const noexcept;
  bool enumerable() const noexcept { return order() <= cap_; }

  Matrix identity() const { return Matrix::identity(descriptor_.dim, descriptor_.p); }
  bool contains(const Matrix& m) const;
  /// Builds an element from row-major entries; throws if not in G.
  Matrix element(std::span<const std::int64_t> row_major) const;
  Matrix random_element(std::mt19937_64& rng) const;
  std::uint64_t element_order(const Matrix& g) const;

  /// Sorted list of all elements. Throws Error(cap_exceeded).
  const std::vector<Matrix>& elements() const;
  /// Position in elements().
  std::size_t index_of(const Matrix& g) const;

  const std::vector<Matrix>& center() const;
  bool is_central(const Matrix& g) const;
  /// D^0 = G, D^{i+1} = [D^i, D^i], until it stabilizes.
  const std::vector<Subgroup>& derived_series() const;
  /// Least s with D^s = {e}; nullopt when G is not solvable.
  std::optional<int> derived_length() const;
  bool is_solvable() const { return derived_length().has_value(); }
  /// lcm of element orders.
  std::uint64_t exponent() const;

 private:
  void require_enumerable() const;

  struct Cache;
  GroupDescriptor descriptor_;
  std::size_t cap_;
  std::shared_ptr<Cache> cache_;
};

}  // namespace wordmap
