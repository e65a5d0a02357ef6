#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "wordmap/endomorphism.hpp"
#include "wordmap/free_group.hpp"
#include "wordmap/group.hpp"
#include "wordmap/matrix.hpp"

namespace wordmap {

/// Image of w under F_n -> G, f_j -> x[j-1]. Syllables are evaluated by
/// square-and-multiply, so long exponents cost O(log |e|).
Matrix evaluate(const Word& w, std::span<const Matrix> x);

/// sigma_X(x) = (sigma(f_1)(x), ..., sigma(f_n)(x)).
Tuple apply(const Endomorphism& sigma, std::span<const Matrix> x);

/// x in X_{w,a,i}, i.e. w(x) a^-1 x_i^-1 a = e. i is 1-based.
bool fixed_set_membership(const Word& w, const Matrix& a, int i, std::span<const Matrix> x);

/// g x g^-1 coordinatewise.
Tuple conjugate(const Matrix& g, std::span<const Matrix> x);

/// Coordinatewise product.
Tuple multiply(std::span<const Matrix> x, std::span<const Matrix> y);

enum class SearchMode { exhaustive, sampled };

std::string_view to_string(SearchMode m) noexcept;

/// Default bound on |G|^n for exhaustive passes over G^n.
inline constexpr std::uint64_t kDefaultTupleCap = 10'000'000;

/**
 * G^n enumerated in lexicographic order of element indices.
 *
 * The tuple with index k has coordinate j equal to the (k / |G|^(n-1-j) mod
 * |G|)-th element of G, so index order agrees with lexicographic order of
 * tuples under the matrix order.
 */
class TupleSpace {
 public:
  /// Throws Error(cap_exceeded) if |G| or |G|^n is above the caps.
  TupleSpace(const Group& group, int n, std::uint64_t tuple_cap = kDefaultTupleCap);

  const Group& group() const noexcept { return group_; }
  int n() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }

  Tuple tuple(std::uint64_t index) const;
  void decode(std::uint64_t index, std::span<std::size_t> digits) const;
  std::uint64_t encode(std::span<const std::size_t> digits) const;
  std::uint64_t index_of(std::span<const Matrix> x) const;

  /// Smallest index in [0, size) for which pred holds, scanning on worker
  /// threads. Deterministic regardless of the thread count.
  std::optional<std::uint64_t> find_first(
      const std::function<bool(std::span<const Matrix>)>& pred) const;
  /// Number of indices for which pred holds.
  std::uint64_t count_if(const std::function<bool(std::span<const Matrix>)>& pred) const;

 private:
  Group group_;
  int n_;
  std::uint64_t base_;
  std::uint64_t size_;
};

/// Returns |G|^n or nullopt on overflow past `cap`.
std::optional<std::uint64_t> tuple_count(std::uint64_t group_order, int n, std::uint64_t cap);

/// Worker threads used by exhaustive scans (hardware concurrency, at least 1).
unsigned worker_count() noexcept;
void set_worker_count(unsigned n) noexcept;

}  // namespace wordmap
