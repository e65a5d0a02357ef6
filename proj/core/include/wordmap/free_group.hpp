#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordmap {

/// One run f_generator^exponent of a word. Generators are 1-based.
struct Syllable {
  int generator = 1;
  std::int64_t exponent = 1;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

/// Default upper bound on the number of syllables a word may hold.
inline constexpr std::size_t kDefaultWordSyllableCap = 1'000'000;

/// Process-wide syllable cap. Operations producing longer words throw
/// Error(word_overflow).
std::size_t word_syllable_cap() noexcept;
void set_word_syllable_cap(std::size_t cap) noexcept;

/**
 * Reduced word in the free group F_n, stored in run-length form.
 *
 * Adjacent syllables always have distinct generators and nonzero
 * exponents, so two words are equal as group elements iff they compare
 * equal here. The rank is part of the value; binary operations reject
 * words of different rank.
 */
class Word {
 public:
  /// The empty word of the given rank.
  explicit Word(int rank);

  /// Reduces an arbitrary syllable sequence (zero exponents allowed).
  static Word reduce(int rank, std::span<const Syllable> raw);
  static Word generator(int rank, int index, std::int64_t exponent = 1);

  int rank() const noexcept { return rank_; }
  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  std::size_t syllable_count() const noexcept { return syllables_.size(); }
  bool empty() const noexcept { return syllables_.empty(); }

  /// Number of letters f_k^{+-1} when written out in full.
  std::uint64_t letter_length() const noexcept;
  /// Largest generator index occurring, 0 for the empty word.
  int max_generator() const noexcept;

  Word operator*(const Word& other) const;
  Word& operator*=(const Word& other);
  Word inverse() const;
  Word pow(std::int64_t exponent) const;

  /// Same word regarded as an element of F_{new_rank}.
  Word with_rank(int new_rank) const;

  /// Text form "f1 f2^-1 f1^2"; the empty word prints as "1".
  std::string to_string() const;
  static Word parse(std::string_view text, int rank);

  friend bool operator==(const Word&, const Word&) = default;

 private:
  void push(const Syllable& s);

  int rank_;
  std::vector<Syllable> syllables_;
};

Word commutator(const Word& a, const Word& b);

/// Commutator tower: theta_1 = [f1,f2], theta_i = [theta_{i-1}, f_d] with
/// d = 1 for even i and d = 2 for odd i. Lies in the i-th derived subgroup
/// of F_rank.
Word theta(int rank, int i);

/// Derived-series tower: delta_1 = [f1,f2], delta_i = [delta_{i-1}, f_d delta_{i-1} f_d^-1]
/// with d as for theta. delta_i lies in the i-th derived subgroup of F_rank, so
/// delta_s(x) = e on every group of derived length <= s.
Word derived_word(int rank, int i);

}  // namespace wordmap
