#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wordmap/free_group.hpp"

namespace wordmap {

/**
 * Endomorphism of F_n given by the images of f_1..f_n.
 *
 * An endomorphism may carry an inverse witness: the image list of a second
 * endomorphism tau with sigma∘tau = tau∘sigma = 1. Automorphism status is
 * only ever established through such a witness.
 */
class Endomorphism {
 public:
  Endomorphism(int rank, std::vector<Word> images);

  static Endomorphism identity(int rank);

  int rank() const noexcept { return rank_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  /// Image of f_index, 1-based.
  const Word& image(int index) const;

  bool has_inverse() const noexcept { return inverse_.has_value(); }
  /// Throws Error(not_invertible) when no witness is stored.
  Endomorphism inverse() const;
  /// Attaches an inverse witness after checking both compositions.
  Endomorphism with_inverse(std::vector<Word> inverse_images) const;

  bool is_identity() const;

  /// "[f1 f2, f2]"
  std::string to_string() const;
  static Endomorphism parse(std::string_view text);

  /// {"rank": n, "images": [[[g, e], ...], ...], "inverse": [...]?}
  std::string to_json() const;
  static Endomorphism from_json(std::string_view json);

  /// Equality of image tuples; the witness does not participate.
  friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return a.rank_ == b.rank_ && a.images_ == b.images_;
  }

 private:
  friend Endomorphism compose(const Endomorphism&, const Endomorphism&);
  static Endomorphism trusted(int rank, std::vector<Word> images,
                              std::vector<Word> inverse_images);
  friend Endomorphism transvection(int, int, int);
  friend std::pair<Endomorphism, Endomorphism> tail_kernel_pair(int, const Word&);
  friend std::pair<Endomorphism, Endomorphism> conjugation_pair(int);
  friend std::vector<Endomorphism> nielsen_generators(int);
  friend Endomorphism braid_generator(int, int);
  friend Endomorphism embed_aut(const Endomorphism&, int);

  int rank_;
  std::vector<Word> images_;
  std::optional<std::vector<Word>> inverse_;
};

/// w with every f_j replaced by images[j-1].
Word substitute(const Word& w, std::span<const Word> images);

/// (sigma∘tau)(f_i) = sigma(tau(f_i)). On tuples this reads
/// apply(compose(sigma, tau), x) = apply(tau, apply(sigma, x)).
Endomorphism compose(const Endomorphism& sigma, const Endomorphism& tau);

/// f_i -> f_i f_j, other generators fixed.
Endomorphism transvection(int rank, int i, int j);

/// (sigma, tau) with sigma(f_n) = f_n theta_s, tau(f_n) = f_n theta_s^-1.
std::pair<Endomorphism, Endomorphism> theta_kernel_pair(int rank, int s);
/// Same shape with derived_word(rank, s) in place of theta_s.
std::pair<Endomorphism, Endomorphism> derived_kernel_pair(int rank, int s);
/// (sigma, tau) with sigma(f_n) = f_n t, tau(f_n) = f_n t^-1 for a nonempty t in f_1, f_2.
std::pair<Endomorphism, Endomorphism> tail_kernel_pair(int rank, const Word& t);

/// sigma(f_i) = f_1 f_i f_1^-1 for i > 1, tau the f_1^-1 (.) f_1 analog.
std::pair<Endomorphism, Endomorphism> conjugation_pair(int rank);

/// Inversion of f_1, then (rank >= 2) swap f_1 <-> f_2, cyclic shift
/// f_i -> f_{i+1}, and transvection f_1 -> f_1 f_2.
std::vector<Endomorphism> nielsen_generators(int rank);

/// Artin generator: f_i -> f_i f_{i+1} f_i^-1, f_{i+1} -> f_i.
Endomorphism braid_generator(int rank, int i);

/// Aut(F_s) -> Aut(F_n): images re-ranked, f_{s+1}..f_n fixed.
Endomorphism embed_aut(const Endomorphism& sigma, int target_rank);

/// Artin relations among braid_generator(rank, 1..rank-1) that fail as exact
/// image equalities, labelled "i,j". Empty when B_rank acts correctly.
std::vector<std::string> artin_relation_failures(int rank);

}  // namespace wordmap
