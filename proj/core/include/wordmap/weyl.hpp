#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wordmap::weyl {

/// Irreducible Cartan type and rank, e.g. {'E', 6}.
struct CartanType {
  char series = 'A';
  int rank = 1;

  /// "A2", "e6", "D5" (case-insensitive series letter).
  static CartanType parse(std::string_view text);
  std::string to_string() const;
  bool valid() const noexcept;

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Every valid irreducible type with rank <= max_rank, ordered by series then rank.
std::vector<CartanType> irreducible_types(int max_rank);

using IntVector = std::vector<int>;
using IntMatrix = std::vector<IntVector>;  // row-major

/**
 * Root system in the standard realization.
 *
 * Ambient vectors are stored doubled so that the half-integer coordinates of
 * E_8 (and its subsystems) and F_4 stay integral. Positive roots are also
 * kept as coefficient vectors over the simple roots.
 */
struct RootSystem {
  CartanType type;
  int ambient_dim = 0;
  std::vector<IntVector> simple_roots;        // doubled ambient coordinates
  IntMatrix cartan;                           // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<IntVector> positive_roots;      // simple-root coefficients
  std::vector<IntVector> positive_ambient;    // doubled ambient coordinates

  int rank() const noexcept { return type.rank; }
};

/// Throws Error(invalid_argument) for an invalid (series, rank) pair.
RootSystem build_root_system(CartanType type);

/// Weyl element acting on the root span, written in the simple-root basis.
/// Column j holds the coefficients of w(alpha_j).
struct WeylElement {
  IntMatrix matrix;
  std::vector<int> word;  // simple reflection indices, 0-based, w = s_{word[0]} ... s_{word[k-1]}

  bool is_minus_identity() const;
};

/// Matrix of the simple reflection s_i in the simple-root basis.
IntMatrix simple_reflection(const RootSystem& rs, int i);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector apply(const IntMatrix& m, const IntVector& v);
/// Nonzero vector with all entries >= 0.
bool is_positive(const IntVector& coefficients);

enum class TieBreak { lowest_index, highest_index };

/// Longest element w_0: grows w by simple reflections s_i with w(alpha_i)
/// positive until every simple root is sent negative.
WeylElement longest_element(const RootSystem& rs, TieBreak tie = TieBreak::lowest_index);

/// True iff w_0 = -1 on the root span.
bool minus_one_in_weyl(CartanType type);

struct ClassificationResult {
  bool embedding_for_n1 = false;
  std::optional<CartanType> witnessing_factor;
};

/// Inversion acts faithfully on the conjugation quotient (n = 1) iff some
/// simple factor has w_0 != -1.
ClassificationResult classify_factors(const std::vector<CartanType>& factors);

}  // namespace wordmap::weyl
