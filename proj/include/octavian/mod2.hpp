#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <vector>

#include "octavian/octonion.hpp"

namespace octavian {

inline constexpr int kNorm2Classes = 135;

// A strongly regular graph on the 135 norm-2 residue classes. Parameters are
// established by exhaustive counting over all vertex pairs at construction;
// `strongly_regular` records whether the counts were consistent.
struct Srg {
  std::array<std::uint8_t, kNorm2Classes> vertices{};  // residues, ascending
  std::array<std::bitset<kNorm2Classes>, kNorm2Classes> adj{};
  int v = 0;
  int k = -1;
  int lambda = -1;
  int mu = -1;
  bool strongly_regular = false;

  [[nodiscard]] bool adjacent(int i, int j) const { return adj[i][j]; }
  [[nodiscard]] std::int64_t directed_edges() const;
};

// The finite ring O/2O. A residue is packed into one byte: its coordinates
// over the alpha-basis reduced mod 2 (so addition of residues is XOR).
// Multiplication is induced from the ring; each residue carries a canonical
// minimal-norm representative (0, a unit, or a norm-2 vector, lex-least in
// doubled coordinates) through which the induced operations are evaluated.
class Mod2 {
 public:
  static const Mod2& instance();

  [[nodiscard]] int min_norm(std::uint8_t c) const { return min_norm_[c]; }
  [[nodiscard]] const IntOct& representative2(std::uint8_t c) const {
    return rep2_[c];
  }
  // counts of residues with minimal norm 0, 1, 2
  [[nodiscard]] std::array<std::int64_t, 3> class_histogram() const;

  [[nodiscard]] std::uint8_t mul(std::uint8_t a, std::uint8_t b) const {
    return mul_[a][b];
  }

  // the 135 norm-2 residues in increasing byte order, and the inverse map
  [[nodiscard]] const std::array<std::uint8_t, kNorm2Classes>& norm2_classes()
      const {
    return norm2_classes_;
  }
  [[nodiscard]] int norm2_index(std::uint8_t c) const {
    return norm2_index_[c];
  }

  // all 16 norm-2 representatives of a norm-2 class (doubled coordinates);
  // throws std::invalid_argument if min_norm(c) != 2
  [[nodiscard]] const std::vector<IntOct>& frame2(std::uint8_t c) const;

  // parity of <x,y> on representatives (well defined on classes)
  [[nodiscard]] bool inner_even(std::uint8_t a, std::uint8_t b) const;

  // vertices = norm-2 classes; edge iff <x,y> even / iff N(x+y) odd
  [[nodiscard]] const Srg& isotropic_graph() const { return even_graph_; }
  [[nodiscard]] const Srg& odd_sum_graph() const { return odd_graph_; }

  // maximal cliques of the isotropic graph (pivoting Bron--Kerbosch);
  // each clique is a sorted list of vertex indices, the list itself sorted
  [[nodiscard]] std::vector<std::vector<int>> maximal_cliques() const;

  // F2-image in O/2O of the sublattice sO (s_on_left) or Os, for a norm-2
  // class c with representative s: the span of the reduced products with the
  // alpha basis. Sorted, contains 0, size 16 (a 4-dimensional subspace).
  [[nodiscard]] std::vector<std::uint8_t> multiple_image(std::uint8_t c,
                                                         bool s_on_left) const;

 private:
  Mod2();

  std::array<int, 256> min_norm_{};
  std::array<int, 256> norm2_index_{};
  std::array<IntOct, 256> rep2_{};
  std::array<std::uint8_t, kNorm2Classes> norm2_classes_{};
  std::array<std::vector<IntOct>, kNorm2Classes> frames_{};
  std::array<std::array<std::uint8_t, 256>, 256> mul_{};
  Srg even_graph_, odd_graph_;
};

}  // namespace octavian
