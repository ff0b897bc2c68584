#pragma once

#include <cstdint>
#include <vector>

#include "octavian/enumerate.hpp"
#include "octavian/octonion.hpp"
#include "octavian/permgroup.hpp"
#include "octavian/rational.hpp"

namespace octavian {

/// Vector in O^n (n blocks of 8): doubled standard coordinates, length 8n.
using LatticeVector = std::vector<std::int64_t>;

enum class Side { kLeftMultiples, kRightMultiples };  // sO vs Os
enum class Translation { kLeft, kRight, kBoth };      // L_u, R_u, B_u = L_u R_u

/// A full-rank sublattice L with 2O^n <= L <= O^n (every lattice this
/// workbench touches is of that kind; the constructor certifies it). The
/// canonical identity of such a lattice is its image in O^n/2O^n: a subspace
/// of F2^(8n) stored as reduced-echelon bit rows. Equality, membership,
/// intersection and sum run on the image and lift; metric questions (Gram,
/// determinant, enumeration) run on an explicit integer basis.
class IntegerLattice {
 public:
  static IntegerLattice from_basis(int n, std::vector<LatticeVector> rows);
  static IntegerLattice full_ring(int n);     // O^n
  static IntegerLattice doubled_ring(int n);  // 2O^n
  /// lift a residue subspace (echelon rows) to the lattice it cuts out
  static IntegerLattice from_image(int n, std::vector<std::uint32_t> rows);

  [[nodiscard]] int blocks() const { return n_; }
  [[nodiscard]] int dim() const { return 8 * n_; }
  [[nodiscard]] const std::vector<LatticeVector>& basis2() const {
    return basis_;
  }
  /// reduced-echelon rows of the F2 image, highest pivot first
  [[nodiscard]] const std::vector<std::uint32_t>& image() const {
    return image_;
  }
  [[nodiscard]] int image_dim() const { return static_cast<int>(image_.size()); }

  [[nodiscard]] IntGram gram2() const;  // doubled inner products <b_i, b_j>
  [[nodiscard]] BigInt gram2_det() const;
  /// w.r.t. the Euclidean form (1/2)<x,y>: integral, even diagonal, det 1
  [[nodiscard]] bool is_even_unimodular() const;

  [[nodiscard]] bool contains(const LatticeVector& v) const;
  [[nodiscard]] bool contains(const IntegerLattice& m) const;
  [[nodiscard]] bool operator==(const IntegerLattice& m) const {
    return n_ == m.n_ && image_ == m.image_;
  }
  [[nodiscard]] bool operator!=(const IntegerLattice& m) const {
    return !(*this == m);
  }
  [[nodiscard]] IntegerLattice intersect(const IntegerLattice& m) const;
  [[nodiscard]] IntegerLattice sum(const IntegerLattice& m) const;

  /// least nonzero N = (1/2)<v,v>; searches 1..limit, throws past the limit
  [[nodiscard]] int min_norm(int limit = 8) const;
  /// complete enumeration at exactly the target norm, sorted, negation-closed
  [[nodiscard]] std::vector<LatticeVector> short_vectors(int target_norm,
                                                         int threads = 1) const;

 private:
  IntegerLattice(int n, std::vector<LatticeVector> basis,
                 std::vector<std::uint32_t> image)
      : n_(n), basis_(std::move(basis)), image_(std::move(image)) {}

  int n_ = 1;
  std::vector<LatticeVector> basis_;
  std::vector<std::uint32_t> image_;
};

/// residue word of v in F2^(8n): bit 8m+j is alpha-coordinate j of block m
[[nodiscard]] std::uint32_t reduce_word(int n, const LatticeVector& v);

/// the E8 sublattice sO (left multiples) or Os (right multiples), N(s) = 2
[[nodiscard]] IntegerLattice e8_sublattice(Side side, const IntOct& s2);

/// membership by exact division: v in Os iff (v sbar)/2 in O, and v in sO
/// iff (sbar v)/2 in O
[[nodiscard]] bool multiple_contains(Side side, const IntOct& s2,
                                     const IntOct& v2);

/// Lambda(Phi, Psi) = {(a,b,c) : a+b, b+c, a+c in Phi, a+b+c in Psi} with
/// basis rows (x_i, x_i, 0), (0, x_i, x_i), (y_i, y_i, y_i); requires both
/// even unimodular with Phi + Psi = O and Phi ^ Psi = 2O
[[nodiscard]] IntegerLattice leech_from_pair(const IntegerLattice& phi,
                                             const IntegerLattice& psi);

/// L_u Lambda(conj(lambda), lambda) for a unit u and lambda a zero of
/// x^2 + x + 2; equals Lambda(u-bar lambda-bar, u-bar lambda)
[[nodiscard]] IntegerLattice leech_lambda(const IntOct& u2,
                                          const IntOct& lambda2);

[[nodiscard]] IntOct translate2(Translation kind, const IntOct& u2,
                                const IntOct& x2);
[[nodiscard]] LatticeVector translate2(Translation kind, const IntOct& u2,
                                       const LatticeVector& v);
[[nodiscard]] IntegerLattice translate(Translation kind, const IntOct& u2,
                                       const IntegerLattice& l);

/// X_u as a permutation of the 240 units (indices per Ring::units2 order)
[[nodiscard]] Perm translation_permutation(Translation kind, const IntOct& u2);

/// the group generated by all L_u, R_u, B_u on the 240 units, exact order
[[nodiscard]] PermGroup translation_group();

struct ShortVectorSet {
  int target_norm = 0;
  std::vector<LatticeVector> vectors;  // sorted, closed under negation
};

[[nodiscard]] ShortVectorSet short_vector_set(const IntegerLattice& l,
                                              int target_norm,
                                              int threads = 1);

}  // namespace octavian
