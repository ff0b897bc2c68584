#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "octavian/lattice.hpp"
#include "octavian/octonion.hpp"
#include "octavian/permgroup.hpp"
#include "octavian/rational.hpp"
#include "octavian/ring.hpp"

namespace octavian {

/// Exact triple from doubled coordinates (divides by 2).
[[nodiscard]] OctVector to_oct_vector(const LatticeVector& v);
/// classify_vector on doubled coordinates.
[[nodiscard]] VectorClass classify_triple(const LatticeVector& v);

/// 3x3 octonion matrix r†r / N(r) with a shared integer denominator:
/// entry (j,k) equals num[j][k] / den as an octonion with rational
/// coordinates. Hermitian with real trace 1 by construction.
struct HermitianProjector {
  std::array<std::array<IntOct, 3>, 3> num;
  std::int64_t den = 1;

  [[nodiscard]] bool operator==(const HermitianProjector& o) const {
    return den == o.den && num == o.num;
  }
};

/// [r] for a nonzero real/commutative/associative triple (doubled coords).
[[nodiscard]] HermitianProjector projector(const LatticeVector& r);

/// Exact linear map on doubled coordinates of O^3: v -> num*v / den,
/// normalized so gcd(num, den) = 1 and den > 0. The maps built here are
/// orthogonal, so transpose() is the inverse.
class LinearIsometry {
 public:
  [[nodiscard]] static LinearIsometry identity();
  /// x -> x(I - 2[r]) evaluated in the fixed order x_k * (conj(r_k) r_j).
  [[nodiscard]] static LinearIsometry reflection(const LatticeVector& r);
  [[nodiscard]] static LinearIsometry from_projector(
      const HermitianProjector& p);
  /// out block m = signs[m] * (input block perm[m]); signs in {+1,-1}.
  [[nodiscard]] static LinearIsometry coordinate_map(
      const std::array<int, 3>& perm, const std::array<int, 3>& signs);
  /// Blockwise left multiplication by a unit (doubled), x -> (u x_1, ...).
  [[nodiscard]] static LinearIsometry block_left_multiplication(
      const IntOct& u2);

  /// Exact image; throws std::domain_error if any coordinate of num*v is
  /// not divisible by den.
  [[nodiscard]] LatticeVector apply(const LatticeVector& v) const;
  /// Non-throwing variant: false iff the image is not integral.
  [[nodiscard]] bool apply_integral(const LatticeVector& v,
                                    LatticeVector* out) const;
  /// Composition: apply *this first, then next.
  [[nodiscard]] LinearIsometry then(const LinearIsometry& next) const;
  [[nodiscard]] LinearIsometry transpose() const;
  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] bool is_involution() const;
  /// M^T M == den^2 I: preserves the standard (hence the doubled) form.
  [[nodiscard]] bool preserves_gram() const;
  /// True when the map is a block permutation with signs (coordinate type).
  [[nodiscard]] bool is_coordinate_map() const;

  [[nodiscard]] bool operator==(const LinearIsometry& o) const {
    return den_ == o.den_ && num_ == o.num_;
  }
  [[nodiscard]] bool operator<(const LinearIsometry& o) const {
    return den_ != o.den_ ? den_ < o.den_ : num_ < o.num_;
  }

  [[nodiscard]] std::int64_t den() const { return den_; }
  [[nodiscard]] const std::array<std::array<std::int64_t, 24>, 24>& num()
      const {
    return num_;
  }

 private:
  LinearIsometry() = default;
  void normalize();

  std::array<std::array<std::int64_t, 24>, 24> num_{};
  std::int64_t den_ = 1;
};

/// Image of every basis vector lies in the lattice (exact). Together with
/// gram preservation this certifies a lattice automorphism.
[[nodiscard]] bool stabilizes_lattice(const LinearIsometry& m,
                                      const IntegerLattice& l);

/// Scan of the short vectors for commutative triples and the reflections
/// they define; shape breakdown of the reflective ones.
struct ShortVectorCensus {
  std::int64_t commutative = 0;     // expected 2520
  std::int64_t reflective = 0;      // expected 2352
  std::int64_t sign_type = 0;       // (2u,0,0): expected 720
  std::int64_t swap_type = 0;       // (s,±s,0): expected 1440
  std::int64_t mixed_type = 0;      // (±1,±1,λ'): expected 192
  std::int64_t unclassified = 0;    // reflective outside the three shapes
  std::vector<LatticeVector> mixed_vectors;  // sorted
};

[[nodiscard]] ShortVectorCensus census_commutative_short(
    const IntegerLattice& leech, const std::vector<LatticeVector>& shorts,
    const IntOct& lambda2);

/// The eight frame members λ' with λ' ≡ λ and Re(λ') = Re(λ), doubled,
/// in the canonical sorted order of the frame-stabilizer orbit.
[[nodiscard]] std::vector<IntOct> chain_lambdas(const IntOct& lambda2);

/// The defining triple {(2,0,0), (conj(λ'),0,conj(λ')), (1,1,λ')} in
/// doubled coordinates.
[[nodiscard]] std::vector<LatticeVector> chain_seed_vectors(
    const IntOct& lambda_prime2);

/// Sorted orbit closure of seed vectors under exact isometries, with
/// index lookup. Throws std::runtime_error when the closure exceeds cap.
struct VectorDomain {
  std::vector<LatticeVector> points;
  [[nodiscard]] int index_of(const LatticeVector& v) const;
};

[[nodiscard]] VectorDomain close_orbit(
    const std::vector<LinearIsometry>& gens,
    const std::vector<LatticeVector>& seeds,
    std::int64_t cap = 10000000);

/// Permutation induced on the domain; throws std::runtime_error if the map
/// does not stabilize it.
[[nodiscard]] Perm to_permutation(const LinearIsometry& m,
                                  const VectorDomain& d);

/// Greedy spanning subset of the domain: sound identity probe for
/// permutations induced by linear maps on the domain's span.
[[nodiscard]] IdentityProbe spanning_probe(const VectorDomain& d);

enum class CertificationMode {
  kDeterministic,        // full Schreier sweep
  kRandomized,           // certified lower bound only
  kRandomizedVerified,   // randomized warm start, then full sweep
};

struct ChainReport {
  int k = 0;
  std::vector<int> lambda_indices;           // into chain_lambdas order
  int generator_count = 0;                   // 3k reflections
  std::int64_t domain_size = 0;
  std::vector<std::int64_t> orbit_sizes;     // on the domain, descending
  BigInt group_order;
  BigInt quotient_order;                     // order / 2
  bool order_exact = false;                  // deterministic or verified
};

/// Reflection group of the union of the selected S-triples, acting on the
/// closure of its defining vectors.
[[nodiscard]] ChainReport suzuki_chain(int k,
                                       const std::vector<int>& lambda_indices,
                                       const IntOct& lambda2,
                                       CertificationMode mode,
                                       std::uint64_t seed = 0x0c7a71a5u,
                                       std::int64_t orbit_cap = 10000000);

/// Generators for the full automorphism group of the u = 1 Leech lattice.
/// Variant A: the 192 reflections in the short vectors (±1,±1,λ') over all
/// coordinate positions, signs, and the 16 frame members λ' ≡ λ.
/// Variant B: the 48 coordinate maps plus the 24 reflections (1,1,λ') with
/// λ' ≡ λ and Re(λ') = Re(λ).
[[nodiscard]] std::vector<LinearIsometry> co1_generators(char variant,
                                                         const IntOct& lambda2);

}  // namespace octavian
