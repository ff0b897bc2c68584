#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "octavian/octonion.hpp"
#include "octavian/permgroup.hpp"

namespace octavian {

/// Ring automorphism stored as the doubled images of the eight basis units,
/// so that all arithmetic is machine-integer exact (every image has
/// half-integer coordinates).
struct RingAut {
  std::array<IntOct, 8> im2;

  static RingAut identity();
  /// x ↦ (w̄ x) w, an algebra automorphism whenever w³ is real.
  static RingAut conjugation_by(const Octonion& w);
  /// The involution fixing the quaternion subalgebra of the canonical basic
  /// triple and negating its orthogonal complement.
  static RingAut flip();
  static RingAut from_basis_images(const std::array<Octonion, 8>& images);

  [[nodiscard]] IntOct apply2(const IntOct& x2) const;
  [[nodiscard]] Octonion apply(const Octonion& x) const;
  /// this followed by next.
  [[nodiscard]] RingAut then(const RingAut& next) const;
  [[nodiscard]] RingAut inverse() const;
  [[nodiscard]] bool operator==(const RingAut& o) const { return im2 == o.im2; }
  [[nodiscard]] bool operator<(const RingAut& o) const { return im2 < o.im2; }
  /// Multiplicativity on all 64 basis pairs plus preservation of 1. Says
  /// nothing about preserving the integer ring; that is a separate check.
  [[nodiscard]] bool is_algebra_automorphism() const;
};

/// The ten norm-1/norm-2 orbit classes, keyed by (2·Re, N) i.e. by the
/// monic quadratic x² − 2Re·x + N the element satisfies.
struct NormClass {
  int two_re = 0;
  int norm = 0;
  [[nodiscard]] std::string polynomial() const;
  [[nodiscard]] bool operator==(const NormClass& o) const {
    return two_re == o.two_re && norm == o.norm;
  }
};

/// Fixed class order used by every census report.
const std::array<NormClass, 10>& norm_class_order();

struct FrameStabilizer {
  std::vector<RingAut> generators;     // deduplicated Schreier generators
  PermGroup on_units;                  // faithful action on the 240 units
  std::vector<Octonion> lambda_orbit;  // sorted; expected size 8
  // Orbits on 4-subsets of the 8 frame representatives sharing Re(λ),
  // each quad a sorted index quadruple into lambda_orbit; orbits sorted by
  // (size, first member). Expected sizes 14, 14, 42.
  std::vector<std::vector<std::array<int, 4>>> quad_orbits;
  std::vector<std::int64_t> subset_orbit_counts;  // orbit counts for k=1..4
};

/// The canonical octonion integer ring: α-basis, membership, unit census,
/// and the ring automorphism machinery.
class Ring {
 public:
  static const Ring& instance();

  const std::array<Octonion, 8>& alphas() const { return alphas_; }
  const std::array<IntOct, 8>& alphas2() const { return alphas2_; }
  /// ⟨α_i, α_j⟩ — the E8 Cartan matrix for this basis.
  const std::array<std::array<std::int64_t, 8>, 8>& gram() const {
    return gram_;
  }

  [[nodiscard]] bool contains(const Octonion& x) const;
  [[nodiscard]] std::array<Rational, 8> alpha_coords(const Octonion& x) const;
  /// α-coordinates mod 2 packed into a byte; bit j = coordinate of α_{j+1}.
  [[nodiscard]] std::uint8_t reduce(const Octonion& x) const;
  [[nodiscard]] std::uint8_t reduce2(const IntOct& x2) const;

  /// ω_r = ½(−1 + i_0 + i_r + i_{3r}), r ∈ {1,2,4}.
  [[nodiscard]] Octonion omega(int r) const;

  const std::vector<Octonion>& units() const { return units_; }
  const std::vector<Octonion>& roots2() const { return roots2_; }
  const std::vector<IntOct>& units2() const { return units2_; }
  [[nodiscard]] int unit_index2(const IntOct& x2) const;  // -1 if absent

  /// Class of a norm-1/2 ring element; throws outside that domain.
  [[nodiscard]] NormClass classify(const Octonion& x) const;
  [[nodiscard]] std::array<std::int64_t, 10> census_histogram() const;

  /// All 576 zeros of x² + x + 2, sorted lexicographically by coordinates.
  const std::vector<Octonion>& lambda_zeros() const { return lambda_zeros_; }

  /// 56 order-3 conjugations followed by the flip.
  const std::vector<RingAut>& aut_generators() const { return aut_gens_; }
  [[nodiscard]] Perm unit_permutation(const RingAut& a) const;
  [[nodiscard]] PermGroup aut_group() const;
  [[nodiscard]] PermGroup conjugation_group() const;
  /// Orbit size of the canonical basic triple (i_2, i_3, i_4) under the
  /// generators, acting on ordered unit triples.
  [[nodiscard]] std::int64_t basic_triple_orbit_size() const;

  [[nodiscard]] FrameStabilizer frame_stabilizer(const Octonion& lambda) const;

 private:
  Ring();
  std::array<Octonion, 8> alphas_;
  std::array<IntOct, 8> alphas2_;
  std::array<std::array<std::int64_t, 8>, 8> gram_;
  std::array<std::array<std::int64_t, 8>, 8> gram_inv_;
  std::vector<Octonion> units_, roots2_, lambda_zeros_;
  std::vector<IntOct> units2_;
  std::vector<RingAut> aut_gens_;
};

/// Derives the standard basis determined by a basic triple; throws
/// std::invalid_argument naming the violated requirement otherwise.
std::array<Octonion, 8> standard_basis_from_triple(const Octonion& i,
                                                   const Octonion& j,
                                                   const Octonion& l);

}  // namespace octavian
