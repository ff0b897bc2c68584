#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "octavian/rational.hpp"
#include "octavian/reflection.hpp"

namespace octavian {

/// Octonion with big-integer coordinates; projective orbits can leave the
/// int64 range, so the plane works over GMP throughout.
using BigOct = std::array<BigInt, 8>;

[[nodiscard]] BigOct big_mul(const BigOct& a, const BigOct& b);
[[nodiscard]] BigOct big_conj(const BigOct& a);

/// 3x3 octonion matrix with a shared positive integer denominator.
struct HermMat {
  std::array<std::array<BigOct, 3>, 3> e{};
  BigInt den = 1;

  [[nodiscard]] static HermMat identity();
  [[nodiscard]] bool is_hermitian() const;
  [[nodiscard]] BigInt trace_num() const;  // trace is real for hermitian
  [[nodiscard]] bool operator==(const HermMat& o) const;
};

/// Fixed-order product: out[j][m] = sum_k a[j][k] * b[k][m].
[[nodiscard]] HermMat mat_mul(const HermMat& a, const HermMat& b);
[[nodiscard]] HermMat mat_add(const HermMat& a, const HermMat& b);

/// Point of the plane: primitive integer hermitian matrix P with
/// P^2 = trace(P) P, positive trace, canonical up to nothing (the scale and
/// sign are fixed), so equality of points is equality of matrices.
struct ProjPoint {
  std::array<std::array<BigOct, 3>, 3> m{};
  BigInt trace;  // sum of the (real) diagonal entries

  [[nodiscard]] bool operator==(const ProjPoint& o) const { return m == o.m; }
  [[nodiscard]] bool operator<(const ProjPoint& o) const;
  [[nodiscard]] bool is_real() const;  // all entries real
  [[nodiscard]] std::uint64_t hash() const;
};

/// Canonicalize a hermitian matrix into a point; certifies the projector
/// law P^2 = tr(P) P exactly and throws std::invalid_argument otherwise.
[[nodiscard]] ProjPoint canonical_point(const HermMat& m);

/// The point [r] for a non-generic triple in doubled coordinates.
[[nodiscard]] ProjPoint project_vector(const LatticeVector& r);

/// I - 2[r] as an exact hermitian matrix (A^2 = I).
[[nodiscard]] HermMat reflection_action(const LatticeVector& r);

/// A(pA) with the (Ap)A agreement certified exactly on every call; the
/// result is canonicalized and re-certified as a projector.
[[nodiscard]] ProjPoint reflect_point(const HermMat& a, const ProjPoint& p);

/// Re tr(pq) for unit-trace scalings of the points; lands in [0,1], with 0
/// meaning orthogonal and 1 meaning equal.
[[nodiscard]] Rational trace_inner(const ProjPoint& p, const ProjPoint& q);

struct PointOrbit {
  std::vector<ProjPoint> points;  // sorted when closed
  bool exceeded_cap = false;      // closure abandoned past the cap
};

/// Orbit closure of the seeds; cap exceedance is reported as data, not an
/// error (some chain orbits do not close at all).
[[nodiscard]] PointOrbit point_orbit_closure(const std::vector<HermMat>& gens,
                                             const std::vector<ProjPoint>& seeds,
                                             std::int64_t cap = 100000);

/// Binary search; the list must be sorted (orbit closures are).
[[nodiscard]] int point_index(const std::vector<ProjPoint>& points,
                              const ProjPoint& p);

/// Jordan frames inside the (sorted) point set: unordered triples {p, q, s}
/// of pairwise-orthogonal points with p + q + s = identity (exact rational
/// matrix sum). Returned as sorted index triples, sorted overall.
[[nodiscard]] std::vector<std::array<int, 3>> jordan_frames(
    const std::vector<ProjPoint>& points);

struct PolygonCheck {
  bool ok = false;
  int s = 0;         // points per line - 1
  int t = 0;         // lines per point - 1
  int gon = 0;       // n: incidence graph has diameter n and girth 2n
  std::string failure;  // empty when ok
};

/// Generalized-polygon test of the point/line incidence structure.
[[nodiscard]] PolygonCheck generalized_polygon_check(
    int point_count, const std::vector<std::array<int, 3>>& lines);

/// Which orbit of quadruples yields the hexagonal plane: builds the plane
/// for one representative of each quad orbit and reports per-orbit results.
struct SteinerSelection {
  int hexagonal_orbit = -1;              // index into quad_orbits
  std::array<bool, 3> closed{};          // orbit closed under the cap
  std::array<std::int64_t, 3> points{};  // point count when closed
  std::array<bool, 3> hexagon{};         // closed and Gh(2,8)
};

[[nodiscard]] SteinerSelection select_hexagonal_steiner(
    const IntOct& lambda2, std::int64_t cap = 4000);

/// Vector side and projective side of the chain construction in one bundle.
struct ConstructionReport {
  ChainReport chain;
  bool cap_exceeded = false;
  std::int64_t point_count = 0;
  std::int64_t line_count = 0;
  PolygonCheck polygon;
};

[[nodiscard]] ConstructionReport common_construction(
    int k, const std::vector<int>& lambda_indices, const IntOct& lambda2,
    CertificationMode mode, std::uint64_t seed = 0x0c7a71a5u,
    std::int64_t vector_cap = 10000000, std::int64_t point_cap = 100000);

}  // namespace octavian
