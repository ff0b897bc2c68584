#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "octavian/projective.hpp"
#include "octavian/ring.hpp"

using namespace octavian;

namespace {

const IntOct& lambda2_default() {
  static IntOct l2 = to_int_oct(Ring::instance().lambda_zeros().front(), 2);
  return l2;
}

const std::vector<IntOct>& lams() {
  static std::vector<IntOct> v = chain_lambdas(lambda2_default());
  return v;
}

IntOct real2(std::int64_t m) {
  IntOct r{};
  r[0] = 2 * m;
  return r;
}

LatticeVector triple(const IntOct& a, const IntOct& b, const IntOct& c) {
  LatticeVector v(24, 0);
  for (int i = 0; i < 8; ++i) {
    v[i] = a[i];
    v[8 + i] = b[i];
    v[16 + i] = c[i];
  }
  return v;
}

BigOct big_real(long v) {
  BigOct b{};
  b[0] = v;
  return b;
}

BigOct big_of(const IntOct& a) {
  BigOct b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<long>(a[i]);
  return b;
}

// Generators and seeds of the k-th chain plane, as in the construction
// routine: reflections and projectors of the seed vectors of lambda_0..k-1.
void chain_plane(int k, std::vector<HermMat>* gens,
                 std::vector<ProjPoint>* seeds,
                 std::vector<LatticeVector>* vecs = nullptr) {
  for (int idx = 0; idx < k; ++idx)
    for (const auto& s : chain_seed_vectors(lams()[idx])) {
      gens->push_back(reflection_action(s));
      seeds->push_back(project_vector(s));
      if (vecs) vecs->push_back(s);
    }
}

struct Plane {
  PointOrbit orbit;
  std::vector<std::array<int, 3>> frames;
};

const Plane& plane21() {
  static Plane p = [] {
    Plane pl;
    std::vector<HermMat> gens;
    std::vector<ProjPoint> seeds;
    chain_plane(1, &gens, &seeds);
    pl.orbit = point_orbit_closure(gens, seeds);
    pl.frames = jordan_frames(pl.orbit.points);
    return pl;
  }();
  return p;
}

std::set<std::pair<int, int>> collinear_pairs(
    const std::vector<std::array<int, 3>>& frames) {
  std::set<std::pair<int, int>> out;
  for (const auto& f : frames)
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        out.emplace(std::min(f[a], f[b]), std::max(f[a], f[b]));
  return out;
}

}  // namespace

TEST_CASE("projective points are certified unit projectors") {
  const IntOct& l2 = lambda2_default();
  const IntOct lb2 = conj(l2);

  // [(2,0,0)] is the first diagonal idempotent whatever the unit in front.
  ProjPoint d0 = project_vector(triple(real2(2), real2(0), real2(0)));
  CHECK(d0.trace == 1);
  CHECK(d0.is_real());
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      CHECK(d0.m[j][k] == (j == 0 && k == 0 ? big_real(1) : BigOct{}));

  // [(lb,0,lb)] has a real matrix even though the vector entries are not
  // real octonions: every product lb'*lb collapses to the norm.
  LatticeVector vl = triple(lb2, real2(0), lb2);
  CHECK(classify_triple(vl) == VectorClass::kCommutative);
  ProjPoint pl = project_vector(vl);
  CHECK(pl.trace == 2);
  CHECK(pl.is_real());
  for (int j : {0, 2})
    for (int k : {0, 2}) CHECK(pl.m[j][k] == big_real(1));
  CHECK(pl.m[1][1] == BigOct{});
  CHECK(pl.m[0][1] == BigOct{});

  // [(1,1,l)] keeps octonion entries; the primitive scale is trace 8.
  ProjPoint pq = project_vector(triple(real2(1), real2(1), l2));
  CHECK(pq.trace == 8);
  CHECK_FALSE(pq.is_real());
  CHECK(pq.m[0][0] == big_real(2));
  CHECK(pq.m[0][1] == big_real(2));
  CHECK(pq.m[0][2] == big_of(l2));
  CHECK(pq.m[2][0] == big_of(conj(l2)));
  CHECK(pq.m[2][2] == big_real(4));

  // Scale and global sign wash out in canonicalization.
  HermMat h;
  h.den = 6;
  h.e[0][0] = big_real(-3);  // diag(-1/2, 0, 0)
  CHECK(canonical_point(h) == d0);

  // Rank-two and non-hermitian matrices are rejected.
  HermMat r2 = HermMat::identity();
  r2.e[2][2] = BigOct{};
  CHECK_THROWS_AS((void)canonical_point(r2), std::invalid_argument);
  HermMat nh;
  nh.e[0][1] = big_real(1);
  nh.e[0][0] = big_real(1);
  CHECK_THROWS_AS((void)canonical_point(nh), std::invalid_argument);
  HermMat zero;
  CHECK_THROWS_AS((void)canonical_point(zero), std::invalid_argument);

  // Points of a generic triple do not exist: i_0, i_1, i_2 span no
  // quaternion subalgebra, so their associator is nonzero.
  IntOct u0{}, u1{}, u2{};
  u0[1] = u1[2] = u2[3] = 2;
  CHECK(classify_triple(triple(u0, u1, u2)) == VectorClass::kGeneric);
  CHECK_THROWS_AS((void)project_vector(triple(u0, u1, u2)),
                  std::invalid_argument);
}

TEST_CASE("hermitian reflection actions match the vector reflections") {
  std::vector<HermMat> gens;
  std::vector<ProjPoint> seeds;
  std::vector<LatticeVector> svecs;
  chain_plane(1, &gens, &seeds, &svecs);

  for (const auto& s : svecs) {
    HermMat a = reflection_action(s);
    CHECK(a.is_hermitian());
    CHECK(mat_mul(a, a) == HermMat::identity());
    // W_r fixes the point [r] (the vector goes to -r).
    CHECK(reflect_point(a, project_vector(s)) == project_vector(s));
  }

  // The 3x3 hermitian action is the shadow of the 24-dimensional one:
  // reflecting the projector equals projecting the reflected vector.
  std::vector<LinearIsometry> vgens;
  for (const auto& s : svecs) vgens.push_back(LinearIsometry::reflection(s));
  VectorDomain dom = close_orbit(vgens, svecs);
  REQUIRE(dom.points.size() == 42);

  std::mt19937 rng(0x9a7b3e1u);
  std::uniform_int_distribution<int> pick_v(0, 41);
  std::uniform_int_distribution<int> pick_g(0, (int)svecs.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    LatticeVector v = dom.points[pick_v(rng)];
    ProjPoint p = project_vector(v);
    for (int step = 0; step < 4; ++step) {
      int g = pick_g(rng);
      v = vgens[g].apply(v);
      p = reflect_point(gens[g], p);
      CHECK(p == project_vector(v));
    }
  }
}

TEST_CASE("trace inner products give exact point angles") {
  const IntOct& l2 = lambda2_default();
  ProjPoint d0 = project_vector(triple(real2(2), real2(0), real2(0)));
  ProjPoint d1 = project_vector(triple(real2(0), real2(2), real2(0)));
  ProjPoint pl = project_vector(triple(conj(l2), real2(0), conj(l2)));

  CHECK(trace_inner(d0, d0) == Rational(1));
  CHECK(trace_inner(d0, d1) == Rational(0));
  // Two seed points of the same plane at angle 1/2: the three-valued angle
  // spectrum below is forced, not an artifact of the orbit choice.
  CHECK(trace_inner(d0, pl) == Rational(1, 2));
  CHECK(trace_inner(pl, d0) == Rational(1, 2));

  const Plane& pl21 = plane21();
  REQUIRE(pl21.orbit.points.size() == 21);
  const auto collinear = collinear_pairs(pl21.frames);

  std::map<Rational, int> angles;
  for (int i = 0; i < 21; ++i)
    for (int j = i + 1; j < 21; ++j) {
      Rational a = trace_inner(pl21.orbit.points[i], pl21.orbit.points[j]);
      CHECK(a >= 0);
      CHECK(a < 1);  // distinct points are never at angle 1
      angles[a]++;
      // orthogonal is the same thing as collinear in these planes
      CHECK((a == 0) == (collinear.count({i, j}) > 0));
    }
  REQUIRE(angles.size() == 3);
  CHECK(angles[Rational(0)] == 42);
  CHECK(angles[Rational(1, 2)] == 84);
  CHECK(angles[Rational(1, 4)] == 84);
}

TEST_CASE("jordan frames are orthogonal decompositions of the identity") {
  const Plane& pl = plane21();
  REQUIRE(pl.frames.size() == 14);

  std::vector<int> per_point(21, 0);
  for (const auto& f : pl.frames) {
    CHECK(f[0] < f[1]);
    CHECK(f[1] < f[2]);
    for (int a = 0; a < 3; ++a) {
      per_point[f[a]]++;
      for (int b = a + 1; b < 3; ++b)
        CHECK(trace_inner(pl.orbit.points[f[a]], pl.orbit.points[f[b]]) ==
              Rational(0));
    }
    // unit-trace scalings sum to the identity, entry by entry
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        for (int x = 0; x < 8; ++x) {
          Rational sum(0);
          for (int a = 0; a < 3; ++a) {
            const ProjPoint& p = pl.orbit.points[f[a]];
            sum += Rational(p.m[r][c][x]) / Rational(p.trace);
          }
          CHECK(sum == (r == c && x == 0 ? Rational(1) : Rational(0)));
        }
  }
  for (int i = 0; i < 21; ++i) CHECK(per_point[i] == 2);  // t + 1 = 2

  // The three diagonal idempotents alone already form one frame.
  std::vector<ProjPoint> diag;
  for (int pos = 0; pos < 3; ++pos) {
    IntOct a = real2(0), b = real2(0), c = real2(0);
    (pos == 0 ? a : pos == 1 ? b : c) = real2(2);
    diag.push_back(project_vector(triple(a, b, c)));
  }
  std::sort(diag.begin(), diag.end());  // frame search binary-searches
  auto mini = jordan_frames(diag);
  REQUIRE(mini.size() == 1);
  CHECK(mini[0] == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("degenerate incidence structures are rejected with reasons") {
  using Lines = std::vector<std::array<int, 3>>;

  PolygonCheck c = generalized_polygon_check(0, {});
  CHECK_FALSE(c.ok);
  CHECK(c.failure == "empty geometry");

  c = generalized_polygon_check(2, Lines{{0, 1, 2}});
  CHECK_FALSE(c.ok);
  CHECK(c.failure == "line references a missing point");

  c = generalized_polygon_check(4, Lines{{0, 1, 2}, {0, 1, 3}});
  CHECK_FALSE(c.ok);
  CHECK(c.failure == "points lie on different numbers of lines");

  c = generalized_polygon_check(3, Lines{{0, 1, 2}});
  CHECK_FALSE(c.ok);
  CHECK(c.failure == "thin geometry: a point on fewer than two lines");

  c = generalized_polygon_check(
      6, Lines{{0, 1, 2}, {0, 1, 2}, {3, 4, 5}, {3, 4, 5}});
  CHECK_FALSE(c.ok);
  CHECK(c.failure == "incidence graph is disconnected");

  // The Pasch configuration is connected and uniform but has girth 6
  // against diameter 4.
  c = generalized_polygon_check(
      6, Lines{{0, 1, 2}, {0, 3, 4}, {5, 1, 3}, {5, 2, 4}});
  CHECK_FALSE(c.ok);
  CHECK(c.failure == "incidence girth is not twice the diameter");

  // Sanity passes: a doubled line is a digon, the Fano plane a triangle.
  c = generalized_polygon_check(3, Lines{{0, 1, 2}, {0, 1, 2}});
  CHECK(c.ok);
  CHECK(c.s == 2);
  CHECK(c.t == 1);
  CHECK(c.gon == 2);

  Lines fano;
  for (int t = 0; t < 7; ++t)
    fano.push_back({t, (t + 1) % 7, (t + 3) % 7});
  c = generalized_polygon_check(7, fano);
  CHECK(c.ok);
  CHECK(c.s == 2);
  CHECK(c.t == 2);
  CHECK(c.gon == 3);
}

TEST_CASE("chain orbits close into nested generalized hexagons") {
  std::array<PointOrbit, 3> orbits;
  std::array<std::vector<std::array<int, 3>>, 3> frames;
  const std::array<std::size_t, 3> want_points = {21, 63, 819};
  const std::array<std::size_t, 3> want_lines = {14, 63, 2457};
  const std::array<int, 3> want_t = {1, 2, 8};

  for (int k = 1; k <= 3; ++k) {
    std::vector<HermMat> gens;
    std::vector<ProjPoint> seeds;
    chain_plane(k, &gens, &seeds);
    orbits[k - 1] = point_orbit_closure(gens, seeds);
    CHECK_FALSE(orbits[k - 1].exceeded_cap);
    REQUIRE(orbits[k - 1].points.size() == want_points[k - 1]);
    CHECK(std::is_sorted(orbits[k - 1].points.begin(),
                         orbits[k - 1].points.end()));

    frames[k - 1] = jordan_frames(orbits[k - 1].points);
    CHECK(frames[k - 1].size() == want_lines[k - 1]);

    PolygonCheck c = generalized_polygon_check(
        (int)orbits[k - 1].points.size(), frames[k - 1]);
    CHECK(c.ok);
    CHECK(c.s == 2);
    CHECK(c.t == want_t[k - 1]);
    CHECK(c.gon == 6);

    int real_points = 0;
    for (const auto& p : orbits[k - 1].points) real_points += p.is_real();
    CHECK(real_points == 9);  // same real core at every stage
  }

  // Gh(2,1) ⊂ Gh(2,2) ⊂ Gh(2,8) as point sets.
  for (const auto& p : orbits[0].points)
    CHECK(point_index(orbits[1].points, p) >= 0);
  for (const auto& p : orbits[1].points)
    CHECK(point_index(orbits[2].points, p) >= 0);
  int fresh = 0;
  for (const auto& p : orbits[1].points)
    fresh += point_index(orbits[0].points, p) < 0;
  CHECK(fresh == 42);

  // Orthogonal still means collinear out at 819 points (sampled).
  const auto collinear = collinear_pairs(frames[2]);
  std::mt19937 rng(0x819819u);
  std::uniform_int_distribution<int> pick(0, 818);
  for (int trial = 0; trial < 300; ++trial) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    Rational a = trace_inner(orbits[2].points[i], orbits[2].points[j]);
    CHECK((a == 0) == (collinear.count({i, j}) > 0));
  }

  // A cap below the orbit size is reported as data, not an error.
  std::vector<HermMat> gens;
  std::vector<ProjPoint> seeds;
  chain_plane(1, &gens, &seeds);
  PointOrbit capped = point_orbit_closure(gens, seeds, 10);
  CHECK(capped.exceeded_cap);
}

TEST_CASE("the nine real points carry the signed coordinate group") {
  const Plane& pl = plane21();
  std::vector<LinearIsometry> vgens;
  std::vector<LatticeVector> svecs;
  for (const auto& s : chain_seed_vectors(lams()[0])) {
    vgens.push_back(LinearIsometry::reflection(s));
    svecs.push_back(s);
  }
  VectorDomain dom = close_orbit(vgens, svecs);

  // Each real point is the projector of a domain vector whose reflection
  // is a signed coordinate permutation.
  std::vector<int> real_idx;
  std::vector<LinearIsometry> refl;
  std::vector<HermMat> racts;
  for (int i = 0; i < (int)pl.orbit.points.size(); ++i) {
    if (!pl.orbit.points[i].is_real()) continue;
    real_idx.push_back(i);
    bool found = false;
    for (const auto& v : dom.points) {
      if (project_vector(v) == pl.orbit.points[i]) {
        refl.push_back(LinearIsometry::reflection(v));
        racts.push_back(reflection_action(v));
        found = true;
        break;
      }
    }
    CHECK(found);
  }
  REQUIRE(real_idx.size() == 9);
  for (const auto& w : refl) CHECK(w.is_coordinate_map());

  // Their closure is the full signed coordinate group of order 48.
  std::set<LinearIsometry> group(refl.begin(), refl.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<LinearIsometry> cur(group.begin(), group.end());
    for (const auto& a : cur)
      for (const auto& g : refl)
        if (group.insert(a.then(g)).second) grew = true;
  }
  CHECK(group.size() == 48);
  for (const auto& g : group) CHECK(g.is_coordinate_map());

  // Under that group the plane splits 3 + 6 + 12 with the reals = 3 + 6.
  std::multiset<std::size_t> split;
  std::set<int> seen;
  for (int i = 0; i < (int)pl.orbit.points.size(); ++i) {
    if (seen.count(i)) continue;
    PointOrbit sub = point_orbit_closure(racts, {pl.orbit.points[i]}, 1000);
    REQUIRE_FALSE(sub.exceeded_cap);
    split.insert(sub.points.size());
    bool real_orbit = pl.orbit.points[i].is_real();
    for (const auto& p : sub.points) {
      CHECK(p.is_real() == real_orbit);
      int j = point_index(pl.orbit.points, p);
      REQUIRE(j >= 0);
      seen.insert(j);
    }
  }
  CHECK(split == std::multiset<std::size_t>{3, 6, 12});
}

TEST_CASE("one quadruple orbit is hexagonal and the others diverge") {
  const Ring& ring = Ring::instance();
  FrameStabilizer fs =
      ring.frame_stabilizer(to_octonion(lambda2_default(), 2));
  REQUIRE(fs.quad_orbits.size() == 3);
  CHECK(fs.quad_orbits[0].size() == 14);
  CHECK(fs.quad_orbits[1].size() == 14);
  CHECK(fs.quad_orbits[2].size() == 42);

  SteinerSelection sel = select_hexagonal_steiner(lambda2_default());
  CHECK(sel.hexagonal_orbit == 1);
  CHECK_FALSE(sel.closed[0]);
  CHECK(sel.closed[1]);
  CHECK_FALSE(sel.closed[2]);
  CHECK(sel.points[0] == 0);
  CHECK(sel.points[1] == 819);
  CHECK(sel.points[2] == 0);
  CHECK_FALSE(sel.hexagon[0]);
  CHECK(sel.hexagon[1]);
  CHECK_FALSE(sel.hexagon[2]);
}

TEST_CASE("construction reports bundle the chain with its plane") {
  const IntOct& l2 = lambda2_default();

  ConstructionReport r1 = common_construction(
      1, {0}, l2, CertificationMode::kDeterministic);
  CHECK(r1.chain.k == 1);
  CHECK(r1.chain.group_order == 336);
  CHECK(r1.chain.quotient_order == 168);
  CHECK(r1.chain.order_exact);
  CHECK_FALSE(r1.cap_exceeded);
  CHECK(r1.point_count == 21);
  CHECK(r1.line_count == 14);
  CHECK(r1.polygon.ok);
  CHECK(r1.polygon.t == 1);
  CHECK(r1.polygon.gon == 6);

  ConstructionReport r2 = common_construction(
      2, {0, 1}, l2, CertificationMode::kDeterministic);
  CHECK(r2.chain.group_order == 12096);
  CHECK(r2.point_count == 63);
  CHECK(r2.line_count == 63);
  CHECK(r2.polygon.ok);
  CHECK(r2.polygon.t == 2);

  // Exhausting the point cap is reported, with the geometry left empty.
  ConstructionReport capped = common_construction(
      1, {0}, l2, CertificationMode::kDeterministic, 0x0c7a71a5u, 10000000,
      5);
  CHECK(capped.cap_exceeded);
  CHECK(capped.point_count == 0);
  CHECK_FALSE(capped.polygon.ok);
}
