#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "octavian/lattice.hpp"
#include "octavian/mod2.hpp"
#include "octavian/octonion.hpp"
#include "octavian/permgroup.hpp"
#include "octavian/ring.hpp"

using namespace octavian;

namespace {

// random ring element, doubled coordinates
IntOct random_elt2(std::mt19937_64& rng, int span) {
  const auto& a2 = Ring::instance().alphas2();
  std::uniform_int_distribution<int> d(-span, span);
  IntOct x{};
  for (int k = 0; k < 8; ++k) {
    const int c = d(rng);
    for (int i = 0; i < 8; ++i) x[i] += c * a2[k][i];
  }
  return x;
}

IntOct random_root2(std::mt19937_64& rng) {
  const auto& roots = Ring::instance().roots2();
  std::uniform_int_distribution<std::size_t> d(0, roots.size() - 1);
  return to_int_oct(roots[d(rng)], 2);
}

IntOct random_unit2(std::mt19937_64& rng) {
  const auto& units = Ring::instance().units2();
  std::uniform_int_distribution<std::size_t> d(0, units.size() - 1);
  return units[d(rng)];
}

LatticeVector lv(const IntOct& a) { return LatticeVector(a.begin(), a.end()); }

LatticeVector triple(const IntOct& a, const IntOct& b, const IntOct& c) {
  LatticeVector v(24);
  for (int i = 0; i < 8; ++i) {
    v[i] = a[i];
    v[8 + i] = b[i];
    v[16 + i] = c[i];
  }
  return v;
}

IntOct block_at(const LatticeVector& v, int m) {
  IntOct b{};
  for (int i = 0; i < 8; ++i) b[i] = v[8 * m + i];
  return b;
}

// Euclidean norm of a vector in doubled coordinates (N, not 4N)
std::int64_t vector_norm(const LatticeVector& v) {
  std::int64_t s = 0;
  for (const std::int64_t x : v) s += x * x;
  return s / 4;
}

// ring membership from the parity criterion alone (no echelon machinery)
bool in_o2(const IntOct& v) {
  const auto& a2 = Ring::instance().alphas2();
  for (int k = 0; k < 8; ++k)
    if (raw_dot(v, a2[k]) % 2 != 0) return false;
  return true;
}

IntOct lambda2_default() {
  return to_int_oct(Ring::instance().lambda_zeros().front(), 2);
}

IntegerLattice e8r(const IntOct& s2) {
  return e8_sublattice(Side::kRightMultiples, s2);
}

IntegerLattice e8l(const IntOct& s2) {
  return e8_sublattice(Side::kLeftMultiples, s2);
}

const IntegerLattice& leech() {
  static const IntegerLattice l = [] {
    const IntOct l2 = lambda2_default();
    return leech_from_pair(e8r(conj(l2)), e8r(l2));
  }();
  return l;
}

const std::vector<LatticeVector>& leech_short() {
  static const std::vector<LatticeVector> v = leech().short_vectors(4);
  return v;
}

// all 2^rank words of an F_2 row space (rank <= 12 here)
std::vector<std::uint32_t> span_words(const std::vector<std::uint32_t>& rows) {
  std::vector<std::uint32_t> out{0u};
  for (const std::uint32_t r : rows) {
    const std::size_t m = out.size();
    for (std::size_t i = 0; i < m; ++i) out.push_back(out[i] ^ r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// first construction: pairwise sums in Phi, total sum in Psi
bool def_pairwise(const IntegerLattice& phi, const IntegerLattice& psi,
                  const LatticeVector& v) {
  const IntOct a = block_at(v, 0), b = block_at(v, 1), c = block_at(v, 2);
  return phi.contains(lv(add(a, b))) && phi.contains(lv(add(b, c))) &&
         phi.contains(lv(add(a, c))) && psi.contains(lv(add(add(a, b), c)));
}

// second construction: common translate z in Psi with x_1+x_2+x_3 in Psi.
// Working modulo 2O the witness only matters through its residue zeta.
bool def_translate(const IntegerLattice& phi, const IntegerLattice& psi,
                   const LatticeVector& v) {
  const Ring& ring = Ring::instance();
  std::array<std::uint32_t, 3> r{};
  for (int m = 0; m < 3; ++m) {
    const IntOct b = block_at(v, m);
    if (!in_o2(b)) return false;
    r[m] = ring.reduce2(b);
  }
  const auto phi_w = span_words(phi.image());
  const auto psi_w = span_words(psi.image());
  const auto member = [](const std::vector<std::uint32_t>& w, std::uint32_t x) {
    return std::binary_search(w.begin(), w.end(), x);
  };
  for (const std::uint32_t zeta : psi_w) {
    bool ok = member(psi_w, r[0] ^ r[1] ^ r[2] ^ zeta);
    for (int m = 0; m < 3 && ok; ++m) ok = member(phi_w, r[m] ^ zeta);
    if (ok) return true;
  }
  return false;
}

// third construction: (x+y+z, x+z, y+z).  The change of variables is
// triangular, so the witness is determined: x = v1-v3, y = v1-v2,
// z = v2+v3-v1, and membership is a direct check.
bool def_witness(const IntegerLattice& phi, const IntegerLattice& psi,
                 const LatticeVector& v) {
  const IntOct v1 = block_at(v, 0), v2 = block_at(v, 1), v3 = block_at(v, 2);
  return phi.contains(lv(sub(v1, v3))) && phi.contains(lv(sub(v1, v2))) &&
         psi.contains(lv(sub(add(v2, v3), v1)));
}

LatticeVector random_comb(const IntegerLattice& l, std::mt19937_64& rng,
                          int span) {
  std::uniform_int_distribution<int> d(-span, span);
  LatticeVector v(l.dim(), 0);
  for (const auto& row : l.basis2()) {
    const int c = d(rng);
    for (int i = 0; i < l.dim(); ++i) v[i] += c * row[i];
  }
  return v;
}

}  // namespace

TEST_CASE("rank-one multiple lattices are E8 copies with unit-multiple roots") {
  const Ring& ring = Ring::instance();
  std::mt19937_64 rng(0xe8a11ce5u);

  const IntOct l2 = lambda2_default();
  std::vector<IntOct> sample{l2, conj(l2)};
  while (sample.size() < 8) {
    const IntOct s = random_root2(rng);
    if (std::find(sample.begin(), sample.end(), s) == sample.end())
      sample.push_back(s);
  }

  for (const IntOct& s : sample) {
    for (const Side side : {Side::kRightMultiples, Side::kLeftMultiples}) {
      const IntegerLattice l = e8_sublattice(side, s);
      CHECK(l.blocks() == 1);
      CHECK(l.image_dim() == 4);
      CHECK(l.is_even_unimodular());
      CHECK(l.gram2_det() == BigInt(256));
      CHECK(l.min_norm() == 2);

      // roots are exactly the 240 unit multiples: N(us) = N(u)N(s) and
      // u -> us is injective by exact division
      const auto sv = l.short_vectors(2);
      std::vector<LatticeVector> expect;
      for (const IntOct& u : ring.units2()) {
        const IntOct p = side == Side::kRightMultiples ? mul(u, s) : mul(s, u);
        expect.push_back(lv(halve(p)));
      }
      std::sort(expect.begin(), expect.end());
      CHECK(expect.size() == 240);
      CHECK(sv == expect);

      // the residue image is totally isotropic of half dimension, and it
      // holds a quadratic refinement: every member lifts to even norm
      const auto words = span_words(l.image());
      CHECK(words.size() == 16);
      for (const std::uint32_t w : words) {
        IntOct x{};
        for (int j = 0; j < 8; ++j)
          if ((w >> j) & 1u) x = add(x, ring.alphas2()[j]);
        CHECK(norm_scaled(x) % 8 == 0);  // 4N with N even
        for (const std::uint32_t w2 : words) {
          IntOct y{};
          for (int j = 0; j < 8; ++j)
            if ((w2 >> j) & 1u) y = add(y, ring.alphas2()[j]);
          CHECK(raw_dot(x, y) % 4 == 0);  // <x,y> even
        }
      }
    }
  }

  // the named-set wrapper carries the target norm with the vectors
  const ShortVectorSet set = short_vector_set(e8r(l2), 2);
  CHECK(set.target_norm == 2);
  CHECK(set.vectors == e8r(l2).short_vectors(2));

  CHECK_THROWS_AS(e8_sublattice(Side::kRightMultiples,
                                IntOct{2, 0, 0, 0, 0, 0, 0, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(e8_sublattice(Side::kLeftMultiples,
                                IntOct{4, 0, 0, 0, 0, 0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("membership by exact division agrees with lattice membership") {
  std::mt19937_64 rng(0x0d151510u);
  const Mod2& m2 = Mod2::instance();
  const Ring& ring = Ring::instance();

  for (int rep = 0; rep < 10; ++rep) {
    const IntOct s = random_root2(rng);
    for (const Side side : {Side::kRightMultiples, Side::kLeftMultiples}) {
      const IntegerLattice l = e8_sublattice(side, s);
      for (int trial = 0; trial < 60; ++trial) {
        const IntOct x = random_elt2(rng, 2);
        const IntOct member = side == Side::kRightMultiples
                                  ? halve(mul(x, s))
                                  : halve(mul(s, x));
        CHECK(multiple_contains(side, s, member));
        CHECK(l.contains(lv(member)));
        const IntOct probe = random_elt2(rng, 2);
        CHECK(multiple_contains(side, s, probe) == l.contains(lv(probe)));
      }
    }
  }

  // the lattice depends on the multiplier only through its residue class
  for (int trial = 0; trial < 10; ++trial) {
    const IntOct s = random_root2(rng);
    const auto& frame = m2.frame2(ring.reduce2(s));
    std::uniform_int_distribution<std::size_t> d(0, frame.size() - 1);
    const IntOct t = frame[d(rng)];
    CHECK(e8r(s) == e8r(t));
    CHECK(e8l(s) == e8l(t));
  }
  for (int trial = 0; trial < 10; ++trial) {
    const IntOct s = random_root2(rng);
    IntOct t = random_root2(rng);
    while (ring.reduce2(t) == ring.reduce2(s)) t = random_root2(rng);
    CHECK(e8r(s) != e8r(t));
    CHECK(e8l(s) != e8l(t));
  }

  CHECK_THROWS_AS(
      multiple_contains(Side::kRightMultiples, IntOct{2, 0, 0, 0, 0, 0, 0, 0},
                        IntOct{2, 0, 0, 0, 0, 0, 0, 0}),
      std::invalid_argument);
}

TEST_CASE("intersections and sums of multiple lattices") {
  std::mt19937_64 rng(0x5ec70a7u);
  const IntegerLattice o1 = IntegerLattice::full_ring(1);
  const IntegerLattice t1 = IntegerLattice::doubled_ring(1);
  const IntOct l2 = lambda2_default();

  CHECK(o1.contains(e8r(l2)));
  CHECK(e8r(l2).contains(t1));
  CHECK(e8r(conj(l2)).intersect(e8r(l2)) == t1);
  CHECK(e8r(conj(l2)).sum(e8r(l2)) == o1);

  // complementarity happens exactly when N(s+s') is odd
  int complementary = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const IntOct s = random_root2(rng);
    const IntOct t = random_root2(rng);
    const bool odd = (norm_scaled(add(s, t)) / 4) % 2 != 0;
    const IntegerLattice a = e8r(s), b = e8r(t);
    CHECK((a.intersect(b) == t1) == odd);
    CHECK((a.sum(b) == o1) == odd);
    complementary += odd;
  }
  CHECK(complementary > 5);
  CHECK(complementary < 40);

  // left and right multiples of distinct classes always share more than 2O
  const Ring& ring = Ring::instance();
  for (int trial = 0; trial < 12; ++trial) {
    const IntOct s = random_root2(rng);
    IntOct t = random_root2(rng);
    while (ring.reduce2(t) == ring.reduce2(s)) t = random_root2(rng);
    CHECK(e8r(s).intersect(e8l(t)) != t1);
  }
}

TEST_CASE("even unimodular predicate separates the reference lattices") {
  CHECK_FALSE(IntegerLattice::full_ring(1).is_even_unimodular());
  CHECK_FALSE(IntegerLattice::full_ring(3).is_even_unimodular());
  CHECK_FALSE(IntegerLattice::doubled_ring(1).is_even_unimodular());
  CHECK_FALSE(IntegerLattice::doubled_ring(3).is_even_unimodular());
  CHECK(e8r(lambda2_default()).is_even_unimodular());
  CHECK(leech().is_even_unimodular());
  CHECK(IntegerLattice::doubled_ring(1).gram2_det() == BigInt(65536));
}

TEST_CASE("pair construction is certified between 2O^3 and O^3") {
  std::mt19937_64 rng(0x24c3a7u);
  const IntegerLattice& l = leech();
  CHECK(l.blocks() == 3);
  CHECK(l.dim() == 24);
  CHECK(l.image_dim() == 12);
  CHECK(l.is_even_unimodular());
  CHECK(l.gram2_det() == BigInt(16777216));
  CHECK(l.contains(IntegerLattice::doubled_ring(3)));
  CHECK(IntegerLattice::full_ring(3).contains(l));

  // doubled ring elements sit inside in every slot
  const IntOct zero{};
  for (int trial = 0; trial < 20; ++trial) {
    IntOct a = random_elt2(rng, 2);
    for (int i = 0; i < 8; ++i) a[i] *= 2;
    CHECK(l.contains(triple(a, zero, zero)));
    CHECK(l.contains(triple(zero, a, zero)));
    CHECK(l.contains(triple(zero, zero, a)));
  }

  // the residue image is totally isotropic of dimension 12 = 24/2 (hence
  // maximal) and carries the even quadratic refinement
  const auto& img = l.image();
  CHECK(img.size() == 12);
  std::vector<LatticeVector> lifts;
  const auto& a2 = Ring::instance().alphas2();
  for (const std::uint32_t w : img) {
    LatticeVector v(24, 0);
    for (int bit = 0; bit < 24; ++bit)
      if ((w >> bit) & 1u)
        for (int i = 0; i < 8; ++i) v[8 * (bit / 8) + i] += a2[bit % 8][i];
    CHECK(l.contains(v));
    lifts.push_back(v);
  }
  for (const auto& x : lifts) {
    CHECK(vector_norm(x) % 2 == 0);
    for (const auto& y : lifts) {
      std::int64_t raw = 0;
      for (int i = 0; i < 24; ++i) raw += x[i] * y[i];
      CHECK(raw % 4 == 0);
    }
  }

  // rejected inputs: equal pair (sum too small), non-unimodular member,
  // compatible-looking pair whose intersection is too large
  const IntOct l2 = lambda2_default();
  CHECK_THROWS_WITH_AS(leech_from_pair(e8r(l2), e8r(l2)),
                       "pair must sum to the whole ring",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(leech_from_pair(IntegerLattice::full_ring(1), e8r(l2)),
                       "pair must be even unimodular lattices",
                       std::invalid_argument);
  IntOct s = random_root2(rng), t = random_root2(rng);
  while ((norm_scaled(add(s, t)) / 4) % 2 != 0 ||
         Ring::instance().reduce2(s) == Ring::instance().reduce2(t)) {
    s = random_root2(rng);
    t = random_root2(rng);
  }
  // N(s+t) even and distinct classes: the lattices meet in more than 2O,
  // which for between-lattices is the same failure as not summing to O
  // (a residue word in both images lifts into the intersection), so the
  // sum certificate is the one that trips
  CHECK_THROWS_WITH_AS(leech_from_pair(e8r(s), e8r(t)),
                       "pair must sum to the whole ring",
                       std::invalid_argument);
}

TEST_CASE("the three descriptions of the pair lattice coincide") {
  std::mt19937_64 rng(0xdef3a9u);
  const IntOct l2 = lambda2_default();
  const IntegerLattice phi = e8r(conj(l2));
  const IntegerLattice psi = e8r(l2);
  const IntegerLattice& l = leech();
  const auto& a2 = Ring::instance().alphas2();

  int members = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    LatticeVector v;
    if (trial % 3 == 0) {
      // built to lie inside via the witness parametrization
      const IntOct x = block_at(random_comb(phi, rng, 2), 0);
      const IntOct y = block_at(random_comb(phi, rng, 2), 0);
      const IntOct z = block_at(random_comb(psi, rng, 2), 0);
      v = triple(add(add(x, y), z), add(x, z), add(y, z));
    } else if (trial % 3 == 1) {
      v = triple(random_elt2(rng, 1), random_elt2(rng, 1), random_elt2(rng, 1));
    } else {
      const IntOct x = block_at(random_comb(phi, rng, 1), 0);
      const IntOct y = block_at(random_comb(phi, rng, 1), 0);
      const IntOct z = block_at(random_comb(psi, rng, 1), 0);
      v = triple(add(add(x, y), z), add(x, z), add(y, z));
      // nudge one block by a basis vector; stays in O^3
      std::uniform_int_distribution<int> pick(0, 7);
      const int m = pick(rng) % 3, j = pick(rng);
      for (int i = 0; i < 8; ++i) v[8 * m + i] += a2[j][i];
    }
    const bool m1 = def_pairwise(phi, psi, v);
    const bool m2 = def_translate(phi, psi, v);
    const bool m3 = def_witness(phi, psi, v);
    const bool ml = l.contains(v);
    CHECK(m1 == ml);
    CHECK(m2 == ml);
    CHECK(m3 == ml);
    members += ml;
  }
  // both populations were exercised
  CHECK(members >= 300);
  CHECK(members <= 700);
}

TEST_CASE("coordinate symmetries stabilize the pair lattice") {
  std::mt19937_64 rng(0x516ccu);
  const IntegerLattice& l = leech();
  const auto& sv = leech_short();
  static const int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                   {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  std::uniform_int_distribution<std::size_t> pick(0, sv.size() - 1);
  int maps = 0;
  for (const auto& p : kPerms) {
    for (int signs = 0; signs < 8; ++signs) {
      const auto apply = [&](const LatticeVector& v) {
        LatticeVector out(24);
        for (int m = 0; m < 3; ++m) {
          const std::int64_t sg = (signs >> m) & 1 ? -1 : 1;
          for (int i = 0; i < 8; ++i) out[8 * m + i] = sg * v[8 * p[m] + i];
        }
        return out;
      };
      // basis rows map back in, so the whole lattice does (volume is fixed)
      for (const auto& row : l.basis2()) CHECK(l.contains(apply(row)));
      for (int k = 0; k < 40; ++k) {
        const LatticeVector w = apply(sv[pick(rng)]);
        CHECK(std::binary_search(sv.begin(), sv.end(), w));
      }
      ++maps;
    }
  }
  CHECK(maps == 48);

  // full negation closure of the short vector list
  std::size_t missing = 0;
  for (const auto& v : sv) {
    LatticeVector neg(24);
    for (int i = 0; i < 24; ++i) neg[i] = -v[i];
    if (!std::binary_search(sv.begin(), sv.end(), neg)) ++missing;
  }
  CHECK(missing == 0);
}

TEST_CASE("short vector census at norm four") {
  const IntegerLattice& l = leech();
  const auto& sv = leech_short();
  CHECK(sv.size() == 196560);
  CHECK(std::is_sorted(sv.begin(), sv.end()));
  CHECK(std::adjacent_find(sv.begin(), sv.end()) == sv.end());
  std::size_t bad = 0;
  for (const auto& v : sv)
    if (vector_norm(v) != 4 || !l.contains(v)) ++bad;
  CHECK(bad == 0);
  CHECK(l.min_norm() == 4);

  // independent count by coset assembly: census the ring elements of norm
  // <= 4 per residue class with a box search, then sum, over the 2^12
  // residue words of the lattice image, the products of per-block counts.
  const Ring& ring = Ring::instance();
  std::array<std::array<std::int64_t, 5>, 256> census{};
  IntOct box{};
  const auto dfs = [&](const auto& self, int pos, std::int64_t ss) -> void {
    if (pos == 8) {
      if (!in_o2(box)) return;
      census[ring.reduce2(box)][ss / 4] += 1;
      return;
    }
    for (std::int64_t x = -4; x <= 4; ++x) {
      const std::int64_t t = ss + x * x;
      if (t > 16) continue;
      box[pos] = x;
      self(self, pos + 1, t);
    }
    box[pos] = 0;
  };
  dfs(dfs, 0, 0);

  // block-level census must reproduce the theta series of E8
  std::array<std::int64_t, 5> theta{};
  for (const auto& row : census)
    for (int t = 0; t <= 4; ++t) theta[t] += row[t];
  CHECK(theta == std::array<std::int64_t, 5>{1, 240, 2160, 6720, 17520});

  std::array<std::int64_t, 5> assembled{};
  for (const std::uint32_t w : span_words(l.image())) {
    const int b0 = w & 255, b1 = (w >> 8) & 255, b2 = (w >> 16) & 255;
    for (int t0 = 0; t0 <= 4; ++t0)
      for (int t1 = 0; t0 + t1 <= 4; ++t1)
        for (int t2 = 0; t0 + t1 + t2 <= 4; ++t2)
          assembled[t0 + t1 + t2] +=
              census[b0][t0] * census[b1][t1] * census[b2][t2];
  }
  CHECK(assembled[0] == 1);
  CHECK(assembled[1] == 0);
  CHECK(assembled[2] == 0);
  CHECK(assembled[3] == 0);
  CHECK(assembled[4] == 196560);
}

TEST_CASE("unit translations are isometries with exact multiplication rules") {
  std::mt19937_64 rng(0x7aa05eedu);
  const IntOct one2{2, 0, 0, 0, 0, 0, 0, 0};

  for (const Translation kind :
       {Translation::kLeft, Translation::kRight, Translation::kBoth}) {
    for (int trial = 0; trial < 50; ++trial) {
      const IntOct u = random_unit2(rng);
      const IntOct x = random_elt2(rng, 3);
      const IntOct y = translate2(kind, u, x);
      CHECK(in_o2(y));
      CHECK(norm_scaled(y) == norm_scaled(x));
    }
    const IntOct x = random_elt2(rng, 3);
    CHECK(translate2(kind, one2, x) == x);
  }
  CHECK_THROWS_WITH_AS(
      translate2(Translation::kLeft, IntOct{4, 0, 0, 0, 0, 0, 0, 0},
                 IntOct{2, 0, 0, 0, 0, 0, 0, 0}),
      "translation requires a unit of the ring", std::invalid_argument);

  // how the three kinds move a multiple lattice:
  //   left by u sends Os to O(conj(u)s); right sends it to O(usu);
  //   both sides send it to O(su)
  for (int trial = 0; trial < 12; ++trial) {
    const IntOct u = random_unit2(rng);
    const IntOct s = random_root2(rng);
    const IntegerLattice os = e8r(s);
    CHECK(translate(Translation::kLeft, u, os) ==
          e8r(halve(mul(conj(u), s))));
    CHECK(translate(Translation::kRight, u, os) ==
          e8r(translate2(Translation::kBoth, u, s)));
    CHECK(translate(Translation::kBoth, u, os) == e8r(halve(mul(s, u))));
    // gram matrices agree row for row: genuinely an isometry
    CHECK(translate(Translation::kLeft, u, os).gram2() == os.gram2());
  }

  // the same rules transported through the pair construction
  const auto random_odd_pair = [&rng]() {
    for (;;) {
      const IntOct s = random_root2(rng);
      const IntOct t = random_root2(rng);
      if ((norm_scaled(add(s, t)) / 4) % 2 != 0) return std::make_pair(s, t);
    }
  };
  for (int trial = 0; trial < 4; ++trial) {
    const auto [s, t] = random_odd_pair();
    const IntegerLattice lam = leech_from_pair(e8r(s), e8r(t));
    const IntOct u = random_unit2(rng);
    CHECK(translate(Translation::kLeft, u, lam) ==
          leech_from_pair(e8r(halve(mul(conj(u), s))),
                          e8r(halve(mul(conj(u), t)))));
    CHECK(translate(Translation::kRight, u, lam) ==
          leech_from_pair(e8r(translate2(Translation::kBoth, u, s)),
                          e8r(translate2(Translation::kBoth, u, t))));
    CHECK(translate(Translation::kBoth, u, lam) ==
          leech_from_pair(e8r(halve(mul(s, u))), e8r(halve(mul(t, u)))));
  }

  // the one-argument builder is the left translate of the base pair
  const IntOct l2 = lambda2_default();
  CHECK(leech_lambda(one2, l2) == leech());
  for (int trial = 0; trial < 6; ++trial) {
    const IntOct u = random_unit2(rng);
    const IntegerLattice lam = leech_lambda(u, l2);
    CHECK(lam.is_even_unimodular());
    CHECK(lam == leech_from_pair(e8r(halve(mul(conj(u), conj(l2)))),
                                 e8r(halve(mul(conj(u), l2)))));
  }
  CHECK_THROWS_WITH_AS(leech_lambda(one2, IntOct{2, 2, 0, 0, 0, 0, 0, 0}),
                       "lambda must be a zero of x^2 + x + 2",
                       std::invalid_argument);
  CHECK_THROWS_AS(leech_lambda(lambda2_default(), l2), std::invalid_argument);
}

TEST_CASE("translated base pairs sweep out the directed odd-sum edges") {
  const Ring& ring = Ring::instance();
  const IntOct l2 = lambda2_default();

  std::vector<IntOct> unit_reps;
  {
    std::set<std::uint32_t> seen;
    for (const IntOct& u : ring.units2())
      if (seen.insert(ring.reduce2(u)).second) unit_reps.push_back(u);
  }
  CHECK(unit_reps.size() == 120);

  std::vector<IntOct> lambda_reps;
  {
    std::set<std::uint32_t> seen;
    for (const Octonion& z : ring.lambda_zeros()) {
      const IntOct z2 = to_int_oct(z, 2);
      if (seen.insert(ring.reduce2(z2)).second) lambda_reps.push_back(z2);
    }
  }
  CHECK(lambda_reps.size() == 72);

  std::set<std::pair<int, int>> orbit;
  for (const IntOct& u : unit_reps) {
    const IntOct ubar = conj(u);
    for (const IntOct& z : lambda_reps) {
      const IntOct s = halve(mul(ubar, conj(z)));
      const IntOct t = halve(mul(ubar, z));
      orbit.emplace(ring.reduce2(s), ring.reduce2(t));
    }
  }
  CHECK(orbit.size() == 8640);

  const Srg& graph = Mod2::instance().odd_sum_graph();
  std::set<std::pair<int, int>> edges;
  for (int i = 0; i < graph.v; ++i)
    for (int j = 0; j < graph.v; ++j)
      if (i != j && graph.adjacent(i, j))
        edges.emplace(graph.vertices[i], graph.vertices[j]);
  CHECK(edges.size() == 8640);
  CHECK(orbit == edges);

  // the base pair itself is one of the edges
  CHECK(orbit.count({ring.reduce2(conj(l2)), ring.reduce2(l2)}) == 1);
}

TEST_CASE("translation maps generate a group of order 348364800") {
  std::mt19937_64 rng(0x348364u);
  const Ring& ring = Ring::instance();
  const PermGroup g = translation_group();
  CHECK(g.order() == BigInt("348364800"));

  // permutations are faithful images of the doubling maps on the units
  for (int trial = 0; trial < 6; ++trial) {
    for (const Translation kind :
         {Translation::kLeft, Translation::kRight, Translation::kBoth}) {
      const IntOct u = random_unit2(rng);
      const Perm p = translation_permutation(kind, u);
      CHECK(g.contains(p));
      std::uniform_int_distribution<int> pick(0, 239);
      for (int k = 0; k < 10; ++k) {
        const int i = pick(rng);
        CHECK(ring.units2()[p[i]] == translate2(kind, u, ring.units2()[i]));
      }
    }
  }
}

TEST_CASE("between-lattice constructor enforces its certificates") {
  const auto& a2 = Ring::instance().alphas2();
  const auto alpha_row = [&](int j, std::int64_t scale) {
    LatticeVector v(8);
    for (int i = 0; i < 8; ++i) v[i] = scale * a2[j][i];
    return v;
  };

  // wrong row count
  CHECK_THROWS_WITH_AS(
      IntegerLattice::from_basis(1, std::vector<LatticeVector>(7)),
      "a lattice basis here has 8n rows", std::invalid_argument);
  // a row outside the ring
  {
    std::vector<LatticeVector> rows;
    for (int j = 0; j < 8; ++j) rows.push_back(alpha_row(j, 2));
    rows[0] = LatticeVector{1, 0, 0, 0, 0, 0, 0, 0};
    CHECK_THROWS_WITH_AS(IntegerLattice::from_basis(1, rows),
                         "basis vector is not in O^n", std::invalid_argument);
  }
  // rank deficient
  {
    std::vector<LatticeVector> rows(8, alpha_row(0, 2));
    CHECK_THROWS_AS(IntegerLattice::from_basis(1, rows),
                    std::invalid_argument);
  }
  // full rank inside O but index not a power of the right form: the span of
  // 3*alpha_0 and 2*alpha_j has determinant 9/4 times that of 2O
  {
    std::vector<LatticeVector> rows;
    rows.push_back(alpha_row(0, 3));
    for (int j = 1; j < 8; ++j) rows.push_back(alpha_row(j, 2));
    CHECK_THROWS_AS(IntegerLattice::from_basis(1, rows),
                    std::invalid_argument);
  }

  // image round trips through the lifting constructor
  const IntOct l2 = lambda2_default();
  CHECK(IntegerLattice::from_image(1, e8r(l2).image()) == e8r(l2));
  CHECK(IntegerLattice::from_image(3, leech().image()) == leech());
  CHECK(IntegerLattice::from_image(1, {}) == IntegerLattice::doubled_ring(1));

  // reduce_word packs the per-block residues
  std::mt19937_64 rng(0x0ddba11u);
  for (int trial = 0; trial < 50; ++trial) {
    const IntOct a = random_elt2(rng, 3);
    const IntOct b = random_elt2(rng, 3);
    const IntOct c = random_elt2(rng, 3);
    const Ring& ring = Ring::instance();
    CHECK(reduce_word(1, lv(a)) == ring.reduce2(a));
    CHECK(reduce_word(3, triple(a, b, c)) ==
          (static_cast<std::uint32_t>(ring.reduce2(a)) |
           static_cast<std::uint32_t>(ring.reduce2(b)) << 8 |
           static_cast<std::uint32_t>(ring.reduce2(c)) << 16));
  }

  // dimension mismatches and out-of-range minima are refused
  CHECK_THROWS_WITH_AS(leech().contains(LatticeVector(8, 0)),
                       "dimension mismatch", std::invalid_argument);
  CHECK_THROWS_AS(leech().intersect(IntegerLattice::full_ring(1)),
                  std::invalid_argument);
  CHECK_THROWS_WITH_AS(IntegerLattice::doubled_ring(1).min_norm(3),
                       "minimal norm exceeds the search limit",
                       std::domain_error);
}
