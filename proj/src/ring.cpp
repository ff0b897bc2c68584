#include "octavian/ring.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "octavian/enumerate.hpp"

namespace octavian {

namespace {

// Doubled coordinates of the alpha basis over (i_inf, i_0..i_6). Together
// they span an even unimodular copy of E8 under <.,.>; the Gram matrix is
// certified against the expected Cartan matrix by the ring test suite.
constexpr std::array<IntOct, 8> kAlpha2 = {{
    {0, 1, -1, 0, 0, 0, 1, 1},
    {0, -1, -1, -1, 0, -1, 0, 0},
    {0, -1, 0, 1, 1, 0, -1, 0},
    {0, 0, 1, 0, -1, 1, 1, 0},
    {0, 1, 0, -1, 1, 0, -1, 0},
    {0, 0, 0, 1, 0, -1, 1, -1},
    {0, 0, -1, 0, -1, 1, -1, 0},
    {-1, 0, 1, 0, 0, -1, 0, 1},
}};

std::int64_t dot2(const IntOct& a, const IntOct& b) {
  std::int64_t s = 0;
  for (int i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

// Exact inverse of an 8x8 integer matrix with determinant +-1.
std::array<std::array<std::int64_t, 8>, 8> invert_unimodular(
    const std::array<std::array<std::int64_t, 8>, 8>& m) {
  std::array<std::array<Rational, 8>, 8> a, inv;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      a[i][j] = m[i][j];
      inv[i][j] = (i == j) ? 1 : 0;
    }
  for (int col = 0; col < 8; ++col) {
    int pivot = -1;
    for (int r = col; r < 8; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw std::logic_error("gram matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Rational p = a[col][col];
    for (int j = 0; j < 8; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (int r = 0; r < 8; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = 0; j < 8; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  std::array<std::array<std::int64_t, 8>, 8> out{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) out[i][j] = to_int64(inv[i][j]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// RingAut
// ---------------------------------------------------------------------------

RingAut RingAut::identity() {
  RingAut a;
  for (int k = 0; k < 8; ++k) {
    a.im2[k] = IntOct{};
    a.im2[k][k] = 2;
  }
  return a;
}

RingAut RingAut::conjugation_by(const Octonion& w) {
  RingAut a;
  const Octonion wb = w.conj();
  for (int k = 0; k < 8; ++k) {
    Octonion img = (wb * Octonion::basis(k)) * w;
    a.im2[k] = to_int_oct(img, 2);
  }
  return a;
}

RingAut RingAut::flip() {
  static constexpr std::int64_t kSign[8] = {1, -1, -1, 1, 1, -1, 1, -1};
  RingAut a;
  for (int k = 0; k < 8; ++k) {
    a.im2[k] = IntOct{};
    a.im2[k][k] = 2 * kSign[k];
  }
  return a;
}

RingAut RingAut::from_basis_images(const std::array<Octonion, 8>& images) {
  RingAut a;
  for (int k = 0; k < 8; ++k) a.im2[k] = to_int_oct(images[k], 2);
  return a;
}

IntOct RingAut::apply2(const IntOct& x2) const {
  IntOct acc{};
  for (int k = 0; k < 8; ++k) {
    if (x2[k] == 0) continue;
    for (int i = 0; i < 8; ++i) acc[i] += x2[k] * im2[k][i];
  }
  for (int i = 0; i < 8; ++i) {
    if (acc[i] % 2 != 0)
      throw std::logic_error("automorphism image is not half-integral");
    acc[i] /= 2;
  }
  return acc;
}

Octonion RingAut::apply(const Octonion& x) const {
  Octonion y;
  for (int k = 0; k < 8; ++k) {
    if (x.c[k] == 0) continue;
    for (int i = 0; i < 8; ++i)
      y.c[i] += x.c[k] * Rational(static_cast<long>(im2[k][i]), 2);
  }
  for (auto& v : y.c) v.canonicalize();
  return y;
}

RingAut RingAut::then(const RingAut& next) const {
  RingAut out;
  for (int k = 0; k < 8; ++k) out.im2[k] = next.apply2(im2[k]);
  return out;
}

RingAut RingAut::inverse() const {
  // Group elements here are isometries of the doubled inner product, so the
  // coordinate matrix M/2 is orthogonal and the inverse is the transpose.
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (dot2(im2[i], im2[j]) != (i == j ? 4 : 0))
        throw std::logic_error("inverse: map is not an isometry");
  RingAut out;
  for (int k = 0; k < 8; ++k)
    for (int i = 0; i < 8; ++i) out.im2[k][i] = im2[i][k];
  return out;
}

bool RingAut::is_algebra_automorphism() const {
  IntOct one{};
  one[0] = 2;
  if (im2[0] != one) return false;
  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 8; ++k) {
      const BasisProduct p = kMulTable[j][k];
      // mul works on doubled coords, so it carries an extra factor of 4;
      // the image of the doubled product e_j e_k carries a factor of 2.
      IntOct lhs = mul(im2[j], im2[k]);
      IntOct rhs = im2[p.index];
      for (int i = 0; i < 8; ++i)
        if (lhs[i] != 2 * p.sign * rhs[i]) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Norm classes
// ---------------------------------------------------------------------------

std::string NormClass::polynomial() const {
  std::ostringstream os;
  os << "x^2";
  if (two_re != 0) {
    os << (two_re < 0 ? "+" : "-");
    if (std::abs(two_re) != 1) os << std::abs(two_re);
    os << "x";
  }
  os << "+" << norm;
  return os.str();
}

const std::array<NormClass, 10>& norm_class_order() {
  static const std::array<NormClass, 10> kOrder = {{
      {2, 1},
      {-2, 1},
      {0, 1},
      {-1, 1},
      {1, 1},
      {2, 2},
      {-2, 2},
      {1, 2},
      {-1, 2},
      {0, 2},
  }};
  return kOrder;
}

// ---------------------------------------------------------------------------
// Ring
// ---------------------------------------------------------------------------

const Ring& Ring::instance() {
  static const Ring ring;
  return ring;
}

Ring::Ring() {
  alphas2_ = kAlpha2;
  for (int i = 0; i < 8; ++i) alphas_[i] = to_octonion(alphas2_[i], 2);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      // <a_i, a_j> = 2 sum a_i a_j = dot2(2a_i, 2a_j) / 2.
      std::int64_t d = dot2(alphas2_[i], alphas2_[j]);
      if (d % 2 != 0) throw std::logic_error("non-integral gram entry");
      gram_[i][j] = d / 2;
    }
  gram_inv_ = invert_unimodular(gram_);

  IntGram g(8, std::vector<std::int64_t>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) g[i][j] = gram_[i][j];

  auto expand = [&](const std::vector<EnumeratedPoint>& pts) {
    std::vector<IntOct> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
      IntOct x2{};
      for (int j = 0; j < 8; ++j) {
        if (p.coeffs[j] == 0) continue;
        for (int i = 0; i < 8; ++i) x2[i] += p.coeffs[j] * alphas2_[j][i];
      }
      out.push_back(x2);
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  units2_ = expand(enumerate_exact(g, 2));
  std::vector<IntOct> roots2v = expand(enumerate_exact(g, 4));
  units_.reserve(units2_.size());
  for (const auto& x2 : units2_) units_.push_back(to_octonion(x2, 2));
  roots2_.reserve(roots2v.size());
  for (const auto& x2 : roots2v) roots2_.push_back(to_octonion(x2, 2));
  for (std::size_t i = 0; i < roots2v.size(); ++i)
    if (roots2v[i][0] == -1) lambda_zeros_.push_back(roots2_[i]);

  for (std::size_t i = 0; i < units_.size(); ++i) {
    const auto& x2 = units2_[i];
    std::int64_t n4 = norm_scaled(x2);
    if (x2[0] == -1 && n4 == 4)  // 2Re = -1, N = 1: the order-3 units
      aut_gens_.push_back(RingAut::conjugation_by(units_[i]));
  }
  aut_gens_.push_back(RingAut::flip());
}

bool Ring::contains(const Octonion& x) const {
  for (const auto& c : alpha_coords(x))
    if (!is_integer(c)) return false;
  return true;
}

std::array<Rational, 8> Ring::alpha_coords(const Octonion& x) const {
  std::array<Rational, 8> t;
  for (int k = 0; k < 8; ++k) t[k] = inner(x, alphas_[k]);
  std::array<Rational, 8> c;
  for (int j = 0; j < 8; ++j) {
    Rational s = 0;
    for (int k = 0; k < 8; ++k) s += Rational(gram_inv_[j][k]) * t[k];
    s.canonicalize();
    c[j] = s;
  }
  return c;
}

std::uint8_t Ring::reduce(const Octonion& x) const {
  auto c = alpha_coords(x);
  std::uint8_t bits = 0;
  for (int j = 0; j < 8; ++j) {
    if (!is_integer(c[j]))
      throw std::domain_error("reduce: element is not in the ring");
    if (mpz_odd_p(c[j].get_num_mpz_t())) bits |= std::uint8_t(1u << j);
  }
  return bits;
}

std::uint8_t Ring::reduce2(const IntOct& x2) const {
  // <x, a_k> = dot2(x2, 2a_k) / 2.
  std::array<std::int64_t, 8> t;
  for (int k = 0; k < 8; ++k) {
    std::int64_t d = dot2(x2, alphas2_[k]);
    if (d % 2 != 0) throw std::domain_error("reduce2: not in the ring");
    t[k] = d / 2;
  }
  std::uint8_t bits = 0;
  for (int j = 0; j < 8; ++j) {
    std::int64_t s = 0;
    for (int k = 0; k < 8; ++k) s += gram_inv_[j][k] * t[k];
    if (s & 1) bits |= std::uint8_t(1u << j);
  }
  return bits;
}

Octonion Ring::omega(int r) const {
  if (r != 1 && r != 2 && r != 4)
    throw std::invalid_argument("omega: r must be 1, 2 or 4");
  IntOct x2{};
  x2[0] = -1;
  x2[basis_index(0)] = 1;
  x2[basis_index(r)] = 1;
  x2[basis_index((3 * r) % 7)] = 1;
  return to_octonion(x2, 2);
}

int Ring::unit_index2(const IntOct& x2) const {
  auto it = std::lower_bound(units2_.begin(), units2_.end(), x2);
  if (it == units2_.end() || *it != x2) return -1;
  return static_cast<int>(it - units2_.begin());
}

NormClass Ring::classify(const Octonion& x) const {
  if (!contains(x)) throw std::domain_error("classify: not a ring element");
  Rational two_re = 2 * x.re();
  Rational n = x.norm();
  NormClass cls{static_cast<int>(to_int64(two_re)),
                static_cast<int>(to_int64(n))};
  for (const auto& known : norm_class_order())
    if (known == cls) return cls;
  throw std::domain_error("classify: norm is not 1 or 2");
}

std::array<std::int64_t, 10> Ring::census_histogram() const {
  std::array<std::int64_t, 10> h{};
  auto tally = [&](const Octonion& x) {
    NormClass cls = classify(x);
    for (std::size_t i = 0; i < norm_class_order().size(); ++i)
      if (norm_class_order()[i] == cls) {
        ++h[i];
        return;
      }
  };
  for (const auto& u : units_) tally(u);
  for (const auto& r : roots2_) tally(r);
  return h;
}

Perm Ring::unit_permutation(const RingAut& a) const {
  Perm p(units2_.size());
  for (std::size_t i = 0; i < units2_.size(); ++i) {
    int img = unit_index2(a.apply2(units2_[i]));
    if (img < 0)
      throw std::logic_error("automorphism does not permute the units");
    p[i] = img;
  }
  return p;
}

PermGroup Ring::aut_group() const {
  std::vector<Perm> gens;
  gens.reserve(aut_gens_.size());
  for (const auto& a : aut_gens_) gens.push_back(unit_permutation(a));
  return PermGroup::schreier_sims(static_cast<int>(units2_.size()), gens);
}

PermGroup Ring::conjugation_group() const {
  std::vector<Perm> gens;
  for (std::size_t i = 0; i + 1 < aut_gens_.size(); ++i)
    gens.push_back(unit_permutation(aut_gens_[i]));
  return PermGroup::schreier_sims(static_cast<int>(units2_.size()), gens);
}

std::int64_t Ring::basic_triple_orbit_size() const {
  std::vector<Perm> gens;
  for (const auto& a : aut_gens_) gens.push_back(unit_permutation(a));
  const int n = static_cast<int>(units2_.size());
  auto key = [n](int a, int b, int c) {
    return (static_cast<std::int64_t>(a) * n + b) * n + c;
  };
  IntOct i2{}, j2{}, l2{};
  i2[basis_index(2)] = 2;
  j2[basis_index(3)] = 2;
  l2[basis_index(4)] = 2;
  int a0 = unit_index2(i2), b0 = unit_index2(j2), c0 = unit_index2(l2);
  std::unordered_set<std::int64_t> seen;
  std::queue<std::array<int, 3>> bfs;
  seen.insert(key(a0, b0, c0));
  bfs.push({a0, b0, c0});
  while (!bfs.empty()) {
    auto [a, b, c] = bfs.front();
    bfs.pop();
    for (const auto& g : gens) {
      int na = g[a], nb = g[b], nc = g[c];
      if (seen.insert(key(na, nb, nc)).second) bfs.push({na, nb, nc});
    }
  }
  return static_cast<std::int64_t>(seen.size());
}

FrameStabilizer Ring::frame_stabilizer(const Octonion& lambda) const {
  NormClass cls = classify(lambda);
  if (!(cls == NormClass{-1, 2}))
    throw std::invalid_argument("frame_stabilizer: expected a zero of x^2+x+2");
  const IntOct lam2 = to_int_oct(lambda, 2);

  // Residue classes of the 576 zeros mod 2O: 72 classes of 8.
  std::vector<IntOct> zero2(lambda_zeros_.size());
  for (std::size_t i = 0; i < lambda_zeros_.size(); ++i)
    zero2[i] = to_int_oct(lambda_zeros_[i], 2);
  std::map<std::uint8_t, int> class_of;
  std::vector<IntOct> rep2;
  for (const auto& z : zero2) {
    std::uint8_t r = reduce2(z);
    if (!class_of.count(r)) {
      class_of[r] = static_cast<int>(rep2.size());
      rep2.push_back(z);
    }
  }
  const int num_classes = static_cast<int>(rep2.size());

  // Generator action on the residue classes.
  std::vector<std::vector<int>> gact(aut_gens_.size(),
                                     std::vector<int>(num_classes));
  for (std::size_t gi = 0; gi < aut_gens_.size(); ++gi)
    for (int c = 0; c < num_classes; ++c) {
      auto it = class_of.find(reduce2(aut_gens_[gi].apply2(rep2[c])));
      if (it == class_of.end())
        throw std::logic_error("automorphism does not preserve zero classes");
      gact[gi][c] = it->second;
    }

  // Orbit of the class of lambda with a transversal of ring automorphisms.
  const int c0 = class_of.at(reduce2(lam2));
  std::vector<RingAut> transversal(num_classes, RingAut::identity());
  std::vector<char> reached(num_classes, 0);
  reached[c0] = 1;
  std::queue<int> bfs;
  bfs.push(c0);
  std::vector<int> orbit{c0};
  while (!bfs.empty()) {
    int c = bfs.front();
    bfs.pop();
    for (std::size_t gi = 0; gi < aut_gens_.size(); ++gi) {
      int d = gact[gi][c];
      if (!reached[d]) {
        reached[d] = 1;
        transversal[d] = transversal[c].then(aut_gens_[gi]);
        orbit.push_back(d);
        bfs.push(d);
      }
    }
  }

  // Schreier generators of the class stabilizer, deduplicated.
  std::set<RingAut> dedup;
  const RingAut id = RingAut::identity();
  for (int c : orbit)
    for (std::size_t gi = 0; gi < aut_gens_.size(); ++gi) {
      int d = gact[gi][c];
      RingAut s = transversal[c].then(aut_gens_[gi]).then(
          transversal[d].inverse());
      if (!(s == id)) dedup.insert(s);
    }

  FrameStabilizer out;
  out.generators.assign(dedup.begin(), dedup.end());
  std::vector<Perm> perms;
  perms.reserve(out.generators.size());
  for (const auto& a : out.generators) perms.push_back(unit_permutation(a));
  out.on_units =
      PermGroup::schreier_sims(static_cast<int>(units2_.size()), perms);

  // Orbit of lambda itself under the stabilizer.
  std::set<IntOct> lorbit{lam2};
  std::queue<IntOct> q2;
  q2.push(lam2);
  while (!q2.empty()) {
    IntOct x2 = q2.front();
    q2.pop();
    for (const auto& a : out.generators) {
      IntOct y2 = a.apply2(x2);
      if (lorbit.insert(y2).second) q2.push(y2);
    }
  }
  for (const auto& x2 : lorbit) out.lambda_orbit.push_back(to_octonion(x2, 2));

  // Induced permutations of the lambda-orbit.
  std::vector<IntOct> lsorted(lorbit.begin(), lorbit.end());
  const int L = static_cast<int>(lsorted.size());
  auto lindex = [&](const IntOct& x2) {
    auto it = std::lower_bound(lsorted.begin(), lsorted.end(), x2);
    return static_cast<int>(it - lsorted.begin());
  };
  std::set<std::vector<int>> lperms;
  for (const auto& a : out.generators) {
    std::vector<int> p(L);
    for (int i = 0; i < L; ++i) p[i] = lindex(a.apply2(lsorted[i]));
    lperms.insert(p);
  }

  // Orbits on k-subsets of the lambda-orbit, via bitmask BFS.
  auto subset_orbits = [&](int k) {
    std::vector<std::vector<unsigned>> orbits;
    std::vector<char> visited(1u << L, 0);
    for (unsigned m = 0; m < (1u << L); ++m) {
      if (__builtin_popcount(m) != k || visited[m]) continue;
      std::vector<unsigned> members;
      std::queue<unsigned> bq;
      visited[m] = 1;
      bq.push(m);
      while (!bq.empty()) {
        unsigned s = bq.front();
        bq.pop();
        members.push_back(s);
        for (const auto& p : lperms) {
          unsigned t = 0;
          for (int i = 0; i < L; ++i)
            if (s & (1u << i)) t |= 1u << p[i];
          if (!visited[t]) {
            visited[t] = 1;
            bq.push(t);
          }
        }
      }
      std::sort(members.begin(), members.end());
      orbits.push_back(std::move(members));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const auto& a, const auto& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                return a.front() < b.front();
              });
    return orbits;
  };

  for (int k = 1; k <= 4 && k <= L; ++k)
    out.subset_orbit_counts.push_back(
        static_cast<std::int64_t>(subset_orbits(k).size()));
  if (L >= 4)
    for (const auto& orb : subset_orbits(4)) {
      std::vector<std::array<int, 4>> quads;
      for (unsigned m : orb) {
        std::array<int, 4> q{};
        int w = 0;
        for (int i = 0; i < L; ++i)
          if (m & (1u << i)) q[w++] = i;
        quads.push_back(q);
      }
      out.quad_orbits.push_back(std::move(quads));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Standard basis from a basic triple
// ---------------------------------------------------------------------------

std::array<Octonion, 8> standard_basis_from_triple(const Octonion& i,
                                                   const Octonion& j,
                                                   const Octonion& l) {
  const Octonion* t[3] = {&i, &j, &l};
  for (int k = 0; k < 3; ++k) {
    if (t[k]->re() != 0)
      throw std::invalid_argument("basic triple: entry is not imaginary");
    if (t[k]->norm() != 1)
      throw std::invalid_argument("basic triple: entry is not a unit vector");
  }
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (inner(*t[a], *t[b]) != 0)
        throw std::invalid_argument("basic triple: entries are not orthogonal");
  if (associator(i, j, l).is_zero())
    throw std::invalid_argument(
        "basic triple: pairwise quaternion subalgebras are not distinct");
  // l must be orthogonal to the whole quaternion algebra of (i, j), not just
  // to i and j, or the derived frame is not orthonormal.
  if (inner(i * j, l) != 0)
    throw std::invalid_argument(
        "basic triple: third entry is not orthogonal to the quaternion "
        "subalgebra of the first two");
  return {Octonion::one(), -(i * j) * l, i * l, i, j, l, i * j, j * l};
}

}  // namespace octavian
