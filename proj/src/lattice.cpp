#include "octavian/lattice.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "octavian/ring.hpp"

namespace octavian {

namespace {

IntOct block_of(const LatticeVector& v, int m) {
  IntOct x;
  for (int i = 0; i < 8; ++i) x[i] = v[8 * m + i];
  return x;
}

void set_block(LatticeVector& v, int m, const IntOct& x) {
  for (int i = 0; i < 8; ++i) v[8 * m + i] = x[i];
}

// doubled-coordinate membership in O: all pairings with the alpha basis are
// integers (the alpha Gram is unimodular, so the dual condition is exact)
bool in_ring2(const IntOct& v) {
  const auto& a2 = Ring::instance().alphas2();
  for (int k = 0; k < 8; ++k)
    if (raw_dot(v, a2[k]) % 2 != 0) return false;
  return true;
}

int top_bit(std::uint32_t x) { return 31 - __builtin_clz(x); }

// maintain a reduced echelon basis (each pivot in exactly one row, rows
// descending); the representation of a subspace is unique
void rref_insert(std::vector<std::uint32_t>& rows, std::uint32_t r) {
  for (const std::uint32_t o : rows)
    if ((r >> top_bit(o)) & 1u) r ^= o;
  if (r == 0) return;
  const int p = top_bit(r);
  for (std::uint32_t& o : rows)
    if ((o >> p) & 1u) o ^= r;
  rows.push_back(r);
  std::sort(rows.begin(), rows.end(), std::greater<>());
}

bool in_span(const std::vector<std::uint32_t>& rows, std::uint32_t r) {
  for (const std::uint32_t o : rows)
    if ((r >> top_bit(o)) & 1u) r ^= o;
  return r == 0;
}

void check_unit(const IntOct& u2) {
  if (norm_scaled(u2) != 4 || !in_ring2(u2))
    throw std::invalid_argument("translation requires a unit of the ring");
}

}  // namespace

std::uint32_t reduce_word(int n, const LatticeVector& v) {
  if (static_cast<int>(v.size()) != 8 * n)
    throw std::invalid_argument("dimension mismatch");
  const Ring& ring = Ring::instance();
  std::uint32_t w = 0;
  for (int m = 0; m < n; ++m)
    w |= static_cast<std::uint32_t>(ring.reduce2(block_of(v, m))) << (8 * m);
  return w;
}

IntegerLattice IntegerLattice::from_basis(int n,
                                          std::vector<LatticeVector> rows) {
  if (n != 1 && n != 3)
    throw std::invalid_argument("ambient space is O or O^3");
  const int d = 8 * n;
  if (static_cast<int>(rows.size()) != d)
    throw std::invalid_argument("a lattice basis here has 8n rows");
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != d)
      throw std::invalid_argument("dimension mismatch");
    for (int m = 0; m < n; ++m)
      if (!in_ring2(block_of(r, m)))
        throw std::invalid_argument("basis vector is not in O^n");
  }
  std::vector<std::uint32_t> image;
  for (const auto& r : rows) rref_insert(image, reduce_word(n, r));
  IntegerLattice l(n, std::move(rows), std::move(image));
  // Full rank, and 2O^n <= L: for rows inside O^n the two together are
  // equivalent to det<b_i,b_j> = 4^(8n - image dim). (The image pins
  // [O^n : L + 2O^n]; the determinant pins [O^n : L]; equality forces
  // L = L + 2O^n.)
  BigInt expect = 1;
  for (int i = 0; i < d - l.image_dim(); ++i) expect *= 4;
  if (l.gram2_det() != expect)
    throw std::invalid_argument(
        "rows do not span a lattice between 2O^n and O^n");
  return l;
}

IntegerLattice IntegerLattice::full_ring(int n) {
  const auto& a2 = Ring::instance().alphas2();
  std::vector<LatticeVector> rows;
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < 8; ++k) {
      LatticeVector v(8 * n, 0);
      set_block(v, m, a2[k]);
      rows.push_back(v);
    }
  return from_basis(n, std::move(rows));
}

IntegerLattice IntegerLattice::doubled_ring(int n) {
  const auto& a2 = Ring::instance().alphas2();
  std::vector<LatticeVector> rows;
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < 8; ++k) {
      LatticeVector v(8 * n, 0);
      IntOct b;
      for (int i = 0; i < 8; ++i) b[i] = 2 * a2[k][i];
      set_block(v, m, b);
      rows.push_back(v);
    }
  return from_basis(n, std::move(rows));
}

IntegerLattice IntegerLattice::from_image(int n,
                                          std::vector<std::uint32_t> words) {
  std::vector<std::uint32_t> image;
  for (const std::uint32_t w : words) rref_insert(image, w);
  const auto& a2 = Ring::instance().alphas2();
  std::vector<LatticeVector> rows;
  std::uint32_t pivots = 0;
  for (const std::uint32_t r : image) pivots |= 1u << top_bit(r);
  // lift each echelon row to the 0/1 alpha-coordinate vector with its bits,
  // then fill up with 2*alpha at the non-pivot positions; for reduced rows
  // this is a basis (downward substitution recovers every 2*alpha_pivot)
  for (const std::uint32_t r : image) {
    LatticeVector v(8 * n, 0);
    for (int bit = 0; bit < 8 * n; ++bit)
      if ((r >> bit) & 1u)
        set_block(v, bit / 8, add(block_of(v, bit / 8), a2[bit % 8]));
    rows.push_back(v);
  }
  for (int bit = 0; bit < 8 * n; ++bit) {
    if ((pivots >> bit) & 1u) continue;
    LatticeVector v(8 * n, 0);
    IntOct b;
    for (int i = 0; i < 8; ++i) b[i] = 2 * a2[bit % 8][i];
    set_block(v, bit / 8, b);
    rows.push_back(v);
  }
  return from_basis(n, std::move(rows));
}

IntGram IntegerLattice::gram2() const {
  const int d = dim();
  IntGram g(d, std::vector<std::int64_t>(d, 0));
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      std::int64_t raw = 0;
      for (int m = 0; m < n_; ++m)
        raw += raw_dot(block_of(basis_[i], m), block_of(basis_[j], m));
      if (raw % 2 != 0) throw std::logic_error("non-integral inner product");
      g[i][j] = g[j][i] = raw / 2;
    }
  return g;
}

BigInt IntegerLattice::gram2_det() const {
  const IntGram g = gram2();
  const int d = dim();
  std::vector<std::vector<BigInt>> a(d, std::vector<BigInt>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[i][j] = g[i][j];
  // fraction-free Bareiss elimination
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < d; ++k) {
    if (a[k][k] == 0) {
      int r = k + 1;
      while (r < d && a[r][k] == 0) ++r;
      if (r == d) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i)
      for (int j = k + 1; j < d; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[d - 1][d - 1];
}

bool IntegerLattice::is_even_unimodular() const {
  const IntGram g = gram2();
  const int d = dim();
  for (int i = 0; i < d; ++i) {
    if (g[i][i] % 4 != 0) return false;
    for (int j = 0; j < d; ++j)
      if (g[i][j] % 2 != 0) return false;
  }
  BigInt target = 1;
  for (int i = 0; i < d; ++i) target *= 2;
  return gram2_det() == target;
}

bool IntegerLattice::contains(const LatticeVector& v) const {
  if (static_cast<int>(v.size()) != dim())
    throw std::invalid_argument("dimension mismatch");
  for (int m = 0; m < n_; ++m)
    if (!in_ring2(block_of(v, m))) return false;
  return in_span(image_, reduce_word(n_, v));
}

bool IntegerLattice::contains(const IntegerLattice& m) const {
  if (n_ != m.n_) throw std::invalid_argument("dimension mismatch");
  for (const std::uint32_t r : m.image_)
    if (!in_span(image_, r)) return false;
  return true;
}

IntegerLattice IntegerLattice::intersect(const IntegerLattice& m) const {
  if (n_ != m.n_) throw std::invalid_argument("dimension mismatch");
  if (contains(m)) return m;
  if (m.contains(*this)) return *this;
  const auto& small = image_dim() <= m.image_dim() ? image_ : m.image_;
  const auto& other = image_dim() <= m.image_dim() ? m.image_ : image_;
  const int d = static_cast<int>(small.size());
  std::vector<std::uint32_t> inter;
  for (std::uint32_t mask = 1; mask < (1u << d); ++mask) {
    std::uint32_t w = 0;
    for (int i = 0; i < d; ++i)
      if ((mask >> i) & 1u) w ^= small[i];
    if (in_span(other, w)) rref_insert(inter, w);
  }
  return from_image(n_, std::move(inter));
}

IntegerLattice IntegerLattice::sum(const IntegerLattice& m) const {
  if (n_ != m.n_) throw std::invalid_argument("dimension mismatch");
  std::vector<std::uint32_t> words = image_;
  words.insert(words.end(), m.image_.begin(), m.image_.end());
  return from_image(n_, std::move(words));
}

int IntegerLattice::min_norm(int limit) const {
  const IntGram g = gram2();
  for (int t = 1; t <= limit; ++t) {
    if (!exists_nonzero_up_to(g, 2 * t)) continue;
    const auto pts = enumerate_up_to(g, 2 * t);
    std::int64_t best = 2 * t;
    for (const auto& p : pts) best = std::min(best, p.q);
    return static_cast<int>(best / 2);
  }
  throw std::domain_error("minimal norm exceeds the search limit");
}

std::vector<LatticeVector> IntegerLattice::short_vectors(int target_norm,
                                                         int threads) const {
  const auto pts = enumerate_exact(gram2(), 2 * target_norm, threads);
  const int d = dim();
  std::vector<LatticeVector> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    LatticeVector v(d, 0);
    for (int i = 0; i < d; ++i) {
      if (p.coeffs[i] == 0) continue;
      for (int j = 0; j < d; ++j) v[j] += p.coeffs[i] * basis_[i][j];
    }
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntegerLattice e8_sublattice(Side side, const IntOct& s2) {
  if (norm_scaled(s2) != 8 || !in_ring2(s2))
    throw std::invalid_argument("multiple lattice requires norm 2");
  const auto& a2 = Ring::instance().alphas2();
  std::vector<LatticeVector> rows;
  for (int k = 0; k < 8; ++k) {
    const IntOct b = side == Side::kRightMultiples ? halve(mul(a2[k], s2))
                                                   : halve(mul(s2, a2[k]));
    rows.emplace_back(b.begin(), b.end());
  }
  return IntegerLattice::from_basis(1, std::move(rows));
}

bool multiple_contains(Side side, const IntOct& s2, const IntOct& v2) {
  if (norm_scaled(s2) != 8 || !in_ring2(s2))
    throw std::invalid_argument("multiple lattice requires norm 2");
  const IntOct p = side == Side::kRightMultiples ? mul(v2, conj(s2))
                                                 : mul(conj(s2), v2);
  IntOct w;  // doubled coordinates of (v sbar)/2 resp. (sbar v)/2
  for (int i = 0; i < 8; ++i) {
    if (p[i] % 4 != 0) return false;
    w[i] = p[i] / 4;
  }
  return in_ring2(w);
}

IntegerLattice leech_from_pair(const IntegerLattice& phi,
                               const IntegerLattice& psi) {
  if (phi.blocks() != 1 || psi.blocks() != 1)
    throw std::invalid_argument("pair construction lives in O");
  if (!phi.is_even_unimodular() || !psi.is_even_unimodular())
    throw std::invalid_argument("pair must be even unimodular lattices");
  if (phi.sum(psi) != IntegerLattice::full_ring(1))
    throw std::invalid_argument("pair must sum to the whole ring");
  if (phi.intersect(psi) != IntegerLattice::doubled_ring(1))
    throw std::invalid_argument("pair must meet in twice the ring");

  std::vector<LatticeVector> rows;
  auto push3 = [&rows](const LatticeVector* a, const LatticeVector* b,
                       const LatticeVector* c) {
    LatticeVector v(24, 0);
    const LatticeVector* src[3] = {a, b, c};
    for (int m = 0; m < 3; ++m)
      if (src[m])
        for (int i = 0; i < 8; ++i) v[8 * m + i] = (*src[m])[i];
    rows.push_back(std::move(v));
  };
  for (const auto& x : phi.basis2()) push3(&x, &x, nullptr);
  for (const auto& x : phi.basis2()) push3(nullptr, &x, &x);
  for (const auto& y : psi.basis2()) push3(&y, &y, &y);
  return IntegerLattice::from_basis(3, std::move(rows));
}

IntegerLattice leech_lambda(const IntOct& u2, const IntOct& lambda2) {
  check_unit(u2);
  if (!in_ring2(lambda2) || norm_scaled(lambda2) != 8 || lambda2[0] != -1)
    throw std::invalid_argument("lambda must be a zero of x^2 + x + 2");
  const IntegerLattice leech = leech_from_pair(
      e8_sublattice(Side::kRightMultiples, conj(lambda2)),
      e8_sublattice(Side::kRightMultiples, lambda2));
  return translate(Translation::kLeft, u2, leech);
}

IntOct translate2(Translation kind, const IntOct& u2, const IntOct& x2) {
  check_unit(u2);
  switch (kind) {
    case Translation::kLeft:
      return halve(mul(u2, x2));
    case Translation::kRight:
      return halve(mul(x2, u2));
    case Translation::kBoth:
      return halve(mul(u2, halve(mul(x2, u2))));
  }
  throw std::logic_error("unreachable");
}

LatticeVector translate2(Translation kind, const IntOct& u2,
                         const LatticeVector& v) {
  if (v.size() % 8 != 0) throw std::invalid_argument("dimension mismatch");
  LatticeVector out(v.size());
  for (int m = 0; m < static_cast<int>(v.size()) / 8; ++m)
    set_block(out, m, translate2(kind, u2, block_of(v, m)));
  return out;
}

IntegerLattice translate(Translation kind, const IntOct& u2,
                         const IntegerLattice& l) {
  std::vector<LatticeVector> rows;
  rows.reserve(l.basis2().size());
  for (const auto& r : l.basis2()) rows.push_back(translate2(kind, u2, r));
  return IntegerLattice::from_basis(l.blocks(), std::move(rows));
}

Perm translation_permutation(Translation kind, const IntOct& u2) {
  const Ring& ring = Ring::instance();
  const auto& units = ring.units2();
  Perm p(units.size());
  for (int i = 0; i < static_cast<int>(units.size()); ++i) {
    const int img = ring.unit_index2(translate2(kind, u2, units[i]));
    if (img < 0) throw std::logic_error("translation left the unit set");
    p[i] = img;
  }
  return p;
}

namespace {

// translations are linear, so a word fixing a spanning set of units is the
// identity on all 240 of them
IdentityProbe spanning_unit_probe() {
  const auto& units = Ring::instance().units2();
  std::vector<std::array<Rational, 8>> rows;
  IdentityProbe probe;
  for (int i = 0; i < static_cast<int>(units.size()) && rows.size() < 8; ++i) {
    std::array<Rational, 8> cand;
    for (int j = 0; j < 8; ++j) cand[j] = Rational(units[i][j]);
    for (const auto& r : rows) {
      int p = 0;
      while (p < 8 && r[p] == 0) ++p;
      if (p < 8 && cand[p] != 0) {
        const Rational f = cand[p] / r[p];
        for (int j = p; j < 8; ++j) cand[j] -= f * r[j];
      }
    }
    int p = 0;
    while (p < 8 && cand[p] == 0) ++p;
    if (p == 8) continue;
    rows.push_back(cand);
    probe.points.push_back(i);
  }
  if (rows.size() != 8) throw std::logic_error("units fail to span");
  return probe;
}

PermGroup build_translation_group() {
  const Ring& ring = Ring::instance();
  std::set<Perm> gens;
  for (const Translation kind :
       {Translation::kLeft, Translation::kRight, Translation::kBoth})
    for (const IntOct& u : ring.units2())
      gens.insert(translation_permutation(kind, u));
  const std::vector<Perm> list(gens.begin(), gens.end());
  return PermGroup::schreier_sims(static_cast<int>(ring.units2().size()), list,
                                  spanning_unit_probe());
}

}  // namespace

PermGroup translation_group() {
  static const PermGroup group = build_translation_group();
  return group;
}

ShortVectorSet short_vector_set(const IntegerLattice& l, int target_norm,
                                int threads) {
  return ShortVectorSet{target_norm, l.short_vectors(target_norm, threads)};
}

}  // namespace octavian
