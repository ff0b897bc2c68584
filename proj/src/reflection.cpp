#include "octavian/reflection.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "octavian/mod2.hpp"

namespace octavian {

namespace {

std::array<IntOct, 3> split_blocks(const LatticeVector& v) {
  if (v.size() != 24)
    throw std::invalid_argument("reflections act on O^3 (24 coordinates)");
  std::array<IntOct, 3> b{};
  for (int m = 0; m < 3; ++m)
    for (int i = 0; i < 8; ++i) b[m][i] = v[8 * m + i];
  return b;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(std::llabs(a), std::llabs(b));
}

struct VecHash {
  std::size_t operator()(const LatticeVector& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

OctVector to_oct_vector(const LatticeVector& v) {
  const auto b = split_blocks(v);
  OctVector x;
  for (int m = 0; m < 3; ++m) x.e[m] = to_octonion(b[m], 2);
  return x;
}

VectorClass classify_triple(const LatticeVector& v) {
  return classify_vector(to_oct_vector(v));
}

HermitianProjector projector(const LatticeVector& r) {
  const auto b = split_blocks(r);
  if (classify_triple(r) == VectorClass::kGeneric)
    throw std::invalid_argument("projector requires an associative triple");
  std::int64_t ns = 0;  // 4 N(r)
  for (const auto& blk : b) ns += norm_scaled(blk);
  if (ns == 0) throw std::invalid_argument("projector requires a nonzero vector");

  HermitianProjector p;
  p.den = ns;
  std::int64_t g = ns;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) {
      // conj(r_j) r_k in raw products of doubled blocks = 4 * true value,
      // and den = 4 N(r), so entry (j,k) = num / den exactly.
      p.num[j][k] = mul(conj(b[j]), b[k]);
      for (std::int64_t c : p.num[j][k]) g = gcd64(g, c);
    }
  if (g > 1) {
    p.den /= g;
    for (auto& row : p.num)
      for (auto& e : row)
        for (auto& c : e) c /= g;
  }
  return p;
}

// ---------------------------------------------------------------------------
// LinearIsometry
// ---------------------------------------------------------------------------

void LinearIsometry::normalize() {
  std::int64_t g = den_;
  for (const auto& row : num_)
    for (std::int64_t e : row) {
      g = gcd64(g, e);
      if (g == 1) break;
    }
  if (g > 1) {
    den_ /= g;
    for (auto& row : num_)
      for (auto& e : row) e /= g;
  }
}

LinearIsometry LinearIsometry::identity() {
  LinearIsometry m;
  for (int i = 0; i < 24; ++i) m.num_[i][i] = 1;
  return m;
}

LinearIsometry LinearIsometry::from_projector(const HermitianProjector& p) {
  // x -> x(I - 2[p]), evaluated as out_j = x_j - 2 sum_k x_k p_kj in the
  // fixed left-to-right order. On doubled coordinates the impulse at
  // (block m, coordinate i) maps to den*delta_jm e_i - 2 mul(e_i, num_mj).
  LinearIsometry m;
  m.den_ = p.den;
  for (int blk = 0; blk < 3; ++blk)
    for (int i = 0; i < 8; ++i) {
      const int col = 8 * blk + i;
      IntOct impulse{};
      impulse[i] = 1;
      for (int j = 0; j < 3; ++j) {
        const IntOct prod = mul(impulse, p.num[blk][j]);
        for (int t = 0; t < 8; ++t) {
          std::int64_t e = -2 * prod[t];
          if (j == blk && t == i) e += p.den;
          m.num_[8 * j + t][col] = e;
        }
      }
    }
  m.normalize();
  return m;
}

LinearIsometry LinearIsometry::reflection(const LatticeVector& r) {
  return from_projector(projector(r));
}

LinearIsometry LinearIsometry::coordinate_map(const std::array<int, 3>& perm,
                                              const std::array<int, 3>& signs) {
  std::array<bool, 3> seen{};
  for (int m = 0; m < 3; ++m) {
    if (perm[m] < 0 || perm[m] > 2 || seen[perm[m]])
      throw std::invalid_argument("coordinate map needs a permutation of 0..2");
    seen[perm[m]] = true;
    if (signs[m] != 1 && signs[m] != -1)
      throw std::invalid_argument("coordinate map signs must be +1 or -1");
  }
  LinearIsometry m;
  for (int blk = 0; blk < 3; ++blk)
    for (int i = 0; i < 8; ++i) m.num_[8 * blk + i][8 * perm[blk] + i] = signs[blk];
  return m;
}

LinearIsometry LinearIsometry::block_left_multiplication(const IntOct& u2) {
  if (norm_scaled(u2) != 4)
    throw std::invalid_argument("block multiplication requires a unit");
  LinearIsometry m;
  m.den_ = 2;
  for (int blk = 0; blk < 3; ++blk)
    for (int i = 0; i < 8; ++i) {
      IntOct impulse{};
      impulse[i] = 1;
      const IntOct prod = mul(u2, impulse);
      for (int t = 0; t < 8; ++t) m.num_[8 * blk + t][8 * blk + i] = prod[t];
    }
  m.normalize();
  return m;
}

bool LinearIsometry::apply_integral(const LatticeVector& v,
                                    LatticeVector* out) const {
  if (static_cast<int>(v.size()) != 24)
    throw std::invalid_argument("dimension mismatch");
  out->assign(24, 0);
  for (int r = 0; r < 24; ++r) {
    std::int64_t s = 0;
    for (int c = 0; c < 24; ++c) s += num_[r][c] * v[c];
    if (s % den_ != 0) return false;
    (*out)[r] = s / den_;
  }
  return true;
}

LatticeVector LinearIsometry::apply(const LatticeVector& v) const {
  LatticeVector out;
  if (!apply_integral(v, &out))
    throw std::domain_error("image has non-integral doubled coordinates");
  return out;
}

LinearIsometry LinearIsometry::then(const LinearIsometry& next) const {
  LinearIsometry m;
  m.den_ = den_ * next.den_;
  for (int r = 0; r < 24; ++r)
    for (int c = 0; c < 24; ++c) {
      std::int64_t s = 0;
      for (int k = 0; k < 24; ++k) s += next.num_[r][k] * num_[k][c];
      m.num_[r][c] = s;
    }
  m.normalize();
  return m;
}

LinearIsometry LinearIsometry::transpose() const {
  LinearIsometry m;
  m.den_ = den_;
  for (int r = 0; r < 24; ++r)
    for (int c = 0; c < 24; ++c) m.num_[r][c] = num_[c][r];
  return m;
}

bool LinearIsometry::is_identity() const { return *this == identity(); }

bool LinearIsometry::is_involution() const { return then(*this).is_identity(); }

bool LinearIsometry::preserves_gram() const {
  const std::int64_t d2 = den_ * den_;
  for (int a = 0; a < 24; ++a)
    for (int b = a; b < 24; ++b) {
      std::int64_t s = 0;
      for (int r = 0; r < 24; ++r) s += num_[r][a] * num_[r][b];
      if (s != (a == b ? d2 : 0)) return false;
    }
  return true;
}

bool LinearIsometry::is_coordinate_map() const {
  if (den_ != 1) return false;
  for (int blk = 0; blk < 3; ++blk) {
    int target = -1, sign = 0;
    for (int i = 0; i < 8; ++i) {
      const int row = 8 * blk + i;
      int nz = -1;
      for (int c = 0; c < 24; ++c) {
        if (num_[row][c] == 0) continue;
        if (nz >= 0 || (num_[row][c] != 1 && num_[row][c] != -1)) return false;
        nz = c;
      }
      if (nz < 0 || nz % 8 != i) return false;
      if (i == 0) {
        target = nz / 8;
        sign = static_cast<int>(num_[row][nz]);
      } else if (nz / 8 != target || num_[row][nz] != sign) {
        return false;
      }
    }
  }
  return true;
}

bool stabilizes_lattice(const LinearIsometry& m, const IntegerLattice& l) {
  if (l.dim() != 24) throw std::invalid_argument("dimension mismatch");
  LatticeVector image;
  for (const auto& row : l.basis2()) {
    if (!m.apply_integral(row, &image)) return false;
    if (!l.contains(image)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Census of commutative short vectors and their reflections
// ---------------------------------------------------------------------------

ShortVectorCensus census_commutative_short(
    const IntegerLattice& leech, const std::vector<LatticeVector>& shorts,
    const IntOct& lambda2) {
  const Ring& ring = Ring::instance();
  const std::uint8_t lam_class = ring.reduce2(lambda2);
  ShortVectorCensus out;
  for (const auto& v : shorts) {
    const auto b = split_blocks(v);
    bool comm = true;
    for (int j = 0; j < 3 && comm; ++j)
      for (int k = j + 1; k < 3 && comm; ++k)
        comm = is_zero(sub(::octavian::mul(b[j], b[k]),
                           ::octavian::mul(b[k], b[j])));
    if (!comm) continue;
    ++out.commutative;
    if (!stabilizes_lattice(LinearIsometry::reflection(v), leech)) continue;
    ++out.reflective;

    std::array<std::int64_t, 3> ns{norm_scaled(b[0]), norm_scaled(b[1]),
                                   norm_scaled(b[2])};
    auto sorted = ns;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == std::array<std::int64_t, 3>{0, 0, 16}) {
      // (2u, 0, 0): the doubled block is twice the doubled unit.
      for (int m = 0; m < 3; ++m)
        if (ns[m] == 16 && ring.unit_index2(halve(b[m])) < 0)
          throw std::logic_error("norm-4 block is not twice a unit");
      ++out.sign_type;
    } else if (sorted == std::array<std::int64_t, 3>{0, 8, 8}) {
      // (s, +-s, 0) for s a root in the right-multiple lattice of conj(l).
      IntOct s{};
      bool matched = true;
      for (int m = 0; m < 3; ++m) {
        if (ns[m] == 0) continue;
        if (is_zero(s))
          s = b[m];
        else
          matched = (b[m] == s) || (b[m] == sub(IntOct{}, s));
      }
      if (!matched || !multiple_contains(Side::kRightMultiples, conj(lambda2), s))
        throw std::logic_error("root pair fails the swap-type certificate");
      ++out.swap_type;
    } else if (sorted == std::array<std::int64_t, 3>{4, 4, 8}) {
      // (+-1, +-1, l') with l' in the frame of l.
      for (int m = 0; m < 3; ++m) {
        const bool ok = ns[m] == 8
                            ? ring.reduce2(b[m]) == lam_class
                            : (std::llabs(b[m][0]) == 2 && norm_scaled(b[m]) == 4);
        if (!ok) throw std::logic_error("mixed-type block certificate failed");
      }
      ++out.mixed_type;
      out.mixed_vectors.push_back(v);
    } else {
      ++out.unclassified;
    }
  }
  std::sort(out.mixed_vectors.begin(), out.mixed_vectors.end());
  return out;
}

// ---------------------------------------------------------------------------
// Chain lattices and vector domains
// ---------------------------------------------------------------------------

std::vector<IntOct> chain_lambdas(const IntOct& lambda2) {
  const Ring& ring = Ring::instance();
  const Mod2& mod2 = Mod2::instance();
  const auto& frame = mod2.frame2(ring.reduce2(lambda2));
  std::vector<IntOct> out;
  for (const auto& v : frame)
    if (v[0] == lambda2[0]) out.push_back(v);
  std::sort(out.begin(), out.end());
  if (out.size() != 8)
    throw std::logic_error("expected eight frame members with matching real part");
  return out;
}

std::vector<LatticeVector> chain_seed_vectors(const IntOct& lambda_prime2) {
  const IntOct lc = conj(lambda_prime2);
  std::vector<LatticeVector> out(3, LatticeVector(24, 0));
  out[0][0] = 4;                       // (2, 0, 0)
  for (int i = 0; i < 8; ++i) {        // (conj(l'), 0, conj(l'))
    out[1][i] = lc[i];
    out[1][16 + i] = lc[i];
  }
  out[2][0] = 2;                       // (1, 1, l')
  out[2][8] = 2;
  for (int i = 0; i < 8; ++i) out[2][16 + i] = lambda_prime2[i];
  return out;
}

int VectorDomain::index_of(const LatticeVector& v) const {
  auto it = std::lower_bound(points.begin(), points.end(), v);
  if (it == points.end() || *it != v) return -1;
  return static_cast<int>(it - points.begin());
}

VectorDomain close_orbit(const std::vector<LinearIsometry>& gens,
                         const std::vector<LatticeVector>& seeds,
                         std::int64_t cap) {
  if (seeds.empty()) throw std::invalid_argument("orbit closure needs seeds");
  std::unordered_set<LatticeVector, VecHash> seen;
  std::deque<LatticeVector> queue;
  for (const auto& s : seeds)
    if (seen.insert(s).second) queue.push_back(s);
  while (!queue.empty()) {
    const LatticeVector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      LatticeVector w = g.apply(v);
      if (seen.insert(w).second) {
        if (static_cast<std::int64_t>(seen.size()) > cap)
          throw std::runtime_error("orbit closure exceeded the configured cap");
        queue.push_back(std::move(w));
      }
    }
  }
  VectorDomain d;
  d.points.assign(seen.begin(), seen.end());
  std::sort(d.points.begin(), d.points.end());
  return d;
}

Perm to_permutation(const LinearIsometry& m, const VectorDomain& d) {
  Perm p(d.points.size());
  LatticeVector image;
  for (std::size_t i = 0; i < d.points.size(); ++i) {
    int j = -1;
    if (m.apply_integral(d.points[i], &image)) j = d.index_of(image);
    if (j < 0)
      throw std::runtime_error("linear map does not stabilize the domain");
    p[i] = j;
  }
  return p;
}

IdentityProbe spanning_probe(const VectorDomain& d) {
  IdentityProbe probe;
  std::vector<std::array<Rational, 24>> rows;  // reduced echelon rows
  std::vector<int> pivots;
  for (std::size_t i = 0; i < d.points.size() && rows.size() < 24; ++i) {
    std::array<Rational, 24> r;
    for (int c = 0; c < 24; ++c) r[c] = d.points[i][c];
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (r[pivots[k]] == 0) continue;
      const Rational f = r[pivots[k]];
      for (int c = 0; c < 24; ++c) r[c] -= f * rows[k][c];
    }
    int p = -1;
    for (int c = 0; c < 24; ++c)
      if (r[c] != 0) {
        p = c;
        break;
      }
    if (p < 0) continue;
    const Rational f = r[p];
    for (int c = 0; c < 24; ++c) r[c] /= f;
    rows.push_back(r);
    pivots.push_back(p);
    probe.points.push_back(static_cast<std::int32_t>(i));
  }
  return probe;
}

// ---------------------------------------------------------------------------
// Suzuki chain groups
// ---------------------------------------------------------------------------

ChainReport suzuki_chain(int k, const std::vector<int>& lambda_indices,
                         const IntOct& lambda2, CertificationMode mode,
                         std::uint64_t seed, std::int64_t orbit_cap) {
  if (k < 1 || k > 6) throw std::invalid_argument("chain length must be 1..6");
  if (static_cast<int>(lambda_indices.size()) != k)
    throw std::invalid_argument("need exactly k frame indices");
  const auto lams = chain_lambdas(lambda2);
  std::vector<bool> used(lams.size(), false);
  for (int idx : lambda_indices) {
    if (idx < 0 || idx >= static_cast<int>(lams.size()) || used[idx])
      throw std::invalid_argument("frame indices must be distinct and in 0..7");
    used[idx] = true;
  }

  std::vector<LinearIsometry> gens;
  std::vector<LatticeVector> seeds;
  for (int idx : lambda_indices)
    for (const auto& s : chain_seed_vectors(lams[idx])) {
      gens.push_back(LinearIsometry::reflection(s));
      seeds.push_back(s);
    }

  ChainReport rep;
  rep.k = k;
  rep.lambda_indices = lambda_indices;
  rep.generator_count = static_cast<int>(gens.size());

  VectorDomain domain = close_orbit(gens, seeds, orbit_cap);
  rep.domain_size = static_cast<std::int64_t>(domain.points.size());

  std::vector<Perm> perms;
  perms.reserve(gens.size());
  for (const auto& g : gens) perms.push_back(to_permutation(g, domain));
  const int n = static_cast<int>(domain.points.size());
  rep.orbit_sizes = PermGroup::orbit_sizes(n, perms);

  IdentityProbe probe = spanning_probe(domain);
  PermGroup group;
  switch (mode) {
    case CertificationMode::kDeterministic:
      group = PermGroup::schreier_sims(n, perms, probe);
      rep.order_exact = true;
      break;
    case CertificationMode::kRandomized:
      group = PermGroup::randomized_schreier_sims(n, perms, seed, probe);
      rep.order_exact = false;
      break;
    case CertificationMode::kRandomizedVerified:
      group = PermGroup::randomized_schreier_sims(n, perms, seed, probe);
      group.verify_deterministically();
      rep.order_exact = true;
      break;
  }
  rep.group_order = group.order();
  if (rep.group_order % 2 != 0)
    throw std::logic_error("chain group order is odd; negation is missing");
  rep.quotient_order = rep.group_order / 2;
  return rep;
}

std::vector<LinearIsometry> co1_generators(char variant, const IntOct& lambda2) {
  std::vector<LinearIsometry> out;
  if (variant == 'A') {
    const Ring& ring = Ring::instance();
    const Mod2& mod2 = Mod2::instance();
    const auto& frame = mod2.frame2(ring.reduce2(lambda2));
    for (int pos = 0; pos < 3; ++pos)
      for (int s1 : {2, -2})
        for (int s2 : {2, -2})
          for (const auto& lp : frame) {
            LatticeVector v(24, 0);
            const int a = pos == 0 ? 1 : 0;
            const int b = pos == 2 ? 1 : 2;
            v[8 * a] = s1;
            v[8 * b] = s2;
            for (int i = 0; i < 8; ++i) v[8 * pos + i] = lp[i];
            out.push_back(LinearIsometry::reflection(v));
          }
  } else if (variant == 'B') {
    static const std::array<std::array<int, 3>, 6> kPerms = {
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : kPerms)
      for (int mask = 0; mask < 8; ++mask)
        out.push_back(LinearIsometry::coordinate_map(
            p, {mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1}));
    for (const auto& lp : chain_lambdas(lambda2))
      for (int pos = 0; pos < 3; ++pos) {
        LatticeVector v(24, 0);
        const int a = pos == 0 ? 1 : 0;
        const int b = pos == 2 ? 1 : 2;
        v[8 * a] = 2;
        v[8 * b] = 2;
        for (int i = 0; i < 8; ++i) v[8 * pos + i] = lp[i];
        out.push_back(LinearIsometry::reflection(v));
      }
  } else {
    throw std::invalid_argument("generator variant is 'A' or 'B'");
  }
  return out;
}

}  // namespace octavian
