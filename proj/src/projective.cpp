#include "octavian/projective.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "octavian/ring.hpp"

namespace octavian {

namespace {

BigInt gcd_big(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Re(xy) without forming the product.
BigInt re_prod(const BigOct& x, const BigOct& y) {
  BigInt s = x[0] * y[0];
  for (int i = 1; i < 8; ++i) s -= x[i] * y[i];
  return s;
}

void normalize(HermMat* m) {
  BigInt g = m->den;
  for (const auto& row : m->e)
    for (const auto& o : row)
      for (const auto& c : o) {
        g = gcd_big(g, c);
        if (g == 1) return;
      }
  if (g > 1) {
    m->den /= g;
    for (auto& row : m->e)
      for (auto& o : row)
        for (auto& c : o) c /= g;
  }
}

}  // namespace

BigOct big_mul(const BigOct& a, const BigOct& b) {
  BigOct x{};
  for (int i = 0; i < 8; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (b[j] == 0) continue;
      const BasisProduct p = kMulTable[i][j];
      if (p.sign > 0)
        x[p.index] += a[i] * b[j];
      else
        x[p.index] -= a[i] * b[j];
    }
  }
  return x;
}

BigOct big_conj(const BigOct& a) {
  BigOct x = a;
  for (int i = 1; i < 8; ++i) x[i] = -x[i];
  return x;
}

HermMat HermMat::identity() {
  HermMat m;
  for (int j = 0; j < 3; ++j) m.e[j][j][0] = 1;
  return m;
}

bool HermMat::is_hermitian() const {
  for (int j = 0; j < 3; ++j)
    for (int k = j; k < 3; ++k)
      if (e[j][k] != big_conj(e[k][j])) return false;
  return true;
}

BigInt HermMat::trace_num() const { return e[0][0][0] + e[1][1][0] + e[2][2][0]; }

bool HermMat::operator==(const HermMat& o) const {
  return den == o.den && e == o.e;
}

HermMat mat_mul(const HermMat& a, const HermMat& b) {
  HermMat c;
  c.den = a.den * b.den;
  for (int j = 0; j < 3; ++j)
    for (int m = 0; m < 3; ++m) {
      BigOct s{};
      for (int k = 0; k < 3; ++k) {
        const BigOct p = big_mul(a.e[j][k], b.e[k][m]);
        for (int i = 0; i < 8; ++i) s[i] += p[i];
      }
      c.e[j][m] = s;
    }
  normalize(&c);
  return c;
}

HermMat mat_add(const HermMat& a, const HermMat& b) {
  HermMat c;
  c.den = a.den * b.den;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 8; ++i)
        c.e[j][k][i] = a.e[j][k][i] * b.den + b.e[j][k][i] * a.den;
  normalize(&c);
  return c;
}

bool ProjPoint::operator<(const ProjPoint& o) const {
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 8; ++i) {
        const int c = mpz_cmp(m[j][k][i].get_mpz_t(), o.m[j][k][i].get_mpz_t());
        if (c != 0) return c < 0;
      }
  return false;
}

bool ProjPoint::is_real() const {
  for (const auto& row : m)
    for (const auto& o : row)
      for (int i = 1; i < 8; ++i)
        if (o[i] != 0) return false;
  return true;
}

std::uint64_t ProjPoint::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& row : m)
    for (const auto& o : row)
      for (const auto& c : o) {
        const unsigned long r = mpz_fdiv_ui(c.get_mpz_t(), 0xfffffffbUL);
        h ^= r + (mpz_sgn(c.get_mpz_t()) < 0 ? 0x9e3779b97f4a7c15ull : 0);
        h *= 1099511628211ull;
      }
  return h;
}

namespace {

bool try_canonical_point(const HermMat& in, ProjPoint* out) {
  // Scale and sign: primitive integer entries, first nonzero positive.
  BigInt g = 0;
  for (const auto& row : in.e)
    for (const auto& o : row)
      for (const auto& c : o) g = gcd_big(g, c);
  if (g == 0) return false;
  int sign = 0;
  for (int j = 0; j < 3 && sign == 0; ++j)
    for (int k = 0; k < 3 && sign == 0; ++k)
      for (int i = 0; i < 8 && sign == 0; ++i)
        if (in.e[j][k][i] != 0) sign = mpz_sgn(in.e[j][k][i].get_mpz_t());
  if (sign < 0) g = -g;

  ProjPoint p;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 8; ++i) p.m[j][k][i] = in.e[j][k][i] / g;

  // Certify the projector law on the canonical matrix: hermitian, positive
  // real trace, and P^2 = tr(P) P.
  HermMat hm;
  hm.e = p.m;
  if (!hm.is_hermitian()) return false;
  for (int j = 0; j < 3; ++j)
    if (hm.e[j][j][0] < 0) return false;
  p.trace = hm.trace_num();
  if (p.trace <= 0) return false;
  const HermMat sq = mat_mul(hm, hm);  // den stays 1
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 8; ++i)
        if (sq.e[j][k][i] * sq.den != p.trace * p.m[j][k][i]) return false;
  *out = p;
  return true;
}

}  // namespace

ProjPoint canonical_point(const HermMat& m) {
  ProjPoint p;
  if (!try_canonical_point(m, &p))
    throw std::invalid_argument("matrix does not scale to a projector point");
  return p;
}

ProjPoint project_vector(const LatticeVector& r) {
  const HermitianProjector hp = projector(r);
  HermMat m;
  m.den = hp.den;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 8; ++i) m.e[j][k][i] = hp.num[j][k][i];
  return canonical_point(m);
}

HermMat reflection_action(const LatticeVector& r) {
  const HermitianProjector hp = projector(r);
  HermMat m;
  m.den = hp.den;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 8; ++i) {
        BigInt v = -2 * BigInt(hp.num[j][k][i]);
        if (j == k && i == 0) v += hp.den;
        m.e[j][k][i] = v;
      }
  normalize(&m);
  return m;
}

ProjPoint reflect_point(const HermMat& a, const ProjPoint& p) {
  HermMat hp;
  hp.e = p.m;
  const HermMat right = mat_mul(a, mat_mul(hp, a));
  const HermMat left = mat_mul(mat_mul(a, hp), a);
  if (!(right == left))
    throw std::logic_error("projective reflection is ill-defined here");
  return canonical_point(right);
}

Rational trace_inner(const ProjPoint& p, const ProjPoint& q) {
  BigInt num = 0;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) num += re_prod(p.m[j][k], q.m[k][j]);
  Rational r(num, p.trace * q.trace);
  r.canonicalize();
  return r;
}

PointOrbit point_orbit_closure(const std::vector<HermMat>& gens,
                               const std::vector<ProjPoint>& seeds,
                               std::int64_t cap) {
  if (seeds.empty()) throw std::invalid_argument("orbit closure needs seeds");
  PointOrbit out;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;
  auto find_or_insert = [&](const ProjPoint& p) {
    auto& slot = buckets[p.hash()];
    for (int idx : slot)
      if (out.points[idx] == p) return false;
    slot.push_back(static_cast<int>(out.points.size()));
    out.points.push_back(p);
    return true;
  };
  std::deque<int> queue;
  for (const auto& s : seeds)
    if (find_or_insert(s)) queue.push_back(static_cast<int>(out.points.size()) - 1);
  while (!queue.empty()) {
    const int at = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const ProjPoint img = reflect_point(g, out.points[at]);
      if (find_or_insert(img)) {
        if (static_cast<std::int64_t>(out.points.size()) > cap) {
          out.exceeded_cap = true;
          std::sort(out.points.begin(), out.points.end());
          return out;
        }
        queue.push_back(static_cast<int>(out.points.size()) - 1);
      }
    }
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

int point_index(const std::vector<ProjPoint>& points, const ProjPoint& p) {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || !(*it == p)) return -1;
  return static_cast<int>(it - points.begin());
}

std::vector<std::array<int, 3>> jordan_frames(
    const std::vector<ProjPoint>& points) {
  const int n = static_cast<int>(points.size());
  std::set<std::array<int, 3>> frames;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      BigInt num = 0;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          num += re_prod(points[i].m[a][b], points[j].m[b][a]);
      if (num != 0) continue;  // not orthogonal
      // Complete the pair: s = I - p - q with unit-trace scalings.
      HermMat s;
      s.den = points[i].trace * points[j].trace;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          for (int c = 0; c < 8; ++c) {
            BigInt v = -points[i].m[a][b][c] * points[j].trace -
                       points[j].m[a][b][c] * points[i].trace;
            if (a == b && c == 0) v += s.den;
            s.e[a][b][c] = v;
          }
      ProjPoint third;
      if (!try_canonical_point(s, &third)) continue;
      const int kk = point_index(points, third);
      if (kk < 0) continue;
      std::array<int, 3> line{i, j, kk};
      std::sort(line.begin(), line.end());
      if (line[0] == line[1] || line[1] == line[2]) continue;
      frames.insert(line);
    }
  return std::vector<std::array<int, 3>>(frames.begin(), frames.end());
}

PolygonCheck generalized_polygon_check(
    int point_count, const std::vector<std::array<int, 3>>& lines) {
  PolygonCheck out;
  if (point_count <= 0 || lines.empty()) {
    out.failure = "empty geometry";
    return out;
  }
  const int n = point_count + static_cast<int>(lines.size());
  std::vector<std::vector<int>> adj(n);
  std::vector<int> degree(point_count, 0);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int lnode = point_count + static_cast<int>(li);
    for (int p : lines[li]) {
      if (p < 0 || p >= point_count) {
        out.failure = "line references a missing point";
        return out;
      }
      adj[p].push_back(lnode);
      adj[lnode].push_back(p);
      ++degree[p];
    }
  }
  for (int p = 0; p < point_count; ++p)
    if (degree[p] != degree[0]) {
      out.failure = "points lie on different numbers of lines";
      return out;
    }
  if (degree[0] < 2) {
    out.failure = "thin geometry: a point on fewer than two lines";
    return out;
  }

  int diameter = 0;
  int girth = -1;
  std::vector<int> dist(n), parent(n);
  std::deque<int> q;
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    dist[root] = 0;
    q.clear();
    q.push_back(root);
    while (!q.empty()) {
      const int u = q.front();
      q.pop_front();
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push_back(v);
        } else if (v != parent[u]) {
          const int cyc = dist[u] + dist[v] + 1;
          if (girth < 0 || cyc < girth) girth = cyc;
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (dist[v] < 0) {
        out.failure = "incidence graph is disconnected";
        return out;
      }
      diameter = std::max(diameter, dist[v]);
    }
  }
  out.s = 2;  // lines here are always triples
  out.t = degree[0] - 1;
  out.gon = diameter;
  if (girth != 2 * diameter) {
    out.failure = "incidence girth is not twice the diameter";
    return out;
  }
  out.ok = true;
  return out;
}

SteinerSelection select_hexagonal_steiner(const IntOct& lambda2,
                                          std::int64_t cap) {
  const Ring& ring = Ring::instance();
  const FrameStabilizer fs = ring.frame_stabilizer(to_octonion(lambda2, 2));
  if (fs.quad_orbits.size() != 3)
    throw std::logic_error("expected three quadruple orbits");
  const auto lams = chain_lambdas(lambda2);

  SteinerSelection sel;
  for (int o = 0; o < 3; ++o) {
    const auto& quad = fs.quad_orbits[o].front();
    std::vector<HermMat> gens;
    std::vector<ProjPoint> seeds;
    for (int idx : quad)
      for (const auto& s : chain_seed_vectors(lams[idx])) {
        gens.push_back(reflection_action(s));
        seeds.push_back(project_vector(s));
      }
    const PointOrbit orbit = point_orbit_closure(gens, seeds, cap);
    sel.closed[o] = !orbit.exceeded_cap;
    if (!sel.closed[o]) continue;
    sel.points[o] = static_cast<std::int64_t>(orbit.points.size());
    const auto frames = jordan_frames(orbit.points);
    const PolygonCheck check = generalized_polygon_check(
        static_cast<int>(orbit.points.size()), frames);
    sel.hexagon[o] = check.ok && check.s == 2 && check.t == 8 && check.gon == 6;
    if (sel.hexagon[o])
      sel.hexagonal_orbit = sel.hexagonal_orbit < 0 ? o : -2;
  }
  if (sel.hexagonal_orbit == -2) sel.hexagonal_orbit = -1;  // not unique
  return sel;
}

ConstructionReport common_construction(int k,
                                       const std::vector<int>& lambda_indices,
                                       const IntOct& lambda2,
                                       CertificationMode mode,
                                       std::uint64_t seed,
                                       std::int64_t vector_cap,
                                       std::int64_t point_cap) {
  ConstructionReport rep;
  rep.chain = suzuki_chain(k, lambda_indices, lambda2, mode, seed, vector_cap);

  const auto lams = chain_lambdas(lambda2);
  std::vector<HermMat> gens;
  std::vector<ProjPoint> seeds;
  for (int idx : lambda_indices)
    for (const auto& s : chain_seed_vectors(lams[idx])) {
      gens.push_back(reflection_action(s));
      seeds.push_back(project_vector(s));
    }
  const PointOrbit orbit = point_orbit_closure(gens, seeds, point_cap);
  rep.cap_exceeded = orbit.exceeded_cap;
  if (rep.cap_exceeded) return rep;
  rep.point_count = static_cast<std::int64_t>(orbit.points.size());
  const auto frames = jordan_frames(orbit.points);
  rep.line_count = static_cast<std::int64_t>(frames.size());
  rep.polygon = generalized_polygon_check(static_cast<int>(orbit.points.size()),
                                          frames);
  return rep;
}

}  // namespace octavian
