#include "octavian/mod2.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "octavian/ring.hpp"

namespace octavian {

namespace {

using Bits = std::bitset<kNorm2Classes>;

// N(x + y) for doubled coordinates (norm_scaled is 4N)
std::int64_t sum_norm(const IntOct& a, const IntOct& b) {
  return norm_scaled(add(a, b)) / 4;
}

void fill_parameters(Srg& g) {
  g.v = kNorm2Classes;
  bool ok = true;
  g.k = -1;
  for (int i = 0; i < g.v; ++i) {
    if (g.adj[i][i]) ok = false;
    const int deg = static_cast<int>(g.adj[i].count());
    if (g.k < 0)
      g.k = deg;
    else if (deg != g.k)
      ok = false;
  }
  g.lambda = -1;
  g.mu = -1;
  for (int i = 0; i < g.v; ++i) {
    for (int j = i + 1; j < g.v; ++j) {
      const int common = static_cast<int>((g.adj[i] & g.adj[j]).count());
      int& slot = g.adj[i][j] ? g.lambda : g.mu;
      if (slot < 0)
        slot = common;
      else if (common != slot)
        ok = false;
    }
  }
  g.strongly_regular = ok;
}

void bron_kerbosch(const std::array<Bits, kNorm2Classes>& adj, Bits p, Bits x,
                   std::vector<int>& r, std::vector<std::vector<int>>& out) {
  if (p.none() && x.none()) {
    out.push_back(r);
    return;
  }
  // pivot on the vertex of P | X covering the most of P
  int pivot = -1;
  std::size_t best = 0;
  const Bits px = p | x;
  for (int u = 0; u < kNorm2Classes; ++u) {
    if (!px[u]) continue;
    const std::size_t n = (p & adj[u]).count();
    if (pivot < 0 || n > best) {
      pivot = u;
      best = n;
    }
  }
  const Bits cand = p & ~adj[pivot];
  for (int v = 0; v < kNorm2Classes; ++v) {
    if (!cand[v]) continue;
    r.push_back(v);
    bron_kerbosch(adj, p & adj[v], x & adj[v], r, out);
    r.pop_back();
    p.reset(v);
    x.set(v);
  }
}

}  // namespace

std::int64_t Srg::directed_edges() const {
  std::int64_t n = 0;
  for (const auto& row : adj) n += static_cast<std::int64_t>(row.count());
  return n;
}

const Mod2& Mod2::instance() {
  static const Mod2 geom;
  return geom;
}

Mod2::Mod2() {
  const Ring& ring = Ring::instance();

  min_norm_.fill(-1);
  min_norm_[0] = 0;
  rep2_[0] = IntOct{};
  // units and norm-2 vectors are lex-sorted, so the first hit per residue is
  // the lex-least representative
  for (const IntOct& u : ring.units2()) {
    const std::uint8_t c = ring.reduce2(u);
    if (min_norm_[c] < 0) {
      min_norm_[c] = 1;
      rep2_[c] = u;
    }
  }
  std::vector<IntOct> roots;
  roots.reserve(ring.roots2().size());
  for (const Octonion& r : ring.roots2()) roots.push_back(to_int_oct(r, 2));
  for (const IntOct& r : roots) {
    const std::uint8_t c = ring.reduce2(r);
    if (min_norm_[c] < 0) {
      min_norm_[c] = 2;
      rep2_[c] = r;
    }
  }

  int n2 = 0;
  for (int c = 0; c < 256; ++c) {
    if (min_norm_[c] < 0)
      throw std::logic_error("residue class with no representative of norm <= 2");
    if (min_norm_[c] == 2) {
      norm2_index_[c] = n2;
      norm2_classes_[n2] = static_cast<std::uint8_t>(c);
      ++n2;
    } else {
      norm2_index_[c] = -1;
    }
  }
  if (n2 != kNorm2Classes)
    throw std::logic_error("unexpected number of norm-2 residue classes");

  for (const IntOct& r : roots)
    frames_[norm2_index_[ring.reduce2(r)]].push_back(r);
  for (const auto& f : frames_)
    if (f.size() != 16)
      throw std::logic_error("norm-2 class whose frame is not 16 vectors");

  for (int a = 0; a < 256; ++a)
    for (int b = 0; b < 256; ++b)
      mul_[a][b] = ring.reduce2(halve(::octavian::mul(rep2_[a], rep2_[b])));

  even_graph_.vertices = norm2_classes_;
  odd_graph_.vertices = norm2_classes_;
  for (int i = 0; i < kNorm2Classes; ++i) {
    for (int j = 0; j < kNorm2Classes; ++j) {
      if (i == j) continue;
      const IntOct& a = rep2_[norm2_classes_[i]];
      const IntOct& b = rep2_[norm2_classes_[j]];
      even_graph_.adj[i][j] = (raw_dot(a, b) & 3) == 0;  // <a,b> = raw/2 even
      odd_graph_.adj[i][j] = (sum_norm(a, b) & 1) == 1;
    }
  }
  fill_parameters(even_graph_);
  fill_parameters(odd_graph_);

  // spot-check that odd-sum adjacency does not depend on the representative:
  // for the first few edges, N(x + y) must be odd for all frame pairs
  int sampled = 0;
  for (int i = 0; i < kNorm2Classes && sampled < 4; ++i) {
    for (int j = i + 1; j < kNorm2Classes && sampled < 4; ++j) {
      if (!odd_graph_.adj[i][j]) continue;
      ++sampled;
      for (const IntOct& a : frames_[i])
        for (const IntOct& b : frames_[j])
          if ((sum_norm(a, b) & 1) != 1)
            throw std::logic_error(
                "odd-sum adjacency depends on the representative");
    }
  }
}

std::array<std::int64_t, 3> Mod2::class_histogram() const {
  std::array<std::int64_t, 3> h{};
  for (int c = 0; c < 256; ++c) ++h[min_norm_[c]];
  return h;
}

const std::vector<IntOct>& Mod2::frame2(std::uint8_t c) const {
  if (min_norm_[c] != 2)
    throw std::invalid_argument("frame of a class whose minimal norm is not 2");
  return frames_[norm2_index_[c]];
}

bool Mod2::inner_even(std::uint8_t a, std::uint8_t b) const {
  return (raw_dot(rep2_[a], rep2_[b]) & 3) == 0;
}

std::vector<std::vector<int>> Mod2::maximal_cliques() const {
  std::vector<std::vector<int>> out;
  std::vector<int> r;
  Bits p, x;
  p.set();
  bron_kerbosch(even_graph_.adj, p, x, r, out);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint8_t> Mod2::multiple_image(std::uint8_t c,
                                               bool s_on_left) const {
  if (min_norm_[c] != 2)
    throw std::invalid_argument("multiple image is defined for norm-2 classes");
  const Ring& ring = Ring::instance();
  std::set<std::uint8_t> span{0};
  for (int k = 0; k < 8; ++k) {
    const IntOct p2 = s_on_left
                          ? ::octavian::mul(rep2_[c], ring.alphas2()[k])
                          : ::octavian::mul(ring.alphas2()[k], rep2_[c]);
    const std::uint8_t g = ring.reduce2(halve(p2));
    if (span.count(g)) continue;
    const std::vector<std::uint8_t> old(span.begin(), span.end());
    for (const std::uint8_t e : old)
      span.insert(static_cast<std::uint8_t>(e ^ g));
  }
  return {span.begin(), span.end()};
}

}  // namespace octavian
