// Ad hoc measurement: Co1 generator-set equality by bidirectional sifting.
#include <algorithm>
#include <chrono>
#include <cstdio>

#include "octavian/lattice.hpp"
#include "octavian/reflection.hpp"
#include "octavian/ring.hpp"

using namespace octavian;

static double now() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

int main() {
  const Ring& ring = Ring::instance();
  const IntOct l2 = to_int_oct(ring.lambda_zeros().front(), 2);
  IntegerLattice leech = leech_lambda(to_int_oct(Octonion::one(), 2), l2);

  double t0 = now();
  VectorDomain dom;
  dom.points = leech.short_vectors(4);
  std::printf("domain: %zu (%.1fs)\n", dom.points.size(), now() - t0);

  auto ga = co1_generators('A', l2);
  auto gb = co1_generators('B', l2);

  auto to_perms = [&](std::vector<LinearIsometry> g) {
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::vector<Perm> out;
    for (const auto& m : g) out.push_back(to_permutation(m, dom));
    return out;
  };
  t0 = now();
  auto pa = to_perms(ga);
  auto pb = to_perms(gb);
  std::printf("distinct perms: A=%zu B=%zu (%.1fs)\n", pa.size(), pb.size(),
              now() - t0);

  IdentityProbe probe = spanning_probe(dom);
  const int n = static_cast<int>(dom.points.size());

  t0 = now();
  PermGroup A = PermGroup::randomized_schreier_sims(n, pa, 0xc01a, probe, 24);
  std::printf("A chain: order>=%s, %d strong gens, base %zu (%.1fs)\n",
              A.order().get_str().c_str(), A.strong_generator_count(),
              A.base_points().size(), now() - t0);

  t0 = now();
  int ok = 0;
  for (const auto& g : pb) ok += A.contains_with_growth(g);
  std::printf("B in A: %d/%zu (%.1fs)\n", ok, pb.size(), now() - t0);

  t0 = now();
  PermGroup B = PermGroup::randomized_schreier_sims(n, pb, 0xc01b, probe, 24);
  std::printf("B chain: order>=%s, %d strong gens (%.1fs)\n",
              B.order().get_str().c_str(), B.strong_generator_count(),
              now() - t0);

  t0 = now();
  ok = 0;
  for (const auto& g : pa) ok += B.contains_with_growth(g);
  std::printf("A in B: %d/%zu (%.1fs)\n", ok, pa.size(), now() - t0);
  return 0;
}
