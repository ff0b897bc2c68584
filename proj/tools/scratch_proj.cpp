// Ad hoc measurement: projective orbits, frames, polygon checks.
#include <chrono>
#include <cstdio>
#include <map>

#include "octavian/projective.hpp"
#include "octavian/ring.hpp"

using namespace octavian;

static double now() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

int main(int argc, char** argv) {
  const Ring& ring = Ring::instance();
  const IntOct l2 = to_int_oct(ring.lambda_zeros().front(), 2);
  const auto lams = chain_lambdas(l2);

  for (int k = 1; k <= (argc > 1 ? std::atoi(argv[1]) : 3); ++k) {
    std::vector<HermMat> gens;
    std::vector<ProjPoint> seeds;
    for (int idx = 0; idx < k; ++idx)
      for (const auto& s : chain_seed_vectors(lams[idx])) {
        gens.push_back(reflection_action(s));
        seeds.push_back(project_vector(s));
      }
    double t0 = now();
    PointOrbit orbit = point_orbit_closure(gens, seeds);
    double t1 = now();
    auto frames = jordan_frames(orbit.points);
    double t2 = now();
    auto check = generalized_polygon_check((int)orbit.points.size(), frames);
    double t3 = now();
    int real_pts = 0;
    for (const auto& p : orbit.points) real_pts += p.is_real();
    std::printf(
        "k=%d: points=%zu (%.2fs) lines=%zu (%.2fs) polygon ok=%d s=%d t=%d "
        "gon=%d [%s] (%.2fs) real=%d\n",
        k, orbit.points.size(), t1 - t0, frames.size(), t2 - t1, check.ok,
        check.s, check.t, check.gon, check.failure.c_str(), t3 - t2, real_pts);
    if (k <= 3) {  // angle multiset
      std::map<std::string, int> angles;
      for (size_t i = 0; i < orbit.points.size(); ++i)
        for (size_t j = i + 1; j < orbit.points.size(); ++j)
          angles[to_string(trace_inner(orbit.points[i], orbit.points[j]))]++;
      for (auto& [a, c] : angles) std::printf("  angle %s: %d pairs\n",
                                              a.c_str(), c);
    }
    std::fflush(stdout);
  }

  if (argc > 2) {
    double t0 = now();
    SteinerSelection sel = select_hexagonal_steiner(l2);
    std::printf("steiner: hexagonal orbit=%d (%.1fs)\n", sel.hexagonal_orbit,
                now() - t0);
    for (int o = 0; o < 3; ++o)
      std::printf("  orbit %d: closed=%d points=%lld hexagon=%d\n", o,
                  (int)sel.closed[o], (long long)sel.points[o],
                  (int)sel.hexagon[o]);
  }
  return 0;
}
