// Ad hoc: randomized lower bounds for the longer chains.
#include <chrono>
#include <cstdio>

#include "octavian/reflection.hpp"
#include "octavian/ring.hpp"

using namespace octavian;

static double now() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

int main(int argc, char** argv) {
  const Ring& ring = Ring::instance();
  const IntOct l2 = to_int_oct(ring.lambda_zeros().front(), 2);
  for (int k = 5; k <= (argc > 1 ? std::atoi(argv[1]) : 6); ++k) {
    std::vector<int> idx;
    for (int i = 0; i < k; ++i) idx.push_back(i);
    double t0 = now();
    auto rep = suzuki_chain(k, idx, l2, CertificationMode::kRandomized);
    std::printf("k=%d: domain=%lld order>=%s quotient=%s (%.1fs)\n", k,
                (long long)rep.domain_size, rep.group_order.get_str().c_str(),
                rep.quotient_order.get_str().c_str(), now() - t0);
    std::fflush(stdout);
  }
  return 0;
}
