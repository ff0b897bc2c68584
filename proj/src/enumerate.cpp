#include "octavian/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace octavian {
namespace {

struct Ldl {
  int n = 0;
  std::vector<std::vector<Rational>> l;  // unit lower triangular
  std::vector<Rational> d;               // positive pivots
};

Ldl ldl_decompose(const IntGram& g) {
  Ldl out;
  const int n = static_cast<int>(g.size());
  out.n = n;
  out.l.assign(n, std::vector<Rational>(n, Rational(0)));
  out.d.assign(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    Rational di = g[i][i];
    for (int k = 0; k < i; ++k) di -= out.l[i][k] * out.l[i][k] * out.d[k];
    if (di <= 0) throw std::invalid_argument("Gram matrix not positive definite");
    out.d[i] = di;
    out.l[i][i] = 1;
    for (int j = i + 1; j < n; ++j) {
      Rational v = g[j][i];
      for (int k = 0; k < i; ++k) v -= out.l[j][k] * out.l[i][k] * out.d[k];
      out.l[j][i] = v / di;
    }
  }
  return out;
}

// Exact size reduction: repeatedly subtract integer multiples of earlier rows
// until every off-diagonal LDL coefficient has |mu| <= 1/2. Returns the
// unimodular transform U with  reduced_basis = U * original_basis.
std::vector<std::vector<std::int64_t>> size_reduce(IntGram& g) {
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<std::int64_t>> u(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) u[i][i] = 1;
  const Rational half(1, 2);
  Ldl f = ldl_decompose(g);
  for (int i = 1; i < n; ++i) {
    for (int j = i - 1; j >= 0; --j) {
      const Rational& mu = f.l[i][j];
      if (mu > half || mu < -half) {
        const BigInt qb = round_nearest(mu);
        assert(qb.fits_slong_p());
        const std::int64_t q = qb.get_si();
        for (int k = 0; k < n; ++k) {
          g[i][k] -= q * g[j][k];
          u[i][k] -= q * u[j][k];
        }
        for (int k = 0; k < n; ++k) g[k][i] -= q * g[k][j];
        // Live update of row i's coefficients (row j is unchanged).
        for (int k = 0; k <= j; ++k) f.l[i][k] -= q * f.l[j][k];
      }
    }
  }
  return u;
}

// One exact zig-zag depth-first walk. Levels run from n-1 (outermost) down
// to 0; `top_fixed` >= 0 pins the outermost coordinate (used to split work
// across threads deterministically).
class Walker {
 public:
  Walker(const Ldl& f, std::int64_t bound, bool stop_at_first)
      : f_(f),
        n_(f.n),
        bound_(bound),
        stop_at_first_(stop_at_first),
        x_(f.n, 0),
        sigma_(f.n + 1, std::vector<Rational>(f.n, Rational(0))) {}

  std::vector<EnumeratedPoint> run(std::int64_t top_fixed, bool top_all_zero) {
    out_.clear();
    found_ = false;
    const int top = n_ - 1;
    if (top_fixed != kNoFixed) {
      // Caller guarantees Q-feasibility of the pinned value.
      x_[top] = top_fixed;
      Rational t = f_.d[top] * Rational(top_fixed) * Rational(top_fixed);
      if (t <= bound_) {
        descend(top, t, top_all_zero && top_fixed == 0);
      }
    } else {
      level(top, Rational(0), true);
    }
    return std::move(out_);
  }

  [[nodiscard]] bool found() const { return found_; }

  static constexpr std::int64_t kNoFixed = INT64_MIN;

 private:
  void emit(Rational q) {
    EnumeratedPoint p;
    p.coeffs.assign(x_.begin(), x_.end());
    p.q = to_int64(q);
    EnumeratedPoint m;
    m.coeffs.resize(n_);
    for (int i = 0; i < n_; ++i) m.coeffs[i] = -p.coeffs[i];
    m.q = p.q;
    out_.push_back(std::move(p));
    out_.push_back(std::move(m));
    found_ = true;
  }

  void descend(int i, Rational used, bool all_zero) {
    if (found_ && stop_at_first_) return;
    if (i == 0) {
      if (!all_zero) emit(used);
      return;
    }
    for (int j = 0; j < i - 1 + 1; ++j)
      sigma_[i - 1][j] = sigma_[i][j] + f_.l[i][j] * x_[i];
    level(i - 1, used, all_zero);
  }

  void level(int i, Rational used, bool all_zero_above) {
    if (found_ && stop_at_first_) return;
    const Rational c = sigma_[i][i];
    const Rational budget = Rational(bound_) - used;
    std::int64_t x0;
    if (all_zero_above) {
      x0 = 0;
    } else {
      const BigInt r = round_nearest(-c);
      assert(r.fits_slong_p());
      x0 = r.get_si();
    }
    bool plus_done = false, minus_done = false;
    for (std::int64_t k = 0; !(plus_done && minus_done); ++k) {
      for (int side = 0; side < 2; ++side) {
        if (found_ && stop_at_first_) return;
        std::int64_t xi;
        if (side == 0) {
          if (plus_done) continue;
          xi = x0 + k;
        } else {
          if (minus_done || k == 0) continue;
          xi = x0 - k;
        }
        if (all_zero_above && xi < 0) {
          minus_done = true;
          continue;
        }
        Rational lin = Rational(xi) + c;
        Rational t = f_.d[i] * lin * lin;
        if (t > budget) {
          (side == 0 ? plus_done : minus_done) = true;
          continue;
        }
        x_[i] = xi;
        descend(i, used + t, all_zero_above && xi == 0);
      }
    }
  }

  const Ldl& f_;
  int n_;
  std::int64_t bound_;
  bool stop_at_first_;
  std::vector<std::int64_t> x_;
  std::vector<std::vector<Rational>> sigma_;
  std::vector<EnumeratedPoint> out_;
  bool found_ = false;
};

std::vector<EnumeratedPoint> run_enumeration(const IntGram& gram,
                                             std::int64_t bound, int threads,
                                             bool stop_at_first) {
  const int n = static_cast<int>(gram.size());
  if (n == 0 || bound <= 0) return {};
  for (const auto& row : gram)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("Gram matrix must be square");

  IntGram reduced = gram;
  const auto u = size_reduce(reduced);
  const Ldl f = ldl_decompose(reduced);

  // Outermost coordinate is nonnegative (the leading-sign convention); its
  // feasible values stand alone, so they parallelize cleanly.
  std::vector<std::int64_t> tops;
  for (std::int64_t v = 0;; ++v) {
    if (f.d[n - 1] * Rational(v) * Rational(v) > bound) break;
    tops.push_back(v);
  }

  std::vector<EnumeratedPoint> all;
  if (threads <= 1 || stop_at_first || tops.size() <= 1) {
    Walker w(f, bound, stop_at_first);
    for (std::int64_t v : tops) {
      auto part = w.run(v, true);
      all.insert(all.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
      if (stop_at_first && w.found()) break;
    }
  } else {
    const int t = std::min<int>(threads, static_cast<int>(tops.size()));
    std::vector<std::vector<EnumeratedPoint>> parts(tops.size());
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (int w = 0; w < t; ++w) {
      pool.emplace_back([&, w]() {
        Walker walker(f, bound, false);
        for (std::size_t idx = w; idx < tops.size(); idx += t)
          parts[idx] = walker.run(tops[idx], true);
      });
    }
    for (auto& th : pool) th.join();
    for (auto& part : parts)
      all.insert(all.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
  }

  // Map coefficients back to the caller's basis order.
  for (auto& p : all) {
    std::vector<std::int64_t> orig(n, 0);
    for (int i = 0; i < n; ++i) {
      if (p.coeffs[i] == 0) continue;
      for (int j = 0; j < n; ++j) orig[j] += p.coeffs[i] * u[i][j];
    }
    p.coeffs = std::move(orig);
  }
  if (!stop_at_first) {
    std::sort(all.begin(), all.end(),
              [](const EnumeratedPoint& a, const EnumeratedPoint& b) {
                return a.coeffs < b.coeffs;
              });
  }
  return all;
}

}  // namespace

std::vector<EnumeratedPoint> enumerate_up_to(const IntGram& gram,
                                             std::int64_t bound, int threads) {
  return run_enumeration(gram, bound, threads, false);
}

std::vector<EnumeratedPoint> enumerate_exact(const IntGram& gram,
                                             std::int64_t target,
                                             int threads) {
  auto all = enumerate_up_to(gram, target, threads);
  std::erase_if(all, [&](const EnumeratedPoint& p) { return p.q != target; });
  return all;
}

bool exists_nonzero_up_to(const IntGram& gram, std::int64_t bound) {
  return !run_enumeration(gram, bound, 1, true).empty();
}

}  // namespace octavian
