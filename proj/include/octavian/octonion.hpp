#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "octavian/rational.hpp"

namespace octavian {

// Basis order used everywhere, including serialization:
//   index 0 <-> i_inf = 1 (the real unit), index 1+t <-> i_t for t = 0..6.
inline constexpr int kBasisRank = 8;

[[nodiscard]] constexpr int basis_index(int t_or_inf) {
  // basis_index(-1) = i_inf, basis_index(t) = i_t.
  return t_or_inf < 0 ? 0 : 1 + t_or_inf;
}

struct BasisProduct {
  std::int8_t index;  // basis slot of the product
  std::int8_t sign;   // +1 or -1
};

namespace detail {

// The seven quaternion triples {t, t+1, t+3} mod 7: within each,
// i_a * i_b = i_c cyclically, and every imaginary unit squares to -1.
// The full 8x8 table is generated from that single rule at compile time and
// re-validated at runtime by the composition-law property tests.
consteval std::array<std::array<BasisProduct, 8>, 8> make_mul_table() {
  std::array<std::array<BasisProduct, 8>, 8> m{};
  for (int a = 0; a < 8; ++a) {
    m[0][a] = {static_cast<std::int8_t>(a), 1};
    m[a][0] = {static_cast<std::int8_t>(a), 1};
  }
  for (int a = 1; a < 8; ++a) m[a][a] = {0, -1};
  for (int t = 0; t < 7; ++t) {
    const int line[3] = {basis_index(t), basis_index((t + 1) % 7),
                         basis_index((t + 3) % 7)};
    for (int k = 0; k < 3; ++k) {
      const int a = line[k], b = line[(k + 1) % 3], c = line[(k + 2) % 3];
      m[a][b] = {static_cast<std::int8_t>(c), 1};
      m[b][a] = {static_cast<std::int8_t>(c), -1};
    }
  }
  return m;
}

}  // namespace detail

inline constexpr auto kMulTable = detail::make_mul_table();

/// Octonion with exact rational coordinates over (i_inf, i_0, ..., i_6).
struct Octonion {
  std::array<Rational, 8> c{};

  Octonion() = default;

  [[nodiscard]] static Octonion basis(int slot) {
    Octonion x;
    x.c[slot] = 1;
    return x;
  }
  [[nodiscard]] static Octonion one() { return basis(0); }
  [[nodiscard]] static Octonion imaginary_unit(int t) {
    return basis(basis_index(t));
  }
  [[nodiscard]] static Octonion scalar(const Rational& r) {
    Octonion x;
    x.c[0] = r;
    return x;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& v : c)
      if (v != 0) return false;
    return true;
  }

  [[nodiscard]] Rational re() const { return c[0]; }

  [[nodiscard]] Octonion conj() const {
    Octonion x;
    x.c[0] = c[0];
    for (int i = 1; i < 8; ++i) x.c[i] = -c[i];
    return x;
  }

  /// Multiplicative norm N(x); N(xy) = N(x)N(y).
  [[nodiscard]] Rational norm() const {
    Rational n = 0;
    for (const auto& v : c) n += v * v;
    return n;
  }

  Octonion& operator+=(const Octonion& o) {
    for (int i = 0; i < 8; ++i) c[i] += o.c[i];
    return *this;
  }
  Octonion& operator-=(const Octonion& o) {
    for (int i = 0; i < 8; ++i) c[i] -= o.c[i];
    return *this;
  }
  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(const Octonion& a) {
    Octonion x;
    for (int i = 0; i < 8; ++i) x.c[i] = -a.c[i];
    return x;
  }
  friend Octonion operator*(const Rational& s, const Octonion& a) {
    Octonion x;
    for (int i = 0; i < 8; ++i) x.c[i] = s * a.c[i];
    return x;
  }

  friend Octonion operator*(const Octonion& a, const Octonion& b) {
    Octonion x;
    for (int i = 0; i < 8; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j < 8; ++j) {
        if (b.c[j] == 0) continue;
        const BasisProduct p = kMulTable[i][j];
        if (p.sign > 0)
          x.c[p.index] += a.c[i] * b.c[j];
        else
          x.c[p.index] -= a.c[i] * b.c[j];
      }
    }
    return x;
  }

  friend bool operator==(const Octonion& a, const Octonion& b) {
    return a.c == b.c;
  }
  /// Lexicographic coordinate order; used for all canonical sorts.
  friend bool operator<(const Octonion& a, const Octonion& b) {
    for (int i = 0; i < 8; ++i) {
      int cmp = cmp_rational(a.c[i], b.c[i]);
      if (cmp != 0) return cmp < 0;
    }
    return false;
  }

  [[nodiscard]] static int cmp_rational(const Rational& a, const Rational& b) {
    return mpq_cmp(a.get_mpq_t(), b.get_mpq_t());
  }

  /// Inverse of a nonzero octonion: conj(x)/N(x).
  [[nodiscard]] Octonion inverse() const {
    Rational n = norm();
    if (n == 0) throw std::domain_error("inverse of zero octonion");
    Octonion x = conj();
    for (auto& v : x.c) v /= n;
    return x;
  }

  [[nodiscard]] std::string str() const;
};

/// Doubled inner product <x,y> = N(x+y) - N(x) - N(y) = 2 * sum(x_i y_i).
[[nodiscard]] inline Rational inner(const Octonion& a, const Octonion& b) {
  Rational s = 0;
  for (int i = 0; i < 8; ++i) s += a.c[i] * b.c[i];
  return 2 * s;
}

[[nodiscard]] inline Octonion commutator(const Octonion& a,
                                         const Octonion& b) {
  return a * b - b * a;
}

[[nodiscard]] inline Octonion associator(const Octonion& a, const Octonion& b,
                                         const Octonion& x) {
  return (a * b) * x - a * (b * x);
}

/// Vector of three octonions (all geometry here lives in O^3).
struct OctVector {
  std::array<Octonion, 3> e{};

  [[nodiscard]] Rational norm() const {
    return e[0].norm() + e[1].norm() + e[2].norm();
  }
  friend OctVector operator+(const OctVector& a, const OctVector& b) {
    OctVector v;
    for (int k = 0; k < 3; ++k) v.e[k] = a.e[k] + b.e[k];
    return v;
  }
  friend OctVector operator-(const OctVector& a, const OctVector& b) {
    OctVector v;
    for (int k = 0; k < 3; ++k) v.e[k] = a.e[k] - b.e[k];
    return v;
  }
  friend OctVector operator-(const OctVector& a) {
    OctVector v;
    for (int k = 0; k < 3; ++k) v.e[k] = -a.e[k];
    return v;
  }
  friend bool operator==(const OctVector& a, const OctVector& b) {
    return a.e == b.e;
  }
};

[[nodiscard]] inline Rational inner(const OctVector& a, const OctVector& b) {
  return inner(a.e[0], b.e[0]) + inner(a.e[1], b.e[1]) + inner(a.e[2], b.e[2]);
}

/// Entry-algebra classification, strongest first. real => commutative =>
/// associative; "generic" means the entries generate all of O.
enum class VectorClass { kReal, kCommutative, kAssociative, kGeneric };

[[nodiscard]] VectorClass classify_vector(const OctVector& v);
[[nodiscard]] bool is_real_vector(const OctVector& v);
[[nodiscard]] bool is_commutative_vector(const OctVector& v);
[[nodiscard]] bool is_associative_vector(const OctVector& v);
[[nodiscard]] std::string to_string(VectorClass c);

// ---------------------------------------------------------------------------
// Integer fast path. Lattice data is dyadic; hot loops run on cleared
// denominators with an explicit power-of-two scale managed by the caller.
// ---------------------------------------------------------------------------

using IntOct = std::array<std::int64_t, 8>;

[[nodiscard]] inline IntOct mul(const IntOct& a, const IntOct& b) {
  IntOct x{};
  for (int i = 0; i < 8; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (b[j] == 0) continue;
      const BasisProduct p = kMulTable[i][j];
      x[p.index] += p.sign * a[i] * b[j];
    }
  }
  return x;
}

[[nodiscard]] inline IntOct conj(const IntOct& a) {
  IntOct x = a;
  for (int i = 1; i < 8; ++i) x[i] = -x[i];
  return x;
}

[[nodiscard]] inline IntOct add(const IntOct& a, const IntOct& b) {
  IntOct x;
  for (int i = 0; i < 8; ++i) x[i] = a[i] + b[i];
  return x;
}

[[nodiscard]] inline IntOct sub(const IntOct& a, const IntOct& b) {
  IntOct x;
  for (int i = 0; i < 8; ++i) x[i] = a[i] - b[i];
  return x;
}

/// Exact rescale by 1/2 (a product of doubled vectors is 4x the value, one
/// halve brings it back to doubled coordinates). Throws if any entry is odd.
[[nodiscard]] inline IntOct halve(const IntOct& a) {
  IntOct x;
  for (int i = 0; i < 8; ++i) {
    if (a[i] % 2 != 0)
      throw std::logic_error("halve: entry is not divisible by 2");
    x[i] = a[i] / 2;
  }
  return x;
}

/// Doubled inner product of doubled vectors: 2<x,y> where <,> is the double
/// inner product (so raw_dot/2 is <x,y> and raw_dot/4 is the Euclidean form).
[[nodiscard]] inline std::int64_t raw_dot(const IntOct& a, const IntOct& b) {
  std::int64_t s = 0;
  for (int i = 0; i < 8; ++i) s += a[i] * b[i];
  return s;
}

[[nodiscard]] inline bool is_zero(const IntOct& a) {
  for (auto v : a)
    if (v != 0) return false;
  return true;
}

/// N(x) scaled by scale^2 (caller tracks the scale).
[[nodiscard]] inline std::int64_t norm_scaled(const IntOct& a) {
  std::int64_t n = 0;
  for (auto v : a) n += v * v;
  return n;
}

[[nodiscard]] Octonion to_octonion(const IntOct& a, std::int64_t denom);
[[nodiscard]] IntOct to_int_oct(const Octonion& a, std::int64_t denom);

}  // namespace octavian
