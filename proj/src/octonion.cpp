#include "octavian/octonion.hpp"

#include <sstream>

namespace octavian {

std::string Octonion::str() const {
  static const char* names[8] = {"1",  "i0", "i1", "i2",
                                 "i3", "i4", "i5", "i6"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < 8; ++i) {
    if (c[i] == 0) continue;
    Rational v = c[i];
    if (!first) {
      os << (v > 0 ? " + " : " - ");
      if (v < 0) v = -v;
    }
    first = false;
    if (i == 0) {
      os << to_string(v);
    } else if (v == 1) {
      os << names[i];
    } else if (v == -1) {
      os << "-" << names[i];
    } else {
      os << to_string(v) << "*" << names[i];
    }
  }
  if (first) os << "0";
  return os.str();
}

bool is_real_vector(const OctVector& v) {
  for (const auto& x : v.e)
    for (int i = 1; i < 8; ++i)
      if (x.c[i] != 0) return false;
  return true;
}

bool is_commutative_vector(const OctVector& v) {
  // Pairwise commutators suffice: conjugates differ from entries by scalars.
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (!commutator(v.e[a], v.e[b]).is_zero()) return false;
  return true;
}

bool is_associative_vector(const OctVector& v) {
  // The associator alternates, so the one ordered triple decides.
  return associator(v.e[0], v.e[1], v.e[2]).is_zero();
}

VectorClass classify_vector(const OctVector& v) {
  if (is_real_vector(v)) return VectorClass::kReal;
  if (is_commutative_vector(v)) return VectorClass::kCommutative;
  if (is_associative_vector(v)) return VectorClass::kAssociative;
  return VectorClass::kGeneric;
}

std::string to_string(VectorClass c) {
  switch (c) {
    case VectorClass::kReal: return "real";
    case VectorClass::kCommutative: return "commutative";
    case VectorClass::kAssociative: return "associative";
    case VectorClass::kGeneric: return "generic";
  }
  return "generic";
}

Octonion to_octonion(const IntOct& a, std::int64_t denom) {
  Octonion x;
  for (int i = 0; i < 8; ++i) {
    x.c[i] = Rational(static_cast<long>(a[i]), static_cast<long>(denom));
    x.c[i].canonicalize();
  }
  return x;
}

IntOct to_int_oct(const Octonion& a, std::int64_t denom) {
  IntOct x{};
  for (int i = 0; i < 8; ++i) {
    Rational scaled = a.c[i] * denom;
    x[i] = to_int64(scaled);
  }
  return x;
}

}  // namespace octavian
