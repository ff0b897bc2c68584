#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "octavian/rational.hpp"

namespace octavian {

/// Square symmetric positive-definite integer matrix (a Gram matrix of the
/// integral bilinear form the enumeration runs over).
using IntGram = std::vector<std::vector<std::int64_t>>;

/// One enumerated lattice point: integer coefficients over the (original)
/// basis rows, plus its exact value Q(c) = c G c^T.
struct EnumeratedPoint {
  std::vector<std::int64_t> coeffs;
  std::int64_t q = 0;
};

/// Complete exact branch-and-bound enumeration of all nonzero c with
/// 0 < c G c^T <= bound. No floating point: the Gram is LDL-decomposed over
/// the rationals and the zig-zag search prunes with exact comparisons, so the
/// output is provably complete. A fixed exact size-reduction pass runs first;
/// reported coefficients always refer to the caller's basis order.
///
/// The result is closed under negation and returned in a deterministic order
/// independent of `threads` (workers split the outermost branch; the merged
/// result is sorted by coefficient tuple).
[[nodiscard]] std::vector<EnumeratedPoint> enumerate_up_to(
    const IntGram& gram, std::int64_t bound, int threads = 1);

/// Convenience: only the points with Q(c) == target exactly.
[[nodiscard]] std::vector<EnumeratedPoint> enumerate_exact(
    const IntGram& gram, std::int64_t target, int threads = 1);

/// True iff some nonzero vector has Q <= bound (full tree walk; used to
/// certify minima: min > bound iff this returns false).
[[nodiscard]] bool exists_nonzero_up_to(const IntGram& gram,
                                        std::int64_t bound);

}  // namespace octavian
