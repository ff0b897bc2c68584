#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "octavian/lattice.hpp"

namespace octavian {

/// Binary vector-set cache. File layout, all integers little-endian:
///   bytes 0..5   magic "OCTAV1" (any other magic = stale version)
///   bytes 6..13  uint64 denominator exponent e (coordinates are num / 2^e)
///   bytes 14..21 uint64 vector count
///   then count x 24 int64 numerators, vector-major.
/// Vectors are stored in the order given and reload bit-exactly; callers
/// keep them canonically sorted so cached and fresh runs are
/// indistinguishable.

/// File name for the short-vector set of one lattice configuration.
[[nodiscard]] std::string short_vector_cache_path(const std::string& dir,
                                                  int lambda_index,
                                                  int unit_index,
                                                  int target_norm);

/// Serialize; written via a temporary file and rename so concurrent readers
/// never observe a partial file. Returns false on I/O failure.
bool write_vector_cache(const std::string& path, std::uint64_t denom_exp,
                        const std::vector<LatticeVector>& vectors);

/// Load a cache file. Returns true and fills `out` only for a fully valid
/// file with the expected denominator exponent. A missing file is a silent
/// miss; a stale magic, truncated payload, trailing bytes or exponent
/// mismatch is a miss with a one-line explanation in `warning`.
bool read_vector_cache(const std::string& path, std::uint64_t expected_exp,
                       std::vector<LatticeVector>* out, std::string* warning);

struct CacheResult {
  std::vector<LatticeVector> vectors;
  bool from_cache = false;  // satisfied by a valid cache file
  bool wrote = false;       // a fresh file was written
  std::string warning;      // nonempty when a bad file forced a recompute
};

/// Short vectors of `l`, through the cache when `dir` is nonempty: a valid
/// file is returned as-is; otherwise the set is enumerated and the file
/// (re)written. The result is identical either way.
[[nodiscard]] CacheResult cached_short_vectors(const std::string& dir,
                                               int lambda_index,
                                               int unit_index,
                                               const IntegerLattice& l,
                                               int target_norm,
                                               int threads = 1);

}  // namespace octavian
