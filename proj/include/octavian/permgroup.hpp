#pragma once

#include <cstdint>
#include <vector>

#include "octavian/rational.hpp"

namespace octavian {

/// Permutation on {0..n-1} stored as its image table.
using Perm = std::vector<std::int32_t>;

[[nodiscard]] Perm identity_perm(int n);
[[nodiscard]] Perm compose(const Perm& a, const Perm& b);  // apply a, then b
[[nodiscard]] Perm inverse(const Perm& a);
[[nodiscard]] bool is_identity(const Perm& a);

/// Decides "this word in the strong generators is the identity" by probing a
/// point set. Probing every point is always sound. When the permutations are
/// the restriction of exact linear maps to a finite orbit, fixing a subset
/// whose vectors span the orbit's linear span already forces the identity on
/// the whole orbit; callers with that structure pass the spanning subset and
/// the test drops from O(n) to O(rank) per word. Soundness of a sparse probe
/// set is the caller's contract.
struct IdentityProbe {
  std::vector<std::int32_t> points;  // empty => probe all points
};

/// Base-and-strong-generating-set certification of a finite permutation
/// group. The deterministic construction is a full Schreier generator sweep,
/// so the reported order is exact (orbit-stabilizer at every level), not a
/// lower bound. The randomized construction gives a certified lower bound
/// quickly; verify_deterministically() upgrades it to the exact order.
class PermGroup {
 public:
  /// Trivial group on an empty domain; placeholder until assigned.
  PermGroup() : PermGroup(0, IdentityProbe{}) {}
  /// Deterministic Schreier–Sims.
  static PermGroup schreier_sims(int n, const std::vector<Perm>& gens,
                                 IdentityProbe probe = {});

  /// Randomized Schreier–Sims (seeded product replacement); stops after
  /// `streak` consecutive random elements sift to the identity. The chain is
  /// valid (all positive sift results are proofs of membership) but possibly
  /// incomplete until verified.
  static PermGroup randomized_schreier_sims(int n,
                                            const std::vector<Perm>& gens,
                                            std::uint64_t seed,
                                            IdentityProbe probe = {},
                                            int streak = 40);

  /// Full deterministic Schreier-generator sweep over the current chain,
  /// extending it if anything was missing. Returns true when the chain was
  /// already complete. After this call the order is exact.
  bool verify_deterministically();

  /// Product of the fundamental orbit lengths. Exact after a deterministic
  /// build/verify; a certified lower bound after a randomized build.
  [[nodiscard]] BigInt order() const;

  /// Membership by sifting. `true` is always a proof of membership. After a
  /// deterministic build/verify, `false` is also exact.
  [[nodiscard]] bool contains(const Perm& g) const;

  /// Extends the randomized chain with more random subproducts of the
  /// original generators until `g` sifts or `rounds` batches are exhausted.
  /// Used to prove memberships against a chain grown on demand.
  [[nodiscard]] bool contains_with_growth(const Perm& g, int rounds = 64);

  [[nodiscard]] int degree() const { return n_; }
  [[nodiscard]] std::vector<std::int32_t> base_points() const;
  [[nodiscard]] std::vector<std::int64_t> fundamental_orbit_lengths() const;
  [[nodiscard]] int strong_generator_count() const {
    return static_cast<int>(strong_.size());
  }

  /// Orbit partition sizes of the full domain under the original generators,
  /// sorted descending (independent of the BSGS data).
  [[nodiscard]] static std::vector<std::int64_t> orbit_sizes(
      int n, const std::vector<Perm>& gens);

 private:
  using Word = std::vector<std::int32_t>;  // +(id+1) = gen, -(id+1) = inverse

  struct Level {
    std::int32_t base = -1;
    std::vector<int> gen_ids;
    std::vector<std::int32_t> tree_parent;  // -1 outside orbit
    std::vector<std::int32_t> tree_gen;
    std::vector<std::int32_t> orbit;  // discovery order
    // checked[k][p]: the Schreier generator of (p, gen_ids[k]) is already
    // known to lie in the group below (membership is monotone, so these
    // records survive tree rebuilds).
    std::vector<std::vector<bool>> checked;
    bool dirty = true;
  };

  PermGroup(int n, IdentityProbe probe) : n_(n), probe_(std::move(probe)) {}

  [[nodiscard]] std::int32_t apply_word(std::int32_t p, const Word& w) const;
  [[nodiscard]] bool word_is_identity(const Word& w) const;
  [[nodiscard]] Perm materialize(const Word& w) const;
  void transversal_to_base(int level, std::int32_t p, Word& out) const;
  [[nodiscard]] std::int32_t first_moved_probe(const Perm& g) const;

  void rebuild_orbit(int level);
  // Adds g to levels starting at `level` until it moves a base (creating a
  // new level if it fixes every existing one). Returns the stop level.
  int insert_generator(const Perm& g, int level);
  // Scans one level's Schreier generators; inserts at most one new strong
  // generator. Returns the stop level of the insertion, or -1 if complete.
  int scan_level(int level);
  // Bottom-up driver; returns true if nothing needed to be added.
  bool complete_chain();
  bool sift_inplace(Perm& h, int from_level, int* fail_level) const;

  int n_ = 0;
  IdentityProbe probe_;
  std::vector<Perm> gens_;  // original generators (identity dropped)
  std::vector<Perm> strong_;
  std::vector<Perm> strong_inv_;
  std::vector<Level> levels_;
  std::vector<Perm> pr_;         // product-replacement slots (randomized builds)
  std::uint64_t rng_state_ = 0;  // nonzero iff randomized build
};

}  // namespace octavian
