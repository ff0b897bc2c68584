#include "octavian/permgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace octavian {

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = static_cast<std::int32_t>(i);
  return c;
}

bool is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != static_cast<std::int32_t>(i)) return false;
  return true;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::int32_t PermGroup::apply_word(std::int32_t p, const Word& w) const {
  for (std::int32_t letter : w) {
    if (letter > 0)
      p = strong_[letter - 1][p];
    else
      p = strong_inv_[-letter - 1][p];
  }
  return p;
}

bool PermGroup::word_is_identity(const Word& w) const {
  if (probe_.points.empty()) {
    for (std::int32_t p = 0; p < n_; ++p)
      if (apply_word(p, w) != p) return false;
    return true;
  }
  for (std::int32_t p : probe_.points)
    if (apply_word(p, w) != p) return false;
  return true;
}

Perm PermGroup::materialize(const Word& w) const {
  Perm g = identity_perm(n_);
  for (std::int32_t letter : w) {
    const Perm& s = letter > 0 ? strong_[letter - 1] : strong_inv_[-letter - 1];
    for (int i = 0; i < n_; ++i) g[i] = s[g[i]];
  }
  return g;
}

// Appends the word mapping p back to the level's base (the inverse
// transversal element), reading tree edges from p upward.
void PermGroup::transversal_to_base(int level, std::int32_t p, Word& out) const {
  const Level& L = levels_[level];
  while (p != L.base) {
    out.push_back(-(L.tree_gen[p] + 1));
    p = L.tree_parent[p];
  }
}

std::int32_t PermGroup::first_moved_probe(const Perm& g) const {
  if (probe_.points.empty()) {
    for (std::int32_t p = 0; p < n_; ++p)
      if (g[p] != p) return p;
  } else {
    for (std::int32_t p : probe_.points)
      if (g[p] != p) return p;
  }
  throw std::logic_error("no probe point moved by a non-identity element");
}

void PermGroup::rebuild_orbit(int level) {
  Level& L = levels_[level];
  L.tree_parent.assign(n_, -1);
  L.tree_gen.assign(n_, -1);
  L.orbit.clear();
  L.tree_parent[L.base] = L.base;
  L.orbit.push_back(L.base);
  for (std::size_t head = 0; head < L.orbit.size(); ++head) {
    const std::int32_t p = L.orbit[head];
    for (int gid : L.gen_ids) {
      const std::int32_t q = strong_[gid][p];
      if (L.tree_parent[q] < 0) {
        L.tree_parent[q] = p;
        L.tree_gen[q] = gid;
        L.orbit.push_back(q);
      }
    }
  }
  L.dirty = false;
}

int PermGroup::insert_generator(const Perm& g, int level) {
  const int gid = static_cast<int>(strong_.size());
  strong_.push_back(g);
  strong_inv_.push_back(inverse(g));
  for (int j = level;; ++j) {
    if (j == static_cast<int>(levels_.size())) {
      Level fresh;
      fresh.base = first_moved_probe(g);
      levels_.push_back(std::move(fresh));
    }
    Level& L = levels_[j];
    L.gen_ids.push_back(gid);
    L.checked.emplace_back();
    L.dirty = true;
    if (g[L.base] != L.base) return j;
  }
}

int PermGroup::scan_level(int level) {
  Level& L = levels_[level];
  if (L.dirty) rebuild_orbit(level);
  for (std::size_t pos = 0; pos < L.orbit.size(); ++pos) {
    const std::int32_t p = L.orbit[pos];
    for (std::size_t k = 0; k < L.gen_ids.size(); ++k) {
      const int gid = L.gen_ids[k];
      std::vector<bool>& done = L.checked[k];
      if (done.empty()) done.assign(n_, false);
      if (done[p]) continue;
      const std::int32_t q = strong_[gid][p];
      if (L.tree_parent[q] == p && L.tree_gen[q] == gid) {
        done[p] = true;
        continue;
      }
      // Schreier generator u_p * s * u_q^{-1}; it fixes this level's base.
      Word w;
      {
        Word down;
        transversal_to_base(level, p, down);
        for (auto it = down.rbegin(); it != down.rend(); ++it) w.push_back(-*it);
      }
      w.push_back(gid + 1);
      transversal_to_base(level, q, w);
      // Sift through the deeper levels.
      for (int l2 = level + 1; l2 < static_cast<int>(levels_.size()); ++l2) {
        Level& D = levels_[l2];
        if (D.dirty) rebuild_orbit(l2);
        const std::int32_t img = apply_word(D.base, w);
        if (D.tree_parent[img] < 0) {
          return insert_generator(materialize(w), level + 1);
        }
        transversal_to_base(l2, img, w);
      }
      if (word_is_identity(w)) {
        done[p] = true;
        continue;
      }
      return insert_generator(materialize(w), level + 1);
    }
  }
  return -1;
}

bool PermGroup::complete_chain() {
  bool was_complete = true;
  int level = static_cast<int>(levels_.size()) - 1;
  while (level >= 0) {
    const int stop = scan_level(level);
    if (stop < 0) {
      --level;
    } else {
      was_complete = false;
      level = stop;
    }
  }
  return was_complete;
}

bool PermGroup::sift_inplace(Perm& h, int from_level, int* fail_level) const {
  for (int l = from_level; l < static_cast<int>(levels_.size()); ++l) {
    const Level& L = levels_[l];
    std::int32_t img = h[L.base];
    if (L.tree_parent[img] < 0) {
      if (fail_level) *fail_level = l;
      return false;
    }
    while (img != L.base) {
      const Perm& inv = strong_inv_[L.tree_gen[img]];
      for (int i = 0; i < n_; ++i) h[i] = inv[h[i]];
      img = L.tree_parent[img];
    }
  }
  return true;
}

PermGroup PermGroup::schreier_sims(int n, const std::vector<Perm>& gens,
                                   IdentityProbe probe) {
  PermGroup G(n, std::move(probe));
  for (const Perm& g : gens) {
    if (static_cast<int>(g.size()) != n)
      throw std::invalid_argument("generator degree mismatch");
    G.gens_.push_back(g);
    if (!is_identity(g)) G.insert_generator(g, 0);
  }
  G.complete_chain();
  return G;
}

PermGroup PermGroup::randomized_schreier_sims(int n,
                                              const std::vector<Perm>& gens,
                                              std::uint64_t seed,
                                              IdentityProbe probe, int streak) {
  PermGroup G(n, std::move(probe));
  G.rng_state_ = seed | 1;
  for (const Perm& g : gens) {
    if (static_cast<int>(g.size()) != n)
      throw std::invalid_argument("generator degree mismatch");
    G.gens_.push_back(g);
    if (!is_identity(g)) G.insert_generator(g, 0);
  }
  if (G.levels_.empty()) return G;
  for (int l = 0; l < static_cast<int>(G.levels_.size()); ++l)
    if (G.levels_[l].dirty) G.rebuild_orbit(l);
  // Product-replacement slots.
  const int slots = std::max<int>(10, static_cast<int>(G.gens_.size()));
  for (int i = 0; i < slots; ++i) G.pr_.push_back(G.gens_[i % G.gens_.size()]);
  auto pr_step = [&]() -> const Perm& {
    const int i = static_cast<int>(splitmix64(G.rng_state_) % G.pr_.size());
    int j = static_cast<int>(splitmix64(G.rng_state_) % (G.pr_.size() - 1));
    if (j >= i) ++j;
    const bool inv_side = (splitmix64(G.rng_state_) & 1) != 0;
    G.pr_[i] = inv_side ? compose(G.pr_[i], inverse(G.pr_[j]))
                        : compose(G.pr_[i], G.pr_[j]);
    return G.pr_[i];
  };
  for (int burn = 0; burn < 64; ++burn) pr_step();
  int run = 0;
  while (run < streak) {
    Perm h = pr_step();
    int fail = 0;
    if (G.sift_inplace(h, 0, &fail) && is_identity(h)) {
      ++run;
      continue;
    }
    run = 0;
    // The residue fixes every base above the failure point; full-range
    // insertion keeps the level generator sets nested, which is what makes
    // the orbit-length product a certified lower bound on the order.
    G.insert_generator(h, 0);
    for (int l = 0; l < static_cast<int>(G.levels_.size()); ++l)
      if (G.levels_[l].dirty) G.rebuild_orbit(l);
  }
  return G;
}

bool PermGroup::verify_deterministically() { return complete_chain(); }

BigInt PermGroup::order() const {
  BigInt result = 1;
  for (const Level& L : levels_) {
    if (L.dirty)
      throw std::logic_error("order queried on a stale chain");
    result *= static_cast<long>(L.orbit.size());
  }
  return result;
}

bool PermGroup::contains(const Perm& g) const {
  if (static_cast<int>(g.size()) != n_)
    throw std::invalid_argument("degree mismatch in membership test");
  Perm h = g;
  if (!sift_inplace(h, 0, nullptr)) return false;
  return is_identity(h);
}

bool PermGroup::contains_with_growth(const Perm& g, int rounds) {
  if (contains(g)) return true;
  if (pr_.empty()) return false;
  for (int round = 0; round < rounds; ++round) {
    for (int k = 0; k < 8; ++k) {
      const int i = static_cast<int>(splitmix64(rng_state_) % pr_.size());
      int j = static_cast<int>(splitmix64(rng_state_) % (pr_.size() - 1));
      if (j >= i) ++j;
      pr_[i] = (splitmix64(rng_state_) & 1) ? compose(pr_[i], inverse(pr_[j]))
                                            : compose(pr_[i], pr_[j]);
      Perm h = pr_[i];
      int fail = 0;
      if (!(sift_inplace(h, 0, &fail) && is_identity(h))) {
        insert_generator(h, 0);
        for (int l = 0; l < static_cast<int>(levels_.size()); ++l)
          if (levels_[l].dirty) rebuild_orbit(l);
      }
    }
    if (contains(g)) return true;
  }
  return false;
}

std::vector<std::int32_t> PermGroup::base_points() const {
  std::vector<std::int32_t> out;
  out.reserve(levels_.size());
  for (const Level& L : levels_) out.push_back(L.base);
  return out;
}

std::vector<std::int64_t> PermGroup::fundamental_orbit_lengths() const {
  std::vector<std::int64_t> out;
  out.reserve(levels_.size());
  for (const Level& L : levels_)
    out.push_back(static_cast<std::int64_t>(L.orbit.size()));
  return out;
}

std::vector<std::int64_t> PermGroup::orbit_sizes(int n,
                                                 const std::vector<Perm>& gens) {
  std::vector<char> seen(n, 0);
  std::vector<std::int64_t> sizes;
  std::vector<std::int32_t> queue;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    queue.clear();
    queue.push_back(start);
    seen[start] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::int32_t p = queue[head];
      for (const Perm& g : gens) {
        const std::int32_t q = g[p];
        if (!seen[q]) {
          seen[q] = 1;
          queue.push_back(q);
        }
      }
    }
    sizes.push_back(static_cast<std::int64_t>(queue.size()));
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

}  // namespace octavian
