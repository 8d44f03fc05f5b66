#include "ifam/transversal.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace ifam {

namespace {
unsigned g_thread_cap = 1;
} // namespace

void set_thread_cap(unsigned n) { g_thread_cap = (n == 0) ? 1 : n; }
unsigned thread_cap() { return g_thread_cap; }

bool is_blocking(Mask candidate, const SetFamily& f) {
  for (const Mask& b : f.blocks())
    if (!b.intersects(candidate)) return false;
  return true;
}

bool is_blocking(const std::vector<Label>& points, const SetFamily& f) {
  Mask m;
  for (const Label& l : points) {
    auto idx = f.index_of(l);
    if (!idx) throw Error(Err::IndexOutOfRange, "point \"" + l + "\" not in the universe");
    m.set(*idx);
  }
  return is_blocking(m, f);
}

namespace {

// Branch-and-bound over partial blocking sets. Nodes branch on the unhit
// block with the fewest still-allowed points (ties: lowest block index);
// sibling subtrees forbid the points already branched on, so every blocking
// set of the target size is generated exactly once. The admissible lower
// bound is a greedy packing of pairwise-disjoint unhit blocks: each such
// block still needs its own point.
struct CoverSearch {
  const std::vector<Mask>& blocks;
  bool enumerate = false;   // false: minimize; true: collect all of size `limit`
  std::size_t limit = 0;    // best known size (minimize) or target size (enumerate)
  std::vector<Mask> found;

  explicit CoverSearch(const std::vector<Mask>& b) : blocks(b) {}

  std::size_t packing_bound(Mask chosen) const {
    Mask used;
    std::size_t cnt = 0;
    for (const Mask& b : blocks) {
      if (b.intersects(chosen) || b.intersects(used)) continue;
      used |= b;
      ++cnt;
    }
    return cnt;
  }

  // Greedy max-coverage hitting set; yields the initial upper bound.
  std::size_t greedy_upper_bound() const {
    Mask chosen;
    std::size_t size = 0;
    while (true) {
      std::size_t best_cover = 0, best_point = 0;
      Mask candidates;
      for (const Mask& b : blocks)
        if (!b.intersects(chosen)) candidates |= b;
      if (candidates.empty()) break;
      for (std::size_t x : candidates.members()) {
        std::size_t cover = 0;
        for (const Mask& b : blocks)
          if (!b.intersects(chosen) && b.test(x)) ++cover;
        if (cover > best_cover) { best_cover = cover; best_point = x; }
      }
      chosen.set(best_point);
      ++size;
    }
    return size;
  }

  void dfs(Mask chosen, Mask forbidden, std::size_t depth) {
    const Mask* branch = nullptr;
    std::size_t branch_avail = std::numeric_limits<std::size_t>::max();
    for (const Mask& b : blocks) {
      if (b.intersects(chosen)) continue;
      std::size_t avail = diff(b, forbidden).count();
      if (avail < branch_avail) {
        branch_avail = avail;
        branch = &b;
        if (avail == 0) break;
      }
    }
    if (branch == nullptr) { // everything hit
      if (enumerate) {
        if (depth == limit) found.push_back(chosen);
      } else if (depth < limit) {
        limit = depth;
      }
      return;
    }
    if (branch_avail == 0) return;
    std::size_t lb = packing_bound(chosen);
    if (enumerate ? (depth + lb > limit) : (depth + lb >= limit)) return;
    Mask forb = forbidden;
    for (std::size_t x : diff(*branch, forbidden).members()) {
      Mask next = chosen;
      next.set(x);
      dfs(next, forb, depth + 1);
      forb.set(x);
    }
  }
};

} // namespace

std::size_t tau(const SetFamily& f) {
  if (f.size() == 0) return 0; // the empty set meets every block vacuously
  CoverSearch s(f.blocks());
  s.limit = s.greedy_upper_bound();
  s.dfs({}, {}, 0);
  return s.limit;
}

TransversalReport transversals(const SetFamily& f) {
  TransversalReport rep;
  rep.tau = tau(f);
  if (f.size() == 0) return rep;
  CoverSearch s(f.blocks());
  s.enumerate = true;
  s.limit = rep.tau;
  s.dfs({}, {}, 0);
  std::sort(s.found.begin(), s.found.end(), MaskLexLess{});
  std::vector<std::vector<Label>> blocks;
  blocks.reserve(s.found.size());
  for (const Mask& m : s.found) blocks.push_back(f.labels_of(m));
  rep.transversals = family_from_label_blocks(blocks);
  return rep;
}

namespace {

// Lexicographic sweep over all s-subsets containing only indices >= `next`,
// given the blocks still unhit. Kills a branch as soon as some unhit block
// has no member left at or above the cursor.
struct ComboSweep {
  const std::vector<Mask>& blocks;
  std::vector<std::size_t> max_member; // highest point of each block
  std::size_t points;
  std::vector<Mask> out;

  ComboSweep(const std::vector<Mask>& b, std::size_t p) : blocks(b), points(p) {
    max_member.reserve(b.size());
    for (const Mask& m : b) {
      auto mem = m.members();
      max_member.push_back(mem.back());
    }
  }

  void emit_completions(Mask chosen, std::size_t next, std::size_t remaining) {
    if (remaining == 0) {
      out.push_back(chosen);
      return;
    }
    for (std::size_t x = next; x + remaining <= points; ++x) {
      Mask c = chosen;
      c.set(x);
      emit_completions(c, x + 1, remaining - 1);
    }
  }

  void rec(Mask chosen, std::size_t next, std::size_t remaining,
           const std::vector<std::uint32_t>& unhit) {
    if (unhit.empty()) {
      emit_completions(chosen, next, remaining);
      return;
    }
    if (remaining == 0 || points - next < remaining) return;
    for (std::uint32_t bi : unhit)
      if (max_member[bi] < next) return;
    std::vector<std::uint32_t> child;
    child.reserve(unhit.size());
    for (std::size_t x = next; x + remaining <= points; ++x) {
      child.clear();
      for (std::uint32_t bi : unhit)
        if (!blocks[bi].test(x)) child.push_back(bi);
      Mask c = chosen;
      c.set(x);
      rec(c, x + 1, remaining - 1, child);
    }
  }
};

} // namespace

std::vector<Mask> blocking_set_masks_of_size(const SetFamily& f, std::size_t s) {
  if (s == 0 || s > f.point_count())
    throw Error(Err::InvalidParams, "size " + std::to_string(s) +
                                        " outside 1.." + std::to_string(f.point_count()));
  const std::size_t p = f.point_count();
  std::vector<std::uint32_t> all(f.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<std::uint32_t>(i);

  const unsigned workers = std::min<unsigned>(g_thread_cap, std::thread::hardware_concurrency());
  if (workers <= 1 || p < s + 2) {
    ComboSweep sweep(f.blocks(), p);
    sweep.rec({}, 0, s, all);
    return sweep.out;
  }

  // Partition on the first chosen point; per-slot results concatenated in
  // first-point order are identical to the sequential sweep.
  const std::size_t firsts = p - s + 1;
  std::vector<std::vector<Mask>> slots(firsts);
  std::vector<std::thread> pool;
  std::size_t cursor = 0;
  std::mutex mtx;
  auto worker = [&]() {
    while (true) {
      std::size_t x;
      {
        std::lock_guard<std::mutex> lock(mtx);
        if (cursor >= firsts) return;
        x = cursor++;
      }
      ComboSweep sweep(f.blocks(), p);
      std::vector<std::uint32_t> unhit;
      for (std::uint32_t bi : all)
        if (!f.blocks()[bi].test(x)) unhit.push_back(bi);
      Mask c;
      c.set(x);
      sweep.rec(c, x + 1, s - 1, unhit);
      slots[x] = std::move(sweep.out);
    }
  };
  pool.reserve(workers);
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::vector<Mask> out;
  for (auto& slot : slots) out.insert(out.end(), slot.begin(), slot.end());
  return out;
}

SetFamily blocking_sets_of_size(const SetFamily& f, std::size_t s) {
  std::vector<std::vector<Label>> blocks;
  for (const Mask& m : blocking_set_masks_of_size(f, s)) blocks.push_back(f.labels_of(m));
  return family_from_label_blocks(blocks);
}

PropertyVerdict check_upper_bound(const SetFamily& f) {
  auto k = f.uniform_k();
  if (!k) throw Error(Err::NotUniform, "upper bound applies to uniform families only");
  unsigned long long bound = 1;
  bool saturated = false;
  for (std::size_t i = 0; i < *k; ++i) {
    if (bound > std::numeric_limits<unsigned long long>::max() / *k) {
      saturated = true;
      break;
    }
    bound *= *k;
  }
  PropertyVerdict v;
  v.property = "upper-bound";
  v.holds = saturated || f.size() <= bound;
  std::ostringstream os;
  os << "|F| = " << f.size() << (v.holds ? " <= " : " > ");
  if (saturated) os << *k << "^" << *k << " (exceeds 64-bit range)";
  else os << bound << " = " << *k << "^" << *k;
  v.detail = os.str();
  return v;
}

} // namespace ifam
