#include "ifam/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ifam {

DegreeProfile degree_profile(const SetFamily& f) {
  std::vector<std::size_t> degree(f.point_count(), 0);
  for (const Mask& b : f.blocks())
    for (std::size_t p : b.members()) ++degree[p];
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t d : degree) ++hist[d];
  DegreeProfile out(hist.rbegin(), hist.rend());
  return out;
}

std::string profile_to_string(const DegreeProfile& p) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ", ";
    os << p[i].first << ":" << p[i].second;
  }
  os << "}";
  return os.str();
}

bool verify_isomorphism(const SetFamily& f, const SetFamily& g,
                        const std::vector<std::pair<Label, Label>>& mapping) {
  if (f.point_count() != g.point_count() || f.size() != g.size()) return false;
  if (mapping.size() != f.point_count()) return false;
  std::vector<std::size_t> to_g(f.point_count());
  std::vector<bool> f_used(f.point_count(), false), g_used(g.point_count(), false);
  for (const auto& [from, to] : mapping) {
    auto fi = f.index_of(from);
    auto gi = g.index_of(to);
    if (!fi || !gi || f_used[*fi] || g_used[*gi]) return false;
    f_used[*fi] = g_used[*gi] = true;
    to_g[*fi] = *gi;
  }
  for (const Mask& b : f.blocks()) {
    Mask image;
    for (std::size_t p : b.members()) image.set(to_g[p]);
    if (!g.has_block(image)) return false;
  }
  // injective block transport between equal-size block sets is onto
  return true;
}

namespace {

std::map<std::size_t, std::size_t> intersection_distribution(const SetFamily& f) {
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j)
      ++hist[(f.blocks()[i] & f.blocks()[j]).count()];
  return hist;
}

std::string dist_to_string(const std::map<std::size_t, std::size_t>& hist) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [k, v] : hist) {
    if (!first) os << ", ";
    os << k << ":" << v;
    first = false;
  }
  os << "}";
  return os.str();
}

// Per-point signature preserved by any isomorphism: the point's degree plus
// the multiset of sizes of the blocks through it. Used to build candidate
// classes for the backtracking search.
std::vector<std::vector<std::size_t>> point_signatures(const SetFamily& f) {
  std::vector<std::vector<std::size_t>> sig(f.point_count());
  for (const Mask& b : f.blocks())
    for (std::size_t p : b.members()) sig[p].push_back(b.count());
  for (auto& s : sig) std::sort(s.begin(), s.end());
  return sig;
}

struct IsoSearch {
  const SetFamily& f;
  const SetFamily& g;
  std::vector<std::vector<std::size_t>> candidates; // per f-point
  std::vector<std::size_t> order;                   // f-points, most constrained first
  std::vector<std::size_t> to_g;
  std::vector<bool> g_used;
  static constexpr std::size_t unset = static_cast<std::size_t>(-1);

  IsoSearch(const SetFamily& f_, const SetFamily& g_) : f(f_), g(g_) {}

  // After x -> y, every f-block through x must still be embeddable: its
  // mapped part must sit inside some g-block of the same size, and fully
  // mapped blocks must be g-blocks exactly.
  bool consistent(std::size_t x) const {
    for (const Mask& b : f.blocks()) {
      if (!b.test(x)) continue;
      Mask image;
      bool full = true;
      for (std::size_t p : b.members()) {
        if (to_g[p] == unset) {
          full = false;
        } else {
          image.set(to_g[p]);
        }
      }
      if (full) {
        if (!g.has_block(image)) return false;
      } else {
        bool embeddable = false;
        for (const Mask& gb : g.blocks())
          if (gb.count() == b.count() && image.subset_of(gb)) { embeddable = true; break; }
        if (!embeddable) return false;
      }
    }
    return true;
  }

  bool dfs(std::size_t depth) {
    if (depth == order.size()) return true;
    std::size_t x = order[depth];
    for (std::size_t y : candidates[x]) {
      if (g_used[y]) continue;
      to_g[x] = y;
      g_used[y] = true;
      if (consistent(x) && dfs(depth + 1)) return true;
      g_used[y] = false;
      to_g[x] = unset;
    }
    return false;
  }
};

} // namespace

IsoResult are_isomorphic(const SetFamily& f, const SetFamily& g) {
  constexpr std::size_t kPointBudget = 32;
  if (f.point_count() > kPointBudget || g.point_count() > kPointBudget)
    throw Error(Err::BudgetExceeded, "isomorphism search is limited to " +
                                         std::to_string(kPointBudget) + " points");
  IsoResult res;
  auto separate = [&res](const std::string& name, const std::string& detail) {
    res.isomorphic = false;
    res.separating_invariant = name;
    res.detail = detail;
    return res;
  };
  if (f.point_count() != g.point_count())
    return separate("point_count", std::to_string(f.point_count()) + " vs " +
                                       std::to_string(g.point_count()));
  if (f.size() != g.size())
    return separate("block_count",
                    std::to_string(f.size()) + " vs " + std::to_string(g.size()));
  if (f.uniform_k() != g.uniform_k()) return separate("uniform_k", "block sizes differ");
  DegreeProfile pf = degree_profile(f), pg = degree_profile(g);
  if (pf != pg)
    return separate("degree_profile", profile_to_string(pf) + " vs " + profile_to_string(pg));
  auto df = intersection_distribution(f), dg = intersection_distribution(g);
  if (df != dg)
    return separate("intersection_distribution",
                    dist_to_string(df) + " vs " + dist_to_string(dg));

  IsoSearch search(f, g);
  const std::size_t n = f.point_count();
  auto sf = point_signatures(f), sg = point_signatures(g);
  search.candidates.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (sf[x] == sg[y]) search.candidates[x].push_back(y);
  search.order.resize(n);
  for (std::size_t x = 0; x < n; ++x) search.order[x] = x;
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return search.candidates[a].size() < search.candidates[b].size();
                   });
  search.to_g.assign(n, IsoSearch::unset);
  search.g_used.assign(n, false);

  if (!search.dfs(0)) {
    res.isomorphic = false;
    res.detail = "no block-preserving bijection exists (exhaustive search)";
    return res;
  }
  std::vector<std::pair<Label, Label>> mapping;
  mapping.reserve(n);
  for (std::size_t x = 0; x < n; ++x) mapping.emplace_back(f.label(x), g.label(search.to_g[x]));
  if (!verify_isomorphism(f, g, mapping))
    throw Error(Err::VerificationFailed, "internal: found mapping failed re-verification");
  res.isomorphic = true;
  res.mapping = std::move(mapping);
  res.detail = "verified point bijection transporting blocks onto blocks";
  return res;
}

} // namespace ifam
