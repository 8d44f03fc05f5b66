#include "ifam/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ifam {

namespace {

constexpr std::size_t kGeneratorBlockCap = 1'000'000;

void check_kt(std::size_t k, std::size_t t, std::size_t t_min, std::size_t t_max_off) {
  if (k == 0 || t < t_min || t + t_max_off > k)
    throw Error(Err::InvalidParams,
                "k = " + std::to_string(k) + ", t = " + std::to_string(t) +
                    " outside the valid range");
}

std::vector<std::vector<Label>> k_subsets(const std::vector<Label>& universe, std::size_t k) {
  std::vector<std::vector<Label>> out;
  std::vector<std::size_t> idx(k);
  // lexicographic combinations
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > universe.size()) return out;
  while (true) {
    std::vector<Label> block;
    block.reserve(k);
    for (std::size_t i : idx) block.push_back(universe[i]);
    out.push_back(std::move(block));
    if (out.size() > kGeneratorBlockCap)
      throw Error(Err::InvalidParams, "generator would exceed the block cap");
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == universe.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

} // namespace

std::vector<Label> CyclePartition::all_labels() const {
  std::vector<Label> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::size_t CyclePartition::total_points() const {
  std::size_t n = 0;
  for (const auto& part : parts) n += part.size();
  return n;
}

CyclePartition cycle_partition(std::size_t k, std::size_t t) {
  check_kt(k, t, 1, 0);
  CyclePartition cp;
  cp.k = k;
  cp.t = t;
  cp.parts.resize(t);
  const std::size_t small = k - t / 2;       // parts X_0 .. X_{floor((t-1)/2)}
  const std::size_t large = k - (t - 1) / 2; // the remaining parts
  for (std::size_t n = 0; n < t; ++n) {
    std::size_t size = (n <= (t - 1) / 2) ? small : large;
    for (std::size_t i = 0; i < size; ++i)
      cp.parts[n].push_back("X" + std::to_string(n) + ":" + std::to_string(i));
  }
  return cp;
}

SetFamily circular_F(std::size_t k, std::size_t t) {
  CyclePartition cp = cycle_partition(k, t);
  std::set<std::vector<Label>> blocks;
  for (std::size_t n = 0; n < t; ++n) {
    const std::size_t m = k - cp.parts[n].size();
    if (m >= 20) throw Error(Err::InvalidParams, "generator would exceed the block cap");
    // every monotone 0/1-increment walk p_1..p_m with p_0 = 0
    for (std::size_t bits = 0; bits < (std::size_t{1} << m); ++bits) {
      std::vector<Label> block = cp.parts[n];
      std::size_t p = 0;
      for (std::size_t i = 1; i <= m; ++i) {
        p += (bits >> (i - 1)) & 1u;
        const auto& part = cp.parts[(n + i) % t];
        if (p >= part.size())
          throw Error(Err::InvalidParams, "internal: walk index escaped its part");
        block.push_back(part[p]);
      }
      std::sort(block.begin(), block.end());
      blocks.insert(std::move(block));
    }
  }
  return family_from_label_blocks({blocks.begin(), blocks.end()});
}

SetFamily circular_G(std::size_t k, std::size_t t) {
  CyclePartition cp = cycle_partition(k, t);
  std::set<std::vector<Label>> blocks;
  for (std::size_t n = 0; n < t; ++n) {
    const std::size_t m = k - cp.parts[n].size();
    std::vector<std::size_t> pick(m, 0);
    while (true) {
      std::vector<Label> block = cp.parts[n];
      for (std::size_t i = 1; i <= m; ++i)
        block.push_back(cp.parts[(n + i) % t][pick[i - 1]]);
      std::sort(block.begin(), block.end());
      blocks.insert(std::move(block));
      if (blocks.size() > kGeneratorBlockCap)
        throw Error(Err::InvalidParams, "generator would exceed the block cap");
      // odometer over the successor parts
      std::size_t i = 0;
      for (; i < m; ++i) {
        if (++pick[i] < cp.parts[(n + i + 1) % t].size()) break;
        pick[i] = 0;
      }
      if (i == m) break;
    }
  }
  return family_from_label_blocks({blocks.begin(), blocks.end()});
}

SetFamily one_per_part_family(const CyclePartition& cp) {
  std::vector<std::vector<Label>> blocks;
  std::vector<std::size_t> pick(cp.t, 0);
  while (true) {
    std::vector<Label> block;
    block.reserve(cp.t);
    for (std::size_t n = 0; n < cp.t; ++n) block.push_back(cp.parts[n][pick[n]]);
    blocks.push_back(std::move(block));
    if (blocks.size() > kGeneratorBlockCap)
      throw Error(Err::InvalidParams, "generator would exceed the block cap");
    std::size_t n = 0;
    for (; n < cp.t; ++n) {
      if (++pick[n] < cp.parts[n].size()) break;
      pick[n] = 0;
    }
    if (n == cp.t) break;
  }
  return family_from_label_blocks(blocks);
}

SetFamily complete_cif(std::size_t k, std::size_t t) {
  check_kt(k, t, 1, 1); // 1 <= t <= k-1
  std::vector<Label> universe;
  for (std::size_t i = 0; i < k + t - 1; ++i) universe.push_back("p" + std::to_string(i));
  return family_from_label_blocks(k_subsets(universe, k));
}

SetFamily pointed_cif(std::size_t k, std::size_t t) {
  check_kt(k, t, 2, 1); // 2 <= t <= k-1
  std::vector<Label> core;
  for (std::size_t i = 0; i < k + t - 2; ++i) core.push_back("p" + std::to_string(i));
  std::vector<std::vector<Label>> blocks = k_subsets(core, k);
  for (const auto& c : k_subsets(core, t - 1)) {
    Label symbol = "x";
    for (const Label& l : c) symbol += "_" + l;
    std::vector<Label> block{symbol};
    for (const Label& l : core)
      if (std::find(c.begin(), c.end(), l) == c.end()) block.push_back(l);
    blocks.push_back(std::move(block));
  }
  return family_from_label_blocks(blocks);
}

SetFamily mif_singleton() { return family_from_label_blocks({{"a"}}); }

SetFamily mif_triangle() {
  return family_from_label_blocks({{"a", "b"}, {"a", "c"}, {"b", "c"}});
}

namespace {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

} // namespace

AffinePlane affine_plane(std::size_t n) {
  if (!is_prime(n))
    throw Error(Err::UnsupportedOrder,
                "order " + std::to_string(n) + " is not prime; only prime orders are built");
  auto point = [&](std::size_t x, std::size_t y) {
    return "a" + std::to_string(x) + "_" + std::to_string(y);
  };
  std::vector<std::vector<Label>> lines;
  std::vector<std::vector<std::vector<Label>>> class_lines(n + 1);
  for (std::size_t slope = 0; slope < n; ++slope) {
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Label> line;
      for (std::size_t x = 0; x < n; ++x) line.push_back(point(x, (slope * x + c) % n));
      class_lines[slope].push_back(line);
      lines.push_back(line);
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Label> line;
    for (std::size_t y = 0; y < n; ++y) line.push_back(point(c, y));
    class_lines[n].push_back(line);
    lines.push_back(line);
  }
  AffinePlane plane;
  plane.order = n;
  plane.lines = family_from_label_blocks(lines);
  // locate each line in the canonicalized family
  for (const auto& cls : class_lines) {
    std::vector<std::size_t> idx;
    for (const auto& line : cls) {
      Mask m;
      for (const Label& l : line) m.set(*plane.lines.index_of(l));
      const auto& blocks = plane.lines.blocks();
      auto it = std::lower_bound(blocks.begin(), blocks.end(), m, MaskLexLess{});
      idx.push_back(static_cast<std::size_t>(it - blocks.begin()));
    }
    std::sort(idx.begin(), idx.end());
    plane.classes.push_back(std::move(idx));
  }
  return plane;
}

} // namespace ifam
