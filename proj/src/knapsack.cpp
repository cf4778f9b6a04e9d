#include "strip/knapsack.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace strip {

KnapsackInstance BuildSizes(std::span<const Rect> rects, std::span<const Container> containers,
                            bool rotations, const ClassParams& params, int64_t free_area) {
  KnapsackInstance ki;
  for (size_t j = 0; j < containers.size(); ++j) {
    const Box& b = containers[j].region;
    ki.knapsacks.push_back(Knapsack{
        containers[j].orientation == Orientation::kHorizontal ? b.h : b.w,
        static_cast<int64_t>(j)});
  }
  if (rotations) ki.knapsacks.push_back(Knapsack{free_area, -1});

  for (const Rect& r : rects) {
    ki.items.push_back(r.id);
    std::vector<int64_t> sizes;
    std::vector<bool> rot;
    for (const Container& c : containers) {
      const Box& b = c.region;
      const bool horizontal = c.orientation == Orientation::kHorizontal;
      const bool fits = r.w <= b.w && r.h <= b.h;
      const bool fits_rotated = rotations && r.h <= b.w && r.w <= b.h;
      const int64_t plain = horizontal ? r.h : r.w;
      const int64_t turned = horizontal ? r.w : r.h;
      if (fits && fits_rotated) {
        sizes.push_back(std::min(plain, turned));
        rot.push_back(turned < plain);
      } else if (fits) {
        sizes.push_back(plain);
        rot.push_back(false);
      } else if (fits_rotated) {
        sizes.push_back(turned);
        rot.push_back(true);
      } else {
        sizes.push_back(kInfinite);
        rot.push_back(false);
      }
    }
    if (rotations) {
      const bool small = Classify(r.w, r.h, params) == ClassLabel::kSmall;
      const bool small_rotated = Classify(r.h, r.w, params) == ClassLabel::kSmall;
      sizes.push_back(small || small_rotated ? r.Area() : kInfinite);
      // Both small: keep the lower one.
      rot.push_back(small && small_rotated ? r.w < r.h : !small && small_rotated);
    }
    ki.size.push_back(std::move(sizes));
    ki.rotated.push_back(std::move(rot));
  }
  return ki;
}

namespace {

struct VecHash {
  size_t operator()(const std::vector<int64_t>& v) const {
    size_t h = v.size();
    for (int64_t x : v) h ^= std::hash<int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace

std::optional<std::vector<int64_t>> SolveAssignment(const KnapsackInstance& ki,
                                                    SolveOptions options) {
  const size_t n = ki.items.size();
  const size_t m = ki.knapsacks.size();
  std::vector<int64_t> state(m + 1);  // residual capacities, then item index
  for (size_t j = 0; j < m; ++j) state[j] = ki.knapsacks[j].capacity;
  std::unordered_set<std::vector<int64_t>, VecHash> dead;
  std::vector<int64_t> choice(n, -1);
  int64_t visited = 0;

  // Most constrained items first: fewest usable knapsacks, then largest.
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  auto options_of = [&](size_t i) {
    int64_t count = 0;
    int64_t biggest = 0;
    for (int64_t s : ki.size[i]) {
      if (s == kInfinite) continue;
      ++count;
      biggest = std::max(biggest, s);
    }
    return std::make_pair(count, -biggest);
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return options_of(a) < options_of(b); });

  std::function<bool(size_t)> go = [&](size_t pos) -> bool {
    if (pos == n) return true;
    const size_t i = order[pos];
    state[m] = static_cast<int64_t>(pos);
    if (dead.contains(state)) return false;
    if (++visited > options.state_cap) {
      throw ResourceError("knapsack DP exceeded " + std::to_string(options.state_cap) +
                          " states");
    }
    for (size_t j = 0; j < m; ++j) {
      const int64_t s = ki.size[i][j];
      if (s == kInfinite || s > state[j]) continue;
      state[j] -= s;
      choice[i] = static_cast<int64_t>(j);
      const bool ok = go(pos + 1);
      state[j] += s;
      state[m] = static_cast<int64_t>(pos);
      if (ok) return true;
    }
    dead.insert(state);
    return false;
  };
  if (!go(0)) return std::nullopt;
  return choice;
}

bool AssignmentValid(const KnapsackInstance& ki, std::span<const int64_t> assignment) {
  if (assignment.size() != ki.items.size()) return false;
  std::vector<int64_t> load(ki.knapsacks.size(), 0);
  for (size_t i = 0; i < assignment.size(); ++i) {
    const int64_t j = assignment[i];
    if (j < 0 || static_cast<size_t>(j) >= ki.knapsacks.size()) return false;
    const int64_t s = ki.size[i][static_cast<size_t>(j)];
    if (s == kInfinite) return false;
    load[static_cast<size_t>(j)] += s;
    if (load[static_cast<size_t>(j)] > ki.knapsacks[static_cast<size_t>(j)].capacity) {
      return false;
    }
  }
  return true;
}

ComponentSolution SolveByComponents(const KnapsackInstance& ki,
                                    const std::vector<int64_t>* fallback,
                                    SolveOptions options) {
  const size_t n = ki.items.size();
  const size_t m = ki.knapsacks.size();
  // Union-find over items [0, n) and knapsacks [n, n + m).
  std::vector<size_t> parent(n + m);
  std::iota(parent.begin(), parent.end(), size_t{0});
  std::function<size_t(size_t)> find = [&](size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) {
      if (ki.size[i][j] != kInfinite) parent[find(i)] = find(n + j);
    }
  }
  ComponentSolution out;
  std::vector<int64_t> result(n, -1);
  std::vector<bool> done(n + m, false);
  for (size_t root_item = 0; root_item < n; ++root_item) {
    const size_t root = find(root_item);
    if (done[root]) continue;
    done[root] = true;
    ++out.components;
    KnapsackInstance sub;
    std::vector<size_t> items;
    std::vector<size_t> sacks;
    for (size_t i = 0; i < n; ++i) {
      if (find(i) == root) items.push_back(i);
    }
    for (size_t j = 0; j < m; ++j) {
      if (find(n + j) == root) sacks.push_back(j);
    }
    for (size_t j : sacks) sub.knapsacks.push_back(ki.knapsacks[j]);
    for (size_t i : items) {
      sub.items.push_back(ki.items[i]);
      std::vector<int64_t> s;
      std::vector<bool> r;
      for (size_t j : sacks) {
        s.push_back(ki.size[i][j]);
        r.push_back(ki.rotated[i][j]);
      }
      sub.size.push_back(std::move(s));
      sub.rotated.push_back(std::move(r));
    }
    std::optional<std::vector<int64_t>> local;
    try {
      local = SolveAssignment(sub, options);
    } catch (const ResourceError&) {
      if (fallback == nullptr) throw;
      std::vector<int64_t> mapped;
      for (size_t i : items) {
        const int64_t j = (*fallback)[i];
        const auto it = std::find(sacks.begin(), sacks.end(), static_cast<size_t>(j));
        mapped.push_back(it == sacks.end() ? -1 : static_cast<int64_t>(it - sacks.begin()));
      }
      if (!AssignmentValid(sub, mapped)) throw;
      local = mapped;
      ++out.fallback_components;
    }
    if (!local) return out;  // infeasible component makes the whole thing infeasible
    for (size_t k = 0; k < items.size(); ++k) {
      result[items[k]] = static_cast<int64_t>(sacks[static_cast<size_t>((*local)[k])]);
    }
  }
  out.assignment = std::move(result);
  return out;
}

Realized RealizeAssignment(const KnapsackInstance& ki, std::span<const int64_t> assignment,
                           std::span<const Rect> rects, std::span<const Container> containers) {
  Realized out;
  std::vector<int64_t> fill(ki.knapsacks.size(), 0);
  for (size_t i = 0; i < ki.items.size(); ++i) {
    const size_t j = static_cast<size_t>(assignment[i]);
    const bool rot = ki.rotated[i][j];
    const Knapsack& k = ki.knapsacks[j];
    if (k.container < 0) {
      out.area_items.push_back(ki.items[i]);
      out.area_rotated.push_back(rot);
      continue;
    }
    const Container& c = containers[static_cast<size_t>(k.container)];
    const auto it = std::find_if(rects.begin(), rects.end(),
                                 [&](const Rect& r) { return r.id == ki.items[i]; });
    if (it == rects.end()) throw Error("unknown rect in assignment");
    Placement p{ki.items[i], c.region.x, c.region.y, rot};
    if (c.orientation == Orientation::kHorizontal) {
      p.y += fill[j];
    } else {
      p.x += fill[j];
    }
    fill[j] += ki.size[i][j];
    out.placements.push_back(p);
  }
  return out;
}

}  // namespace strip
