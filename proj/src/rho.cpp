#include "primal/rho.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace primal {

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

PointSet RhoDecomposition::periodic_points() const {
  PointSet s(tail_len.size());
  for (Point x = 0; x < tail_len.size(); ++x) {
    if (tail_len[x] == 0) s.insert(x);
  }
  return s;
}

PointSet RhoDecomposition::cycle_set(std::size_t c) const {
  return PointSet::from_points(tail_len.size(), cycles[c]);
}

PointSet RhoDecomposition::component_set(std::size_t c) const {
  PointSet s(tail_len.size());
  for (Point x = 0; x < component_id.size(); ++x) {
    if (component_id[x] == c) s.insert(x);
  }
  return s;
}

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

}  // namespace

RhoDecomposition rho_decompose(const FunctionalMap& f) {
  const std::size_t n = f.size();
  RhoDecomposition rho;
  rho.tail_len.assign(n, 0);
  rho.cycle_entry.assign(n, 0);
  rho.cycle_id.assign(n, kUnset);
  rho.cycle_pos.assign(n, 0);

  // 0 = unvisited, 1 = on the current path, 2 = resolved.
  std::vector<std::uint8_t> state(n, 0);
  std::vector<Point> path;
  std::vector<std::vector<Point>> raw_cycles;

  for (Point start = 0; start < n; ++start) {
    if (state[start] != 0) continue;
    path.clear();
    Point x = start;
    while (state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = f(x);
    }
    std::size_t resolved = path.size();
    if (state[x] == 1) {
      // Closed a new cycle: the path suffix starting at x.
      const auto it = std::find(path.begin(), path.end(), x);
      resolved = static_cast<std::size_t>(it - path.begin());
      const std::size_t id = raw_cycles.size();
      std::vector<Point> cycle(it, path.end());
      for (Point y : cycle) {
        rho.tail_len[y] = 0;
        rho.cycle_entry[y] = y;
        rho.cycle_id[y] = id;
        state[y] = 2;
      }
      raw_cycles.push_back(std::move(cycle));
    }
    for (std::size_t i = resolved; i-- > 0;) {
      const Point y = path[i];
      const Point next = f(y);
      rho.tail_len[y] = rho.tail_len[next] + 1;
      rho.cycle_entry[y] = rho.cycle_entry[next];
      rho.cycle_id[y] = rho.cycle_id[next];
      state[y] = 2;
    }
  }

  // Renumber cycles by least member and rotate each to start there.
  std::vector<std::size_t> order(raw_cycles.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Point> least(raw_cycles.size());
  for (std::size_t c = 0; c < raw_cycles.size(); ++c) {
    least[c] = *std::min_element(raw_cycles[c].begin(), raw_cycles[c].end());
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return least[a] < least[b]; });
  std::vector<std::size_t> renumber(raw_cycles.size());
  for (std::size_t i = 0; i < order.size(); ++i) renumber[order[i]] = i;

  rho.cycles.resize(raw_cycles.size());
  rho.cycle_len.resize(raw_cycles.size());
  for (std::size_t c = 0; c < raw_cycles.size(); ++c) {
    auto cycle = std::move(raw_cycles[c]);
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    const std::size_t id = renumber[c];
    for (std::size_t p = 0; p < cycle.size(); ++p) rho.cycle_pos[cycle[p]] = p;
    rho.cycle_len[id] = cycle.size();
    rho.cycles[id] = std::move(cycle);
  }
  for (auto& c : rho.cycle_id) c = renumber[c];

  UnionFind uf(n);
  for (Point x = 0; x < n; ++x) uf.unite(x, f(x));
  rho.component_id.assign(n, kUnset);
  std::vector<std::size_t> root_label(n, kUnset);
  for (Point x = 0; x < n; ++x) {
    const std::size_t r = uf.find(x);
    if (root_label[r] == kUnset) root_label[r] = rho.component_count++;
    rho.component_id[x] = root_label[r];
  }
  return rho;
}

Point iterate(const FunctionalMap& f, Point x, std::uint64_t k) {
  for (std::uint64_t i = 0; i < k; ++i) x = f(x);
  return x;
}

Point iterate(const FunctionalMap& f, const RhoDecomposition& rho, Point x, std::uint64_t k) {
  const std::size_t tail = rho.tail_len[x];
  if (k <= tail) return iterate(f, x, k);
  const Point entry = rho.cycle_entry[x];
  const auto& cycle = rho.cycles[rho.cycle_id[x]];
  const std::uint64_t steps = (k - tail) % cycle.size();
  return cycle[(rho.cycle_pos[entry] + steps) % cycle.size()];
}

}  // namespace primal
