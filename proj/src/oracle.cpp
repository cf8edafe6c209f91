#include "primal/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <unordered_map>

#include "primal/error.hpp"

namespace primal::oracle {

namespace {

using Mask = std::uint32_t;

bool has(Mask m, std::size_t x) { return (m >> x) & 1u; }
Mask bit(std::size_t x) { return Mask{1} << x; }

PointSet to_set(std::size_t n, Mask m) {
  PointSet s(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (has(m, x)) s.insert(static_cast<Point>(x));
  }
  return s;
}

void require_small(const FunctionalMap& f, const OracleBudget& budget) {
  if (budget.n_cap > kMaxOracleCap) {
    throw Error(ErrorCode::BudgetExceeded, "oracle cap above " + std::to_string(kMaxOracleCap));
  }
  if (f.size() > budget.n_cap) {
    throw Error(ErrorCode::BudgetExceeded, "oracle needs n <= " + std::to_string(budget.n_cap) +
                                               ", got " + std::to_string(f.size()));
  }
}

// Syndetic on an unrolled 0/1 sequence whose second half covers a full
// period: some hit in the second half, after which the gaps repeat.
bool windowed_syndetic(const std::vector<bool>& hits) {
  const std::size_t half = hits.size() / 2;
  std::size_t last = hits.size();
  std::size_t worst = 0;
  for (std::size_t k = hits.size(); k-- > 0;) {
    if (hits[k]) last = k;
    if (last != hits.size()) worst = std::max(worst, last - k);
  }
  const bool tail_hit = std::find(hits.begin() + static_cast<std::ptrdiff_t>(half), hits.end(), true) != hits.end();
  return tail_hit && worst <= half;
}

}  // namespace

std::vector<std::uint32_t> oracle_opens(const FunctionalMap& f, const OracleBudget& budget) {
  require_small(f, budget);
  const std::size_t n = f.size();
  std::vector<Mask> opens;
  for (Mask a = 0; a < (Mask{1} << n); ++a) {
    // f^{-1}(A) subset of A.
    Mask inverse_image = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (has(a, f(static_cast<Point>(y)))) inverse_image |= bit(y);
    }
    if ((inverse_image & ~a) == 0) opens.push_back(a);
  }
  return opens;
}

OracleVerdicts oracle_predicates(const FunctionalMap& f, const OracleBudget& budget) {
  require_small(f, budget);
  const std::size_t n = f.size();
  const std::size_t H = budget.horizon_for(n);
  const std::size_t w0 = H / 2;
  const Mask all = static_cast<Mask>((std::uint64_t{1} << n) - 1);

  // Orbit table: orbit[x][k] = f^k(x) for k < H.
  std::vector<std::vector<Point>> orbit(n, std::vector<Point>(H));
  for (std::size_t x = 0; x < n; ++x) {
    Point y = static_cast<Point>(x);
    for (std::size_t k = 0; k < H; ++k) {
      orbit[x][k] = y;
      y = f(y);
    }
  }

  // The unrolling is exact only if the set dynamics settle within the first
  // half and repeat within the second.
  std::uint64_t joint_period = 1;
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> first_visit(n, H);
    Point y = static_cast<Point>(x);
    std::size_t k = 0;
    while (first_visit[y] == H) {
      first_visit[y] = k++;
      y = f(y);
    }
    joint_period = std::lcm(joint_period, static_cast<std::uint64_t>(k - first_visit[y]));
  }
  if (w0 < n || H - w0 < joint_period) {
    throw Error(ErrorCode::BudgetExceeded, "oracle horizon " + std::to_string(H) + " too short");
  }

  std::vector<Mask> image(std::size_t{1} << n, 0);
  for (Mask a = 1; a <= all && a != 0; ++a) {
    const std::size_t low = static_cast<std::size_t>(std::countr_zero(a));
    image[a] = image[a & (a - 1)] | bit(f(static_cast<Point>(low)));
  }

  OracleVerdicts v;
  const auto opens = oracle_opens(f, budget);
  v.open_count = opens.size();
  std::vector<Mask> nonempty_opens(opens.begin() + 1, opens.end());  // opens[0] is empty
  std::vector<Mask> closed;
  for (Mask o : opens) closed.push_back(all & ~o);

  std::vector<Mask> V(n, all);
  for (std::size_t x = 0; x < n; ++x) {
    for (Mask o : opens) {
      if (has(o, x)) V[x] &= o;
    }
    v.minimal_open.push_back(to_set(n, V[x]));
  }

  // Points visited infinitely often by the orbit of x.
  std::vector<Mask> recurrent_visits(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t k = w0; k < H; ++k) recurrent_visits[x] |= bit(orbit[x][k]);
  }

  v.periodic = PointSet(n);
  v.recurrent = PointSet(n);
  v.quasi_periodic = PointSet(n);
  v.almost_periodic = PointSet(n);
  v.transitive_points = PointSet(n);
  v.non_wandering = PointSet(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto px = static_cast<Point>(x);
    for (std::size_t k = 1; k < H; ++k) {
      if (orbit[x][k] == x) {
        v.periodic.insert(px);
        break;
      }
    }

    // D(x, U) infinite for every open neighbourhood U.
    bool recurrent = true;
    for (Mask u : opens) {
      if (has(u, x) && (u & recurrent_visits[x]) == 0) recurrent = false;
    }
    if (recurrent) v.recurrent.insert(px);

    // D(x, U) infinite for every non-empty open U.
    bool transitive = true;
    for (Mask u : nonempty_opens) {
      if ((u & recurrent_visits[x]) == 0) transitive = false;
    }
    if (transitive) v.transitive_points.insert(px);

    // Neighbourhoods of x are exactly the supersets of V(x), and hitting
    // more targets only adds times, so V(x) is the binding case below.
    std::vector<bool> hits(H);
    for (std::size_t k = 0; k < H; ++k) hits[k] = has(V[x], orbit[x][k]);
    if (windowed_syndetic(hits)) v.almost_periodic.insert(px);
    for (std::size_t m = 1; m <= w0; ++m) {
      bool all_multiples = true;
      for (std::size_t k = 0; k < H && all_multiples; k += m) all_multiples = hits[k];
      if (all_multiples) {
        v.quasi_periodic.insert(px);
        break;
      }
    }
  }

  // Wandering: some open U around x with U and f^k(U) disjoint for all large k.
  {
    std::unordered_map<Mask, bool> returns;
    for (Mask u : nonempty_opens) {
      Mask s = u;
      bool late_return = false;
      for (std::size_t k = 0; k < H; ++k, s = image[s]) {
        if (k >= w0 && (s & u) != 0) late_return = true;
      }
      returns[u] = late_return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      bool non_wandering = true;
      for (Mask u : nonempty_opens) {
        if (has(u, x) && !returns[u]) non_wandering = false;
      }
      if (non_wandering) v.non_wandering.insert(static_cast<Point>(x));
    }
  }

  // Closure: intersection of the closed sets containing A.
  std::unordered_map<Mask, Mask> closure_memo;
  auto closure = [&](Mask a) {
    if (auto it = closure_memo.find(a); it != closure_memo.end()) return it->second;
    Mask c = all;
    for (Mask k : closed) {
      if ((a & ~k) == 0) c &= k;
    }
    closure_memo.emplace(a, c);
    return c;
  };
  std::vector<Mask> orbit_set(n, 0);
  for (std::size_t z = 0; z < n; ++z) {
    for (std::size_t j = 0; j < H; ++j) orbit_set[z] |= bit(orbit[z][j]);
  }
  for (std::size_t x = 0; x < n; ++x) {
    Mask omega = all;
    for (std::size_t k = 0; k < H; ++k) omega &= closure(orbit_set[orbit[x][k]]);
    v.omega.push_back(to_set(n, omega));
  }

  // Minimal sets: non-empty, closed, invariant, with no proper such subset.
  {
    std::vector<Mask> candidates;
    for (Mask c : closed) {
      if (c != 0 && (image[c] & ~c) == 0) candidates.push_back(c);
    }
    for (Mask c : candidates) {
      bool minimal = true;
      for (Mask d : candidates) {
        if (d != c && (d & ~c) == 0) minimal = false;
      }
      if (minimal) v.minimal_sets.push_back(to_set(n, c));
    }
    std::sort(v.minimal_sets.begin(), v.minimal_sets.end(),
              [](const PointSet& a, const PointSet& b) { return a.lex_less(b); });
  }
  v.transitive = !v.transitive_points.empty();

  if (n <= budget.mixing_cap) {
    // For each ordered pair of non-empty opens (U, V), the late hit times
    // of f^k(U) into V as a bit vector over the window.
    const std::size_t window = H - w0;
    const std::size_t words = (window + 63) / 64;
    std::vector<std::vector<Mask>> late_images(nonempty_opens.size());
    for (std::size_t i = 0; i < nonempty_opens.size(); ++i) {
      Mask s = nonempty_opens[i];
      for (std::size_t k = 0; k < H; ++k, s = image[s]) {
        if (k >= w0) late_images[i].push_back(s);
      }
    }
    bool ergodic = true;
    bool strong = true;
    std::vector<std::vector<std::uint64_t>> pair_hits;
    for (std::size_t i = 0; i < nonempty_opens.size(); ++i) {
      for (Mask target : nonempty_opens) {
        std::vector<std::uint64_t> hv(words, 0);
        bool any = false, every = true;
        for (std::size_t k = 0; k < window; ++k) {
          if (late_images[i][k] & target) {
            hv[k / 64] |= std::uint64_t{1} << (k % 64);
            any = true;
          } else {
            every = false;
          }
        }
        ergodic = ergodic && any;
        strong = strong && every;
        if (std::find(pair_hits.begin(), pair_hits.end(), hv) == pair_hits.end()) {
          pair_hits.push_back(std::move(hv));
        }
      }
    }
    // Rectangles U1 x U2 -> V1 x V2 hit at time k iff both factors do.
    bool weak = ergodic;
    for (std::size_t i = 0; i < pair_hits.size() && weak; ++i) {
      for (std::size_t j = i; j < pair_hits.size() && weak; ++j) {
        bool meet = false;
        for (std::size_t w = 0; w < words && !meet; ++w) meet = (pair_hits[i][w] & pair_hits[j][w]) != 0;
        weak = meet;
      }
    }
    v.top_ergodic = ergodic;
    v.weakly_mixing = weak;
    v.strongly_mixing = strong;
  }

  // Pair dynamics against the base entourage {(x, y) : y in V(x)}.
  auto in_entourage = [&](Point a, Point b) { return has(V[a], b); };
  v.entourage = PointSet(n * n);
  v.prox = PointSet(n * n);
  v.asym = PointSet(n * n);
  v.syprox = PointSet(n * n);
  v.triangle = PointSet(n * n);
  v.stable_points = PointSet(n);
  std::vector<Mask> stable_set(n, 0);
  // later[y][k]: points f^j(y) with k <= j < H.
  std::vector<std::vector<Mask>> later(n, std::vector<Mask>(H + 1, 0));
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t k = H; k-- > 0;) later[y][k] = later[y][k + 1] | bit(orbit[y][k]);
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Point idx = pair_index(n, static_cast<Point>(x), static_cast<Point>(y));
      if (in_entourage(static_cast<Point>(x), static_cast<Point>(y))) v.entourage.insert(idx);
      std::vector<bool> hits(H);
      for (std::size_t k = 0; k < H; ++k) hits[k] = in_entourage(orbit[x][k], orbit[y][k]);
      const bool late_any = std::find(hits.begin() + static_cast<std::ptrdiff_t>(w0), hits.end(), true) != hits.end();
      const bool late_all = std::find(hits.begin() + static_cast<std::ptrdiff_t>(w0), hits.end(), false) == hits.end();
      if (late_any) v.prox.insert(idx);
      if (late_all) v.asym.insert(idx);
      if (windowed_syndetic(hits)) v.syprox.insert(idx);
      if (std::find(hits.begin(), hits.end(), false) == hits.end()) stable_set[x] |= bit(y);

      // x <| y: f^m(x) = f^k(y) with m <= k.
      const auto& later_y = later[y];
      for (std::size_t m = 0; m < H; ++m) {
        if (has(later_y[m], orbit[x][m])) {
          v.triangle.insert(idx);
          break;
        }
      }
    }
  }
  // Stable at x: N(x, U) contains an open set around x.
  bool stable_somewhere = false;
  for (std::size_t x = 0; x < n; ++x) {
    for (Mask o : opens) {
      if (has(o, x) && (o & ~stable_set[x]) == 0) {
        v.stable_points.insert(static_cast<Point>(x));
        stable_somewhere = true;
        break;
      }
    }
  }
  v.sensitive = !stable_somewhere;
  return v;
}

}  // namespace primal::oracle
