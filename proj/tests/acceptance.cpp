// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>

#include "natset_reference.hpp"
#include "primal/crosscheck.hpp"
#include "primal/error.hpp"
#include "primal/report.hpp"

using namespace primal;

namespace {

struct Outcome {
  bool passed = true;
  std::string summary;
  std::string first_failure;

  void fail(const std::string& why) {
    if (passed) first_failure = why;
    passed = false;
  }
};

std::string succ_string(const FunctionalMap& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f(i));
  return s + "]";
}

// Oracle comparison and named theorem checks over a corpus of maps. The
// theorem tallies feed the third criterion.
struct CorpusRun {
  std::size_t maps = 0;
  std::size_t disagreements = 0;
  std::map<std::string, std::pair<std::size_t, std::size_t>> theorems;  // name -> (ran, failed)
  Outcome oracle;
  Outcome theorem;

  void run(const FunctionalMap& f) {
    ++maps;
    try {
      AnalysisBudget ab;
      ab.max_points = std::max(ab.max_points, f.size());
      const Analysis a = analyze(f, ab);
      const auto o = oracle::oracle_predicates(f);
      const auto diffs = compare_with_oracle(a, o);
      disagreements += diffs.size();
      if (!diffs.empty()) oracle.fail(succ_string(f) + ": " + diffs.front());
      for (const auto& c : run_theorem_checks(a)) {
        auto& [ran, failed] = theorems[c.name];
        ++ran;
        if (!c.passed) {
          ++failed;
          theorem.fail(succ_string(f) + ": " + c.name + " " + c.detail);
        }
      }
    } catch (const Error& e) {
      ++disagreements;
      oracle.fail(succ_string(f) + ": " + e.what());
      theorem.fail(succ_string(f) + ": " + e.what());
    }
  }
};

Outcome exhaustive(CorpusRun& corpus) {
  for (std::size_t n = 1; n <= 4; ++n) for_each_map(n, [&](const FunctionalMap& f) { corpus.run(f); });
  Outcome out = corpus.oracle;
  if (corpus.maps != 1 + 4 + 27 + 256) out.fail("enumerated " + std::to_string(corpus.maps) + " maps");
  out.summary = std::to_string(corpus.maps) + " maps, " + std::to_string(corpus.disagreements) +
                " disagreements";
  return out;
}

Outcome randomized(CorpusRun& corpus) {
  constexpr std::size_t kPerN = 500;
  const std::size_t before = corpus.maps;
  const std::size_t diffs_before = corpus.disagreements;
  corpus.oracle = {};
  for (std::size_t n = 5; n <= 12; ++n) {
    for (std::size_t i = 0; i < kPerN; ++i) corpus.run(gen_random(n, n * 1000003 + i));
  }
  Outcome out = corpus.oracle;
  out.summary = std::to_string(corpus.maps - before) + " maps over n=5..12 (" +
                std::to_string(kPerN) + " per n, mixing compared for n<=8), " +
                std::to_string(corpus.disagreements - diffs_before) + " disagreements";
  return out;
}

Outcome theorem_suite(const CorpusRun& corpus) {
  Outcome out = corpus.theorem;
  std::size_t failed_total = 0;
  for (const auto& [name, tally] : corpus.theorems) {
    if (tally.first != corpus.maps) out.fail(name + " ran on " + std::to_string(tally.first) + " maps");
    failed_total += tally.second;
  }
  if (corpus.theorems.empty()) out.fail("no theorem checks ran");
  out.summary = std::to_string(corpus.theorems.size()) + " named checks on " +
                std::to_string(corpus.maps) + " maps, " + std::to_string(failed_total) + " failures";
  return out;
}

Outcome towers() {
  Outcome out;
  const std::uint64_t cases[][3] = {{1, 2, 5}, {2, 2, 3}, {3, 2, 4}};
  for (const auto& [m, n, J] : cases) {
    const std::string tag = "tower(" + std::to_string(m) + "," + std::to_string(n) + "," +
                            std::to_string(J) + ")";
    const auto f = gen_tower(m, n, J);
    const Analysis a = analyze(f);
    PointSet base(f.size());
    for (std::uint64_t i = 0; i < m; ++i) base.insert(tower_point(J, i, 0));

    if (a.system.recurrent_set != base) out.fail(tag + ": recurrent set differs from Z_m x {0}");
    if (a.system.minimal_sets.size() != 1 || a.system.minimal_sets[0] != base) {
      out.fail(tag + ": minimal sets differ from the single cycle");
    }
    for (Point x = 0; x < f.size(); ++x) {
      if (a.points.omega[x] != base) out.fail(tag + ": omega(" + std::to_string(x) + ") differs");
    }
    if (a.sys.rho.component_count != 1) out.fail(tag + ": more than one component");
    if (a.system.omega_set != base) out.fail(tag + ": non-wandering set differs from the cycle");

    const Json family = {{"name", "tower"}, {"m", m}, {"n", n}, {"J", J}};
    const Json report = build_report(a, run_theorem_checks(a), family);
    bool caveat = false;
    for (const auto& c : report["caveats"]) caveat = caveat || c == std::string(kTowerCaveat);
    if (!caveat) out.fail(tag + ": report lacks the truncation caveat");
  }
  out.summary = "3 truncated towers: recurrent = omega = unique minimal set = Z_m x {0}, caveat reported";
  return out;
}

Outcome mod_mul() {
  Outcome out;
  for (unsigned k = 3; k <= 5; ++k) {
    const std::uint64_t N = (std::uint64_t{1} << k) - 1;
    const std::string tag = "mod_mul(2," + std::to_string(N) + ")";
    const Analysis a = analyze(gen_mod_mul(2, N));
    if (!a.sys.f.is_bijective()) out.fail(tag + ": not a bijection");
    if (!a.system.omega_set.is_full()) out.fail(tag + ": non-wandering set is not X");
    if (!a.sys.rho.periodic_points().is_full()) out.fail(tag + ": some point is not periodic");
    if (a.chaos.sensitive) out.fail(tag + ": sensitive");
    if (a.chaos.ay_chaotic) out.fail(tag + ": AY-chaotic");
  }
  out.summary = "i -> 2i mod 7, 15, 31: bijective, all periodic, not sensitive, not AY-chaotic";
  return out;
}

Outcome natsets() {
  using namespace primal::testing;
  constexpr std::size_t kChecks = 10000;
  constexpr std::size_t kLen = 200;
  Outcome out;
  SplitMix64 rng(0xACCE97);
  std::size_t mismatches = 0;
  auto mismatch = [&](std::size_t i, const std::string& what) {
    ++mismatches;
    out.fail("case " + std::to_string(i) + ": " + what);
  };
  for (std::size_t i = 0; i < kChecks; ++i) {
    const RawRule ra = random_rule(rng);
    const RawRule rb = random_rule(rng);
    const auto a = ra.build();
    const auto ab = a.intersect(rb.build());
    const auto xa = ra.expand(kLen);
    const auto xb = rb.expand(kLen);
    std::vector<bool> xab(kLen);
    for (std::size_t k = 0; k < kLen; ++k) {
      xab[k] = xa[k] && xb[k];
      if (a.member(k) != xa[k]) mismatch(i, "membership at " + std::to_string(k));
      if (ab.member(k) != xab[k]) mismatch(i, "intersection at " + std::to_string(k));
    }
    // Thresholds stay below 20 + 10 and periods divide lcm(1..10), so the
    // last half of the window is settled.
    if (a.is_infinite() != explicit_infinite(xa, kLen / 2)) mismatch(i, "infinite");
    if (a.is_cofinite() != explicit_cofinite(xa, kLen / 2)) mismatch(i, "cofinite");
    if (ab.is_cofinite() != explicit_cofinite(xab, kLen / 2)) mismatch(i, "intersection cofinite");
    if (a.syndetic_gap() != explicit_gap(xa, kLen / 2)) mismatch(i, "syndetic gap");
    if (ab.is_syndetic() != explicit_gap(xab, kLen / 2).has_value()) mismatch(i, "intersection syndetic");
    if (a.is_syndetic() != a.is_infinite() || ab.is_syndetic() != ab.is_infinite()) {
      mismatch(i, "syndetic and infinite disagree");
    }
  }
  out.summary = std::to_string(kChecks) + " random sets and intersections on [0," +
                std::to_string(kLen) + "), " + std::to_string(mismatches) + " mismatches";
  return out;
}

template <class Fn>
bool report(int id, const char* title, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = fn();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %d %s: %s (%.2f s)\n", out.passed ? "PASS" : "FAIL", id, title,
              out.summary.c_str(), secs);
  if (!out.passed) std::printf("     first failure: %s\n", out.first_failure.c_str());
  std::fflush(stdout);
  return out.passed;
}

}  // namespace

int main() {
  CorpusRun corpus;
  bool ok = true;
  ok &= report(1, "oracle equivalence, exhaustive", [&] { return exhaustive(corpus); });
  ok &= report(2, "oracle equivalence, randomized", [&] { return randomized(corpus); });
  ok &= report(3, "theorem suite", [&] { return theorem_suite(corpus); });
  ok &= report(4, "truncated tower", towers);
  ok &= report(5, "doubling map analog", mod_mul);
  ok &= report(6, "eventually periodic sets", natsets);
  return ok ? 0 : 1;
}
