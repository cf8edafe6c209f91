#ifndef PRIMAL_REPORT_HPP
#define PRIMAL_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "primal/analysis.hpp"

namespace primal {

using Json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

inline constexpr std::string_view kFiniteSpaceCaveat =
    "finite space: the only topologically ergodic maps are single periodic orbits; the shift "
    "on Z and a Z^- tail feeding a cycle need an infinite domain";
inline constexpr std::string_view kTowerCaveat =
    "finite truncation Z_m x {0..J} of the infinite tower (i,j) -> ((i+1) mod m, floor(j/n)): "
    "the recurrent set, every limit set and the unique minimal set Z_m x {0} carry over, but "
    "the truncation is not onto, so its non-wandering set is the cycle Z_m x {0} rather than "
    "all of Z_m x N";
inline constexpr std::string_view kModMulCaveat =
    "finite analog i -> m*i mod N of z -> z^m on the circle: only the N-point orbit structure "
    "is modelled; the circle's non-eventually-periodic components have no finite counterpart";

// A map as read from input, with the generator description when the input
// came from `generate`.
struct MapDocument {
  FunctionalMap map;
  std::optional<Json> family;
};

// JSON {"n": int, "succ": [ints], "family"?: {...}} or whitespace-separated
// integers; the first non-blank character decides. Throws Error with
// MalformedInput, EmptyDomain or IndexOutOfRange.
MapDocument parse_map_document(std::string_view text);

Json map_to_json(const FunctionalMap& f, const std::optional<Json>& family = std::nullopt);
Json natset_to_json(const EventuallyPeriodicNatSet& s);
Json point_set_to_json(const PointSet& s);
Json relation_to_json(const PairRelation& r);

std::vector<std::string> caveats_for(const std::optional<Json>& family);

Json build_report(const Analysis& a, const std::vector<TheoremCheck>& checks,
                  const std::optional<Json>& family = std::nullopt);

// Graphviz digraph: one cluster per component, periodic points double-circled,
// cycle edges bold, minimal sets listed in the graph label.
std::string render_dot(const PrimalSystem& sys);

}  // namespace primal

#endif  // PRIMAL_REPORT_HPP
