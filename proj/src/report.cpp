#include "primal/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "primal/error.hpp"

namespace primal {

namespace {

std::vector<std::int64_t> parse_plain(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    std::int64_t v = 0;
    const auto [end, ec] = std::from_chars(text.data() + i, text.data() + j, v);
    if (ec != std::errc() || end != text.data() + j) {
      throw Error(ErrorCode::MalformedInput,
                  "not an integer: '" + std::string(text.substr(i, j - i)) + "'");
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

MapDocument parse_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("succ") || !doc["succ"].is_array()) {
    throw Error(ErrorCode::MalformedInput, "expected an object with a \"succ\" array");
  }
  std::vector<std::int64_t> raw;
  for (const auto& v : doc["succ"]) {
    if (!v.is_number_integer()) throw Error(ErrorCode::MalformedInput, "succ entries must be integers");
    raw.push_back(v.get<std::int64_t>());
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() != static_cast<std::int64_t>(raw.size())) {
      throw Error(ErrorCode::MalformedInput, "\"n\" does not match the length of \"succ\"");
    }
  }
  MapDocument out{FunctionalMap::load(raw), std::nullopt};
  if (doc.contains("family") && doc["family"].is_object()) out.family = doc["family"];
  return out;
}

Json list(const std::vector<Point>& pts) {
  Json arr = Json::array();
  for (Point x : pts) arr.push_back(x);
  return arr;
}

std::string set_label(const PointSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](Point x) {
    out += (first ? "" : ",") + std::to_string(x);
    first = false;
  });
  return out + "}";
}

}  // namespace

MapDocument parse_map_document(std::string_view text) {
  const auto first = std::find_if(text.begin(), text.end(),
                                  [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first == text.end()) throw Error(ErrorCode::EmptyDomain, "empty input");
  if (*first == '{') return parse_json(text);
  return MapDocument{FunctionalMap::load(parse_plain(text)), std::nullopt};
}

Json map_to_json(const FunctionalMap& f, const std::optional<Json>& family) {
  Json j;
  j["n"] = f.size();
  j["succ"] = list(std::vector<Point>(f.succ().begin(), f.succ().end()));
  if (family) j["family"] = *family;
  return j;
}

Json natset_to_json(const EventuallyPeriodicNatSet& s) {
  Json j;
  j["t"] = s.threshold();
  j["prefix"] = s.prefix_members();
  j["p"] = s.period();
  j["residues"] = s.residue_members();
  return j;
}

Json point_set_to_json(const PointSet& s) { return list(s.members()); }

Json relation_to_json(const PairRelation& r) {
  Json arr = Json::array();
  for (const auto& [x, y] : r.pairs()) arr.push_back(Json::array({x, y}));
  return arr;
}

std::vector<std::string> caveats_for(const std::optional<Json>& family) {
  std::vector<std::string> out{std::string(kFiniteSpaceCaveat)};
  if (family && family->contains("name")) {
    const auto name = (*family)["name"].get<std::string>();
    if (name == "tower") out.emplace_back(kTowerCaveat);
    if (name == "mod-mul") out.emplace_back(kModMulCaveat);
  }
  return out;
}

Json build_report(const Analysis& a, const std::vector<TheoremCheck>& checks,
                  const std::optional<Json>& family) {
  const PrimalSystem& sys = a.sys;
  const std::size_t n = sys.size();
  Json r;
  r["schema"] = "primal-report";
  r["version"] = kReportVersion;
  r["map"] = map_to_json(sys.f);
  r["family"] = family ? *family : Json(nullptr);
  r["caveats"] = caveats_for(family);

  Json rho;
  rho["tail_len"] = sys.rho.tail_len;
  rho["cycle_entry"] = sys.rho.cycle_entry;
  rho["cycle_id"] = sys.rho.cycle_id;
  rho["component_id"] = sys.rho.component_id;
  rho["component_count"] = sys.rho.component_count;
  Json cycles = Json::array();
  for (const auto& c : sys.rho.cycles) cycles.push_back(list(c));
  rho["cycles"] = cycles;
  r["rho"] = rho;

  Json opens = Json::array();
  for (Point x = 0; x < n; ++x) opens.push_back(point_set_to_json(sys.V[x]));
  r["minimal_opens"] = opens;
  r["open_set_count"] = a.open_count ? Json(*a.open_count) : Json(nullptr);

  Json sysj;
  sysj["non_wandering_set"] = point_set_to_json(a.system.omega_set);
  sysj["recurrent_set"] = point_set_to_json(a.system.recurrent_set);
  Json minimal = Json::array();
  for (const auto& m : a.system.minimal_sets) minimal.push_back(point_set_to_json(m));
  sysj["minimal_sets"] = minimal;
  sysj["transitive"] = a.system.transitive;
  sysj["transitive_points"] = point_set_to_json(a.system.transitive_points);
  sysj["topologically_ergodic"] = a.system.top_ergodic;
  sysj["weakly_mixing"] = a.system.weakly_mixing;
  sysj["strongly_mixing"] = a.system.strongly_mixing;
  sysj["ergodic_kind"] = std::string(to_string(a.system.ergodic_kind));
  sysj["sensitive"] = a.chaos.sensitive;
  sysj["ay_chaotic"] = a.chaos.ay_chaotic;
  sysj["d_chaotic"] = a.chaos.d_chaotic;
  r["system"] = sysj;

  Json points = Json::array();
  for (Point x = 0; x < n; ++x) {
    const PointFlags& fl = a.points.flags[x];
    Json p;
    p["x"] = x;
    p["periodic"] = fl.periodic;
    p["eventually_periodic"] = fl.eventually_periodic;
    p["recurrent"] = fl.recurrent;
    p["quasi_periodic"] = fl.quasi_periodic;
    p["almost_periodic"] = fl.almost_periodic;
    p["transitive_point"] = fl.transitive_point;
    p["non_wandering"] = fl.non_wandering;
    p["omega"] = point_set_to_json(a.points.omega[x]);
    p["return_times"] = natset_to_json(a.points.return_times[x]);
    points.push_back(p);
  }
  r["points"] = points;

  Json rel;
  rel["entourage"] = relation_to_json(a.entourage);
  rel["triangle"] = relation_to_json(a.triangle);
  rel["prox"] = relation_to_json(a.relations.prox);
  rel["asym"] = relation_to_json(a.relations.asym);
  rel["syprox"] = relation_to_json(a.relations.syprox);
  r["relations"] = rel;

  Json stab;
  std::size_t certified = 0, max_steps = 0;
  for (const auto& w : a.stability.witnesses) {
    certified += w.stable_set_is_neighbourhood ? 1 : 0;
    max_steps = std::max(max_steps, w.steps_checked);
  }
  stab["lyapunov_stable"] = certified == n;
  stab["points_certified"] = certified;
  stab["max_steps_checked"] = max_steps;
  r["stability"] = stab;

  Json th = Json::array();
  for (const auto& c : checks) {
    Json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    th.push_back(e);
  }
  r["theorem_checks"] = th;
  return r;
}

std::string render_dot(const PrimalSystem& sys) {
  static constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                             "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                             "#bcbd22", "#17becf"};
  constexpr std::size_t kColors = sizeof(kPalette) / sizeof(kPalette[0]);
  const std::size_t n = sys.size();
  std::ostringstream os;
  os << "digraph primal {\n";
  os << "  rankdir=LR;\n";
  std::string label = "minimal sets:";
  for (std::size_t c = 0; c < sys.rho.cycles.size(); ++c) label += " " + set_label(sys.rho.cycle_set(c));
  os << "  label=\"" << label << "\";\n";
  os << "  node [shape=circle, style=filled, fontcolor=white];\n";
  for (std::size_t comp = 0; comp < sys.rho.component_count; ++comp) {
    const char* color = kPalette[comp % kColors];
    os << "  subgraph cluster_" << comp << " {\n";
    os << "    label=\"component " << comp << "\";\n";
    os << "    color=\"" << color << "\";\n";
    for (Point x = 0; x < n; ++x) {
      if (sys.rho.component_id[x] != comp) continue;
      os << "    n" << x << " [label=\"" << x << "\", fillcolor=\"" << color << "\"";
      if (sys.rho.is_periodic(x)) os << ", shape=doublecircle";
      os << "];\n";
    }
    os << "  }\n";
  }
  for (Point x = 0; x < n; ++x) {
    os << "  n" << x << " -> n" << sys.f(x);
    if (sys.rho.is_periodic(x)) os << " [style=bold, penwidth=2.5]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace primal
