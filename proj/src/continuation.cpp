#include "lenstight/continuation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <tuple>
#include <stdexcept>

#include "lenstight/linking_calculus.hpp"
#include "lenstight/plane_map.hpp"

namespace lenstight {
namespace {

using Edge = std::pair<Int, Int>;  // offset(first) < offset(second)

// Endpoint offsets inside their arcs are only known up to the order
// constraints below; a placement is any linear extension.
bool acyclic(Int nodes, const std::vector<Edge>& edges) {
  std::vector<std::vector<Int>> out(static_cast<std::size_t>(nodes));
  std::vector<Int> indegree(static_cast<std::size_t>(nodes), 0);
  for (const auto& [a, b] : edges) {
    out[static_cast<std::size_t>(a)].push_back(b);
    ++indegree[static_cast<std::size_t>(b)];
  }
  std::vector<Int> ready;
  for (Int v = 0; v < nodes; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
  }
  Int seen = 0;
  while (!ready.empty()) {
    const Int v = ready.back();
    ready.pop_back();
    ++seen;
    for (Int w : out[static_cast<std::size_t>(v)]) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
  }
  return seen == nodes;
}

// Smallest-index-first topological order; rank in it serves as the offset.
std::vector<Int> placement(Int nodes, const std::vector<Edge>& edges) {
  std::vector<std::vector<Int>> out(static_cast<std::size_t>(nodes));
  std::vector<Int> indegree(static_cast<std::size_t>(nodes), 0);
  for (const auto& [a, b] : edges) {
    out[static_cast<std::size_t>(a)].push_back(b);
    ++indegree[static_cast<std::size_t>(b)];
  }
  std::priority_queue<Int, std::vector<Int>, std::greater<>> ready;
  for (Int v = 0; v < nodes; ++v) {
    if (indegree[static_cast<std::size_t>(v)] == 0) ready.push(v);
  }
  std::vector<Int> offset(static_cast<std::size_t>(nodes), -1);
  Int next = 0;
  while (!ready.empty()) {
    const Int v = ready.top();
    ready.pop();
    offset[static_cast<std::size_t>(v)] = next++;
    for (Int w : out[static_cast<std::size_t>(v)]) {
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
  }
  return offset;
}

// Elliptic point in the face of D \ star that contains the boundary gap
// following endpoint e: inside a pair that is e_i, between pairs it is e_0.
Int basin_after(Int endpoint) {
  return endpoint_is_anticlockwise(endpoint) ? 0 : endpoint_hyperbolic(endpoint);
}

std::string elliptic_name(Int i) { return "e" + std::to_string(i); }

struct Layout {
  Int p;
  Int m;
  const std::vector<Int>& w;
  std::vector<Int> order;  // endpoints anticlockwise from the basepoint
  std::vector<Int> rank;
  std::vector<Edge> edges;

  std::vector<Int> endpoints_in_arc(Int arc) const {
    std::vector<Int> out;
    for (Int e : order) {
      if (w[static_cast<std::size_t>(e)] == arc) out.push_back(e);
    }
    return out;
  }

  Int predecessor(Int e) const {
    return order[static_cast<std::size_t>(mod_floor(rank[static_cast<std::size_t>(e)] - 1, m))];
  }

  // Last endpoint strictly before arc j, cyclically.
  Int last_before_arc(Int arc) const {
    Int prev = order.back();
    for (Int e : order) {
      if (w[static_cast<std::size_t>(e)] < arc) prev = e;
    }
    return prev;
  }
};

Layout make_layout(const StarConfiguration& config) {
  const auto& w = config.word.arcs;
  Layout layout{config.p, config.word.size(), w, {}, {}, {}};
  const Int m = layout.m;
  const Int seam = seam_index(config.word);
  layout.rank.assign(static_cast<std::size_t>(m), 0);
  for (Int i = 0; i < m; ++i) {
    const Int e = (seam + i) % m;
    layout.order.push_back(e);
    layout.rank[static_cast<std::size_t>(e)] = i;
  }
  // endpoints sharing an arc keep their anticlockwise order
  for (Int i = 0; i + 1 < m; ++i) {
    const Int a = layout.order[static_cast<std::size_t>(i)];
    const Int b = layout.order[static_cast<std::size_t>(i + 1)];
    if (w[static_cast<std::size_t>(a)] == w[static_cast<std::size_t>(b)]) layout.edges.push_back({a, b});
  }
  // A pair one arc apart must still straddle a preimage of every basepoint,
  // which pins the order of their offsets.
  for (Int c = 0; c < m; c += 2) {
    const Int a = c + 1;
    Int span = w[static_cast<std::size_t>(a)] - w[static_cast<std::size_t>(c)];
    if (layout.rank[static_cast<std::size_t>(a)] < layout.rank[static_cast<std::size_t>(c)]) span += config.p;
    if (span == 0) throw Error(ErrorCode::NotAdmissible, "pair shares an arc");
    if (span == 1) layout.edges.push_back({c, a});
  }
  return layout;
}

// Planar map of the star, the boundary circle and the realized re-entry
// arcs; the diagram is crossing-free iff every arc can be drawn inside the
// face it enters and the map stays a sphere.
bool certify(const Layout& layout, Int n, const std::vector<ReentryArc>& arcs,
             const std::vector<std::pair<Int, Int>>& boundary_points,  // (endpoint or -1-x, arc index or -1)
             std::vector<std::string>& boundary_names) {
  PlaneMap map;
  const auto e0 = map.add_vertex("e0");
  std::vector<PlaneMap::Vertex> h(static_cast<std::size_t>(n) + 1), e(static_cast<std::size_t>(n) + 1);
  for (Int i = 1; i <= n; ++i) {
    h[static_cast<std::size_t>(i)] = map.add_vertex("h" + std::to_string(i));
    e[static_cast<std::size_t>(i)] = map.add_vertex(elliptic_name(i));
  }
  // boundary points: preimages of x and endpoints first, re-entries later
  std::vector<PlaneMap::Vertex> endpoint_vertex(static_cast<std::size_t>(layout.m));
  std::vector<PlaneMap::Vertex> cycle;
  std::vector<std::size_t> cycle_slot;  // index into boundary_points
  for (std::size_t k = 0; k < boundary_points.size(); ++k) {
    const auto [who, arc_index] = boundary_points[k];
    if (arc_index >= 0) continue;
    const auto v = map.add_vertex(boundary_names[k]);
    if (who >= 0) endpoint_vertex[static_cast<std::size_t>(who)] = v;
    cycle.push_back(v);
    cycle_slot.push_back(k);
  }
  const std::size_t c = cycle.size();
  for (std::size_t k = 0; k < c; ++k) {
    const auto v = cycle[k];
    const auto next = cycle[(k + 1) % c];
    const auto prev = cycle[(k + c - 1) % c];
    const Int who = boundary_points[cycle_slot[k]].first;
    if (who >= 0) {
      map.set_rotation(v, {next, h[static_cast<std::size_t>(endpoint_hyperbolic(who))], prev});
    } else {
      map.set_rotation(v, {next, prev});
    }
  }
  std::vector<PlaneMap::Vertex> centre;
  for (Int i = 1; i <= n; ++i) {
    const auto hc = endpoint_vertex[static_cast<std::size_t>(2 * (i - 1))];
    const auto ha = endpoint_vertex[static_cast<std::size_t>(2 * (i - 1) + 1)];
    map.set_rotation(h[static_cast<std::size_t>(i)], {hc, e[static_cast<std::size_t>(i)], ha, e0});
    map.set_rotation(e[static_cast<std::size_t>(i)], {h[static_cast<std::size_t>(i)]});
    centre.push_back(h[static_cast<std::size_t>(i)]);
  }
  map.set_rotation(e0, centre);
  if (!map.well_formed() || !map.satisfies_euler() ||
      map.face_count() != static_cast<std::size_t>(2 * n + 1)) {
    return false;
  }

  // Walk the full boundary order, inserting each re-entry point after its
  // boundary predecessor and joining it to its terminal.
  std::vector<PlaneMap::Vertex> present(boundary_points.size());
  std::vector<bool> placed(boundary_points.size(), false);
  for (std::size_t k = 0; k < cycle_slot.size(); ++k) {
    present[cycle_slot[k]] = cycle[k];
    placed[cycle_slot[k]] = true;
  }
  const std::size_t total = boundary_points.size();
  for (std::size_t k = 0; k < total; ++k) {
    if (placed[k]) continue;
    const auto prev = present[(k + total - 1) % total];  // earlier points are all placed
    std::size_t s = (k + 1) % total;
    while (!placed[s]) s = (s + 1) % total;
    const auto next = present[s];
    const auto& arc = arcs[static_cast<std::size_t>(boundary_points[k].second)];
    const auto v = map.subdivide(prev, next, boundary_names[k]);
    present[k] = v;
    placed[k] = true;
    const auto target = arc.realized_terminal == 0 ? e0 : e[static_cast<std::size_t>(arc.realized_terminal)];
    if (!map.connect_in_face(v, next, target)) return false;
  }
  return map.well_formed() && map.satisfies_euler() &&
         map.face_count() == static_cast<std::size_t>(2 * n + 1) + arcs.size();
}

}  // namespace

const ReentryArc& ContinuationDiagram::at(Int endpoint, Int step) const {
  for (const auto& a : arcs) {
    if (a.endpoint == endpoint && a.step == step) return a;
  }
  throw Error(ErrorCode::OutOfRange, "no re-entry arc for endpoint " + std::to_string(endpoint) +
                                         " step " + std::to_string(step));
}

bool ContinuationDiagram::fully_forced() const {
  return std::all_of(arcs.begin(), arcs.end(), [](const ReentryArc& a) { return a.forced(); });
}

ContinuationDiagram forced_continuations(const LensSpace& lens, const StarConfiguration& config) {
  const Int p = lens.p();
  if (config.p != p) {
    throw Error(ErrorCode::InvalidWord, "configuration has p = " + std::to_string(config.p) +
                                            " but the lens space has p = " + std::to_string(p));
  }
  if (config.e_plus < 1 || config.e_plus > p) {
    throw Error(ErrorCode::OutOfRange, "forcing needs 1 <= e_plus <= p");
  }
  if (!is_admissible(config)) throw Error(ErrorCode::NotAdmissible, "configuration is not admissible");

  ContinuationDiagram diagram;
  diagram.p = p;
  diagram.hyperbolic_count = config.hyperbolic_count();
  const Int n = diagram.hyperbolic_count;
  if (n == 0) {
    diagram.crossing_free = true;
    return diagram;
  }

  const Layout layout = make_layout(config);
  const Int m = layout.m;
  if (!acyclic(m, layout.edges)) {
    throw Error(ErrorCode::NoValidDiagram, "offset constraints are contradictory");
  }
  const std::vector<Int> offset = placement(m, layout.edges);
  const auto& w = layout.w;

  for (Int y = 0; y < m; ++y) {
    for (Int k = 1; k < p; ++k) {
      ReentryArc arc{y, k, mod_floor(w[static_cast<std::size_t>(y)] - 1 + k, p) + 1, {}, -1};
      const auto here = layout.endpoints_in_arc(arc.arc);
      if (here.empty()) {
        arc.candidate_terminals.push_back(basin_after(layout.last_before_arc(arc.arc)));
      } else {
        for (std::size_t slot = 0; slot <= here.size(); ++slot) {
          auto edges = layout.edges;
          if (slot > 0) edges.push_back({here[slot - 1], y});
          if (slot < here.size()) edges.push_back({y, here[slot]});
          if (!acyclic(m, edges)) continue;
          const Int prev = slot > 0 ? here[slot - 1] : layout.predecessor(here.front());
          arc.candidate_terminals.push_back(basin_after(prev));
        }
      }
      std::sort(arc.candidate_terminals.begin(), arc.candidate_terminals.end());
      arc.candidate_terminals.erase(
          std::unique(arc.candidate_terminals.begin(), arc.candidate_terminals.end()),
          arc.candidate_terminals.end());
      if (arc.candidate_terminals.empty()) {
        throw Error(ErrorCode::NoValidDiagram, "re-entry arc has no consistent placement");
      }
      diagram.arcs.push_back(std::move(arc));
    }
  }

  // Concrete realization: every boundary point sorted by (arc, offset), with
  // the preimage x_j opening arc j.
  struct Point {
    Int arc;
    Int offset;
    Int who;        // endpoint index, or -1 - j for the preimage x_j
    Int arc_index;  // index into diagram.arcs for re-entries, else -1
  };
  std::vector<Point> points;
  for (Int j = 1; j <= p; ++j) points.push_back({j, -1, -1 - j, -1});
  for (Int e = 0; e < m; ++e) points.push_back({w[static_cast<std::size_t>(e)], offset[static_cast<std::size_t>(e)], e, -1});
  for (std::size_t i = 0; i < diagram.arcs.size(); ++i) {
    const auto& a = diagram.arcs[i];
    points.push_back({a.arc, offset[static_cast<std::size_t>(a.endpoint)], a.endpoint, static_cast<Int>(i)});
  }
  std::sort(points.begin(), points.end(), [](const Point& l, const Point& r) {
    return std::tie(l.arc, l.offset, l.arc_index) < std::tie(r.arc, r.offset, r.arc_index);
  });

  std::vector<std::pair<Int, Int>> boundary_points;
  Int last_endpoint = layout.order.back();
  for (const auto& pt : points) {
    boundary_points.push_back({pt.who, pt.arc_index});
    if (pt.who < 0) {
      diagram.boundary.push_back("x" + std::to_string(-1 - pt.who));
    } else if (pt.arc_index < 0) {
      diagram.boundary.push_back(endpoint_name(pt.who));
      last_endpoint = pt.who;
    } else {
      auto& a = diagram.arcs[static_cast<std::size_t>(pt.arc_index)];
      a.realized_terminal = basin_after(last_endpoint);
      if (!std::binary_search(a.candidate_terminals.begin(), a.candidate_terminals.end(),
                              a.realized_terminal)) {
        throw std::logic_error("realization outside the candidate set");
      }
      diagram.boundary.push_back(endpoint_name(pt.who) + "'" + std::to_string(a.step));
    }
  }

  diagram.crossing_free = certify(layout, n, diagram.arcs, boundary_points, diagram.boundary);
  if (!diagram.crossing_free) {
    throw Error(ErrorCode::NoValidDiagram, "re-entry arcs cannot be drawn without crossings");
  }
  return diagram;
}

bool detect_overtwisted_pattern(const ContinuationDiagram& diagram) {
  const Int n = diagram.hyperbolic_count;
  if (n == 0 || diagram.arcs.empty() || !diagram.fully_forced()) return false;
  // Each separatrix must sweep every leaf e_1..e_n once, so that the
  // continuations close up through all hyperbolic points.
  std::vector<std::vector<bool>> reached(static_cast<std::size_t>(2 * n),
                                         std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  std::vector<Int> count(static_cast<std::size_t>(2 * n), 0);
  for (const auto& a : diagram.arcs) {
    const Int t = a.terminal();
    auto& seen = reached[static_cast<std::size_t>(a.endpoint)];
    if (t < 1 || seen[static_cast<std::size_t>(t)]) return false;
    seen[static_cast<std::size_t>(t)] = true;
    ++count[static_cast<std::size_t>(a.endpoint)];
  }
  return std::all_of(count.begin(), count.end(), [n](Int c) { return c == n; });
}

Int count_bound(const LensSpace& lens, const Residue& m, SpinStructure spin) {
  const Int p = lens.p();
  if (p < 2) throw Error(ErrorCode::DegenerateP1, "count_bound needs p >= 2");
  const Int e_plus = forced_e_plus(lens, m.value, spin);
  if (e_plus < p) return admissible_orbit_count(p, e_plus - 1);

  constexpr Int kEnumerationLimit = 2'000'000;
  if (raw_word_count(p, e_plus - 1) > kEnumerationLimit) {
    throw Error(ErrorCode::Unsupported, "enumeration for e_plus = p is too large at p = " +
                                            std::to_string(p));
  }
  Int surviving = 0;
  for (const auto& config : enumerate_configurations(p, e_plus, ConfigurationFilter::AdmissibleOnly)) {
    try {
      if (!detect_overtwisted_pattern(forced_continuations(lens, config))) ++surviving;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NoValidDiagram) throw;
    }
  }
  return surviving;
}

}  // namespace lenstight
