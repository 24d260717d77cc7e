#pragma once

// Diagram fixtures shared by the unit tests and the acceptance suite.

#include <optional>
#include <vector>

#include "knotsurf/checkerboard.hpp"
#include "knotsurf/generate.hpp"
#include "knotsurf/torus_curves.hpp"

namespace knotsurf::fixtures {

inline constexpr const char* kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

struct AlmostAlternating {
  PlanarDiagramCode code;
  int dealternator = 0;  // 1-based
};

/// Reduced alternating planar diagram with one crossing switched.
inline AlmostAlternating random_almost_alternating(Rng& rng, int crossings) {
  for (;;) {
    const auto alt = random_planar_diagram(rng, crossings, true);
    if (!is_reduced(alt)) continue;
    const int v = std::uniform_int_distribution<int>(0, crossings - 1)(rng);
    const auto code = to_pd(switch_vertex(alt, v));
    const auto d = to_ribbon(code);
    for (int u = 0; u < d.vertex_count(); ++u) {
      if (switch_vertex(d, u).is_alternating() && !is_nugatory(d, u)) return {code, u + 1};
    }
  }
}

/// Closed dual walks through the tube: lightest class meeting the core once.
inline CurveClass lightest_transverse_class(const DualGraph& g, const CurveClass& core) {
  std::optional<std::pair<int, CurveClass>> best;
  for (int p = -3; p <= 3; ++p)
    for (int q = -3; q <= 3; ++q) {
      const CurveClass c{p, q, true};
      if (std::abs(intersection(c, core)) != 1) continue;
      const int w = min_intersection_in_class(g, c);
      if (!best || w < best->first) best = {{w, c}};
    }
  return best->second;
}

/// Planar alternating diagram with a tube between two same-coloured faces
/// at least `distance` apart in the dual graph; nullopt if none exist.
inline std::optional<EmbeddedDiagram> tube_at_distance(const RibbonDiagram& r, int distance) {
  const int nf = r.face_count();
  std::vector<std::vector<int>> dist(nf, std::vector<int>(nf, 1 << 20));
  for (int f = 0; f < nf; ++f) dist[f][f] = 0;
  for (int h = 0; h < r.half_edge_count(); ++h) {
    const int a = r.face_of()[h], b = r.face_of()[r.alpha(h)];
    if (a != b) dist[a][b] = 1;
  }
  for (int k = 0; k < nf; ++k)
    for (int i = 0; i < nf; ++i)
      for (int j = 0; j < nf; ++j) dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
  for (int a = 0; a < nf; ++a)
    for (int b = a + 1; b < nf; ++b)
      if (dist[a][b] >= distance && dist[a][b] % 2 == 0)
        return EmbeddedDiagram{r, {Decoration::tube(a, b)}, {}};
  return std::nullopt;
}

/// The planar trefoil with a tube between two adjacent faces: alternating on
/// a torus but not checkerboard colourable.
inline EmbeddedDiagram non_colorable_torus_trefoil() {
  const auto r = to_ribbon(parse_pd(kTrefoilPd));
  return {r, {Decoration::tube(r.face_of()[0], r.face_of()[r.alpha(0)])}, {}};
}

/// A cycle of two alternating 2-tangles: the 8_19 diagram as the closure of
/// s1^3 s2 s1^3 s2, placed on its Turaev torus.
inline PlanarDiagramCode two_tangle_cycle() { return braid_closure(3, {1, 1, 1, 2, 1, 1, 1, 2}); }

}  // namespace knotsurf::fixtures
