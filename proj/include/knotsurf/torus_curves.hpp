#pragma once

#include <optional>
#include <vector>

#include "knotsurf/codes.hpp"
#include "knotsurf/embedded.hpp"

namespace knotsurf {

/// One link of the dual graph: crosses the diagram edge of `half_edge`,
/// running from the region on that half-edge's face to the other side.
struct DualLink {
  int from = 0;
  int to = 0;
  int half_edge = 0;
  int weight = 1;  // 0 for the seam of a retracted annulus
  CurveClass label;
};

/// Regions of a genus-one diagram joined by one link per diagram edge, with
/// homology labels. Nodes are region ids. A diagram carrying an annulus
/// gets one extra weight-0 seam link (a loop at the annulus) whose label is
/// the class of the annulus core.
struct DualGraph {
  int node_count = 0;
  std::vector<DualLink> links;
  int seam = -1;
};

/// A closed walk in the dual graph starting and ending at nodes.front().
struct DualCycle {
  std::vector<int> nodes;  // nodes visited, without repeating the start
  std::vector<int> links;
  std::vector<int> directions;  // +1 from->to, -1 against
  int weight = 0;
  CurveClass cls;
};

/// Labels from a tree-cotree decomposition, then rewritten in a reduced
/// basis: (1,0) is a lightest essential class and (0,1) a lightest class
/// meeting it once. Throws NotGenusOne or NotCellular. Planar ribbons with a
/// single tube between two distinct faces are handled by adding the seam.
DualGraph homology_labels(const EmbeddedDiagram& d);

/// Class of a closed dual walk: the signed sum of its labels.
CurveClass walk_class(const DualGraph& g, const std::vector<int>& links,
                      const std::vector<int>& directions);

/// Least weight of a closed dual walk in class (p,q). Throws ClassUnreachable
/// when no walk is found inside the search box, and PreconditionViolated
/// for (0,0).
int min_intersection_in_class(const DualGraph& g, const CurveClass& cls);

/// A walk realising min_intersection_in_class, fewest links among those,
/// then lexicographically smallest node sequence.
DualCycle shortest_cycle_in_class(const DualGraph& g, const CurveClass& cls);

/// The compressing classes to use: the explicit list, else the diagram's own,
/// else (1,0) and (0,1).
std::vector<CurveClass> resolve_compressing(const EmbeddedDiagram& d,
                                            const std::vector<CurveClass>& explicit_classes);

struct RComplexity {
  int r = 0;
  std::vector<CurveClass> classes;
  std::vector<int> per_class;
  std::optional<DualCycle> witness;
};

/// r for a genus-one diagram. A planar ribbon closed up by a handle or by a
/// tube with both ends on one face lies in a disc, so r = 0 there.
RComplexity r_report(const EmbeddedDiagram& d, const std::vector<CurveClass>& compressing = {});
int r_complexity(const EmbeddedDiagram& d, const std::vector<CurveClass>& compressing = {});

struct RegionCensus {
  int discs = 0;
  int annuli = 0;
};

/// Region census of a torus diagram known to have r >= 2. Throws
/// PreconditionViolated for smaller r and LemmaViolation if anything other
/// than discs and at most one annulus appears.
RegionCensus region_census(const EmbeddedDiagram& d, int r);

/// Class of the core of the annular region, if there is one.
std::optional<CurveClass> annular_core(const EmbeddedDiagram& d);

struct BigonCheck {
  bool incident = false;
  std::optional<DualCycle> witness;
  /// Some compressing class is the core itself: compressing along it leaves
  /// an alternating diagram on a sphere.
  bool collapses = false;
};

/// Whether a compressing class meets the diagram twice and the core once.
/// Throws PreconditionViolated without an annular region.
BigonCheck meridian_bigon_check(const EmbeddedDiagram& d,
                                const std::vector<CurveClass>& compressing = {});
/// Same, reusing labels already computed for d.
BigonCheck meridian_bigon_check(const EmbeddedDiagram& d, const DualGraph& g,
                                const std::vector<CurveClass>& compressing = {});

/// Torus diagram of an almost-alternating planar diagram. `dealternator` is
/// the 1-based crossing of the code whose change makes it alternating.
/// The output has two more crossings, one annular region, a tube of
/// framing -2 and its meridian and longitude as compressing classes.
/// Throws NotAlmostAlternating.
EmbeddedDiagram almost_alternating_to_torus(const PlanarDiagramCode& code, int dealternator);

/// Cut the torus along the meridian that meets the diagram twice, put the
/// tube's twists back and cancel the Reidemeister II pairs this creates.
/// Throws PreconditionViolated unless the meridian-bigon condition holds.
PlanarDiagramCode torus_to_almost_alternating(const EmbeddedDiagram& d);

}  // namespace knotsurf
