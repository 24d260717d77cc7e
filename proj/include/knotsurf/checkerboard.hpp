#pragma once

#include <optional>
#include <vector>

#include "knotsurf/embedded.hpp"

namespace knotsurf {

enum class Color { Shaded, Unshaded };

/// Two-colouring of the regions of a diagram together with the Euler
/// characteristic bookkeeping of the two checkerboard surfaces.
struct CheckerboardData {
  std::vector<Color> coloring;  // indexed by region id
  int chi_shaded = 0;
  int chi_unshaded = 0;
  int boundary_intersections = 0;  // always twice the crossing count
};

/// Proper 2-colouring of the region adjacency graph (one adjacency per diagram
/// edge) normalised so the region holding half-edge 0 is shaded, or nullopt
/// when the graph has an odd cycle.
std::optional<CheckerboardData> checkerboard_coloring(const EmbeddedDiagram& d);

/// The same data with the colours exchanged.
CheckerboardData swap_colors(const CheckerboardData& c);

/// chi_shaded + chi_unshaded + i/2. Throws IdentityViolation if it does not
/// equal the ambient Euler characteristic.
int howie_invariant(const EmbeddedDiagram& d, const CheckerboardData& c);

enum class Freeness { Free, NotFree, Unknown };

struct FreeSurfaceClassification {
  Freeness shaded = Freeness::Unknown;
  Freeness unshaded = Freeness::Unknown;
};

/// Freeness of the two checkerboard surfaces of a connected colourable torus
/// diagram with complexity `r` at least 2. A surface made of disc regions on
/// an unknotted torus is free; one carrying the annular region is reported
/// Unknown. On a knotted torus neither surface is free. Throws
/// PreconditionViolated when r < 2 or the diagram is not on a torus.
FreeSurfaceClassification classify_free_surface(const EmbeddedDiagram& d,
                                                const CheckerboardData& c,
                                                bool torus_unknotted, int r);

/// Disc regions with two corners whose edges are not alternating: the
/// diagram-level bigons between the checkerboard surface boundaries. An empty
/// result certifies that no Reidemeister II reduction is available.
std::vector<Region> find_diagrammatic_bigons(const EmbeddedDiagram& d);

}  // namespace knotsurf
