#pragma once

#include <cstdint>
#include <random>

#include <vector>

#include "knotsurf/codes.hpp"
#include "knotsurf/ribbon.hpp"

namespace knotsurf {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Random knot diagram from a random Gauss word with random crossing signs.
/// The rotation system is whatever the word dictates, so the diagram lands on
/// a surface of arbitrary genus. `alternating` pairs every crossing's two
/// visits at opposite parities so the passages alternate.
RibbonDiagram random_surface_diagram(Rng& rng, int crossings, bool alternating);

/// Random planar knot projection grown by crossing insertions inside faces,
/// with alternating or random over/under data.
RibbonDiagram random_planar_diagram(Rng& rng, int crossings, bool alternating);

/// Reassign over/under so the passages alternate along the knot. Throws
/// PreconditionViolated when a crossing is met twice at the same parity.
RibbonDiagram make_alternating(const RibbonDiagram& d);

/// A crossing whose opposite corners lie in the same face.
bool is_nugatory(const RibbonDiagram& d, int v);
bool is_reduced(const RibbonDiagram& d);

/// PD code of the closure of a braid word on `strands` strands. Generator
/// k > 0 crosses strands k and k+1 with the left one over; -k is its
/// inverse. Throws PreconditionViolated unless the closure is a knot with
/// every strand crossed.
PlanarDiagramCode braid_closure(int strands, const std::vector<int>& word);

}  // namespace knotsurf
