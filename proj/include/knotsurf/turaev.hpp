#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "knotsurf/codes.hpp"
#include "knotsurf/embedded.hpp"

namespace knotsurf {

enum class Smoothing : std::uint8_t { A, B };

/// A choice of smoothing per crossing (indexed like the code's crossings)
/// and the resulting number of circles.
struct KauffmanState {
  std::vector<Smoothing> choice;
  int circles = 0;

  static KauffmanState all(int crossings, Smoothing s) {
    return {std::vector<Smoothing>(crossings, s), 0};
  }
};

// The A-smoothing joins each over-strand end to the end counterclockwise
// after it. For X(a,b,c,d) that joins b with c and d with a.

/// Circle count of the state on any ribbon diagram.
int smooth(const RibbonDiagram& d, const std::vector<Smoothing>& choice);
int smooth(const PlanarDiagramCode& code, const KauffmanState& s);

struct TuraevData {
  int crossings = 0;
  int s_a = 0;
  int s_b = 0;
  int genus = 0;
};

TuraevData turaev_data(const PlanarDiagramCode& code);
int turaev_genus(const PlanarDiagramCode& code);

/// Flip crossings of a planar diagram until it alternates. Faces of the
/// result are the all-A and all-B state circles, so the surface has the
/// Turaev genus. Throws NonRealizableRotation if no consistent set of flips
/// exists (only possible for non-planar input).
EmbeddedDiagram build_turaev_embedding(const PlanarDiagramCode& code);
EmbeddedDiagram build_turaev_embedding(const RibbonDiagram& d);

/// An alternating diagram of the knot on a surface of genus at most one:
/// the Turaev embedding when its genus is at most one, else the torus
/// diagram of the almost-alternating conversion. nullopt means no witness
/// was found, which proves nothing.
std::optional<EmbeddedDiagram> toroidally_alternating_witness(const PlanarDiagramCode& code);
std::optional<EmbeddedDiagram> toroidally_alternating_witness(const SignedGaussCode& code);

}  // namespace knotsurf
