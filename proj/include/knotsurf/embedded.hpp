#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotsurf/ribbon.hpp"

namespace knotsurf {

/// Integer homology class on a torus, in the basis reported by the dual
/// labelling of the diagram (see torus_curves.hpp).
struct CurveClass {
  int p = 0;
  int q = 0;
  bool bounds_disc = false;

  bool operator==(const CurveClass& o) const { return p == o.p && q == o.q; }
};

/// Algebraic intersection number of two classes.
inline int intersection(const CurveClass& a, const CurveClass& b) {
  return a.p * b.q - a.q * b.p;
}

/// Extra topology glued onto the faces of a cellular ribbon surface.
struct Decoration {
  enum class Kind { Handle, Tube };
  Kind kind = Kind::Handle;
  int face = 0;        // Handle: the face receiving genus; Tube: first end
  int other_face = 0;  // Tube only
  int genus = 1;       // Handle only, positive
  /// Tube only: signed full twists the diagram strands crossing the tube's
  /// meridian arc pick up in S^3 relative to the alternating twist direction.
  int framing = 0;

  static Decoration handle(int face, int genus) {
    return {Kind::Handle, face, face, genus, 0};
  }
  static Decoration tube(int a, int b, int framing = 0) {
    return {Kind::Tube, a, b, 1, framing};
  }
};

enum class RegionKind { Disc, Annulus, Other };

/// A complementary region of the diagram on the ambient surface: one or more
/// ribbon faces joined by decorations.
struct Region {
  int id = 0;
  std::vector<int> faces;
  std::vector<std::vector<int>> boundary_walks;
  int euler_char = 1;
  RegionKind kind = RegionKind::Disc;
};

/// A knot diagram on a closed orientable surface that need not be cellular.
struct EmbeddedDiagram {
  RibbonDiagram ribbon;
  std::vector<Decoration> decorations;
  /// Curve classes declared to bound compressing discs; empty means the
  /// caller's default applies.
  std::vector<CurveClass> compressing;

  bool is_cellular() const { return decorations.empty(); }
};

/// Checks face references; throws BadDecoration.
void validate(const EmbeddedDiagram& d);

/// Ambient Euler characteristic: ribbon χ minus two per added handle and per
/// tube. Throws OddEuler when the result is inconsistent.
int euler_characteristic(const EmbeddedDiagram& d);
int genus(const EmbeddedDiagram& d);

/// Regions ordered by their smallest face id.
std::vector<Region> regions(const EmbeddedDiagram& d);
/// Region id of every ribbon face.
std::vector<int> region_of_face(const EmbeddedDiagram& d);

}  // namespace knotsurf
