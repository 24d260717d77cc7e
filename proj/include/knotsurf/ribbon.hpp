#pragma once

#include <optional>
#include <span>
#include <vector>

#include "knotsurf/codes.hpp"

namespace knotsurf {

/// Half-edge rotation system of a 4-valent knot diagram graph.
///
/// Vertex v owns half-edges 4v..4v+3. `sigma` rotates counterclockwise
/// around a vertex, `alpha` pairs the two ends of an edge. The strand through
/// a vertex continues to the opposite half-edge sigma^2(h). Faces are the
/// orbits of sigma∘alpha. The knot is oriented so that half-edge 0 is
/// incoming.
class RibbonDiagram {
 public:
  RibbonDiagram() = default;
  /// Validates all invariants; throws NonRealizableRotation, Disconnected or
  /// MultipleComponents.
  RibbonDiagram(std::vector<int> sigma, std::vector<int> alpha,
                std::vector<bool> over);

  int vertex_count() const { return static_cast<int>(sigma_.size()) / 4; }
  int edge_count() const { return 2 * vertex_count(); }
  int half_edge_count() const { return static_cast<int>(sigma_.size()); }

  int sigma(int h) const { return sigma_[h]; }
  int sigma_inv(int h) const { return sigma_inv_[h]; }
  int alpha(int h) const { return alpha_[h]; }
  int opposite(int h) const { return sigma_[sigma_[h]]; }
  int face_step(int h) const { return sigma_[alpha_[h]]; }
  static int vertex_of(int h) { return h / 4; }
  bool is_over(int h) const { return over_[h]; }

  /// True when half-edge h points into its vertex along the knot orientation.
  bool is_incoming(int h) const { return incoming_[h]; }
  /// +1 when the under-strand direction is the over-strand direction turned
  /// counterclockwise, -1 otherwise.
  int sign(int v) const;

  /// An edge is alternating when exactly one of its ends is an over end.
  bool edge_alternating(int h) const { return over_[h] != over_[alpha_[h]]; }
  bool is_alternating() const;

  const std::vector<int>& sigma_perm() const { return sigma_; }
  const std::vector<int>& alpha_perm() const { return alpha_; }
  const std::vector<bool>& over_flags() const { return over_; }

  /// Face index of each half-edge; faces are numbered by their smallest
  /// half-edge.
  const std::vector<int>& face_of() const { return face_of_; }
  int face_count() const { return face_count_; }
  /// Boundary walk of a face, starting at its smallest half-edge.
  std::vector<int> face_walk(int face) const;

  int euler_characteristic() const {
    return vertex_count() - edge_count() + face_count_;
  }
  int genus() const { return (2 - euler_characteristic()) / 2; }

  bool operator==(const RibbonDiagram& o) const {
    return sigma_ == o.sigma_ && alpha_ == o.alpha_ && over_ == o.over_;
  }

 private:
  std::vector<int> sigma_;
  std::vector<int> sigma_inv_;
  std::vector<int> alpha_;
  std::vector<bool> over_;
  std::vector<bool> incoming_;
  std::vector<int> face_of_;
  int face_count_ = 0;
};

/// Rotation at each crossing follows the PD tuple order. Vertices listed in
/// `reversed` get the mirrored rotation (same over/under data).
RibbonDiagram to_ribbon(const PlanarDiagramCode& code,
                        std::span<const int> reversed = {});
/// Rotation at each crossing follows from its sign and passages.
RibbonDiagram to_ribbon(const SignedGaussCode& code,
                        std::span<const int> reversed = {});

/// Region of the bare ribbon surface (always a disc).
struct Face {
  int id = 0;
  std::vector<int> walk;
};
std::vector<Face> trace_faces(const RibbonDiagram& d);

/// Gauss code read along the knot from half-edge 0, canonically labelled.
SignedGaussCode to_gauss(const RibbonDiagram& d);
/// PD code for a planar ribbon; throws PreconditionViolated otherwise.
PlanarDiagramCode to_pd(const RibbonDiagram& d);

// ---------------------------------------------------------------------------
// Local edits. Each returns a new diagram; vertex ids of the input are kept
// and new vertices are appended unless stated otherwise.

/// Reverse the rotation at v and exchange its over and under strands: the
/// same crossing seen from the other side of the surface.
RibbonDiagram flip_vertex(const RibbonDiagram& d, int v);
/// Exchange over and under at v, keeping the rotation.
RibbonDiagram switch_vertex(const RibbonDiagram& d, int v);
/// Reverse the rotation at v, keeping over/under.
RibbonDiagram reverse_rotation(const RibbonDiagram& d, int v);

struct Insertion {
  RibbonDiagram diagram;
  std::vector<int> vertices;  ///< ids of the new crossings
};

/// Pinch the edges at half-edges p and q into a new crossing (the inverse of
/// a smoothing), keeping the genus. Throws PreconditionViolated when every
/// placement changes the genus or splits the knot. `p_over` selects which
/// strand through the new crossing contains p.
Insertion insert_crossing(const RibbonDiagram& d, int p, int q, bool p_over);

/// Twist the edges at p and q around each other inside a face they share:
/// both strands pass straight through a chain of new crossings, consecutive
/// ones bounding bigons. p_over[i] says whether p's strand is over at the
/// i-th crossing counted from p. Two equal flags give a Reidemeister II
/// pair; alternating flags give full twists. Needs at least two crossings.
Insertion insert_twist(const RibbonDiagram& d, int p, int q, const std::vector<bool>& p_over);

/// Cancel a Reidemeister II bigon given one half-edge of its boundary walk.
/// Surviving vertices are renumbered in increasing order; `kept` receives
/// the old id of each new vertex.
RibbonDiagram cancel_r2(const RibbonDiagram& d, int bigon_half_edge,
                        std::vector<int>* kept = nullptr);

/// Cancel Reidemeister II bigons (lowest face first) until none is left or
/// the next cancellation would leave no crossing.
RibbonDiagram reduce_r2(const RibbonDiagram& d);

/// A face with two corners whose edges are not alternating.
bool is_r2_bigon(const RibbonDiagram& d, int face);

/// Orientation-preserving isomorphism of rotation systems with over/under.
bool isomorphic(const RibbonDiagram& a, const RibbonDiagram& b);

}  // namespace knotsurf
