#include <algorithm>
#include <cstdlib>

#include "knotsurf/generate.hpp"
#include "knotsurf/torus_curves.hpp"

namespace knotsurf {

namespace {

// Two-cornered face whose corners are at vertices u and v.
int bigon_between(const RibbonDiagram& d, int u, int v) {
  for (int f = 0; f < d.face_count(); ++f) {
    const auto walk = d.face_walk(f);
    if (walk.size() != 2) continue;
    const int a = RibbonDiagram::vertex_of(walk[0]);
    const int b = RibbonDiagram::vertex_of(walk[1]);
    if ((a == u && b == v) || (a == v && b == u)) return f;
  }
  return -1;
}

int link_for_edge(const DualGraph& g, const RibbonDiagram& r, int h) {
  for (int i = 0; i < static_cast<int>(g.links.size()); ++i) {
    if (i == g.seam) continue;
    if (g.links[i].half_edge == h || g.links[i].half_edge == r.alpha(h)) return i;
  }
  return -1;
}

}  // namespace

EmbeddedDiagram almost_alternating_to_torus(const PlanarDiagramCode& code, int dealternator) {
  const auto d = to_ribbon(code);
  const int v = dealternator - 1;
  if (v < 0 || v >= d.vertex_count()) {
    throw Error(ErrorKind::NotAlmostAlternating,
                "no crossing " + std::to_string(dealternator));
  }
  if (d.is_alternating()) {
    throw Error(ErrorKind::NotAlmostAlternating, "the diagram is already alternating");
  }
  const auto alt = switch_vertex(d, v);
  if (!alt.is_alternating()) {
    throw Error(ErrorKind::NotAlmostAlternating,
                "changing crossing " + std::to_string(dealternator) +
                    " does not make the diagram alternate");
  }
  if (is_nugatory(d, v)) {
    throw Error(ErrorKind::NotAlmostAlternating,
                "crossing " + std::to_string(dealternator) + " is nugatory");
  }
  // The two outgoing ends at the changed crossing are adjacent; clasp them
  // right next to it so the chain stays alternating.
  int o1 = -1;
  for (int h = 4 * v; h < 4 * v + 4; ++h) {
    if (!alt.is_incoming(h) && !alt.is_incoming(alt.sigma(h))) o1 = h;
  }
  const int o2 = alt.sigma(o1);
  const bool o1_over = alt.is_over(o1);
  const auto ins = insert_twist(alt, o1, o2, {!o1_over, o1_over});
  const auto& r = ins.diagram;
  const int bigon = bigon_between(r, v, ins.vertices[0]);
  if (bigon < 0 || !r.is_alternating()) {
    throw Error(ErrorKind::PreconditionViolated, "clasp did not land next to the crossing");
  }
  const auto walk = r.face_walk(bigon);
  const int f1 = r.face_of()[r.alpha(walk[0])];
  const int f2 = r.face_of()[r.alpha(walk[1])];
  if (f1 == f2) {
    throw Error(ErrorKind::NotAlmostAlternating, "the faces beside the crossing coincide");
  }
  EmbeddedDiagram out{r, {Decoration::tube(f1, f2, -2)}, {}};

  // Meridian: through the bigon, out across one edge, back through the tube.
  const auto g = homology_labels(out);
  const int b_node = region_of_face(out)[bigon];
  std::vector<int> links, dirs;
  for (int k = 0; k < 2; ++k) {
    const int l = link_for_edge(g, r, walk[k]);
    const bool leaves_bigon = g.links[l].from == b_node;
    links.push_back(l);
    dirs.push_back((k == 0) == leaves_bigon ? 1 : -1);
  }
  CurveClass mu = walk_class(g, links, dirs);
  const CurveClass core = g.links[g.seam].label;
  if (intersection(core, mu) < 0) mu = {-mu.p, -mu.q};
  if (intersection(core, mu) != 1) {
    throw Error(ErrorKind::PreconditionViolated, "meridian does not meet the core once");
  }
  mu.bounds_disc = true;
  const CurveClass lambda{core.p + 2 * mu.p, core.q + 2 * mu.q, true};
  out.compressing = {mu, lambda};
  return out;
}

PlanarDiagramCode torus_to_almost_alternating(const EmbeddedDiagram& d) {
  if (d.is_cellular()) {
    throw Error(ErrorKind::PreconditionViolated, "diagram has no annular region");
  }
  const auto g = homology_labels(d);
  const auto check = meridian_bigon_check(d, g);
  if (!check.incident) {
    throw Error(ErrorKind::PreconditionViolated, "no compressing curve meets the diagram twice");
  }
  const auto& r = d.ribbon;
  const auto rof = region_of_face(d);
  const auto& cyc = *check.witness;
  std::vector<int> crossed;
  for (int l : cyc.links)
    if (l != g.seam) crossed.push_back(g.links[l].half_edge);
  // The meridian passes through one disc face bordered by both edges it
  // crosses; cut there.
  const auto regs = regions(d);
  int face = -1;
  for (int node : cyc.nodes) {
    for (int f = 0; f < r.face_count() && face < 0; ++f) {
      if (rof[f] == node && regs[node].kind == RegionKind::Disc) face = f;
    }
  }
  if (face < 0 || crossed.size() != 2) {
    throw Error(ErrorKind::PreconditionViolated, "meridian does not pass through a disc face");
  }
  auto on_face = [&](int h) { return r.face_of()[h] == face ? h : r.alpha(h); };
  const int p = on_face(crossed[0]);
  const int q = on_face(crossed[1]);
  const int framing = d.decorations[0].framing;
  if (framing == 0) return to_pd(r);

  // Put back 2|framing| crossings, against the alternating direction when
  // the framing is negative.
  std::vector<bool> p_over(2 * std::abs(framing));
  bool over = framing < 0 ? r.is_over(p) : !r.is_over(p);
  for (std::size_t i = 0; i < p_over.size(); ++i, over = !over) p_over[i] = over;
  const auto ins = insert_twist(r, p, q, p_over);
  RibbonDiagram cur = ins.diagram;
  std::vector<int> inserted = ins.vertices;
  // Cancel the Reidemeister II pairs the twists make, keeping one crossing.
  for (int round = 0; round + 1 < static_cast<int>(p_over.size()); ++round) {
    int chosen = -1;
    for (int f = 0; f < cur.face_count() && chosen < 0; ++f) {
      if (!is_r2_bigon(cur, f)) continue;
      const auto walk = cur.face_walk(f);
      for (int h : walk) {
        const int vtx = RibbonDiagram::vertex_of(h);
        if (std::find(inserted.begin(), inserted.end(), vtx) != inserted.end()) chosen = walk[0];
      }
    }
    if (chosen < 0) break;
    std::vector<int> kept;
    cur = cancel_r2(cur, chosen, &kept);
    std::vector<int> next;
    for (int i = 0; i < static_cast<int>(kept.size()); ++i) {
      if (std::find(inserted.begin(), inserted.end(), kept[i]) != inserted.end()) next.push_back(i);
    }
    inserted = std::move(next);
  }
  return to_pd(cur);
}

}  // namespace knotsurf
