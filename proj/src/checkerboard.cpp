#include "knotsurf/checkerboard.hpp"

#include <deque>

namespace knotsurf {

std::optional<CheckerboardData> checkerboard_coloring(const EmbeddedDiagram& d) {
  const auto rof = region_of_face(d);
  const auto rs = regions(d);
  const auto& face = d.ribbon.face_of();
  const int nr = static_cast<int>(rs.size());

  std::vector<std::vector<int>> adj(nr);
  for (int h = 0; h < d.ribbon.half_edge_count(); ++h) {
    adj[rof[face[h]]].push_back(rof[face[d.ribbon.alpha(h)]]);
  }
  std::vector<int> color(nr, -1);
  const int start = rof[face[0]];
  color[start] = 0;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    const int r = queue.front();
    queue.pop_front();
    for (int s : adj[r]) {
      if (color[s] == -1) {
        color[s] = 1 - color[r];
        queue.push_back(s);
      } else if (color[s] == color[r]) {
        return std::nullopt;
      }
    }
  }

  CheckerboardData c;
  const int crossings = d.ribbon.vertex_count();
  c.coloring.resize(nr);
  for (int r = 0; r < nr; ++r) {
    c.coloring[r] = color[r] == 0 ? Color::Shaded : Color::Unshaded;
    (color[r] == 0 ? c.chi_shaded : c.chi_unshaded) += rs[r].euler_char;
  }
  // Each crossing contributes one twisted band to each surface.
  c.chi_shaded -= crossings;
  c.chi_unshaded -= crossings;
  c.boundary_intersections = 2 * crossings;
  return c;
}

CheckerboardData swap_colors(const CheckerboardData& c) {
  CheckerboardData s = c;
  for (auto& col : s.coloring) {
    col = col == Color::Shaded ? Color::Unshaded : Color::Shaded;
  }
  std::swap(s.chi_shaded, s.chi_unshaded);
  return s;
}

int howie_invariant(const EmbeddedDiagram& d, const CheckerboardData& c) {
  const int value = c.chi_shaded + c.chi_unshaded + c.boundary_intersections / 2;
  const int chi = euler_characteristic(d);
  if (value != chi) {
    throw Error(ErrorKind::IdentityViolation,
                "chi(S) + chi(S') + i/2 = " + std::to_string(value) +
                    " but the ambient surface has chi = " + std::to_string(chi));
  }
  return value;
}

FreeSurfaceClassification classify_free_surface(const EmbeddedDiagram& d,
                                                const CheckerboardData& c,
                                                bool torus_unknotted, int r) {
  if (r < 2) {
    throw Error(ErrorKind::PreconditionViolated,
                "classification needs r >= 2, got " + std::to_string(r));
  }
  if (genus(d) != 1) {
    throw Error(ErrorKind::PreconditionViolated, "diagram is not on a torus");
  }
  if (!torus_unknotted) return {Freeness::NotFree, Freeness::NotFree};
  bool shaded_all_discs = true, unshaded_all_discs = true;
  const auto rs = regions(d);
  for (const auto& reg : rs) {
    if (reg.kind == RegionKind::Disc) continue;
    (c.coloring[reg.id] == Color::Shaded ? shaded_all_discs : unshaded_all_discs) =
        false;
  }
  return {shaded_all_discs ? Freeness::Free : Freeness::Unknown,
          unshaded_all_discs ? Freeness::Free : Freeness::Unknown};
}

std::vector<Region> find_diagrammatic_bigons(const EmbeddedDiagram& d) {
  std::vector<Region> out;
  for (const auto& reg : regions(d)) {
    if (reg.kind != RegionKind::Disc) continue;
    if (is_r2_bigon(d.ribbon, reg.faces.front())) out.push_back(reg);
  }
  return out;
}

}  // namespace knotsurf
