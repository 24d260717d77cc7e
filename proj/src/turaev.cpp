#include "knotsurf/turaev.hpp"

#include "knotsurf/generate.hpp"
#include "knotsurf/torus_curves.hpp"

#include <numeric>
#include <queue>

namespace knotsurf {

int smooth(const RibbonDiagram& d, const std::vector<Smoothing>& choice) {
  const int n = d.half_edge_count();
  if (static_cast<int>(choice.size()) != d.vertex_count()) {
    throw Error(ErrorKind::PreconditionViolated, "state size differs from crossing count");
  }
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  };
  for (int h = 0; h < n; ++h) {
    if (h < d.alpha(h)) unite(h, d.alpha(h));
    if (!d.is_over(h)) continue;
    const bool a = choice[RibbonDiagram::vertex_of(h)] == Smoothing::A;
    unite(h, a ? d.sigma(h) : d.sigma_inv(h));
  }
  return components;
}

int smooth(const PlanarDiagramCode& code, const KauffmanState& s) {
  return smooth(to_ribbon(code), s.choice);
}

TuraevData turaev_data(const PlanarDiagramCode& code) {
  const auto d = to_ribbon(code);
  TuraevData t;
  t.crossings = d.vertex_count();
  t.s_a = smooth(d, std::vector<Smoothing>(t.crossings, Smoothing::A));
  t.s_b = smooth(d, std::vector<Smoothing>(t.crossings, Smoothing::B));
  t.genus = (2 + t.crossings - t.s_a - t.s_b) / 2;
  return t;
}

int turaev_genus(const PlanarDiagramCode& code) { return turaev_data(code).genus; }

EmbeddedDiagram build_turaev_embedding(const RibbonDiagram& d) {
  // flip[v] xor flip[w] must equal "edge vw is non-alternating".
  const int nv = d.vertex_count();
  std::vector<int> flip(nv, -1);
  std::queue<int> todo;
  flip[0] = 0;
  todo.push(0);
  while (!todo.empty()) {
    const int v = todo.front();
    todo.pop();
    for (int h = 4 * v; h < 4 * v + 4; ++h) {
      const int w = RibbonDiagram::vertex_of(d.alpha(h));
      const int want = flip[v] ^ (d.edge_alternating(h) ? 0 : 1);
      if (flip[w] < 0) {
        flip[w] = want;
        todo.push(w);
      } else if (flip[w] != want) {
        throw Error(ErrorKind::NonRealizableRotation,
                    "no set of crossing flips makes the diagram alternate");
      }
    }
  }
  RibbonDiagram out = d;
  for (int v = 0; v < nv; ++v) {
    if (flip[v]) out = flip_vertex(out, v);
  }
  return {std::move(out), {}, {}};
}

EmbeddedDiagram build_turaev_embedding(const PlanarDiagramCode& code) {
  return build_turaev_embedding(to_ribbon(code));
}

std::optional<EmbeddedDiagram> toroidally_alternating_witness(const PlanarDiagramCode& code) {
  const auto d = to_ribbon(code);
  if (d.is_alternating()) return EmbeddedDiagram{d, {}, {}};
  auto t = build_turaev_embedding(d);
  if (genus(t) <= 1 && r_complexity(t) >= 2) return t;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (!switch_vertex(d, v).is_alternating() || is_nugatory(d, v)) continue;
    try {
      return almost_alternating_to_torus(code, v + 1);
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

std::optional<EmbeddedDiagram> toroidally_alternating_witness(const SignedGaussCode& code) {
  const auto d = to_ribbon(code);
  if (d.genus() == 0) return toroidally_alternating_witness(to_pd(d));
  if (d.genus() == 1 && d.is_alternating()) {
    EmbeddedDiagram e{d, {}, {}};
    if (r_complexity(e) >= 2) return e;
  }
  return std::nullopt;
}

}  // namespace knotsurf
