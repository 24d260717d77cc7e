#include "knotsurf/generate.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace knotsurf {

RibbonDiagram random_surface_diagram(Rng& rng, int crossings, bool alternating) {
  const int m = 2 * crossings;
  std::vector<int> slot_label(m);
  if (alternating) {
    std::vector<int> odd(crossings);
    std::iota(odd.begin(), odd.end(), 0);
    std::shuffle(odd.begin(), odd.end(), rng);
    for (int k = 0; k < crossings; ++k) {
      slot_label[2 * k] = k + 1;
      slot_label[2 * odd[k] + 1] = k + 1;
    }
  } else {
    for (int i = 0; i < m; ++i) slot_label[i] = i / 2 + 1;
    std::shuffle(slot_label.begin(), slot_label.end(), rng);
  }
  std::bernoulli_distribution coin(0.5);
  std::vector<int> sign(crossings + 1);
  std::vector<bool> first_over(crossings + 1);
  for (int k = 1; k <= crossings; ++k) {
    sign[k] = coin(rng) ? 1 : -1;
    first_over[k] = coin(rng);
  }
  SignedGaussCode code;
  std::vector<bool> seen(crossings + 1, false);
  for (int i = 0; i < m; ++i) {
    const int k = slot_label[i];
    bool over = alternating ? (i % 2 == 0) : (seen[k] ? !first_over[k] : first_over[k]);
    seen[k] = true;
    code.entries.push_back({k, over ? Passage::Over : Passage::Under, sign[k]});
  }
  return to_ribbon(code);
}

RibbonDiagram make_alternating(const RibbonDiagram& d) {
  std::vector<bool> over(d.half_edge_count());
  std::vector<int> state(d.vertex_count(), -1);
  int cur = 0;
  bool passage_over = true;
  do {
    const int v = RibbonDiagram::vertex_of(cur);
    const int s = passage_over ? 1 : 0;
    if (state[v] == s) {
      throw Error(ErrorKind::PreconditionViolated,
                  "crossing visited twice at the same parity");
    }
    state[v] = s;
    over[cur] = over[d.opposite(cur)] = passage_over;
    over[d.sigma(cur)] = over[d.sigma_inv(cur)] = !passage_over;
    cur = d.alpha(d.opposite(cur));
    passage_over = !passage_over;
  } while (cur != 0);
  return RibbonDiagram(d.sigma_perm(), d.alpha_perm(), std::move(over));
}

RibbonDiagram random_planar_diagram(Rng& rng, int crossings, bool alternating) {
  if (crossings < 1) {
    throw Error(ErrorKind::PreconditionViolated, "need at least one crossing");
  }
  // Start from one or two kinks, then grow by pinches and finger moves.
  RibbonDiagram d = to_ribbon(parse_gauss(crossings % 2 ? "O1+ U1+" : "O1+ U1+ O2+ U2+"));
  std::bernoulli_distribution coin(0.5);
  while (d.vertex_count() < crossings) {
    const int face = std::uniform_int_distribution<int>(0, d.face_count() - 1)(rng);
    const auto walk = d.face_walk(face);
    if (walk.size() < 2) continue;
    std::uniform_int_distribution<int> pick(0, static_cast<int>(walk.size()) - 1);
    const int p = walk[pick(rng)];
    const int q = walk[pick(rng)];
    if (p == q || d.alpha(p) == q) continue;
    const int room = crossings - d.vertex_count();
    try {
      if (room >= 2 && coin(rng)) {
        d = insert_twist(d, p, q, {coin(rng), coin(rng)}).diagram;
      } else if (room >= 2) {
        // Two pinches keep the parity; both must succeed.
        auto once = insert_crossing(d, p, q, coin(rng)).diagram;
        const int f = std::uniform_int_distribution<int>(0, once.face_count() - 1)(rng);
        const auto w = once.face_walk(f);
        if (w.size() < 2) continue;
        std::uniform_int_distribution<int> pk(0, static_cast<int>(w.size()) - 1);
        const int a = w[pk(rng)], b = w[pk(rng)];
        if (a == b || once.alpha(a) == b) continue;
        d = insert_crossing(once, a, b, coin(rng)).diagram;
      }
    } catch (const Error&) {
    }
  }
  if (alternating) return make_alternating(d);
  auto over = d.over_flags();
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (!coin(rng)) continue;
    for (int h = 4 * v; h < 4 * v + 4; ++h) over[h] = !over[h];
  }
  return RibbonDiagram(d.sigma_perm(), d.alpha_perm(), std::move(over));
}

bool is_nugatory(const RibbonDiagram& d, int v) {
  const auto& face = d.face_of();
  const int h = 4 * v;
  const int k = d.sigma(h);
  return face[h] == face[d.opposite(h)] || face[k] == face[d.opposite(k)];
}

bool is_reduced(const RibbonDiagram& d) {
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (is_nugatory(d, v)) return false;
  }
  return true;
}

PlanarDiagramCode braid_closure(int strands, const std::vector<int>& word) {
  // Strands run upward; an arc label is created on each crossing exit and
  // the top labels are identified with the bottom ones at the end.
  std::vector<int> at(strands);
  std::iota(at.begin(), at.end(), 1);
  int next = strands + 1;
  PlanarDiagramCode code;
  for (int g : word) {
    const int i = std::abs(g) - 1;
    if (g == 0 || i + 1 >= strands) {
      throw Error(ErrorKind::PreconditionViolated, "braid generator out of range");
    }
    const int a = at[i], b = at[i + 1];
    const int c = next++, e = next++;
    // Bottom-left a, bottom-right b, top-left c, top-right e.
    if (g > 0) {
      code.crossings.push_back({b, e, c, a});
    } else {
      code.crossings.push_back({a, b, e, c});
    }
    at[i] = c;
    at[i + 1] = e;
  }
  std::vector<int> alias(next);
  std::iota(alias.begin(), alias.end(), 0);
  for (int i = 0; i < strands; ++i) {
    if (at[i] == i + 1) {
      throw Error(ErrorKind::PreconditionViolated, "a braid strand is never crossed");
    }
    alias[at[i]] = i + 1;
  }
  std::vector<int> compact(next, 0);
  for (auto& x : code.crossings)
    for (int& arc : x) compact[arc = alias[arc]] = 1;
  std::partial_sum(compact.begin(), compact.end(), compact.begin());
  for (auto& x : code.crossings)
    for (int& arc : x) arc = compact[arc];
  try {
    return to_pd(to_ribbon(code));
  } catch (const Error& e) {
    throw Error(ErrorKind::PreconditionViolated,
                std::string("braid closure is not a knot: ") + e.what());
  }
}

}  // namespace knotsurf
