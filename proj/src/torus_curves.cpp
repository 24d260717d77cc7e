#include "knotsurf/torus_curves.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <tuple>

namespace knotsurf {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

int det(const CurveClass& a, const CurveClass& b) { return a.p * b.q - a.q * b.p; }

// A planar ribbon carrying exactly one tube between two distinct faces.
bool single_tube_on_sphere(const EmbeddedDiagram& d) {
  return d.ribbon.genus() == 0 && d.decorations.size() == 1 &&
         d.decorations[0].kind == Decoration::Kind::Tube &&
         d.decorations[0].face != d.decorations[0].other_face;
}

// Combinatorial map of the cellular torus carrying the dual graph: the ribbon
// itself, or the ribbon with a seam edge cut across the annulus.
struct TorusMap {
  std::vector<int> sigma;
  std::vector<int> alpha;
  std::vector<int> vertex;  // vertex id per half-edge
  int vertex_count = 0;
  std::vector<int> node;    // dual node (region) on the face of each half-edge
  std::vector<int> link_of;  // link id per half-edge
};

TorusMap build_map(const EmbeddedDiagram& d, DualGraph& g) {
  validate(d);
  const auto& r = d.ribbon;
  const int n = r.half_edge_count();
  const bool cellular = d.is_cellular();
  if (!cellular && !single_tube_on_sphere(d)) {
    if (genus(d) != 1) throw Error(ErrorKind::NotGenusOne, "diagram is not on a torus");
    throw Error(ErrorKind::NotCellular,
                "only a single tube between two faces can be retracted");
  }
  if (cellular && r.genus() != 1) {
    throw Error(ErrorKind::NotGenusOne, "diagram is not on a torus");
  }
  const auto rof = region_of_face(d);
  TorusMap m;
  m.sigma = r.sigma_perm();
  m.alpha = r.alpha_perm();
  m.vertex.resize(n);
  for (int h = 0; h < n; ++h) m.vertex[h] = RibbonDiagram::vertex_of(h);
  m.vertex_count = r.vertex_count();
  m.node.resize(n);
  for (int h = 0; h < n; ++h) m.node[h] = rof[r.face_of()[h]];
  g.node_count = *std::max_element(rof.begin(), rof.end()) + 1;
  m.link_of.assign(n, -1);
  for (int h = 0; h < n; ++h) {
    if (h > r.alpha(h)) continue;
    DualLink l;
    l.from = m.node[h];
    l.to = m.node[r.alpha(h)];
    l.half_edge = h;
    l.weight = 1;
    m.link_of[h] = m.link_of[r.alpha(h)] = static_cast<int>(g.links.size());
    g.links.push_back(l);
  }
  if (!cellular) {
    // Cut the annulus open with an edge from a corner of one end face to a
    // corner of the other.
    const auto& tube = d.decorations[0];
    const int h1 = r.face_walk(tube.face).front();
    const int h2 = r.face_walk(tube.other_face).front();
    const int s1 = n, s2 = n + 1;
    m.sigma.resize(n + 2);
    m.alpha.resize(n + 2);
    for (auto [h, s] : {std::pair{h1, s1}, std::pair{h2, s2}}) {
      const int a = r.alpha(h);
      m.sigma[s] = m.sigma[a];
      m.sigma[a] = s;
      m.vertex.push_back(m.vertex[a]);
    }
    m.alpha[s1] = s2;
    m.alpha[s2] = s1;
    const int annulus = rof[tube.face];
    m.node.push_back(annulus);
    m.node.push_back(annulus);
    DualLink l;
    l.from = l.to = annulus;
    l.half_edge = s1;
    l.weight = 0;
    g.seam = static_cast<int>(g.links.size());
    m.link_of.push_back(g.seam);
    m.link_of.push_back(g.seam);
    g.links.push_back(l);
  }
  return m;
}

// Tree-cotree labels: intersection numbers with the two fundamental cycles
// of the edges left over by a dual spanning tree and a primal spanning tree.
void tree_cotree_labels(const TorusMap& m, DualGraph& g) {
  const int nl = static_cast<int>(g.links.size());
  std::vector<char> in_dual_tree(nl, 0), in_primal_tree(nl, 0);
  {
    std::vector<std::vector<int>> adj(g.node_count);
    for (int i = 0; i < nl; ++i) {
      adj[g.links[i].from].push_back(i);
      adj[g.links[i].to].push_back(i);
    }
    std::vector<char> seen(g.node_count, 0);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = 1;
    while (!todo.empty()) {
      const int u = todo.front();
      todo.pop();
      for (int i : adj[u]) {
        const int v = g.links[i].from == u ? g.links[i].to : g.links[i].from;
        if (seen[v]) continue;
        seen[v] = 1;
        in_dual_tree[i] = 1;
        todo.push(v);
      }
    }
  }
  // Primal tree over the remaining edges; parent half-edge points at the
  // child's end of the tree edge.
  std::vector<int> parent_half(m.vertex_count, -1), depth(m.vertex_count, -1);
  {
    std::vector<std::vector<int>> out(m.vertex_count);
    for (int h = 0; h < static_cast<int>(m.sigma.size()); ++h) {
      if (!in_dual_tree[m.link_of[h]]) out[m.vertex[h]].push_back(h);
    }
    std::queue<int> todo;
    todo.push(0);
    depth[0] = 0;
    while (!todo.empty()) {
      const int u = todo.front();
      todo.pop();
      for (int h : out[u]) {
        const int v = m.vertex[m.alpha[h]];
        if (depth[v] >= 0) continue;
        depth[v] = depth[u] + 1;
        parent_half[v] = m.alpha[h];
        in_primal_tree[m.link_of[h]] = 1;
        todo.push(v);
      }
    }
  }
  std::vector<int> leftover;
  for (int i = 0; i < nl; ++i) {
    if (!in_dual_tree[i] && !in_primal_tree[i]) leftover.push_back(i);
  }
  if (leftover.size() != 2) {
    throw Error(ErrorKind::NotGenusOne, "cut system does not have two generators");
  }
  // Sign of traversing half-edge h (from its vertex to the other end) relative
  // to the orientation of its link.
  auto link_sign = [&](int h) { return g.links[m.link_of[h]].half_edge == h ? 1 : -1; };
  for (int k = 0; k < 2; ++k) {
    std::vector<int> count(nl, 0);
    const int h = g.links[leftover[k]].half_edge;
    count[leftover[k]] += 1;
    // Walk the tree path from the far end of h back to its start.
    int a = m.vertex[m.alpha[h]];
    int b = m.vertex[h];
    std::vector<int> tail;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        const int ph = parent_half[a];  // at a, pointing to the parent
        count[m.link_of[ph]] += link_sign(ph);
        a = m.vertex[m.alpha[ph]];
      } else {
        const int ph = parent_half[b];
        tail.push_back(m.alpha[ph]);  // traversed parent -> b
        b = m.vertex[m.alpha[ph]];
      }
    }
    for (int t : tail) count[m.link_of[t]] += link_sign(t);
    for (int i = 0; i < nl; ++i) (k == 0 ? g.links[i].label.p : g.links[i].label.q) = count[i];
  }
}

int label_span(const DualGraph& g) {
  int s = 1;
  for (const auto& l : g.links) s = std::max({s, std::abs(l.label.p), std::abs(l.label.q)});
  return s;
}

// State space (node, accumulated class) with coordinates in [-box, box].
struct StateSpace {
  const DualGraph& g;
  int box;
  int side;
  std::vector<std::vector<std::pair<int, int>>> adj;  // node -> (link, direction)

  StateSpace(const DualGraph& graph, int b) : g(graph), box(b), side(2 * b + 1) {
    adj.resize(g.node_count);
    for (int i = 0; i < static_cast<int>(g.links.size()); ++i) {
      adj[g.links[i].from].push_back({i, 1});
      adj[g.links[i].to].push_back({i, -1});
    }
  }
  int size() const { return g.node_count * side * side; }
  int index(int node, int p, int q) const {
    if (std::abs(p) > box || std::abs(q) > box) return -1;
    return (node * side + (p + box)) * side + (q + box);
  }
  int node_of(int s) const { return s / (side * side); }
  int p_of(int s) const { return (s / side) % side - box; }
  int q_of(int s) const { return s % side - box; }
  // Target state of following link (i, dir) from state s, or -1.
  int step(int s, int i, int dir) const {
    const auto& l = g.links[i];
    const int to = dir > 0 ? l.to : l.from;
    return index(to, p_of(s) + dir * l.label.p, q_of(s) + dir * l.label.q);
  }
};

// Weights of walks from (start, 0) to every state, 0-1 BFS. With a target,
// stops once it is settled or nothing lighter than `cutoff` remains.
std::vector<int> zero_one_bfs(const StateSpace& sp, int start, int target = -1,
                              int cutoff = kInf) {
  std::vector<int> dist(sp.size(), kInf);
  std::vector<char> done(sp.size(), 0);
  std::deque<int> dq;
  const int s0 = sp.index(start, 0, 0);
  dist[s0] = 0;
  dq.push_back(s0);
  while (!dq.empty()) {
    const int s = dq.front();
    dq.pop_front();
    if (done[s]) continue;
    done[s] = 1;
    if (s == target || dist[s] >= cutoff) break;
    for (auto [i, dir] : sp.adj[sp.node_of(s)]) {
      const int t = sp.step(s, i, dir);
      if (t < 0) continue;
      const int w = sp.g.links[i].weight;
      if (dist[s] + w < dist[t]) {
        dist[t] = dist[s] + w;
        if (w == 0) dq.push_front(t); else dq.push_back(t);
      }
    }
  }
  return dist;
}

using Cost = std::pair<int, int>;  // weight, links

std::vector<Cost> dijkstra(const StateSpace& sp, int source, int target = -1,
                           Cost cutoff = {kInf, kInf}) {
  std::vector<Cost> dist(sp.size(), {kInf, kInf});
  using Item = std::pair<Cost, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[source] = {0, 0};
  pq.push({{0, 0}, source});
  while (!pq.empty()) {
    const auto [c, s] = pq.top();
    pq.pop();
    if (c != dist[s]) continue;
    if (s == target || !(c < cutoff)) break;
    for (auto [i, dir] : sp.adj[sp.node_of(s)]) {
      const int t = sp.step(s, i, dir);
      if (t < 0) continue;
      const Cost nc{c.first + sp.g.links[i].weight, c.second + 1};
      if (nc < dist[t]) {
        dist[t] = nc;
        pq.push({nc, t});
      }
    }
  }
  return dist;
}

// Lightest closed walk class accepted by `pred`, ties broken by |p|+|q| and
// then lexicographically. Each search stops once it passes the best weight.
template <class Pred>
std::optional<CurveClass> lightest_class(const StateSpace& sp, Pred pred) {
  using Key = std::tuple<int, int, int, int>;
  std::optional<Key> best;
  std::vector<int> dist(sp.size());
  std::vector<char> done(sp.size());
  for (int start = 0; start < sp.g.node_count; ++start) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(done.begin(), done.end(), 0);
    std::deque<int> dq;
    const int s0 = sp.index(start, 0, 0);
    dist[s0] = 0;
    dq.push_back(s0);
    while (!dq.empty()) {
      const int s = dq.front();
      dq.pop_front();
      if (done[s]) continue;
      done[s] = 1;
      if (best && dist[s] > std::get<0>(*best)) break;
      const int p = sp.p_of(s), q = sp.q_of(s);
      if (sp.node_of(s) == start && pred(CurveClass{p, q})) {
        const Key k{dist[s], std::abs(p) + std::abs(q), p, q};
        if (!best || k < *best) best = k;
      }
      for (auto [i, dir] : sp.adj[sp.node_of(s)]) {
        const int t = sp.step(s, i, dir);
        if (t < 0) continue;
        const int w = sp.g.links[i].weight;
        if (dist[s] + w < dist[t]) {
          dist[t] = dist[s] + w;
          if (w == 0) dq.push_front(t); else dq.push_back(t);
        }
      }
    }
  }
  if (!best) return std::nullopt;
  return CurveClass{std::get<2>(*best), std::get<3>(*best)};
}

void reduce_basis(DualGraph& g) {
  const int box = 2 * g.node_count + 2 * label_span(g);
  StateSpace sp(g, box);
  const auto e1 = lightest_class(sp, [](const CurveClass& c) {
    return (c.p > 0 || (c.p == 0 && c.q > 0)) && std::gcd(c.p, c.q) == 1;
  });
  if (!e1) throw Error(ErrorKind::ClassUnreachable, "no essential dual cycle found");
  const auto e2 = lightest_class(sp, [&](const CurveClass& c) { return det(*e1, c) == 1; });
  if (!e2) throw Error(ErrorKind::ClassUnreachable, "no dual cycle completes the basis");
  // x = a e1 + b e2 with det(e1, e2) = 1.
  for (auto& l : g.links) {
    const CurveClass x = l.label;
    l.label = {det(x, *e2), det(*e1, x)};
  }
}

}  // namespace

DualGraph homology_labels(const EmbeddedDiagram& d) {
  DualGraph g;
  const auto m = build_map(d, g);
  tree_cotree_labels(m, g);
  reduce_basis(g);
  return g;
}

CurveClass walk_class(const DualGraph& g, const std::vector<int>& links,
                      const std::vector<int>& directions) {
  CurveClass c;
  for (std::size_t i = 0; i < links.size(); ++i) {
    c.p += directions[i] * g.links[links[i]].label.p;
    c.q += directions[i] * g.links[links[i]].label.q;
  }
  return c;
}

namespace {

int search_box(const DualGraph& g, const CurveClass& c) {
  if (c.p == 0 && c.q == 0) {
    throw Error(ErrorKind::PreconditionViolated, "class (0,0) is not essential");
  }
  return std::max(2, (std::abs(c.p) + std::abs(c.q)) * g.node_count) + 2 * label_span(g);
}

}  // namespace

int min_intersection_in_class(const DualGraph& g, const CurveClass& cls) {
  StateSpace sp(g, search_box(g, cls));
  int best = kInf;
  for (int s = 0; s < g.node_count; ++s) {
    const int t = sp.index(s, cls.p, cls.q);
    best = std::min(best, zero_one_bfs(sp, s, t, best)[t]);
  }
  if (best >= kInf) {
    throw Error(ErrorKind::ClassUnreachable,
                "no dual cycle in class (" + std::to_string(cls.p) + "," +
                    std::to_string(cls.q) + ")");
  }
  return best;
}

DualCycle shortest_cycle_in_class(const DualGraph& g, const CurveClass& cls) {
  StateSpace sp(g, search_box(g, cls));
  Cost best{kInf, kInf};
  int start = -1;
  for (int s = 0; s < g.node_count; ++s) {
    const int t = sp.index(s, cls.p, cls.q);
    const Cost c = dijkstra(sp, sp.index(s, 0, 0), t, best)[t];
    if (c < best) {
      best = c;
      start = s;
    }
  }
  if (start < 0) {
    throw Error(ErrorKind::ClassUnreachable,
                "no dual cycle in class (" + std::to_string(cls.p) + "," +
                    std::to_string(cls.q) + ")");
  }
  // Remaining cost to the target; the state graph is symmetric, so distances
  // from the target are distances to it.
  const int target = sp.index(start, cls.p, cls.q);
  const auto togo = dijkstra(sp, target, -1, {best.first, best.second + 1});
  struct Back {
    int prev, link, dir;
  };
  std::vector<int> frontier{sp.index(start, 0, 0)};
  std::vector<std::pair<int, Back>> trail;  // state -> how it was reached
  auto parent_of = [&](int s) -> const Back* {
    for (auto it = trail.rbegin(); it != trail.rend(); ++it)
      if (it->first == s) return &it->second;
    return nullptr;
  };
  while (std::find(frontier.begin(), frontier.end(), target) == frontier.end()) {
    int best_node = kInf;
    std::vector<std::pair<int, Back>> moves;
    for (int s : frontier) {
      for (auto [i, dir] : sp.adj[sp.node_of(s)]) {
        const int t = sp.step(s, i, dir);
        if (t < 0 || togo[t].first >= kInf) continue;
        const Cost via{togo[t].first + g.links[i].weight, togo[t].second + 1};
        if (via != togo[s]) continue;
        const int node = sp.node_of(t);
        if (node < best_node) {
          best_node = node;
          moves.clear();
        }
        if (node == best_node) moves.push_back({t, {s, i, dir}});
      }
    }
    std::vector<int> next;
    for (const auto& [t, b] : moves) {
      if (std::find(next.begin(), next.end(), t) != next.end()) continue;
      next.push_back(t);
      trail.push_back({t, b});
    }
    frontier = std::move(next);
  }
  DualCycle cyc;
  int s = target;
  while (const Back* b = parent_of(s)) {
    cyc.links.push_back(b->link);
    cyc.directions.push_back(b->dir);
    s = b->prev;
  }
  std::reverse(cyc.links.begin(), cyc.links.end());
  std::reverse(cyc.directions.begin(), cyc.directions.end());
  int node = start;
  for (std::size_t i = 0; i < cyc.links.size(); ++i) {
    cyc.nodes.push_back(node);
    const auto& l = g.links[cyc.links[i]];
    node = cyc.directions[i] > 0 ? l.to : l.from;
    cyc.weight += l.weight;
  }
  cyc.cls = walk_class(g, cyc.links, cyc.directions);
  return cyc;
}

std::vector<CurveClass> resolve_compressing(const EmbeddedDiagram& d,
                                            const std::vector<CurveClass>& explicit_classes) {
  if (!explicit_classes.empty()) return explicit_classes;
  if (!d.compressing.empty()) return d.compressing;
  return {CurveClass{1, 0, true}, CurveClass{0, 1, true}};
}

RComplexity r_report(const EmbeddedDiagram& d, const std::vector<CurveClass>& compressing) {
  RComplexity out;
  out.classes = resolve_compressing(d, compressing);
  if (genus(d) != 1) throw Error(ErrorKind::NotGenusOne, "diagram is not on a torus");
  if (!d.is_cellular() && !single_tube_on_sphere(d) && d.ribbon.genus() == 0) {
    // A handle or a tube with both ends on one face: the diagram sits in a
    // disc, which some compressing disc misses.
    out.r = 0;
    out.per_class.assign(out.classes.size(), 0);
    return out;
  }
  const auto g = homology_labels(d);
  out.r = kInf;
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    const int w = min_intersection_in_class(g, out.classes[i]);
    out.per_class.push_back(w);
    if (w < out.r) {
      out.r = w;
      out.witness = shortest_cycle_in_class(g, out.classes[i]);
    }
  }
  return out;
}

int r_complexity(const EmbeddedDiagram& d, const std::vector<CurveClass>& compressing) {
  return r_report(d, compressing).r;
}

RegionCensus region_census(const EmbeddedDiagram& d, int r) {
  if (r < 2) {
    throw Error(ErrorKind::PreconditionViolated, "region census needs r >= 2");
  }
  RegionCensus c;
  for (const auto& reg : regions(d)) {
    switch (reg.kind) {
      case RegionKind::Disc: ++c.discs; break;
      case RegionKind::Annulus: ++c.annuli; break;
      case RegionKind::Other:
        throw Error(ErrorKind::LemmaViolation,
                    "region " + std::to_string(reg.id) + " is neither a disc nor an annulus");
    }
  }
  if (c.annuli > 1) {
    throw Error(ErrorKind::LemmaViolation,
                std::to_string(c.annuli) + " annular regions with r >= 2");
  }
  return c;
}

std::optional<CurveClass> annular_core(const EmbeddedDiagram& d) {
  if (!single_tube_on_sphere(d)) return std::nullopt;
  const auto g = homology_labels(d);
  return g.links[g.seam].label;
}

BigonCheck meridian_bigon_check(const EmbeddedDiagram& d, const DualGraph& g,
                                const std::vector<CurveClass>& compressing) {
  if (!single_tube_on_sphere(d) || g.seam < 0) {
    throw Error(ErrorKind::PreconditionViolated, "diagram has no annular region");
  }
  const CurveClass core = g.links[g.seam].label;
  BigonCheck out;
  for (const auto& c : resolve_compressing(d, compressing)) {
    if (c == core || (c.p == -core.p && c.q == -core.q)) out.collapses = true;
    if (out.incident || std::abs(det(c, core)) != 1) continue;
    if (min_intersection_in_class(g, c) == 2) {
      out.incident = true;
      out.witness = shortest_cycle_in_class(g, c);
    }
  }
  return out;
}

BigonCheck meridian_bigon_check(const EmbeddedDiagram& d,
                                const std::vector<CurveClass>& compressing) {
  if (!single_tube_on_sphere(d)) {
    throw Error(ErrorKind::PreconditionViolated, "diagram has no annular region");
  }
  return meridian_bigon_check(d, homology_labels(d), compressing);
}

}  // namespace knotsurf
