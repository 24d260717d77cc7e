#pragma once

// Independent oracles shared by the unit tests and the acceptance suite.
// They work on raw codes or plain enumeration and never call the search
// code they check.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "knotsurf/generate.hpp"
#include "knotsurf/torus_curves.hpp"
#include "knotsurf/turaev.hpp"

namespace knotsurf::oracles {

// Smooth directly on PD arc labels. For X(a,b,c,d) the A-smoothing joins
// (b,c) and (d,a); the B-smoothing joins (a,b) and (c,d).
inline int pd_circles(const PlanarDiagramCode& code, const std::vector<Smoothing>& s) {
  std::map<int, int> parent;
  for (const auto& x : code.crossings)
    for (int a : x) parent[a] = a;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < code.crossings.size(); ++i) {
    const auto& x = code.crossings[i];
    if (s[i] == Smoothing::A) {
      parent[find(x[1])] = find(x[2]);
      parent[find(x[3])] = find(x[0]);
    } else {
      parent[find(x[0])] = find(x[1]);
      parent[find(x[2])] = find(x[3]);
    }
  }
  int roots = 0;
  for (const auto& [a, p] : parent) roots += find(a) == a;
  return roots;
}

inline std::vector<Smoothing> state_of(long mask, int c) {
  std::vector<Smoothing> s(c);
  for (int i = 0; i < c; ++i) s[i] = (mask >> i) & 1 ? Smoothing::B : Smoothing::A;
  return s;
}

struct Walk {
  int weight = 0;
  std::vector<int> nodes;
};

// Enumerate closed dual walks by depth-first search up to max_links links
// and keep the lightest one in class cls (fewest links, then the smallest
// node sequence).
inline std::optional<Walk> brute_force_cycle(const DualGraph& g, const CurveClass& cls,
                                             int max_links) {
  std::optional<Walk> best;
  std::vector<int> nodes;
  int span = 0;
  for (const auto& l : g.links) span = std::max({span, std::abs(l.label.p), std::abs(l.label.q)});
  std::function<void(int, int, int, int, int, int)> dfs = [&](int start, int at, int w, int p,
                                                              int q, int left) {
    if (!nodes.empty() && at == start && p == cls.p && q == cls.q) {
      const Walk cand{w, nodes};
      if (!best || std::make_tuple(cand.weight, cand.nodes.size(), cand.nodes) <
                       std::make_tuple(best->weight, best->nodes.size(), best->nodes)) {
        best = cand;
      }
    }
    if (left == 0) return;
    if (best && w > best->weight) return;
    // The class still missing must be reachable in the links left.
    if (std::abs(cls.p - p) > left * span || std::abs(cls.q - q) > left * span) return;
    for (const auto& l : g.links) {
      for (int dir : {1, -1}) {
        const int from = dir > 0 ? l.from : l.to;
        const int to = dir > 0 ? l.to : l.from;
        if (from != at) continue;
        nodes.push_back(at);
        dfs(start, to, w + l.weight, p + dir * l.label.p, q + dir * l.label.q, left - 1);
        nodes.pop_back();
      }
    }
  };
  for (int s = 0; s < g.node_count; ++s) dfs(s, s, 0, 0, 0, max_links);
  return best;
}

inline RibbonDiagram random_torus_diagram(Rng& rng, int n, bool alternating) {
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto r = random_surface_diagram(rng, n, alternating);
    if (r.genus() == 1) return r;
  }
  throw std::runtime_error("no genus-one diagram with " + std::to_string(n) + " crossings");
}

}  // namespace knotsurf::oracles
