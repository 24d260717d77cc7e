#include "knotsurf/ribbon.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>

namespace knotsurf {

namespace {

std::vector<int> invert(const std::vector<int>& perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

RibbonDiagram::RibbonDiagram(std::vector<int> sigma, std::vector<int> alpha,
                             std::vector<bool> over)
    : sigma_(std::move(sigma)), alpha_(std::move(alpha)), over_(std::move(over)) {
  const int n = static_cast<int>(sigma_.size());
  if (n == 0 || n % 4 != 0 || static_cast<int>(alpha_.size()) != n ||
      static_cast<int>(over_.size()) != n) {
    throw Error(ErrorKind::NonRealizableRotation,
                "half-edge arrays must have equal, non-zero size divisible by 4");
  }
  for (int v = 0; v < n / 4; ++v) {
    int h = 4 * v;
    int steps = 0;
    do {
      if (sigma_[h] < 0 || sigma_[h] >= n || sigma_[h] / 4 != v) {
        throw Error(ErrorKind::NonRealizableRotation,
                    "rotation leaves vertex " + std::to_string(v));
      }
      h = sigma_[h];
      ++steps;
    } while (h != 4 * v && steps <= 4);
    if (steps != 4) {
      throw Error(ErrorKind::NonRealizableRotation,
                  "vertex " + std::to_string(v) + " is not a 4-cycle");
    }
  }
  for (int h = 0; h < n; ++h) {
    const int a = alpha_[h];
    if (a < 0 || a >= n || a == h || alpha_[a] != h) {
      throw Error(ErrorKind::NonRealizableRotation,
                  "edge pairing is not a fixed-point-free involution");
    }
  }
  for (int h = 0; h < n; ++h) {
    if (over_[h] != over_[opposite(h)] || over_[h] == over_[sigma_[h]]) {
      throw Error(ErrorKind::NonRealizableRotation,
                  "over/under marking must pick one opposite pair per vertex");
    }
  }
  sigma_inv_ = invert(sigma_);

  // Follow the knot from half-edge 0.
  incoming_.assign(n, false);
  std::vector<bool> seen(n, false);
  int visited = 0;
  int cur = 0;
  do {
    if (seen[cur]) {
      throw Error(ErrorKind::NonRealizableRotation, "strand revisits a half-edge");
    }
    seen[cur] = true;
    incoming_[cur] = true;
    const int out = opposite(cur);
    seen[out] = true;
    visited += 2;
    cur = alpha_[out];
  } while (cur != 0);
  if (visited != n) {
    // Distinguish a disconnected graph from a link diagram.
    std::vector<int> parent(n / 4);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int h = 0; h < n; ++h) parent[find(h / 4)] = find(alpha_[h] / 4);
    for (int v = 0; v < n / 4; ++v) {
      if (find(v) != find(0)) {
        throw Error(ErrorKind::Disconnected, "diagram graph is disconnected");
      }
    }
    throw Error(ErrorKind::MultipleComponents,
                "diagram has more than one component");
  }

  face_of_.assign(n, -1);
  for (int h = 0; h < n; ++h) {
    if (face_of_[h] != -1) continue;
    int x = h;
    do {
      face_of_[x] = face_count_;
      x = face_step(x);
    } while (x != h);
    ++face_count_;
  }
}

int RibbonDiagram::sign(int v) const {
  for (int h = 4 * v; h < 4 * v + 4; ++h) {
    if (!over_[h] && incoming_[h]) {
      const int next = sigma_[h];
      return (over_[next] && !incoming_[next]) ? 1 : -1;
    }
  }
  return 1;
}

bool RibbonDiagram::is_alternating() const {
  for (int h = 0; h < half_edge_count(); ++h) {
    if (!edge_alternating(h)) return false;
  }
  return true;
}

std::vector<int> RibbonDiagram::face_walk(int face) const {
  std::vector<int> walk;
  for (int h = 0; h < half_edge_count(); ++h) {
    if (face_of_[h] != face) continue;
    int x = h;
    do {
      walk.push_back(x);
      x = face_step(x);
    } while (x != h);
    break;
  }
  return walk;
}

std::vector<Face> trace_faces(const RibbonDiagram& d) {
  std::vector<Face> faces;
  faces.reserve(d.face_count());
  for (int f = 0; f < d.face_count(); ++f) faces.push_back({f, d.face_walk(f)});
  return faces;
}

namespace {

RibbonDiagram with_reversed(std::vector<int> sigma, std::vector<int> alpha,
                            std::vector<bool> over, std::span<const int> reversed) {
  const int n = static_cast<int>(sigma.size()) / 4;
  for (int v : reversed) {
    if (v < 0 || v >= n) {
      throw Error(ErrorKind::NonRealizableRotation,
                  "reversed vertex " + std::to_string(v) + " out of range");
    }
    const auto inv = invert(sigma);
    for (int h = 4 * v; h < 4 * v + 4; ++h) sigma[h] = inv[h];
  }
  return RibbonDiagram(std::move(sigma), std::move(alpha), std::move(over));
}

std::vector<int> standard_rotation(int n) {
  std::vector<int> sigma(4 * n);
  for (int h = 0; h < 4 * n; ++h) sigma[h] = 4 * (h / 4) + (h % 4 + 1) % 4;
  return sigma;
}

}  // namespace

RibbonDiagram to_ribbon(const PlanarDiagramCode& code,
                        std::span<const int> reversed) {
  validate(code);
  const int n = code.crossing_count();
  std::map<int, std::vector<int>> where;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 4; ++j) where[code.crossings[i][j]].push_back(4 * i + j);
  }
  std::vector<int> alpha(4 * n);
  for (const auto& [arc, hs] : where) {
    alpha[hs[0]] = hs[1];
    alpha[hs[1]] = hs[0];
  }
  std::vector<bool> over(4 * n);
  for (int h = 0; h < 4 * n; ++h) over[h] = (h % 2) == 1;
  RibbonDiagram d(standard_rotation(n), alpha, over);
  for (int v = 0; v < n; ++v) {
    if (!d.is_incoming(4 * v)) {
      throw Error(ErrorKind::MalformedTuple,
                  "crossing " + std::to_string(v + 1) +
                      " does not start with the incoming under-strand");
    }
  }
  if (reversed.empty()) return d;
  return with_reversed(standard_rotation(n), std::move(alpha), std::move(over),
                       reversed);
}

RibbonDiagram to_ribbon(const SignedGaussCode& code,
                        std::span<const int> reversed) {
  validate(code);
  enum Role { UIn = 0, OOut = 1, UOut = 2, OIn = 3 };
  // Position of each role in the counterclockwise rotation.
  static constexpr int kPosPlus[4] = {0, 1, 2, 3};   // UIn OOut UOut OIn
  static constexpr int kPosMinus[4] = {0, 3, 2, 1};  // UIn OIn UOut OOut

  std::map<int, int> vertex;
  std::vector<int> sign_of;
  for (const auto& e : code.entries) {
    if (vertex.emplace(e.label, static_cast<int>(vertex.size())).second) {
      sign_of.push_back(e.sign);
    }
  }
  const int n = static_cast<int>(vertex.size());
  const auto& first = code.entries.front();
  const int first_in_role = first.passage == Passage::Over ? OIn : UIn;
  auto half_edge = [&](int v, int role) {
    const int* pos = sign_of[v] > 0 ? kPosPlus : kPosMinus;
    const int offset = v == 0 ? pos[first_in_role] : 0;
    return 4 * v + ((pos[role] - offset) % 4 + 4) % 4;
  };

  std::vector<int> alpha(4 * n);
  std::vector<bool> over(4 * n);
  const int m = static_cast<int>(code.entries.size());
  for (int i = 0; i < m; ++i) {
    const auto& e = code.entries[i];
    const auto& next = code.entries[(i + 1) % m];
    const int v = vertex.at(e.label);
    const int w = vertex.at(next.label);
    const int out = half_edge(v, e.passage == Passage::Over ? OOut : UOut);
    const int in = half_edge(w, next.passage == Passage::Over ? OIn : UIn);
    alpha[out] = in;
    alpha[in] = out;
    over[out] = e.passage == Passage::Over;
    over[in] = next.passage == Passage::Over;
  }
  return with_reversed(standard_rotation(n), std::move(alpha), std::move(over),
                       reversed);
}

SignedGaussCode to_gauss(const RibbonDiagram& d) {
  SignedGaussCode code;
  int cur = 0;
  do {
    const int v = RibbonDiagram::vertex_of(cur);
    code.entries.push_back(
        {v + 1, d.is_over(cur) ? Passage::Over : Passage::Under, d.sign(v)});
    cur = d.alpha(d.opposite(cur));
  } while (cur != 0);
  return canonical(code);
}

PlanarDiagramCode to_pd(const RibbonDiagram& d) {
  if (d.euler_characteristic() != 2) {
    throw Error(ErrorKind::PreconditionViolated,
                "PD codes describe planar diagrams only");
  }
  const int n = d.vertex_count();
  std::vector<int> label(d.half_edge_count(), 0);
  int cur = 0;
  int k = 1;
  do {
    label[cur] = k;
    label[d.alpha(cur)] = k;
    const int out = d.opposite(cur);
    k = k % (2 * n) + 1;
    label[out] = k;
    label[d.alpha(out)] = k;
    cur = d.alpha(out);
  } while (cur != 0);
  PlanarDiagramCode code;
  for (int v = 0; v < n; ++v) {
    int start = 4 * v;
    while (d.is_over(start) || !d.is_incoming(start)) start = d.sigma(start);
    std::array<int, 4> x{};
    int h = start;
    for (int j = 0; j < 4; ++j, h = d.sigma(h)) x[j] = label[h];
    code.crossings.push_back(x);
  }
  return code;
}

RibbonDiagram reverse_rotation(const RibbonDiagram& d, int v) {
  const int r[1] = {v};
  return with_reversed(d.sigma_perm(), d.alpha_perm(), d.over_flags(), r);
}

RibbonDiagram switch_vertex(const RibbonDiagram& d, int v) {
  auto over = d.over_flags();
  for (int h = 4 * v; h < 4 * v + 4; ++h) over[h] = !over[h];
  return RibbonDiagram(d.sigma_perm(), d.alpha_perm(), std::move(over));
}

RibbonDiagram flip_vertex(const RibbonDiagram& d, int v) {
  return switch_vertex(reverse_rotation(d, v), v);
}

namespace {

void check_insert_args(const RibbonDiagram& d, int p, int q) {
  const int n = d.half_edge_count();
  if (p < 0 || q < 0 || p >= n || q >= n || p == q || d.alpha(p) == q) {
    throw Error(ErrorKind::PreconditionViolated,
                "insertion needs two half-edges on different edges");
  }
}

}  // namespace

Insertion insert_crossing(const RibbonDiagram& d, int p, int q, bool p_over) {
  check_insert_args(d, p, q);
  const int n = d.half_edge_count();
  const int w = n;
  std::array<int, 4> ends{p, d.alpha(p), q, d.alpha(q)};
  std::array<int, 4> slot{0, 1, 2, 3};
  do {
    // p and its partner end must not be joined straight through.
    if ((slot[0] + 2) % 4 == slot[1]) continue;
    auto sigma = d.sigma_perm();
    auto alpha = d.alpha_perm();
    auto over = d.over_flags();
    for (int j = 0; j < 4; ++j) sigma.push_back(w + (j + 1) % 4);
    alpha.resize(n + 4);
    over.resize(n + 4);
    for (int j = 0; j < 4; ++j) {
      alpha[ends[j]] = w + slot[j];
      alpha[w + slot[j]] = ends[j];
    }
    const int ps = slot[0] % 2;
    for (int j = 0; j < 4; ++j) over[w + j] = (j % 2 == ps) == p_over;
    try {
      RibbonDiagram out(std::move(sigma), std::move(alpha), std::move(over));
      if (out.genus() == d.genus()) return {std::move(out), {w / 4}};
    } catch (const Error&) {
    }
  } while (std::next_permutation(slot.begin(), slot.end()));
  throw Error(ErrorKind::PreconditionViolated,
              "no pinch of these edges keeps the genus and a single strand");
}

Insertion insert_twist(const RibbonDiagram& d, int p, int q, const std::vector<bool>& p_over) {
  check_insert_args(d, p, q);
  const int m = static_cast<int>(p_over.size());
  if (m < 2 || m > 16) {
    throw Error(ErrorKind::PreconditionViolated, "a twist needs 2 to 16 crossings");
  }
  const int n = d.half_edge_count();
  const int pp = d.alpha(p);
  const int qq = d.alpha(q);
  auto w = [&](int i) { return n + 4 * i; };
  // p's strand runs p - w(0) - ... - w(m-1) - pp through the even slots.
  // q's strand takes an odd slot at each crossing, in either direction.
  for (int reversed = 0; reversed < 2; ++reversed) {
    for (long mask = 0; mask < (1L << m); ++mask) {
      auto sigma = d.sigma_perm();
      auto alpha = d.alpha_perm();
      auto over = d.over_flags();
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < 4; ++j) sigma.push_back(w(i) + (j + 1) % 4);
      alpha.resize(n + 4 * m);
      over.resize(n + 4 * m);
      auto link = [&](int a, int b) {
        alpha[a] = b;
        alpha[b] = a;
      };
      link(p, w(0));
      for (int i = 0; i + 1 < m; ++i) link(w(i) + 2, w(i + 1));
      link(w(m - 1) + 2, pp);
      int prev = q;
      for (int k = 0; k < m; ++k) {
        const int i = reversed ? m - 1 - k : k;
        const int slot = 1 + 2 * ((mask >> i) & 1);
        link(prev, w(i) + slot);
        prev = w(i) + (slot + 2) % 4;
      }
      link(prev, qq);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < 4; ++j) over[w(i) + j] = (j % 2 == 0) == p_over[i];
      try {
        RibbonDiagram out(std::move(sigma), std::move(alpha), std::move(over));
        if (out.genus() != d.genus()) continue;
        // Consecutive crossings must bound bigons.
        int bigons = 0;
        for (int f = 0; f < out.face_count(); ++f) {
          const auto walk = out.face_walk(f);
          if (walk.size() != 2) continue;
          const int a = RibbonDiagram::vertex_of(walk[0]) - n / 4;
          const int b = RibbonDiagram::vertex_of(walk[1]) - n / 4;
          if (a >= 0 && b >= 0 && std::abs(a - b) == 1) ++bigons;
        }
        if (bigons < m - 1) continue;
        Insertion ins{std::move(out), {}};
        for (int i = 0; i < m; ++i) ins.vertices.push_back(n / 4 + i);
        return ins;
      } catch (const Error&) {
      }
    }
  }
  throw Error(ErrorKind::PreconditionViolated, "the two edges do not share a face");
}

RibbonDiagram reduce_r2(const RibbonDiagram& d) {
  RibbonDiagram cur = d;
  for (bool changed = true; changed;) {
    changed = false;
    for (int f = 0; f < cur.face_count() && !changed; ++f) {
      if (!is_r2_bigon(cur, f) || cur.vertex_count() <= 2) continue;
      try {
        cur = cancel_r2(cur, cur.face_walk(f).front());
        changed = true;
      } catch (const Error&) {
      }
    }
  }
  return cur;
}

bool is_r2_bigon(const RibbonDiagram& d, int face) {
  const auto walk = d.face_walk(face);
  if (walk.size() != 2) return false;
  const int v1 = RibbonDiagram::vertex_of(walk[0]);
  const int v2 = RibbonDiagram::vertex_of(walk[1]);
  return v1 != v2 && !d.edge_alternating(walk[0]);
}

RibbonDiagram cancel_r2(const RibbonDiagram& d, int bigon_half_edge,
                        std::vector<int>* kept) {
  const int face = d.face_of()[bigon_half_edge];
  if (!is_r2_bigon(d, face)) {
    throw Error(ErrorKind::PreconditionViolated, "face is not a Reidemeister II bigon");
  }
  const auto walk = d.face_walk(face);
  const int h1 = walk[0];
  const int h2 = walk[1];
  const int v1 = RibbonDiagram::vertex_of(h1);
  const int v2 = RibbonDiagram::vertex_of(h2);
  const int x1 = d.opposite(h1);
  const int x2 = d.opposite(d.alpha(h2));
  const int y1 = d.opposite(d.alpha(h1));
  const int y2 = d.opposite(h2);
  const int a = d.alpha(x1), b = d.alpha(y1), c = d.alpha(x2), e = d.alpha(y2);
  for (int h : {a, b, c, e}) {
    const int v = RibbonDiagram::vertex_of(h);
    if (v == v1 || v == v2) {
      throw Error(ErrorKind::PreconditionViolated,
                  "bigon strands close up without other crossings");
    }
  }
  const int nv = d.vertex_count();
  std::vector<int> new_id(nv, -1);
  std::vector<int> old_of;
  for (int v = 0; v < nv; ++v) {
    if (v == v1 || v == v2) continue;
    new_id[v] = static_cast<int>(old_of.size());
    old_of.push_back(v);
  }
  auto remap = [&](int h) { return 4 * new_id[h / 4] + h % 4; };
  auto alpha_old = d.alpha_perm();
  alpha_old[a] = b;
  alpha_old[b] = a;
  alpha_old[c] = e;
  alpha_old[e] = c;
  const int m = 4 * static_cast<int>(old_of.size());
  std::vector<int> sigma(m), alpha(m);
  std::vector<bool> over(m);
  for (int v : old_of) {
    for (int h = 4 * v; h < 4 * v + 4; ++h) {
      sigma[remap(h)] = remap(d.sigma(h));
      alpha[remap(h)] = remap(alpha_old[h]);
      over[remap(h)] = d.is_over(h);
    }
  }
  if (kept) *kept = old_of;
  return RibbonDiagram(std::move(sigma), std::move(alpha), std::move(over));
}

bool isomorphic(const RibbonDiagram& a, const RibbonDiagram& b) {
  const int n = a.half_edge_count();
  if (n != b.half_edge_count() || a.face_count() != b.face_count()) return false;
  std::vector<int> map(n);
  std::vector<int> used(n);
  std::vector<int> stack;
  for (int t = 0; t < n; ++t) {
    std::fill(map.begin(), map.end(), -1);
    std::fill(used.begin(), used.end(), 0);
    bool ok = true;
    auto assign = [&](int x, int y) {
      if (map[x] == -1) {
        if (used[y] || a.is_over(x) != b.is_over(y)) return false;
        map[x] = y;
        used[y] = 1;
        stack.push_back(x);
        return true;
      }
      return map[x] == y;
    };
    stack.clear();
    ok = assign(0, t);
    while (ok && !stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      ok = assign(a.sigma(x), b.sigma(map[x])) && assign(a.alpha(x), b.alpha(map[x]));
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace knotsurf
