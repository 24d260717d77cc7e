#include "knotsurf/embedded.hpp"

#include <numeric>

namespace knotsurf {

void validate(const EmbeddedDiagram& d) {
  const int f = d.ribbon.face_count();
  for (const auto& dec : d.decorations) {
    if (dec.face < 0 || dec.face >= f || dec.other_face < 0 || dec.other_face >= f) {
      throw Error(ErrorKind::BadDecoration, "decoration names a missing face");
    }
    if (dec.kind == Decoration::Kind::Handle && dec.genus <= 0) {
      throw Error(ErrorKind::BadDecoration, "handles must add positive genus");
    }
  }
}

int euler_characteristic(const EmbeddedDiagram& d) {
  validate(d);
  int chi = d.ribbon.euler_characteristic();
  for (const auto& dec : d.decorations) {
    chi -= 2 * (dec.kind == Decoration::Kind::Handle ? dec.genus : 1);
  }
  if (chi % 2 != 0 || chi > 2) {
    throw Error(ErrorKind::OddEuler, "Euler characteristic " + std::to_string(chi));
  }
  return chi;
}

int genus(const EmbeddedDiagram& d) { return (2 - euler_characteristic(d)) / 2; }

std::vector<int> region_of_face(const EmbeddedDiagram& d) {
  validate(d);
  const int f = d.ribbon.face_count();
  std::vector<int> parent(f);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& dec : d.decorations) {
    if (dec.kind != Decoration::Kind::Tube) continue;
    const int a = find(dec.face), b = find(dec.other_face);
    parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> id(f, -1);
  std::vector<int> out(f);
  int next = 0;
  for (int i = 0; i < f; ++i) {
    const int r = find(i);
    if (id[r] == -1) id[r] = next++;
    out[i] = id[r];
  }
  return out;
}

std::vector<Region> regions(const EmbeddedDiagram& d) {
  const auto rof = region_of_face(d);
  int count = 0;
  for (int r : rof) count = std::max(count, r + 1);
  std::vector<Region> out(count);
  std::vector<int> tubes(count, 0), handles(count, 0);
  for (int i = 0; i < count; ++i) {
    out[i].id = i;
    out[i].euler_char = 0;
  }
  for (int f = 0; f < static_cast<int>(rof.size()); ++f) {
    auto& r = out[rof[f]];
    r.faces.push_back(f);
    r.boundary_walks.push_back(d.ribbon.face_walk(f));
    r.euler_char += 1;
  }
  for (const auto& dec : d.decorations) {
    const int r = rof[dec.face];
    if (dec.kind == Decoration::Kind::Tube) {
      ++tubes[r];
      out[r].euler_char -= 2;
    } else {
      handles[r] += dec.genus;
      out[r].euler_char -= 2 * dec.genus;
    }
  }
  for (auto& r : out) {
    if (r.euler_char == 1) {
      r.kind = RegionKind::Disc;
    } else if (r.euler_char == 0 && r.faces.size() == 2 && tubes[r.id] == 1 &&
               handles[r.id] == 0) {
      r.kind = RegionKind::Annulus;
    } else {
      r.kind = RegionKind::Other;
    }
  }
  return out;
}

}  // namespace knotsurf
