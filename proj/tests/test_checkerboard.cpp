#include "doctest.h"

#include "knotsurf/checkerboard.hpp"
#include "knotsurf/generate.hpp"

using namespace knotsurf;

namespace {

constexpr const char* kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

EmbeddedDiagram planar(const char* pd) { return {to_ribbon(parse_pd(pd)), {}, {}}; }

// Independent oracle: an odd closed walk in the region adjacency graph,
// searched by brute force over 2-colourings.
bool brute_force_colorable(const EmbeddedDiagram& d) {
  const auto rof = region_of_face(d);
  int nr = 0;
  for (int r : rof) nr = std::max(nr, r + 1);
  for (long mask = 0; mask < (1L << nr); ++mask) {
    bool ok = true;
    for (int h = 0; h < d.ribbon.half_edge_count() && ok; ++h) {
      const int a = rof[d.ribbon.face_of()[h]];
      const int b = rof[d.ribbon.face_of()[d.ribbon.alpha(h)]];
      ok = ((mask >> a) & 1) != ((mask >> b) & 1);
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("is_alternating on codes") {
  CHECK(is_alternating(parse_gauss("O1+ U2+ O3+ U1+ O2+ U3+")));
  CHECK_FALSE(is_alternating(parse_gauss("O1+ O2+ U3+ U1+ U2+ O3+")));
  CHECK(is_alternating(parse_gauss("O1+ U1+")));
}

TEST_CASE("trefoil on the sphere: coloring and checkerboard identity") {
  const auto d = planar(kTrefoilPd);
  const auto c = checkerboard_coloring(d);
  REQUIRE(c.has_value());
  CHECK(c->coloring[0] == Color::Shaded);
  CHECK(c->boundary_intersections == 6);
  CHECK(c->chi_shaded + c->chi_unshaded == 5 - 6);
  CHECK(howie_invariant(d, *c) == 2);
  CHECK(find_diagrammatic_bigons(d).empty());
}

TEST_CASE("one-crossing diagram: colourable, a monogon and no bigons") {
  const EmbeddedDiagram d{to_ribbon(parse_gauss("O1+ U1+")), {}, {}};
  const auto c = checkerboard_coloring(d);
  REQUIRE(c.has_value());
  CHECK(c->coloring.size() == 3);
  CHECK(howie_invariant(d, *c) == 2);
  CHECK(find_diagrammatic_bigons(d).empty());
}

TEST_CASE("cellular alternating torus diagram satisfies the genus-one identity") {
  Rng rng(7);
  int tested = 0;
  while (tested < 20) {
    const auto r = random_surface_diagram(rng, 5, true);
    if (r.genus() != 1) continue;
    const EmbeddedDiagram d{r, {}, {}};
    const auto c = checkerboard_coloring(d);
    REQUIRE(c.has_value());
    CHECK(howie_invariant(d, *c) == 0);
    ++tested;
  }
}

TEST_CASE("annular region contributes zero") {
  // Trefoil faces 0 and 2 share a colour; a tube between them leaves one
  // annulus on a torus.
  auto d = planar(kTrefoilPd);
  const auto base = checkerboard_coloring(d);
  REQUIRE(base.has_value());
  int a = -1, b = -1;
  for (int f = 0; f < d.ribbon.face_count() && b < 0; ++f) {
    for (int g = f + 1; g < d.ribbon.face_count(); ++g) {
      if (base->coloring[f] == base->coloring[g]) {
        a = f;
        b = g;
        break;
      }
    }
  }
  d.decorations.push_back(Decoration::tube(a, b));
  const auto c = checkerboard_coloring(d);
  REQUIRE(c.has_value());
  // Direct region-chi summation: four discs and the annulus.
  int sum = 0;
  for (const auto& r : regions(d)) sum += r.euler_char;
  CHECK(sum == 3);
  CHECK(howie_invariant(d, *c) == 0);
}

TEST_CASE("alternating torus diagram that is not checkerboard colourable") {
  // A tube joining two adjacent regions puts an odd cycle in the region graph.
  auto d = planar(kTrefoilPd);
  const int f0 = d.ribbon.face_of()[0];
  const int f1 = d.ribbon.face_of()[d.ribbon.alpha(0)];
  REQUIRE(f0 != f1);
  d.decorations.push_back(Decoration::tube(f0, f1));
  CHECK(genus(d) == 1);
  CHECK(d.ribbon.is_alternating());
  CHECK_FALSE(checkerboard_coloring(d).has_value());
  CHECK_FALSE(brute_force_colorable(d));
}

TEST_CASE("colour swap symmetry") {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const EmbeddedDiagram d{random_surface_diagram(rng, 6, true), {}, {}};
    const auto c = checkerboard_coloring(d);
    REQUIRE(c.has_value());
    const auto s = swap_colors(*c);
    CHECK(s.chi_shaded == c->chi_unshaded);
    CHECK(s.chi_unshaded == c->chi_shaded);
    CHECK(howie_invariant(d, s) == howie_invariant(d, *c));
  }
}

TEST_CASE("BFS colouring agrees with brute force") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const EmbeddedDiagram d{random_surface_diagram(rng, 4, false), {}, {}};
    CHECK(checkerboard_coloring(d).has_value() == brute_force_colorable(d));
  }
}

TEST_CASE("Reidemeister II insertion away from crossings adds exactly one bigon") {
  // The outer pentagon of the 5-crossing torus knot has edges with no
  // common crossing.
  const auto r = to_ribbon(parse_pd("X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)"));
  int face = -1;
  for (int f = 0; f < r.face_count() && face < 0; ++f)
    if (r.face_walk(f).size() == 5) face = f;
  REQUIRE(face >= 0);
  const auto walk = r.face_walk(face);
  const int p = walk[0];
  const int q = walk[2];
  const auto ins = insert_twist(r, p, q, {true, true});
  const EmbeddedDiagram d{ins.diagram, {}, {}};
  CHECK(find_diagrammatic_bigons(EmbeddedDiagram{r, {}, {}}).empty());
  const auto bigons = find_diagrammatic_bigons(d);
  REQUIRE(bigons.size() == 1);
  const int h = bigons[0].boundary_walks[0][0];
  CHECK(isomorphic(cancel_r2(d.ribbon, h), r));
}

TEST_CASE("Reidemeister II insertion creates a cancellable bigon") {
  const auto r = to_ribbon(parse_pd(kTrefoilPd));
  const EmbeddedDiagram plain{r, {}, {}};
  REQUIRE(find_diagrammatic_bigons(plain).empty());
  const auto ins = insert_twist(r, 0, r.face_step(0), {true, true});
  const EmbeddedDiagram d{ins.diagram, {}, {}};
  CHECK(d.ribbon.vertex_count() == 5);
  CHECK(d.ribbon.euler_characteristic() == 2);
  const auto bigons = find_diagrammatic_bigons(d);
  // Pushing next to a crossing also leaves a bigon between that crossing and
  // the nearer new one.
  CHECK(bigons.size() == 2);
  int cancelled = 0;
  for (const auto& b : bigons) {
    const int h = b.boundary_walks[0][0];
    const int u = RibbonDiagram::vertex_of(h);
    const int v = RibbonDiagram::vertex_of(d.ribbon.alpha(h));
    const bool new_pair = (u == ins.vertices[0] && v == ins.vertices[1]) ||
                          (u == ins.vertices[1] && v == ins.vertices[0]);
    if (!new_pair) continue;
    CHECK(isomorphic(cancel_r2(d.ribbon, h), r));
    ++cancelled;
  }
  CHECK(cancelled == 1);

  const auto clasp = insert_twist(r, 0, r.face_step(0), {true, false});
  CHECK(clasp.diagram.euler_characteristic() == 2);
}

TEST_CASE("free surface classification") {
  Rng rng(5);
  RibbonDiagram r;
  do {
    r = random_surface_diagram(rng, 5, true);
  } while (r.genus() != 1);
  const EmbeddedDiagram cell{r, {}, {}};
  const auto c = *checkerboard_coloring(cell);
  auto cls = classify_free_surface(cell, c, true, 2);
  CHECK(cls.shaded == Freeness::Free);
  CHECK(cls.unshaded == Freeness::Free);
  cls = classify_free_surface(cell, c, false, 2);
  CHECK(cls.shaded == Freeness::NotFree);
  CHECK(cls.unshaded == Freeness::NotFree);
  CHECK_THROWS_AS(classify_free_surface(cell, c, true, 0), Error);

  auto ann = planar(kTrefoilPd);
  const auto base = *checkerboard_coloring(ann);
  int a = -1, b = -1;
  for (int f = 0; f < ann.ribbon.face_count() && b < 0; ++f)
    for (int g = f + 1; g < ann.ribbon.face_count() && b < 0; ++g)
      if (base.coloring[f] == base.coloring[g]) a = f, b = g;
  ann.decorations.push_back(Decoration::tube(a, b));
  const auto ca = *checkerboard_coloring(ann);
  const auto rs = regions(ann);
  Color annulus_color{};
  for (const auto& reg : rs)
    if (reg.kind == RegionKind::Annulus) annulus_color = ca.coloring[reg.id];
  cls = classify_free_surface(ann, ca, true, 2);
  const auto annulus_side = annulus_color == Color::Shaded ? cls.shaded : cls.unshaded;
  const auto disc_side = annulus_color == Color::Shaded ? cls.unshaded : cls.shaded;
  CHECK(annulus_side == Freeness::Unknown);
  CHECK(disc_side == Freeness::Free);
}

TEST_CASE("random planar diagrams: colourable and identity sums to two") {
  Rng rng(kDefaultSeed);
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + i % 8;
    const auto r = random_planar_diagram(rng, n, i % 2 == 0);
    CHECK(r.vertex_count() == n);
    CHECK(r.euler_characteristic() == 2);
    if (i % 2 == 0) CHECK(r.is_alternating());
    const EmbeddedDiagram d{r, {}, {}};
    const auto c = checkerboard_coloring(d);
    REQUIRE(c.has_value());
    CHECK(howie_invariant(d, *c) == 2);
  }
}
