#include "doctest.h"

#include "fixtures.hpp"
#include "knotsurf/turaev.hpp"

using namespace knotsurf;
using namespace knotsurf::fixtures;

namespace {

void check_conversion(const AlmostAlternating& a) {
  const auto d = to_ribbon(a.code);
  const auto e = almost_alternating_to_torus(a.code, a.dealternator);
  CHECK(e.ribbon.vertex_count() == d.vertex_count() + 2);
  CHECK(e.ribbon.is_alternating());
  CHECK(genus(e) == 1);
  const auto col = checkerboard_coloring(e);
  REQUIRE(col.has_value());
  CHECK(howie_invariant(e, *col) == 0);
  const auto rep = r_report(e);
  CHECK(rep.r == 2);
  CHECK(region_census(e, rep.r).annuli == 1);
  const auto core = annular_core(e);
  REQUIRE(core.has_value());
  CHECK(std::abs(intersection(*core, e.compressing[0])) == 1);
  const auto bc = meridian_bigon_check(e);
  CHECK(bc.incident);
  CHECK_FALSE(bc.collapses);
  REQUIRE(bc.witness.has_value());
  CHECK(bc.witness->weight == 2);
  const auto back = to_ribbon(torus_to_almost_alternating(e));
  CHECK(back.vertex_count() == d.vertex_count());
  CHECK(isomorphic(reduce_r2(back), reduce_r2(d)));
}

}  // namespace

TEST_CASE("trefoil with one crossing changed") {
  const auto d = switch_vertex(to_ribbon(parse_pd(kTrefoilPd)), 0);
  const auto code = to_pd(d);
  int x = 0;
  for (int v = 0; v < 3 && !x; ++v)
    if (switch_vertex(to_ribbon(code), v).is_alternating()) x = v + 1;
  REQUIRE(x > 0);
  check_conversion({code, x});
  const auto e = almost_alternating_to_torus(code, x);
  CHECK(isomorphic(to_ribbon(torus_to_almost_alternating(e)), to_ribbon(code)));
}

TEST_CASE("conversion contract") {
  const auto tref = parse_pd(kTrefoilPd);
  CHECK_THROWS_WITH_AS(almost_alternating_to_torus(tref, 1),
                       doctest::Contains("NotAlmostAlternating"), Error);
  Rng rng(2);
  const auto a = random_almost_alternating(rng, 6);
  CHECK_THROWS_AS(almost_alternating_to_torus(a.code, 0), Error);
  CHECK_THROWS_AS(almost_alternating_to_torus(a.code, 7), Error);
  const auto d = to_ribbon(a.code);
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (switch_vertex(d, v).is_alternating()) continue;
    CHECK_THROWS_WITH_AS(almost_alternating_to_torus(a.code, v + 1),
                         doctest::Contains("NotAlmostAlternating"), Error);
  }
  const EmbeddedDiagram cellular{random_surface_diagram(rng, 4, true), {}, {}};
  CHECK_THROWS_AS(torus_to_almost_alternating(cellular), Error);
}

TEST_CASE("random almost-alternating round trips") {
  Rng rng(kDefaultSeed);
  int exact = 0;
  for (int i = 0; i < 30; ++i) {
    const auto a = random_almost_alternating(rng, 3 + i % 8);
    check_conversion(a);
    const auto back = torus_to_almost_alternating(almost_alternating_to_torus(a.code, a.dealternator));
    exact += isomorphic(to_ribbon(back), to_ribbon(a.code));
  }
  CHECK(exact >= 20);
}

TEST_CASE("annulus without an incident meridian") {
  Rng rng(12);
  std::optional<EmbeddedDiagram> e;
  while (!e) e = tube_at_distance(random_planar_diagram(rng, 9, true), 4);
  const auto g = homology_labels(*e);
  const auto core = *annular_core(*e);
  const auto mu = lightest_transverse_class(g, core);
  CHECK(min_intersection_in_class(g, mu) >= 4);
  const auto bc = meridian_bigon_check(*e, {mu});
  CHECK_FALSE(bc.incident);
  CHECK_FALSE(bc.witness.has_value());
  auto with_side = *e;
  with_side.compressing = {mu};
  CHECK_THROWS_AS(torus_to_almost_alternating(with_side), Error);

  const auto collapse = meridian_bigon_check(*e, {CurveClass{core.p, core.q, true}});
  CHECK(collapse.collapses);
  CHECK_FALSE(collapse.incident);
}

TEST_CASE("two-tangle cycle on its Turaev torus has r = 2") {
  const auto code = two_tangle_cycle();
  CHECK(turaev_genus(code) == 1);
  const auto e = build_turaev_embedding(code);
  CHECK(r_complexity(e) == 2);
  const auto w = toroidally_alternating_witness(code);
  REQUIRE(w.has_value());
  CHECK(genus(*w) == 1);
  CHECK(w->ribbon.is_alternating());
}

TEST_CASE("toroidal alternation witness routes") {
  const auto tref = parse_pd(kTrefoilPd);
  const auto w = toroidally_alternating_witness(tref);
  REQUIRE(w.has_value());
  CHECK(genus(*w) == 0);
  // This 8_19 diagram has Turaev genus three and no crossing change makes it
  // alternate, so neither route finds a witness.
  CHECK_FALSE(toroidally_alternating_witness(braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2})).has_value());
  Rng rng(8);
  const auto a = random_almost_alternating(rng, 7);
  const auto wa = toroidally_alternating_witness(a.code);
  REQUIRE(wa.has_value());
  CHECK(genus(*wa) <= 1);
  CHECK(wa->ribbon.is_alternating());
}
