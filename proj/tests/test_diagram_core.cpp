#include "doctest.h"

#include <algorithm>
#include <set>

#include "knotsurf/codes.hpp"
#include "knotsurf/embedded.hpp"
#include "knotsurf/ribbon.hpp"

using namespace knotsurf;

namespace {

constexpr const char* kTrefoilGauss = "O1+ U2+ O3+ U1+ O2+ U3+";
constexpr const char* kTrefoilPd = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::IoError;
}

}  // namespace

TEST_CASE("parse_gauss accepts the trefoil and the one-crossing kink") {
  const auto code = parse_gauss(kTrefoilGauss);
  CHECK(code.crossing_count() == 3);
  CHECK(render_gauss(code) == kTrefoilGauss);

  const auto kink = parse_gauss("O1+ U1+");
  CHECK(kink.crossing_count() == 1);
  CHECK(is_alternating(kink));
}

TEST_CASE("parse_gauss errors") {
  CHECK(kind_of([] { parse_gauss(""); }) == ErrorKind::LabelCountMismatch);
  CHECK(kind_of([] { parse_gauss("O1+ U1+ O2+"); }) == ErrorKind::LabelCountMismatch);
  CHECK(kind_of([] { parse_gauss("O1+ O1+"); }) == ErrorKind::PassageMismatch);
  CHECK(kind_of([] { parse_gauss("O1+ U1-"); }) == ErrorKind::PassageMismatch);
  CHECK(kind_of([] { parse_gauss("Q1+ U1+"); }) == ErrorKind::MalformedToken);
  CHECK(kind_of([] { parse_gauss("O1 U1"); }) == ErrorKind::MalformedToken);
}

TEST_CASE("parse_pd validates arcs and connectivity") {
  const auto pd = parse_pd(kTrefoilPd);
  CHECK(pd.crossing_count() == 3);
  CHECK(parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]") == pd);
  CHECK(kind_of([] { parse_pd("X(1,1,2,1) X(2,3,3,4)"); }) ==
        ErrorKind::ArcCountMismatch);
  CHECK(kind_of([] {
          parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) "
                   "X(11,14,12,15) X(13,16,14,11) X(15,12,16,13)");
        }) == ErrorKind::Disconnected);
  CHECK(kind_of([] { parse_pd("X(1,2,3) junk"); }) == ErrorKind::MalformedTuple);
}

TEST_CASE("to_ribbon on the planar trefoil") {
  // Hand-traced standard trefoil: two triangles and three bigons.
  const auto d = to_ribbon(parse_pd(kTrefoilPd));
  CHECK(d.vertex_count() == 3);
  CHECK(d.edge_count() == 6);
  CHECK(d.face_count() == 5);
  CHECK(d.euler_characteristic() == 2);
  std::multiset<std::size_t> sizes;
  for (const auto& f : trace_faces(d)) sizes.insert(f.walk.size());
  CHECK(sizes == std::multiset<std::size_t>{2, 2, 2, 3, 3});
  CHECK(d.is_alternating());

  const auto g = to_ribbon(parse_gauss(kTrefoilGauss));
  CHECK(g.euler_characteristic() == 2);
  CHECK(g.face_count() == 5);
}

TEST_CASE("reversing one rotation puts the trefoil on a torus") {
  const int rev[] = {0};
  const auto d = to_ribbon(parse_pd(kTrefoilPd), rev);
  // chi = 3 - 6 + f = 0 forces three faces.
  CHECK(d.euler_characteristic() == 0);
  CHECK(d.face_count() == 3);
  CHECK(d.genus() == 1);
}

TEST_CASE("one-crossing diagram") {
  const auto d = to_ribbon(parse_gauss("O1+ U1+"));
  CHECK(d.vertex_count() == 1);
  CHECK(d.edge_count() == 2);
  CHECK(d.face_count() == 3);
  CHECK(d.euler_characteristic() == 2);
}

TEST_CASE("face tracing partitions the half-edges") {
  const auto d = to_ribbon(parse_gauss("O1+ U2- O3+ U1+ O2- U3+ O4- U5- O6+ U4- O5- U6+"));
  std::vector<int> hits(d.half_edge_count(), 0);
  for (const auto& f : trace_faces(d)) {
    for (int h : f.walk) ++hits[h];
  }
  CHECK(std::all_of(hits.begin(), hits.end(), [](int x) { return x == 1; }));
  CHECK(d.euler_characteristic() % 2 == 0);
  CHECK(d.euler_characteristic() <= 2);
}

TEST_CASE("Gauss round trip through the ribbon") {
  for (const char* text : {kTrefoilGauss, "O1+ U1+", "O1- U2- O3- U1- O2- U3-",
                           "O1- U2+ O3- U4+ O2+ U1- O4+ U3-"}) {
    const auto code = parse_gauss(text);
    CHECK(parse_gauss(render_gauss(code)) == canonical(code));
    CHECK(to_gauss(to_ribbon(code)) == canonical(code));
  }
}

TEST_CASE("PD round trip through the ribbon") {
  const auto d = to_ribbon(parse_pd(kTrefoilPd));
  const auto pd = to_pd(d);
  CHECK(isomorphic(to_ribbon(pd), d));
  CHECK(to_ribbon(pd).euler_characteristic() == 2);
}

TEST_CASE("parse_dt") {
  const auto trefoil = parse_dt("4 6 2");
  CHECK(trefoil.crossing_count() == 3);
  CHECK(is_alternating(trefoil));
  CHECK(to_ribbon(trefoil).euler_characteristic() == 2);

  const auto fig8 = parse_dt("4 6 8 2");
  CHECK(is_alternating(fig8));
  CHECK(to_ribbon(fig8).euler_characteristic() == 2);

  const auto mixed = parse_dt("4 -6 8 2");
  CHECK_FALSE(is_alternating(mixed));
  CHECK(to_ribbon(mixed).euler_characteristic() == 2);

  CHECK(kind_of([] { parse_dt("2"); }) == ErrorKind::OddLength);
  CHECK(kind_of([] { parse_dt("4 4 2"); }) == ErrorKind::NonRealizable);
}

TEST_CASE("Euler characteristic of decorated diagrams") {
  EmbeddedDiagram planar{to_ribbon(parse_pd(kTrefoilPd)), {}, {}};
  CHECK(euler_characteristic(planar) == 2);
  CHECK(genus(planar) == 0);
  CHECK(planar.is_cellular());

  const int rev[] = {1};
  EmbeddedDiagram torus{to_ribbon(parse_pd(kTrefoilPd), rev), {}, {}};
  CHECK(euler_characteristic(torus) == 0);
  CHECK(genus(torus) == 1);

  EmbeddedDiagram tubed{planar.ribbon, {Decoration::tube(0, 1)}, {}};
  CHECK(euler_characteristic(tubed) == 0);
  CHECK(genus(tubed) == 1);
  CHECK_FALSE(tubed.is_cellular());
  const auto rs = regions(tubed);
  CHECK(rs.size() == 4);
  CHECK(rs[0].kind == RegionKind::Annulus);
  CHECK(rs[0].euler_char == 0);

  EmbeddedDiagram bad{planar.ribbon, {Decoration::tube(0, 9)}, {}};
  CHECK(kind_of([&] { euler_characteristic(bad); }) == ErrorKind::BadDecoration);
}
