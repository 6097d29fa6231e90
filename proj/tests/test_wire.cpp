#include <doctest.h>

#include "entries.hpp"
#include "support.hpp"
#include "symspace/error.hpp"
#include "symspace/wire.hpp"

using namespace symspace;
using namespace symspace::wire;
using symspace::testing::random_matrix;
using symspace::testing::small_entries;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("scalars and matrices") {
  CHECK(to_json(Scalar(mpq_class(-3, 4)), Ring::R) == json::parse(R"(["-3/4"])"));
  CHECK(to_json(Scalar(1, 2), Ring::C) == json::parse(R"(["1","2"])"));
  CHECK(scalar_from_json(json::parse(R"(["2/4","0","1","-1"])"), Ring::H) == Scalar(mpq_class(1, 2), 0, 1, -1));
  std::mt19937_64 rng(91);
  for (Ring ring : symspace::testing::kRings) {
    const Matrix m = random_matrix(rng, ring, 2, 3);
    CHECK(matrix_from_json(to_json(m), ring) == m);
    CHECK(matrix_from_json(json::parse(to_json(m).dump()), ring, 2, 3) == m);
  }
  CHECK(kind_of([] { scalar_from_json(json::parse(R"(["1"])"), Ring::C); }) == ErrorKind::Parse);
  CHECK(kind_of([] { scalar_from_json(json::parse(R"([1])"), Ring::R); }) == ErrorKind::Parse);
  CHECK(kind_of([] { scalar_from_json(json::parse(R"(["x/2"])"), Ring::R); }) == ErrorKind::Parse);
  CHECK(kind_of([] { scalar_from_json(json::parse(R"(["1/0"])"), Ring::R); }) == ErrorKind::Parse);
  CHECK(kind_of([] { matrix_from_json(json::parse(R"([[["1"]],[["1"],["2"]]])"), Ring::R); }) == ErrorKind::Parse);
}

TEST_CASE("structures round trip") {
  for (const auto& e : small_entries()) {
    CAPTURE(e.id());
    if (e.b) {
      const Form f = form_from_json(json::parse(to_json(*e.b).dump()));
      CHECK(f.gram() == e.b->gram());
      CHECK(f.type().kind == e.b->type().kind);
    }
    if (e.j) {
      const Semiinvolution j = semiinvolution_from_json(to_json(*e.j));
      CHECK(j.matrix() == e.j->matrix());
      CHECK(j.linearity() == e.j->linearity());
      CHECK(j.epsilon() == e.j->epsilon());
    }
    CHECK(params_from_json(to_json(e.params)) == e.params);
    const SpacePoint base = base_point(e);
    CHECK(point_from_json(json::parse(to_json(base).dump())) == base);
    const json d = describe(e);
    CHECK(d["entry"] == e.id());
    CHECK(d["star"] == e.star());
  }
}

TEST_CASE("coordinates and double ratios round trip") {
  const SeriesEntry e = build(21, {.n = 1});
  const LieAlgebra lie = lie_algebra(e.g);
  const Chart c = make_chart(e, base_point(e));
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const SpacePoint p1 = sample_point(e, lie, seed), p2 = sample_point(e, lie, seed + 100);
    try {
      const AngularCoords mn = to_coords(e, c, p1);
      CHECK(coords_from_json(json::parse(to_json(mn).dump())) == mn);
      const DoubleRatio d = double_ratio(e, p1, p2);
      CHECK(double_ratio_from_json(json::parse(to_json(d).dump())) == d);
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::NotTransverse);
    }
  }
}

TEST_CASE("malformed documents") {
  CHECK(kind_of([] { form_from_json(json::parse(R"({"ring":"R","kind":"nope","gram":[]})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { form_from_json(json::parse(R"({"ring":"Q","kind":"sym","gram":[]})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { semiinvolution_from_json(json::parse(R"({"ring":"R","linearity":"lin","matrix":[[["1"]]]})")); }) ==
        ErrorKind::Parse);
  CHECK(kind_of([] { params_from_json(json::parse(R"({"z":1})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { params_from_json(json::parse(R"({"n":"1"})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] { point_from_json(json::parse(R"({"entry":1})")); }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          subspace_from_json(json::parse(R"({"ring":"R","ambient_dim":2,"basis":[[["1"],["2"]],[["2"],["4"]]]})"));
        }) == ErrorKind::Parse);
  CHECK(kind_of([] { double_ratio_from_json(json::parse(R"({"ring":"R","degree":2,"charpoly":[["1"]]})")); }) == ErrorKind::Parse);
}
