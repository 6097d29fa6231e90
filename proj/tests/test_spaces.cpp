#include <doctest.h>

#include <set>

#include "entries.hpp"
#include "support.hpp"
#include "symspace/error.hpp"
#include "symspace/spaces.hpp"

using namespace symspace;
using symspace::testing::random_matrix;
using symspace::testing::small_entries;
using symspace::testing::small_params;

TEST_CASE("base points") {
  for (const auto& e : small_entries()) {
    CAPTURE(e.id());
    const SpacePoint base = base_point(e);
    CHECK(base.entry == e.id());
    CHECK(membership(e, base));
    CHECK_FALSE(membership(e, base.q1, base.q1));
    if (e.list() <= 3) CHECK(membership(e, base.q2, base.q1));
    CHECK(act(e, Matrix::identity(e.ring, e.dim), base) == base);
  }
}

TEST_CASE("membership rejects") {
  const SeriesEntry e8 = build(8, {.p = 1, .q = 1});
  // a complement that is not isotropic
  const Subspace q1 = Subspace::coordinate(Ring::R, 4, {0, 1});
  const Subspace bad = Subspace(Matrix(Ring::R, {{1, 0}, {0, 1}, {1, 0}, {0, 1}}));
  CHECK_FALSE(membership(e8, q1, bad));
  CHECK_THROWS_AS(membership(e8, Subspace::coordinate(Ring::R, 3, {0}), Subspace::coordinate(Ring::R, 3, {1, 2})), Error);

  const SeriesEntry e52 = build(52, {.p = 1, .q = 2});
  CHECK(membership(e52, Subspace::coordinate(Ring::R, 3, {0}), Subspace::coordinate(Ring::R, 3, {1, 2})));
  CHECK_FALSE(membership(e52, Subspace::coordinate(Ring::R, 3, {0, 1}), Subspace::coordinate(Ring::R, 3, {2})));
}

TEST_CASE("act requires a group element") {
  const SeriesEntry e = build(32, {.n = 1});
  try {
    act(e, Matrix::identity(Ring::R, 2) * Scalar(2), base_point(e));
    FAIL("expected NotInGroup");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotInGroup);
  }
}

TEST_CASE("sampled actions preserve membership") {
  for (const auto& e : small_entries()) {
    CAPTURE(e.id());
    const LieAlgebra lie = lie_algebra(e.g);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const SpacePoint pt = sample_point(e, lie, seed);
      CHECK(membership(e, pt));
      CHECK(sample_point(e, lie, seed) == pt);
    }
  }
}

TEST_CASE("List 4 membership formulations agree") {
  std::mt19937_64 rng(61);
  for (int id = 45; id <= 51; ++id) {
    const SeriesEntry e = build(id, small_params(series(id), 4, 1).front());
    CAPTURE(id);
    for (int t = 0; t < 30; ++t) {
      const Subspace q1(random_matrix(rng, e.ring, e.dim, e.m, -1, 1));
      if (q1.dim() != e.m) continue;
      const bool nondegenerate = is_invertible(restricted_gram(*e.d, q1.basis()));
      const Subspace q2 = orthogonal_complement(*e.d, q1);
      CHECK(is_direct_complement(q1, q2) == nondegenerate);
      CHECK(membership(e, q1, q2) == nondegenerate);
    }
  }
}

TEST_CASE("component index") {
  const SeriesEntry e45 = build(45, {.m = 1, .p = 1, .q = 1});
  const Subspace plus = Subspace::coordinate(Ring::R, 2, {0});
  const SpacePoint pt = make_point(e45, plus, orthogonal_complement(*e45.d, plus));
  CHECK(component_index(e45, pt) == Inertia{1, 0});
  const Subspace minus = Subspace::coordinate(Ring::R, 2, {1});
  CHECK(component_index(e45, make_point(e45, minus, orthogonal_complement(*e45.d, minus))) == Inertia{0, 1});

  const SeriesEntry e3 = build(3, {.n = 2});
  const Inertia base = component_index(e3, base_point(e3));
  CHECK(base.positive + base.negative == 2);

  try {
    component_index(build(8, {.p = 1, .q = 1}), base_point(build(8, {.p = 1, .q = 1})));
    FAIL("expected NotStar");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotStar);
  }
}

TEST_CASE("every component label is realized") {
  for (const auto& s : registry()) {
    if (!s.star) continue;
    for (const auto& p : enumerate_params(s, 6)) {
      const SeriesEntry e = build(s.id, p);
      const bool small = p.n ? *p.n <= 2 : (*p.p + *p.q <= 2);
      if (!small) continue;
      CAPTURE(s.id);
      CAPTURE(p.to_string());
      const std::vector<Inertia> range = component_range(e);
      std::set<Inertia> want(range.begin(), range.end()), got;
      for (const auto& pt : component_points(e)) {
        CHECK(membership(e, pt));
        got.insert(component_index(e, pt));
      }
      CHECK(got == want);
    }
  }
}

TEST_CASE("components are G-stable") {
  for (const auto& s : registry()) {
    if (!s.star) continue;
    const SeriesEntry e = build(s.id, small_params(s, 4, 1).front());
    CAPTURE(s.id);
    const LieAlgebra lie = lie_algebra(e.g);
    for (const auto& pt : component_points(e)) {
      const Inertia label = component_index(e, pt);
      for (std::uint64_t seed = 0; seed < 20; ++seed)
        CHECK(component_index(e, act(e, cayley_sample(lie, seed), pt)) == label);
    }
  }
}
