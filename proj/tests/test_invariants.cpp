#include <doctest.h>

#include "entries.hpp"
#include "support.hpp"
#include "symspace/error.hpp"
#include "symspace/invariants.hpp"

using namespace symspace;
using symspace::testing::small_entries;

namespace {

// Point of the entry-52 space (p = q = 1) whose lines have slopes x and y;
// an empty optional stands for the vertical line.
SpacePoint slopes(const SeriesEntry& e, std::optional<mpq_class> x, std::optional<mpq_class> y) {
  const auto line = [](std::optional<mpq_class> s) {
    return s ? Subspace(Matrix(Ring::R, {{1}, {Scalar(*s)}})) : Subspace::coordinate(Ring::R, 2, {1});
  };
  return make_point(e, line(x), line(y));
}

mpq_class rat(int num, int den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class cross_ratio(const mpq_class& x1, const mpq_class& x2, const mpq_class& x3, const mpq_class& x4) {
  return ((x1 - x3) * (x2 - x4)) / ((x1 - x4) * (x2 - x3));
}

}  // namespace

TEST_CASE("double ratio of a point with itself") {
  for (const auto& e : small_entries()) {
    CAPTURE(e.id());
    const SpacePoint base = base_point(e);
    const DoubleRatio d = double_ratio(e, base, base);
    const std::size_t degree = e.ring == Ring::H ? 2 * e.m : e.m;
    CHECK(d.degree == degree);
    REQUIRE(d.charpoly.size() == degree + 1);
    CHECK(d.charpoly[0] == Scalar(1));
    for (std::size_t t = 1; t < d.charpoly.size(); ++t) CHECK(d.charpoly[t].is_zero());
  }
}

TEST_CASE("projective line cross-ratio") {
  const SeriesEntry e = build(52, {.p = 1, .q = 1});
  std::mt19937_64 rng(83);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 9);
  int checked = 0;
  while (checked < 100) {
    const mpq_class a = rat(num(rng), den(rng)), b = rat(num(rng), den(rng));
    if (a == 0 || b == 0 || a == b) continue;
    const DoubleRatio d = double_ratio(e, slopes(e, 0, std::nullopt), slopes(e, a, b));
    REQUIRE(d.degree == 1);
    CHECK(d.charpoly[1] == Scalar(-(a / b)));
    ++checked;
  }
  // four finite points in general position
  checked = 0;
  while (checked < 100) {
    const mpq_class x1 = rat(num(rng), den(rng)), x2 = rat(num(rng), den(rng)), x3 = rat(num(rng), den(rng)),
                    x4 = rat(num(rng), den(rng));
    if (x1 == x3 || x1 == x4 || x2 == x3 || x2 == x4 || x1 == x2 || x3 == x4) continue;
    if (x2 == 0 || x4 == 0) continue;
    const DoubleRatio d = double_ratio(e, slopes(e, x1, x2), slopes(e, x3, x4));
    const Matrix op = coordinate_double_ratio({Matrix(Ring::R, {{Scalar(x1)}}), Matrix(Ring::R, {{Scalar(1 / x2)}})},
                                              {Matrix(Ring::R, {{Scalar(x3)}}), Matrix(Ring::R, {{Scalar(1 / x4)}})});
    CHECK(op(0, 0) == Scalar(cross_ratio(x1, x2, x3, x4)));
    CHECK(d.charpoly[1] == -op(0, 0));
    ++checked;
  }
}

TEST_CASE("not transverse") {
  const SeriesEntry e = build(52, {.p = 1, .q = 1});
  CHECK_THROWS_AS(double_ratio(e, slopes(e, 0, std::nullopt), slopes(e, std::nullopt, 0)), Error);
}

TEST_CASE("invariance and coordinate formula") {
  for (const auto& e : small_entries()) {
    CAPTURE(e.id());
    const LieAlgebra lie = lie_algebra(e.g);
    const SpacePoint base = base_point(e);
    const Chart c = make_chart(e, base);
    int used = 0;
    for (std::uint64_t seed = 0; seed < 30 && used < 10; ++seed) {
      const SpacePoint p1 = sample_point(e, lie, 2 * seed), p2 = sample_point(e, lie, 2 * seed + 1);
      try {
        const DoubleRatio d = double_ratio(e, p1, p2);
        const Matrix g = cayley_sample(lie, 500 + seed);
        CHECK(double_ratio(e, act(e, g, p1), act(e, g, p2)) == d);
        const Matrix op = coordinate_double_ratio(to_coords(e, c, p1), to_coords(e, c, p2));
        CHECK(charpoly_of(op) == d);
        if (e.ring == Ring::H)
          for (const auto& coeff : d.charpoly) CHECK(coeff.is_real());
        ++used;
      } catch (const Error& err) {
        const bool degenerate = err.kind() == ErrorKind::NotTransverse || err.kind() == ErrorKind::Singular;
        CHECK(degenerate);
      }
    }
  }
}
