#include <doctest.h>

#include <algorithm>
#include <set>

#include "entries.hpp"
#include "symspace/catalog.hpp"
#include "symspace/error.hpp"
#include "symspace/spaces.hpp"

using namespace symspace;
using symspace::testing::small_params;

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

TEST_CASE("registry shape") {
  const auto& reg = registry();
  REQUIRE(reg.size() == 54);
  std::set<int> stars;
  for (std::size_t t = 0; t < reg.size(); ++t) {
    CHECK(reg[t].id == static_cast<int>(t) + 1);
    if (reg[t].star) stars.insert(reg[t].id);
  }
  CHECK(stars == std::set<int>{3, 5, 14, 15, 20, 26, 30, 45, 49, 50});
  for (const auto& s : reg) {
    const int expected = s.id <= 30 ? 1 : s.id <= 37 ? 2 : s.id <= 44 ? 3 : s.id <= 51 ? 4 : 5;
    CHECK(s.list == expected);
  }
  CHECK(kind_of([] { series(0); }) == ErrorKind::UnknownEntry);
  CHECK(kind_of([] { series(55); }) == ErrorKind::UnknownEntry);
}

TEST_CASE("structures per list") {
  for (const auto& s : registry()) {
    CAPTURE(s.id);
    const SeriesEntry e = build(s.id, small_params(s, 4, 1).front());
    const bool has_b = e.b.has_value(), has_j = e.j.has_value();
    switch (e.list()) {
      case 1:
        CHECK(has_b);
        CHECK(has_j);
        CHECK(e.d.has_value());
        CHECK(e.glj.has_value());
        CHECK(e.ud.has_value());
        break;
      case 2:
        CHECK(has_b);
        CHECK_FALSE(has_j);
        break;
      case 3:
        CHECK_FALSE(has_b);
        CHECK(has_j);
        break;
      case 4:
        CHECK_FALSE(has_b);
        CHECK_FALSE(has_j);
        CHECK(e.d.has_value());
        break;
      case 5:
        CHECK_FALSE(has_b);
        CHECK_FALSE(has_j);
        CHECK_FALSE(e.d.has_value());
        break;
    }
    CHECK(e.q1.ambient_dim() == e.dim);
    CHECK(e.q1.dim() == e.m);
  }
}

TEST_CASE("build examples") {
  const SeriesEntry e8 = build(8, {.p = 1, .q = 1});
  CHECK(e8.title() == "U(1,1)/O(1,1)");
  CHECK(e8.ring == Ring::R);
  CHECK(e8.dim == 4);
  CHECK(e8.b->type().kind == FormKind::Skew);
  CHECK(e8.j->epsilon() == -1);
  CHECK(detect_mu(*e8.b, *e8.j) == 1);
  CHECK(same_group(GroupName{label_of(*e8.d)}, GroupName{orthogonal(2, 2)}));

  const SeriesEntry e32 = build(32, {.n = 2});
  CHECK(e32.title() == "Sp(4,R)/GL(2,R)");
  CHECK(e32.b.has_value());
  CHECK_FALSE(e32.j.has_value());

  const SeriesEntry e54 = build(54, {.p = 1, .q = 1});
  CHECK(e54.title() == "GL(2,H)/GL(1,H)×GL(1,H)");
  CHECK(e54.ring == Ring::H);
  CHECK_FALSE(e54.b.has_value());
  CHECK_FALSE(e54.j.has_value());

  const SeriesEntry e3 = build(3, {.n = 2});
  CHECK(e3.star());
  CHECK(e3.union_text() == "∪_{p=0}^{2} GL(2,R)/O(p,2-p)");
  CHECK(build(20, {.n = 1}).union_text().find("p=1..n") != std::string::npos);
}

TEST_CASE("parameter validation") {
  CHECK(kind_of([] { build(8, {.n = 1}); }) == ErrorKind::BadParams);
  CHECK(kind_of([] { build(8, {.p = 1}); }) == ErrorKind::BadParams);
  CHECK(kind_of([] { build(32, {.n = 0}); }) == ErrorKind::BadParams);
  CHECK(kind_of([] { build(54, {.p = 0, .q = 0}); }) == ErrorKind::BadParams);
  CHECK(kind_of([] { build(99, {.n = 1}); }) == ErrorKind::UnknownEntry);
  for (const auto& s : registry()) {
    CAPTURE(s.id);
    const auto ps = enumerate_params(s, 6);
    CHECK_FALSE(ps.empty());
    for (const auto& p : ps) {
      CHECK_NOTHROW(validate_params(s, p));
      CHECK(ambient_dim(s, p) * static_cast<std::size_t>(real_rank(s.ring)) <= 24);
    }
  }
}

TEST_CASE("verify examples") {
  const VerifyOptions opt;
  const VerifyReport r11 = verify_entry(build(11, {.p = 1, .q = 1}), opt);
  CHECK(r11.pass());
  const SeriesEntry e11 = build(11, {.p = 1, .q = 1});
  REQUIRE(e11.expected_ud.has_value());
  CHECK(same_group(*e11.expected_ud, GroupName{unitary(2, 2)}));

  const SeriesEntry e38 = build(38, {.n = 1});
  CHECK(verify_entry(e38, opt).pass());
  CHECK(same_group(e38.expected_g, GroupName{gl(Ring::R, 1), gl(Ring::R, 1)}));

  for (int id : {11, 38, 45}) {
    CAPTURE(id);
    SeriesEntry e = build(id, small_params(series(id), 4, 1).front());
    corrupt_expected_groups(e);
    const VerifyReport r = verify_entry(e, opt);
    CHECK_FALSE(r.pass());
    const bool flagged = std::any_of(r.checks.begin(), r.checks.end(), [](const CheckResult& c) {
      return !c.pass && (c.name == "managing_form_type" || c.name == "group_dims" || c.name == "group_labels");
    });
    CHECK(flagged);
  }
}

TEST_CASE("small entries verify") {
  VerifyOptions opt;
  opt.trials = 5;
  opt.identity_samples = 20;
  for (const auto& s : registry()) {
    for (const auto& p : small_params(s, 4, 2)) {
      CAPTURE(s.id);
      CAPTURE(p.to_string());
      const VerifyReport r = verify_entry(build(s.id, p), opt);
      for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
      }
    }
  }
}

TEST_CASE("stabilizer embedding") {
  const SeriesEntry e13 = build(13, {.n = 1});
  const SpacePoint base = base_point(e13);
  for (int sign : {1, -1}) {
    const Matrix h1 = Matrix::identity(e13.ring, e13.m) * Scalar(sign);
    const Matrix g = stabilizer_embed(e13, h1);
    CHECK(in_group(e13.g, g));
    CHECK(act(e13, g, base) == base);
  }
  CHECK(stabilizer_embed(e13, Matrix::identity(e13.ring, 1)) == Matrix::identity(e13.ring, e13.dim));
  CHECK(kind_of([&] { stabilizer_embed(e13, Matrix::identity(e13.ring, 1) * Scalar(2)); }) == ErrorKind::NotInUDprime);

  for (int id : {1, 3, 8, 11, 19, 22, 27}) {
    CAPTURE(id);
    const SeriesEntry e = build(id, small_params(series(id), 4, 1).front());
    const GroupDescriptor udp = GroupDescriptor::preserving(restricted_managing_form(e));
    const LieAlgebra lie = lie_algebra(udp);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Matrix g = stabilizer_embed(e, cayley_sample(lie, seed));
      CHECK(in_group(e.g, g));
      CHECK(act(e, g, base_point(e)) == base_point(e));
    }
  }
  CHECK(kind_of([] { stabilizer_embed(build(32, {.n = 1}), Matrix::identity(Ring::R, 1)); }) == ErrorKind::WrongKind);
}
