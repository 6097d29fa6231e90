#include <fstream>
#include <functional>
#include <iostream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "entries.hpp"
#include "isotropy.hpp"
#include "symspace/cli.hpp"
#include "symspace/error.hpp"
#include "symspace/invariants.hpp"

using namespace symspace;
using nlohmann::json;
using symspace::testing::small_params;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

bool boundary(const Error& e) {
  return e.kind() == ErrorKind::NotTransverse || e.kind() == ErrorKind::ChartBoundary || e.kind() == ErrorKind::Singular;
}

std::vector<SeriesEntry> one_per_series() {
  std::vector<SeriesEntry> out;
  for (const auto& s : registry()) out.push_back(build(s.id, small_params(s, 4, 1).front()));
  return out;
}

std::string where(const SeriesEntry& e) { return "entry " + std::to_string(e.id()) + " (" + e.params.to_string() + ")"; }

json g_verify;  // criterion 2's report, reused by criterion 3

Outcome catalog_cardinality() {
  std::set<int> stars;
  for (const auto& s : registry())
    if (s.star) stars.insert(s.id);
  if (registry().size() != 54) return {false, std::to_string(registry().size()) + " entries"};
  if (stars != std::set<int>{3, 5, 14, 15, 20, 26, 30, 45, 49, 50}) return {false, "wrong ★ set"};
  std::ifstream in(std::string(SYMSPACE_TEST_DATA) + "/golden/catalog_list.txt");
  std::stringstream golden;
  golden << in.rdbuf();
  std::ostringstream out, err;
  if (run_cli({"catalog", "list"}, out, err) != kExitOk || out.str() != golden.str()) return {false, "catalog list differs from golden"};
  return {true, "54 entries, 10 ★, listing matches golden"};
}

Outcome full_conformance() {
  std::ostringstream out, err;
  const int code = run_cli({"verify", "all", "--max-dim", "6", "--trials", "20", "--seed", "7", "--json"}, out, err);
  g_verify = json::parse(out.str());
  const std::string summary = std::to_string(g_verify["runs"].get<int>()) + " parameter sets, " +
                              std::to_string(g_verify["failures"].get<int>()) + " failing";
  return {code == kExitOk, "exit " + std::to_string(code) + ", " + summary};
}

Outcome dimension_identity() {
  std::size_t checked = 0;
  for (const auto& rep : g_verify["reports"])
    for (const auto& c : rep["checks"])
      if (c["name"] == "dimension_identity") {
        if (!c["pass"].get<bool>()) return {false, "entry " + std::to_string(rep["entry"].get<int>()) + ": " + c["detail"].get<std::string>()};
        ++checked;
      }
  const std::size_t runs = g_verify["runs"].get<std::size_t>();
  return {checked == runs && runs > 0, std::to_string(checked) + "/" + std::to_string(runs) + " parameter sets"};
}

// Criteria 4 and 5 share the sampled coordinates.
struct ChartStats {
  bool round_trip = true, action = true, shape = true, list1 = true;
  std::string failure;
  std::size_t points = 0, actions = 0;
};

ChartStats chart_battery() {
  ChartStats st;
  for (const auto& e : one_per_series()) {
    const LieAlgebra lie = lie_algebra(e.g);
    const Chart c = make_chart(e, base_point(e));
    std::size_t got = 0;
    for (std::uint64_t seed = 0; seed < 1000 && got < 100; ++seed) {
      const SpacePoint pt = sample_point(e, lie, seed);
      AngularCoords mn;
      try {
        mn = to_coords(e, c, pt);
      } catch (const Error& err) {
        if (boundary(err)) continue;
        throw;
      }
      ++got;
      if (!shape_conditions(e, c, mn).ok()) {
        st.shape = false;
        st.failure = where(e) + " shape";
      }
      if (e.list() == 1 &&
          !(isotropy_condition(*e.b, c.x, c.y, mn.m) && orthogonality_condition(*e.d, c, mn) && exchange_condition(*e.j, c, mn))) {
        st.list1 = false;
        st.failure = where(e) + " List 1 conditions";
      }
      if (from_coords(e, c, mn) != pt) {
        st.round_trip = false;
        st.failure = where(e) + " round trip";
      }
    }
    if (got < 100) {
      st.round_trip = false;
      st.failure = where(e) + " too few transverse samples";
    }
    st.points += got;
    std::size_t acted = 0;
    for (std::uint64_t seed = 0; seed < 1000 && acted < 50; ++seed) {
      const Matrix g = cayley_sample(lie, 7000 + seed);
      const SpacePoint pt = sample_point(e, lie, 3000 + seed);
      try {
        const AngularCoords lhs = to_coords(e, c, act(e, g, pt));
        const AngularCoords rhs = act_on_coords(c, g, to_coords(e, c, pt));
        ++acted;
        if (!(lhs == rhs)) {
          st.action = false;
          st.failure = where(e) + " action";
        }
      } catch (const Error& err) {
        if (!boundary(err)) throw;
      }
    }
    if (acted < 50) {
      st.action = false;
      st.failure = where(e) + " too few action samples";
    }
    st.actions += acted;
  }
  return st;
}

ChartStats g_charts;

Outcome charts_round_trip() {
  g_charts = chart_battery();
  const bool ok = g_charts.round_trip && g_charts.action;
  return {ok, ok ? std::to_string(g_charts.points) + " round trips, " + std::to_string(g_charts.actions) + " action checks" : g_charts.failure};
}

Outcome shape_conditions_hold() {
  const bool ok = g_charts.shape && g_charts.list1;
  return {ok, ok ? std::to_string(g_charts.points) + " coordinate pairs" : g_charts.failure};
}

Outcome double_ratio_invariance() {
  std::size_t pairs = 0;
  for (const auto& e : one_per_series()) {
    const LieAlgebra lie = lie_algebra(e.g);
    const Chart c = make_chart(e, base_point(e));
    std::size_t got = 0;
    for (std::uint64_t seed = 0; seed < 1000 && got < 30; ++seed) {
      const SpacePoint p1 = sample_point(e, lie, 2 * seed), p2 = sample_point(e, lie, 2 * seed + 1);
      const Matrix g = cayley_sample(lie, 9000 + seed);
      try {
        const DoubleRatio d = double_ratio(e, p1, p2);
        const Matrix op = coordinate_double_ratio(to_coords(e, c, p1), to_coords(e, c, p2));
        ++got;
        if (!(double_ratio(e, act(e, g, p1), act(e, g, p2)) == d)) return {false, where(e) + " not invariant"};
        if (!(charpoly_of(op) == d)) return {false, where(e) + " coordinate formula disagrees"};
      } catch (const Error& err) {
        if (!boundary(err)) throw;
      }
    }
    if (got < 30) return {false, where(e) + " too few transverse pairs"};
    pairs += got;
  }
  const SeriesEntry e52 = build(52, {.p = 1, .q = 1});
  const auto line = [](const mpq_class& s) { return Subspace(Matrix(Ring::R, {{1}, {Scalar(s)}})); };
  std::mt19937_64 rng(52);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  const auto rat = [&] {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
  };
  std::size_t quads = 0;
  while (quads < 100) {
    const mpq_class x1 = rat(), x2 = rat(), x3 = rat(), x4 = rat();
    if (x1 == x3 || x1 == x4 || x2 == x3 || x2 == x4 || x1 == x2 || x3 == x4) continue;
    const DoubleRatio d = double_ratio(e52, make_point(e52, line(x1), line(x2)), make_point(e52, line(x3), line(x4)));
    const mpq_class classical = ((x1 - x3) * (x2 - x4)) / ((x1 - x4) * (x2 - x3));
    if (!(d.charpoly[1] == Scalar(-classical))) return {false, "cross-ratio mismatch"};
    ++quads;
  }
  return {true, std::to_string(pairs) + " invariant pairs, 100 cross-ratio quadruples"};
}

Outcome star_components() {
  std::size_t actions = 0, labels = 0;
  for (const auto& s : registry()) {
    if (!s.star) continue;
    for (const auto& p : enumerate_params(s, 6)) {
      const bool small = p.n ? *p.n <= 2 : (*p.p + *p.q <= 2);
      if (!small) continue;
      const SeriesEntry e = build(s.id, p);
      const LieAlgebra lie = lie_algebra(e.g);
      const std::vector<Inertia> range = component_range(e);
      std::set<Inertia> want(range.begin(), range.end()), got;
      for (const auto& pt : component_points(e)) {
        const Inertia label = component_index(e, pt);
        got.insert(label);
        for (std::uint64_t seed = 0; seed < 20; ++seed, ++actions)
          if (component_index(e, act(e, cayley_sample(lie, seed), pt)) != label) return {false, where(e) + " label moved"};
      }
      if (got != want) return {false, where(e) + " missing labels"};
      labels += got.size();
    }
  }
  return {true, std::to_string(labels) + " labels realized, " + std::to_string(actions) + " stable actions"};
}

Outcome isotropy_batteries() {
  std::vector<SeriesEntry> entries;
  for (const auto& s : registry())
    if (s.list == 1)
      for (const auto& p : small_params(s, 4, 2)) entries.push_back(build(s.id, p));
  std::vector<LieAlgebra> ub;
  for (const auto& e : entries) ub.push_back(lie_algebra(GroupDescriptor::preserving(*e.b)));
  for (std::uint64_t t = 0; t < 100; ++t) {
    const std::size_t k = t % entries.size();
    if (!symspace::testing::isotropy_trial(entries[k], ub[k], t)) return {false, where(entries[k]) + " J·U not isotropic"};
    if (!symspace::testing::orthocomplement_trial(entries[k], ub[k], 100 + t))
      return {false, where(entries[k]) + " J·P differs from the D-orthocomplement"};
  }
  return {true, "100 isotropy and 100 orthocomplement trials over " + std::to_string(entries.size()) + " List 1 instances"};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"catalog cardinality", catalog_cardinality},
      {"full conformance (verify all --max-dim 6 --trials 20 --seed 7)", full_conformance},
      {"open-embedding dimension identity", dimension_identity},
      {"chart round trip and action compatibility", charts_round_trip},
      {"shape conditions", shape_conditions_hold},
      {"double-ratio invariance", double_ratio_invariance},
      {"★ component structure", star_components},
      {"J-isotropy and orthocomplement batteries", isotropy_batteries},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& ex) {
      o = {false, std::string("threw ") + ex.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << index << "  " << name << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
