#include <algorithm>
#include <string>

#include "symspace/catalog.hpp"
#include "symspace/charts.hpp"
#include "symspace/error.hpp"
#include "symspace/spaces.hpp"

namespace symspace {

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t tag, std::uint64_t t) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (tag * 1000003ULL + t + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string dims_detail(std::size_t got, std::size_t want) {
  return "computed " + std::to_string(got) + ", expected " + std::to_string(want);
}

GroupName single(const GroupLabel& l) { return GroupName{l}; }

class Battery {
 public:
  Battery(const SeriesEntry& e, const VerifyOptions& opt) : e_(e), opt_(opt), seed_(mix(opt.seed, e.id(), 0)) {}

  VerifyReport run() {
    VerifyReport r{e_.id(), e_.params, {}};
    out_ = &r.checks;
    guarded("base_point_membership", [&] { base_point_membership(); });
    const LieAlgebra g_lie = lie_algebra(e_.g);
    guarded("sampled_action", [&] { sampled_action(g_lie); });
    if (e_.list() == 1) guarded("mu", [&] { mu(); });
    if (e_.d) guarded("managing_form_type", [&] { managing_form_type(); });
    if (e_.glj) guarded("glj_species", [&] { glj_species(); });
    guarded("group_dims", [&] { group_dims(g_lie); });
    guarded("group_labels", [&] { group_labels(); });
    if (e_.list() == 1) guarded("centralizer_identities", [&] { centralizer_identities(g_lie); });
    guarded("dimension_identity", [&] { dimension_identity(g_lie); });
    guarded("stabilizer", [&] { stabilizer(); });
    return r;
  }

 private:
  template <class F>
  void guarded(const std::string& name, F f) {
    const std::size_t before = out_->size();
    try {
      f();
    } catch (const Error& ex) {
      out_->resize(before);
      add(name, false, ex.what());
    }
  }

  void add(const std::string& name, bool pass, std::string detail = "") { out_->push_back({name, pass, std::move(detail)}); }

  void base_point_membership() { add("base_point_membership", membership(e_, base_point(e_))); }

  void sampled_action(const LieAlgebra& g_lie) {
    const SpacePoint base = base_point(e_);
    for (int t = 0; t < opt_.trials; ++t) {
      const Matrix g = cayley_sample(g_lie, mix(seed_, 1, static_cast<std::uint64_t>(t)));
      if (!in_group(e_.g, g)) return add("sampled_action", false, "sample outside G: " + g.to_string());
      if (!membership(e_, act(e_, g, base))) return add("sampled_action", false, "g·base not a member for g = " + g.to_string());
    }
    add("sampled_action", true, std::to_string(opt_.trials) + " samples");
  }

  void mu() {
    const int got = detect_mu(*e_.b, *e_.j);
    add("mu", got == e_.info->mu, "computed " + std::to_string(got) + ", listed " + std::to_string(e_.info->mu));
  }

  void managing_form_type() {
    const GroupName got = single(label_of(*e_.d));
    const GroupName& want = e_.list() == 1 ? *e_.expected_ud : e_.expected_g;
    add("managing_form_type", same_group(got, want), "computed " + to_string(got) + ", listed " + to_string(want));
  }

  void glj_species() {
    const GroupName got = centralizer_label(*e_.j);
    const std::size_t lie = lie_algebra_dim(*e_.glj);
    const bool ok = same_group(got, *e_.expected_glj) && lie == real_dim(*e_.expected_glj);
    add("glj_species", ok,
        std::string("species ") + to_char(species(*e_.j)) + ", computed " + to_string(got) + ", listed " + to_string(*e_.expected_glj) +
            ", lie dim " + std::to_string(lie));
  }

  void group_dims(const LieAlgebra& g_lie) {
    const std::size_t g = g_lie.dim(), h = lie_algebra_dim(e_.h), gs = lie_algebra_dim(e_.g_star);
    const bool ok = g == real_dim(e_.expected_g) && h == real_dim(e_.expected_h) && gs == real_dim(e_.expected_g_star);
    std::string detail = "G " + dims_detail(g, real_dim(e_.expected_g)) + "; H " + dims_detail(h, real_dim(e_.expected_h)) + "; G* " +
                         dims_detail(gs, real_dim(e_.expected_g_star));
    if (e_.ud) {
      const std::size_t ud = lie_algebra_dim(*e_.ud);
      detail += "; U(D) " + dims_detail(ud, real_dim(*e_.expected_ud));
      add("group_dims", ok && ud == real_dim(*e_.expected_ud), detail);
    } else {
      add("group_dims", ok, detail);
    }
  }

  // Labels computable from forms: the form-preserving factors of G, G* and H.
  void group_labels() {
    GroupName got_h;
    std::optional<GroupName> got_g, got_gs;
    switch (e_.list()) {
      case 1:
        got_h = single(label_of(restricted_managing_form(e_)));
        got_gs = single(label_of(*e_.b));
        break;
      case 2:
        got_g = single(label_of(*e_.b));
        got_h = single(gl(e_.ring, e_.m));
        break;
      case 4: {
        got_g = single(label_of(*e_.d));
        const Form d1(e_.d->type(), restricted_gram(*e_.d, e_.q1.basis()));
        const Form d2(e_.d->type(), restricted_gram(*e_.d, e_.q2.basis()));
        got_h = GroupName{label_of(d1), label_of(d2)};
        break;
      }
      default:
        got_h = e_.list() == 3 ? single(gl(e_.ring, e_.m)) : GroupName{gl(e_.ring, e_.m), gl(e_.ring, e_.dim - e_.m)};
        break;
    }
    bool ok = same_group(got_h, e_.expected_h);
    std::string detail = "H " + to_string(got_h) + " vs " + to_string(e_.expected_h);
    if (got_g) {
      ok = ok && same_group(*got_g, e_.expected_g);
      detail += "; G " + to_string(*got_g) + " vs " + to_string(e_.expected_g);
    }
    if (got_gs) {
      ok = ok && same_group(*got_gs, e_.expected_g_star);
      detail += "; G* " + to_string(*got_gs) + " vs " + to_string(e_.expected_g_star);
    }
    add("group_labels", ok, detail);
  }

  void centralizer_identities(const LieAlgebra& g_lie) {
    const std::vector<LieAlgebra> sources{g_lie, lie_algebra(e_.g_star), lie_algebra(*e_.ud), lie_algebra(*e_.glj),
                                          lie_algebra(GroupDescriptor::general(e_.ring, e_.dim))};
    std::vector<Matrix> samples;
    const int per = std::max(1, opt_.identity_samples / static_cast<int>(sources.size()));
    for (std::size_t s = 0; s < sources.size(); ++s)
      for (int t = 0; t < per; ++t) samples.push_back(cayley_sample(sources[s], mix(seed_, 2 + s, static_cast<std::uint64_t>(t))));
    const IdentityReport rep = centralizer_identities_check(*e_.b, *e_.j, samples);
    add("centralizer_identities", rep.ok() && rep.members >= static_cast<std::size_t>(per),
        std::to_string(rep.checked) + " samples, " + std::to_string(rep.members) + " in U^J(B)" +
            (rep.ok() ? "" : ", counterexample " + rep.counterexamples.front()));
  }

  void dimension_identity(const LieAlgebra& g_lie) {
    const std::size_t g = g_lie.dim(), h = lie_algebra_dim(e_.h), gr = grassmannian_dim(e_);
    add("dimension_identity", g == h + gr,
        "dim G " + std::to_string(g) + " − dim H " + std::to_string(h) + " vs dim Gr* " + std::to_string(gr));
  }

  void stabilizer() {
    const std::size_t stab = lie_algebra_dim(e_.g.stabilizing({e_.q1, e_.q2}));
    const std::size_t h = lie_algebra_dim(e_.h);
    bool ok = stab == h;
    std::string detail = "stabilizer lie dim " + std::to_string(stab) + ", dim H " + std::to_string(h);
    if (e_.list() == 1) {
      const LieAlgebra h_lie = lie_algebra(e_.h);
      const SpacePoint base = base_point(e_);
      for (int t = 0; t < opt_.trials && ok; ++t) {
        const Matrix h1 = cayley_sample(h_lie, mix(seed_, 9, static_cast<std::uint64_t>(t)));
        const Matrix g = stabilizer_embed(e_, h1);
        if (!in_group(e_.g, g) || !(act(e_, g, base) == base)) {
          ok = false;
          detail += "; embedding of " + h1.to_string() + " fails";
        }
      }
    }
    add("stabilizer", ok, detail);
  }

  const SeriesEntry& e_;
  const VerifyOptions& opt_;
  std::uint64_t seed_;
  std::vector<CheckResult>* out_ = nullptr;
};

}  // namespace

VerifyReport verify_entry(const SeriesEntry& e, const VerifyOptions& opt) { return Battery(e, opt).run(); }

}  // namespace symspace
