#include "symspace/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "symspace/catalog.hpp"
#include "symspace/error.hpp"
#include "symspace/invariants.hpp"
#include "symspace/spaces.hpp"
#include "symspace/wire.hpp"

namespace symspace {

namespace {

using wire::json;

std::string ambient_template(const SeriesInfo& s) {
  switch (s.list) {
    case 1:
      if (s.shape == ParamShape::PQ) return "2(p+q)";
      return s.m_factor == 1 ? "2n" : "4n";
    case 2:
    case 3: return "2n";
    case 4:
      if (s.shape == ParamShape::PQM) return "p+q";
      return s.shape == ParamShape::KL ? "2(k+l)" : "n+m";
    default: return "p+q";
  }
}

std::string signed_one(int sign) { return sign == 1 ? "1" : "−1"; }

// Second line of the entry format: the space and its structures.
std::string structure_line(const SeriesInfo& s, const std::string& ambient) {
  std::string line = "V = " + std::string(to_string(s.ring)) + "^" + (ambient.size() > 1 ? "{" + ambient + "}" : ambient);
  if (s.b_kind) line += ", B " + std::string(to_string(*s.b_kind));
  if (s.linearity) line += ", J " + std::string(s.linearity == Linearity::Linear ? "linear" : "antilinear") + ", J² = " + signed_one(s.epsilon);
  if (s.list == 1) {
    const std::string bvw = s.linearity == Linearity::Antilinear ? "conj B(v,w)" : "B(v,w)";
    line += ", B(Jv,Jw) = " + std::string(s.mu == 1 ? "" : "−") + bvw;
  }
  if (s.d_kind) line += ", D " + std::string(to_string(*s.d_kind));
  return line;
}

void print_static(const SeriesInfo& s, std::ostream& out) {
  const std::string pad = "    ";
  out << s.id << (s.star ? "★" : "") << "  " << (s.star ? s.union_text : s.title()) << "\n";
  out << pad << structure_line(s, ambient_template(s)) << "\n";
  out << pad << "G* = " << render_template(s.g_star, {}) << "\n";
  if (s.list == 1)
    out << pad << "GL^J = " << render_template(s.glj, {}) << ", U(D) = " << render_template(s.ud, {}) << "\n";
  else if (s.list == 3)
    out << pad << "GL^J = " << render_template(s.glj, {}) << "\n";
  else
    out << pad << "H = " << render_template(s.h, {}) << "\n";
  out << pad << "parameters: " << parameter_letters(s.shape) << "\n";
}

void print_entry(const SeriesEntry& e, std::ostream& out) {
  const SeriesInfo& s = *e.info;
  const std::string pad = "    ";
  out << s.id << (s.star ? "★" : "") << "  " << (s.star ? e.union_text() : e.title()) << "\n";
  out << pad << structure_line(s, std::to_string(e.dim)) << "\n";
  out << pad << "G* = " << to_string(e.expected_g_star) << "\n";
  if (s.list == 1)
    out << pad << "GL^J = " << to_string(*e.expected_glj) << ", U(D) = " << to_string(*e.expected_ud) << "\n";
  else if (s.list == 3)
    out << pad << "GL^J = " << to_string(*e.expected_glj) << "\n";
  else
    out << pad << "H = " << to_string(e.expected_h) << "\n";
  out << pad << "parameters: " << e.params.to_string() << "\n";
  if (s.list == 1) out << pad << "μ = " << signed_one(detect_mu(*e.b, *e.j)) << ", species " << to_char(species(*e.j)) << "\n";
  out << pad << "base point in " << to_string(e.expected_g) << "/" << to_string(e.expected_h) << "\n";
  out << pad << "Q1 = " << e.q1.basis().to_string() << "\n";
  out << pad << "Q2 = " << e.q2.basis().to_string() << "\n";
}

json static_json(const SeriesInfo& s) {
  json out{{"entry", s.id},
           {"list", s.list},
           {"star", s.star},
           {"series", s.title()},
           {"ring", to_string(s.ring)},
           {"ambient_dim", ambient_template(s)},
           {"structures", structure_line(s, ambient_template(s))},
           {"G", render_template(s.g, {})},
           {"H", render_template(s.h, {})},
           {"G_star", render_template(s.g_star, {})},
           {"parameters", parameter_letters(s.shape)}};
  if (s.star) out["union"] = s.union_text;
  if (!s.glj.empty()) out["GL_J"] = render_template(s.glj, {});
  if (!s.ud.empty()) out["U_D"] = render_template(s.ud, {});
  return out;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::UnknownEntry:
    case ErrorKind::BadParams:
    case ErrorKind::Parse:
    case ErrorKind::ShapeViolation:
    case ErrorKind::DimensionMismatch:
      return kExitUsage;
    case ErrorKind::NotTransverse:
    case ErrorKind::ChartBoundary:
      return kExitDegenerate;
    default:
      return kExitCheckFailed;
  }
}

int report_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
  err << json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << "\n";
  return code;
}

struct Common {
  int id = 0;
  std::string target;
  Params params;
  std::optional<std::uint64_t> seed;
  int trials = 20;
  std::size_t max_dim = 6;
  bool json_out = false;
  std::string input;
  std::optional<int> corrupt;
};

void add_param_options(CLI::App* sub, Common& c) {
  sub->add_option_function<long>("--n", [&c](const long& v) { c.params.n = v; }, "parameter n");
  sub->add_option_function<long>("--m", [&c](const long& v) { c.params.m = v; }, "parameter m");
  sub->add_option_function<long>("--p", [&c](const long& v) { c.params.p = v; }, "parameter p");
  sub->add_option_function<long>("--q", [&c](const long& v) { c.params.q = v; }, "parameter q");
  sub->add_option_function<long>("--k", [&c](const long& v) { c.params.k = v; }, "parameter k");
  sub->add_option_function<long>("--l", [&c](const long& v) { c.params.l = v; }, "parameter l");
}

void add_seed_option(CLI::App* sub, Common& c) {
  sub->add_option_function<std::uint64_t>("--seed", [&c](const std::uint64_t& v) { c.seed = v; }, "random seed (default: $SYMM_SEED or 7)");
}

std::uint64_t resolve_seed(const Common& c) {
  if (c.seed) return *c.seed;
  if (const char* env = std::getenv("SYMM_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, std::string("SYMM_SEED is not an integer: ") + env);
    }
  }
  return 7;
}

bool has_params(const Params& p) { return !p.bindings().empty(); }

int cmd_list(const Common& c, std::ostream& out) {
  if (!c.json_out) {
    out << catalog_listing();
    return kExitOk;
  }
  json rows = json::array();
  for (const auto& s : registry()) rows.push_back(static_json(s));
  out << rows.dump() << "\n";
  return kExitOk;
}

int cmd_show(const Common& c, std::ostream& out) {
  const SeriesInfo& s = series(c.id);
  if (!has_params(c.params)) {
    if (c.json_out)
      out << static_json(s).dump() << "\n";
    else
      print_static(s, out);
    return kExitOk;
  }
  const SeriesEntry e = build(c.id, c.params);
  if (c.json_out) {
    out << wire::describe(e).dump() << "\n";
  } else {
    print_entry(e, out);
  }
  return kExitOk;
}

int cmd_verify(const Common& c, std::ostream& out) {
  VerifyOptions opt;
  opt.trials = c.trials;
  opt.seed = resolve_seed(c);
  std::vector<std::pair<int, Params>> runs;
  if (c.target == "all") {
    if (has_params(c.params)) throw Error(ErrorKind::BadParams, "parameters cannot be combined with 'all'");
    for (const auto& s : registry())
      for (const auto& p : enumerate_params(s, c.max_dim)) runs.emplace_back(s.id, p);
  } else {
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(c.target, &used);
      if (used != c.target.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw Error(ErrorKind::UnknownEntry, "expected an entry id or 'all', got '" + c.target + "'");
    }
    const SeriesInfo& s = series(id);
    if (has_params(c.params))
      runs.emplace_back(id, c.params);
    else
      for (const auto& p : enumerate_params(s, c.max_dim)) runs.emplace_back(id, p);
  }
  std::vector<VerifyReport> results(runs.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t t; (t = next++) < runs.size();) {
      SeriesEntry e = build(runs[t].first, runs[t].second);
      if (c.corrupt && *c.corrupt == runs[t].first) corrupt_expected_groups(e);
      results[t] = verify_entry(e, opt);
    }
  };
  const std::size_t jobs = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), runs.size());
  std::vector<std::future<void>> pool;
  for (std::size_t w = 0; w < jobs; ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();

  json reports = json::array();
  std::size_t failures = 0;
  for (std::size_t t = 0; t < runs.size(); ++t) {
    const auto& [id, params] = runs[t];
    const VerifyReport& r = results[t];
    if (!r.pass()) ++failures;
    if (c.json_out) {
      reports.push_back(wire::to_json(r));
      continue;
    }
    out << (r.pass() ? "PASS" : "FAIL") << "  " << std::setw(2) << id << "  " << params.to_string() << "  (" << r.checks.size() << " checks)\n";
    for (const auto& check : r.checks)
      if (!check.pass) out << "      " << check.name << ": " << check.detail << "\n";
  }
  if (c.json_out) {
    out << json{{"seed", opt.seed}, {"trials", opt.trials}, {"max_dim", c.max_dim}, {"runs", runs.size()}, {"failures", failures},
                {"pass", failures == 0}, {"reports", reports}}
               .dump(2)
        << "\n";
  } else {
    out << runs.size() << " parameter sets, " << failures << " failing\n";
  }
  return failures == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_sample(const Common& c, std::ostream& out) {
  const SeriesEntry e = build(c.id, c.params);
  const SpacePoint pt = sample_point(e, lie_algebra(e.g), resolve_seed(c));
  out << wire::to_json(pt).dump() << "\n";
  return kExitOk;
}

json read_json_input(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    in = &file;
  }
  try {
    return json::parse(*in);
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::Parse, ex.what());
  }
}

int cmd_double_ratio(const Common& c, std::ostream& out) {
  const SeriesEntry e = build(c.id, c.params);
  SpacePoint pt1, pt2;
  if (c.input.empty()) {
    const LieAlgebra lie = lie_algebra(e.g);
    const std::uint64_t seed = resolve_seed(c);
    pt1 = sample_point(e, lie, seed);
    pt2 = sample_point(e, lie, seed ^ 0xD1B54A32D192ED03ULL);
  } else {
    const json in = read_json_input(c.input);
    if (!in.is_object() || !in.contains("pt1") || !in.contains("pt2")) throw Error(ErrorKind::Parse, "input needs fields pt1 and pt2");
    pt1 = wire::point_from_json(in["pt1"]);
    pt2 = wire::point_from_json(in["pt2"]);
  }
  for (const SpacePoint* pt : {&pt1, &pt2}) {
    if (pt->entry != e.id() || !(pt->params == e.params)) throw Error(ErrorKind::ShapeViolation, "point belongs to a different entry");
    if (!membership(e, *pt)) throw Error(ErrorKind::ShapeViolation, "input point is not a point of the space");
  }
  out << wire::to_json(double_ratio(e, pt1, pt2)).dump() << "\n";
  return kExitOk;
}

int cmd_dims(const Common& c, std::ostream& out) {
  const SeriesEntry e = build(c.id, c.params);
  out << json{{"entry", e.id()},
              {"params", wire::to_json(e.params)},
              {"dim_G", lie_algebra_dim(e.g)},
              {"dim_H", lie_algebra_dim(e.h)},
              {"dim_Gr", grassmannian_dim(e)}}
             .dump()
      << "\n";
  return kExitOk;
}

}  // namespace

std::string catalog_listing() {
  std::ostringstream out;
  for (const auto& s : registry())
    out << std::setw(2) << s.id << (s.star ? "★" : " ") << "  List " << s.list << "  " << s.title() << "\n";
  return out.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classical pseudo-Riemannian symmetric spaces as pairs of subspaces", "symspace"};
  app.require_subcommand(1);
  Common c;

  CLI::App* catalog = app.add_subcommand("catalog", "inspect the 54 series");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "one row per series");
  list->add_flag("--json", c.json_out, "JSON output");
  CLI::App* show = catalog->add_subcommand("show", "one series, instantiated when parameters are given");
  show->add_option("id", c.id, "series id 1..54")->required();
  add_param_options(show, c);
  show->add_flag("--json", c.json_out, "JSON output");

  CLI::App* verify = app.add_subcommand("verify", "run the conformance battery");
  verify->add_option("target", c.target, "series id or 'all'")->required();
  add_param_options(verify, c);
  add_seed_option(verify, c);
  verify->add_option("--trials", c.trials, "sampled group elements per check")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-dim", c.max_dim, "largest ambient dimension over the series' ring");
  verify->add_flag("--json", c.json_out, "JSON output");
  verify->add_option_function<int>("--corrupt", [&c](const int& v) { c.corrupt = v; })->group("");

  CLI::App* sample = app.add_subcommand("sample", "a random point of the space");
  sample->add_option("id", c.id, "series id")->required();
  add_param_options(sample, c);
  add_seed_option(sample, c);

  CLI::App* dr = app.add_subcommand("double-ratio", "characteristic polynomial of the double ratio of two points");
  dr->add_option("id", c.id, "series id")->required();
  add_param_options(dr, c);
  add_seed_option(dr, c);
  dr->add_option("--input", c.input, "JSON file with {\"pt1\", \"pt2\"}, or - for stdin; sampled points otherwise");

  CLI::App* dims = app.add_subcommand("dims", "dim G, dim H and dim Gr*");
  dims->add_option("id", c.id, "series id")->required();
  add_param_options(dims, c);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    return report_error(err, "Usage", ex.what(), kExitUsage);
  }

  try {
    if (list->parsed()) return cmd_list(c, out);
    if (show->parsed()) return cmd_show(c, out);
    if (verify->parsed()) return cmd_verify(c, out);
    if (sample->parsed()) return cmd_sample(c, out);
    if (dr->parsed()) return cmd_double_ratio(c, out);
    if (dims->parsed()) return cmd_dims(c, out);
  } catch (const Error& ex) {
    const int code = exit_code_for(ex.kind());
    return report_error(err, std::string(to_string(ex.kind())), ex.what(), code);
  }
  return report_error(err, "Usage", "no command", kExitUsage);
}

}  // namespace symspace
