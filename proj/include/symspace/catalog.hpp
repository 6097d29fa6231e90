#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symspace/forms.hpp"
#include "symspace/group_template.hpp"
#include "symspace/groups.hpp"
#include "symspace/involutions.hpp"
#include "symspace/subspace.hpp"

namespace symspace {

/// Parameters of a series; only the letters used by the entry are set.
struct Params {
  std::optional<long> n{}, m{}, p{}, q{}, k{}, l{};

  Bindings bindings() const;
  std::string to_string() const;  // "p=1,q=1"
  friend bool operator==(const Params&, const Params&) = default;
};

/// Which parameter letters a series takes.
enum class ParamShape { PQ, N, PQM, KL, NM };

const char* parameter_letters(ParamShape s);  // "pq", "n", "pqm", "kl", "nm"

/// Static description of one of the 54 series.
struct SeriesInfo {
  int id;
  int list;
  bool star;
  Ring ring;
  ParamShape shape;
  std::string g;       // group templates
  std::string h;
  std::string g_star;
  std::string glj;     // List 1 and 3
  std::string ud;      // List 1
  std::string union_text;  // ★ entries
  // List 1 / List 2: the underlying form
  std::optional<FormKind> b_kind;
  // List 1 / List 3: the semiinvolution
  std::optional<Linearity> linearity;
  int epsilon = 0;
  int mu = 0;  // List 1
  // List 1: Q1 = K^m with m = p+q, n or 2n
  int m_factor = 1;
  // List 4: the managing form
  std::optional<FormKind> d_kind;

  std::string title() const;  // "G/H" in template notation
};

const std::vector<SeriesInfo>& registry();
/// Throws UnknownEntry for ids outside 1..54.
const SeriesInfo& series(int id);

/// An instantiated series with its canonical space, structures, groups and
/// base point.
struct SeriesEntry {
  const SeriesInfo* info;
  Params params;
  Ring ring;
  std::size_t dim;  // K-dimension of V
  std::size_t m;    // dim Q1
  std::optional<Form> b;
  std::optional<Semiinvolution> j;
  std::optional<Form> d;  // managing form (List 1: computed from B and J; List 4: given)
  GroupDescriptor g;
  GroupDescriptor g_star;
  GroupDescriptor h;  // abstract stabilizer: U(D') for List 1, GL-type or product otherwise
  std::optional<GroupDescriptor> glj;
  std::optional<GroupDescriptor> ud;
  Subspace q1;
  Subspace q2;
  // Expected groups from the lists, evaluated at the parameters; for ★
  // entries H is the component of the base point.
  GroupName expected_g, expected_h, expected_g_star;
  std::optional<GroupName> expected_glj, expected_ud;

  int id() const { return info->id; }
  int list() const { return info->list; }
  bool star() const { return info->star; }
  std::string title() const;  // instantiated G/H (★: with the union index kept)
  /// ★ entries: the union over components, e.g. "∪_{p=0}^{2} GL(2,R)/O(p,2-p)".
  std::string union_text() const;
};

/// Throws BadParams for missing, superfluous or out-of-range parameters.
SeriesEntry build(int id, const Params& params);
void validate_params(const SeriesInfo& s, const Params& params);

/// K-dimension of V for the given parameters.
std::size_t ambient_dim(const SeriesInfo& s, const Params& params);
/// Every valid parameter choice with ambient K-dimension ≤ max_dim.
std::vector<Params> enumerate_params(const SeriesInfo& s, std::size_t max_dim);

/// The restriction D' of the managing form to Q1 (List 1), as a form on K^m.
Form restricted_managing_form(const SeriesEntry& e);

/// Extends h₁ ∈ U(D') to g = h₁ on Q1 and J h₁ J⁻¹ on Q2 (List 1).
/// Throws NotInUDprime when h₁ does not preserve D'.
Matrix stabilizer_embed(const SeriesEntry& e, const Matrix& h1);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyReport {
  int id;
  Params params;
  std::vector<CheckResult> checks;

  bool pass() const;
};

struct VerifyOptions {
  int trials = 20;
  std::uint64_t seed = 7;
  int identity_samples = 100;
};

/// The conformance battery for one instantiated entry.
VerifyReport verify_entry(const SeriesEntry& e, const VerifyOptions& opt);

/// Mutates the expected U(D) (or, outside List 1, the expected G) so that the
/// group-type checks must fail; used as a negative control.
void corrupt_expected_groups(SeriesEntry& e);

}  // namespace symspace
