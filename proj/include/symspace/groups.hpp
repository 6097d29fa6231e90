#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symspace/forms.hpp"
#include "symspace/involutions.hpp"
#include "symspace/subspace.hpp"

namespace symspace {

/// The classical families, with their displayed parameters:
/// GL(a, ring), O(a, b), O(a, C), Sp(a, R), Sp(a, C), U(a, b), Sp(a, b), SO*(a).
/// For Sp over R/C and SO* the parameter a is the (even) matrix size.
enum class Family { GL, O, OC, SpR, SpC, U, SpH, SOStar };

struct GroupLabel {
  Family family;
  Ring ring = Ring::R;  // GL only
  std::size_t a = 0;
  std::size_t b = 0;

  std::size_t real_dim() const;
  std::string to_string() const;
  bool indefinite() const { return family == Family::O || family == Family::U || family == Family::SpH; }
};

GroupLabel gl(Ring ring, std::size_t n);
GroupLabel orthogonal(std::size_t p, std::size_t q);
GroupLabel complex_orthogonal(std::size_t n);
GroupLabel real_symplectic(std::size_t size);
GroupLabel complex_symplectic(std::size_t size);
GroupLabel unitary(std::size_t p, std::size_t q);
GroupLabel quaternion_unitary(std::size_t p, std::size_t q);
GroupLabel so_star(std::size_t size);

/// Equality of groups: indefinite pairs are unordered (U(B) = U(−B)).
bool same_group(const GroupLabel& x, const GroupLabel& y);

/// A direct product of classical groups.
using GroupName = std::vector<GroupLabel>;
std::size_t real_dim(const GroupName& g);
std::string to_string(const GroupName& g);
bool same_group(const GroupName& x, const GroupName& y);

/// The group U(F) named by the type and inertia of a form.
GroupLabel label_of(const Form& f);
/// GL^J according to the species of J.
GroupName centralizer_label(const Semiinvolution& j);

/// A matrix group given by defining data: preserved form, commuting
/// semiinvolution, stabilized subspaces (all optional, combined by
/// intersection), or a block-diagonal product of such groups.
class GroupDescriptor {
 public:
  static GroupDescriptor general(Ring ring, std::size_t n);
  static GroupDescriptor preserving(const Form& f);
  static GroupDescriptor centralizer(const Semiinvolution& j);
  static GroupDescriptor preserving_and_commuting(const Form& f, const Semiinvolution& j);
  static GroupDescriptor product(std::vector<GroupDescriptor> factors);
  /// The subgroup mapping each of the given subspaces onto itself.
  GroupDescriptor stabilizing(const std::vector<Subspace>& subspaces) const;

  Ring ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  const std::optional<Form>& form() const { return form_; }
  const std::optional<Semiinvolution>& semiinvolution() const { return j_; }
  const std::vector<Subspace>& stabilized() const { return stabilized_; }
  const std::vector<GroupDescriptor>& factors() const { return factors_; }
  bool is_product() const { return !factors_.empty(); }

 private:
  GroupDescriptor(Ring ring, std::size_t dim) : ring_(ring), dim_(dim) {}

  Ring ring_;
  std::size_t dim_;
  std::optional<Form> form_;
  std::optional<Semiinvolution> j_;
  std::vector<Subspace> stabilized_;
  std::vector<GroupDescriptor> factors_;
};

/// g invertible and preserving all defining data.
bool in_group(const GroupDescriptor& g, const Matrix& m);

/// A basis (over R) of the Lie algebra, from the linearized conditions
/// XᵀG + GX = 0 / X*G + GX = 0, XC = CX / XC = C·conj(X), XU ⊂ U.
struct LieAlgebra {
  Ring ring;
  std::size_t n;
  std::vector<Matrix> basis;

  std::size_t dim() const { return basis.size(); }
};

LieAlgebra lie_algebra(const GroupDescriptor& g);
std::size_t lie_algebra_dim(const GroupDescriptor& g);

/// (1 − A)(1 + A)⁻¹; throws Singular when 1 + A is not invertible.
Matrix cayley_transform(const Matrix& a);

inline constexpr int kCayleyCoefficientBound = 3;
inline constexpr int kCayleyRetries = 32;

/// Cayley transform of a random element Σ c_i X_i of the Lie algebra with
/// integer c_i ∈ [−3, 3] drawn from std::mt19937_64(seed). Deterministic in
/// the seed. Draws with 1 ± A singular are redrawn; throws SamplerExhausted
/// after 32 of them.
Matrix cayley_sample(const LieAlgebra& lie, std::uint64_t seed);

/// For each g the three intersections
/// U(B) ∩ GL^J, U(B) ∩ U(D), U(D) ∩ GL^J must agree.
struct IdentityReport {
  std::size_t checked = 0;
  std::size_t members = 0;  // samples lying in U^J(B)
  std::vector<std::string> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

IdentityReport centralizer_identities_check(const Form& b, const Semiinvolution& j, const std::vector<Matrix>& samples);

}  // namespace symspace
