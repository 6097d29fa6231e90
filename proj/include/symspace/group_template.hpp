#pragma once

#include <map>
#include <string>

#include "symspace/groups.hpp"

namespace symspace {

/// Integer bindings for the parameter letters used in group templates.
using Bindings = std::map<char, long>;

/// Group templates in the notation of the classical lists, e.g.
/// "O(p,q)^2", "GL(2n,C)", "U(r,s)×U(p-r,q-s)", "Sp(2(k+l),R)", "SO*(4n)".
/// Arguments are linear expressions in single-letter parameters, or one of
/// the ring letters R, C, H.
///
/// Throws Parse on malformed templates and BadParams when a parameter is
/// unbound or an argument evaluates negative.
GroupName evaluate_template(const std::string& tmpl, const Bindings& b);

/// The template with bound letters substituted and the rest kept symbolic;
/// "^2" is expanded to a repeated factor.
std::string render_template(const std::string& tmpl, const Bindings& b);

}  // namespace symspace
