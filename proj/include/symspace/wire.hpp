#pragma once

#include <nlohmann/json.hpp>

#include "symspace/catalog.hpp"
#include "symspace/charts.hpp"
#include "symspace/invariants.hpp"
#include "symspace/spaces.hpp"

namespace symspace::wire {

using nlohmann::json;

// Schemas are documented in docs/wire.md. Every reader throws Error(Parse)
// on malformed input.

/// ["a"] over R, ["a","b"] over C, ["a","b","c","d"] over H; entries are
/// exact rationals "p/q" or integers.
json to_json(const Scalar& s, Ring ring);
Scalar scalar_from_json(const json& j, Ring ring);

/// Nested rows of scalars.
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j, Ring ring, std::size_t rows, std::size_t cols);
Matrix matrix_from_json(const json& j, Ring ring);

json to_json(const Subspace& u);
Subspace subspace_from_json(const json& j);

json to_json(const Form& f);
Form form_from_json(const json& j);

json to_json(const Semiinvolution& s);
Semiinvolution semiinvolution_from_json(const json& j);

json to_json(const Params& p);
Params params_from_json(const json& j);

json to_json(const SpacePoint& pt);
SpacePoint point_from_json(const json& j);

json to_json(const AngularCoords& c);
AngularCoords coords_from_json(const json& j);

json to_json(const DoubleRatio& d);
DoubleRatio double_ratio_from_json(const json& j);

json to_json(const VerifyReport& r);

/// The instantiated entry: structures, μ, groups and base point.
json describe(const SeriesEntry& e);

}  // namespace symspace::wire
