#pragma once

#include "hypermix/dynamics.hpp"
#include "hypermix/errors.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace hypermix {

using json = nlohmann::json;  // object keys serialize sorted: deterministic

json space_to_json(const Space& s);
Space space_from_json(const json& j);

/// Elements serialize as {"space": ..., "data": ...}. Exact rational fields
/// (interval endpoints, exponents) become "p/q" strings; coefficients keep
/// full round-trip precision. Normalized bivariate terms additionally carry
/// a derived raw-monomial view (coefficient / (n! l!)) for human readers;
/// it is ignored on input.
json element_to_json(const Space& s, const Element& x);
Element element_from_json(const json& j, Space* space_out = nullptr);

json ball_to_json(const BallSpec& b);
BallSpec ball_from_json(const json& j);

json op_to_json(const OperatorConfig& op);
OperatorConfig op_from_json(const json& j);

/// Report scalars (residual, delta, radius, gaps, norms, defects) are
/// rounded to 12 significant digits before serialization; element payloads
/// are not.
json certificate_to_json(const WitnessCertificate& c);
json witness_set_to_json(const WitnessSet& s);
json leading_set_to_json(const LeadingPolySet& s);
json periodic_to_json(const PeriodicVector& v, int period, int degree,
                      int root_index);
json no_witness_to_json(const NoWitnessInRange& err);

std::string decay_table_csv(const DecayTable& t);
std::string gk_table_csv(const std::vector<GkRow>& rows);

/// Canonical text form: 2-space indent, sorted keys, trailing newline.
std::string dump_json(const json& j);

}  // namespace hypermix
