#pragma once

#include "sympdef/deformation.hpp"
#include "sympdef/dgla.hpp"

#include <json.hpp>

namespace sympdef {

using Json = nlohmann::ordered_json;

Json to_json(const Space &space);
Space space_from_json(const Json &j);

/// { generators: [names], ideal: [polynomial strings], order: p }
Json to_json(const ArtinPtr &algebra);
ArtinPtr algebra_from_json(const Json &j);

/// { space, base, degree, terms: [{coeff, exponents, form, base_monomial}] }
Json to_json(const RelForm &form);
RelForm form_from_json(const Json &j);

Json to_json(const Deformation &d);
Deformation deformation_from_json(const Json &j);

Json to_json(const PeriodPoint &p);
Json to_json(const KsClass &ks, const ArtinPtr &base);
Json to_json(const Report &report);

/// { range, dims, d: [{from_deg, matrix}], bracket: [{i, j, tensor}],
///   labels (optional) }, rationals as strings.
DglaSpec dgla_from_json(const Json &j);
Json to_json(const DglaSpec &spec);

/// Mini grammar for deformation bases: "t^k" is Q[t]/t^k, "m^k(s,t)" is
/// Q[s,t]/m^k, anything starting with '{' is the JSON form.
ArtinPtr parse_base(const std::string &spec);

} // namespace sympdef
