#pragma once

#include <json.hpp>

#include "alexandria/certify.hpp"
#include "alexandria/pencil.hpp"
#include "alexandria/singularities.hpp"

namespace alexandria {

using json = nlohmann::json;

// [[exponent, numerator, denominator], ...], ascending exponents; values are
// JSON numbers when they fit, decimal strings otherwise.
json poly_to_triples(const LaurentPoly& p);
LaurentPoly poly_from_triples(const json& j);

// {"free_rank": n, "primaries": [[poly-text, power], ...]}
json module_to_json(const CycModule& m);
CycModule module_from_json(const json& j);

// nested arrays of polynomial text, rows of entries
json matrix_to_json(const LaurentMatrix& m);
LaurentMatrix matrix_from_json(const json& j);

// {"brieskorn":[2,3]} | {"char_pair":[3,2]} | {"poly":"t^2-t+1"} |
// {"nodal_cuspidal":{"delta":0,"kappa":6}}
json descriptor_to_json(const SingularityDescriptor& s);
SingularityDescriptor descriptor_from_json(const json& j);

json hypersurface_to_json(const GlobalHypersurface& h);
GlobalHypersurface hypersurface_from_json(const json& j);

json report_to_json(const DivisibilityReport& r);
DivisibilityReport report_from_json(const json& j);

json family_to_json(const FamilyDescription& f);
FamilyDescription family_from_json(const json& j);

struct PencilInput {
  bool generic = false;
  int strands = 2;
  int fiber_rank = 1;
  std::vector<PencilFiber> fibers;
  std::vector<LaurentMatrix> monodromies;
  std::vector<LaurentMatrix> degenerations;
};

PencilInput pencil_input_from_json(const json& j);

}  // namespace alexandria
