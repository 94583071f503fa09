// JSON schemas for simplicial sets, categories, and reports. Emission uses
// ordered documents so serialization is byte-stable.
#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "sstk/adjunction.hpp"
#include "sstk/homotopy.hpp"
#include "sstk/horn.hpp"
#include "sstk/necklace.hpp"
#include "sstk/sset.hpp"

namespace sstk {

using Json = nlohmann::ordered_json;

/// Parse with a position-bearing diagnostic wrapped in input_error.
Json parse_json(const std::string& text, const std::string& what);

Json sset_to_json(const SimplicialSet& X);
Json semi_to_json(const SemisimplicialSet& X);
bool json_has_degeneracies(const Json& j);
SimplicialSet sset_from_json(const Json& j);
SemisimplicialSet semi_from_json(const Json& j);

Json category_to_json(const FiniteCategory& C);
FiniteCategory category_from_json(const Json& j);

/// Simplicial-set document plus the (base, surjection) provenance table.
Json plus_to_json(const PlusSet& P);

Json horn_to_json(const HornInstance& h);
Json quasireport_to_json(const QuasiReport& r);
Json homology_to_json(const std::vector<AbelianGroup>& groups);
Json presentation_to_json(const GroupPresentation& P, const TrivialityResult& t);
Json triangle_to_json(const TriangleReport& r);
Json contractibility_to_json(const ContractibilityReport& r);
Json finality_to_json(const FinalityReport& r);
Json f_iso_to_json(const FIsoReport& r);
Json probe_to_json(const MappingSpaceProbe& r);

}  // namespace sstk
