#ifndef BRANCHFORGE_REPORT_HPP
#define BRANCHFORGE_REPORT_HPP

#include <json.hpp>
#include <string>

#include "branchforge/equising.hpp"
#include "branchforge/irreducible.hpp"
#include "branchforge/puiseux.hpp"

namespace branchforge {

using Json = nlohmann::ordered_json;

Json json_semigroup(const SemigroupData& s);
Json json_char(const CharData& c);
Json json_polygon(const NewtonPolygon& P);
Json json_gen_polygon(const GenNewtonPolygon& G);
Json json_ledger(const ResolutionLedger& L);
Json json_irreducibility(const IrreducibilityReport& rep);
Json json_equisingularity(const EquisingularityReport& rep);
Json json_param(const PuiseuxParam& p);

/// One stable envelope for every subcommand.
Json envelope(const std::string& command, const std::string& input, const std::string& verdict,
              Json data, Json witness, long timing_ms);

}  // namespace branchforge

#endif
