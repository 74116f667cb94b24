#pragma once

#include <json.hpp>

#include "cotstruct/verify.hpp"

namespace cotstruct {

using Json = nlohmann::json;

Json json_of(const ChainMap& f);
Json json_of(const Complex& x);  // summary: support, summand counts, cohomology
Json json_of(const HomWitness& w);
Json json_of(const HomSpaceBasis& basis, bool include_reps);
Json json_of(const Tower& tower);
Json json_of(const Decomposition& dec);
Json json_of(const SesReport& r);
Json json_of(const ApproxMapsReport& r);
Json json_of(const IsomReport& r);
Json json_of(const SetupReport& r);
Json json_of(const CorigidReport& r);
Json json_of(const AxiomReport& r);
Json json_of(const MembershipEqualityReport& r);
Json json_of(const GeneratingReport& r);
Json json_of(const Setup2IsoReport& r);
Json json_of(const NondegeneracyReport& r);
Json json_of(const AdjacencyReport& r);

}  // namespace cotstruct
