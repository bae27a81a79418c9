#pragma once

#include "efm/gl_oracle.hpp"
#include "efm/recovery.hpp"
#include "efm/seminormal.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace efm {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Json to_json(const SkewShape& s);
Json to_json(const EfmParameters& p);
Json to_json(const StandardTableau& t);
Json to_json(const Weight& w);  // ["1/2", "-5/2"]
Json to_json(const RationalMatrix& m);  // sparse: {"rows","cols","entries":[[i,j,"v"],...]}
Json to_json(const RelationReport& r);
Json to_json(const IrreducibilityReport& r);
Json to_json(const LiteralFormReport& r);
Json to_json(const HeckeModule& m);
Json to_json(const RecoveredParams& r);
Json to_json(const RecoveryTrace& t);
Json to_json(const OracleComparison& c);

// {"n","p","q","a","b","xi"} or {"n","p","q","mu","xi"}; nullopt when mu gives a zero module.
std::optional<EfmParameters> parameters_from_json(const Json& j);

std::uint64_t fnv1a(const std::string& bytes);
// Node ids are FNV-1a hashes of the tableau JSON; edges are labelled m1..mn.
std::string to_dot(const WeightGraph& g);

} // namespace efm
