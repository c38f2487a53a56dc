#pragma once

#include <json.hpp>

#include "tricover/density.hpp"
#include "tricover/theory.hpp"
#include "tricover/zeta.hpp"

namespace tricover {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

Json to_json(const Cover& cover);
Cover cover_from_json(const Json& j);

Json to_json(const NewtonPolygon& np);
Json to_json(const FinalType& ft);
Json to_json(const StratumReport& report);
Json to_json(const CongruenceSet& set);
Json to_json(const DensityResult& result);
Json to_json(const DenominatorCertificate& cert);
Json to_json(const OracleReport& report);
Json to_json(const Conjecture13Report& report);

// Signature table as sorted relevant characters with their 0/1 values.
Json signature_json(const SignatureTable& table);

// Combined per-(cover, residue) record: Newton polygon, EO data, and the
// two stratum reports.
Json invariants_json(const Cover& cover, Int r);

}  // namespace tricover
