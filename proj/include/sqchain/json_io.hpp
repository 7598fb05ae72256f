#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sqchain/certify.hpp"
#include "sqchain/chain.hpp"
#include "sqchain/factor_demo.hpp"
#include "sqchain/ffield.hpp"
#include "sqchain/numtheory.hpp"

namespace sqchain {

using Json = nlohmann::ordered_json;

/// {"k": 2, "coefficients": ["5", "16"], "modulus": "221"?}
/// Coefficients as decimal strings (they outgrow 64 bits quickly).
Json chain_to_json(const SquareChain& chain);
SquareChain chain_from_json(const Json& j);

/// Parse "5,16" (optionally with a modulus) into a chain.
SquareChain chain_from_coeff_list(const std::string& csv,
                                  const std::string& modulus_decimal = "");

Json report_to_json(const CrumbleReport& report);
Json certificate_to_json(const DivisibilityCertificate& cert);
Json ff_entry_to_json(const FfEnumEntry& entry);
Json attempt_to_json(const FactorAttempt& attempt);
Json constants_to_json(const BoundConstants& constants);
Json dj_factored_to_json(const std::vector<std::pair<std::uint64_t, Int>>& factors);

/// CSV with header j,ln_D_lower,lambda_j_2j,min_bits.
std::string growth_rows_to_csv(const std::vector<GrowthRow>& rows);

}  // namespace sqchain
