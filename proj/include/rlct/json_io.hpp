#ifndef RLCT_JSON_IO_HPP
#define RLCT_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "rlct/families.hpp"
#include "rlct/polynomial.hpp"
#include "rlct/resolution.hpp"
#include "rlct/simple_type.hpp"
#include "rlct/zeta_oracle.hpp"

namespace rlct {

using Json = nlohmann::json;

/// Schema violation; what() starts with a JSON path such as "$.divisors[1].m".
class SchemaError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Polynomial: {"n": 3, "terms": [{"c": "1/1", "e": [2, 0, 0]}, ...]}
Json to_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const Json& j);

Json to_json(const Monomial& m);

// Model: {"n": 3, "label": "...", "lct_exact": false,
//         "divisors": [{"id": "E1", "m": 2, "a": 2, "real": true, "weights": [1, 1, 1]}]}
Json to_json(const DivisorRecord& d);
Json to_json(const ResolutionModel& model);
ResolutionModel model_from_json(const Json& j);

Json to_json(const JumpReport& report);
Json to_json(const ThresholdComparison& c);
Json to_json(const JumpRule& rule);
Json to_json(const PeriodicJumpSet& set);
/// {"poly", "model", "expected": {"rlct", "lct", "rjn", ...}, "name", "notes"}
Json bundle_to_json(const FamilyFixture& fixture);

Json to_json(const SimpleTypeVerdict& v);
/// {lambda_hat, log_exponent_hat, stderr, levels_used, r_squared, seed, ...}
Json to_json(const McEstimate& e);
Json to_json(const IntegrabilityVerdict& v);
Json to_json(const Cor2Check& c);

/// Compact dump with sorted keys; the canonical byte form used for goldens.
std::string canonical_dump(const Json& j);

Json read_json_file(const std::string& path);

}  // namespace rlct

#endif  // RLCT_JSON_IO_HPP
