#ifndef NUMAP_JSON_IO_HPP
#define NUMAP_JSON_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "numap/augment.hpp"
#include "numap/maps.hpp"
#include "numap/natural.hpp"
#include "numap/tables.hpp"

namespace numap {

using Json = nlohmann::json;

/// All integer values cross the JSON boundary as decimal strings so that
/// arbitrary precision survives any JSON parser; multiplicities and ranks
/// are plain JSON naturals. Serialization is deterministic: object keys are
/// sorted and coefficient lists follow the lexicographic multiset order.

Json parse_json(const std::string& text); // throws ParseError
std::string dump_json(const Json& j);

Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json vec_to_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json multiset_to_json(const MultiSet& X);
MultiSet multiset_from_json(const Json& j);

Json poly_to_json(const NumPoly& p);
NumPoly poly_from_json(const Json& j);

using AnyTable = std::variant<NumTable, StrictTable>;

Json table_to_json(const NumTable& T);
Json table_to_json(const StrictTable& S);
Json table_to_json(const AnyTable& T);
AnyTable table_from_json(const Json& j);

/// Monomial-basis table with rational coefficients plus integrality flag.
Json rat_table_to_json(const RationalStrictForm& form);

Json trunc_to_json(const TruncPoly& p);

/// Oracle specs: either {"poly": [[degree, coeff], ...]} for a univariate
/// monomial map Z -> Z, or a full table object in either basis.
MapOracle oracle_from_json(const Json& j);

Json universal_to_json(const UniversalFactor& F);

Json algelem_to_json(const NumAlgebra& A, const AlgElem& e);
AlgElem algelem_from_json(const NumAlgebra& A, const Json& j);

Json degree_report_to_json(const DegreeReport& r);
Json naturality_report_to_json(const NumAlgebra& tgt, const AlgebraHom& h,
                               const NaturalityReport& r);
Json counterexample_to_json(const CounterexampleDemo& d);

}  // namespace numap

#endif
