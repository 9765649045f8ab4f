#include "numap/json_io.hpp"

#include <algorithm>

#include "numap/errors.hpp"
#include "numap/ring.hpp"

namespace numap {

namespace {

const Json& require_field(const Json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t natural_from_json(const Json& j, const char* what) {
    if (!j.is_number_unsigned())
        throw ParseError(std::string(what) + " must be a JSON natural");
    return j.get<std::size_t>();
}

}  // namespace

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON");
    return j;
}

std::string dump_json(const Json& j) { return j.dump(); }

Json int_to_json(const Int& v) { return v.str(); }

Int int_from_json(const Json& j) {
    if (j.is_string()) return Int::from_string(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    throw ParseError("integer must be a decimal string");
}

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const Int& c : v) out.push_back(int_to_json(c));
    return out;
}

Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("vector must be a JSON array");
    Vec out;
    out.reserve(j.size());
    for (const Json& c : j) out.push_back(int_from_json(c));
    return out;
}

Json multiset_to_json(const MultiSet& X) {
    Json out = Json::array();
    for (std::uint32_t m : X.mult()) out.push_back(m);
    return out;
}

MultiSet multiset_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("multiset must be a JSON array");
    std::vector<std::uint32_t> mult;
    mult.reserve(j.size());
    for (const Json& m : j)
        mult.push_back(
            static_cast<std::uint32_t>(natural_from_json(m, "multiplicity")));
    return MultiSet(std::move(mult));
}

Json poly_to_json(const NumPoly& p) {
    Json out = Json::array();
    for (const Int& c : p.coeffs()) out.push_back(int_to_json(c));
    return out;
}

NumPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be a JSON array");
    std::vector<Int> coeffs;
    coeffs.reserve(j.size());
    for (const Json& c : j) coeffs.push_back(int_from_json(c));
    return NumPoly(std::move(coeffs));
}

namespace {

template <class Table>
Json basis_table_to_json(const Table& T, const char* basis) {
    Json out;
    out["k"] = T.k;
    out["m"] = T.m;
    out["n"] = T.n;
    out["basis"] = basis;
    Json coeffs = Json::array();
    for (const auto& [X, v] : T.coeffs) {
        Json entry;
        entry["X"] = multiset_to_json(X);
        entry["v"] = vec_to_json(v);
        coeffs.push_back(std::move(entry));
    }
    out["coeffs"] = std::move(coeffs);
    return out;
}

template <class Table>
Table basis_table_from_json(const Json& j) {
    Table T;
    T.k = natural_from_json(require_field(j, "k"), "k");
    T.m = natural_from_json(require_field(j, "m"), "m");
    T.n = static_cast<unsigned>(natural_from_json(require_field(j, "n"), "n"));
    const Json& coeffs = require_field(j, "coeffs");
    if (!coeffs.is_array()) throw ParseError("\"coeffs\" must be an array");
    for (const Json& entry : coeffs) {
        if (!entry.is_object())
            throw ParseError("coefficient entry must be an object");
        MultiSet X = multiset_from_json(require_field(entry, "X"));
        Vec v = vec_from_json(require_field(entry, "v"));
        if (T.coeffs.contains(X))
            throw ParseError("duplicate multiset key in coefficient list");
        T.set(X, std::move(v));
    }
    return T;
}

}  // namespace

Json table_to_json(const NumTable& T) { return basis_table_to_json(T, "binomial"); }

Json table_to_json(const StrictTable& S) {
    return basis_table_to_json(S, "monomial");
}

Json table_to_json(const AnyTable& T) {
    return std::visit([](const auto& t) { return table_to_json(t); }, T);
}

AnyTable table_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("table must be a JSON object");
    const Json& basis = require_field(j, "basis");
    if (basis == "binomial") return basis_table_from_json<NumTable>(j);
    if (basis == "monomial") return basis_table_from_json<StrictTable>(j);
    throw ParseError("\"basis\" must be \"binomial\" or \"monomial\"");
}

Json rat_table_to_json(const RationalStrictForm& form) {
    Json out;
    out["k"] = form.table.k;
    out["m"] = form.table.m;
    out["n"] = form.table.n;
    out["basis"] = "monomial";
    out["integral"] = form.integral;
    Json coeffs = Json::array();
    for (const auto& [X, v] : form.table.coeffs) {
        Json entry;
        entry["X"] = multiset_to_json(X);
        Json vals = Json::array();
        for (const Rat& c : v) vals.push_back(c.str());
        entry["v"] = std::move(vals);
        coeffs.push_back(std::move(entry));
    }
    out["coeffs"] = std::move(coeffs);
    return out;
}

Json trunc_to_json(const TruncPoly& p) {
    Json out;
    out["k"] = p.k();
    out["n"] = p.n();
    Json coeffs = Json::array();
    for (const auto& [X, c] : p.coeffs()) {
        Json entry;
        entry["X"] = multiset_to_json(X);
        entry["c"] = int_to_json(c);
        coeffs.push_back(std::move(entry));
    }
    out["coeffs"] = std::move(coeffs);
    return out;
}

MapOracle oracle_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("oracle spec must be a JSON object");
    if (j.contains("poly")) {
        const Json& entries = j.at("poly");
        if (!entries.is_array())
            throw ParseError("\"poly\" must be an array of [degree, coeff] pairs");
        StrictTable S;
        S.k = 1;
        S.m = 1;
        unsigned max_deg = 0;
        for (const Json& e : entries) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("\"poly\" entries must be [degree, coeff] pairs");
            max_deg = std::max(
                max_deg,
                static_cast<unsigned>(natural_from_json(e.at(0), "degree")));
        }
        S.n = max_deg;
        for (const Json& e : entries) {
            auto deg = static_cast<std::uint32_t>(
                natural_from_json(e.at(0), "degree"));
            MultiSet X({deg});
            if (S.coeffs.contains(X))
                throw ParseError("duplicate degree in \"poly\"");
            S.set(X, {int_from_json(e.at(1))});
        }
        return strict_as_oracle(std::move(S));
    }
    AnyTable T = table_from_json(j);
    if (std::holds_alternative<NumTable>(T))
        return table_as_oracle(std::get<NumTable>(std::move(T)));
    return strict_as_oracle(std::get<StrictTable>(std::move(T)));
}

Json universal_to_json(const UniversalFactor& F) {
    Json out;
    out["k"] = F.k;
    out["m"] = F.m;
    out["n"] = F.n;
    Json assign = Json::array();
    for (const MultiSet& X : enumerate_multisets(F.k, F.n)) {
        Json entry;
        entry["X"] = multiset_to_json(X);
        auto it = F.assign.find(X);
        entry["v"] = vec_to_json(it == F.assign.end() ? zero_vec(F.m) : it->second);
        assign.push_back(std::move(entry));
    }
    out["assignment"] = std::move(assign);
    return out;
}

Json algelem_to_json(const NumAlgebra& A, const AlgElem& e) {
    if (A.name == "Z") return int_to_json(std::get<Int>(e));
    if (A.name == "IntZ") return poly_to_json(std::get<NumPoly>(e));
    return vec_to_json(std::get<Vec>(e));
}

AlgElem algelem_from_json(const NumAlgebra& A, const Json& j) {
    if (A.name == "Z") return int_from_json(j);
    if (A.name == "IntZ") return poly_from_json(j);
    Vec v = vec_from_json(j);
    if (!A.name.starts_with("Z^"))
        throw ParseError("unknown algebra element encoding: " + A.name);
    return v;
}

Json degree_report_to_json(const DegreeReport& r) {
    Json out;
    out["degree"] = r.degree;
    out["deviation_checks"] = r.deviation_checks;
    out["scalar_checks"] = r.scalar_checks;
    out["ok"] = r.ok();
    Json violations = Json::array();
    for (const DegreeViolation& v : r.violations) {
        Json entry;
        if (v.kind == DegreeViolation::Kind::deviation) {
            entry["kind"] = "deviation";
            Json args = Json::array();
            for (const Vec& x : v.tuple) args.push_back(vec_to_json(x));
            entry["args"] = std::move(args);
            entry["value"] = vec_to_json(v.lhs);
        } else {
            entry["kind"] = "scalar";
            entry["r"] = int_to_json(v.r);
            entry["x"] = vec_to_json(v.x);
            entry["lhs"] = vec_to_json(v.lhs);
            entry["rhs"] = vec_to_json(v.rhs);
        }
        violations.push_back(std::move(entry));
    }
    out["violations"] = std::move(violations);
    return out;
}

Json naturality_report_to_json(const NumAlgebra& tgt, const AlgebraHom& h,
                               const NaturalityReport& r) {
    Json out;
    out["hom"] = h.name;
    out["points_checked"] = r.points_checked;
    out["ok"] = r.ok();
    Json mismatches = Json::array();
    for (const NaturalityMismatch& mm : r.mismatches) {
        Json entry;
        entry["point"] = mm.point;
        Json lhs = Json::array(), rhs = Json::array();
        for (const AlgElem& e : mm.via_hom) lhs.push_back(algelem_to_json(tgt, e));
        for (const AlgElem& e : mm.via_extend)
            rhs.push_back(algelem_to_json(tgt, e));
        entry["via_hom"] = std::move(lhs);
        entry["via_extend"] = std::move(rhs);
        mismatches.push_back(std::move(entry));
    }
    out["mismatches"] = std::move(mismatches);
    return out;
}

Json counterexample_to_json(const CounterexampleDemo& d) {
    auto form_to_json = [](const RationalForm& f) {
        Json out;
        Json coeffs = Json::array();
        for (const Rat& c : f.coeffs) coeffs.push_back(c.str());
        out["coeffs"] = std::move(coeffs);
        out["integral"] = f.integral;
        return out;
    };
    Json out;
    out["degree"] = d.degree;
    out["binom2"] = form_to_json(d.binom2);
    out["square"] = form_to_json(d.square);
    return out;
}

}  // namespace numap
