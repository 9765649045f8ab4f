#include "numap/numap_c.h"

#include <cstring>
#include <string>

#include "numap/errors.hpp"
#include "numap/identities.hpp"
#include "numap/json_io.hpp"

using namespace numap;

struct numap_table {
    AnyTable value;
};

struct numap_oracle {
    MapOracle value;
};

namespace {

thread_local std::string g_last_error;

char* copy_out(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
numap_status guarded(Fn&& fn) noexcept {
    try {
        g_last_error.clear();
        return fn();
    } catch (const ParseError& e) {
        g_last_error = e.what();
        return NUMAP_ERR_PARSE;
    } catch (const RankError& e) {
        g_last_error = e.what();
        return NUMAP_ERR_RANK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return NUMAP_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return NUMAP_ERR_INTERNAL;
    }
}

const char* require_arg(const char* p, const char* what) {
    if (p == nullptr) throw ParseError(std::string(what) + " must not be NULL");
    return p;
}

struct Options {
    std::uint64_t seed = 0;
    bool has_range = false;
    long long lo = 0, hi = 0;
};

Options options_from(const char* options_json) {
    Options opts;
    if (options_json == nullptr || *options_json == '\0') return opts;
    Json j = parse_json(options_json);
    if (!j.is_object()) throw ParseError("options must be a JSON object");
    if (j.contains("seed")) {
        const Json& s = j.at("seed");
        if (!s.is_number_unsigned()) throw ParseError("seed must be a natural");
        opts.seed = s.get<std::uint64_t>();
    }
    if (j.contains("range")) {
        const Json& r = j.at("range");
        if (!r.is_array() || r.size() != 2 || !r.at(0).is_number_integer() ||
            !r.at(1).is_number_integer())
            throw ParseError("range must be [lo, hi]");
        opts.has_range = true;
        opts.lo = r.at(0).get<long long>();
        opts.hi = r.at(1).get<long long>();
        if (opts.lo > opts.hi) throw ParseError("range must satisfy lo <= hi");
    }
    return opts;
}

}  // namespace

numap_status numap_table_parse(const char* json, numap_table** out) {
    return guarded([&]() {
        *out = nullptr;
        AnyTable t = table_from_json(parse_json(require_arg(json, "table json")));
        *out = new numap_table{std::move(t)};
        return NUMAP_OK;
    });
}

numap_status numap_table_to_json(const numap_table* t, char** out) {
    return guarded([&]() {
        *out = copy_out(dump_json(table_to_json(t->value)));
        return NUMAP_OK;
    });
}

void numap_table_free(numap_table* t) { delete t; }

numap_status numap_oracle_parse(const char* json, numap_oracle** out) {
    return guarded([&]() {
        *out = nullptr;
        MapOracle o = oracle_from_json(parse_json(require_arg(json, "oracle json")));
        *out = new numap_oracle{std::move(o)};
        return NUMAP_OK;
    });
}

void numap_oracle_free(numap_oracle* o) { delete o; }

numap_status numap_deviate(const numap_oracle* o, const char* vectors_json,
                           char** out) {
    return guarded([&]() {
        Json j = parse_json(require_arg(vectors_json, "vectors json"));
        if (!j.is_array()) throw ParseError("vectors must be a JSON array");
        std::vector<Vec> xs;
        xs.reserve(j.size());
        for (const Json& v : j) xs.push_back(vec_from_json(v));
        *out = copy_out(dump_json(vec_to_json(deviate(o->value, xs))));
        return NUMAP_OK;
    });
}

numap_status numap_extract(const numap_oracle* o, unsigned degree,
                           numap_table** out) {
    return guarded([&]() {
        *out = new numap_table{extract(o->value, degree)};
        return NUMAP_OK;
    });
}

numap_status numap_eval(const numap_table* t, const char* algebra,
                        const char* point_json, char** out) {
    return guarded([&]() {
        NumAlgebra A = algebra_by_name(require_arg(algebra, "algebra name"));
        Json j = parse_json(require_arg(point_json, "point json"));
        if (!j.is_array()) throw ParseError("point must be a JSON array");
        std::vector<AlgElem> a;
        a.reserve(j.size());
        for (const Json& e : j) a.push_back(algelem_from_json(A, e));
        std::vector<AlgElem> value = std::visit(
            [&](const auto& table) {
                if constexpr (std::is_same_v<std::decay_t<decltype(table)>,
                                             NumTable>)
                    return extend(table, A, a);
                else
                    return extend_strict(table, A, a);
            },
            t->value);
        Json result = Json::array();
        for (const AlgElem& e : value) result.push_back(algelem_to_json(A, e));
        *out = copy_out(dump_json(result));
        return NUMAP_OK;
    });
}

numap_status numap_verify(const numap_oracle* o, unsigned degree,
                          const char* options_json, char** report_out) {
    return guarded([&]() {
        Options opts = options_from(options_json);
        SampleOptions sample;
        sample.seed = opts.seed;
        if (opts.has_range) {
            sample.lo = opts.lo;
            sample.hi = opts.hi;
            sample.rlo = opts.lo;
            sample.rhi = opts.hi;
        }
        DegreeReport report = verify_degree(o->value, degree, sample);
        *report_out = copy_out(dump_json(degree_report_to_json(report)));
        return report.ok() ? NUMAP_OK : NUMAP_ERR_VERIFY;
    });
}

namespace {
numap_status write_pair(const std::pair<Vec, Vec>& sides, char** out) {
    Json j;
    j["lhs"] = vec_to_json(sides.first);
    j["rhs"] = vec_to_json(sides.second);
    j["equal"] = sides.first == sides.second;
    *out = copy_out(dump_json(j));
    return sides.first == sides.second ? NUMAP_OK : NUMAP_ERR_VERIFY;
}
}  // namespace

numap_status numap_eq1(const numap_oracle* o, unsigned degree, const char* r_dec,
                       const char* x_json, char** out) {
    return guarded([&]() {
        Int r = Int::from_string(require_arg(r_dec, "scalar r"));
        Vec x = vec_from_json(parse_json(require_arg(x_json, "vector x")));
        return write_pair(check_eq1(o->value, degree, r, x), out);
    });
}

numap_status numap_eq2(const numap_oracle* o, unsigned degree,
                       const char* scalars_json, const char* vectors_json,
                       char** out) {
    return guarded([&]() {
        Vec a = vec_from_json(parse_json(require_arg(scalars_json, "scalars")));
        Json j = parse_json(require_arg(vectors_json, "vectors json"));
        if (!j.is_array()) throw ParseError("vectors must be a JSON array");
        std::vector<Vec> xs;
        xs.reserve(j.size());
        for (const Json& v : j) xs.push_back(vec_from_json(v));
        return write_pair(check_eq2(o->value, degree, a, xs), out);
    });
}

numap_status numap_convert(const numap_table* t, char** out) {
    return guarded([&]() -> numap_status {
        if (std::holds_alternative<StrictTable>(t->value)) {
            NumTable converted = strict_to_numerical(std::get<StrictTable>(t->value));
            *out = copy_out(dump_json(table_to_json(converted)));
            return NUMAP_OK;
        }
        RationalStrictForm form =
            numerical_to_strict_rational(std::get<NumTable>(t->value));
        *out = copy_out(dump_json(rat_table_to_json(form)));
        return form.integral ? NUMAP_OK : NUMAP_ERR_NONINTEGRAL;
    });
}

numap_status numap_universal(const numap_table* t, char** out) {
    return guarded([&]() {
        if (!std::holds_alternative<NumTable>(t->value))
            throw RankError("universal factorization expects a binomial table");
        UniversalFactor F = universal_factor(std::get<NumTable>(t->value));
        *out = copy_out(dump_json(universal_to_json(F)));
        return NUMAP_OK;
    });
}

numap_status numap_chi(const char* x_json, unsigned truncation, char** out) {
    return guarded([&]() {
        Vec x = vec_from_json(parse_json(require_arg(x_json, "vector x")));
        *out = copy_out(dump_json(trunc_to_json(chi_class(x, truncation))));
        return NUMAP_OK;
    });
}

numap_status numap_naturality(const numap_table* t, const char* hom,
                              const char* points_json, char** report_out) {
    return guarded([&]() {
        if (!std::holds_alternative<NumTable>(t->value))
            throw RankError("naturality expects a binomial table");
        const NumTable& T = std::get<NumTable>(t->value);
        AlgebraHom h = hom_by_name(require_arg(hom, "homomorphism name"));
        std::vector<std::vector<AlgElem>> points;
        if (points_json != nullptr && *points_json != '\0') {
            Json j = parse_json(points_json);
            if (!j.is_array()) throw ParseError("points must be a JSON array");
            for (const Json& p : j) {
                if (!p.is_array()) throw ParseError("each point must be an array");
                std::vector<AlgElem> z;
                z.reserve(p.size());
                for (const Json& e : p) z.push_back(algelem_from_json(h.src, e));
                points.push_back(std::move(z));
            }
        } else {
            // Deterministic default: cycle through the source samples.
            const auto& samples = h.src.samples;
            for (std::size_t start = 0; start < samples.size(); ++start) {
                std::vector<AlgElem> z;
                z.reserve(T.k);
                for (std::size_t c = 0; c < T.k; ++c)
                    z.push_back(samples[(start + c * 7) % samples.size()]);
                points.push_back(std::move(z));
            }
        }
        NaturalityReport report = check_naturality(T, h, points);
        *report_out =
            copy_out(dump_json(naturality_report_to_json(h.tgt, h, report)));
        return report.ok() ? NUMAP_OK : NUMAP_ERR_VERIFY;
    });
}

numap_status numap_demo_counterexample(unsigned degree, char** out) {
    return guarded([&]() {
        CounterexampleDemo demo = demo_counterexample(degree);
        *out = copy_out(dump_json(counterexample_to_json(demo)));
        return NUMAP_OK;
    });
}

numap_status numap_identities(const char* options_json, char** report_out) {
    return guarded([&]() {
        Options raw = options_from(options_json);
        IdentitiesOptions opts;
        opts.seed = raw.seed;
        if (raw.has_range) opts.range = {raw.lo, raw.hi};
        IdentitiesReport report = run_identities(opts);
        Json j;
        j["lemma"] = {{"cases", report.lemma_cases},
                      {"failures", report.lemma_failures}};
        j["eq1"] = {{"cases", report.eq1_cases}, {"failures", report.eq1_failures}};
        j["eq2"] = {{"cases", report.eq2_cases}, {"failures", report.eq2_failures}};
        j["ok"] = report.ok();
        j["details"] = report.details;
        *report_out = copy_out(dump_json(j));
        return report.ok() ? NUMAP_OK : NUMAP_ERR_VERIFY;
    });
}

void numap_free(char* s) { delete[] s; }

const char* numap_status_name(numap_status s) {
    switch (s) {
        case NUMAP_OK: return "ok";
        case NUMAP_ERR_PARSE: return "malformed input";
        case NUMAP_ERR_RANK: return "rank or degree mismatch";
        case NUMAP_ERR_NONINTEGRAL: return "non-integral conversion";
        case NUMAP_ERR_VERIFY: return "verification failure";
        case NUMAP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* numap_last_error(void) { return g_last_error.c_str(); }
