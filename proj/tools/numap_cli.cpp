// numap command line front end.
//
// Every subcommand is a thin shell over exactly one C API call; inputs are
// JSON (inline, @file, or "-" for stdin) and outputs are printed to stdout.
// Exit codes follow numap_status: 0 ok, 1 malformed input, 2 rank/degree
// mismatch, 3 non-integral conversion, 4 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "numap/numap_c.h"

namespace {

int fail(numap_status status) {
    const char* detail = numap_last_error();
    std::cerr << "error: " << numap_status_name(status);
    if (detail != nullptr && *detail != '\0') std::cerr << ": " << detail;
    std::cerr << "\n";
    return static_cast<int>(status);
}

// Inline JSON, "@path", or "-" for stdin.
std::string read_arg(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) {
            std::cerr << "error: cannot open " << arg.substr(1) << "\n";
            std::exit(static_cast<int>(NUMAP_ERR_PARSE));
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

struct OutString {
    char* ptr = nullptr;
    ~OutString() { numap_free(ptr); }
};

using TablePtr = std::unique_ptr<numap_table, decltype(&numap_table_free)>;
using OraclePtr = std::unique_ptr<numap_oracle, decltype(&numap_oracle_free)>;

TablePtr parse_table(const std::string& arg, numap_status& status) {
    numap_table* raw = nullptr;
    status = numap_table_parse(read_arg(arg).c_str(), &raw);
    return {raw, &numap_table_free};
}

OraclePtr parse_oracle(const std::string& arg, numap_status& status) {
    numap_oracle* raw = nullptr;
    status = numap_oracle_parse(read_arg(arg).c_str(), &raw);
    return {raw, &numap_oracle_free};
}

int print_result(numap_status status, const OutString& out,
                 bool print_on_error = true) {
    if (out.ptr != nullptr && (status == NUMAP_OK || print_on_error))
        std::cout << out.ptr << "\n";
    if (status != NUMAP_OK && status != NUMAP_ERR_VERIFY &&
        status != NUMAP_ERR_NONINTEGRAL)
        return fail(status);
    return static_cast<int>(status);
}

std::string options_json(std::optional<std::uint64_t> seed,
                         const std::string& range) {
    std::string out = "{";
    if (seed) out += "\"seed\":" + std::to_string(*seed);
    if (!range.empty()) {
        auto colon = range.find(':');
        if (colon == std::string::npos) {
            std::cerr << "error: --range expects <a>:<b>\n";
            std::exit(static_cast<int>(NUMAP_ERR_PARSE));
        }
        if (seed) out += ",";
        out += "\"range\":[" + range.substr(0, colon) + "," +
               range.substr(colon + 1) + "]";
    }
    out += "}";
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculus of numerical maps between free Z-modules"};
    app.require_subcommand(1);

    std::string oracle_arg, table_arg, vectors_arg, point_arg, x_arg;
    std::string scalars_arg, points_arg, r_arg, range_arg, algebra = "Z";
    std::string hom_name;
    unsigned degree = 0, truncation = 0;
    unsigned demo_degree = 2;
    std::optional<std::uint64_t> seed;

    auto* deviate = app.add_subcommand("deviate", "Deviation of an oracle");
    deviate->add_option("--oracle", oracle_arg, "oracle spec")->required();
    deviate->add_option("--vectors", vectors_arg, "array of vectors")->required();

    auto* extract = app.add_subcommand("extract", "Coefficient table of an oracle");
    extract->add_option("--oracle", oracle_arg, "oracle spec")->required();
    extract->add_option("-n,--degree", degree, "degree bound")->required();

    auto* eval = app.add_subcommand("eval", "Evaluate a table over an algebra");
    eval->add_option("--table", table_arg, "table json")->required();
    eval->add_option("--algebra", algebra, "Z, Z^2 or IntZ");
    eval->add_option("--point", point_arg, "array of algebra elements")->required();

    auto* verify = app.add_subcommand("verify", "Degree verification report");
    verify->add_option("--oracle", oracle_arg, "oracle spec")->required();
    verify->add_option("-n,--degree", degree, "degree bound")->required();
    verify->add_option("--seed", seed, "sample seed");
    verify->add_option("--range", range_arg, "sample range <a>:<b>");

    auto* eq1 = app.add_subcommand("eq1", "Scalar characterization identity");
    eq1->add_option("--oracle", oracle_arg, "oracle spec")->required();
    eq1->add_option("-n,--degree", degree, "degree bound")->required();
    eq1->add_option("-r,--scalar", r_arg, "scalar r")->required();
    eq1->add_option("--x", x_arg, "vector x")->required();

    auto* eq2 = app.add_subcommand("eq2", "Deviation expansion identity");
    eq2->add_option("--oracle", oracle_arg, "oracle spec")->required();
    eq2->add_option("-n,--degree", degree, "degree bound")->required();
    eq2->add_option("--scalars", scalars_arg, "array of scalars")->required();
    eq2->add_option("--vectors", vectors_arg, "array of vectors")->required();

    auto* convert = app.add_subcommand("convert", "Switch table basis");
    convert->add_option("--table", table_arg, "table json")->required();

    auto* universal = app.add_subcommand("universal",
                                         "Factorization through the "
                                         "augmentation model");
    universal->add_option("--table", table_arg, "binomial table json")->required();

    auto* chi = app.add_subcommand("chi", "Class of a vector in Z[t]/J_n");
    chi->add_option("--x", x_arg, "vector")->required();
    chi->add_option("-n,--truncation", truncation, "truncation order")->required();

    auto* naturality = app.add_subcommand("naturality", "Naturality squares");
    naturality->add_option("--table", table_arg, "binomial table json")->required();
    naturality->add_option("--hom", hom_name, "id, ev:<a>, diag, proj:<i>")
        ->required();
    naturality->add_option("--points", points_arg, "array of points");

    auto* demo = app.add_subcommand("demo-counterexample",
                                    "Rational monomial form of C(x,2)");
    demo->add_option("-D,--degree", demo_degree, "monomial degree window");

    auto* identities = app.add_subcommand("identities",
                                          "Exhaustive identity suites");
    identities->add_option("--seed", seed, "sample seed");
    identities->add_option("--range", range_arg, "scalar range <a>:<b>");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(NUMAP_ERR_PARSE);
    }

    numap_status status = NUMAP_OK;
    OutString out;

    if (deviate->parsed()) {
        OraclePtr o = parse_oracle(oracle_arg, status);
        if (status != NUMAP_OK) return fail(status);
        status = numap_deviate(o.get(), read_arg(vectors_arg).c_str(), &out.ptr);
        return print_result(status, out);
    }
    if (extract->parsed()) {
        OraclePtr o = parse_oracle(oracle_arg, status);
        if (status != NUMAP_OK) return fail(status);
        numap_table* raw = nullptr;
        status = numap_extract(o.get(), degree, &raw);
        TablePtr table(raw, &numap_table_free);
        if (status != NUMAP_OK) return fail(status);
        status = numap_table_to_json(table.get(), &out.ptr);
        return print_result(status, out);
    }
    if (eval->parsed()) {
        TablePtr t = parse_table(table_arg, status);
        if (status != NUMAP_OK) return fail(status);
        status = numap_eval(t.get(), algebra.c_str(), read_arg(point_arg).c_str(),
                            &out.ptr);
        return print_result(status, out);
    }
    if (verify->parsed()) {
        OraclePtr o = parse_oracle(oracle_arg, status);
        if (status != NUMAP_OK) return fail(status);
        status = numap_verify(o.get(), degree,
                              options_json(seed, range_arg).c_str(), &out.ptr);
        return print_result(status, out);
    }
    if (eq1->parsed()) {
        OraclePtr o = parse_oracle(oracle_arg, status);
        if (status != NUMAP_OK) return fail(status);
        status = numap_eq1(o.get(), degree, r_arg.c_str(),
                           read_arg(x_arg).c_str(), &out.ptr);
        return print_result(status, out);
    }
    if (eq2->parsed()) {
        OraclePtr o = parse_oracle(oracle_arg, status);
        if (status != NUMAP_OK) return fail(status);
        status = numap_eq2(o.get(), degree, read_arg(scalars_arg).c_str(),
                           read_arg(vectors_arg).c_str(), &out.ptr);
        return print_result(status, out);
    }
    if (convert->parsed()) {
        TablePtr t = parse_table(table_arg, status);
        if (status != NUMAP_OK) return fail(status);
        status = numap_convert(t.get(), &out.ptr);
        return print_result(status, out);
    }
    if (universal->parsed()) {
        TablePtr t = parse_table(table_arg, status);
        if (status != NUMAP_OK) return fail(status);
        status = numap_universal(t.get(), &out.ptr);
        return print_result(status, out);
    }
    if (chi->parsed()) {
        status = numap_chi(read_arg(x_arg).c_str(), truncation, &out.ptr);
        return print_result(status, out);
    }
    if (naturality->parsed()) {
        TablePtr t = parse_table(table_arg, status);
        if (status != NUMAP_OK) return fail(status);
        status = numap_naturality(
            t.get(), hom_name.c_str(),
            points_arg.empty() ? nullptr : read_arg(points_arg).c_str(),
            &out.ptr);
        return print_result(status, out);
    }
    if (demo->parsed()) {
        status = numap_demo_counterexample(demo_degree, &out.ptr);
        return print_result(status, out);
    }
    if (identities->parsed()) {
        status = numap_identities(options_json(seed, range_arg).c_str(), &out.ptr);
        return print_result(status, out);
    }
    return 0;
}
