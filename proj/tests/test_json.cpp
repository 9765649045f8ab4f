#include <doctest.h>

#include "numap/errors.hpp"
#include "numap/json_io.hpp"
#include "numap/sampling.hpp"

using namespace numap;

TEST_CASE("integer and vector serialization") {
    CHECK(dump_json(int_to_json(Int(-42))) == "\"-42\"");
    CHECK(int_from_json(parse_json("\"123456789012345678901\"")).str() ==
          "123456789012345678901");
    CHECK(int_from_json(parse_json("7")) == Int(7));
    CHECK_THROWS_AS(int_from_json(parse_json("1.5")), ParseError);
    CHECK_THROWS_AS(int_from_json(parse_json("\"x\"")), ParseError);

    Vec v{Int(3), Int(-2)};
    CHECK(dump_json(vec_to_json(v)) == "[\"3\",\"-2\"]");
    CHECK(vec_from_json(parse_json("[\"3\",\"-2\"]")) == v);
}

TEST_CASE("table serialization round-trip and determinism") {
    NumTable T;
    T.k = 2;
    T.m = 1;
    T.n = 2;
    T.set(MultiSet({1, 1}), Vec{Int(2)});
    T.set(MultiSet({0, 1}), Vec{Int(-7)});
    std::string text = dump_json(table_to_json(T));
    // multiset keys serialize in lexicographic order
    CHECK(text.find("[0,1]") < text.find("[1,1]"));

    AnyTable back = table_from_json(parse_json(text));
    REQUIRE(std::holds_alternative<NumTable>(back));
    CHECK(std::get<NumTable>(back) == T);
    CHECK(dump_json(table_to_json(back)) == text);

    Rng rng(7);
    for (int iter = 0; iter < 25; ++iter) {
        NumTable R = random_table(
            rng, static_cast<std::size_t>(rng.uniform(1, 3)),
            static_cast<std::size_t>(rng.uniform(1, 2)),
            static_cast<unsigned>(rng.uniform(0, 4)), -9, 9);
        AnyTable rt = table_from_json(parse_json(dump_json(table_to_json(R))));
        CHECK(std::get<NumTable>(rt) == R);
    }
}

TEST_CASE("table parsing rejects malformed and mismatched input") {
    CHECK_THROWS_AS(table_from_json(parse_json("[]")), ParseError);
    CHECK_THROWS_AS(table_from_json(parse_json("{\"k\":1}")), ParseError);
    CHECK_THROWS_AS(
        table_from_json(parse_json(
            R"({"k":1,"m":1,"n":1,"basis":"fourier","coeffs":[]})")),
        ParseError);
    // degree bound violated: |X| = 2 > n = 1
    CHECK_THROWS_AS(
        table_from_json(parse_json(
            R"({"k":1,"m":1,"n":1,"basis":"binomial","coeffs":[{"X":[2],"v":["1"]}]})")),
        RankError);
    // wrong vector rank
    CHECK_THROWS_AS(
        table_from_json(parse_json(
            R"({"k":1,"m":2,"n":1,"basis":"binomial","coeffs":[{"X":[1],"v":["1"]}]})")),
        RankError);
    // duplicate key
    CHECK_THROWS_AS(
        table_from_json(parse_json(
            R"({"k":1,"m":1,"n":2,"basis":"binomial",)"
            R"("coeffs":[{"X":[1],"v":["1"]},{"X":[1],"v":["2"]}]})")),
        ParseError);
    CHECK_THROWS_AS(parse_json("{nope"), ParseError);
}

TEST_CASE("polynomial oracle specs") {
    // monomial shorthand: x^2
    MapOracle sq =
        oracle_from_json(parse_json(R"({"poly":[[0,"0"],[1,"0"],[2,"1"]]})"));
    CHECK(sq.k == 1);
    CHECK(sq.m == 1);
    CHECK(sq(Vec{Int(5)}) == Vec{Int(25)});

    NumTable T = extract(sq, 2);
    CHECK(*T.find(MultiSet({1})) == Vec{Int(1)});
    CHECK(*T.find(MultiSet({2})) == Vec{Int(2)});

    // full binomial table as oracle
    MapOracle from_table = oracle_from_json(parse_json(
        R"({"k":1,"m":1,"n":2,"basis":"binomial","coeffs":[{"X":[2],"v":["1"]}]})"));
    CHECK(from_table(Vec{Int(4)}) == Vec{Int(6)});

    CHECK_THROWS_AS(oracle_from_json(parse_json(R"({"poly":[[0]]})")), ParseError);
    CHECK_THROWS_AS(
        oracle_from_json(parse_json(R"({"poly":[[1,"1"],[1,"2"]]})")),
        ParseError);
}

TEST_CASE("truncated polynomial serialization") {
    TruncPoly p = chi_class(Vec{Int(2), Int(1)}, 2);
    std::string text = dump_json(trunc_to_json(p));
    CHECK(text ==
          R"({"coeffs":[{"X":[0,0],"c":"1"},{"X":[0,1],"c":"1"},)"
          R"({"X":[1,0],"c":"2"},{"X":[1,1],"c":"2"},{"X":[2,0],"c":"1"}],)"
          R"("k":2,"n":2})");
}

TEST_CASE("rational table serialization carries the integrality flag") {
    NumTable b2;
    b2.k = 1;
    b2.m = 1;
    b2.n = 2;
    b2.set(MultiSet({2}), Vec{Int(1)});
    Json j = rat_table_to_json(numerical_to_strict_rational(b2));
    CHECK(j.at("integral") == false);
    CHECK(j.at("basis") == "monomial");
    std::string text = dump_json(j);
    CHECK(text.find("-1/2") != std::string::npos);
    CHECK(text.find("1/2") != std::string::npos);
}

TEST_CASE("algebra element encoding per algebra") {
    const NumAlgebra& Z = algebra_Z();
    CHECK(dump_json(algelem_to_json(Z, Int(-3))) == "\"-3\"");
    CHECK(std::get<Int>(algelem_from_json(Z, parse_json("\"-3\""))) == Int(-3));

    NumAlgebra Z2 = algebra_Zr(2);
    AlgElem pair = algelem_from_json(Z2, parse_json("[\"1\",\"2\"]"));
    CHECK(std::get<Vec>(pair) == Vec{Int(1), Int(2)});

    const NumAlgebra& IZ = algebra_IntZ();
    AlgElem poly = algelem_from_json(IZ, parse_json("[\"0\",\"1\",\"2\"]"));
    CHECK(std::get<NumPoly>(poly) == NumPoly({Int(0), Int(1), Int(2)}));
    CHECK(dump_json(algelem_to_json(IZ, poly)) == "[\"0\",\"1\",\"2\"]");
}

TEST_CASE("universal factor serialization lists the whole basis") {
    NumTable sq;
    sq.k = 1;
    sq.m = 1;
    sq.n = 2;
    sq.set(MultiSet({1}), Vec{Int(1)});
    sq.set(MultiSet({2}), Vec{Int(2)});
    std::string text = dump_json(universal_to_json(universal_factor(sq)));
    CHECK(text ==
          R"({"assignment":[{"X":[0],"v":["0"]},{"X":[1],"v":["1"]},)"
          R"({"X":[2],"v":["2"]}],"k":1,"m":1,"n":2})");
}
