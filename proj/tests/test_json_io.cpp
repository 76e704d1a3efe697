#include "doctest.h"
#include "oracles.hpp"

#include "anticomm/json_io.hpp"

using namespace anticomm;
using oracle::mat;

TEST_CASE("matrix encoding") {
    const Json j = parse_json(R"({"rows":2,"cols":2,"entries":[["0","2/4"],["-6/-3","5"]]})");
    const RatMatrix m = matrix_from_json(j);
    CHECK(m(0, 1) == oracle::q("1/2"));
    CHECK(m(1, 0) == 2);
    CHECK(to_json(m).dump() == R"({"rows":2,"cols":2,"entries":[["0","1/2"],["2","5"]]})");
    CHECK(matrix_from_json(to_json(m)) == m);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_json("{"), ParseError);
    CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"rows":2,"cols":2,"entries":[["1","2"]]})")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"rows":1,"cols":1,"entries":[["1/0"]]})")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(parse_json(R"({"cols":1,"entries":[["1"]]})")), ParseError);
    CHECK_THROWS_AS(partition_from_json(parse_json("[1,2]")), ParseError);
    CHECK_THROWS_AS(jordan_data_from_json(parse_json(R"([{"eigenvalue":"1","partition":[1]},{"eigenvalue":"1","partition":[2]}])")),
                    ParseError);
    CHECK_THROWS_AS(pair_from_json(parse_json(R"({"A":{"rows":0,"cols":0,"entries":[]}})")), ParseError);
}

TEST_CASE("round trips") {
    const Partition p{3, 2, 1};
    CHECK(to_json(p).dump() == "[3,2,1]");
    CHECK(partition_from_json(to_json(p)) == p);

    const JordanData data{{{Rational(2), Partition{3}}, {oracle::q("-1/2"), Partition{1, 1}}}};
    CHECK(to_json(data).dump() == R"([{"eigenvalue":"2","partition":[3]},{"eigenvalue":"-1/2","partition":[1,1]}])");
    CHECK(jordan_data_from_json(to_json(data)) == data);

    const ComponentTriple t{1, 2, 0};
    CHECK(triple_from_json(to_json(t)) == t);
    CHECK_THROWS_AS(triple_from_json(parse_json(R"({"p":1,"m":0,"r":0,"n":3})")), ParseError);

    const auto inv = trace_invariants(mat({{1, 0}, {0, -1}}), mat({{0, 1}, {1, 0}}), 1);
    CHECK(to_json(inv).dump() ==
          R"({"d":1,"values":[{"i":0,"j":0,"t":"2"},{"i":0,"j":1,"t":"0"},{"i":1,"j":0,"t":"0"}]})");
    CHECK(invariants_from_json(to_json(inv)) == inv);
}

TEST_CASE("report encodings") {
    const auto rep = component_of(mat({{0, 1}, {0, 0}}));
    const Json j = to_json(rep);
    CHECK(j["triple"].dump() == R"({"p":1,"m":0,"r":0,"n":2})");
    CHECK(j["nilpotentPart"]["partition"].dump() == "[2]");
    const auto basis = sigma_commutant(mat({{0, 1}, {0, 0}}), Sigma::Minus);
    CHECK(to_json(basis)["dim"] == 2);
    CHECK(to_json(basis)["sigma"] == -1);
}
