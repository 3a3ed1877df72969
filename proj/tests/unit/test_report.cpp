#include <doctest.h>
#include <json.hpp>

#include "esym/concave.hpp"
#include "esym/hyperb.hpp"
#include "esym/report.hpp"
#include "esym/rootcrit.hpp"

using namespace esym;

TEST_CASE("json writer: ordering, escaping, float format") {
    Json j = Json::object();
    j.set("b", 1);
    j.set("a", "x\"y");
    j.set("t", 0.1);
    j.set("tol", 1e-9);
    j.set("none", nullptr);
    CHECK(j.dump() ==
          "{\"b\":1,\"a\":\"x\\\"y\",\"t\":0.10000000000000001,"
          "\"tol\":1.0000000000000001e-09,\"none\":null}");

    Json arr = Json::array();
    arr.push(true);
    arr.push(Json::object().set("k", 2));
    CHECK(arr.dump() == "[true,{\"k\":2}]");
}

TEST_CASE("emitted reports parse as valid json with the expected fields") {
    {
        nlohmann::json parsed = nlohmann::json::parse(to_json(battery(UniPoly::parse("1,5,6,1"))).dump());
        CHECK(parsed.at("p1_exact").get<bool>());
        CHECK(parsed.at("kurtz").get<bool>());
        CHECK(parsed.at("tp_truncation_order").get<int>() == 5);
    }
    {
        ScanOptions opts;
        opts.jobs = 1;
        ConcavityVerdict v = concavity_scan(CoeffVec::parse("1,1,1"), 2, 3, 200, 21, opts);
        nlohmann::json parsed = nlohmann::json::parse(to_json(v).dump());
        CHECK(parsed.at("status").get<std::string>() == "counterexample");
        CHECK(parsed.at("witness").is_object());
        CHECK(parsed.at("witness").at("point").size() == 3);
        CHECK(parsed.at("samples_used").get<long>() == 200);

        // a quiet scan serializes the witness as null
        ConcavityVerdict quiet = concavity_scan(CoeffVec::parse("1,2,3"), 2, 2, 100, 21, opts);
        nlohmann::json qp = nlohmann::json::parse(to_json(quiet).dump());
        CHECK(qp.at("witness").is_null());
    }
    {
        TrialParams prm;
        prm.p = 2;
        prm.trials = 50;
        prm.jobs = 1;
        nlohmann::json parsed = nlohmann::json::parse(to_json(conjecture_trial(4, prm)).dump());
        CHECK(parsed.at("conjecture").get<int>() == 4);
        CHECK(parsed.at("counterexamples").is_array());
        CHECK(parsed.at("elapsed_ms").get<int>() == 0);
    }
}

TEST_CASE("witness values survive a parse round trip") {
    ScanOptions opts;
    opts.jobs = 1;
    ConcavityVerdict v = concavity_scan(CoeffVec::parse("1,1,1"), 2, 3, 300, 33, opts);
    REQUIRE(v.status == ConcavityStatus::Counterexample);
    nlohmann::json parsed = nlohmann::json::parse(to_json(v).dump());
    // rebuild the exact quadratic form from the serialized witness alone
    Point x;
    for (const auto& s : parsed["witness"]["point"]) x.push_back(parse_scalar(s.get<std::string>()));
    std::vector<Scalar> dir;
    for (const auto& s : parsed["witness"]["direction"]) dir.push_back(parse_scalar(s.get<std::string>()));
    Scalar mu = scalar_of(1, 2);
    std::vector<Scalar> m = concavity_matrix(CoeffVec::parse("1,1,1").a, x, mu);
    Scalar q = quadratic_form(m, dir);
    CHECK(to_string(q) == parsed["witness"]["exact_value"].get<std::string>());
    CHECK(sign(q) > 0);
}
