#include "doctest.h"
#include "json.hpp"
#include "hitprob/verify.hpp"

using namespace hitprob;

TEST_CASE("smoke suite passes without fixtures") {
    auto results = run_suite("smoke", {});
    CHECK(results.size() == 2);
    CHECK(all_passed(results));
}

TEST_CASE("unknown suite is rejected") {
    CHECK_THROWS(run_suite("nope", {}));
}

TEST_CASE("report rendering") {
    std::vector<VerificationResult> results;
    results.push_back({"dim QP5_20", CheckStatus::Pass, "641", "641", 12.5});
    results.push_back({"other", CheckStatus::Fail, "1", "2", 0.1});
    results.push_back({"later", CheckStatus::Skipped, "3", "missing fixture 'p'", 0.0});

    std::string text = render_report(results, false);
    CHECK(text.find("dim QP5_20 = 641 (expected 641)") != std::string::npos);
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("skipped") != std::string::npos);

    auto arr = nlohmann::json::parse(render_report(results, true));
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 3);
    CHECK(arr[0]["name"] == "dim QP5_20");
    CHECK(arr[0]["status"] == "pass");
    CHECK(arr[1]["status"] == "fail");
    CHECK(arr[2]["status"] == "skipped");
    CHECK(arr[0]["elapsed_ms"].is_number_integer());

    CHECK(!all_passed(results));
    CHECK(render_report({}, false).empty());
    CHECK(nlohmann::json::parse(render_report({}, true)).empty());
}
