#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + std::string(HITPROB_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
    int rc = pclose(p);
    return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

}  // namespace

TEST_CASE("dim and rank agree") {
    auto d = run("dim --k 3 --d 7");
    CHECK(d.status == 0);
    auto r = run("rank --k 3 --d 7 --format json");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::to_string(j["dim"].get<size_t>()) + "\n" == d.out);
    CHECK(j["monomials"].get<size_t>() == j["rank"].get<size_t>() + j["dim"].get<size_t>());
}

TEST_CASE("basis json matches the documented shape") {
    auto r = run("basis --k 3 --d 5 --format json");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["k"] == 3);
    CHECK(j["d"] == 5);
    CHECK(j["dim"].get<size_t>() == j["monomials"].size());
    for (const auto& m : j["monomials"]) {
        CHECK(m.is_array());
        CHECK(m.size() == 3);
    }
}

TEST_CASE("sq applies the Cartan formula") {
    auto r = run("sq --k 2 --j 1 --poly \"x1 x2\"");
    CHECK(r.status == 0);
    CHECK(r.out == "x1 x2^2 + x1^2 x2\n");
}

TEST_CASE("reduce reports hit polynomials as zero") {
    auto r = run("reduce --k 2 --poly \"x1^2\"");  // Sq^1(x1)
    CHECK(r.status == 0);
    CHECK(r.out == "0\n");
    auto j = nlohmann::json::parse(run("reduce --k 2 --poly \"x1^2\" --format json").out);
    CHECK(j["is_hit"] == true);
}

TEST_CASE("weights lists the occurring weights") {
    auto r = run("weights --k 2 --d 3 --format json");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["weights"].size() >= 1);
}

TEST_CASE("usage errors exit with status 2") {
    CHECK(run("nosuchcommand").status == 2);
    CHECK(run("dim --k 3").status == 2);                       // missing --d
    CHECK(run("sq --k 2 --j 1 --poly \"x9\"").status == 2);    // parse error
    CHECK(run("dim --k 3 --d 7 --format yaml").status == 2);
}

TEST_CASE("outputs are deterministic and cache-independent") {
    namespace fs = std::filesystem;
    fs::path cache = fs::temp_directory_path() / "hitprob_cli_cache_test";
    fs::remove_all(cache);

    std::string cmd = "basis --k 4 --d 12 --format json";
    auto plain = run(cmd);
    CHECK(plain.status == 0);

    std::string cached_cmd = cmd + " --cache-dir " + cache.string();
    auto first = run(cached_cmd);   // computes and writes the cache
    auto second = run(cached_cmd);  // loads it
    CHECK(first.out == plain.out);
    CHECK(second.out == plain.out);
    CHECK(fs::exists(cache));
    bool has_file = false;
    for (auto const& e : fs::directory_iterator(cache)) has_file |= e.is_regular_file();
    CHECK(has_file);

    // weight-restricted bases cache and reload the same way
    std::string wcmd = "dim --k 4 --d 12 --weight 2,1,2 --cache-dir " + cache.string();
    auto w1 = run(wcmd);
    auto w2 = run(wcmd);
    CHECK(w1.status == 0);
    CHECK(w1.out == w2.out);

    // the HITPROB_CACHE environment variable selects the same directory
    auto env = run("dim --k 4 --d 12", "env HITPROB_CACHE=" + cache.string() + " ");
    CHECK(env.status == 0);
    auto w3 = run("dim --k 4 --d 12");
    CHECK(env.out == w3.out);
    fs::remove_all(cache);
}

TEST_CASE("verify smoke suite runs through the CLI") {
    auto r = run("verify --suite smoke --fixtures " + std::string(FIXTURES_PATH));
    CHECK(r.status == 0);
    CHECK(r.out.find("pass") != std::string::npos);
    CHECK(run("verify --suite nosuch").status == 2);
}
