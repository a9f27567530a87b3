#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "support.hpp"
#include "weierstab/cli.hpp"

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    ::unsetenv("WEIER_STAB_CONFIG");
    args.insert(args.begin(), "weier-stab");
    std::ostringstream out, err;
    const int code = weierstab::cli::dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json error_of(const Run& r) { return nlohmann::json::parse(r.err).at("error"); }

} // namespace

TEST_CASE("transform") {
    const auto r = run({"transform", "--functor", "phi", "--class", R"({"n":"1","d":"0","c":"0","s":"0"})"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"n\":\"0\",\"d\":\"-1\",\"c\":\"0\",\"s\":\"0\"}\n");
    const auto s = run({"transform", "--functor", "phi", "--shift", "1", "--class", R"({"n":"0","d":"0","c":"0","s":"1"})"});
    CHECK(s.out == "{\"n\":\"0\",\"d\":\"0\",\"c\":\"-1\",\"s\":\"0\"}\n");
}

TEST_CASE("global options are accepted after the subcommand") {
    const auto r = run({"transform", "--functor", "phihat", "--class", R"({"n":"1","d":"2","c":"3","s":"4"})", "--params",
                        R"({"e":"1","m":"2","alpha":"1","lambda":"2"})"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"n\":\"2\",\"d\":\"-1\",\"c\":\"6\",\"s\":\"-11/2\"}\n");
}

TEST_CASE("identity-check") {
    const auto r = run({"identity-check", "--class", R"({"n":"1","d":"2","c":"3","s":"4"})"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"status\":\"PASS\",\"residual\":\"0\"}\n");
}

TEST_CASE("phase classify / compare / scan") {
    CHECK(run({"phase", "classify", "--class", R"({"n":"0","d":"0","c":"1","s":"0"})"}).out ==
          "{\"phase\":\"1/2\",\"attained\":true}\n");
    const auto c = run({"phase", "compare", "--left", R"({"n":"0","d":"1","c":"0","s":"0"})", "--right",
                        R"({"n":"0","d":"0","c":"0","s":"1"})"});
    CHECK(c.code == 0);
    CHECK(nlohmann::json::parse(c.out).at("ordering") == "Precedes");

    const auto path = std::filesystem::temp_directory_path() / "weierstab_candidates.json";
    std::ofstream(path) << R"([{"n":"0","d":"0","c":"1","s":"0"}])";
    const auto s = run({"phase", "scan", "--class", R"({"n":"1","d":"0","c":"1","s":"0"})", "--candidates", path.string()});
    std::filesystem::remove(path);
    CHECK(s.code == 0);
    const auto j = nlohmann::json::parse(s.out);
    CHECK(j.at("twisted_degree") == "1");
    CHECK(j.at("candidates").at(0).at("verdict").at("ordering") == "Precedes");
}

TEST_CASE("charge and slope") {
    const auto c = run({"charge", "--class", R"({"n":"1","d":"0","c":"0","s":"0"})", "--at", "u=1/2"});
    CHECK(c.code == 0);
    CHECK(c.out == "{\"u\":\"1/2\",\"v\":\"5\",\"real\":\"3\",\"imag\":\"0\"}\n");
    const auto s = run({"slope", "--class", R"({"n":"1","d":"0","c":"1","s":"0"})", "--hn-factors", R"([{"n":"1","d":"0","c":"1","s":"0"}])"});
    CHECK(s.code == 0);
    const auto j = nlohmann::json::parse(s.out);
    CHECK(j.at("fl_conditions").at("satisfied") == false);
    CHECK(j.at("fl_conditions").at("violated_index") == 0);
    CHECK(j.at("tl_conditions").at("satisfied") == true);
}

TEST_CASE("walls") {
    const auto r = run({"walls", "--class", R"({"n":"1","d":"0","c":"0","s":"0"})", "--box", "n=0..0,d=0..0,c=0..2,s2=-2..2"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).at("reports").size() == 15);
    const auto t1 = run({"walls", "--class", R"({"n":"1","d":"1","c":"0","s":"1"})", "--box", "n=-1..1,d=-1..1,c=-1..1,s2=-1..1",
                         "--umax", "3", "--threads", "1"});
    const auto t4 = run({"walls", "--class", R"({"n":"1","d":"1","c":"0","s":"1"})", "--box", "n=-1..1,d=-1..1,c=-1..1,s2=-1..1",
                         "--umax", "3", "--threads", "4"});
    CHECK(t1.code == 0);
    CHECK(t1.out == t4.out);
    const auto cap = run({"walls", "--class", R"({"n":"1","d":"0","c":"0","s":"0"})", "--box", "n=0..999,d=0..999,c=0..999,s2=0..1"});
    CHECK(cap.code == 1);
    CHECK(error_of(cap).at("kind") == "cap_exceeded");
}

TEST_CASE("table format") {
    const auto r = run({"--format", "table", "phase", "classify", "--class", R"({"n":"0","d":"0","c":"1","s":"0"})"});
    CHECK(r.code == 0);
    CHECK(r.out == "phase     1/2\nattained  true\n");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"transform", "--functor", "psi", "--class", "{}"}).code == 2);
    CHECK(run({"phase"}).code == 2);
    CHECK(run({"--help"}).code == 0);

    const auto bad = run({"transform", "--functor", "phi", "--class", R"({"n":"1","d":"0","c":"0","q":"0"})"});
    CHECK(bad.code == 1);
    CHECK(bad.out.empty());
    CHECK(error_of(bad).at("kind") == "parse_error");
    CHECK(error_of(bad).at("field") == "q");

    const auto inadm = run({"phase", "compare", "--left", R"({"n":"0","d":"0","c":"0","s":"-1"})", "--right",
                            R"({"n":"0","d":"0","c":"0","s":"1"})"});
    CHECK(inadm.code == 1);
    CHECK(error_of(inadm).at("kind") == "inadmissible_class");
    CHECK(error_of(inadm).at("argument") == "left");

    const auto params = run({"--params", R"({"e":"9","m":"1","alpha":"1","lambda":"1"})", "phase", "classify", "--class",
                             R"({"n":"0","d":"0","c":"1","s":"0"})"});
    CHECK(params.code == 1);
    CHECK(error_of(params).at("kind") == "parameter_error");
}

TEST_CASE("config file supplies parameters") {
    const auto path = std::filesystem::temp_directory_path() / "weierstab_cli_cfg.json";
    std::ofstream(path) << R"({"params":{"e":"1","m":"2","alpha":"1","lambda":"2"}})";
    const auto r = run({"--config", path.string(), "transform", "--functor", "phi", "--class", R"({"n":"1","d":"2","c":"3","s":"4"})"});
    CHECK(r.out == "{\"n\":\"2\",\"d\":\"-1\",\"c\":\"4\",\"s\":\"-9/2\"}\n");
    std::ofstream(path) << R"({"colour":"red"})";
    CHECK(run({"--config", path.string(), "transform", "--functor", "phi", "--class", R"({"n":"1","d":"2","c":"3","s":"4"})"}).code == 1);
    std::filesystem::remove(path);
}
