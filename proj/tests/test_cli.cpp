#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "trinomia/report.hpp"
#include "trinomia/suites.hpp"

using namespace trinomia;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    std::string path = "/tmp/trinomia_cli_" + std::to_string(++counter) + ".out";
    std::string cmd = std::string(TRINOMIA_CLI_PATH) + " " + args + " > " + path + " 2>&1";
    int status = std::system(cmd.c_str());
    RunResult r;
    if (status != -1 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
    r.out = slurp(path);
    std::remove(path.c_str());
    return r;
}

// drop the single wall-clock line so reruns can be compared byte for byte
std::string strip_wall(std::string s) {
    auto pos = s.find("\"wall_ms\"");
    if (pos == std::string::npos) return s;
    auto eol = s.find('\n', pos);
    s.erase(pos, eol == std::string::npos ? s.size() - pos : eol - pos + 1);
    return s;
}

}  // namespace

TEST_CASE("triangle rows come out as exact CSV") {
    RunResult r = run_cli("gen tnk --rows 6 --format csv");
    CHECK(r.code == 0);
    CHECK(r.out == "1\n1,0\n1,2,0\n1,6,0,0\n1,12,6,0,0\n1,20,30,0,0,0\n");
}

TEST_CASE("sequence generation matches hand values") {
    RunResult r = run_cli("gen tbc --n 5 --b 2 --c 3");
    CHECK(r.code == 0);
    CHECK(r.out == "1,2,10,44,214,1052\n");

    RunResult lau = run_cli("gen laurent --n 2");
    CHECK(lau.code == 0);
    CHECK(lau.out == "1,2,3,2,1\n");

    RunResult tri = run_cli("gen triangle --rows 3 --b 1 --c 1");
    CHECK(tri.code == 0);
    CHECK(tri.out == "1\n1,1\n3,2,1\n");

    RunResult mz = run_cli("gen motzkin --n 4 --b 1 --c 1");
    CHECK(mz.code == 0);
    CHECK(mz.out == "1,1,2,4,9\n");
}

TEST_CASE("symbolic generation serializes terms in graded-lex order") {
    RunResult r = run_cli("gen tbc --n 2 --symbolic --format json");
    REQUIRE(r.code == 0);
    Json d = Json::parse(r.out);
    REQUIRE(d.contains("polys"));
    REQUIRE(d["polys"].size() == 3);
    CHECK(d["polys"][0] == Json::parse(R"({"terms": [[0, 0, "1"]]})"));
    CHECK(d["polys"][1] == Json::parse(R"({"terms": [[1, 0, "1"]]})"));
    CHECK(d["polys"][2] == Json::parse(R"({"terms": [[0, 1, "2"], [2, 0, "1"]]})"));
}

TEST_CASE("verification reports parse and pass at small bounds") {
    RunResult r = run_cli("verify hankel --n 4 --symbolic");
    REQUIRE(r.code == 0);
    Json d = Json::parse(r.out);
    CHECK(d["suite"] == "hankel-symbolic");
    CHECK(d["summary"]["total"] == 10);
    CHECK(d["summary"]["pass"] == 10);
    CHECK(d["summary"]["fail"] == 0);

    RunResult lim = run_cli("verify limits --n-ladder 200,800 --n 800");
    REQUIRE(lim.code == 0);
    Json ld = Json::parse(lim.out);
    CHECK(ld["summary"]["fail"] == 0);
    bool saw_ratio = false;
    for (const auto& c : ld["checks"]) {
        if (c["name"] == "central-ratio") {
            saw_ratio = true;
            CHECK(c["values"]["gap"].is_string());  // exact value, never a float
            CHECK(c["values"]["gap_float"].is_number());
        }
    }
    CHECK(saw_ratio);
}

TEST_CASE("identical configs give identical bytes apart from wall time") {
    RunResult a = run_cli("verify hankel --n 3 --symbolic");
    RunResult b = run_cli("verify hankel --n 3 --symbolic");
    REQUIRE(a.code == 0);
    REQUIRE(b.code == 0);
    CHECK(strip_wall(a.out) == strip_wall(b.out));

    RunResult j1 = run_cli("verify tli --max-sum 6 --jobs 1");
    RunResult j3 = run_cli("verify tli --max-sum 6 --jobs 3");
    REQUIRE(j1.code == 0);
    REQUIRE(j3.code == 0);
    CHECK(strip_wall(j1.out) == strip_wall(j3.out));
}

TEST_CASE("exit codes follow the 0/1/2 contract") {
    CHECK(run_cli("bogus").code == 2);
    CHECK(run_cli("gen tbc --symbolic --format csv").code == 2);
    CHECK(run_cli("gen tnk --symbolic").code == 2);
    CHECK(run_cli("verify sm --b 0 --c 1").code == 2);
    CHECK(run_cli("verify sm --b 2").code == 2);
    CHECK(run_cli("verify tli --max-sum 1").code == 2);
    CHECK(run_cli("--help").code == 0);

    RunResult fault = run_cli("verify tli --max-sum 3 --inject-fault");
    CHECK(fault.code == 1);
    Json d = Json::parse(fault.out);
    CHECK(d["summary"]["fail"] == 1);
    CHECK(d["checks"][0]["witness"]["note"] == "injected fault");
}

TEST_CASE("a shallow moment check on the open side is inconclusive, not a pass") {
    RunResult r = run_cli("verify sm --b 3 --c 3 --depth 1");
    CHECK(r.code == 1);
    Json d = Json::parse(r.out);
    CHECK(d["summary"]["inconclusive"] == 1);
    CHECK(d["checks"][0]["verdict"] == "inconclusive");
}

TEST_CASE("reports can be written to a file instead of stdout") {
    std::string path = "/tmp/trinomia_cli_report.json";
    RunResult r = run_cli("verify criteria --out " + path);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    Json d = Json::parse(slurp(path));
    CHECK(d["suite"] == "criteria");
    CHECK(d["summary"]["pass"] == 36);
    std::remove(path.c_str());
}

TEST_CASE("the quick aggregate passes end to end") {
    RunResult r = run_cli("report all --profile quick");
    REQUIRE(r.code == 0);
    Json d = Json::parse(r.out);
    CHECK(d["suite"] == "report-all-quick");
    CHECK(d["summary"]["fail"] == 0);
    CHECK(d["summary"]["inconclusive"] == 0);
    CHECK(d["summary"]["total"] == d["summary"]["pass"]);
}

TEST_CASE("report plumbing: verdict counts, exit codes, witness omission") {
    Report r;
    r.suite = "demo";
    r.checks.push_back({"a", Json::object(), Verdict::Pass, Json::object(), Json()});
    CHECK(r.exit_code() == 0);
    r.checks.push_back({"b", Json::object(), Verdict::Inconclusive, Json::object(), Json()});
    CHECK(r.exit_code() == 1);
    CHECK(r.count(Verdict::Pass) == 1);

    Json j = to_json(r);
    CHECK_FALSE(j["checks"][0].contains("witness"));

    CheckRecord w{"c", Json::object(), Verdict::Fail, Json::object(), Json{{"note", "x"}}};
    CHECK(to_json(w)["witness"]["note"] == "x");

    Report merged = merge_reports("both", {r, r});
    CHECK(merged.checks.size() == 4);
    CHECK(merged.checks[0].name == "demo/a");
}

TEST_CASE("suite verdict mapping on the moment boundary") {
    CHECK(suite_sm_point(2, 1, 10).all_pass());   // boundary of the decisive side
    CHECK(suite_sm_point(1, 1, 10).all_pass());   // decisively not a moment sequence
    Report shallow = suite_sm_point(3, 3, 1);     // open side, horizon too short
    CHECK(shallow.count(Verdict::Inconclusive) == 1);
    CHECK(shallow.exit_code() == 1);
}
