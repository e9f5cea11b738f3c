#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "waring/cli.hpp"
#include "waring/report.hpp"

using namespace waring;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::initializer_list<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(std::vector<std::string>(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("trace-power prints the element") {
    auto r = run({"trace-power", "--k", "16", "--ring", "Z/100", "--t", "1", "--delta", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");

    auto r9 = run({"trace-power", "--k", "9", "--ring", "Z/7", "--t", "1", "--delta", "1"});
    CHECK(r9.out == "5\n");

    auto red = run({"trace-power", "--k", "10", "--ring", "Z/100", "--t", "13", "--delta", "7",
                    "--reduced"});
    CHECK(red.code == 0);

    auto ex = run({"--json", "trace-power", "--k", "9", "--ring", "Z/7", "--t", "1", "--delta",
                   "1", "--explain"});
    auto j = nlohmann::json::parse(ex.out);
    CHECK(j["coefficients"] == nlohmann::json({1, -9, 27, -30, 9}));
}

TEST_CASE("verify agreement drives the exit code") {
    auto ok = run({"verify", "--family", "deg9", "--ring", "Z/3[e]/(e^2)"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("agreement: true") != std::string::npos);

    auto bad = run({"verify", "--family", "deg15", "--ring", "Z/2[x]/(x^2+x+1)"});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("agreement: false") != std::string::npos);
}

TEST_CASE("verify --json round trips through the report type") {
    auto r = run({"--json", "verify", "--family", "deg16", "--ring", "Z/2[e]/(e^2)"});
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    TheoremReport rep = TheoremReport::from_json(j);
    CHECK(rep.to_json() == j);
    CHECK(rep.agreement);
}

TEST_CASE("order subcommand") {
    auto fail3 = run({"order", "--poly", "x^2-x+1", "--p", "3"});
    CHECK(fail3.code == 0);
    CHECK(fail3.out.find("FAILS") != std::string::npos);
    CHECK(fail3.out.find("disc = -3") != std::string::npos);

    auto hold3 = run({"order", "--poly", "x^2-x-1", "--p", "3", "--family", "deg9"});
    CHECK(hold3.code == 0);
    CHECK(hold3.out.find("HOLDS") != std::string::npos);
    CHECK(hold3.out.find("every matrix over this order is a sum of 9th powers") !=
          std::string::npos);

    auto gauss = run({"order", "--poly", "x^2+1", "--p", "2"});
    CHECK(gauss.out.find("FAILS") != std::string::npos);
}

TEST_CASE("set subcommand") {
    auto member = run({"set", "--kind", "s14", "--ring", "Z/14", "--element", "1"});
    CHECK(member.code == 0);
    CHECK(member.out.find("member") == 0);

    auto non = run({"set", "--kind", "witt:3:1", "--ring", "Z/3[e]/(e^2)", "--element", "e"});
    CHECK(non.out.find("non-member") != std::string::npos);

    auto table = run({"set", "--kind", "deg9", "--ring", "Z/9"});
    CHECK(table.code == 0);
    CHECK(table.out.find("9 members") != std::string::npos);
}

TEST_CASE("subgroup and decide subcommands") {
    auto sub = run({"subgroup", "--k", "9", "--ring", "Z/3[e]/(e^2)", "--n", "2"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("3 of 9") != std::string::npos);

    auto yes = run({"decide", "--k", "2", "--ring", "Z/2", "--matrix", "2; 1,0; 0,1",
                    "--witness", "--max-terms", "1"});
    CHECK(yes.code == 0);
    CHECK(yes.out.find("YES") != std::string::npos);
    CHECK(yes.out.find("witness with 1 term") != std::string::npos);

    auto no = run({"decide", "--k", "9", "--ring", "Z/3[e]/(e^2)", "--matrix", "2; e,0; 0,0",
                   "--witness", "--max-terms", "2"});
    CHECK(no.code == 0);
    CHECK(no.out.find("NO") != std::string::npos);
    CHECK(no.out.find("INCONCLUSIVE") != std::string::npos);
}

TEST_CASE("matrix files load") {
    std::string path = "cli_test_matrix.txt";
    {
        std::ofstream f(path);
        f << "2; 1,0; 0,1\n";
    }
    auto r = run({"decide", "--k", "3", "--ring", "Z/5", "--matrix", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("YES") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("identity and certify subcommands") {
    auto ids = run({"identity", "--k", "10"});
    CHECK(ids.code == 0);
    CHECK(ids.out.find("PASS k10.pow10") != std::string::npos);

    auto one = run({"certify", "--k", "16", "--ring", "Z/16", "--entry", "deg16.R"});
    CHECK(one.code == 0);
    CHECK(one.out.find("PASS deg16.R") != std::string::npos);

    // the known-broken printed entry fails certification honestly
    auto broken = run({"certify", "--k", "15", "--ring", "Z/2[x]/(x^2+x+1)", "--entry",
                       "deg15.e15"});
    CHECK(broken.code == 1);
    CHECK(broken.out.find("FAIL deg15.e15") != std::string::npos);
}

TEST_CASE("universe subcommand with a tiny config") {
    std::string path = "cli_test_universe.txt";
    {
        std::ofstream f(path);
        f << "# tiny universe\nZ/2 budget=1000000\n";
    }
    auto r = run({"universe", "--config", path});
    CHECK(r.code == 0);
    std::remove(path.c_str());
}

TEST_CASE("usage and budget errors exit 2") {
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"verify", "--family", "deg9"}).code == 2);           // missing --ring
    CHECK(run({"verify", "--family", "deg99", "--ring", "Z/4"}).code == 2);
    CHECK(run({"trace-power", "--k", "9", "--ring", "Z/bad", "--t", "0", "--delta", "0"}).code ==
          2);
    auto tight = run({"--budget", "10", "subgroup", "--k", "9", "--ring", "Z/16"});
    CHECK(tight.code == 2);
    CHECK(tight.err.find("budget") != std::string::npos);
}

TEST_CASE("WARING_BUDGET environment variable is honored") {
    setenv("WARING_BUDGET", "10", 1);
    auto r = run({"subgroup", "--k", "9", "--ring", "Z/16"});
    unsetenv("WARING_BUDGET");
    CHECK(r.code == 2);
    CHECK(r.err.find("budget") != std::string::npos);

    setenv("WARING_BUDGET", "100000000", 1);
    auto big = run({"subgroup", "--k", "9", "--ring", "Z/16"});
    unsetenv("WARING_BUDGET");
    CHECK(big.code == 0);
}

TEST_CASE("malformed universe config exits 2") {
    std::string path = "cli_bad_universe.txt";
    {
        std::ofstream f(path);
        f << "Z/6 budget=soon\n";
    }
    CHECK(run({"universe", "--config", path}).code == 2);
    {
        std::ofstream f(path);
        f << "Q/6\n";
    }
    CHECK(run({"universe", "--config", path}).code == 2);
    std::remove(path.c_str());
    CHECK(run({"universe", "--config", "does_not_exist.cfg"}).code == 2);
}
