#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cwords/cli.hpp"

namespace {

struct CliResult {
    int status;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = cwords::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("detect") {
    auto avoid = run_cli({"detect", "--pattern", "congruential:2:2", "--word", "010",
                          "--expect", "avoid"});
    CHECK(avoid.status == 0);
    CHECK(avoid.out == "avoids\n");

    auto found = run_cli({"detect", "--pattern", "congruential:2:2", "--word", "0100"});
    CHECK(found.status == 0);
    CHECK(found.out ==
          "found {\"kind\":\"congruential\",\"start\":3,\"m\":1,\"r\":2,\"sums\":[0,0]}\n");

    auto mismatch = run_cli({"detect", "--pattern", "square", "--word", "012", "--expect",
                             "found"});
    CHECK(mismatch.status == 1);

    auto adjacent = run_cli({"detect", "--pattern", "adjacent-equal-sum", "--word", "1,2,3",
                             "--expect", "found"});
    CHECK(adjacent.status == 0);
    CHECK(adjacent.out ==
          "found {\"kind\":\"adjacent-equal-sum\",\"i\":1,\"j\":2,\"j_prime\":3,\"sum\":3}\n");

    auto json = run_cli({"detect", "--pattern", "square", "--word", "0101", "--json"});
    CHECK(json.status == 0);
    CHECK(json.out.find("\"avoided\": false") != std::string::npos);
    CHECK(json.out.find("\"start\": 1") != std::string::npos);

    CHECK(run_cli({"detect", "--pattern", "nonsense", "--word", "0"}).status == 2);
    CHECK(run_cli({"detect", "--pattern", "square", "--word", "01x"}).status == 2);
    CHECK(run_cli({"detect", "--pattern", "square"}).status == 2);
    CHECK(run_cli({"detect", "--pattern", "square", "--word", "010", "--expect", "maybe"})
              .status == 2);
}

TEST_CASE("search json output is stable and exact") {
    auto a = run_cli({"search", "--r", "2", "--k", "3", "--json"});
    auto b = run_cli({"search", "--r", "2", "--k", "3", "--json"});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"l\": 7") != std::string::npos);
    CHECK(a.out.find("\"witness\": \"0102010\"") != std::string::npos);
    CHECK(a.out.find("\"complete\": true") != std::string::npos);

    auto human = run_cli({"search", "--r", "2", "--k", "2"});
    CHECK(human.status == 0);
    CHECK(human.out.find("l(2,2) = 3") != std::string::npos);
    CHECK(human.out.find("witness 010") != std::string::npos);

    auto capped = run_cli({"search", "--r", "2", "--k", "4", "--budget", "10"});
    CHECK(capped.status == 3);

    CHECK(run_cli({"search", "--r", "1", "--k", "2"}).status == 2);
    CHECK(run_cli({"search", "--k", "2"}).status == 2);
}

TEST_CASE("table") {
    auto quick = run_cli({"table", "--rows", "2:2,3:2"});
    CHECK(quick.status == 0);
    CHECK(quick.out.find("r=2 k=2 l=3 witness=010") != std::string::npos);
    CHECK(quick.out.find("r=3 k=2 l=9 witness=001101100") != std::string::npos);
    CHECK(quick.out.find("status=exact") != std::string::npos);

    auto json = run_cli({"table", "--rows", "2:2", "--json"});
    CHECK(json.status == 0);
    CHECK(json.out.find("\"golden_l\": 3") != std::string::npos);
    CHECK(json.out.find("\"status\": \"exact\"") != std::string::npos);

    auto starved = run_cli({"table", "--rows", "2:5", "--budget", "20"});
    CHECK(starved.status == 3);

    CHECK(run_cli({"table", "--rows", "2-2"}).status == 2);
    CHECK(run_cli({"table", "--rows", ""}).status == 2);
}

TEST_CASE("construct") {
    auto p3 = run_cli({"construct", "--prime", "3", "--verify"});
    CHECK(p3.status == 0);
    CHECK(p3.out.find("0,1,2,0,1\n") != std::string::npos);
    CHECK(p3.out.find("\"p\": 3") != std::string::npos);
    CHECK(p3.out.find("verified: no congruential 2-power mod 3") != std::string::npos);

    auto json = run_cli({"construct", "--prime", "5", "--json"});
    CHECK(json.status == 0);
    CHECK(json.out.find("\"word_len\": 19") != std::string::npos);

    CHECK(run_cli({"construct", "--prime", "4"}).status == 2);
    CHECK(run_cli({"construct", "--prime", "2"}).status == 2);
}

TEST_CASE("morphism") {
    auto phi2 = run_cli({"morphism", "--name", "phi", "--power", "2"});
    CHECK(phi2.status == 0);
    CHECK(phi2.out == "0,1,0',-1,0,1,-1,1,0',-1,0,1,0',-1,1,-1\n");

    auto coded = run_cli({"morphism", "--name", "phi", "--power", "2", "--coding", "tau"});
    CHECK(coded.status == 0);
    CHECK(coded.out == "0,1,0,-1,0,1,-1,1,0,-1,0,1,0,-1,1,-1\n");

    auto prefix = run_cli({"morphism", "--name", "psi", "--prefix", "10", "--json"});
    CHECK(prefix.status == 0);
    CHECK(prefix.out.find("\"length\": 10") != std::string::npos);
    CHECK(prefix.out.find("\"word\": \"0,1,0,-1,0,1,-1,1,0,-1\"") != std::string::npos);

    CHECK(run_cli({"morphism", "--name", "rho", "--power", "1"}).status == 2);
    CHECK(run_cli({"morphism", "--name", "phi"}).status == 2);
    CHECK(run_cli({"morphism", "--name", "phi", "--power", "1", "--prefix", "4"}).status == 2);
}

TEST_CASE("morphism from a seed file") {
    std::string path = "cwords_cli_test_morphism.txt";
    {
        std::ofstream f(path);
        f << "0 -> 0 1\n1 -> 1 0\n";  // Thue-Morse
    }
    auto res = run_cli({"morphism", "--seed-file", path, "--prefix", "8"});
    CHECK(res.status == 0);
    CHECK(res.out == "0,1,1,0,1,0,0,1\n");
    std::remove(path.c_str());

    CHECK(run_cli({"morphism", "--seed-file", "missing_file.txt", "--power", "1"}).status == 2);
}

TEST_CASE("verify") {
    auto zeta = run_cli({"verify", "--zeta-lemma", "2"});
    CHECK(zeta.status == 0);
    CHECK(zeta.out.find("FAIL") == std::string::npos);
    CHECK(zeta.out.find("ok\n") != std::string::npos);

    auto tau = run_cli({"verify", "--tau-phi-psi", "3", "--json"});
    CHECK(tau.status == 0);
    CHECK(tau.out.find("\"ok\": true") != std::string::npos);

    // covers the detector run on the first 1000 letters of the psi fixed point
    auto psi = run_cli({"verify", "--morphism", "psi", "--length", "1000"});
    CHECK(psi.status == 0);
    CHECK(psi.out.find("ok\n") != std::string::npos);

    CHECK(run_cli({"verify"}).status == 2);
    CHECK(run_cli({"verify", "--morphism", "phi", "--length", "10"}).status == 2);
    CHECK(run_cli({"verify", "--zeta-lemma", "1", "--tau-phi-psi", "1"}).status == 2);
}

TEST_CASE("ramsey") {
    auto om = run_cli({"ramsey", "omega", "--t", "3", "--k", "1"});
    CHECK(om.status == 0);
    CHECK(om.out.find("omega(3,1) = 3") != std::string::npos);

    auto w = run_cli({"ramsey", "w1", "--t", "3", "--k", "1", "--json"});
    CHECK(w.status == 0);
    CHECK(w.out.find("\"value\": 3") != std::string::npos);

    auto capped = run_cli({"ramsey", "omega", "--t", "3", "--k", "2", "--cap", "2"});
    CHECK(capped.status == 3);
    CHECK(capped.out.find("unresolved") != std::string::npos);

    auto bounds = run_cli({"ramsey", "check-bounds", "--k", "2", "--t", "2"});
    CHECK(bounds.status == 0);
    CHECK(bounds.out.find("HOLDS") != std::string::npos);
    CHECK(bounds.out.find("VIOLATED") == std::string::npos);

    CHECK(run_cli({"ramsey"}).status == 2);
    CHECK(run_cli({"ramsey", "omega", "--t", "3"}).status == 2);
}

TEST_CASE("top-level usage") {
    CHECK(run_cli({}).status == 2);
    CHECK(run_cli({"frobnicate"}).status == 2);
    auto help = run_cli({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("detect") != std::string::npos);
}
