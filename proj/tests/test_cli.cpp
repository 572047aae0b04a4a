#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "ufi/cli.hpp"

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = ufi::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

const std::string running = R"({"vertices":"abcdef","facets":["abc","bcd","ce","de","df"],"colouring":["da","be","cf"]})";
const std::string running_d = R"({"vertices":"abcdef","facets":["abc","bcd","ce","de","df"],"colouring":["af","be","c","d"]})";
const std::string empty_face = R"({"vertices":[],"facets":[[]]})";

std::string write_temp(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path);
    f << body;
    return path.string();
}

} // namespace

TEST(Cli, RunningBettiTable) {
    auto r = invoke({"betti", running});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find(" 6: 17 28 14  2\n"), std::string::npos) << r.out;

    auto q = invoke({"betti", "--quotient", "--suppress-zero-rows", running});
    EXPECT_EQ(q.out, "     0  1  2  3  4\n 0:  1  .  .  .  .\n 5:  . 17 28 14  2\n");
}

TEST(Cli, OracleOnEmptyFace) {
    auto r = invoke({"betti", "--oracle", empty_face});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "    0\n 0: 1\nclosed form agrees with oracle: yes\n");
    auto j = ufi::Json::parse(invoke({"--json", "betti", "--oracle", empty_face}).out);
    EXPECT_EQ(j["betti"].size(), 1u);
}

TEST(Cli, CheckWitnesses) {
    auto r = invoke({"check", running_d});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("not nested: link(f) ⊄ link(a)"), std::string::npos) << r.out;

    auto order = invoke({"check", R"({"vertices":"abcdef","facets":["abc","bcd","ce","de","df"],"colouring":["ad","be","cf"]})"});
    EXPECT_NE(order.out.find("not in nesting order"), std::string::npos);
    EXPECT_NE(order.out.find("nesting order: {d,a} | {b,e} | {c,f}"), std::string::npos);

    auto improper = invoke({"check", R"({"facets":["ab"],"colouring":["ab"]})"});
    EXPECT_NE(improper.out.find("not proper: ab"), std::string::npos);

    auto ok = invoke({"check", running});
    EXPECT_NE(ok.out.find("nested (classes listed in nesting order)"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(invoke({"ideal", "{\"facets\": ["}).status, 2);
    EXPECT_EQ(invoke({"ideal", "/nonexistent/file.json"}).status, 2);
    EXPECT_EQ(invoke({"frobnicate", running}).status, 2);
    EXPECT_EQ(invoke({}).status, 2);
    EXPECT_EQ(invoke({"betti", "--oracle", "--max-generators", "5", running}).status, 3);
    EXPECT_EQ(invoke({"primes", "--powers", "9", running}).status, 3);

    auto pre = invoke({"betti", R"({"facets":["ab","cd"],"colouring":["ac","bd"]})"});
    EXPECT_EQ(pre.status, 4);
    EXPECT_NE(pre.err.find("witness: link(c) ⊄ link(a)"), std::string::npos) << pre.err;
    EXPECT_EQ(invoke({"check", R"({"facets":["ab"],"colouring":["a"]})"}).status, 4);
}

TEST(Cli, IdealListing) {
    auto r = invoke({"ideal", running});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 17);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x1^2*x2^2*x3^2");

    auto tagged = invoke({"ideal", "--tag-faces", running});
    EXPECT_NE(tagged.out.find("\tabc\n"), std::string::npos);
}

TEST(Cli, NonNestedBettiThroughOracle) {
    auto r = invoke({"--json", "betti", "--oracle", R"({"facets":["ab","cd"],"colouring":["ac","bd"]})"});
    EXPECT_EQ(r.status, 0);
    auto j = ufi::Json::parse(r.out);
    long long first = 0;
    for (const auto& e : j["betti"]) {
        if (e[0] == 1) {
            first += e[2].get<long long>();
        }
    }
    EXPECT_EQ(first, 9);
}

TEST(Cli, BoijSoederberg) {
    auto r = invoke({"bs", "--quotient", "--oracle", running});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out,
              "108 * pi(0,6,7,8,9)\n116 * pi(0,6,7,8)\n26 * pi(0,6,7)\n"
              "reconstruction equals the Betti table: yes\n"
              "greedy decomposition of the oracle table agrees: yes\n");
}

TEST(Cli, InvariantsAndPrimes) {
    auto inv = invoke({"invariants", "--oracle", running});
    EXPECT_EQ(inv.status, 0);
    EXPECT_NE(inv.out.find("Q(t) = 1 + 2t + 3t^2 + 4t^3 + 5t^4 + 6t^5 - 10t^6 + 2t^7\n"), std::string::npos);
    EXPECT_NE(inv.out.find("multiplicity: 13\n"), std::string::npos);
    EXPECT_NE(inv.out.find("oracle agrees: yes\n"), std::string::npos);

    auto primes = invoke({"primes", "--powers", "2", "--oracle",
                          R"({"vertices":"abcdef","facets":["abc","bcd","ce","de","df"],"colouring":["da","be","c","f"]})"});
    EXPECT_EQ(primes.status, 0);
    EXPECT_NE(primes.out.find("(x1, x2, x3, x4), (x1, x2, x4)"), std::string::npos) << primes.out;
    EXPECT_NE(primes.out.find("contains Ass(R/I^1): yes"), std::string::npos);
    EXPECT_NE(primes.out.find("generic decomposition agrees: yes"), std::string::npos);
}

TEST(Cli, ChromaticAndCubical) {
    auto chi = invoke({"chromatic", R"({"facets":["abc","bd","cde"]})"});
    EXPECT_EQ(chi.status, 0);
    EXPECT_NE(chi.out.find("nested chromatic number: 5\n"), std::string::npos) << chi.out;
    EXPECT_NE(chi.out.find("(nested: yes)"), std::string::npos);
    EXPECT_NE(chi.out.find("1-skeleton graph: 3\n"), std::string::npos);

    auto cub = invoke({"cubical", "--resolution", running});
    EXPECT_EQ(cub.status, 0) << cub.out;
    auto dot = invoke({"cubical", "--dot", running});
    EXPECT_EQ(dot.out.rfind("graph", 0), 0u);
    auto pdot = invoke({"poset", "--dot", running});
    EXPECT_EQ(pdot.out.rfind("digraph", 0), 0u);
}

TEST(Cli, Product) {
    auto second = write_temp("ufi_cli_triangle.json", R"({"facets":["abc"],"colouring":["a","b","c"]})");
    auto r = invoke({"product", running, second});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("nested (in nesting order): yes"), std::string::npos);
    auto edge = write_temp("ufi_cli_edge.json", R"({"facets":["ab"],"colouring":["a","b"]})");
    EXPECT_EQ(invoke({"product", running, edge}).status, 4);
    std::filesystem::remove(second);
    std::filesystem::remove(edge);
}

TEST(Cli, VerifyBundle) {
    auto r = invoke({"verify", running});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_GE(std::count(r.out.begin(), r.out.end(), '\n'), 19);

    auto non = invoke({"verify", running_d});
    EXPECT_EQ(non.status, 0);
    EXPECT_NE(non.out.find("closed forms skipped"), std::string::npos);
}

TEST(Cli, Deterministic) {
    for (const char* cmd : {"ideal", "poset", "betti", "primes", "verify"}) {
        auto a = invoke({"--json", cmd, running});
        auto b = invoke({"--json", cmd, running});
        EXPECT_EQ(a.out, b.out) << cmd;
    }
}

TEST(Cli, JsonRoundTrip) {
    auto ideal = invoke({"--json", "ideal", running});
    auto again = invoke({"--json", "ideal", ideal.out});
    EXPECT_EQ(ideal.out, again.out);

    auto poset = invoke({"--json", "poset", running});
    auto pj = ufi::Json::parse(poset.out);
    auto from_poset = invoke({"ideal", pj.dump()});
    EXPECT_EQ(from_poset.out, invoke({"ideal", running}).out);
    EXPECT_EQ(invoke({"betti", pj.dump()}).out, invoke({"betti", running}).out);

    auto product = invoke({"--json", "product", running, running});
    auto pr = ufi::Json::parse(product.out);
    auto gens = pr["generators"];
    pr.erase("generators");
    pr.erase("nested");
    auto regenerated = ufi::Json::parse(invoke({"--json", "ideal", pr.dump()}).out);
    EXPECT_EQ(regenerated["generators"], gens);
}

#ifdef UFI_BINARY
TEST(Cli, Binary) {
    auto input = write_temp("ufi_cli_running.json", running);
    std::string cmd = std::string(UFI_BINARY) + " betti " + input + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    ASSERT_NE(p, nullptr);
    std::string out;
    std::array<char, 256> buf{};
    while (fgets(buf.data(), static_cast<int>(buf.size()), p)) {
        out += buf.data();
    }
    int status = pclose(p);
    EXPECT_EQ(WEXITSTATUS(status), 0);
    EXPECT_EQ(out, invoke({"betti", input}).out);

    std::string bad = std::string(UFI_BINARY) + " ideal '{' > /dev/null 2>&1";
    EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), 2);
    std::filesystem::remove(input);
}
#endif
