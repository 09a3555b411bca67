#include "coxfs/cli.hpp"

#include "json.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
    json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "coxfs");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = coxfs::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json claim(const json& reports, const std::string& id)
{
    for (const auto& r : reports)
        if (r["claim"] == id) return r;
    return nullptr;
}

} // namespace

TEST(Cli, Group)
{
    auto r = run({"group", "A3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto d = r.doc();
    EXPECT_EQ(d["order"], 24);
    EXPECT_EQ(d["reflections"], 6);
    EXPECT_EQ(d["degrees"], json({2, 3, 4}));
    EXPECT_EQ(d["classes"].size(), 5u);
    EXPECT_EQ(d["coxeter_matrix"][0][1], 3);

    auto h = run({"group", "I2", "--m", "7", "--format", "csv"});
    ASSERT_EQ(h.code, 0) << h.err;
    EXPECT_EQ(h.out.substr(0, h.out.find('\n')), "class,representative,length,size,order,involution");
}

TEST(Cli, BadUsage)
{
    EXPECT_EQ(run({"group", "Z9"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"group"}).code, 2);
    EXPECT_EQ(run({"group", "A3", "--bogus"}).code, 2);
    EXPECT_EQ(run({"group", "A3", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"group", "A3", "--max-order", "0"}).code, 2);
    EXPECT_EQ(run({"decompose", "A3", "--sigma", "nope"}).code, 2);
    EXPECT_EQ(run({"decompose", "A3", "--k", "1/x"}).code, 2);
    EXPECT_EQ(run({"verify-all", "A3", "--claims", "nonsense"}).code, 2);
    EXPECT_EQ(run({"special", "A3"}).code, 2);
    EXPECT_EQ(run({"fourier", "H4"}).code, 2);
    EXPECT_EQ(run({"group", "A5", "--max-order", "100"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, MaxOrderFromEnvironment)
{
    setenv("COXFS_MAX_ORDER", "100", 1);
    auto r = run({"group", "A5"});
    unsetenv("COXFS_MAX_ORDER");
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("COXFS_MAX_ORDER"), std::string::npos) << r.err;
    EXPECT_EQ(run({"group", "A5"}).code, 0);
}

TEST(Cli, Decompose)
{
    auto r = run({"decompose", "A3", "--sigma", "sigma_2", "--k", "1/2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto d = r.doc();
    EXPECT_EQ(d["relations"], true);
    EXPECT_EQ(d["k"], "1/2");
    ASSERT_EQ(d["classes"].size(), 1u);
    EXPECT_EQ(d["classes"][0]["multiplicities"], json({{"(2,2)", 1}, {"(1,1,1,1)", 1}}));
    EXPECT_EQ(d["classes"][0]["closed_form"], true);

    auto all = run({"decompose", "I2(6)"}).doc();
    EXPECT_EQ(all["chi_W"]["phi2,1"], 2);
    EXPECT_FALSE(all["chi_W"].contains("phi2,2"));
}

TEST(Cli, Gelfand)
{
    EXPECT_EQ(run({"gelfand", "H3"}).doc()["gelfand_model"], true);
    EXPECT_EQ(run({"gelfand", "BC3"}).doc()["gelfand_model"], false);
}

TEST(Cli, Special)
{
    auto d = run({"special", "BC2"}).doc();
    std::vector<std::string> got;
    for (const auto& s : d["specials"]) got.push_back(s["bipartition"]);
    EXPECT_EQ(got.size(), 3u);
}

TEST(Cli, UchAndFourier)
{
    auto u = run({"uch", "H3"});
    ASSERT_EQ(u.code, 0) << u.err;
    EXPECT_EQ(u.doc()["members"].size(), 16u);
    EXPECT_EQ(u.doc()["families"].size(), 7u);

    auto f = run({"fourier", "I2(5)", "--verify-fusion", "--epsilon"});
    ASSERT_EQ(f.code, 0) << f.err;
    auto d = f.doc();
    EXPECT_EQ(d["epsilon_unique"], true);
    for (const auto& fam : d["families"]) EXPECT_EQ(fam["axioms"]["modularity"], true);

    // I2(12) has several admissible sign patterns
    EXPECT_EQ(run({"fourier", "I2(12)", "--epsilon"}).code, 1);
}

TEST(Cli, Cells)
{
    auto r = run({"cells", "I2(6)", "--kottwitz", "--p3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto d = r.doc();
    EXPECT_EQ(d["cells"].size(), 4u);
    EXPECT_EQ(d["kottwitz"]["identity"], true);
    EXPECT_EQ(d["fourier_fixed"], true);
    EXPECT_EQ(run({"cells", "A3", "--p3"}).code, 2);
}

TEST(Cli, VerifyAll)
{
    auto h3 = run({"verify-all", "H3", "--jobs", "3"});
    EXPECT_EQ(h3.code, 0) << h3.out;
    auto d = h3.doc();
    for (const char* c : {"involution-decomposition", "gelfand-model", "left-cells", "kottwitz", "epsilon", "cell-fourier-fixed"})
        EXPECT_EQ(claim(d, c)["status"], "pass") << c;
    EXPECT_TRUE(claim(d, "fake-degree-transform").is_null());

    auto i7 = run({"verify-all", "I2", "--m", "7"});
    EXPECT_EQ(i7.code, 0) << i7.out;
    for (const auto& rep : i7.doc()) EXPECT_EQ(rep["status"], "pass") << rep["claim"];

    auto i12 = run({"verify-all", "I2(12)", "--claims", "epsilon,fake-degree-transform"});
    EXPECT_EQ(i12.code, 1);
    auto r12 = i12.doc();
    ASSERT_EQ(r12.size(), 2u);
    EXPECT_EQ(claim(r12, "epsilon")["status"], "fail");
    EXPECT_EQ(claim(r12, "fake-degree-transform")["status"], "pass");
}

TEST(Cli, VerifyAllIsDeterministic)
{
    auto a = run({"verify-all", "BC3", "--jobs", "4"});
    auto b = run({"verify-all", "BC3"});
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    auto text = run({"verify-all", "BC3", "--format", "text"});
    EXPECT_NE(text.out.find("special-characters"), std::string::npos);
}

TEST(Cli, H4DataFile)
{
    auto skip = run({"verify-all", "H4", "--claims", "h4-big-family"});
    EXPECT_EQ(skip.code, 0) << skip.err;
    EXPECT_EQ(claim(skip.doc(), "h4-big-family")["status"], "skipped");

    std::string path = ::testing::TempDir() + "h4_broken.json";
    std::ofstream(path) << R"js({"labels": ["a", "b"], "fourier_matrix": [["0","1"],["-1","0"]],
        "eigenvalues": ["1","1"], "provenance": "test"})js";
    auto bad = run({"verify-all", "H4", "--claims", "h4-big-family", "--h4-data", path});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(claim(bad.doc(), "h4-big-family")["status"], "fail");
}
