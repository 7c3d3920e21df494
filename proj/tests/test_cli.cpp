#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using spinorlab::cli::run;

namespace {
struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream o, e;
    const int c = run(args, o, e);
    return {c, o.str(), e.str()};
}

class TempDir {
public:
    TempDir() : dir_(fs::temp_directory_path() / ("spinorlab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name())) {
        fs::create_directories(dir_);
    }
    ~TempDir() { fs::remove_all(dir_); }
    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    fs::path path(const std::string& name) const { return dir_ / name; }

private:
    fs::path dir_;
};

const char* dipole = R"({"rep":"weyl","components":[[0.3,0],[0.1,-0.5],[0,0],[0,0]]})";
const char* regular = R"({"rep":"dirac","components":[[1,0],[0,0.5],[0.2,0],[-0.3,0]]})";
}  // namespace

TEST(Cli, ClassifyDipole) {
    TempDir d;
    const auto r = call({"classify", d.write("s.json", dipole)});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["class"], 6);
    EXPECT_TRUE(j.contains("tolerances"));
    EXPECT_TRUE(j.contains("conventions"));
    EXPECT_DOUBLE_EQ(j["tolerances"]["abs"].get<double>(), 1e-12);
}

TEST(Cli, ToleranceFlagsAreEmbedded) {
    TempDir d;
    const auto r = call({"--tol-abs", "1e-8", "--tol-rel", "1e-6", "classify", d.write("s.json", dipole)});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_DOUBLE_EQ(j["tolerances"]["abs"].get<double>(), 1e-8);
    EXPECT_DOUBLE_EQ(j["tolerances"]["rel"].get<double>(), 1e-6);
}

TEST(Cli, MultipleFilesGiveCsv) {
    TempDir d;
    const auto r = call({"classify", d.write("a.json", dipole), d.write("b.json", regular)});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("# tol_abs"), std::string::npos);
    EXPECT_NE(r.out.find("\nfile,rep,class,"), std::string::npos);
    EXPECT_NE(r.out.front(), '{');
}

TEST(Cli, MalformedJsonIsInputError) {
    TempDir d;
    const auto r = call({"classify", d.write("bad.json", R"({"rep":"dirac","components":[[1,0],)")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line"), std::string::npos);
}

TEST(Cli, UnknownRepIsInputError) {
    TempDir d;
    EXPECT_EQ(call({"classify", d.write("s.json", R"({"rep":"majorana","components":[[1,0],[0,0],[0,0],[0,0]]})")}).code, 2);
    EXPECT_EQ(call({"classify", d.write("t.json", R"({"rep":"dirac","components":[[1,0],[0,0]]})")}).code, 2);
    EXPECT_EQ(call({"classify", d.path("missing.json").string()}).code, 2);
}

TEST(Cli, UnknownCommandIsInputError) {
    EXPECT_EQ(call({"frobnicate"}).code, 2);
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"--format", "xml", "elko"}).code, 2);
}

TEST(Cli, ZeroToleranceIsVerificationFailure) {
    TempDir d;
    const auto r = call({"--tol-abs", "0", "--tol-rel", "0", "fierz", d.write("s.json", regular)});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(json::parse(r.out)["status"], "fail");
}

TEST(Cli, FierzAndTakahashi) {
    TempDir d;
    const auto f = d.write("s.json", regular);
    EXPECT_EQ(call({"fierz", f}).code, 0);
    EXPECT_EQ(call({"takahashi", f}).code, 0);
    EXPECT_EQ(call({"takahashi", f, "--probe", "1"}).code, 0);
}

TEST(Cli, Elko) {
    EXPECT_EQ(call({"elko", "--kind", "S", "--helicity", "+", "--m", "1.2", "--p", "0.1,0.2,0.3"}).code, 0);
    EXPECT_EQ(call({"elko", "--kind", "Q"}).code, 2);
    EXPECT_EQ(call({"elko", "--m", "-1"}).code, 2);
}

TEST(Cli, LorentzInvariantDispersion) {
    const auto r = call({"--format", "json", "lv-dispersion", "--m", "1", "--p", "0,0,1", "--b0", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    std::vector<double> roots;
    for (const auto& row : j["rows"]) roots.push_back(row["p0_re"].get<double>());
    ASSERT_EQ(roots.size(), 4u);
    EXPECT_NEAR(roots.front(), -std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(roots.back(), std::sqrt(2.0), 1e-12);
}

TEST(Cli, LvSpinorsNeedTimelikeFrame) {
    EXPECT_EQ(call({"lv-spinors", "--m", "1", "--p", "0,0,1", "--b0", "0.2"}).code, 0);
    EXPECT_EQ(call({"lv-spinors", "--m", "1", "--p", "0,0,1", "--b0", "0.2", "--bvec", "0.1,0,0"}).code, 2);
}

TEST(Cli, PropagatorOnShellIsInputError) {
    EXPECT_EQ(call({"lv-propagator", "--m", "1", "--p", "0,0,1", "--p0", "3"}).code, 0);
    EXPECT_EQ(call({"lv-propagator", "--m", "1", "--p", "0,0,1", "--p0", "1.4142135623730951"}).code, 2);
}

TEST(Cli, RedefineMajorana) {
    TempDir d;
    const std::string sp = R"("spinor":{"rep":"weyl","components":[[0,0],[0,1],[0,0],[1,0]]})";
    EXPECT_EQ(call({"redefine", "--kind", "majorana", "--params", d.write("m.json", "{" + sp + R"(,"delta":[0,1]})")}).code, 0);
    EXPECT_EQ(call({"redefine", "--kind", "majorana", "--params", d.write("n.json", "{" + sp + R"(,"delta":[1,0]})")}).code, 2);
    EXPECT_EQ(call({"redefine", "--kind", "bogus", "--params", d.path("m.json").string()}).code, 2);
}

TEST(Cli, ClassMapDeterministic) {
    const auto a = call({"--seed", "5", "class-map", "--samples", "50"});
    const auto b = call({"--seed", "5", "class-map", "--samples", "50"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("# seed: 5"), std::string::npos);
}

TEST(Cli, CosmoVerify) {
    TempDir d;
    const auto f = d.write("c.json", R"({"m":1.3,"C":0.8,"K":2.1,"beta":0.2,"delta_alpha":1e-3,"varsigma":0.4,"xi":0.2})");
    const auto r = call({"--format", "json", "cosmo-verify", "--params", f});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_EQ(json::parse(r.out)["status"], "pass");
    EXPECT_EQ(call({"cosmo-verify", "--params", d.write("b.json", R"({"m":1,"C":2,"K":1,"beta":0.2})")}).code, 2);
}

TEST(Cli, TorsionCouplings) {
    TempDir d;
    const auto f = d.write("t.json", R"({"spinor":{"rep":"weyl","components":[[0.3,0],[0.1,-0.5],[0,0],[0,0]]},
        "T":[[[0,1,0,0],[-1,0,0,0],[0,0,0,0],[0,0,0,0]],[[0,0,0,0],[0,0,0,0],[0,0,0,0.5],[0,0,-0.5,0]],
             [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]],[[0,0,0.2,0],[0,0,0,0],[-0.2,0,0,0],[0,0,0,0]]],
        "p":[1.5,0.1,0.2,0.3],"couplings":{"a1":0.5,"a4":0.75}})");
    const auto r = call({"--format", "json", "torsion-couplings", "--input", f});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, OutputFileMatchesStdout) {
    TempDir d;
    const auto f = d.write("s.json", regular);
    const auto a = call({"classify", f});
    const auto out = d.path("r.json");
    ASSERT_EQ(call({"--out", out.string(), "classify", f}).code, 0);
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), a.out);
}

TEST(Cli, HelpIsOk) { EXPECT_EQ(call({"--help"}).code, 0); }
