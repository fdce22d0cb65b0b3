#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

const std::string fixtures_dir = TAUTILT_FIXTURES;

std::string fx(const std::string& name) { return "'" + fixtures_dir + "/" + name + "'"; }

Result taucli(const std::string& args) {
    std::string cmd = std::string("'") + TAUCLI_PATH + "' " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST(Cli, TranslateOfFirstExample) {
    auto r = taucli("module tau --algebra " + fx("C.json") + " --module " + fx("M1.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("3/4/5 ⊕ 4"), std::string::npos) << r.out;
}

TEST(Cli, BongartzOfFirstExample) {
    auto r = taucli("bongartz --algebra " + fx("C.json") + " --module " + fx("M1.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1/2/3 ⊕ 3/4\n");
}

TEST(Cli, ScenarioExitCodes) {
    EXPECT_EQ(taucli("split check --scenario " + fx("m1-main.json")).code, 0);
    EXPECT_EQ(taucli("split check --scenario " + fx("m345-main3.json")).code, 0);
    EXPECT_EQ(taucli("split check --scenario " + fx("m1-wrong-complement.json")).code, 2);
    auto inline_args = taucli("split check --split " + fx("split.json") + " --statement PROP-RESULT --module " + fx("M2.json"));
    EXPECT_EQ(inline_args.code, 0);
    EXPECT_NE(inline_args.out.find("PROP-RESULT: Verified"), std::string::npos) << inline_args.out;
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(taucli("module tau --algebra " + fx("missing.json") + " --module " + fx("M1.json")).code, 3);
    EXPECT_EQ(taucli("module tau --algebra " + fx("C.json")).code, 3);
    EXPECT_EQ(taucli("no-such-command").code, 3);
    EXPECT_EQ(taucli("module tau --algebra " + fx("C.json") + " --module " + fx("M1.json") + " --field reals").code, 3);
    // a B-module handed to a C-only arrow set
    EXPECT_EQ(taucli("split induce --split " + fx("split.json") + " --module " + fx("split.json")).code, 3);
}

TEST(Cli, LimitExceeded) {
    EXPECT_EQ(taucli("catalogue build --algebra " + fx("B.json") + " --max-count 5").code, 4);
    EXPECT_EQ(taucli("bongartz --algebra " + fx("C.json") + " --module " + fx("M1.json") + " --max-dim 2").code, 4);
}

TEST(Cli, DotNodeCounts) {
    auto count_nodes = [](const std::string& dot) {
        std::size_t n = 0;
        for (std::size_t pos = 0; (pos = dot.find(" [label=\"(", pos)) != std::string::npos; ++pos) ++n;
        return n;
    };
    auto c = taucli("catalogue export-dot --algebra " + fx("C.json"));
    auto b = taucli("catalogue export-dot --algebra " + fx("B.json"));
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(count_nodes(c.out), 13u);
    EXPECT_EQ(count_nodes(b.out), 20u);
}

TEST(Cli, OutputIsByteIdentical) {
    auto args = "catalogue build --json --algebra " + fx("B.json");
    auto a = taucli(args);
    auto b = taucli(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    auto s1 = taucli("split check --json --scenario " + fx("m345-main3.json"));
    auto s2 = taucli("split check --json --scenario " + fx("m345-main3.json"));
    EXPECT_EQ(s1.out, s2.out);
    EXPECT_NE(s1.out.find("\"verdict\": \"Verified\""), std::string::npos);
}

TEST(Cli, ScenarioArtifactsAndCache) {
    auto dir = fs::temp_directory_path() / ("taucli-test-" + std::to_string(::getpid()));
    fs::remove_all(dir);
    auto r = taucli("scenario run --scenario " + fx("m1-main.json") + " --out '" + (dir / "art").string() +
                    "' --cache-dir '" + (dir / "cache").string() + "'");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("THM-MAIN: Verified"), std::string::npos);
    EXPECT_TRUE(fs::exists(dir / "art" / "report.json"));
    EXPECT_TRUE(fs::exists(dir / "art" / "C.dot"));
    EXPECT_TRUE(fs::exists(dir / "art" / "B.dot"));
    EXPECT_EQ(std::distance(fs::directory_iterator(dir / "cache"), fs::directory_iterator()), 2);
    auto again = taucli("scenario run --scenario " + fx("m1-main.json") + " --cache-dir '" + (dir / "cache").string() + "'");
    EXPECT_EQ(again.out, r.out);
    fs::remove_all(dir);
}

TEST(Cli, SplitOperations) {
    auto v = taucli("split validate --split " + fx("split.json"));
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("dim E = 3"), std::string::npos);
    auto e = taucli("split tensor-e --split " + fx("split.json") + " --module " + fx("U1.json"));
    EXPECT_NE(e.out.find("M (x) E = 1 "), std::string::npos) << e.out;
    auto i = taucli("split induce --split " + fx("split.json") + " --module " + fx("U1.json"));
    EXPECT_NE(i.out.find("1/2/3 ⊕ 3/4/1"), std::string::npos) << i.out;
}

TEST(Cli, PrimeFieldOverride) {
    auto r = taucli("module tau --field prime:3 --algebra " + fx("C.json") + " --module " + fx("M1.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("3/4/5 ⊕ 4"), std::string::npos);
    auto info = taucli("algebra info --field 2 --algebra " + fx("B.json"));
    EXPECT_NE(info.out.find("dimension 16"), std::string::npos);
}
