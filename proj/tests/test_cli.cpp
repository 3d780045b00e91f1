#include "ncsf/text.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace ncsf;

namespace {

struct Run {
    int status;
    std::string out;
};

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return out + "'";
}

Run ncsf_cli(const std::vector<std::string>& args) {
    std::string command = quote(NCSF_BINARY);
    for (const auto& a : args) command += " " + quote(a);
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    std::string out;
    std::array<char, 4096> buffer{};
    while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << contents;
    return path.string();
}

}  // namespace

TEST(Cli, Examples) {
    EXPECT_EQ(ncsf_cli({"convert", "p[1,3/2,4]", "--to", "m"}).out, "m[1,3/2,4] + m[1,2,3,4]\n");
    EXPECT_EQ(ncsf_cli({"mobius", "1/2/3/4", "1,2,3,4"}).out, "-6\n");
    EXPECT_EQ(ncsf_cli({"inner", "m[1,3/2,4]", "h[1,3/2,4]"}).out, "24\n");
}

TEST(Cli, Subcommands) {
    EXPECT_EQ(ncsf_cli({"omega", "e[1,3/2,4]"}).out, "h[1,3/2,4]\n");
    EXPECT_EQ(ncsf_cli({"project", "m[1,3/2,4]"}).out, "2*m[2,2]\n");
    EXPECT_EQ(ncsf_cli({"lift", "m[2,2]"}).out, "1/6*m[1,2/3,4] + 1/6*m[1,3/2,4] + 1/6*m[1,4/2,3]\n");
    EXPECT_EQ(ncsf_cli({"schur", "2"}).out, "m[1/2] + 2*m[1,2]\n");
    EXPECT_EQ(ncsf_cli({"expand", "m[1/2]", "--vars", "2"}).out, "x1 x2 + x2 x1\n");
    const auto jt = ncsf_cli({"jacobi-trudi", "(3,1)", "--vec", "[2,2]", "--variant", "h", "--vars", "2"});
    EXPECT_EQ(jt.status, 0);
    EXPECT_EQ(jt.out, ncsf_cli({"schur", "(3,1)", "--vec", "[2,2]", "--expand", "2"}).out);
    EXPECT_NE(jt.out.find("3*x1'^2 x1'' x2''"), std::string::npos);
    const auto table = ncsf_cli({"lattice", "--n", "2", "--table", "mobius"});
    EXPECT_EQ(table.out, "    1,2 1/2\n1,2   1   0\n1/2  -1   1\n");
    EXPECT_EQ(ncsf_cli({"verify", "mobius", "--max-n", "3"}).status, 0);
}

TEST(Cli, Rsk) {
    const auto biword = temp_file("ncsf_biword.txt", "1' 2' 2'' 2' 3'' 4'\n2' 1'' 3'' 3' 2'' 1'\n");
    const auto forward = ncsf_cli({"rsk", biword});
    ASSERT_EQ(forward.status, 0) << forward.out;
    EXPECT_EQ(forward.out, "1'' 1' 3'\n2' 2''\n3''\n\n1' 2'' 2'\n2' 3''\n4'\n");
    const auto tableaux = temp_file("ncsf_tableaux.txt", forward.out);
    const auto back = ncsf_cli({"rsk", "--inverse", tableaux});
    ASSERT_EQ(back.status, 0) << back.out;
    EXPECT_EQ(back.out, "1' 2' 2'' 2' 3'' 4'\n2' 1'' 3'' 3' 2'' 1'\n");
}

TEST(Cli, Json) {
    const auto out = ncsf_cli({"--format", "json", "convert", "h[1,2]", "--to", "m"});
    ASSERT_EQ(out.status, 0);
    const auto f = ncsym_from_json(Json::parse(out.out));
    EXPECT_EQ(f, parse_ncsym("m[1/2] + 2*m[1,2]"));
    // JSON is accepted as input as well
    EXPECT_EQ(ncsf_cli({"convert", out.out, "--to", "h"}).out, "h[1,2]\n");
    EXPECT_EQ(Json::parse(ncsf_cli({"mobius", "1/2/3", "1,2,3", "--format", "json"}).out)["mobius"], "2");
}

TEST(Cli, ExitCodes) {
    const auto parse = ncsf_cli({"convert", "m[1,2] + q[1]", "--to", "p"});
    EXPECT_EQ(parse.status, 2);
    EXPECT_NE(parse.out.find("position 9"), std::string::npos);
    EXPECT_EQ(ncsf_cli({"convert", "{\"basis\":", "--to", "p"}).status, 2);
    EXPECT_EQ(ncsf_cli({"mobius", "1/2", "1/2/3"}).status, 3);
    EXPECT_EQ(ncsf_cli({"lattice", "--n", "9", "--table", "meet"}).status, 3);
    EXPECT_EQ(ncsf_cli({"verify", "nosuch"}).status, 3);
    EXPECT_EQ(ncsf_cli({"rsk", "/nonexistent/file"}).status, 3);
    EXPECT_EQ(ncsf_cli({}).status, 1);
    EXPECT_EQ(ncsf_cli({"convert", "m[1]", "--to", "s"}).status, 1);
    EXPECT_EQ(ncsf_cli({"frobnicate"}).status, 1);
    EXPECT_EQ(ncsf_cli({"--help"}).status, 0);
}
