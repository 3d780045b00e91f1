// Acceptance criteria 1-10 run the verification suites at full size;
// criterion 11 drives the CLI binary against the golden files.
//
// usage: acceptance <path-to-ncsf> <golden-dir>

#include "ncsf/verify.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <sys/wait.h>

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

Outcome suite(const std::string& name) {
    const ncsf::SuiteResult result = ncsf::run_suite(name);
    for (const auto& check : result.checks)
        if (!check.passed) return {false, check.name + ": " + check.detail};
    return {true, std::to_string(result.checks.size()) + " checks"};
}

std::string quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    return out + "'";
}

// Runs a command, returning its exit status and standard output.
std::pair<int, std::string> run(const std::string& command) {
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buffer{};
    while (std::size_t n = std::fread(buffer.data(), 1, buffer.size(), pipe)) out.append(buffer.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli(const std::string& binary, const std::string& golden_dir) {
    const std::array<std::pair<std::string, std::vector<std::string>>, 3> cases{{
        {"convert.txt", {"convert", "p[1,3/2,4]", "--to", "m"}},
        {"mobius.txt", {"mobius", "1/2/3/4", "1,2,3,4"}},
        {"inner.txt", {"inner", "m[1,3/2,4]", "h[1,3/2,4]"}},
    }};
    for (const auto& [golden, args] : cases) {
        std::string command = quote(binary);
        for (const auto& a : args) command += " " + quote(a);
        const auto [status, out] = run(command);
        const std::string want = slurp(golden_dir + "/" + golden);
        if (want.empty()) return {false, "missing golden file " + golden};
        if (status != 0 || out != want) return {false, golden + ": got exit " + std::to_string(status) + ", " + out};
    }
    const auto [status, out] = run(quote(binary) + " verify all --max-n 4");
    if (status != 0) return {false, "verify all --max-n 4 exited " + std::to_string(status)};
    return {true, "3 golden files, verify all --max-n 4"};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <path-to-ncsf> <golden-dir>\n";
        return 1;
    }
    const std::array<std::string, 10> suites{"worked-examples", "basis-change", "oracle", "mobius",       "omega",
                                             "inner",          "projection",   "schur",  "jacobi-trudi", "rsk"};
    std::array<Outcome, 11> outcomes;
    for (std::size_t i = 0; i < suites.size(); ++i) {
        try {
            outcomes[i] = suite(suites[i]);
        } catch (const std::exception& e) {
            outcomes[i] = {false, std::string("exception: ") + e.what()};
        }
    }
    outcomes[10] = cli(argv[1], argv[2]);
    const std::array<const char*, 11> titles{
        "worked examples",       "change-of-basis round trips", "oracle equivalence", "Mobius consistency",
        "omega",                "inner product",               "projection and lifting", "Schur functions",
        "Jacobi-Trudi",         "RSK and Cauchy",              "CLI"};
    bool all = true;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        all = all && outcomes[i].passed;
        std::cout << (outcomes[i].passed ? "PASS " : "FAIL ") << i + 1 << ". " << titles[i] << " ("
                  << outcomes[i].detail << ")" << std::endl;
    }
    return all ? 0 : 1;
}
