// ncsf: command-line front end to the kernel.

#include "ncsf/csym.hpp"
#include "ncsf/error.hpp"
#include "ncsf/macmahon.hpp"
#include "ncsf/ncsym.hpp"
#include "ncsf/oracle.hpp"
#include "ncsf/rsk.hpp"
#include "ncsf/set_partition.hpp"
#include "ncsf/text.hpp"
#include "ncsf/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ncsf;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kParse = 2, kSemantic = 3, kVerification = 4 };

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

// Expressions may also be given as JSON objects.
NCSymElement read_ncsym(const std::string& text) {
    if (!text.empty() && text.front() == '{') return ncsym_from_json(Json::parse(text));
    return parse_ncsym(text);
}

SymElement read_sym(const std::string& text) {
    if (!text.empty() && text.front() == '{') return sym_from_json(Json::parse(text));
    return parse_sym(text);
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw SemanticError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json blocks_json(const SetPartition& pi) { return pi.blocks(); }

void emit(const Options& opt, const std::string& text, const Json& json) {
    if (opt.json())
        std::cout << json.dump() << '\n';
    else if (!text.empty() && text.back() == '\n')
        std::cout << text;
    else
        std::cout << text << '\n';
}

int lattice_table(const Options& opt, int n, const std::string& table) {
    const Lattice& L = Lattice::of(n);
    std::vector<std::string> labels;
    for (const auto& pi : L.elements()) labels.push_back(to_string(pi));
    const auto entry = [&](int a, int b) -> std::string {
        if (table == "mobius") return to_string(L.mobius(a, b));
        if (table == "meet") return labels[static_cast<std::size_t>(L.meet(a, b))];
        return to_string(join(L[a], L[b]));
    };
    if (opt.json()) {
        Json rows = Json::array();
        for (int a = 0; a < L.count(); ++a) {
            Json row = Json::array();
            for (int b = 0; b < L.count(); ++b) row.push_back(entry(a, b));
            rows.push_back(row);
        }
        std::cout << Json{{"n", n}, {"table", table}, {"elements", labels}, {"rows", rows}}.dump() << '\n';
        return kOk;
    }
    std::size_t width = 0;
    for (const auto& s : labels) width = std::max(width, s.size());
    for (int a = 0; a < L.count(); ++a)
        for (int b = 0; b < L.count(); ++b) width = std::max(width, entry(a, b).size());
    const auto pad = [&](const std::string& s) { return std::string(width - s.size(), ' ') + s; };
    std::cout << pad("");
    for (const auto& s : labels) std::cout << ' ' << pad(s);
    std::cout << '\n';
    for (int a = 0; a < L.count(); ++a) {
        std::cout << pad(labels[static_cast<std::size_t>(a)]);
        for (int b = 0; b < L.count(); ++b) std::cout << ' ' << pad(entry(a, b));
        std::cout << '\n';
    }
    return kOk;
}

int verify(const Options& opt, const std::string& name, std::optional<int> max_n) {
    std::vector<std::string> names;
    if (name == "all")
        names = suite_names();
    else
        names = {name};
    bool ok = true;
    Json out = Json::array();
    for (const auto& suite : names) {
        const SuiteResult result = run_suite(suite, max_n);
        ok = ok && result.passed();
        Json checks = Json::array();
        for (const auto& check : result.checks) {
            if (opt.json())
                checks.push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
            else
                std::cout << (check.passed ? "PASS " : "FAIL ") << suite << ": " << check.name << " (" << check.detail
                          << ")" << std::endl;
        }
        out.push_back({{"suite", suite}, {"passed", result.passed()}, {"checks", checks}});
    }
    if (opt.json()) std::cout << out.dump() << '\n';
    return ok ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric functions in noncommuting variables"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.fallthrough();

    std::function<int()> action;

    std::string expr, expr2, target;
    auto* convert_cmd = app.add_subcommand("convert", "Rewrite an expression in another basis");
    convert_cmd->add_option("expr", expr)->required();
    convert_cmd->add_option("--to", target)->required()->check(CLI::IsMember({"m", "p", "e", "h"}));
    convert_cmd->callback([&] {
        action = [&] {
            const auto f = convert(read_ncsym(expr), parse_basis(target));
            emit(opt, to_string(f), to_json(f));
            return kOk;
        };
    });

    std::string sigma_text, pi_text;
    auto* mobius_cmd = app.add_subcommand("mobius", "Möbius function of the partition lattice");
    mobius_cmd->add_option("sigma", sigma_text)->required();
    mobius_cmd->add_option("pi", pi_text)->required();
    mobius_cmd->callback([&] {
        action = [&] {
            const auto sigma = parse_set_partition(sigma_text);
            const auto pi = parse_set_partition(pi_text);
            const Integer mu = mobius(sigma, pi);
            emit(opt, to_string(mu),
                 {{"sigma", blocks_json(sigma)}, {"pi", blocks_json(pi)}, {"mobius", to_string(mu)}});
            return kOk;
        };
    });

    int lattice_n = 0;
    std::string table;
    auto* lattice_cmd = app.add_subcommand("lattice", "Tables of the partition lattice");
    lattice_cmd->add_option("--n", lattice_n)->required();
    lattice_cmd->add_option("--table", table)->required()->check(CLI::IsMember({"mobius", "meet", "join"}));
    lattice_cmd->callback([&] { action = [&] { return lattice_table(opt, lattice_n, table); }; });

    auto* inner_cmd = app.add_subcommand("inner", "Inner product with <m_pi, h_sigma> = n! delta");
    inner_cmd->add_option("expr1", expr)->required();
    inner_cmd->add_option("expr2", expr2)->required();
    inner_cmd->callback([&] {
        action = [&] {
            const Rational value = inner(read_ncsym(expr), read_ncsym(expr2));
            emit(opt, to_string(value), {{"inner", to_string(value)}});
            return kOk;
        };
    });

    auto* omega_cmd = app.add_subcommand("omega", "The involution exchanging e and h");
    omega_cmd->add_option("expr", expr)->required();
    omega_cmd->callback([&] {
        action = [&] {
            const auto f = omega(read_ncsym(expr));
            emit(opt, to_string(f), to_json(f));
            return kOk;
        };
    });

    auto* project_cmd = app.add_subcommand("project", "Let the variables commute");
    project_cmd->add_option("expr", expr)->required();
    project_cmd->callback([&] {
        action = [&] {
            const auto f = project(read_ncsym(expr));
            emit(opt, to_string(f), to_json(f));
            return kOk;
        };
    });

    auto* lift_cmd = app.add_subcommand("lift", "Lift a symmetric function in commuting variables");
    lift_cmd->add_option("expr", expr)->required();
    lift_cmd->callback([&] {
        action = [&] {
            const auto f = lift(read_sym(expr));
            emit(opt, to_string(f), to_json(f));
            return kOk;
        };
    });

    std::string lambda_text, vec_text, variant;
    std::optional<int> expand_k, vars;
    auto* schur_cmd = app.add_subcommand("schur", "Schur function S_lambda, or S_lambda^{vec m} with --vec");
    schur_cmd->add_option("lambda", lambda_text)->required();
    schur_cmd->add_option("--vec", vec_text, "Multidegree, e.g. [2,2]");
    schur_cmd->add_option("--expand", expand_k, "Variables per alphabet")->check(CLI::PositiveNumber);
    schur_cmd->callback([&] {
        action = [&] {
            const auto lambda = parse_int_partition(lambda_text);
            if (!vec_text.empty()) {
                const DotVector m = parse_dot_vector(vec_text);
                const Truncation t{static_cast<int>(m.size()), expand_k.value_or(std::max(lambda.size(), 1)),
                                   lambda.size()};
                const auto S = schur_tableau_sum(lambda, m, t);
                emit(opt, to_string(S), to_json(S));
            } else if (expand_k) {
                const auto P = expand(schur_ncsym(lambda), *expand_k);
                emit(opt, to_string(P), to_json(P));
            } else {
                const auto S = schur_ncsym(lambda);
                emit(opt, to_string(S), to_json(S));
            }
            return kOk;
        };
    });

    auto* jt_cmd = app.add_subcommand("jacobi-trudi", "Jacobi-Trudi determinant in the MacMahon functions");
    jt_cmd->add_option("lambda", lambda_text)->required();
    jt_cmd->add_option("--vec", vec_text, "Multidegree, e.g. [2,1]")->required();
    jt_cmd->add_option("--variant", variant)->required()->check(CLI::IsMember({"h", "e"}));
    jt_cmd->add_option("--vars", vars, "Variables per alphabet")->check(CLI::PositiveNumber);
    jt_cmd->callback([&] {
        action = [&] {
            const auto lambda = parse_int_partition(lambda_text);
            const DotVector m = parse_dot_vector(vec_text);
            const Truncation t{static_cast<int>(m.size()), vars.value_or(std::max(lambda.size(), 1)), lambda.size()};
            const auto P =
                jacobi_trudi(lambda, m, variant == "h" ? JacobiTrudiVariant::h : JacobiTrudiVariant::e, t);
            emit(opt, to_string(P), to_json(P));
            return kOk;
        };
    });

    std::string file;
    bool inverse = false;
    auto* rsk_cmd = app.add_subcommand("rsk", "Dotted RSK on a biword file, or its inverse on a tableau file");
    rsk_cmd->add_option("file", file, "Input file, - for stdin")->required();
    rsk_cmd->add_flag("--inverse", inverse);
    rsk_cmd->callback([&] {
        action = [&] {
            const std::string text = read_file(file);
            if (inverse) {
                const auto [T, U] = parse_tableau_pair(text);
                const Biword beta = rsk_inverse(T, U);
                emit(opt, to_string(beta), to_json(beta));
            } else {
                const auto [T, U] = rsk_forward(parse_biword(text));
                emit(opt, to_string(T, U), {{"insertion", to_json(T)}, {"recording", to_json(U)}});
            }
            return kOk;
        };
    });

    int expand_vars = 0;
    auto* expand_cmd = app.add_subcommand("expand", "Expand as a sum of words in finitely many variables");
    expand_cmd->add_option("expr", expr)->required();
    expand_cmd->add_option("--vars", expand_vars)->required()->check(CLI::PositiveNumber);
    expand_cmd->callback([&] {
        action = [&] {
            const auto P = expand(read_ncsym(expr), expand_vars);
            emit(opt, to_string(P), to_json(P));
            return kOk;
        };
    });

    std::string suite;
    std::optional<int> max_n;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite, or all of them");
    verify_cmd->add_option("suite", suite)->required();
    verify_cmd->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);
    verify_cmd->callback([&] { action = [&] { return verify(opt, suite, max_n); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return action();
    } catch (const ncsf::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const Json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kSemantic;
    } catch (const Json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << '\n';
        return kParse;
    }
}
