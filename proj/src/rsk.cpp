#include "ncsf/rsk.hpp"

#include "ncsf/error.hpp"

#include <algorithm>

namespace ncsf {

bool is_valid_biword(const std::vector<BiwordColumn>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        const auto& c = columns[i];
        if (c.top.value < 1 || c.top.dots < 1 || c.bottom.value < 1 || c.bottom.dots < 1) return false;
        if (i == 0) continue;
        const auto& p = columns[i - 1];
        if (std::pair(p.top.value, p.bottom.value) > std::pair(c.top.value, c.bottom.value)) return false;
    }
    return true;
}

Biword::Biword(std::vector<BiwordColumn> columns) : columns_(std::move(columns)) {
    if (!is_valid_biword(columns_))
        throw SemanticError("biword columns must be positive and weakly increasing in (top, bottom)");
}

std::pair<DotVector, DotVector> Biword::multidegree(int alphabets) const {
    DotVector bottom(static_cast<std::size_t>(alphabets), 0);
    DotVector top(static_cast<std::size_t>(alphabets), 0);
    for (const auto& c : columns_) {
        if (c.top.dots > alphabets || c.bottom.dots > alphabets)
            throw SemanticError("biword entry with more dots than alphabets");
        ++bottom[static_cast<std::size_t>(c.bottom.dots - 1)];
        ++top[static_cast<std::size_t>(c.top.dots - 1)];
    }
    return {bottom, top};
}

std::pair<DottedTableau, DottedTableau> rsk_forward(const Biword& beta) {
    std::vector<std::vector<DottedEntry>> T;
    std::vector<std::vector<DottedEntry>> U;
    for (const auto& column : beta.columns()) {
        DottedEntry x = column.bottom;
        std::size_t r = 0;
        for (;; ++r) {
            if (r == T.size()) {
                T.push_back({x});
                U.push_back({column.top});
                break;
            }
            auto& row = T[r];
            auto it = std::find_if(row.begin(), row.end(), [&](const DottedEntry& y) { return y.value > x.value; });
            if (it == row.end()) {
                row.push_back(x);
                U[r].push_back(column.top);
                break;
            }
            std::swap(*it, x);
        }
    }
    return {DottedTableau(std::move(T)), DottedTableau(std::move(U))};
}

Biword rsk_inverse(const DottedTableau& T, const DottedTableau& U) {
    if (T.shape() != U.shape())
        throw SemanticError("tableaux of shapes " + to_string(T.shape()) + " and " + to_string(U.shape()));
    if (!T.is_semistandard()) throw SemanticError("insertion tableau is not semistandard");
    if (!U.is_semistandard()) throw SemanticError("recording tableau is not semistandard");
    auto t = T.rows();
    auto u = U.rows();
    std::vector<BiwordColumn> reversed;
    while (!u.empty()) {
        // the rightmost cell holding the largest value was recorded last
        int top_value = 0;
        for (const auto& row : u) top_value = std::max(top_value, row.back().value);
        std::size_t r = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i].back().value == top_value && (u[r].back().value != top_value || u[i].size() > u[r].size())) r = i;
        const DottedEntry top = u[r].back();
        u[r].pop_back();
        DottedEntry x = t[r].back();
        t[r].pop_back();
        for (std::size_t row = r; row-- > 0;) {
            auto& above = t[row];
            auto it = std::find_if(above.rbegin(), above.rend(), [&](const DottedEntry& y) { return y.value < x.value; });
            if (it == above.rend()) throw SemanticError("tableau pair is not in the image of RSK");
            std::swap(*it, x);
        }
        if (u[r].empty()) {
            u.erase(u.begin() + static_cast<std::ptrdiff_t>(r));
            t.erase(t.begin() + static_cast<std::ptrdiff_t>(r));
        }
        reversed.push_back({top, x});
    }
    std::reverse(reversed.begin(), reversed.end());
    if (!is_valid_biword(reversed)) throw SemanticError("recording tableau does not come from a biword");
    Biword beta(std::move(reversed));
    if (rsk_forward(beta) != std::pair(T, U)) throw SemanticError("tableau pair is not in the image of RSK");
    return beta;
}

// ------------------------------------------------------------------- Cauchy

namespace {

// x variables occupy the first a·k slots, y variables the next a·k.
Polynomial embed(const MultiPolynomial& P, std::size_t offset, int total) {
    Polynomial out(total);
    for (const auto& [e, c] : P.polynomial().terms()) {
        Exponents big(static_cast<std::size_t>(total), 0);
        std::copy(e.begin(), e.end(), big.begin() + static_cast<std::ptrdiff_t>(offset));
        out.add_term(big, c);
    }
    return out;
}

std::vector<DotVector> dot_compositions(int total, int dimension) {
    std::vector<DotVector> out;
    DotVector v(static_cast<std::size_t>(dimension), 0);
    auto rec = [&](auto&& self, int k, int remaining) -> void {
        if (k == dimension - 1) {
            v[static_cast<std::size_t>(k)] = remaining;
            out.push_back(v);
            return;
        }
        for (int x = 0; x <= remaining; ++x) {
            v[static_cast<std::size_t>(k)] = x;
            self(self, k + 1, remaining - x);
        }
    };
    rec(rec, 0, total);
    return out;
}

std::string describe(const Exponents& e, int alphabets, int variables) {
    const int half = alphabets * variables;
    std::string out;
    for (int side = 0; side < 2; ++side) {
        for (int i = 1; i <= variables; ++i) {
            for (int k = 1; k <= alphabets; ++k) {
                const int x = e[static_cast<std::size_t>(side * half + (i - 1) * alphabets + k - 1)];
                if (x == 0) continue;
                if (!out.empty()) out += ' ';
                out += (side == 0 ? "x" : "y") + std::to_string(i) + std::string(static_cast<std::size_t>(k), '\'');
                if (x > 1) out += '^' + std::to_string(x);
            }
        }
    }
    return out.empty() ? "1" : out;
}

}  // namespace

CauchyReport cauchy_check(int alphabets, int variables, int degree) {
    if (alphabets < 1 || variables < 1 || degree < 0) throw SemanticError("Cauchy check needs positive sizes");
    const Truncation t{alphabets, variables, degree};
    const int half = t.polynomial_variables();
    const int total = 2 * half;
    const auto cap = [degree](const Exponents& e) { return total_degree(e) <= 2 * degree; };

    Polynomial lhs = Polynomial::constant(total, 1);
    for (int n = 1; n <= degree; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            MultiPolynomial S(t);
            for (const auto& m : dot_compositions(n, alphabets)) S += schur_tableau_sum(lambda, m, t);
            lhs += embed(S, 0, total).multiply(embed(S, static_cast<std::size_t>(half), total));
        }
    }

    Polynomial rhs = Polynomial::constant(total, 1);
    for (int i = 1; i <= variables; ++i) {
        for (int j = 1; j <= variables; ++j) {
            Polynomial z(total);
            for (int k = 1; k <= alphabets; ++k) {
                for (int l = 1; l <= alphabets; ++l) {
                    Exponents e(static_cast<std::size_t>(total), 0);
                    e[static_cast<std::size_t>(t.index(i, k))] = 1;
                    e[static_cast<std::size_t>(half + t.index(j, l))] = 1;
                    z.add_term(e, 1);
                }
            }
            Polynomial geometric = Polynomial::constant(total, 1);
            Polynomial power = Polynomial::constant(total, 1);
            for (int r = 1; r <= degree; ++r) {
                power = power.multiply(z, cap);
                geometric += power;
            }
            rhs = rhs.multiply(geometric, cap);
        }
    }

    CauchyReport report;
    report.lhs_terms = lhs.size();
    report.rhs_terms = rhs.size();
    report.equal = lhs == rhs;
    if (!report.equal) {
        const Polynomial diff = lhs - rhs;
        const auto& [e, c] = *diff.terms().begin();
        report.discrepancy = describe(e, alphabets, variables) + ": left " + to_string(lhs.coefficient(e)) +
                             ", right " + to_string(rhs.coefficient(e));
    }
    return report;
}

std::string to_string(const Biword& beta) {
    std::string top;
    std::string bottom;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (i) {
            top += ' ';
            bottom += ' ';
        }
        top += to_string(beta.columns()[i].top);
        bottom += to_string(beta.columns()[i].bottom);
    }
    return top + '\n' + bottom + '\n';
}

}  // namespace ncsf
