#include "ncsf/macmahon.hpp"

#include "ncsf/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace ncsf {

int degree(const DotVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

// ------------------------------------------------------------ VectorPartition

VectorPartition::VectorPartition(int dimension, std::vector<DotVector> parts) : dimension_(dimension) {
    for (auto& v : parts) {
        if (static_cast<int>(v.size()) != dimension)
            throw SemanticError("vector partition mixes vectors of dimension " + std::to_string(v.size()) + " and " +
                                std::to_string(dimension));
        if (std::any_of(v.begin(), v.end(), [](int x) { return x < 0; }))
            throw SemanticError("vector partition has a negative entry");
        if (ncsf::degree(v) > 0) parts_.push_back(std::move(v));
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

DotVector VectorPartition::multidegree() const {
    DotVector m(static_cast<std::size_t>(dimension_), 0);
    for (const auto& v : parts_)
        for (std::size_t k = 0; k < v.size(); ++k) m[k] += v[k];
    return m;
}

int VectorPartition::degree() const { return ncsf::degree(multidegree()); }

// ------------------------------------------------------------ MultiPolynomial

MultiPolynomial::MultiPolynomial(const Truncation& t) : truncation_(t), poly_(t.polynomial_variables()) {}

MultiPolynomial::MultiPolynomial(const Truncation& t, Polynomial poly) : truncation_(t), poly_(std::move(poly)) {
    if (poly_.variables() != t.polynomial_variables()) throw SemanticError("polynomial does not match its truncation");
}

Exponents MultiPolynomial::monomial(const std::vector<std::pair<int, int>>& factors) const {
    Exponents e(static_cast<std::size_t>(truncation_.polynomial_variables()), 0);
    for (auto [subscript, dots] : factors) {
        if (subscript < 1 || subscript > truncation_.variables || dots < 1 || dots > truncation_.alphabets)
            throw SemanticError("variable outside the truncation");
        ++e[static_cast<std::size_t>(truncation_.index(subscript, dots))];
    }
    return e;
}

DotVector MultiPolynomial::multidegree(const Exponents& e) const {
    DotVector m(static_cast<std::size_t>(truncation_.alphabets), 0);
    for (std::size_t i = 0; i < e.size(); ++i) m[i % m.size()] += e[i];
    return m;
}

namespace {

void require_same(const Truncation& a, const Truncation& b) {
    if (a != b) throw SemanticError("MacMahon polynomials with different truncations");
}

void require_fits(const Truncation& t, int dimension, int deg) {
    if (dimension != t.alphabets)
        throw SemanticError("vector of dimension " + std::to_string(dimension) + " used with " +
                            std::to_string(t.alphabets) + " alphabets");
    if (deg > t.max_degree)
        throw SemanticError("degree " + std::to_string(deg) + " exceeds the truncation degree " +
                            std::to_string(t.max_degree));
}

Polynomial::Filter degree_cap(int max_degree) {
    return [max_degree](const Exponents& e) { return total_degree(e) <= max_degree; };
}

}  // namespace

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& other) {
    require_same(truncation_, other.truncation_);
    poly_ += other.poly_;
    return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& other) {
    require_same(truncation_, other.truncation_);
    poly_ -= other.poly_;
    return *this;
}

MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    require_same(a.truncation_, b.truncation_);
    return MultiPolynomial(a.truncation_, a.poly_.multiply(b.poly_, degree_cap(a.truncation_.max_degree)));
}

MultiPolynomial multidegree_component(const MultiPolynomial& P, const DotVector& m) {
    return MultiPolynomial(P.truncation(),
                           P.polynomial().filtered([&](const Exponents& e) { return P.multidegree(e) == m; }));
}

MultiPolynomial swap_subscripts(const MultiPolynomial& P, int i) {
    const Truncation& t = P.truncation();
    if (i < 1 || i >= t.variables) throw SemanticError("subscript swap outside the truncation");
    Polynomial out(t.polynomial_variables());
    for (const auto& [e, c] : P.polynomial().terms()) {
        Exponents swapped = e;
        for (int k = 1; k <= t.alphabets; ++k)
            std::swap(swapped[static_cast<std::size_t>(t.index(i, k))], swapped[static_cast<std::size_t>(t.index(i + 1, k))]);
        out.add_term(swapped, c);
    }
    return MultiPolynomial(t, std::move(out));
}

// -------------------------------------------------------------- generators

MultiPolynomial mm_monomial(const VectorPartition& lambda, const Truncation& t) {
    require_fits(t, lambda.dimension(), lambda.degree());
    std::set<Exponents> monomials;
    const auto& parts = lambda.parts();
    Exponents e(static_cast<std::size_t>(t.polynomial_variables()), 0);
    std::vector<bool> used(static_cast<std::size_t>(t.variables) + 1, false);
    // injective assignment of parts to subscripts; equal parts give the same monomial
    std::function<void(std::size_t)> rec = [&](std::size_t part) {
        if (part == parts.size()) {
            monomials.insert(e);
            return;
        }
        for (int i = 1; i <= t.variables; ++i) {
            if (used[static_cast<std::size_t>(i)]) continue;
            used[static_cast<std::size_t>(i)] = true;
            for (int k = 1; k <= t.alphabets; ++k)
                e[static_cast<std::size_t>(t.index(i, k))] = static_cast<std::uint8_t>(parts[part][static_cast<std::size_t>(k - 1)]);
            rec(part + 1);
            for (int k = 1; k <= t.alphabets; ++k) e[static_cast<std::size_t>(t.index(i, k))] = 0;
            used[static_cast<std::size_t>(i)] = false;
        }
    };
    rec(0);
    Polynomial poly(t.polynomial_variables());
    for (const auto& m : monomials) poly.add_term(m, 1);
    return MultiPolynomial(t, std::move(poly));
}

MultiPolynomial mm_elementary(const DotVector& v, const Truncation& t) {
    require_fits(t, static_cast<int>(v.size()), degree(v));
    Polynomial poly(t.polynomial_variables());
    Exponents e(static_cast<std::size_t>(t.polynomial_variables()), 0);
    DotVector remaining = v;
    // each subscript contributes 1 or exactly one x_i^{(k)}
    std::function<void(int)> rec = [&](int i) {
        if (degree(remaining) == 0) {
            poly.add_term(e, 1);
            return;
        }
        if (i > t.variables) return;
        rec(i + 1);
        for (int k = 1; k <= t.alphabets; ++k) {
            auto& r = remaining[static_cast<std::size_t>(k - 1)];
            if (r == 0) continue;
            --r;
            e[static_cast<std::size_t>(t.index(i, k))] = 1;
            rec(i + 1);
            e[static_cast<std::size_t>(t.index(i, k))] = 0;
            ++r;
        }
    };
    rec(1);
    return MultiPolynomial(t, std::move(poly));
}

MultiPolynomial mm_complete(const DotVector& v, const Truncation& t) {
    require_fits(t, static_cast<int>(v.size()), degree(v));
    Polynomial poly(t.polynomial_variables());
    Exponents e(static_cast<std::size_t>(t.polynomial_variables()), 0);
    DotVector remaining = v;
    // 1/(1 − Σ_k a_k) = Σ_c multinomial(|c|; c) ∏ a_k^{c_k}, one such factor per subscript
    std::function<void(int, int, Integer)> rec = [&](int i, int k, Integer weight) {
        if (k > t.alphabets) {
            // close subscript i: multiply by the multinomial of its exponents
            DotVector used(static_cast<std::size_t>(t.alphabets));
            for (int a = 1; a <= t.alphabets; ++a) used[static_cast<std::size_t>(a - 1)] = e[static_cast<std::size_t>(t.index(i, a))];
            Integer multinomial = factorial(static_cast<unsigned>(degree(used)));
            for (int u : used) multinomial /= factorial(static_cast<unsigned>(u));
            if (degree(remaining) == 0)
                poly.add_term(e, Rational(weight * multinomial));
            else if (i < t.variables)
                rec(i + 1, 1, weight * multinomial);
            return;
        }
        auto& r = remaining[static_cast<std::size_t>(k - 1)];
        const int available = r;
        for (int c = 0; c <= available; ++c) {
            e[static_cast<std::size_t>(t.index(i, k))] = static_cast<std::uint8_t>(c);
            r = available - c;
            rec(i, k + 1, weight);
        }
        r = available;
        e[static_cast<std::size_t>(t.index(i, k))] = 0;
    };
    if (degree(v) == 0)
        poly.add_term(e, 1);
    else
        rec(1, 1, Integer(1));
    return MultiPolynomial(t, std::move(poly));
}

MultiPolynomial mm_power(const DotVector& v, const Truncation& t) {
    require_fits(t, static_cast<int>(v.size()), degree(v));
    if (degree(v) == 0) return MultiPolynomial(t, Polynomial::constant(t.polynomial_variables(), 1));
    Polynomial poly(t.polynomial_variables());
    for (int i = 1; i <= t.variables; ++i) {
        Exponents e(static_cast<std::size_t>(t.polynomial_variables()), 0);
        for (int k = 1; k <= t.alphabets; ++k)
            e[static_cast<std::size_t>(t.index(i, k))] = static_cast<std::uint8_t>(v[static_cast<std::size_t>(k - 1)]);
        poly.add_term(e, 1);
    }
    return MultiPolynomial(t, std::move(poly));
}

MultiPolynomial mm_basis(Basis b, const VectorPartition& lambda, const Truncation& t) {
    if (b == Basis::m) return mm_monomial(lambda, t);
    require_fits(t, lambda.dimension() == 0 ? t.alphabets : lambda.dimension(), lambda.degree());
    MultiPolynomial out(t, Polynomial::constant(t.polynomial_variables(), 1));
    for (const auto& part : lambda.parts()) {
        switch (b) {
            case Basis::p: out = out * mm_power(part, t); break;
            case Basis::e: out = out * mm_elementary(part, t); break;
            case Basis::h: out = out * mm_complete(part, t); break;
            default: throw SemanticError("no MacMahon basis for this letter");
        }
    }
    return out;
}

// -------------------------------------------------------------------- Phi

SetPartition phi(const VectorPartition& lambda) {
    const int n = lambda.dimension();
    std::vector<std::vector<int>> blocks;
    for (const auto& v : lambda.parts()) {
        std::vector<int> block;
        for (int k = 0; k < n; ++k) {
            if (v[static_cast<std::size_t>(k)] > 1) throw SemanticError("Φ needs 0/1 vectors, got " + to_string(v));
            if (v[static_cast<std::size_t>(k)] == 1) block.push_back(k + 1);
        }
        blocks.push_back(std::move(block));
    }
    if (lambda.multidegree() != DotVector(static_cast<std::size_t>(n), 1))
        throw SemanticError("Φ needs multidegree [1^n], got " + to_string(lambda.multidegree()));
    return SetPartition::from_blocks(n, blocks);
}

VectorPartition phi_inverse(const SetPartition& pi) {
    std::vector<DotVector> parts;
    for (const auto& block : pi.blocks()) {
        DotVector v(static_cast<std::size_t>(pi.size()), 0);
        for (int e : block) v[static_cast<std::size_t>(e - 1)] = 1;
        parts.push_back(std::move(v));
    }
    return VectorPartition(pi.size(), std::move(parts));
}

WordPolynomial phi(const MultiPolynomial& P) {
    const Truncation& t = P.truncation();
    WordPolynomial out(t.variables);
    for (const auto& [e, c] : P.polynomial().terms()) {
        Word w(static_cast<std::size_t>(t.alphabets), 0);
        for (int i = 1; i <= t.variables; ++i) {
            for (int k = 1; k <= t.alphabets; ++k) {
                const int x = e[static_cast<std::size_t>(t.index(i, k))];
                if (x == 0) continue;
                if (x > 1 || w[static_cast<std::size_t>(k - 1)] != 0)
                    throw SemanticError("Φ applies only to multidegree [1^n] terms");
                w[static_cast<std::size_t>(k - 1)] = static_cast<std::uint8_t>(i);
            }
        }
        if (std::find(w.begin(), w.end(), 0) != w.end()) throw SemanticError("Φ applies only to multidegree [1^n] terms");
        out.add_term(w, c);
    }
    return out;
}

// ---------------------------------------------------------- dotted tableaux

DottedTableau::DottedTableau(std::vector<std::vector<DottedEntry>> rows) : rows_(std::move(rows)) {
    for (std::size_t r = 1; r < rows_.size(); ++r)
        if (rows_[r].size() > rows_[r - 1].size()) throw SemanticError("tableau rows must have weakly decreasing lengths");
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

IntPartition DottedTableau::shape() const {
    std::vector<int> parts;
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return IntPartition(std::move(parts));
}

int DottedTableau::size() const { return shape().size(); }

bool DottedTableau::is_semistandard() const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (rows_[r][c].value < 1 || rows_[r][c].dots < 1) return false;
            if (c > 0 && rows_[r][c - 1].value > rows_[r][c].value) return false;
            if (r > 0 && rows_[r - 1][c].value >= rows_[r][c].value) return false;
        }
    }
    return true;
}

DotVector DottedTableau::multidegree(int alphabets) const {
    DotVector m(static_cast<std::size_t>(alphabets), 0);
    for (const auto& row : rows_)
        for (const auto& x : row) {
            if (x.dots > alphabets) throw SemanticError("entry with more dots than alphabets");
            ++m[static_cast<std::size_t>(x.dots - 1)];
        }
    return m;
}

std::vector<DottedTableau> dotted_tableaux(const IntPartition& lambda, const DotVector& m, int max_value) {
    std::vector<DottedTableau> out;
    if (lambda.size() != degree(m)) return out;
    std::vector<std::vector<DottedEntry>> rows;
    for (int part : lambda.parts()) rows.emplace_back(static_cast<std::size_t>(part));
    const int nrows = lambda.length();
    DotVector remaining = m;
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == nrows) {
            out.emplace_back(rows);
            return;
        }
        if (c == lambda[r]) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0) lo = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)].value;
        if (r > 0) lo = std::max(lo, rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)].value + 1);
        // the cells below in this column still need strictly larger values
        int below = 0;
        for (int rr = r + 1; rr < nrows && lambda[rr] > c; ++rr) ++below;
        for (int v = lo; v <= max_value - below; ++v) {
            for (int k = 1; k <= static_cast<int>(remaining.size()); ++k) {
                auto& left = remaining[static_cast<std::size_t>(k - 1)];
                if (left == 0) continue;
                --left;
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = {v, k};
                fill(r, c + 1);
                ++left;
            }
        }
    };
    fill(0, 0);
    return out;
}

MultiPolynomial schur_tableau_sum(const IntPartition& lambda, const DotVector& m, const Truncation& t) {
    require_fits(t, static_cast<int>(m.size()), degree(m));
    if (lambda.size() != degree(m))
        throw SemanticError("shape " + to_string(lambda) + " and multidegree " + to_string(m) + " have different sizes");
    Polynomial poly(t.polynomial_variables());
    for (const auto& T : dotted_tableaux(lambda, m, t.variables)) {
        Exponents e(static_cast<std::size_t>(t.polynomial_variables()), 0);
        for (const auto& row : T.rows())
            for (const auto& x : row) ++e[static_cast<std::size_t>(t.index(x.value, x.dots))];
        poly.add_term(e, 1);
    }
    return MultiPolynomial(t, std::move(poly));
}

DottedTableau dot_swap_involution(const DottedTableau& T, int i) {
    DottedTableau out = T;
    auto& rows = out.rows();
    const auto& src = T.rows();
    // paired columns: an i directly above an i+1
    std::vector<std::vector<bool>> paired(src.size());
    for (std::size_t r = 0; r < src.size(); ++r) paired[r].assign(src[r].size(), false);
    for (std::size_t r = 0; r + 1 < src.size(); ++r) {
        for (std::size_t c = 0; c < src[r + 1].size(); ++c) {
            if (src[r][c].value == i && src[r + 1][c].value == i + 1) {
                paired[r][c] = paired[r + 1][c] = true;
                rows[r][c].dots = src[r + 1][c].dots;
                rows[r + 1][c].dots = src[r][c].dots;
            }
        }
    }
    // free entries of each row: a run i^a (i+1)^b becomes i^b (i+1)^a, the new i's
    // carrying the old (i+1) dots and vice versa
    for (std::size_t r = 0; r < src.size(); ++r) {
        std::vector<std::size_t> free_cols;
        std::vector<int> low_dots;
        std::vector<int> high_dots;
        for (std::size_t c = 0; c < src[r].size(); ++c) {
            if (paired[r][c]) continue;
            if (src[r][c].value == i) {
                free_cols.push_back(c);
                low_dots.push_back(src[r][c].dots);
            } else if (src[r][c].value == i + 1) {
                free_cols.push_back(c);
                high_dots.push_back(src[r][c].dots);
            }
        }
        std::size_t slot = 0;
        for (int d : high_dots) rows[r][free_cols[slot++]] = {i, d};
        for (int d : low_dots) rows[r][free_cols[slot++]] = {i + 1, d};
    }
    return out;
}

// ------------------------------------------------------------------- S_λ

NCSymElement schur_ncsym(const IntPartition& lambda) {
    const int n = lambda.size();
    NCSymElement out(Basis::m);
    const auto partitions = enumerate(n);
    for (const auto& mu : partitions_of(n)) {
        if (!dominates(lambda, mu)) continue;
        const Rational c = Rational(fact_parts(mu) * kostka(lambda, mu));
        if (c == 0) continue;
        for (const auto& sigma : partitions)
            if (type_of(sigma) == mu) out.add_term(sigma, c);
    }
    return out;
}

// ------------------------------------------------------------ Jacobi-Trudi

namespace {

// All vectors of `dimension` nonnegative entries summing to `total`.
std::vector<DotVector> compositions(int total, int dimension) {
    std::vector<DotVector> out;
    DotVector v(static_cast<std::size_t>(dimension), 0);
    std::function<void(int, int)> rec = [&](int k, int remaining) {
        if (k == dimension - 1) {
            v[static_cast<std::size_t>(k)] = remaining;
            out.push_back(v);
            return;
        }
        for (int x = remaining; x >= 0; --x) {
            v[static_cast<std::size_t>(k)] = x;
            rec(k + 1, remaining - x);
        }
    };
    if (dimension > 0) rec(0, total);
    return out;
}

}  // namespace

MultiPolynomial jacobi_trudi(const IntPartition& lambda, const DotVector& m, JacobiTrudiVariant variant,
                             const Truncation& t) {
    require_fits(t, static_cast<int>(m.size()), degree(m));
    if (lambda.size() != degree(m))
        throw SemanticError("shape " + to_string(lambda) + " and multidegree " + to_string(m) + " have different sizes");
    const int l = lambda.length();
    const int vars = t.polynomial_variables();
    // only monomials of multidegree ≤ m can reach the ⟨m⟩ component
    const MultiPolynomial probe(t);
    const Polynomial::Filter within = [&](const Exponents& e) {
        const DotVector md = probe.multidegree(e);
        for (std::size_t k = 0; k < md.size(); ++k)
            if (md[k] > m[k]) return false;
        return true;
    };
    std::map<int, Polynomial> entry_cache;
    auto entry = [&](int s) -> const Polynomial& {
        auto [it, inserted] = entry_cache.try_emplace(s, vars);
        if (inserted) {
            if (s == 0) {
                it->second = Polynomial::constant(vars, 1);
            } else if (s > 0) {
                for (const auto& v : compositions(s, t.alphabets)) {
                    bool fits = true;
                    for (std::size_t k = 0; k < v.size(); ++k) fits = fits && v[k] <= m[k];
                    if (!fits) continue;
                    const MultiPolynomial term =
                        variant == JacobiTrudiVariant::h ? mm_complete(v, t) : mm_elementary(v, t);
                    it->second += term.polynomial();
                }
            }
        }
        return it->second;
    };
    // permutation expansion, sharing partial products across common prefixes
    Polynomial det(vars);
    std::vector<bool> used(static_cast<std::size_t>(l), false);
    std::function<void(int, const Polynomial&, int)> expand_row = [&](int row, const Polynomial& partial, int inversions) {
        if (row == l) {
            if (inversions % 2 == 0)
                det += partial;
            else
                det -= partial;
            return;
        }
        int smaller_used = 0;
        for (int col = 0; col < l; ++col) {
            if (used[static_cast<std::size_t>(col)]) {
                ++smaller_used;
                continue;
            }
            const int s = lambda[row] - (row + 1) + (col + 1);
            if (s < 0) continue;
            const Polynomial& a = entry(s);
            if (a.is_zero()) continue;
            // inversions contributed: later rows that will take smaller columns
            const int new_inversions = col - smaller_used;
            used[static_cast<std::size_t>(col)] = true;
            expand_row(row + 1, partial.multiply(a, within), inversions + new_inversions);
            used[static_cast<std::size_t>(col)] = false;
        }
    };
    expand_row(0, Polynomial::constant(vars, 1), 0);
    return multidegree_component(MultiPolynomial(t, std::move(det)), m);
}

// -------------------------------------------------------------------- text

std::string to_string(const DotVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + "]";
}

std::string to_string(const VectorPartition& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.parts().size(); ++i) {
        if (i) out += ',';
        out += to_string(v.parts()[i]);
    }
    return out + "}";
}

std::string to_string(const DottedEntry& x) { return std::to_string(x.value) + std::string(static_cast<std::size_t>(x.dots), '\''); }

std::string to_string(const DottedTableau& T) {
    std::string out;
    for (const auto& row : T.rows()) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ' ';
            out += to_string(row[c]);
        }
        out += '\n';
    }
    return out;
}

std::string to_string(const MultiPolynomial& P) {
    const Truncation& t = P.truncation();
    if (P.is_zero()) return "0";
    std::string out;
    bool first = true;
    // descending exponent order lists x1-heavy terms first
    const auto& terms = P.polynomial().terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        const Rational magnitude = abs(c);
        out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        first = false;
        std::string mono;
        for (int i = 1; i <= t.variables; ++i) {
            for (int k = 1; k <= t.alphabets; ++k) {
                const int x = e[static_cast<std::size_t>(t.index(i, k))];
                if (x == 0) continue;
                if (!mono.empty()) mono += ' ';
                mono += 'x' + std::to_string(i) + std::string(static_cast<std::size_t>(k), '\'');
                if (x > 1) mono += '^' + std::to_string(x);
            }
        }
        if (mono.empty())
            out += to_string(magnitude);
        else
            out += (magnitude == 1 ? "" : to_string(magnitude) + "*") + mono;
    }
    return out;
}

}  // namespace ncsf
