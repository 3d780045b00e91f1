#include "ncsf/csym.hpp"

#include "ncsf/error.hpp"
#include "ncsf/polynomial.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <tuple>

namespace ncsf {

SymElement SymElement::basis_element(Basis b, const IntPartition& lambda, const Rational& c) {
    SymElement f(b);
    f.add_term(lambda, c);
    return f;
}

Rational SymElement::coefficient(const IntPartition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymElement::add_term(const IntPartition& lambda, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

SymElement& SymElement::operator+=(const SymElement& other) {
    const SymElement& rhs = other.basis_ == basis_ ? other : sym_convert(other, basis_);
    for (const auto& [lambda, c] : rhs.terms_) add_term(lambda, c);
    return *this;
}

SymElement& SymElement::operator-=(const SymElement& other) {
    SymElement negated = other;
    negated *= Rational(-1);
    return *this += negated;
}

SymElement& SymElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [lambda, coeff] : terms_) coeff *= c;
    return *this;
}

namespace {

// One-part generator b_r in `vars` commuting variables.
Polynomial generator(Basis b, int r, int vars) {
    Polynomial out(vars);
    Exponents e(static_cast<std::size_t>(vars), 0);
    if (b == Basis::p) {
        for (int i = 0; i < vars; ++i) {
            e.assign(e.size(), 0);
            e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(r);
            out.add_term(e, 1);
        }
        return out;
    }
    // h_r: all exponent vectors of total r; e_r: the 0/1 ones.
    const int cap = b == Basis::e ? 1 : r;
    std::function<void(int, int)> rec = [&](int var, int remaining) {
        if (var == vars) {
            if (remaining == 0) out.add_term(e, 1);
            return;
        }
        for (int k = 0; k <= std::min(cap, remaining); ++k) {
            e[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(k);
            rec(var + 1, remaining - k);
        }
        e[static_cast<std::size_t>(var)] = 0;
    };
    rec(0, r);
    return out;
}

// b_λ written in the m basis.
SymElement to_monomial(Basis b, const IntPartition& lambda) {
    SymElement out(Basis::m);
    const int n = lambda.size();
    if (b == Basis::m) {
        out.add_term(lambda, 1);
    } else if (b == Basis::s) {
        for (const auto& mu : partitions_of(n)) out.add_term(mu, Rational(kostka(lambda, mu)));
    } else {
        // n variables are enough: a degree-n monomial uses at most n of them.
        const int vars = std::max(n, 1);
        const auto keep = [n](const Exponents& e) { return total_degree(e) <= n; };
        Polynomial product = Polynomial::constant(vars, 1);
        for (int part : lambda.parts()) product = product.multiply(generator(b, part, vars), keep);
        for (const auto& mu : partitions_of(n)) {
            Exponents e(static_cast<std::size_t>(vars), 0);
            for (int i = 0; i < mu.length(); ++i) e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(mu[i]);
            out.add_term(mu, product.coefficient(e));
        }
    }
    return out;
}

using Matrix = std::vector<std::vector<Rational>>;

Matrix invert(Matrix a) {
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw SemanticError("singular change-of-basis matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = 1 / a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational factor = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
                inv[row][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

// m_μ expanded in basis b, for every μ ⊢ n.
const std::map<IntPartition, SymElement>& from_monomial_table(Basis b, int n) {
    static std::mutex mutex;
    static std::map<std::pair<Basis, int>, std::unique_ptr<std::map<IntPartition, SymElement>>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({b, n});
        if (it != cache.end()) return *it->second;
    }
    const auto parts = partitions_of(n);
    Matrix to_m(parts.size(), std::vector<Rational>(parts.size(), Rational(0)));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const SymElement row = to_monomial(b, parts[i]);
        for (std::size_t j = 0; j < parts.size(); ++j) to_m[i][j] = row.coefficient(parts[j]);
    }
    // Rows of to_m express b_λ in m; rows of its inverse express m_μ in b.
    const Matrix inv = invert(to_m);
    auto table = std::make_unique<std::map<IntPartition, SymElement>>();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        SymElement row(b);
        for (std::size_t j = 0; j < parts.size(); ++j) row.add_term(parts[j], inv[i][j]);
        table->emplace(parts[i], std::move(row));
    }
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace({b, n}, std::move(table));
    return *it->second;
}

}  // namespace

SymElement sym_convert(const SymElement& f, Basis target) {
    if (f.basis() == target) return f;
    SymElement in_m(Basis::m);
    for (const auto& [lambda, c] : f.terms()) {
        SymElement piece = to_monomial(f.basis(), lambda);
        piece *= c;
        for (const auto& [mu, d] : piece.terms()) in_m.add_term(mu, d);
    }
    if (target == Basis::m) return in_m;
    SymElement out(target);
    for (const auto& [mu, c] : in_m.terms()) {
        const SymElement& row = from_monomial_table(target, mu.size()).at(mu);
        for (const auto& [lambda, d] : row.terms()) out.add_term(lambda, c * d);
    }
    return out;
}

Rational sym_inner(const SymElement& f, const SymElement& g) {
    const SymElement fm = sym_convert(f, Basis::m);
    const SymElement gh = sym_convert(g, Basis::h);
    Rational total = 0;
    for (const auto& [lambda, c] : fm.terms()) total += c * gh.coefficient(lambda);
    return total;
}

SymElement omega_commutative(const SymElement& f) {
    if (f.basis() == Basis::e || f.basis() == Basis::h) {
        SymElement swapped(f.basis() == Basis::e ? Basis::h : Basis::e);
        for (const auto& [lambda, c] : f.terms()) swapped.add_term(lambda, c);
        return swapped;
    }
    const SymElement in_e = sym_convert(f, Basis::e);
    SymElement swapped(Basis::h);
    for (const auto& [lambda, c] : in_e.terms()) swapped.add_term(lambda, c);
    return sym_convert(swapped, f.basis());
}

}  // namespace ncsf
