#include "ncsf/oracle.hpp"

#include "ncsf/error.hpp"

#include <algorithm>
#include <functional>

namespace ncsf {

Rational WordPolynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void WordPolynomial::add_term(const Word& w, const Rational& c) {
    for (auto letter : w)
        if (letter < 1 || letter > variables_)
            throw SemanticError("letter x" + std::to_string(letter) + " outside x1..x" + std::to_string(variables_));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

WordPolynomial& WordPolynomial::operator+=(const WordPolynomial& other) {
    variables_ = std::max(variables_, other.variables_);
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

WordPolynomial& WordPolynomial::operator-=(const WordPolynomial& other) {
    variables_ = std::max(variables_, other.variables_);
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

WordPolynomial operator*(const WordPolynomial& a, const WordPolynomial& b) {
    WordPolynomial out(std::max(a.variables_, b.variables_));
    for (const auto& [u, cu] : a.terms_) {
        for (const auto& [v, cv] : b.terms_) {
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add_term(w, cu * cv);
        }
    }
    return out;
}

SetPartition kernel(const Word& w) {
    std::vector<std::uint8_t> rgs(w.size());
    std::vector<int> label(256, -1);
    int next = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto& l = label[w[i]];
        if (l == -1) l = next++;
        rgs[i] = static_cast<std::uint8_t>(l);
    }
    return SetPartition::from_rgs(std::move(rgs));
}

Integer word_coefficient(Basis b, const SetPartition& pi, const SetPartition& kappa) {
    switch (b) {
        case Basis::m: return kappa == pi ? 1 : 0;
        case Basis::p: return leq(pi, kappa) ? 1 : 0;
        case Basis::e: return meet(kappa, pi).is_finest() ? 1 : 0;
        case Basis::h: {
            // pairs (f, L): L linearly orders each block of ker f ∧ π
            Integer count = 1;
            for (int size : meet(kappa, pi).block_sizes()) count *= factorial(static_cast<unsigned>(size));
            return count;
        }
        case Basis::s: break;
    }
    throw SemanticError("no word expansion for this basis");
}

WordPolynomial expand(const NCSymElement& f, int k) {
    if (k < 1) throw SemanticError("expansion needs at least one variable");
    WordPolynomial out(k);
    std::map<int, std::vector<std::pair<SetPartition, Rational>>> by_degree;
    for (const auto& [pi, c] : f.terms()) by_degree[pi.size()].emplace_back(pi, c);
    for (const auto& [n, terms] : by_degree) {
        std::map<SetPartition, Rational> per_kernel;
        Word w(static_cast<std::size_t>(n), 1);
        while (true) {
            const SetPartition kappa = kernel(w);
            auto [it, inserted] = per_kernel.try_emplace(kappa, 0);
            if (inserted)
                for (const auto& [pi, c] : terms) it->second += c * word_coefficient(f.basis(), pi, kappa);
            out.add_term(w, it->second);
            // next word in lexicographic order
            int i = n - 1;
            while (i >= 0 && w[static_cast<std::size_t>(i)] == k) w[static_cast<std::size_t>(i--)] = 1;
            if (i < 0) break;
            ++w[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

namespace {

Integer falling_factorial(int k, int l) {
    Integer out = 1;
    for (int i = 0; i < l; ++i) out *= k - i;
    return out;
}

// The lexicographically first word with kernel κ that is absent from P.
Word missing_word(const SetPartition& kappa, int k, const WordPolynomial& P) {
    const int l = kappa.length();
    // iterate over injective block → letter assignments
    std::vector<int> choice(static_cast<std::size_t>(l), 0);
    std::vector<bool> used(static_cast<std::size_t>(k) + 1, false);
    Word found;
    std::function<bool(int)> rec = [&](int b) {
        if (b == l) {
            Word w(static_cast<std::size_t>(kappa.size()));
            for (int e = 1; e <= kappa.size(); ++e)
                w[static_cast<std::size_t>(e - 1)] = static_cast<std::uint8_t>(choice[static_cast<std::size_t>(kappa.block_of(e))]);
            if (P.coefficient(w) == 0) {
                found = w;
                return true;
            }
            return false;
        }
        for (int letter = 1; letter <= k; ++letter) {
            if (used[static_cast<std::size_t>(letter)]) continue;
            used[static_cast<std::size_t>(letter)] = true;
            choice[static_cast<std::size_t>(b)] = letter;
            if (rec(b + 1)) return true;
            used[static_cast<std::size_t>(letter)] = false;
        }
        return false;
    };
    rec(0);
    return found;
}

}  // namespace

NCSymElement collect(const WordPolynomial& P) {
    struct Seen {
        Word witness;
        Rational coeff;
        Integer count = 0;
    };
    std::map<SetPartition, Seen> classes;
    for (const auto& [w, c] : P.terms()) {
        if (static_cast<int>(w.size()) > P.variables())
            throw SemanticError("collect: a word of length " + std::to_string(w.size()) + " in only " +
                                std::to_string(P.variables()) + " variables is not a faithful truncation");
        const SetPartition kappa = kernel(w);
        auto [it, inserted] = classes.try_emplace(kappa, Seen{w, c});
        if (!inserted && it->second.coeff != c)
            throw SemanticError("collect: not symmetric; " + to_string(it->second.witness) + " has coefficient " +
                                to_string(it->second.coeff) + " but " + to_string(w) + " has " + to_string(c));
        ++it->second.count;
    }
    NCSymElement out(Basis::m);
    for (const auto& [kappa, seen] : classes) {
        if (seen.count != falling_factorial(P.variables(), kappa.length()))
            throw SemanticError("collect: not symmetric; " + to_string(seen.witness) + " has coefficient " +
                                to_string(seen.coeff) + " but " + to_string(missing_word(kappa, P.variables(), P)) +
                                " has 0");
        out.add_term(kappa, seen.coeff);
    }
    return out;
}

bool equal(const NCSymElement& f, const NCSymElement& g) {
    const int d = std::max({f.max_degree(), g.max_degree(), 1});
    return expand(f, d) == expand(g, d);
}

WordPolynomial expand_position_action(const Permutation& g, const WordPolynomial& P) {
    WordPolynomial out(P.variables());
    for (const auto& [w, c] : P.terms()) {
        if (static_cast<int>(w.size()) != g.size())
            throw SemanticError("place action of S_" + std::to_string(g.size()) + " on a word of length " +
                                std::to_string(w.size()));
        Word moved(w.size());
        for (int j = 1; j <= g.size(); ++j) moved[static_cast<std::size_t>(g(j) - 1)] = w[static_cast<std::size_t>(j - 1)];
        out.add_term(moved, c);
    }
    return out;
}

std::string to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += 'x' + std::to_string(w[i]);
    }
    return out;
}

std::string to_string(const WordPolynomial& P) {
    if (P.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : P.terms()) {
        Rational magnitude = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (magnitude != 1) out += to_string(magnitude) + (w.empty() ? "" : "*");
        if (!w.empty() || magnitude == 1) out += to_string(w);
    }
    return out;
}

}  // namespace ncsf
