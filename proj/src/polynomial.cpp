#include "ncsf/polynomial.hpp"

#include "ncsf/error.hpp"

#include <numeric>

namespace ncsf {

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

Polynomial Polynomial::constant(int variables, const Rational& c) {
    Polynomial p(variables);
    p.add_term(Exponents(static_cast<std::size_t>(variables), 0), c);
    return p;
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != variables_) throw SemanticError("monomial has the wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (other.variables_ != variables_) throw SemanticError("adding polynomials in different variable sets");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (other.variables_ != variables_) throw SemanticError("subtracting polynomials in different variable sets");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::multiply(const Polynomial& other, const Filter& keep) const {
    if (other.variables_ != variables_) throw SemanticError("multiplying polynomials in different variable sets");
    Polynomial out(variables_);
    Exponents e(static_cast<std::size_t>(variables_));
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            if (keep && !keep(e)) continue;
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::filtered(const Filter& keep) const {
    Polynomial out(variables_);
    for (const auto& [e, c] : terms_)
        if (keep(e)) out.terms_.emplace(e, c);
    return out;
}

}  // namespace ncsf
