#pragma once

#include "ncsf/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace ncsf {

/// Exponent vector of a commutative monomial.
using Exponents = std::vector<std::uint8_t>;

int total_degree(const Exponents& e);

/// Sparse commutative polynomial over ℚ in a fixed number of variables.
class Polynomial {
public:
    using Terms = std::map<Exponents, Rational>;
    /// Decides whether a monomial survives a product (truncation by degree, multidegree, ...).
    using Filter = std::function<bool(const Exponents&)>;

    explicit Polynomial(int variables = 0) : variables_(variables) {}
    static Polynomial constant(int variables, const Rational& c);

    int variables() const { return variables_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Exponents& e) const;
    /// Largest total degree present; -1 for the zero polynomial.
    int degree() const;

    void add_term(const Exponents& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Product keeping only monomials accepted by `keep` (all of them when empty).
    Polynomial multiply(const Polynomial& other, const Filter& keep = {}) const;
    Polynomial filtered(const Filter& keep) const;

private:
    int variables_;
    Terms terms_;
};

}  // namespace ncsf
