#pragma once

// Brute-force ground truth: NCSym elements as explicit sums of noncommuting
// monomials (words) in finitely many variables.

#include "ncsf/ncsym.hpp"
#include "ncsf/rational.hpp"
#include "ncsf/set_partition.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ncsf {

/// x_{w_1} x_{w_2} ⋯ x_{w_n}, letters 1-based.
using Word = std::vector<std::uint8_t>;

class WordPolynomial {
public:
    using Terms = std::map<Word, Rational>;

    explicit WordPolynomial(int variables = 1) : variables_(variables) {}

    int variables() const { return variables_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Word& w) const;
    /// Throws SemanticError when a letter exceeds the variable count.
    void add_term(const Word& w, const Rational& c);

    WordPolynomial& operator+=(const WordPolynomial& other);
    WordPolynomial& operator-=(const WordPolynomial& other);
    friend WordPolynomial operator+(WordPolynomial a, const WordPolynomial& b) { return a += b; }
    friend WordPolynomial operator-(WordPolynomial a, const WordPolynomial& b) { return a -= b; }
    /// Concatenation product.
    friend WordPolynomial operator*(const WordPolynomial& a, const WordPolynomial& b);
    friend bool operator==(const WordPolynomial&, const WordPolynomial&) = default;

private:
    int variables_;
    Terms terms_;
};

/// Positions j, k share a block iff w_j = w_k.
SetPartition kernel(const Word& w);

/// Coefficient of a word of kernel κ in the basis function b_π (same ground set):
/// m: [κ = π]; p: [π ≤ κ]; e: [κ ∧ π = 0̂]; h: ∏_{C ∈ κ∧π} |C|!.
Integer word_coefficient(Basis b, const SetPartition& pi, const SetPartition& kappa);

/// Truncation of f to the variables x_1..x_k.
WordPolynomial expand(const NCSymElement& f, int k);

/// Reads the m-expansion back off a symmetric word polynomial.
/// Throws SemanticError with a witness pair when P is not symmetric, and when
/// k is smaller than the longest word (the truncation would not be faithful).
NCSymElement collect(const WordPolynomial& P);

/// f = g as elements of Π(x), decided on expansions in d = max degree variables.
bool equal(const NCSymElement& f, const NCSymElement& g);

/// Moves the letter in place j to place g(j). Throws SemanticError unless every word has length g.size().
WordPolynomial expand_position_action(const Permutation& g, const WordPolynomial& P);

/// "x1 x2 x1 x2"; the empty word prints as "1".
std::string to_string(const Word& w);
/// "x1 x2 + 2*x2 x1"
std::string to_string(const WordPolynomial& P);

}  // namespace ncsf
