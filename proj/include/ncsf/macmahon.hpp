#pragma once

// MacMahon symmetric functions in n commuting alphabets ẋ, ẍ, …, x⁽ⁿ⁾,
// dotted tableaux, MacMahon Schur functions and Jacobi-Trudi determinants.

#include "ncsf/int_partition.hpp"
#include "ncsf/ncsym.hpp"
#include "ncsf/oracle.hpp"
#include "ncsf/polynomial.hpp"

#include <compare>
#include <string>
#include <vector>

namespace ncsf {

/// A vector [m_1,…,m_n] of nonnegative integers, one component per alphabet.
using DotVector = std::vector<int>;

int degree(const DotVector& v);

/// Multiset of nonzero vectors of a common dimension, kept sorted in
/// reverse-lexicographic (descending) order.
class VectorPartition {
public:
    VectorPartition() = default;
    /// Throws SemanticError on mixed dimensions or negative entries; zero vectors are dropped.
    VectorPartition(int dimension, std::vector<DotVector> parts);

    int dimension() const { return dimension_; }
    const std::vector<DotVector>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    DotVector multidegree() const;
    int degree() const;

    auto operator<=>(const VectorPartition&) const = default;

private:
    int dimension_ = 0;
    std::vector<DotVector> parts_;
};

/// Truncation context: `alphabets` dotted alphabets, subscripts 1..variables,
/// monomials of total degree at most `max_degree`.
struct Truncation {
    int alphabets = 1;
    int variables = 1;
    int max_degree = 0;

    int polynomial_variables() const { return alphabets * variables; }
    /// Position of x_subscript^{(dots)} in an exponent vector (both 1-based).
    int index(int subscript, int dots) const { return (subscript - 1) * alphabets + (dots - 1); }
    auto operator<=>(const Truncation&) const = default;
};

/// A truncated element of ℚ[[ẋ, ẍ, …]].
class MultiPolynomial {
public:
    explicit MultiPolynomial(const Truncation& t);
    MultiPolynomial(const Truncation& t, Polynomial poly);

    const Truncation& truncation() const { return truncation_; }
    const Polynomial& polynomial() const { return poly_; }
    bool is_zero() const { return poly_.is_zero(); }
    Rational coefficient(const Exponents& e) const { return poly_.coefficient(e); }

    /// Exponent vector of a product of (subscript, dots) factors.
    Exponents monomial(const std::vector<std::pair<int, int>>& factors) const;
    /// Multidegree [count of exponents per alphabet].
    DotVector multidegree(const Exponents& e) const;

    MultiPolynomial& operator+=(const MultiPolynomial& other);
    MultiPolynomial& operator-=(const MultiPolynomial& other);
    friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
    friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }
    /// Product truncated at max_degree.
    friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b);
    friend bool operator==(const MultiPolynomial&, const MultiPolynomial&) = default;

private:
    Truncation truncation_;
    Polynomial poly_;
};

/// ⟨vec m⟩ P: the terms of multidegree exactly `m`.
MultiPolynomial multidegree_component(const MultiPolynomial& P, const DotVector& m);
/// Applies the subscript transposition (i i+1) to every variable.
MultiPolynomial swap_subscripts(const MultiPolynomial& P, int i);

/// m_{vecλ}: the sum of all monomials with multiexponent vecλ.
MultiPolynomial mm_monomial(const VectorPartition& lambda, const Truncation& t);
/// Coefficient of q^{t_1}⋯ in ∏_i (1 + ẋ_i q + ẍ_i r + ⋯).
MultiPolynomial mm_elementary(const DotVector& v, const Truncation& t);
/// Coefficient of q^{t_1}⋯ in ∏_i 1/(1 − ẋ_i q − ẍ_i r − ⋯).
MultiPolynomial mm_complete(const DotVector& v, const Truncation& t);
/// p_{[a,…,c]} = m_{[a,…,c]}.
MultiPolynomial mm_power(const DotVector& v, const Truncation& t);
/// Multiplicative extension b_{vecλ} = ∏ b_{λ^i} for b ∈ {m,p,e,h}; for m it is mm_monomial.
MultiPolynomial mm_basis(Basis b, const VectorPartition& lambda, const Truncation& t);

/// Φ on indices: a vector partition of 0/1 vectors summing to [1ⁿ] ↦ the set partition
/// whose blocks are the supports. Throws SemanticError for any other multidegree.
SetPartition phi(const VectorPartition& lambda);
VectorPartition phi_inverse(const SetPartition& pi);
/// Φ on polynomials: ẋ_i ẍ_j ⋯ x⁽ⁿ⁾_k ↦ x_i x_j ⋯ x_k. Every term must have multidegree [1ⁿ].
WordPolynomial phi(const MultiPolynomial& P);

/// A letter i^{(k)} of the dotted alphabet: value i, k dots.
struct DottedEntry {
    int value = 1;
    int dots = 1;
    auto operator<=>(const DottedEntry&) const = default;
};

/// Rows of dotted entries, English convention.
class DottedTableau {
public:
    DottedTableau() = default;
    explicit DottedTableau(std::vector<std::vector<DottedEntry>> rows);

    const std::vector<std::vector<DottedEntry>>& rows() const { return rows_; }
    std::vector<std::vector<DottedEntry>>& rows() { return rows_; }
    IntPartition shape() const;
    int size() const;
    /// Rows weakly increase and columns strictly increase in value.
    bool is_semistandard() const;
    /// Entries per dot class, for `alphabets` classes.
    DotVector multidegree(int alphabets) const;

    friend bool operator==(const DottedTableau&, const DottedTableau&) = default;

private:
    std::vector<std::vector<DottedEntry>> rows_;
};

/// All dotted tableaux of shape λ and multidegree `m` with values ≤ max_value.
std::vector<DottedTableau> dotted_tableaux(const IntPartition& lambda, const DotVector& m, int max_value);

/// S_λ^{vec m} = Σ M_Ṫ over dotted tableaux of shape λ and multidegree `m`.
MultiPolynomial schur_tableau_sum(const IntPartition& lambda, const DotVector& m, const Truncation& t);

/// Knuth-style involution exchanging the counts of i^{(k)} and (i+1)^{(k)} for every k.
DottedTableau dot_swap_involution(const DottedTableau& T, int i);

/// S_λ in Π(x): Σ_{μ⊴λ} μ! K_{λ,μ} Σ_{type σ = μ} m_σ.
NCSymElement schur_ncsym(const IntPartition& lambda);

enum class JacobiTrudiVariant { h, e };

/// ⟨vec m⟩ det(Σ_{vec t ⊢ λ_i−i+j} b_{vec t}) for b = h, e. The h variant equals
/// S_λ^{vec m}; the e variant equals S_{λ′}^{vec m}.
MultiPolynomial jacobi_trudi(const IntPartition& lambda, const DotVector& m, JacobiTrudiVariant variant,
                             const Truncation& t);

/// "x1'^2 x1'' x2''"
std::string to_string(const MultiPolynomial& P);
/// "[2,2]"
std::string to_string(const DotVector& v);
/// "{[2,1],[3,0]}"
std::string to_string(const VectorPartition& v);
/// "1'" for 1̇, "2''" for 2̈.
std::string to_string(const DottedEntry& x);
/// One row per line, entries separated by spaces.
std::string to_string(const DottedTableau& T);

}  // namespace ncsf
