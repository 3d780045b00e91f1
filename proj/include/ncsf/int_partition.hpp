#pragma once

#include "ncsf/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace ncsf {

/// An integer partition λ = (λ_1 ≥ λ_2 ≥ … ≥ λ_l ≥ 1).
class IntPartition {
public:
    IntPartition() = default;
    /// Sorts the parts and drops zeros. Throws SemanticError on negative parts.
    explicit IntPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const { return size_; }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    /// m_i: number of parts equal to i.
    int multiplicity(int i) const;

    auto operator<=>(const IntPartition&) const = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// λ! = λ_1!λ_2!⋯λ_l!
Integer fact_parts(const IntPartition& lambda);
/// λ^! = m_1!m_2!⋯
Integer fact_mults(const IntPartition& lambda);
/// n!/(λ!λ^!): the number of set partitions of [n] of type λ.
Integer count_of_type(const IntPartition& lambda);

/// Dominance μ ⊴ λ, written dominates(λ, μ). Throws SemanticError if |λ| ≠ |μ|.
bool dominates(const IntPartition& lambda, const IntPartition& mu);
IntPartition conjugate(const IntPartition& lambda);
/// Lexicographic comparison of the part sequences; a linear extension of dominance.
std::strong_ordering lex_compare(const IntPartition& lambda, const IntPartition& mu);

/// K_{λ,μ} by enumerating semistandard tableaux of shape λ and content μ.
Integer kostka(const IntPartition& lambda, const IntPartition& mu);

/// All partitions of n in reverse lexicographic order, (n) first.
std::vector<IntPartition> partitions_of(int n);

/// Accepts "(3,1)", "3,1" or "[3,1]"; "()" is the empty partition.
IntPartition parse_int_partition(const std::string& text);
/// "(3,1)"
std::string to_string(const IntPartition& lambda);

}  // namespace ncsf
