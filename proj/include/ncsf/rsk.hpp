#pragma once

// Dotted Robinson-Schensted-Knuth correspondence and the MacMahon Cauchy identity.

#include "ncsf/macmahon.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ncsf {

struct BiwordColumn {
    DottedEntry top;
    DottedEntry bottom;
    auto operator<=>(const BiwordColumn&) const = default;
};

/// Columns weakly increasing in (top value, bottom value), dots ignored.
class Biword {
public:
    Biword() = default;
    /// Throws SemanticError when the columns are out of order or contain nonpositive entries.
    explicit Biword(std::vector<BiwordColumn> columns);

    const std::vector<BiwordColumn>& columns() const { return columns_; }
    std::size_t size() const { return columns_.size(); }
    /// Dot counts of the bottom row, then of the top row.
    std::pair<DotVector, DotVector> multidegree(int alphabets) const;

    friend bool operator==(const Biword&, const Biword&) = default;

private:
    std::vector<BiwordColumn> columns_;
};

bool is_valid_biword(const std::vector<BiwordColumn>& columns);

/// Row-inserts the bottom row into Ṫ and records the top row in U̇.
std::pair<DottedTableau, DottedTableau> rsk_forward(const Biword& beta);

/// Reverse bumping. Throws SemanticError on a shape mismatch or when U̇ is not a recording tableau.
Biword rsk_inverse(const DottedTableau& T, const DottedTableau& U);

struct CauchyReport {
    bool equal = false;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    /// First monomial where the sides differ, with both coefficients.
    std::string discrepancy;
};

/// Σ_λ S_λ(x) S_λ(y) = ∏_{i,j} 1/(1 − Σ_{k,l} x_i^{(k)} y_j^{(l)}) up to degree `degree` in x and in y.
CauchyReport cauchy_check(int alphabets, int variables, int degree);

/// Two lines, top row then bottom row.
std::string to_string(const Biword& beta);

}  // namespace ncsf
