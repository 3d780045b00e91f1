#pragma once

#include "ncsf/basis.hpp"
#include "ncsf/rational.hpp"
#include "ncsf/set_partition.hpp"

#include <map>
#include <set>

namespace ncsf {

class SymElement;

/// An element of Π(x): a finite ℚ-linear combination of b_π for one basis b ∈ {m,p,e,h}.
/// Terms may live in several degrees; every operation acts degree by degree.
class NCSymElement {
public:
    using Terms = std::map<SetPartition, Rational, TermOrder>;

    /// The zero element in basis `b`. Throws SemanticError for Basis::s.
    explicit NCSymElement(Basis b = Basis::m);
    static NCSymElement basis_element(Basis b, const SetPartition& pi, const Rational& c = 1);
    /// The unit b_∅ (identical in every basis).
    static NCSymElement one(Basis b = Basis::m);

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const SetPartition& pi) const;
    void add_term(const SetPartition& pi, const Rational& c);

    /// Degrees present, ascending.
    std::set<int> degrees() const;
    /// Largest degree present; 0 for the zero element.
    int max_degree() const;
    bool is_homogeneous() const { return degrees().size() <= 1; }
    NCSymElement homogeneous_part(int n) const;

    /// Addition converts the right operand into the left operand's basis.
    NCSymElement& operator+=(const NCSymElement& other);
    NCSymElement& operator-=(const NCSymElement& other);
    NCSymElement& operator*=(const Rational& c);
    NCSymElement operator-() const;
    friend NCSymElement operator+(NCSymElement a, const NCSymElement& b) { return a += b; }
    friend NCSymElement operator-(NCSymElement a, const NCSymElement& b) { return a -= b; }
    friend NCSymElement operator*(NCSymElement a, const Rational& c) { return a *= c; }
    friend NCSymElement operator*(const Rational& c, NCSymElement a) { return a *= c; }

    /// Same basis and same coefficients. Use `equivalent` to compare across bases.
    friend bool operator==(const NCSymElement&, const NCSymElement&) = default;

private:
    Basis basis_;
    Terms terms_;
};

/// Rewrites `f` in the `target` basis using the closed-form change-of-basis
/// formulas over Π_n; every ordered pair of bases has a direct formula.
NCSymElement convert(const NCSymElement& f, Basis target);

/// `f` → `via` → `target`. Used to check route independence.
NCSymElement convert_via(const NCSymElement& f, Basis via, Basis target);

/// Same element of Π(x), possibly written in different bases.
bool equivalent(const NCSymElement& f, const NCSymElement& g);

/// The involution e_π ↔ h_π. An e or h input comes back in the other of the two;
/// m and p inputs keep their basis.
NCSymElement omega(const NCSymElement& f);

/// ρ: let the variables commute. The result carries the same basis letter.
SymElement project(const NCSymElement& f);

/// ρ̃(m_λ) = (λ!/n!) Σ_{type π = λ} m_π, result in the m basis.
NCSymElement lift(const SymElement& f);

/// Bilinear form with ⟨m_π, h_σ⟩ = n! δ_{π,σ}; distinct degrees are orthogonal.
Rational inner(const NCSymElement& f, const NCSymElement& g);

/// Place action g∘b_π = b_{gπ}. Throws SemanticError unless f is homogeneous of degree g.size().
NCSymElement place_act(const Permutation& g, const NCSymElement& f);

/// Product in ℚ⟨⟨x⟩⟩, returned in the m basis.
NCSymElement multiply(const NCSymElement& f, const NCSymElement& g);

}  // namespace ncsf
