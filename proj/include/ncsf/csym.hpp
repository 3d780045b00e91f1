#pragma once

#include "ncsf/basis.hpp"
#include "ncsf/int_partition.hpp"
#include "ncsf/rational.hpp"

#include <map>

namespace ncsf {

/// An element of Λ(x) in one of the bases m, p, e, h, s.
class SymElement {
public:
    using Terms = std::map<IntPartition, Rational>;

    explicit SymElement(Basis b = Basis::m) : basis_(b) {}
    static SymElement basis_element(Basis b, const IntPartition& lambda, const Rational& c = 1);

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const IntPartition& lambda) const;
    void add_term(const IntPartition& lambda, const Rational& c);

    /// Addition converts the right operand into the left operand's basis.
    SymElement& operator+=(const SymElement& other);
    SymElement& operator-=(const SymElement& other);
    SymElement& operator*=(const Rational& c);
    friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
    friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
    friend SymElement operator*(SymElement a, const Rational& c) { return a *= c; }
    friend SymElement operator*(const Rational& c, SymElement a) { return a *= c; }
    friend bool operator==(const SymElement&, const SymElement&) = default;

private:
    Basis basis_;
    Terms terms_;
};

/// Change of basis in Λ. Expansions into m use Kostka numbers for s and a
/// faithful polynomial expansion in |λ| variables for p, e, h; the reverse
/// directions invert those matrices exactly.
SymElement sym_convert(const SymElement& f, Basis target);

/// ⟨m_λ, h_μ⟩ = δ_{λ,μ}.
Rational sym_inner(const SymElement& f, const SymElement& g);

/// ω(e_λ) = h_λ. e and h inputs swap letters; other bases are kept.
SymElement omega_commutative(const SymElement& f);

}  // namespace ncsf
