#include "ncsf/ncsym.hpp"

#include "ncsf/csym.hpp"
#include "ncsf/error.hpp"
#include "ncsf/oracle.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <tuple>

namespace ncsf {

char basis_letter(Basis b) {
    switch (b) {
        case Basis::m: return 'm';
        case Basis::p: return 'p';
        case Basis::e: return 'e';
        case Basis::h: return 'h';
        case Basis::s: return 's';
    }
    return '?';
}

Basis parse_basis(const std::string& text) {
    if (text == "m") return Basis::m;
    if (text == "p") return Basis::p;
    if (text == "e") return Basis::e;
    if (text == "h") return Basis::h;
    if (text == "s") return Basis::s;
    throw ParseError("unknown basis '" + text + "'", 0);
}

// ---------------------------------------------------------------- element

NCSymElement::NCSymElement(Basis b) : basis_(b) {
    if (b == Basis::s) throw SemanticError("Schur functions are not a basis of Π(x)");
}

NCSymElement NCSymElement::basis_element(Basis b, const SetPartition& pi, const Rational& c) {
    NCSymElement f(b);
    f.add_term(pi, c);
    return f;
}

NCSymElement NCSymElement::one(Basis b) { return basis_element(b, SetPartition()); }

Rational NCSymElement::coefficient(const SetPartition& pi) const {
    auto it = terms_.find(pi);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NCSymElement::add_term(const SetPartition& pi, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(pi, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::set<int> NCSymElement::degrees() const {
    std::set<int> out;
    for (const auto& [pi, c] : terms_) out.insert(pi.size());
    return out;
}

int NCSymElement::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

NCSymElement NCSymElement::homogeneous_part(int n) const {
    NCSymElement out(basis_);
    for (const auto& [pi, c] : terms_)
        if (pi.size() == n) out.terms_.emplace(pi, c);
    return out;
}

NCSymElement& NCSymElement::operator+=(const NCSymElement& other) {
    const NCSymElement& rhs = other.basis_ == basis_ ? other : convert(other, basis_);
    for (const auto& [pi, c] : rhs.terms_) add_term(pi, c);
    return *this;
}

NCSymElement& NCSymElement::operator-=(const NCSymElement& other) { return *this += -other; }

NCSymElement& NCSymElement::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [pi, coeff] : terms_) coeff *= c;
    return *this;
}

NCSymElement NCSymElement::operator-() const { return NCSymElement(*this) *= Rational(-1); }

// -------------------------------------------------------- change of basis

namespace {

using Row = std::vector<std::pair<int, Rational>>;
using ChangeMatrix = std::vector<Row>;

// Accumulates coefficients indexed by lattice position, then packs them into a sparse row.
class RowBuilder {
public:
    explicit RowBuilder(int count) : dense_(static_cast<std::size_t>(count)) {}
    void add(int index, const Rational& c) { dense_[static_cast<std::size_t>(index)] += c; }
    Row finish() {
        Row row;
        for (std::size_t i = 0; i < dense_.size(); ++i)
            if (dense_[i] != 0) row.emplace_back(static_cast<int>(i), dense_[i]);
        return row;
    }

private:
    std::vector<Rational> dense_;
};

// λ(σ,π)! for σ ≤ π.
Integer interval_factorial(const Lattice& L, int sigma, int pi) {
    return fact_parts(interval_type(L[sigma], L[pi]));
}

Rational abs_value(const Integer& z) { return Rational(abs(z)); }

// Expansion of b_π (source basis) in the target basis, π = L[pi].
Row change_row(const Lattice& L, Basis from, Basis to, int pi) {
    RowBuilder row(L.count());
    const int bottom = L.bottom();
    using B = Basis;
    if (from == to) {
        row.add(pi, 1);
    } else if (from == B::p && to == B::m) {
        for (int sigma : L.above(pi)) row.add(sigma, 1);
    } else if (from == B::e && to == B::m) {
        for (int sigma = 0; sigma < L.count(); ++sigma)
            if (L.meet(sigma, pi) == bottom) row.add(sigma, 1);
    } else if (from == B::h && to == B::m) {
        for (int sigma = 0; sigma < L.count(); ++sigma) row.add(sigma, L.meet_factorial(sigma, pi));
    } else if (from == B::m && to == B::p) {
        for (int sigma : L.above(pi)) row.add(sigma, L.mobius(pi, sigma));
    } else if (from == B::m && (to == B::e || to == B::h)) {
        // m_π = Σ_{σ≥π} μ(π,σ)/g(σ) Σ_{τ≤σ} μ(τ,σ) b_τ with g = μ(0̂,·) for e and |μ(0̂,·)| for h.
        for (int sigma : L.above(pi)) {
            const Integer& g = L.mobius_from_bottom(sigma);
            Rational outer = Rational(L.mobius(pi, sigma)) / (to == B::e ? Rational(g) : abs_value(g));
            for (int tau : L.below(sigma)) row.add(tau, outer * L.mobius(tau, sigma));
        }
    } else if (from == B::e && to == B::p) {
        for (int sigma : L.below(pi)) row.add(sigma, L.mobius_from_bottom(sigma));
    } else if (from == B::h && to == B::p) {
        for (int sigma : L.below(pi)) row.add(sigma, abs_value(L.mobius_from_bottom(sigma)));
    } else if (from == B::p && (to == B::e || to == B::h)) {
        const Integer& g = L.mobius_from_bottom(pi);
        const Rational scale = to == B::e ? Rational(1) / Rational(g) : Rational(1) / abs_value(g);
        for (int sigma : L.below(pi)) row.add(sigma, scale * L.mobius(sigma, pi));
    } else if ((from == B::e && to == B::h) || (from == B::h && to == B::e)) {
        for (int sigma : L.below(pi)) row.add(sigma, Rational(L.sign(sigma)) * interval_factorial(L, sigma, pi));
    } else {
        throw SemanticError("no change of basis between these bases");
    }
    return row.finish();
}

const ChangeMatrix& change_matrix(Basis from, Basis to, int n) {
    static std::mutex mutex;
    static std::map<std::tuple<Basis, Basis, int>, std::unique_ptr<ChangeMatrix>> cache;
    const Lattice& L = Lattice::of(n);
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({from, to, n});
        if (it != cache.end()) return *it->second;
    }
    auto matrix = std::make_unique<ChangeMatrix>();
    matrix->reserve(static_cast<std::size_t>(L.count()));
    for (int pi = 0; pi < L.count(); ++pi) matrix->push_back(change_row(L, from, to, pi));
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace({from, to, n}, std::move(matrix));
    return *it->second;
}

}  // namespace

NCSymElement convert(const NCSymElement& f, Basis target) {
    NCSymElement out(target);
    if (f.basis() == target) return f;
    for (const auto& [pi, c] : f.terms()) {
        const Lattice& L = Lattice::of(pi.size());
        const Row& row = change_matrix(f.basis(), target, pi.size())[static_cast<std::size_t>(L.index_of(pi))];
        for (const auto& [sigma, coeff] : row) out.add_term(L[sigma], c * coeff);
    }
    return out;
}

NCSymElement convert_via(const NCSymElement& f, Basis via, Basis target) { return convert(convert(f, via), target); }

bool equivalent(const NCSymElement& f, const NCSymElement& g) { return convert(g, f.basis()) == f; }

// ------------------------------------------------------------------- omega

NCSymElement omega(const NCSymElement& f) {
    switch (f.basis()) {
        case Basis::p: {
            NCSymElement out(Basis::p);
            for (const auto& [pi, c] : f.terms()) out.add_term(pi, c * sign(pi));
            return out;
        }
        case Basis::e:
        case Basis::h: {
            NCSymElement out(f.basis() == Basis::e ? Basis::h : Basis::e);
            for (const auto& [pi, c] : f.terms()) out.add_term(pi, c);
            return out;
        }
        default: {
            const NCSymElement in_e = convert(f, Basis::e);
            NCSymElement swapped(Basis::h);
            for (const auto& [pi, c] : in_e.terms()) swapped.add_term(pi, c);
            return convert(swapped, f.basis());
        }
    }
}

// -------------------------------------------------- projection and lifting

SymElement project(const NCSymElement& f) {
    SymElement out(f.basis());
    for (const auto& [pi, c] : f.terms()) {
        const IntPartition lambda = type_of(pi);
        switch (f.basis()) {
            case Basis::m: out.add_term(lambda, c * fact_mults(lambda)); break;
            case Basis::p: out.add_term(lambda, c); break;
            default: out.add_term(lambda, c * fact_parts(lambda)); break;
        }
    }
    return out;
}

NCSymElement lift(const SymElement& f) {
    const SymElement in_m = sym_convert(f, Basis::m);
    NCSymElement out(Basis::m);
    std::map<int, std::vector<SetPartition>> by_degree;
    for (const auto& [lambda, c] : in_m.terms()) {
        const int n = lambda.size();
        auto [it, inserted] = by_degree.try_emplace(n);
        if (inserted) it->second = enumerate(n);
        const Rational scale = c * Rational(fact_parts(lambda)) / factorial(static_cast<unsigned>(n));
        for (const auto& pi : it->second)
            if (type_of(pi) == lambda) out.add_term(pi, scale);
    }
    return out;
}

// ----------------------------------------------------------- inner product

Rational inner(const NCSymElement& f, const NCSymElement& g) {
    const NCSymElement fm = convert(f, Basis::m);
    const NCSymElement gh = convert(g, Basis::h);
    Rational total = 0;
    for (const auto& [pi, c] : fm.terms()) {
        const Rational d = gh.coefficient(pi);
        if (d != 0) total += c * d * factorial(static_cast<unsigned>(pi.size()));
    }
    return total;
}

// ------------------------------------------------------------ place action

NCSymElement place_act(const Permutation& g, const NCSymElement& f) {
    if (!f.is_homogeneous()) throw SemanticError("place action needs a homogeneous element");
    NCSymElement out(f.basis());
    for (const auto& [pi, c] : f.terms()) {
        if (pi.size() != g.size())
            throw SemanticError("place action of S_" + std::to_string(g.size()) + " on an element of degree " +
                                std::to_string(pi.size()));
        out.add_term(act(g, pi), c);
    }
    return out;
}

// ----------------------------------------------------------------- product

NCSymElement multiply(const NCSymElement& f, const NCSymElement& g) {
    // A word of length a+b has coefficient Σ_a f_a(prefix)·g_b(suffix) in the product of the
    // expansions; the m-coefficient of τ is the coefficient of any word with kernel τ.
    const NCSymElement fm = convert(f, Basis::m);
    const NCSymElement gm = convert(g, Basis::m);
    NCSymElement out(Basis::m);
    const auto fdeg = fm.degrees();
    const auto gdeg = gm.degrees();
    std::set<int> total;
    for (int a : fdeg)
        for (int b : gdeg) total.insert(a + b);
    for (int n : total) {
        for (const auto& tau : enumerate(n)) {
            Word w(tau.rgs().begin(), tau.rgs().end());
            for (auto& letter : w) ++letter;
            Rational c = 0;
            for (int a : fdeg) {
                if (!gdeg.contains(n - a)) continue;
                const Word prefix(w.begin(), w.begin() + a);
                const Word suffix(w.begin() + a, w.end());
                const Rational left = fm.coefficient(kernel(prefix));
                if (left == 0) continue;
                c += left * gm.coefficient(kernel(suffix));
            }
            out.add_term(tau, c);
        }
    }
    return out;
}

}  // namespace ncsf
