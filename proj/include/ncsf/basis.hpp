#pragma once

#include <array>
#include <string>

namespace ncsf {

/// Basis tags. Schur functions `s` exist only in the commutative layer.
enum class Basis { m, p, e, h, s };

inline constexpr std::array<Basis, 4> kNCSymBases{Basis::m, Basis::p, Basis::e, Basis::h};
inline constexpr std::array<Basis, 5> kSymBases{Basis::m, Basis::p, Basis::e, Basis::h, Basis::s};

char basis_letter(Basis b);
/// Throws ParseError for an unknown letter.
Basis parse_basis(const std::string& text);

}  // namespace ncsf
