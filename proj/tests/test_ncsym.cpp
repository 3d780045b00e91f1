#include "ncsf/csym.hpp"
#include "ncsf/error.hpp"
#include "ncsf/ncsym.hpp"
#include "ncsf/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace ncsf;
using namespace ncsf::testing;

namespace {

NCSymElement B(Basis b, const std::string& pi, const Rational& c = 1) { return NCSymElement::basis_element(b, P(pi), c); }

NCSymElement m_sum(const std::vector<std::pair<std::string, int>>& terms) {
    NCSymElement out(Basis::m);
    for (const auto& [pi, c] : terms) out.add_term(P(pi), c);
    return out;
}

const std::array<Basis, 4> kBases{Basis::m, Basis::p, Basis::e, Basis::h};

}  // namespace

TEST(NCSym, PowerSumExample) {
    EXPECT_EQ(convert(B(Basis::p, "13/24"), Basis::m), m_sum({{"13/24", 1}, {"1234", 1}}));
}

TEST(NCSym, ElementaryExample) {
    EXPECT_EQ(convert(B(Basis::e, "13/24"), Basis::m),
              m_sum({{"12/34", 1}, {"14/23", 1}, {"12/3/4", 1}, {"14/2/3", 1}, {"1/23/4", 1}, {"1/2/34", 1}, {"1/2/3/4", 1}}));
}

TEST(NCSym, CompleteExample) {
    EXPECT_EQ(convert(B(Basis::h, "13/24"), Basis::m),
              m_sum({{"1/2/3/4", 1}, {"12/3/4", 1}, {"13/2/4", 2}, {"14/2/3", 1}, {"1/23/4", 1}, {"1/24/3", 2},
                     {"1/2/34", 1}, {"12/34", 1}, {"13/24", 4}, {"14/23", 1}, {"123/4", 2}, {"124/3", 2},
                     {"134/2", 2}, {"1/234", 2}, {"1234", 4}}));
}

TEST(NCSym, MonomialTopIsPowerSumTop) { EXPECT_EQ(convert(B(Basis::m, "1234"), Basis::p), B(Basis::p, "1234")); }

TEST(NCSym, RoundTripsAllPairs) {
    for (int n = 0; n <= 5; ++n)
        for (const auto& pi : enumerate(n))
            for (Basis b : kBases)
                for (Basis c : kBases) {
                    const auto f = NCSymElement::basis_element(b, pi);
                    ASSERT_EQ(convert(convert(f, c), b), f) << basis_letter(b) << basis_letter(c) << to_string(pi);
                }
}

TEST(NCSym, RouteIndependence) {
    for (int n = 0; n <= 4; ++n)
        for (const auto& pi : enumerate(n))
            for (Basis from : kBases)
                for (Basis via : kBases)
                    for (Basis to : kBases) {
                        const auto f = NCSymElement::basis_element(from, pi);
                        ASSERT_EQ(convert_via(f, via, to), convert(f, to));
                    }
}

TEST(NCSym, ChangeOfBasisAgreesWithWordExpansion) {
    for (int n = 1; n <= 4; ++n) {
        const auto words = all_words(n, n);
        for (const auto& pi : enumerate(n)) {
            // h through the literal (f, L) count
            WordPolynomial h(n);
            for (const auto& w : words) h.add_term(w, Rational(h_word_count_by_orders(pi, w)));
            EXPECT_EQ(collect(h), convert(B(Basis::h, to_string(pi)), Basis::m));
            for (Basis b : kBases)
                EXPECT_EQ(collect(expand(NCSymElement::basis_element(b, pi), n)),
                          convert(NCSymElement::basis_element(b, pi), Basis::m));
        }
    }
}

TEST(NCSym, ArithmeticAcrossBases) {
    NCSymElement f = B(Basis::p, "13/24") - B(Basis::m, "13/24");
    EXPECT_EQ(f, B(Basis::p, "13/24") - B(Basis::p, "13/24") + B(Basis::p, "1234"));
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(Rational(2) * B(Basis::e, "1"), B(Basis::e, "1", 2));
    EXPECT_THROW(NCSymElement(Basis::s), SemanticError);
    EXPECT_TRUE(equivalent(convert(B(Basis::h, "12/3"), Basis::e), B(Basis::h, "12/3")));
}

TEST(NCSym, Omega) {
    EXPECT_EQ(omega(B(Basis::e, "13/24")), B(Basis::h, "13/24"));
    EXPECT_EQ(omega(B(Basis::p, "13/24")), B(Basis::p, "13/24"));
    EXPECT_EQ(omega(B(Basis::p, "12/3")), B(Basis::p, "12/3", -1));
    for (int n = 0; n <= 5; ++n)
        for (const auto& pi : enumerate(n))
            for (Basis b : kBases) {
                const auto f = NCSymElement::basis_element(b, pi);
                EXPECT_EQ(omega(omega(f)), f);
                EXPECT_TRUE(equivalent(omega(convert(f, Basis::e)), omega(f)));
                EXPECT_EQ(sym_convert(project(omega(f)), Basis::m), sym_convert(omega_commutative(project(f)), Basis::m));
            }
}

TEST(NCSym, Projection) {
    EXPECT_EQ(project(B(Basis::m, "13/24")), SymElement::basis_element(Basis::m, L({2, 2}), 2));
    EXPECT_EQ(project(B(Basis::e, "13/24")), SymElement::basis_element(Basis::e, L({2, 2}), 4));
    EXPECT_EQ(project(B(Basis::p, "134/2")), SymElement::basis_element(Basis::p, L({3, 1})));
    EXPECT_EQ(project(B(Basis::h, "12/3")), SymElement::basis_element(Basis::h, L({2, 1}), 2));
    // ρ is linear, so projecting before or after a change of basis agrees
    for (int n = 0; n <= 5; ++n)
        for (const auto& pi : enumerate(n))
            for (Basis b : kBases) {
                const auto f = NCSymElement::basis_element(b, pi);
                EXPECT_EQ(sym_convert(project(f), Basis::m), sym_convert(project(convert(f, Basis::m)), Basis::m));
            }
}

TEST(NCSym, Lifting) {
    EXPECT_EQ(lift(SymElement::basis_element(Basis::m, L({2, 2}))),
              m_sum({{"12/34", 1}, {"13/24", 1}, {"14/23", 1}}) * Rational(1, 6));
    EXPECT_EQ(lift(SymElement::basis_element(Basis::m, L({4}))), B(Basis::m, "1234"));
    for (int n = 0; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const auto m = SymElement::basis_element(Basis::m, lambda);
            EXPECT_EQ(project(lift(m)), m);
        }
}

TEST(NCSym, InnerProductExamples) {
    EXPECT_EQ(inner(B(Basis::m, "13/24"), B(Basis::h, "13/24")), 24);
    EXPECT_EQ(inner(B(Basis::h, "12"), B(Basis::h, "1/2")), 2);
    EXPECT_EQ(inner(B(Basis::p, "12"), B(Basis::p, "12")), 2);
    EXPECT_EQ(inner(B(Basis::m, "1"), B(Basis::h, "12")), 0);
}

TEST(NCSym, InnerProductClosedForms) {
    for (int n = 0; n <= 4; ++n) {
        const auto all = enumerate(n);
        const Integer nf = factorial(static_cast<unsigned>(n));
        const auto bottom = SetPartition::finest(n);
        for (const auto& pi : all) {
            for (const auto& sigma : all) {
                const auto e = [&](const SetPartition& x) { return NCSymElement::basis_element(Basis::e, x); };
                const auto h = [&](const SetPartition& x) { return NCSymElement::basis_element(Basis::h, x); };
                const auto p = [&](const SetPartition& x) { return NCSymElement::basis_element(Basis::p, x); };
                const auto m = [&](const SetPartition& x) { return NCSymElement::basis_element(Basis::m, x); };
                const Integer meetf = fact_parts(type_of(meet(pi, sigma)));
                const bool zeta = leq(sigma, pi);
                const bool disjoint = meet(pi, sigma) == bottom;
                const Integer abs_mu_pi = abs(mobius(bottom, pi));
                EXPECT_EQ(inner(e(pi), e(sigma)), nf * meetf);
                EXPECT_EQ(inner(e(pi), h(sigma)), disjoint ? nf : 0);
                EXPECT_EQ(inner(e(pi), p(sigma)), zeta ? Rational(sign(sigma) * nf) : 0);
                EXPECT_EQ(inner(e(pi), m(sigma)),
                          zeta ? Rational(sign(sigma) * nf * fact_parts(interval_type(sigma, pi))) : 0);
                EXPECT_EQ(inner(h(pi), h(sigma)), nf * meetf);
                EXPECT_EQ(inner(h(pi), p(sigma)), zeta ? Rational(nf) : 0);
                EXPECT_EQ(inner(h(pi), m(sigma)), pi == sigma ? Rational(nf) : 0);
                EXPECT_EQ(inner(p(pi), p(sigma)), pi == sigma ? Rational(Rational(nf) / abs_mu_pi) : Rational(0));
                EXPECT_EQ(inner(p(pi), m(sigma)), zeta ? Rational(Rational(nf * mobius(sigma, pi)) / abs_mu_pi) : Rational(0));
                Rational mm = 0;
                for (const auto& tau : all)
                    if (leq(join(pi, sigma), tau))
                        mm += Rational(mobius(pi, tau) * mobius(sigma, tau)) / abs(mobius(bottom, tau));
                EXPECT_EQ(inner(m(pi), m(sigma)), nf * mm);
                for (Basis b : kBases)
                    for (Basis c : kBases)
                        EXPECT_EQ(inner(NCSymElement::basis_element(b, pi), NCSymElement::basis_element(c, sigma)),
                                  inner(NCSymElement::basis_element(c, sigma), NCSymElement::basis_element(b, pi)));
            }
        }
    }
}

TEST(NCSym, InnerProductInvariance) {
    for (int n = 1; n <= 4; ++n) {
        const auto all = enumerate(n);
        for (const auto& g : Permutation::all(n))
            for (const auto& pi : all)
                for (const auto& sigma : all) {
                    const auto f = B(Basis::h, to_string(pi));
                    const auto k = B(Basis::m, to_string(sigma)) + B(Basis::p, to_string(sigma));
                    EXPECT_EQ(inner(place_act(g, f), place_act(g, k)), inner(f, k));
                }
    }
}

TEST(NCSym, Isometry) {
    for (int n = 0; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                const auto m = SymElement::basis_element(Basis::m, lambda);
                const auto h = SymElement::basis_element(Basis::h, mu);
                EXPECT_EQ(inner(lift(m), lift(h)), sym_inner(m, h));
            }
}

TEST(NCSym, PlaceAction) {
    const auto g = Permutation::transposition(4, 1, 2);
    EXPECT_EQ(place_act(g, B(Basis::m, "13/24")), B(Basis::m, "14/23"));
    EXPECT_EQ(place_act(Permutation::identity(3), B(Basis::e, "12/3")), B(Basis::e, "12/3"));
    EXPECT_THROW(place_act(g, B(Basis::m, "1") + B(Basis::m, "12")), SemanticError);
    EXPECT_THROW(place_act(g, B(Basis::m, "12")), SemanticError);
    for (const auto& h : Permutation::all(4))
        for (const auto& pi : enumerate(4))
            for (Basis b : kBases) {
                const auto f = NCSymElement::basis_element(b, pi);
                EXPECT_EQ(expand(place_act(h, f), 4), expand_position_action(h, expand(f, 4)));
            }
}

TEST(NCSym, Product) {
    EXPECT_EQ(multiply(B(Basis::p, "1"), B(Basis::p, "1")), m_sum({{"1/2", 1}, {"12", 1}}));
    EXPECT_EQ(multiply(B(Basis::m, "1"), B(Basis::m, "1")), m_sum({{"1/2", 1}, {"12", 1}}));
    const auto f = B(Basis::h, "13/2");
    EXPECT_TRUE(equivalent(multiply(NCSymElement::one(), f), f));
    // p_π p_σ = p_{π|σ}, and the product agrees with word concatenation
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3 - a; ++b)
            for (const auto& pi : enumerate(a))
                for (const auto& sigma : enumerate(b)) {
                    std::vector<std::uint8_t> rgs = pi.rgs();
                    for (auto x : sigma.rgs()) rgs.push_back(static_cast<std::uint8_t>(x + pi.length()));
                    const auto shifted = SetPartition::from_rgs(rgs);
                    const auto fp = NCSymElement::basis_element(Basis::p, pi);
                    const auto gp = NCSymElement::basis_element(Basis::p, sigma);
                    EXPECT_EQ(convert(multiply(fp, gp), Basis::p), NCSymElement::basis_element(Basis::p, shifted));
                    const auto fh = NCSymElement::basis_element(Basis::h, pi);
                    const int k = std::max(a + b, 1);
                    EXPECT_EQ(expand(multiply(fh, gp), k), expand(fh, k) * expand(gp, k));
                }
}
