#include "ncsf/error.hpp"
#include "ncsf/text.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace ncsf;
using namespace ncsf::testing;

TEST(Text, ParsesExpressions) {
    const auto f = parse_ncsym("3/2*h[1,3/2,4] - m[1,2,3]");
    EXPECT_EQ(f.basis(), Basis::h);
    EXPECT_EQ(convert(f, Basis::m),
              convert(NCSymElement::basis_element(Basis::h, P("13/24"), Rational(3, 2)), Basis::m) -
                  NCSymElement::basis_element(Basis::m, P("123")));
    EXPECT_TRUE(parse_ncsym("0").is_zero());
    EXPECT_EQ(parse_ncsym("p[13/24]"), NCSymElement::basis_element(Basis::p, P("13/24")));
    EXPECT_EQ(parse_ncsym("-m[1] + 2 * m[ 1 ]"), NCSymElement::basis_element(Basis::m, P("1")));
    EXPECT_EQ(parse_ncsym("2"), NCSymElement::one() * Rational(2));
}

TEST(Text, ReportsPositions) {
    try {
        parse_ncsym("m[1,2] + q[1]");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 9u);
    }
    try {
        parse_ncsym("m[1,2/2]");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("invalid set partition"), std::string::npos);
    }
    EXPECT_THROW(parse_ncsym(""), ParseError);
    EXPECT_THROW(parse_ncsym("m[1"), ParseError);
    EXPECT_THROW(parse_ncsym("m[1] m[1]"), ParseError);
    EXPECT_THROW(parse_ncsym("1/0*m[1]"), ParseError);
    EXPECT_THROW(parse_ncsym("s[1]"), ParseError);
}

TEST(Text, PrintsCanonically) {
    EXPECT_EQ(to_string(convert(parse_ncsym("p[1,3/2,4]"), Basis::m)), "m[1,3/2,4] + m[1,2,3,4]");
    EXPECT_EQ(to_string(parse_ncsym("-3/2*e[1/2] + e[1,2]")), "-3/2*e[1/2] + e[1,2]");
    EXPECT_EQ(to_string(NCSymElement(Basis::h)), "0");
    EXPECT_EQ(to_string(NCSymElement::one(Basis::p)), "p[]");
    EXPECT_EQ(to_string(parse_sym("2*m[3] + s[2,1]")), "2*m[3] + m[2,1] + 2*m[1,1,1]");
}

TEST(Text, RoundTripsEveryElementType) {
    for (int n = 0; n <= 4; ++n)
        for (const auto& pi : enumerate(n))
            for (Basis b : {Basis::m, Basis::p, Basis::e, Basis::h}) {
                const auto f = convert(NCSymElement::basis_element(b, pi, Rational(-7, 3)), b == Basis::m ? Basis::h : Basis::m);
                EXPECT_EQ(parse_ncsym(to_string(f)), f);
                EXPECT_EQ(ncsym_from_json(Json::parse(to_json(f).dump())), f);
            }
    for (int n = 0; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n))
            for (Basis b : {Basis::m, Basis::p, Basis::e, Basis::h, Basis::s}) {
                const auto f = SymElement::basis_element(b, lambda, Rational(5, 2));
                EXPECT_EQ(parse_sym(to_string(f)), f);
                EXPECT_EQ(sym_from_json(Json::parse(to_json(f).dump())), f);
            }
    const VectorPartition v(2, {{2, 1}, {3, 0}});
    EXPECT_EQ(parse_vector_partition(to_string(v)), v);
    EXPECT_EQ(parse_dot_vector(to_string(DotVector{0, 3})), (DotVector{0, 3}));
    const Biword beta({{{1, 1}, {2, 1}}, {{2, 1}, {1, 2}}, {{2, 2}, {3, 2}}});
    EXPECT_EQ(parse_biword(to_string(beta)), beta);
    const auto [T, U] = rsk_forward(beta);
    EXPECT_EQ(parse_tableau_pair(to_string(T, U)), std::pair(T, U));
    for (const auto& x : {DottedEntry{1, 1}, DottedEntry{12, 3}}) EXPECT_EQ(parse_dotted_entry(to_string(x)), x);
}

TEST(Text, RejectsMalformedRskInput) {
    EXPECT_THROW(parse_dotted_entry("3"), ParseError);
    EXPECT_THROW(parse_dotted_entry("0'"), ParseError);
    EXPECT_THROW(parse_dotted_entry("2'x"), ParseError);
    EXPECT_THROW(parse_biword("1' 2'\n1'"), ParseError);
    EXPECT_THROW(parse_biword("1'"), ParseError);
    EXPECT_THROW(parse_biword("2' 1'\n1' 1'"), SemanticError);
    EXPECT_THROW(parse_vector_partition("{[1,0],[1]}"), ParseError);
    EXPECT_THROW(parse_dot_vector("[1,"), ParseError);
    EXPECT_THROW(parse_tableau_pair("1'\n\n1'\n\n1'"), ParseError);
}

TEST(Text, Json) {
    const auto f = parse_ncsym("3/2*h[1,3/2,4]");
    EXPECT_EQ(to_json(f).dump(), R"({"basis":"h","terms":[{"blocks":[[1,3],[2,4]],"coeff":"3/2","n":4}]})");
    const auto g = ncsym_from_json(Json::parse(R"({"basis":"h","terms":[{"blocks":[[1,3],[2,4]],"coeff":"3/2"}]})"));
    EXPECT_EQ(g, f);
    EXPECT_THROW(ncsym_from_json(Json::parse(R"({"basis":"h"})")), ParseError);
    EXPECT_THROW(ncsym_from_json(Json::parse(R"({"basis":"h","terms":[{"blocks":[[1,1]],"coeff":"1"}]})")), ParseError);
    WordPolynomial w(2);
    w.add_term({1, 2}, Rational(1, 2));
    EXPECT_EQ(to_json(w).dump(), R"([{"word":[1,2],"coeff":"1/2"}])");
}
