#include "ncsf/error.hpp"
#include "ncsf/set_partition.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace ncsf;
using namespace ncsf::testing;

TEST(SetPartition, ParsesBothSyntaxes) {
    EXPECT_EQ(P("1,3/2,4"), P("13/24"));
    EXPECT_EQ(P("2,4/1,3"), P("13/24"));
    EXPECT_EQ(to_string(P("24/13")), "1,3/2,4");
    EXPECT_EQ(P("").size(), 0);
    EXPECT_THROW(P("1,2/2,3"), ParseError);
    EXPECT_THROW(P("1,3"), ParseError);
    EXPECT_THROW(P("1,a"), ParseError);
    EXPECT_THROW(P("10"), ParseError);
}

TEST(SetPartition, Statistics) {
    const auto pi = P("134/2/56");
    EXPECT_EQ(pi.length(), 3);
    EXPECT_EQ(pi.rank(), 3);
    EXPECT_EQ(type_of(pi), L({3, 2, 1}));
    EXPECT_EQ(type_of(P("13/24")), L({2, 2}));
    EXPECT_EQ(type_of(SetPartition::finest(5)), L({1, 1, 1, 1, 1}));
}

TEST(SetPartition, Order) {
    EXPECT_TRUE(leq(P("1/2/3/4"), P("13/24")));
    EXPECT_FALSE(leq(P("13/24"), P("12/34")));
    EXPECT_TRUE(leq(P("12/3"), P("123")));
    EXPECT_THROW(leq(P("12"), P("123")), SemanticError);
}

TEST(SetPartition, MeetJoin) {
    EXPECT_EQ(meet(P("13/24"), P("12/34")), P("1/2/3/4"));
    EXPECT_EQ(join(P("13/24"), P("12/34")), P("1234"));
    EXPECT_EQ(meet(P("13/24"), P("13/24")), P("13/24"));
    EXPECT_THROW(meet(P("12"), P("1/2/3")), SemanticError);
}

TEST(SetPartition, LatticeAxioms) {
    for (int n = 0; n <= 4; ++n) {
        const auto all = enumerate(n);
        for (const auto& a : all) {
            EXPECT_EQ(meet(a, a), a);
            EXPECT_EQ(join(a, a), a);
            for (const auto& b : all) {
                EXPECT_EQ(meet(a, b), meet(b, a));
                EXPECT_EQ(join(a, b), join(b, a));
                EXPECT_EQ(meet(a, join(a, b)), a);
                EXPECT_EQ(join(a, meet(a, b)), a);
                EXPECT_EQ(leq(a, b), meet(a, b) == a);
                for (const auto& c : all) {
                    EXPECT_EQ(meet(meet(a, b), c), meet(a, meet(b, c)));
                    EXPECT_EQ(join(join(a, b), c), join(a, join(b, c)));
                }
            }
        }
    }
}

TEST(SetPartition, IntervalType) {
    EXPECT_EQ(interval_type(SetPartition::finest(4), P("13/24")), L({2, 2}));
    EXPECT_EQ(interval_type(P("1/2/34"), P("12/34")), L({2, 1}));
    EXPECT_EQ(interval_type(P("13/24"), P("13/24")), L({1, 1}));
    EXPECT_THROW(interval_type(P("13/24"), P("12/34")), SemanticError);
}

TEST(SetPartition, MobiusExamples) {
    EXPECT_EQ(mobius(SetPartition::finest(4), P("1234")), -6);
    EXPECT_EQ(mobius(P("13/24"), P("13/24")), 1);
    EXPECT_EQ(mobius(SetPartition::finest(4), P("13/24")), 1);
    EXPECT_EQ(mobius(P("13/24"), P("12/34")), 0);
    for (int n = 1; n <= 7; ++n) {
        Integer expected = factorial(static_cast<unsigned>(n - 1));
        if ((n - 1) % 2) expected = -expected;
        EXPECT_EQ(mobius(SetPartition::finest(n), SetPartition::coarsest(n)), expected) << n;
    }
}

TEST(SetPartition, MobiusMatchesRecursiveDefinition) {
    for (int n = 0; n <= 5; ++n) {
        std::map<std::pair<SetPartition, SetPartition>, Integer> memo;
        const auto all = enumerate(n);
        for (const auto& s : all)
            for (const auto& p : all) ASSERT_EQ(mobius(s, p), recursive_mobius(s, p, memo)) << to_string(s) << " " << to_string(p);
    }
}

TEST(SetPartition, SignAndAbsoluteSums) {
    EXPECT_EQ(sign(P("13/24")), 1);
    EXPECT_EQ(sign(P("123")), 1);
    EXPECT_EQ(sign(P("12/3")), -1);
    for (int n = 0; n <= 6; ++n) {
        const auto all = enumerate(n);
        const auto bottom = SetPartition::finest(n);
        for (const auto& pi : all) {
            const Integer mu = mobius(bottom, pi);
            EXPECT_EQ(mu, sign(pi) * abs(mu));
            Integer sum = 0;
            for (const auto& s : all)
                if (leq(s, pi)) sum += abs(mobius(bottom, s));
            EXPECT_EQ(sum, fact_parts(type_of(pi)));
        }
    }
}

TEST(SetPartition, Enumeration) {
    EXPECT_EQ(enumerate(0).size(), 1u);
    EXPECT_EQ(enumerate(3).size(), 5u);
    EXPECT_EQ(enumerate(5).size(), 52u);
    EXPECT_EQ(bell(7), 877);
    const auto five = enumerate(5);
    EXPECT_TRUE(std::is_sorted(five.begin(), five.end()));
    EXPECT_EQ(std::set<SetPartition>(five.begin(), five.end()).size(), five.size());
}

TEST(SetPartition, Action) {
    const auto g = Permutation::transposition(4, 1, 2);
    EXPECT_EQ(act(g, P("13/24")), P("14/23"));
    EXPECT_EQ(act(Permutation::identity(4), P("13/24")), P("13/24"));
    const auto all = enumerate(4);
    for (const auto& h : Permutation::all(4)) {
        for (const auto& a : all) {
            EXPECT_EQ(act(h, act(h.inverse(), a)), a);
            EXPECT_EQ(type_of(act(h, a)), type_of(a));
            EXPECT_EQ(sign(act(h, a)), sign(a));
            for (const auto& b : all) {
                EXPECT_EQ(leq(act(h, a), act(h, b)), leq(a, b));
                EXPECT_EQ(act(h, meet(a, b)), meet(act(h, a), act(h, b)));
                EXPECT_EQ(act(h, join(a, b)), join(act(h, a), act(h, b)));
                EXPECT_EQ(mobius(act(h, a), act(h, b)), mobius(a, b));
            }
        }
    }
    EXPECT_THROW(act(g, P("12/3")), SemanticError);
}

TEST(Lattice, TablesAgreeWithFreeFunctions) {
    const Lattice& L4 = Lattice::of(4);
    ASSERT_EQ(L4.count(), 15);
    for (int a = 0; a < L4.count(); ++a) {
        EXPECT_EQ(L4.index_of(L4[a]), a);
        for (int b = 0; b < L4.count(); ++b) {
            EXPECT_EQ(L4.leq(a, b), leq(L4[a], L4[b]));
            EXPECT_EQ(L4[L4.meet(a, b)], meet(L4[a], L4[b]));
            EXPECT_EQ(L4.mobius(a, b), mobius(L4[a], L4[b]));
        }
    }
    EXPECT_THROW(Lattice::of(8), SemanticError);
}
