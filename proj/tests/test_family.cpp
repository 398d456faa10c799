#include <gonality/family.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace gonality;

TEST(Family, LowerBoundFrozenValues) {
    EXPECT_EQ(family_lower_bound({4, 2, 2}), 4);   // min(4, 4)
    EXPECT_EQ(family_lower_bound({5, 2, 1}), 3);   // min(5, 3)
    EXPECT_EQ(family_lower_bound({1, 9, 9}), 1);   // min(1, 18)
    EXPECT_EQ(family_lower_bound({6, 3, 2}), 5);

    EXPECT_THROW(family_lower_bound({0, 1, 1}), std::invalid_argument);
    EXPECT_THROW(family_lower_bound({3, 0, 1}), std::invalid_argument);
    EXPECT_THROW(family_lower_bound({3, 1, -1}), std::invalid_argument);
}

TEST(Family, LowerBoundMonotone) {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::int64_t> small(1, 50);
    for (int trial = 0; trial < 300; ++trial) {
        const Degeneration d{small(rng), small(rng), small(rng)};
        const std::int64_t l = family_lower_bound(d);
        EXPECT_LE(l, d.s);
        EXPECT_LE(l, d.gon1 + d.gon2);
        EXPECT_GE(l, 1);
        // raising any input never lowers the bound
        EXPECT_GE(family_lower_bound({d.s + 1, d.gon1, d.gon2}), l);
        EXPECT_GE(family_lower_bound({d.s, d.gon1 + 1, d.gon2}), l);
        EXPECT_GE(family_lower_bound({d.s, d.gon1, d.gon2 + 1}), l);
    }
}

TEST(Family, CorollaryCondition) {
    EXPECT_TRUE(corollary_condition({6, 3, 2}, 5));
    EXPECT_FALSE(corollary_condition({5, 3, 2}, 5));  // needs gon1+gon2 strictly below s
    EXPECT_FALSE(corollary_condition({6, 3, 2}, 4));  // limit gonality must match the sum
    EXPECT_THROW(corollary_condition({6, 3, 2}, 0), std::invalid_argument);
    EXPECT_THROW(corollary_condition({6, 0, 2}, 2), std::invalid_argument);
}

TEST(Family, PlaneChainShape) {
    const DerivationChain quartic = plane_induction_chain(4);
    EXPECT_EQ(quartic.id, "plane-4");
    ASSERT_EQ(quartic.steps.size(), 3u);
    EXPECT_EQ(quartic.steps[0].d, 2);
    EXPECT_EQ(quartic.steps[0].claimed_gon, 1);
    EXPECT_FALSE(quartic.steps[0].degeneration.has_value());
    EXPECT_FALSE(quartic.steps[0].base_fact.empty());
    EXPECT_EQ(quartic.steps[2].d, 4);
    EXPECT_EQ(quartic.steps[2].claimed_gon, 3);
    EXPECT_EQ(quartic.steps[2].degeneration, (Degeneration{3, 2, 1}));
    EXPECT_TRUE(verify_chain(quartic).pass);

    const DerivationChain conic = plane_induction_chain(2);
    EXPECT_EQ(conic.steps.size(), 1u);
    EXPECT_TRUE(verify_chain(conic).pass);

    EXPECT_THROW(plane_induction_chain(1), std::invalid_argument);
}

TEST(Family, QuadricChainShape) {
    const DerivationChain ci = quadric_induction_chain(3, 3);
    EXPECT_EQ(ci.id, "quadric-3-3");
    ASSERT_EQ(ci.steps.size(), 3u);
    EXPECT_EQ(ci.steps[0].d, 2);  // base (1,1)
    EXPECT_EQ(ci.steps[0].claimed_gon, 1);
    EXPECT_EQ(ci.steps[2].d, 6);
    EXPECT_EQ(ci.steps[2].claimed_gon, 3);
    EXPECT_EQ(ci.steps[2].degeneration, (Degeneration{4, 2, 1}));
    EXPECT_EQ(ci.steps[2].secant_order, 3);
    const ChainCheck check = verify_chain(ci);
    EXPECT_TRUE(check.pass);
    // the final step sits in the corollary regime: 2 + 1 < 4
    ASSERT_EQ(check.certificates.size(), 1u);
    EXPECT_NE(check.certificates[0].find("corollary regime"), std::string::npos);

    const DerivationChain rational = quadric_induction_chain(1, 9);
    EXPECT_EQ(rational.steps.size(), 1u);
    EXPECT_EQ(rational.steps[0].d, 10);
    EXPECT_EQ(rational.steps[0].secant_order, 9);
    EXPECT_TRUE(verify_chain(rational).pass);

    // bidegree is normalised, so the swapped call gives the same chain
    EXPECT_EQ(quadric_induction_chain(9, 1), rational);
    EXPECT_TRUE(verify_chain(quadric_induction_chain(2, 2)).pass);
    EXPECT_THROW(quadric_induction_chain(0, 5), std::invalid_argument);
}

TEST(Family, CubicChainShape) {
    const DerivationChain a1 = cubic_induction_chain({AcmFamily::A, 1});
    EXPECT_EQ(a1.id, "acm-A-1");
    ASSERT_EQ(a1.steps.size(), 2u);
    EXPECT_EQ(a1.steps[0].curve, "(4;1,1,1,1,1,1) on the cubic");
    EXPECT_EQ(a1.steps[0].d, 6);
    EXPECT_EQ(a1.steps[0].claimed_gon, 3);
    EXPECT_EQ(a1.steps[1].curve, "(7;2,2,2,2,2,2) on the cubic");
    EXPECT_EQ(a1.steps[1].d, 9);
    EXPECT_EQ(a1.steps[1].claimed_gon, 5);
    EXPECT_EQ(a1.steps[1].degeneration, (Degeneration{6, 3, 2}));
    EXPECT_EQ(a1.steps[1].secant_order, 4);
    EXPECT_EQ(a1.steps[1].witness, "G1,G2,G3,G4,G5,G6");
    const ChainCheck check = verify_chain(a1);
    EXPECT_TRUE(check.pass);
    EXPECT_EQ(check.certificates.size(), 1u);

    const DerivationChain d1 = cubic_induction_chain({AcmFamily::D, 1});
    ASSERT_EQ(d1.steps.size(), 2u);
    EXPECT_EQ(d1.steps[0].d, 9);
    EXPECT_EQ(d1.steps[0].claimed_gon, 6);
    EXPECT_EQ(d1.steps[1].d, 12);
    EXPECT_EQ(d1.steps[1].claimed_gon, 8);
    EXPECT_EQ(d1.steps[1].degeneration, (Degeneration{9, 6, 2}));
    EXPECT_EQ(d1.steps[1].secant_order, 4);
    EXPECT_TRUE(verify_chain(d1).pass);

    EXPECT_THROW(cubic_induction_chain({AcmFamily::A, -1}), std::invalid_argument);
}

TEST(Family, AllStandardChainsVerify) {
    for (std::int64_t d = 2; d <= 15; ++d)
        EXPECT_TRUE(verify_chain(plane_induction_chain(d)).pass) << "plane-" << d;
    for (std::int64_t a = 1; a <= 10; ++a)
        for (std::int64_t b = a; b <= 10; ++b)
            EXPECT_TRUE(verify_chain(quadric_induction_chain(a, b)).pass)
                << "quadric-" << a << "-" << b;
    for (const AcmFamily f : {AcmFamily::A, AcmFamily::B, AcmFamily::C, AcmFamily::D})
        for (std::int64_t n = 0; n <= 10; ++n)
            EXPECT_TRUE(verify_chain(cubic_induction_chain({f, n})).pass)
                << "acm-" << family_letter(f) << "-" << n;
}

TEST(Family, TamperedChainsFail) {
    // inflate the final claim: the degeneration bound can no longer reach it
    DerivationChain chain = cubic_induction_chain({AcmFamily::A, 2});
    chain.steps.back().claimed_gon += 1;
    const ChainCheck inflated = verify_chain(chain);
    EXPECT_FALSE(inflated.pass);
    EXPECT_EQ(inflated.failing_step, 2u);
    EXPECT_NE(inflated.message.find("falls short"), std::string::npos);

    // break the induction linkage
    DerivationChain broken = cubic_induction_chain({AcmFamily::B, 1});
    broken.steps[1].degeneration->gon1 += 1;
    const ChainCheck linkage = verify_chain(broken);
    EXPECT_FALSE(linkage.pass);
    EXPECT_EQ(linkage.failing_step, 1u);
    EXPECT_NE(linkage.message.find("previous step"), std::string::npos);

    // a fake 7-secant on a (2,6) curve makes the bound pair contradictory:
    // lower 2 but upper 8 - 7 = 1
    DerivationChain secant = quadric_induction_chain(2, 6);
    secant.steps.back().secant_order = 7;
    secant.steps.back().claimed_gon = 1;
    const ChainCheck contradictory = verify_chain(secant);
    EXPECT_FALSE(contradictory.pass);
    EXPECT_NE(contradictory.message.find("inconsistent"), std::string::npos);

    // a base step with no tag is rejected
    DerivationChain untagged = plane_induction_chain(3);
    untagged.steps[0].base_fact.clear();
    const ChainCheck no_tag = verify_chain(untagged);
    EXPECT_FALSE(no_tag.pass);
    EXPECT_EQ(no_tag.failing_step, 0u);
}

TEST(Family, WrongBaseChainForFamilyD) {
    // Attempting to grow the degree-9 complete intersection from the
    // canonical sextic: the union meets in only s = 6 points, so the bound
    // min(6, 3+2) = 5 cannot certify the claimed gonality 6.
    DerivationChain wrong;
    wrong.id = "acm-D-0-from-sextic";
    wrong.steps.push_back({"(6;2,2,2,2,2,2) on the cubic", 6, 3, std::nullopt, 2, "E1",
                           "canonical genus-4 sextic: trigonal"});
    wrong.steps.push_back({"(9;3,3,3,3,3,3) on the cubic", 9, 6,
                           Degeneration{6, 3, 2}, 3, "E1", ""});
    const ChainCheck check = verify_chain(wrong);
    EXPECT_FALSE(check.pass);
    EXPECT_EQ(check.failing_step, 1u);
    EXPECT_NE(check.message.find("falls short"), std::string::npos);
    EXPECT_NE(check.message.find("5"), std::string::npos);
}

TEST(Family, EmptyChainFails) {
    EXPECT_FALSE(verify_chain(DerivationChain{"empty", {}}).pass);
}
