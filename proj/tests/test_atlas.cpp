#include <gonality/atlas.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace gonality;

namespace {
const AtlasEntry& entry(const std::string& id) {
    for (const AtlasEntry& e : builtin_examples())
        if (e.id == id) return e;
    throw std::runtime_error("no atlas entry " + id);
}
} // namespace

TEST(Atlas, GenusTaxonomyRowCounts) {
    const std::size_t expected[] = {1, 1, 1, 2, 2, 3, 5};
    for (std::int64_t g = 0; g <= 6; ++g)
        EXPECT_EQ(genus_taxonomy(g).size(), expected[g]) << "genus " << g;
    EXPECT_THROW(genus_taxonomy(7), std::invalid_argument);
    EXPECT_THROW(genus_taxonomy(-1), std::invalid_argument);
}

TEST(Atlas, GenusSixStrata) {
    const auto rows = genus_taxonomy(6);
    ASSERT_EQ(rows.size(), 5u);

    EXPECT_EQ(rows[0].label, "hyperelliptic");
    EXPECT_EQ(rows[0].gonality, 2);
    EXPECT_EQ(rows[0].count, SeriesCount::Unique);

    EXPECT_EQ(rows[2].label, "plane quintic");
    EXPECT_EQ(rows[2].gonality, 4);
    EXPECT_EQ(rows[2].series, "g^2_5");
    EXPECT_EQ(rows[2].count, SeriesCount::Unique);
    // the catalogued label slip is called out: a plane curve with a g^2_d of
    // genus 6 must have degree 5, not 4
    EXPECT_NE(rows[2].note.find("plane quartic"), std::string::npos);
    EXPECT_NE(rows[2].note.find("5"), std::string::npos);

    EXPECT_EQ(rows[3].label, "bielliptic");
    EXPECT_EQ(rows[3].count, SeriesCount::InfinitelyMany);
    EXPECT_NE(rows[3].note.find("no g^2_5"), std::string::npos);

    EXPECT_EQ(rows[4].label, "general");
    EXPECT_EQ(rows[4].count, SeriesCount::FinitelyMany);
    EXPECT_NE(rows[4].note.find("five"), std::string::npos);
}

TEST(Atlas, SmallGenusNotes) {
    const auto g4 = genus_taxonomy(4);
    EXPECT_EQ(g4[1].label, "trigonal");
    EXPECT_NE(g4[1].note.find("exactly two"), std::string::npos);
    EXPECT_NE(g4[1].note.find("cone"), std::string::npos);

    const auto g5 = genus_taxonomy(5);
    EXPECT_EQ(g5[1].count, SeriesCount::Unique);
    EXPECT_NE(g5[1].note.find("cubic ruled"), std::string::npos);
    EXPECT_NE(g5[2].note.find("three quadrics"), std::string::npos);

    EXPECT_STREQ(to_label(SeriesCount::Unique), "unique");
    EXPECT_STREQ(to_label(SeriesCount::FinitelyMany), "finitely_many");
    EXPECT_STREQ(to_label(SeriesCount::InfinitelyMany), "infinitely_many");
}

TEST(Atlas, BuiltinExamplesInvariants) {
    const auto& entries = builtin_examples();
    EXPECT_EQ(entries.size(), 18u);
    std::set<std::string> ids;
    for (const AtlasEntry& e : entries) {
        EXPECT_TRUE(ids.insert(e.id).second) << "duplicate id " << e.id;
        // every entry is traceable: a citation or a derivation chain
        EXPECT_TRUE(!e.citation.empty() || e.record.trace_id.has_value()) << e.id;
        if (e.record.gon) {
            const GonalityRange range = gonality_range(e.record.g);
            EXPECT_GE(*e.record.gon, range.lo) << e.id;
            EXPECT_LE(*e.record.gon, range.hi) << e.id;
        }
    }
}

TEST(Atlas, WorkedExampleRecords) {
    const CurveRecord& sextic = entry("ex-2.2").record;
    EXPECT_EQ(sextic.d, 6);
    EXPECT_EQ(sextic.g, 3);
    EXPECT_EQ(sextic.gon, 3);
    EXPECT_EQ(sextic.k_on_surface, 3);
    EXPECT_TRUE(sextic.computed_by_multisecants);

    const CurveRecord& ci23 = entry("ex-2.4-ci-2-3").record;
    EXPECT_EQ(std::get<QuadricClass>(ci23.locus), (QuadricClass{3, 3}));
    EXPECT_EQ(ci23.d, 6);
    EXPECT_EQ(ci23.g, 4);
    EXPECT_EQ(ci23.gon, 3);
    EXPECT_TRUE(ci23.computed_by_multisecants);
    EXPECT_NE(entry("ex-2.4-ci-2-3").citation.find("Basili"), std::string::npos);

    const CurveRecord& ci45 = entry("ex-2.4-ci-4-5").record;
    EXPECT_EQ(ci45.d, 20);
    EXPECT_EQ(ci45.g, 51);
    EXPECT_EQ(ci45.gon, 16);
    EXPECT_EQ(ci45.gon_status, GonStatus::ExactGeneralMember);
    EXPECT_EQ(ci45.k_effective, 4);
    EXPECT_FALSE(ci45.k_on_surface.has_value());
    EXPECT_TRUE(ci45.computed_by_multisecants);

    const CurveRecord& elms3 = entry("ex-2.8-r3").record;
    EXPECT_EQ(elms3.cliff_dim, 3);
    const CurveRecord& elms4 = entry("ex-2.8-r4").record;
    EXPECT_EQ(elms4.d, 13);
    EXPECT_EQ(elms4.cliff_dim, 4);

    // the boundary of the rational range: d = 5 still works, d >= 6 fails
    EXPECT_TRUE(entry("ex-2.9-general-d5").record.computed_by_multisecants);
    EXPECT_FALSE(entry("ex-2.9-general-d6").record.computed_by_multisecants);
    EXPECT_FALSE(entry("ex-2.9-general-d7").record.computed_by_multisecants);
    EXPECT_EQ(entry("ex-2.9-general-d6").record.g, 0);
    EXPECT_EQ(entry("ex-2.9-general-d6").record.k_effective, 4);
    EXPECT_FALSE(entry("ex-2.9-general-d6").record.k_on_surface.has_value());
    EXPECT_TRUE(entry("ex-2.9-bidegree-1-7").record.computed_by_multisecants);

    // plane images: the on-surface multisecants always overshoot
    for (const char* id : {"ex-2.10-a3", "ex-2.10-a4", "ex-2.10-a5"})
        EXPECT_FALSE(entry(id).record.computed_by_multisecants) << id;
    EXPECT_EQ(entry("ex-2.10-a3").record.gon, 2);
    EXPECT_EQ(entry("ex-2.10-a5").record.k_on_surface, 10);

    // the four curated base classes and the degree-9 CI all succeed
    for (const char* id : {"ex-4.2-a", "ex-4.2-b", "ex-4.2-c", "ex-4.2-d", "ex-4.2-dprime"})
        EXPECT_TRUE(entry(id).record.computed_by_multisecants) << id;
    EXPECT_EQ(entry("ex-4.2-d").record.k_on_surface, 2);
    EXPECT_EQ(entry("ex-4.2-d").record.k_effective, 3);
    EXPECT_NE(entry("ex-4.2-dprime").citation.find("Martens"), std::string::npos);
}

TEST(Atlas, AcmTableOrdering) {
    const auto rows = acm_table(9);
    ASSERT_EQ(rows.size(), 5u);
    const std::vector<std::string> want_ids = {"acm-A-0", "acm-B-0", "acm-C-0", "acm-A-1",
                                               "acm-D-0"};
    const std::vector<std::int64_t> want_d = {6, 7, 8, 9, 9};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].trace_id, want_ids[i]) << i;
        EXPECT_EQ(rows[i].d, want_d[i]) << i;
    }

    const auto smallest = acm_table(6);
    ASSERT_EQ(smallest.size(), 1u);
    EXPECT_EQ(smallest[0].trace_id, "acm-A-0");

    EXPECT_EQ(acm_table(30).size(), 33u);
    EXPECT_THROW(acm_table(5), std::invalid_argument);
}
