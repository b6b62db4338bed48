#include <doctest.h>

#include "waring/strata.hpp"

using namespace waring;

TEST_CASE("generic rank formula") {
    CHECK(generic_rank(1) == 1);
    CHECK(generic_rank(5) == 3);
    CHECK(generic_rank(6) == 4);
    CHECK(generic_rank(11) == 6);
    CHECK_THROWS_AS(generic_rank(0), Error);
}

TEST_CASE("sample_rank_r across the strata") {
    FieldRef q = Field::rationals();
    Rng rng(3);
    for (int r : {1, 3, 5, 7}) {
        SampleResult s = sample_rank_r(7, r, q, rng);
        CHECK(s.cert.rank == r);
        CHECK(waring_rank(s.f).rank == r);
    }
    CHECK_THROWS_WITH_AS(sample_rank_r(7, 8, q, rng), doctest::Contains("unreachable"), Error);
    CHECK_THROWS_AS(sample_rank_r(7, 0, q, rng), Error);
}

TEST_CASE("suprageneric samples have the predicted structure") {
    FieldRef q = Field::rationals();
    Rng rng(5);

    SupragenericPoint p60 = suprageneric_sample(6, 0, q, rng);
    CHECK(waring_rank(p60.f).rank == 6);

    SupragenericPoint p61 = suprageneric_sample(6, 1, q, rng);
    RankCertificate c61 = waring_rank(p61.f);
    CHECK(c61.rank == 5);
    REQUIRE(c61.g1_profile.size() == 2);
    CHECK(c61.g1_profile[0] == MultiplicityEntry{1, 1});
    CHECK(c61.g1_profile[1] == MultiplicityEntry{2, 1});

    SupragenericPoint p92 = suprageneric_sample(9, 2, q, rng);
    CHECK(waring_rank(p92.f).rank == 7);
    CHECK(border_rank(p92.f) == 4);

    CHECK_THROWS_AS(suprageneric_sample(6, 2, q, rng), Error);  // rank 4 is generic
}

TEST_CASE("tangent generators and dimensions") {
    FieldRef q = Field::rationals();
    Rng rng(7);

    SupragenericPoint p = suprageneric_sample(7, 2, q, rng);
    std::vector<BinaryForm> gens = tangent_generators(p);
    CHECK(gens.size() == 8);  // 2k+4
    for (const BinaryForm& g : gens) CHECK(g.degree() == 7);
    CHECK(tangent_dimension(p) == 7);  // 2k+3

    SupragenericPoint p0 = suprageneric_sample(6, 0, q, rng);
    CHECK(tangent_generators(p0).size() == 4);
    CHECK(tangent_dimension(p0) == 3);

    // singular specializations drop the dimension
    SupragenericPoint special = p;
    special.g = special.l[0];
    special.f = assemble_suprageneric(special.d, special.l, special.g);
    CHECK(tangent_dimension(special) <= 6);

    SupragenericPoint coincident = p;
    coincident.l[2] = coincident.l[1];
    coincident.f = assemble_suprageneric(coincident.d, coincident.l, coincident.g);
    CHECK(tangent_dimension(coincident) <= 6);
}

TEST_CASE("census respects the stratification") {
    FieldRef q = Field::rationals();
    Rng rng(11);

    RankCensus c60 = stratum_census(6, 0, 80, q, rng);
    CHECK(c60.flagged == 0);
    for (const auto& [r, cnt] : c60.freq) CHECK((r == 1 || r == 6));

    Rng rng2(13);
    RankCensus c72 = stratum_census(7, 2, 80, q, rng2);
    CHECK(c72.flagged == 0);
    for (const auto& [r, cnt] : c72.freq_g_eq_l0) CHECK(r <= 3);  // k+1
    CHECK(c72.freq.count(5) == 1);  // the generic rank d-k shows up
}

TEST_CASE("rank raising chains") {
    FieldRef q = Field::rationals();
    Rng rng(17);

    // already at rank d: empty chain
    SupragenericPoint top = suprageneric_sample(5, 0, q, rng);
    CHECK(rank_raising_chain(top.f, rng).empty());

    // d=5 from rank 4: one step
    SupragenericPoint p51 = suprageneric_sample(5, 1, q, rng);
    auto chain1 = rank_raising_chain(p51.f, rng);
    REQUIRE(chain1.size() == 1);
    CHECK(chain1.back().new_rank == 5);

    // d=7 from rank 5: two steps, ranks 6 then 7
    SupragenericPoint p72 = suprageneric_sample(7, 2, q, rng);
    auto chain2 = rank_raising_chain(p72.f, rng);
    REQUIRE(chain2.size() == 2);
    CHECK(chain2[0].new_rank == 6);
    CHECK(chain2[1].new_rank == 7);

    // verify by replaying the additions
    BinaryForm f = p72.f;
    for (const ChainStep& s : chain2) {
        f = add(f, scale(power_of_linear(s.l, 7), s.c));
        CHECK(waring_rank(f).rank == s.new_rank);
    }
}

TEST_CASE("chains from subgeneric starts stall at the generic rank over Q") {
    FieldRef q = Field::rationals();
    Rng rng(19);
    // Random powers raise the rank up to the generic value, but entering the
    // suprageneric strata needs a rational point on a proper subvariety of
    // the line family, so over Q the search reports exhaustion with the
    // stuck rank.
    BinaryForm f = power_of_linear(random_linear(q, rng, 10), 5);
    try {
        rank_raising_chain(f, rng);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::search_exhausted);
        CHECK(std::string(e.what()).find("rank 3") != std::string::npos);
    }
}

TEST_CASE("chain crosses the generic rank over a small prime field") {
    FieldRef f11 = Field::prime(11);
    Rng rng(23);
    // degree 3, rank-2 start: the exhaustive (l, c) sweep locates the
    // repeated-root stratum S_{3,3}
    for (;;) {
        LinearForm l1 = random_linear(f11, rng, 10), l2 = random_linear(f11, rng, 10);
        if (proportional(l1, l2)) continue;
        BinaryForm f = add(power_of_linear(l1, 3), power_of_linear(l2, 3));
        if (f.is_zero() || waring_rank(f).rank != 2) continue;
        auto chain = rank_raising_chain(f, rng);
        REQUIRE(chain.size() == 1);
        CHECK(chain.back().new_rank == 3);
        break;
    }
}
