#include <doctest.h>

#include <stdexcept>

#include <set>

#include "specht/multipartition.hpp"
#include "specht/quiver.hpp"
#include "specht/tableau.hpp"

using namespace specht;

namespace {
Multipartition mp(std::vector<std::vector<long>> comps) { return Multipartition(std::move(comps)); }
}  // namespace

TEST_CASE("conjugation") {
    CHECK(mp({{2, 1}, {1}}).conjugate() == mp({{1}, {2, 1}}));
    CHECK(mp({{}, {}}).conjugate() == mp({{}, {}}));
    CHECK(mp({{3}, {}}).conjugate() == mp({{}, {1, 1, 1}}));
    for (long n = 0; n <= 4; ++n) {
        for (long level = 1; level <= 2; ++level) {
            for (const Multipartition& mu : enumerate_multipartitions(n, level)) {
                CHECK(mu.conjugate().conjugate() == mu);
            }
        }
    }
}

TEST_CASE("dominance") {
    CHECK(dominates(mp({{2}, {}}), mp({{1, 1}, {}})));
    CHECK(dominates(mp({{1, 1}, {}}), mp({{1}, {1}})));
    CHECK(!dominates(mp({{1}, {1}}), mp({{2}, {}})));
    CHECK_THROWS_AS(dominates(mp({{2}}), mp({{1}})), std::invalid_argument);
}

TEST_CASE("enumeration order and counts") {
    auto only = enumerate_multipartitions(0, 3);
    REQUIRE(only.size() == 1);
    CHECK(only[0] == Multipartition::empty(3));

    auto five = enumerate_multipartitions(2, 2);
    REQUIRE(five.size() == 5);
    CHECK(five[0] == mp({{2}, {}}));
    CHECK(five[1] == mp({{1, 1}, {}}));
    CHECK(five[2] == mp({{1}, {1}}));
    CHECK(five[3] == mp({{}, {2}}));
    CHECK(five[4] == mp({{}, {1, 1}}));

    CHECK(enumerate_multipartitions(3, 1).size() == 3);  // p(3)
    // The order refines dominance: more dominant shapes come first.
    for (std::size_t i = 0; i < five.size(); ++i) {
        for (std::size_t j = i + 1; j < five.size(); ++j) {
            CHECK(!(dominates(five[j], five[i]) && !(five[i] == five[j])));
        }
    }
}

TEST_CASE("addable and removable nodes") {
    QuiverParams params(2, {0});
    Multipartition empty = Multipartition::empty(1);
    auto add0 = empty.addable_nodes(0, params);
    REQUIRE(add0.size() == 1);
    CHECK(add0[0] == Node{1, 1, 1});

    Multipartition one = mp({{1}});
    auto add1 = one.addable_nodes(1, params);
    REQUIRE(add1.size() == 2);
    CHECK(add1[0] == Node{1, 2, 1});
    CHECK(add1[1] == Node{2, 1, 1});
    CHECK(one.removable_nodes(0, params) == std::vector<Node>{Node{1, 1, 1}});
    CHECK(one.removable_nodes(1, params).empty());
}

TEST_CASE("signed node counts above and below") {
    QuiverParams params(2, {0});
    Multipartition empty = Multipartition::empty(1);
    CHECK(empty.d_below(Node{1, 1, 1}, params) == 0);

    Multipartition one = mp({{1}});
    CHECK(one.d_below(Node{1, 2, 1}, params) == 1);
    CHECK(one.d_above(Node{2, 1, 1}, params) == 1);
    CHECK(one.d_above(Node{1, 2, 1}, params) == 0);
    CHECK(one.d_below(Node{2, 1, 1}, params) == 0);
}

TEST_CASE("block labels") {
    QuiverParams params(2, {0});
    CHECK(mp({{2}}).block(params) == mp({{1, 1}}).block(params));
    CHECK(Multipartition::empty(1).block(params).multiplicity.empty());

    // The label is independent of which tableau reads the residues.
    for (long n = 0; n <= 5; ++n) {
        for (const Multipartition& mu : enumerate_multipartitions(n, 1)) {
            BlockLabel expected = mu.block(params);
            for (const Tableau& t : enumerate_standard(mu)) {
                BlockLabel observed;
                observed.e = params.e;
                for (long res : residue_sequence(t, params)) observed.add(res);
                CHECK(observed == expected);
            }
        }
    }
}

TEST_CASE("cartan pairing") {
    CHECK(cartan_pairing(0, 5, 5) == 2);
    CHECK(cartan_pairing(0, 4, 5) == -1);
    CHECK(cartan_pairing(0, 2, 5) == 0);
    CHECK(cartan_pairing(2, 0, 1) == -2);
    CHECK(cartan_pairing(3, 0, 2) == -1);  // 2 = 0 - 1 mod 3
    CHECK(cartan_pairing(4, 0, 2) == 0);
}

TEST_CASE("defect values") {
    QuiverParams params(2, {0});
    BlockLabel alpha0;
    alpha0.e = 2;
    alpha0.add(0);
    CHECK(defect(alpha0, params) == 0);

    BlockLabel both;
    both.e = 2;
    both.add(0);
    both.add(1);
    CHECK(defect(both, params) == 1);

    BlockLabel zero;
    zero.e = 2;
    CHECK(defect(zero, params) == 0);
}

TEST_CASE("separation flag") {
    CHECK(QuiverParams(0, {0, 0}).separated(5));
    CHECK(QuiverParams(3, {7, 3, 0}).separated(3));
    CHECK(!QuiverParams(3, {7, 3, 0}).separated(4));
}
