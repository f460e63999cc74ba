#include <doctest.h>

#include <set>

#include "specht/branching.hpp"
#include "specht/tableau.hpp"

using namespace specht;

namespace {
Multipartition mp(std::vector<std::vector<long>> comps) { return Multipartition(std::move(comps)); }
}  // namespace

TEST_CASE("induction filtration layers") {
    QuiverParams params(2, {0});

    Filtration f0 = induction_filtration(Multipartition::empty(1), 0, params);
    REQUIRE(f0.layers.size() == 1);
    CHECK(f0.layers[0].shape == mp({{1}}));
    CHECK(f0.layers[0].shift == 0);

    Filtration f1 = induction_filtration(mp({{1}}), 1, params);
    REQUIRE(f1.layers.size() == 2);
    CHECK(f1.layers[0].shape == mp({{2}}));
    CHECK(f1.layers[0].shift == 1);
    CHECK(f1.layers[1].shape == mp({{1, 1}}));
    CHECK(f1.layers[1].shift == 0);

    CHECK(induction_filtration(mp({{1}}), 0, params).layers.empty());
}

TEST_CASE("dual filtration layers") {
    QuiverParams params(2, {0});
    Filtration f = dual_induction_filtration(mp({{1}}), 1, params);
    REQUIRE(f.layers.size() == 2);
    CHECK(f.layers[0].shape == mp({{1, 1}}));
    CHECK(f.layers[0].shift == 1);
    CHECK(f.layers[1].shape == mp({{2}}));
    CHECK(f.layers[1].shift == 0);

    Filtration g = dual_induction_filtration(Multipartition::empty(1), 0, params);
    REQUIRE(g.layers.size() == 1);
    CHECK(g.layers[0].shift == 0);
}

TEST_CASE("graded dimension of induced modules") {
    QuiverParams params(2, {0});
    CHECK(graded_dim_induced(Multipartition::empty(1), 0, params) == LaurentPoly::one());
    CHECK(graded_dim_induced(mp({{1}}), 1, params) ==
          LaurentPoly::monomial(2, 1) + LaurentPoly::one());

    // At q = 1 the dimension counts standard tableaux of all layers, and
    // summing over residues partitions the addable nodes.
    for (long n = 0; n <= 5; ++n) {
        for (const Multipartition& mu : enumerate_multipartitions(n, 2)) {
            QuiverParams q3(3, {3, 0});
            long long via_layers = 0;
            for (long i = 0; i < q3.e; ++i) {
                via_layers += graded_dim_induced(mu, i, q3).evaluate_at_one();
            }
            long long direct = 0;
            for (const Node& node : mu.addable_nodes()) {
                direct += static_cast<long long>(
                    enumerate_standard(mu.with_node_added(node)).size());
            }
            CHECK(via_layers == direct);
        }
    }
}

TEST_CASE("degree identities at small rank") {
    QuiverParams params(2, {0});
    CHECK(check_degree_identity(Multipartition::empty(1), 0, params));
    CHECK(check_degree_identity(mp({{1}}), 0, params));
    CHECK(check_degree_identity(mp({{1}}), 1, params));
    CHECK(check_defect_shift_identity(Multipartition::empty(1), 0, params));
    CHECK(check_defect_shift_identity(mp({{1}}), 0, params));
    CHECK(check_defect_shift_identity(mp({{1}}), 1, params));
}

TEST_CASE("layer shape multiset matches addable nodes") {
    QuiverParams params(3, {3, 0});
    for (long n = 0; n <= 4; ++n) {
        for (const Multipartition& mu : enumerate_multipartitions(n, 2)) {
            std::set<std::string> expected;
            for (const Node& node : mu.addable_nodes()) {
                expected.insert(mu.with_node_added(node).str());
            }
            std::set<std::string> seen;
            for (long i = 0; i < params.e; ++i) {
                Filtration ind = induction_filtration(mu, i, params);
                Filtration dual = dual_induction_filtration(mu, i, params);
                REQUIRE(ind.layers.size() == dual.layers.size());
                for (const auto& layer : ind.layers) {
                    CHECK(!seen.count(layer.shape.str()));
                    seen.insert(layer.shape.str());
                }
            }
            CHECK(seen == expected);
        }
    }
}
