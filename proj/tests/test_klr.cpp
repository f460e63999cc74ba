#include <doctest.h>

#include "specht/klr.hpp"
#include "specht/verify.hpp"

using namespace specht;

TEST_CASE("rank one idempotents") {
    HeckeAlgebra<Fp> alg(make_degenerate_params(1, 1, 2, {0}));
    KlrGenerators klr(alg);
    CHECK(klr.idempotent({0}) == alg.one());
    CHECK(klr.idempotent({1}).is_zero());
    CHECK(klr.y(1).is_zero());
}

TEST_CASE("rank two idempotents over F_2") {
    HeckeAlgebra<Fp> alg(make_degenerate_params(2, 1, 2, {0}));
    KlrGenerators klr(alg);

    HeckeElement<Fp> sum;
    for (const auto& [seq, e] : klr.idempotents()) sum += e;
    CHECK(sum == alg.one());

    // Both partitions of 2 have residue sequence (0, 1); nothing else occurs.
    CHECK(!klr.idempotent({0, 1}).is_zero());
    CHECK(klr.idempotent({0, 0}).is_zero());
    CHECK(klr.idempotent({1, 0}).is_zero());
    CHECK(klr.idempotent({1, 1}).is_zero());

    // Single block: e_beta is the identity.
    auto blocks = klr.block_idempotents();
    long nonzero = 0;
    for (const auto& [beta, e] : blocks) {
        if (!e.is_zero()) {
            ++nonzero;
            CHECK(e == alg.one());
        }
    }
    CHECK(nonzero == 1);
}

TEST_CASE("full checks at rank two") {
    CHECK(verify_klr(HeckeAlgebra<Fp>(make_degenerate_params(2, 2, 2, {1, 0}))).passed());
    CHECK(verify_klr(HeckeAlgebra<Fp>(make_degenerate_params(2, 1, 3, {0}))).passed());
}
