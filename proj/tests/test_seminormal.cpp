#include <doctest.h>

#include <map>
#include <tuple>

#include "specht/basis.hpp"
#include "specht/seminormal.hpp"
#include "specht/verify.hpp"

using namespace specht;

namespace {
Multipartition mp(std::vector<std::vector<long>> comps) { return Multipartition(std::move(comps)); }
}  // namespace

TEST_CASE("rank one projector is trivial") {
    HeckeAlgebra<Rational> alg(make_semisimple_params(1, 1));
    SeminormalContext<Rational> ctx(alg);
    Tableau t = initial_tableau(mp({{1}}));
    CHECK(ctx.projector(t) == alg.one());
    CHECK(ctx.f_pair(t, t) == alg.one());
}

TEST_CASE("content collisions are reported") {
    // Equal charges at level 2 collide immediately.
    CHECK_THROWS_AS(SeminormalContext<Rational>(
                        HeckeAlgebra<Rational>(make_semisimple_params(1, 2, {0, 0}))),
                    SemisimplicityError);
}

TEST_CASE("eigenvector property at small rank") {
    HeckeAlgebra<Rational> alg(make_semisimple_params(2, 2));
    PairBasis<Rational> basis(alg, true);
    CHECK(verify_eigenrelation(basis).passed());
}

TEST_CASE("strong dominance transitions at small rank") {
    HeckeAlgebra<Rational> alg(make_semisimple_params(2, 2));
    PairBasis<Rational> basis(alg, true);
    CHECK(verify_strong_dominance(basis).passed());
}

TEST_CASE("model relations and traces at small rank") {
    HeckeAlgebra<Rational> alg(make_semisimple_params(2, 2));
    VerifyReport report = verify_cross_model(alg);
    for (const std::string& v : report.violations) MESSAGE(v);
    CHECK(report.passed());
}

TEST_CASE("seminormal action coefficients match the engine") {
    // The model's generator matrices predict the expansion of f_{uv} T_r in
    // the f basis; the rewriting engine must reproduce it element by element.
    for (auto [n, level] : {std::pair<long, long>{2, 2}, {3, 1}}) {
        HeckeAlgebra<Rational> alg(make_semisimple_params(n, level));
        PairBasis<Rational> basis(alg, true);
        SeminormalModel<Rational> model(alg);

        std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> lookup;
        for (std::size_t p = 0; p < basis.size(); ++p) {
            const auto& pair = basis.pair(p);
            lookup[{pair.shape, pair.s, pair.t}] = p;
        }
        for (std::size_t p = 0; p < basis.size(); ++p) {
            const auto& pair = basis.pair(p);
            for (long r = 1; r < n; ++r) {
                HeckeElement<Rational> engine_side = alg.mul_T(basis.f_element(p), r);
                HeckeElement<Rational> predicted;
                const ExactMatrix<Rational>& m = model.t_matrix(pair.shape, r);
                for (std::size_t t2 = 0; t2 < m.cols(); ++t2) {
                    const Rational& c = m(pair.t, t2);
                    if (c == 0) continue;
                    predicted += basis.f_element(lookup.at({pair.shape, pair.s, t2})).scaled(c);
                }
                CHECK(engine_side == predicted);
            }
        }
    }
}

TEST_CASE("level three cellular structure") {
    // Outside the rank range the suites sweep, but cheap: both cellular
    // coordinate matrices invert (so the charge polynomial bounds are right
    // at level 3) and the eigenrelation holds.
    HeckeAlgebra<Rational> alg(make_semisimple_params(2, 3));
    PairBasis<Rational> basis(alg, true);
    CHECK(basis.size() == 18);
    CHECK(verify_eigenrelation(basis).passed());
    CHECK(verify_strong_dominance(basis).passed());
}

TEST_CASE("expansion support of the row symmetrizers") {
    for (auto [n, level] : {std::pair<long, long>{2, 2}, {3, 1}}) {
        HeckeAlgebra<Rational> alg(make_semisimple_params(n, level));
        PairBasis<Rational> basis(alg, true);
        VerifyReport report = verify_mlambda_expansion(basis);
        for (const std::string& v : report.violations) MESSAGE(v);
        CHECK(report.passed());
        CHECK(!report.notes.empty());
    }
}

TEST_CASE("cell module actions at small rank") {
    HeckeAlgebra<Rational> alg(make_semisimple_params(2, 2));
    PairBasis<Rational> basis(alg, true);
    VerifyReport report = verify_cell_action(basis);
    for (const std::string& v : report.violations) MESSAGE(v);
    CHECK(report.passed());

    // Cell module dimensions match the tableau counts.
    for (std::size_t si = 0; si < basis.shapes().size(); ++si) {
        ExactMatrix<Rational> mat =
            cell_action_matrix(basis, basis.shapes()[si], alg.one());
        CHECK(mat.rows() == basis.standard_tableaux(si).size());
        CHECK(mat == ExactMatrix<Rational>::identity(mat.rows(), 1));
    }
}
