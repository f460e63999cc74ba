#include <doctest.h>

#include <random>
#include <thread>

#include "specht/basis.hpp"
#include "specht/hecke.hpp"
#include "specht/murphy.hpp"

using namespace specht;

namespace {

Multipartition mp(std::vector<std::vector<long>> comps) { return Multipartition(std::move(comps)); }

template <class F>
HeckeElement<F> random_element(const HeckeAlgebra<F>& alg,
                               const std::vector<NormalWord>& words, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    HeckeElement<F> out;
    for (int i = 0; i < 3; ++i) {
        out.add(words[pick(rng)], alg.from_long(coeff(rng)));
    }
    return out;
}

}  // namespace

TEST_CASE("quadratic relation and identity") {
    HeckeAlgebra<Rational> alg(make_semisimple_params(2, 1));
    HeckeElement<Rational> t1 = alg.generator_T(1);
    HeckeElement<Rational> lhs = alg.mul(t1, t1);
    HeckeElement<Rational> rhs = t1.scaled(alg.params().xi - 1);
    rhs += alg.scalar(alg.params().xi);
    CHECK(lhs == rhs);

    for (const NormalWord& w : alg.basis_words()) {
        HeckeElement<Rational> x;
        x.add(w, 1);
        CHECK(alg.mul(alg.one(), x) == x);
        CHECK(alg.mul(x, alg.one()) == x);
    }
}

TEST_CASE("defining relations reproduce in the engine") {
    for (long level : {1L, 2L}) {
        HeckeAlgebra<Rational> alg(make_semisimple_params(3, level));
        Rational xi = alg.params().xi;

        // Braid relation.
        HeckeElement<Rational> t1 = alg.generator_T(1);
        HeckeElement<Rational> t2 = alg.generator_T(2);
        CHECK(alg.mul(alg.mul(t1, t2), t1) == alg.mul(alg.mul(t2, t1), t2));

        // L generators commute.
        for (long a = 1; a <= 3; ++a) {
            for (long b = 1; b <= 3; ++b) {
                CHECK(alg.mul(alg.generator_L(a), alg.generator_L(b)) ==
                      alg.mul(alg.generator_L(b), alg.generator_L(a)));
            }
        }

        // T_r L_t = L_t T_r for t away from r, r+1.
        CHECK(alg.mul(t1, alg.generator_L(3)) == alg.mul(alg.generator_L(3), t1));

        // T_r L_r + delta = L_{r+1} (T_r - xi + 1), with delta = 0 here.
        for (long r = 1; r <= 2; ++r) {
            HeckeElement<Rational> tr = alg.generator_T(r);
            HeckeElement<Rational> lhs = alg.mul(tr, alg.generator_L(r));
            HeckeElement<Rational> rhs = alg.mul(alg.generator_L(r + 1), tr);
            rhs -= alg.generator_L(r + 1).scaled(xi - 1);
            CHECK(lhs == rhs);
        }

        // Defining polynomial of L_1 vanishes.
        HeckeElement<Rational> prod = alg.one();
        for (const Rational& q : alg.params().charges) {
            HeckeElement<Rational> factor = alg.generator_L(1);
            factor -= alg.scalar(q);
            prod = alg.mul(prod, factor);
        }
        CHECK(prod.is_zero());
    }
}

TEST_CASE("defining relations in the degenerate prime instance") {
    for (long long p : {2LL, 3LL}) {
        HeckeAlgebra<Fp> alg(make_degenerate_params(3, 2, p, {1, 0}));
        HeckeElement<Fp> t1 = alg.generator_T(1);
        HeckeElement<Fp> t2 = alg.generator_T(2);
        CHECK(alg.mul(alg.mul(t1, t2), t1) == alg.mul(alg.mul(t2, t1), t2));

        // T_r L_r + 1 = L_{r+1}(T_r - xi + 1) = L_{r+1} T_r at xi = 1.
        for (long r = 1; r <= 2; ++r) {
            HeckeElement<Fp> lhs = alg.mul(alg.generator_T(r), alg.generator_L(r));
            lhs += alg.one();
            CHECK(lhs == alg.mul(alg.generator_L(r + 1), alg.generator_T(r)));
        }

        HeckeElement<Fp> prod = alg.one();
        for (const Fp& q : alg.params().charges) {
            HeckeElement<Fp> factor = alg.generator_L(1);
            factor -= alg.scalar(q);
            prod = alg.mul(prod, factor);
        }
        CHECK(prod.is_zero());
    }
}

TEST_CASE("associativity on random triples") {
    std::mt19937 rng(20240915);
    {
        HeckeAlgebra<Rational> alg(make_semisimple_params(3, 2));
        std::vector<NormalWord> words = alg.basis_words();
        for (int trial = 0; trial < 200; ++trial) {
            HeckeElement<Rational> a = random_element(alg, words, rng);
            HeckeElement<Rational> b = random_element(alg, words, rng);
            HeckeElement<Rational> c = random_element(alg, words, rng);
            CHECK(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)));
        }
    }
    {
        HeckeAlgebra<Fp> alg(make_degenerate_params(3, 2, 3, {1, 0}));
        std::vector<NormalWord> words = alg.basis_words();
        for (int trial = 0; trial < 25; ++trial) {
            HeckeElement<Fp> a = random_element(alg, words, rng);
            HeckeElement<Fp> b = random_element(alg, words, rng);
            HeckeElement<Fp> c = random_element(alg, words, rng);
            CHECK(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)));
        }
    }
}

TEST_CASE("star anti-automorphism") {
    HeckeAlgebra<Rational> alg(make_semisimple_params(3, 2));
    HeckeElement<Rational> t1 = alg.generator_T(1);
    HeckeElement<Rational> t2 = alg.generator_T(2);
    CHECK(alg.star(alg.mul(t1, t2)) == alg.mul(t2, t1));
    CHECK(alg.star(alg.generator_L(2)) == alg.generator_L(2));

    std::mt19937 rng(7);
    std::vector<NormalWord> words = alg.basis_words();
    for (int trial = 0; trial < 25; ++trial) {
        HeckeElement<Rational> a = random_element(alg, words, rng);
        HeckeElement<Rational> b = random_element(alg, words, rng);
        CHECK(alg.star(alg.star(a)) == a);
        CHECK(alg.star(alg.mul(a, b)) == alg.mul(alg.star(b), alg.star(a)));
    }
}

TEST_CASE("cellular generators") {
    // m for the shape ((1), empty) at level 2 is L_1 - Q_2.
    HeckeAlgebra<Rational> alg(make_semisimple_params(1, 2));
    HeckeElement<Rational> m = murphy_m(alg, mp({{1}, {}}));
    HeckeElement<Rational> expected = alg.generator_L(1);
    expected -= alg.scalar(alg.params().charges[1]);
    CHECK(m == expected);

    // Rank 1 level 1: m is the identity.
    HeckeAlgebra<Rational> tiny(make_semisimple_params(1, 1));
    CHECK(murphy_m(tiny, mp({{1}})) == tiny.one());
}

TEST_CASE("row symmetrizer eigenproperty") {
    // x_mu T_i = xi x_mu for the one-row shape.
    for (long n : {2L, 3L}) {
        HeckeAlgebra<Rational> alg(make_semisimple_params(n, 1));
        HeckeElement<Rational> x = murphy_x(alg, mp({{n}}));
        for (long r = 1; r < n; ++r) {
            CHECK(alg.mul_T(x, r) == x.scaled(alg.params().xi));
        }
    }
}

TEST_CASE("symmetrizers commute with charge polynomials") {
    HeckeAlgebra<Rational> alg(make_semisimple_params(3, 2));
    for (const Multipartition& mu : enumerate_multipartitions(3, 2)) {
        CHECK(alg.mul(murphy_u_plus(alg, mu), murphy_x(alg, mu)) ==
              alg.mul(murphy_x(alg, mu), murphy_u_plus(alg, mu)));
        CHECK(alg.mul(murphy_u_minus(alg, mu), murphy_y(alg, mu)) ==
              alg.mul(murphy_y(alg, mu), murphy_u_minus(alg, mu)));
    }
}

TEST_CASE("star exchanges the tableaux of a cellular pair") {
    for (long n = 1; n <= 3; ++n) {
        HeckeAlgebra<Rational> alg(make_semisimple_params(n, n == 3 ? 1 : 2));
        for (const Multipartition& mu : enumerate_multipartitions(n, alg.level())) {
            std::vector<Tableau> stds = enumerate_standard(mu);
            for (const Tableau& s : stds) {
                for (const Tableau& t : stds) {
                    CHECK(alg.star(murphy_m_pair(alg, s, t)) == murphy_m_pair(alg, t, s));
                    CHECK(alg.star(murphy_n_pair(alg, s, t)) == murphy_n_pair(alg, t, s));
                }
            }
        }
    }
}

TEST_CASE("relations at the deepest supported rank") {
    // n = 4 exercises the reduction tables for L_2, L_3 and L_4.
    HeckeAlgebra<Rational> alg(make_semisimple_params(4, 1));
    Rational xi = alg.params().xi;
    for (long r = 1; r <= 3; ++r) {
        HeckeElement<Rational> tr = alg.generator_T(r);
        HeckeElement<Rational> lhs = alg.mul(tr, alg.generator_L(r));
        HeckeElement<Rational> rhs = alg.mul(alg.generator_L(r + 1), tr);
        rhs -= alg.generator_L(r + 1).scaled(xi - 1);
        CHECK(lhs == rhs);
    }
    for (long a = 1; a <= 4; ++a) {
        for (long b = a + 1; b <= 4; ++b) {
            CHECK(alg.mul(alg.generator_L(a), alg.generator_L(b)) ==
                  alg.mul(alg.generator_L(b), alg.generator_L(a)));
        }
    }
    CHECK(alg.mul(alg.generator_T(1), alg.generator_L(3)) ==
          alg.mul(alg.generator_L(3), alg.generator_T(1)));
    CHECK(alg.mul(alg.generator_T(1), alg.generator_T(3)) ==
          alg.mul(alg.generator_T(3), alg.generator_T(1)));

    std::mt19937 rng(4242);
    std::vector<NormalWord> words = alg.basis_words();
    for (int trial = 0; trial < 20; ++trial) {
        HeckeElement<Rational> a = random_element(alg, words, rng);
        HeckeElement<Rational> b = random_element(alg, words, rng);
        HeckeElement<Rational> c = random_element(alg, words, rng);
        CHECK(alg.mul(alg.mul(a, b), c) == alg.mul(a, alg.mul(b, c)));
        CHECK(alg.star(alg.mul(a, b)) == alg.mul(alg.star(b), alg.star(a)));
    }

    // Level 2 at n = 4: the largest module the engine supports.
    HeckeAlgebra<Rational> wide(make_semisimple_params(4, 2));
    for (long r = 1; r <= 3; ++r) {
        HeckeElement<Rational> tr = wide.generator_T(r);
        HeckeElement<Rational> lhs = wide.mul(tr, wide.generator_L(r));
        HeckeElement<Rational> rhs = wide.mul(wide.generator_L(r + 1), tr);
        rhs -= wide.generator_L(r + 1).scaled(xi - 1);
        CHECK(lhs == rhs);
    }
    HeckeElement<Rational> prod = wide.one();
    for (const Rational& q : wide.params().charges) {
        HeckeElement<Rational> factor = wide.generator_L(1);
        factor -= wide.scalar(q);
        prod = wide.mul(prod, factor);
    }
    CHECK(prod.is_zero());
}

TEST_CASE("module rank equals the cellular pair count") {
    // Exact rank of the m-basis coordinate matrix.
    HeckeAlgebra<Rational> alg(make_semisimple_params(2, 2));
    std::map<NormalWord, std::size_t> index;
    std::size_t col = 0;
    for (const NormalWord& w : alg.basis_words()) index.emplace(w, col++);
    std::vector<HeckeElement<Rational>> rows;
    for (const Multipartition& mu : enumerate_multipartitions(2, 2)) {
        for (const Tableau& s : enumerate_standard(mu)) {
            for (const Tableau& t : enumerate_standard(mu)) {
                rows.push_back(murphy_m_pair(alg, s, t));
            }
        }
    }
    ExactMatrix<Rational> matrix(rows.size(), index.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (const auto& [word, c] : rows[r].terms) matrix(r, index.at(word)) = c;
    }
    CHECK(rows.size() == static_cast<std::size_t>(alg.dimension()));
    CHECK(matrix.rank() == rows.size());
}

TEST_CASE("concurrent readers agree") {
    HeckeAlgebra<Rational> alg(make_semisimple_params(3, 1));
    std::vector<NormalWord> words = alg.basis_words();
    HeckeElement<Rational> a;
    a.add(words[3], 1);
    HeckeElement<Rational> b;
    b.add(words[5], 2);
    HeckeElement<Rational> expected = alg.mul(a, b);

    HeckeAlgebra<Rational> shared(make_semisimple_params(3, 1));
    std::vector<HeckeElement<Rational>> results(8);
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < results.size(); ++i) {
        workers.emplace_back([&, i] { results[i] = shared.mul(a, b); });
    }
    for (auto& w : workers) w.join();
    for (const auto& r : results) CHECK(r == expected);
}

TEST_CASE("pair basis coordinates") {
    HeckeAlgebra<Rational> alg(make_semisimple_params(2, 2));
    PairBasis<Rational> basis(alg, false);
    CHECK(basis.size() == static_cast<std::size_t>(alg.dimension()));

    for (std::size_t p = 0; p < basis.size(); ++p) {
        std::vector<Rational> coords = basis.to_m_coordinates(basis.m_element(p));
        for (std::size_t q = 0; q < coords.size(); ++q) {
            CHECK(coords[q] == (p == q ? 1 : 0));
        }
    }

    // Round trip through random coordinate vectors.
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int trial = 0; trial < 10; ++trial) {
        HeckeElement<Rational> e;
        std::vector<Rational> chosen(basis.size());
        for (std::size_t p = 0; p < basis.size(); ++p) {
            chosen[p] = coeff(rng);
            e += basis.m_element(p).scaled(chosen[p]);
        }
        CHECK(basis.to_m_coordinates(e) == chosen);
    }
}
