#include <doctest.h>

#include <algorithm>

#include "specht/permutation.hpp"

using namespace specht;

namespace {

Multipartition mp(std::vector<std::vector<long>> comps) { return Multipartition(std::move(comps)); }

Permutation from_word(long n, const std::vector<long>& word) {
    Permutation w(n);
    for (long i : word) w = w * Permutation::transposition(n, i);
    return w;
}

// Subword criterion oracle: u <= w iff some subsequence of a reduced word of
// w of length length(u) multiplies out to u.
bool bruhat_oracle(const Permutation& u, const Permutation& w) {
    std::vector<long> word = w.reduced_word();
    long target = u.length();
    std::size_t m = word.size();
    for (std::size_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<long> sub;
        for (std::size_t b = 0; b < m; ++b) {
            if (mask & (1u << b)) sub.push_back(word[b]);
        }
        if (static_cast<long>(sub.size()) != target) continue;
        if (from_word(u.degree(), sub) == u) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("length") {
    CHECK(Permutation(3).length() == 0);
    CHECK(Permutation::transposition(3, 1).length() == 1);
    CHECK(Permutation({3, 2, 1}).length() == 3);
    for (const Permutation& w : all_permutations(4)) {
        CHECK(w.length() == static_cast<long>(w.reduced_word().size()));
        CHECK(from_word(4, w.reduced_word()) == w);
    }
}

TEST_CASE("canonical reduced word is lexicographically least") {
    CHECK(Permutation(3).reduced_word().empty());
    CHECK(Permutation({3, 2, 1}).reduced_word() == std::vector<long>{1, 2, 1});
    auto words = all_reduced_words(Permutation({3, 2, 1}));
    CHECK(words.size() == 2);  // [1,2,1] and [2,1,2]

    for (const Permutation& w : all_permutations(4)) {
        auto all = all_reduced_words(w);
        CHECK(*std::min_element(all.begin(), all.end()) == w.reduced_word());
    }
}

TEST_CASE("composition and inverse") {
    Permutation s1 = Permutation::transposition(3, 1);
    Permutation s2 = Permutation::transposition(3, 2);
    // (u*v)(k) = v(u(k)).
    CHECK((s1 * s2)(1) == 3);
    CHECK((s1 * s2)(2) == 1);
    CHECK((s1 * s2)(3) == 2);
    CHECK(Permutation::cycle(3, 1, 3) == s2 * s1);
    for (const Permutation& w : all_permutations(4)) {
        CHECK((w * w.inverse()).is_identity());
    }
}

TEST_CASE("Bruhat order") {
    for (const Permutation& w : all_permutations(3)) {
        CHECK(bruhat_leq(Permutation(3), w));
    }
    for (const Permutation& u : all_permutations(4)) {
        for (const Permutation& w : all_permutations(4)) {
            bool leq = bruhat_leq(u, w);
            CHECK(leq == bruhat_oracle(u, w));
            if (leq) CHECK(u.length() <= w.length());
        }
    }
}

TEST_CASE("tableau permutations") {
    for (long n = 1; n <= 4; ++n) {
        for (long level = 1; level <= 2; ++level) {
            for (const Multipartition& mu : enumerate_multipartitions(n, level)) {
                Tableau tmu = initial_tableau(mu);
                CHECK(tableau_permutation(tmu).is_identity());
                for (const Tableau& t : enumerate_standard(mu)) {
                    // t = t^mu . d(t).
                    CHECK(tmu.acted_by(tableau_permutation(t).images()) == t);
                }
                // w_mu^{-1} = w_{mu'}.
                Permutation w_mu = tableau_permutation(final_tableau(mu));
                Permutation w_conj = tableau_permutation(final_tableau(mu.conjugate()));
                CHECK(w_mu.inverse() == w_conj);
            }
        }
    }
    CHECK(tableau_permutation(initial_tableau(mp({{1, 1}}))).is_identity());
}

TEST_CASE("straightening witness base case") {
    // Shape (2): entries 1,2 share the row of t^mu; the column condition
    // needs a two-row tableau, so use mu = (2), s the column tableau of
    // (1,1).
    Multipartition mu = mp({{2}});
    Tableau s = initial_tableau(mp({{1, 1}}));
    StraighteningWitness w = straightening_witness(mu, s, 1, 2);
    CHECK(w.w.is_identity());
    CHECK(w.c == 1);
}
