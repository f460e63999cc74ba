#pragma once

#include <compare>
#include <string>
#include <vector>

#include "specht/tableau.hpp"

namespace specht {

/// A permutation of {1..n}.  Composition is left-to-right: (u*v)(k) = v(u(k)),
/// matching the right action on tableau entries, so T_u T_v = T_{u*v} whenever
/// lengths add.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(long n);  // identity
    explicit Permutation(std::vector<long> images);  // 1-based images

    static Permutation transposition(long n, long i);  // s_i = (i, i+1)
    static Permutation cycle(long n, long from, long to);  // (from, from+1, ..., to)

    long degree() const { return static_cast<long>(images_.size()); }
    long operator()(long k) const { return images_[k - 1]; }
    const std::vector<long>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    friend Permutation operator*(const Permutation& u, const Permutation& v);

    /// Number of inversions = Coxeter length.
    long length() const;

    /// The lexicographically smallest reduced word, as generator subscripts.
    /// This is the fixed global choice of reduced expression.
    std::vector<long> reduced_word() const;

    auto operator<=>(const Permutation&) const = default;

    std::string str() const;  // one-line notation "[2,1,3]"

private:
    std::vector<long> images_;
};

/// Bruhat order via the subword criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

std::vector<Permutation> all_permutations(long n);

/// All reduced words of w (test oracle scale: small n).
std::vector<std::vector<long>> all_reduced_words(const Permutation& w);

/// The unique w with t = t^mu . w, acting on entries positionally.
Permutation tableau_permutation(const Tableau& t);

/// Witness for the straightening step: given a < b in the same row of t^mu
/// and the same column of the standard tableau s, produce w supported on
/// {a..b} and a <= c < b with s.w standard, length(d(s)w) = length(d(s)) +
/// length(w), and c, c+1 in the same row of t^mu and the same column of s.w.
/// Built by the recursion on the maximal crossing entry.
struct StraighteningWitness {
    Permutation w;
    long c = 0;
};
StraighteningWitness straightening_witness(const Multipartition& mu, const Tableau& s,
                                           long a, long b);

}  // namespace specht
