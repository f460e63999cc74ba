#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "specht/multipartition.hpp"
#include "specht/permutation.hpp"
#include "specht/quiver.hpp"
#include "specht/scalar.hpp"
#include "specht/tableau.hpp"

namespace specht {

/// Parameters of the cyclotomic algebra: an invertible scalar xi, charges
/// Q_1..Q_level derived from the multicharge, the rank n, and the matching
/// combinatorial quiver data.
template <class F>
struct HeckeParams {
    long n = 0;
    F xi{};
    std::vector<F> charges;      // Q_1..Q_level
    QuiverParams quiver;         // e and multicharge
    bool degenerate = false;     // xi == 1

    long level() const { return static_cast<long>(charges.size()); }
};

/// The semisimple rational instance: xi = 2 and Q_l = 2^{kappa_l}.  The
/// default multicharge ((level-1)(n+1), ..., n+1, 0) keeps charge gaps >= n,
/// which separates the contents of distinct standard tableaux.
HeckeParams<Rational> make_semisimple_params(long n, long level,
                                             std::vector<long> kappa = {});

/// The degenerate instance over F_p: xi = 1, so the quantum characteristic is
/// p, and Q_l = kappa_l mod p.  Multicharge defaults to all zero.
HeckeParams<Fp> make_degenerate_params(long n, long level, long long p,
                                       std::vector<long> kappa = {});

/// A basis word L_1^{a_1}...L_n^{a_n} T_w with 0 <= a_k < level.  These
/// level^n * n! words form a free module basis of the algebra.
struct NormalWord {
    std::vector<std::uint8_t> lpow;
    Permutation w;

    auto operator<=>(const NormalWord&) const = default;
};

/// Exact linear combination of basis words.  No zero coefficients stored.
template <class F>
struct HeckeElement {
    std::map<NormalWord, F> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const NormalWord& word, const F& coefficient);

    HeckeElement& operator+=(const HeckeElement& other);
    HeckeElement& operator-=(const HeckeElement& other);
    friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
    friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
    HeckeElement scaled(const F& c) const;

    bool operator==(const HeckeElement&) const = default;
};

/// Right-multiplication engine for the cyclotomic algebra on its normal-word
/// basis.
///
/// Products are straightened by three moves, each an identity among the
/// defining relations:
///   - T-word products through the usual length/quadratic rule;
///   - a single L-generator pushed leftward through a T-word (push_L);
///   - monomial exponents at or above `level` reduced through memoized
///     expansions of L_k^level (built once, bottom position up).
/// The expansion of L_k^level regenerates a multiple of itself when the
/// divided-difference identity is applied; the resulting linear equation is
/// solved in closed form using the fact that right multiplication by T_{k-1}
/// satisfies the same quadratic as T itself.  Termination of the monomial
/// reduction is by the lexicographic order on exponent vectors read from
/// position n down: each substitution strictly lowers it.
template <class F>
class HeckeAlgebra {
public:
    using Element = HeckeElement<F>;

    explicit HeckeAlgebra(HeckeParams<F> params);

    const HeckeParams<F>& params() const { return params_; }
    long n() const { return params_.n; }
    long level() const { return params_.level(); }
    long long dimension() const;

    std::vector<NormalWord> basis_words() const;

    F from_long(long long k) const;
    F power_of_xi(long e) const;

    Element zero() const { return Element{}; }
    Element one() const;
    Element scalar(const F& c) const;
    Element generator_T(long r) const;
    Element generator_L(long k) const;

    Element mul_T(const Element& e, long r) const;
    Element mul_Tinv(const Element& e, long r) const;
    Element mul_Tword(const Element& e, const std::vector<long>& word) const;
    Element mul_L(const Element& e, long k) const;
    Element left_mul_T(long r, const Element& e) const;
    Element left_mul_Tword(const std::vector<long>& word, const Element& e) const;
    Element mul(const Element& a, const Element& b) const;

    /// The anti-automorphism fixing the generators: T_w -> T_{w^{-1}},
    /// L_k -> L_k.
    Element star(const Element& e) const;

    /// Content of a box / of the box holding k in t.
    F content(const Node& node) const;
    F content(const Tableau& t, long k) const;

    /// Trace of right multiplication by e on the normal-word basis.
    F trace_regular(const Element& e) const;

    std::string element_str(const Element& e) const;

private:
    Element reduce_monomial(const std::vector<long>& exponents) const;
    Element push_L(const Permutation& w, long t) const;
    Element word_times_word(const NormalWord& u, const NormalWord& v) const;
    void build_lpow_reductions();

    HeckeParams<F> params_;
    F xi_inv_;
    F delta_;                       // 1 when xi == 1, else 0
    std::vector<F> cyclotomic_;     // C_0..C_{level-1}: x^level + sum C_i x^i
    std::vector<Element> lpow_reduction_;  // [k-1] holds L_k^level in normal form

    // The caches fill lazily under const; the recursive lock keeps concurrent
    // readers safe (the memoized routines call one another).
    mutable std::recursive_mutex memo_lock_;
    mutable std::map<std::pair<Permutation, long>, Element> push_memo_;
    mutable std::map<std::vector<long>, Element> monomial_memo_;
    mutable std::map<std::pair<NormalWord, NormalWord>, Element> product_memo_;
};

extern template class HeckeAlgebra<Rational>;
extern template class HeckeAlgebra<Fp>;
extern template struct HeckeElement<Rational>;
extern template struct HeckeElement<Fp>;

}  // namespace specht
