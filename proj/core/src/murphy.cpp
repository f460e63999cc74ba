#include "specht/murphy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace specht {

std::vector<Permutation> young_subgroup(const Multipartition& mu) {
    long n = mu.size();
    // Rows of t^mu are the consecutive intervals cut out by the row lengths.
    std::vector<std::pair<long, long>> intervals;
    long next = 1;
    for (long l = 1; l <= mu.level(); ++l) {
        for (long r = 1; r <= mu.row_count(l); ++r) {
            long len = mu.row_length(l, r);
            if (len > 1) intervals.push_back({next, next + len - 1});
            next += len;
        }
    }
    std::vector<Permutation> out{Permutation(n)};
    for (const auto& [lo, hi] : intervals) {
        std::vector<long> block(static_cast<std::size_t>(hi - lo + 1));
        std::iota(block.begin(), block.end(), lo);
        std::vector<Permutation> extended;
        do {
            std::vector<long> images(static_cast<std::size_t>(n));
            std::iota(images.begin(), images.end(), 1L);
            for (long k = lo; k <= hi; ++k) {
                images[static_cast<std::size_t>(k - 1)] = block[static_cast<std::size_t>(k - lo)];
            }
            Permutation w(images);
            for (const Permutation& base : out) extended.push_back(base * w);
        } while (std::next_permutation(block.begin(), block.end()));
        out = std::move(extended);
    }
    return out;
}

template <class F>
HeckeElement<F> murphy_x(const HeckeAlgebra<F>& algebra, const Multipartition& mu) {
    HeckeElement<F> out;
    std::vector<std::uint8_t> zero(static_cast<std::size_t>(algebra.n()), 0);
    for (const Permutation& w : young_subgroup(mu)) {
        out.add({zero, w}, algebra.from_long(1));
    }
    return out;
}

template <class F>
HeckeElement<F> murphy_y(const HeckeAlgebra<F>& algebra, const Multipartition& mu) {
    HeckeElement<F> out;
    std::vector<std::uint8_t> zero(static_cast<std::size_t>(algebra.n()), 0);
    for (const Permutation& w : young_subgroup(mu)) {
        long len = w.length();
        F coeff = algebra.power_of_xi(-len);
        if (len % 2 == 1) coeff = F{} - coeff;
        out.add({zero, w}, coeff);
    }
    return out;
}

namespace {

/// Multiply a pure polynomial in the L generators given by its normal
/// monomials into an element of T-words.  Both sides stay inside the normal
/// basis, so this is plain concatenation.
template <class F>
HeckeElement<F> attach(const std::map<std::vector<std::uint8_t>, F>& poly,
                       const HeckeElement<F>& twords) {
    HeckeElement<F> out;
    for (const auto& [mono, c] : poly) {
        for (const auto& [word, c2] : twords.terms) {
            for (std::uint8_t a : word.lpow) {
                if (a != 0) throw std::logic_error("attach expects pure T-words");
            }
            out.add({mono, word.w}, c * c2);
        }
    }
    return out;
}

template <class F>
std::map<std::vector<std::uint8_t>, F> charge_product(
    const HeckeAlgebra<F>& algebra, const std::vector<std::pair<long, F>>& factors) {
    std::map<std::vector<std::uint8_t>, F> poly;
    poly[std::vector<std::uint8_t>(static_cast<std::size_t>(algebra.n()), 0)] =
        algebra.from_long(1);
    for (const auto& [m, q] : factors) {
        std::map<std::vector<std::uint8_t>, F> next;
        for (const auto& [mono, c] : poly) {
            std::vector<std::uint8_t> up = mono;
            if (++up[static_cast<std::size_t>(m - 1)] >= algebra.level()) {
                throw std::logic_error("charge polynomial exponent overflow");
            }
            auto [it, ok] = next.try_emplace(up, c);
            if (!ok) it->second += c;
            F neg = F{} - q * c;
            auto [it2, ok2] = next.try_emplace(mono, neg);
            if (!ok2) it2->second += neg;
        }
        std::erase_if(next, [](const auto& kv) { return FieldOps<F>::is_zero(kv.second); });
        poly = std::move(next);
    }
    return poly;
}

}  // namespace

namespace {

long component_size(const Multipartition& mu, long l) {
    const auto& comp = mu.components()[static_cast<std::size_t>(l - 1)];
    return std::accumulate(comp.begin(), comp.end(), 0L);
}

}  // namespace

template <class F>
HeckeElement<F> murphy_u_plus(const HeckeAlgebra<F>& algebra, const Multipartition& mu) {
    // Factors (L_m - Q_k) for k = 2..level and m up to |mu^(1)|+...+|mu^(k-1)|.
    std::vector<std::pair<long, F>> factors;
    for (long k = 2; k <= algebra.level(); ++k) {
        long bound = 0;
        for (long l = 1; l <= k - 1; ++l) bound += component_size(mu, l);
        for (long m = 1; m <= bound; ++m) {
            factors.push_back({m, algebra.params().charges[static_cast<std::size_t>(k - 1)]});
        }
    }
    return attach(charge_product(algebra, factors), algebra.one());
}

template <class F>
HeckeElement<F> murphy_u_minus(const HeckeAlgebra<F>& algebra, const Multipartition& mu) {
    // Factors (L_m - Q_k) for k = 1..level-1 and m up to
    // |mu^(1)|+...+|mu^(level-k)|, the mirror of u^+ under component
    // reversal.  (The bound must stop at component level-k: stopping one
    // later would make the element independent of the shape at level 2 and
    // the sign-side words could not span.)
    long level = algebra.level();
    std::vector<std::pair<long, F>> factors;
    for (long k = 1; k <= level - 1; ++k) {
        long bound = 0;
        for (long l = 1; l <= level - k; ++l) bound += component_size(mu, l);
        for (long m = 1; m <= bound; ++m) {
            factors.push_back({m, algebra.params().charges[static_cast<std::size_t>(k - 1)]});
        }
    }
    return attach(charge_product(algebra, factors), algebra.one());
}

template <class F>
HeckeElement<F> murphy_m(const HeckeAlgebra<F>& algebra, const Multipartition& mu) {
    return algebra.mul(murphy_u_plus(algebra, mu), murphy_x(algebra, mu));
}

template <class F>
HeckeElement<F> murphy_n(const HeckeAlgebra<F>& algebra, const Multipartition& mu) {
    return algebra.mul(murphy_u_minus(algebra, mu), murphy_y(algebra, mu));
}

namespace {

template <class F>
HeckeElement<F> dress(const HeckeAlgebra<F>& algebra, const HeckeElement<F>& core,
                      const Tableau& s, const Tableau& t) {
    if (!(s.shape() == t.shape())) throw std::invalid_argument("tableaux must share a shape");
    if (!s.is_standard() || !t.is_standard()) {
        throw std::invalid_argument("tableaux must be standard");
    }
    Permutation ds = tableau_permutation(s);
    Permutation dt = tableau_permutation(t);
    HeckeElement<F> out = algebra.left_mul_Tword(ds.inverse().reduced_word(), core);
    return algebra.mul_Tword(out, dt.reduced_word());
}

}  // namespace

template <class F>
HeckeElement<F> murphy_m_pair(const HeckeAlgebra<F>& algebra, const Tableau& s,
                              const Tableau& t) {
    return dress(algebra, murphy_m(algebra, s.shape()), s, t);
}

template <class F>
HeckeElement<F> murphy_n_pair(const HeckeAlgebra<F>& algebra, const Tableau& s,
                              const Tableau& t) {
    return dress(algebra, murphy_n(algebra, s.shape()), s, t);
}

template HeckeElement<Rational> murphy_x(const HeckeAlgebra<Rational>&, const Multipartition&);
template HeckeElement<Fp> murphy_x(const HeckeAlgebra<Fp>&, const Multipartition&);
template HeckeElement<Rational> murphy_y(const HeckeAlgebra<Rational>&, const Multipartition&);
template HeckeElement<Fp> murphy_y(const HeckeAlgebra<Fp>&, const Multipartition&);
template HeckeElement<Rational> murphy_u_plus(const HeckeAlgebra<Rational>&, const Multipartition&);
template HeckeElement<Fp> murphy_u_plus(const HeckeAlgebra<Fp>&, const Multipartition&);
template HeckeElement<Rational> murphy_u_minus(const HeckeAlgebra<Rational>&, const Multipartition&);
template HeckeElement<Fp> murphy_u_minus(const HeckeAlgebra<Fp>&, const Multipartition&);
template HeckeElement<Rational> murphy_m(const HeckeAlgebra<Rational>&, const Multipartition&);
template HeckeElement<Fp> murphy_m(const HeckeAlgebra<Fp>&, const Multipartition&);
template HeckeElement<Rational> murphy_n(const HeckeAlgebra<Rational>&, const Multipartition&);
template HeckeElement<Fp> murphy_n(const HeckeAlgebra<Fp>&, const Multipartition&);
template HeckeElement<Rational> murphy_m_pair(const HeckeAlgebra<Rational>&, const Tableau&,
                                              const Tableau&);
template HeckeElement<Fp> murphy_m_pair(const HeckeAlgebra<Fp>&, const Tableau&, const Tableau&);
template HeckeElement<Rational> murphy_n_pair(const HeckeAlgebra<Rational>&, const Tableau&,
                                              const Tableau&);
template HeckeElement<Fp> murphy_n_pair(const HeckeAlgebra<Fp>&, const Tableau&, const Tableau&);

}  // namespace specht
