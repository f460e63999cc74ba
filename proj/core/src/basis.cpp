#include "specht/basis.hpp"

#include <stdexcept>

#include "specht/murphy.hpp"

namespace specht {

template <class F>
PairBasis<F>::PairBasis(const HeckeAlgebra<F>& algebra, bool seminormal) : algebra_(&algebra) {
    shapes_ = enumerate_multipartitions(algebra.n(), algebra.level());
    for (const Multipartition& mu : shapes_) tableaux_.push_back(enumerate_standard(mu));
    for (std::size_t si = 0; si < shapes_.size(); ++si) {
        for (std::size_t s = 0; s < tableaux_[si].size(); ++s) {
            for (std::size_t t = 0; t < tableaux_[si].size(); ++t) {
                pairs_.push_back({si, s, t});
            }
        }
    }

    std::size_t col = 0;
    for (const NormalWord& word : algebra.basis_words()) word_index_.emplace(word, col++);
    if (pairs_.size() != word_index_.size()) {
        throw std::logic_error("cellular pair count does not match module rank");
    }

    for (const Pair& p : pairs_) {
        m_.push_back(murphy_m_pair(algebra, tableaux_[p.shape][p.s], tableaux_[p.shape][p.t]));
        n_.push_back(murphy_n_pair(algebra, tableaux_[p.shape][p.s], tableaux_[p.shape][p.t]));
    }
    m_inverse_ = coordinate_matrix(m_).inverse(algebra.from_long(1));
    n_inverse_ = coordinate_matrix(n_).inverse(algebra.from_long(1));

    if (seminormal) {
        context_.emplace(algebra);
        std::vector<std::vector<HeckeElement<F>>> projectors;
        for (std::size_t si = 0; si < shapes_.size(); ++si) {
            std::vector<HeckeElement<F>> row;
            for (const Tableau& t : tableaux_[si]) row.push_back(context_->projector(t));
            projectors.push_back(std::move(row));
        }
        for (std::size_t pi = 0; pi < pairs_.size(); ++pi) {
            const Pair& p = pairs_[pi];
            f_.push_back(algebra.mul(algebra.mul(projectors[p.shape][p.s], m_[pi]),
                                     projectors[p.shape][p.t]));
            g_.push_back(context_->g_pair(tableaux_[p.shape][p.s], tableaux_[p.shape][p.t]));
        }
        f_inverse_ = coordinate_matrix(f_).inverse(algebra.from_long(1));
    }
}

template <class F>
ExactMatrix<F> PairBasis<F>::coordinate_matrix(const std::vector<HeckeElement<F>>& basis) const {
    ExactMatrix<F> m(basis.size(), word_index_.size());
    for (std::size_t r = 0; r < basis.size(); ++r) {
        for (const auto& [word, c] : basis[r].terms) {
            m(r, word_index_.at(word)) = c;
        }
    }
    return m;
}

template <class F>
std::vector<F> PairBasis<F>::coordinates(const HeckeElement<F>& e, const ExactMatrix<F>& inverse,
                                         const std::vector<HeckeElement<F>>& basis) const {
    std::vector<F> v(word_index_.size());
    for (const auto& [word, c] : e.terms) v[word_index_.at(word)] = c;
    std::vector<F> coords = row_times(v, inverse);

    // The residual must vanish identically; anything else is a basis defect.
    HeckeElement<F> rebuilt;
    for (std::size_t p = 0; p < coords.size(); ++p) {
        if (!FieldOps<F>::is_zero(coords[p])) rebuilt += basis[p].scaled(coords[p]);
    }
    if (!(rebuilt == e)) throw std::logic_error("nonzero residual in basis coordinates");
    return coords;
}

template <class F>
std::vector<F> PairBasis<F>::to_m_coordinates(const HeckeElement<F>& e) const {
    return coordinates(e, m_inverse_, m_);
}

template <class F>
std::vector<F> PairBasis<F>::to_n_coordinates(const HeckeElement<F>& e) const {
    return coordinates(e, n_inverse_, n_);
}

template <class F>
std::vector<F> PairBasis<F>::to_f_coordinates(const HeckeElement<F>& e) const {
    if (!context_) throw std::logic_error("seminormal basis not materialized");
    return coordinates(e, f_inverse_, f_);
}

template <class F>
const HeckeElement<F>& PairBasis<F>::f_element(std::size_t p) const {
    if (!context_) throw std::logic_error("seminormal basis not materialized");
    return f_[p];
}

template <class F>
const HeckeElement<F>& PairBasis<F>::g_element(std::size_t p) const {
    if (!context_) throw std::logic_error("seminormal basis not materialized");
    return g_[p];
}

template <class F>
bool PairBasis<F>::strictly_strong_dominates(std::size_t p, std::size_t q) const {
    if (p == q) return false;
    bool strong = strong_dominates(s_of(p), t_of(p), s_of(q), t_of(q));
    bool equal = s_of(p) == s_of(q) && t_of(p) == t_of(q);
    return strong && !equal;
}

template <class F>
const SeminormalContext<F>& PairBasis<F>::seminormal_context() const {
    if (!context_) throw std::logic_error("seminormal basis not materialized");
    return *context_;
}

template class PairBasis<Rational>;

}  // namespace specht
