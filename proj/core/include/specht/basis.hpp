#pragma once

#include <optional>
#include <vector>

#include "specht/exact_matrix.hpp"
#include "specht/hecke.hpp"
#include "specht/seminormal.hpp"

namespace specht {

/// The materialized cellular bases of one algebra instance, indexed by
/// same-shape standard tableau pairs (shapes most dominant first, tableaux in
/// enumeration order), with exact coordinate maps.
template <class F>
class PairBasis {
public:
    struct Pair {
        std::size_t shape;
        std::size_t s;
        std::size_t t;
    };

    /// Builds the m and n bases.  With `seminormal` set, also builds the
    /// f and g bases (requires semisimple parameters).
    PairBasis(const HeckeAlgebra<F>& algebra, bool seminormal);

    const HeckeAlgebra<F>& algebra() const { return *algebra_; }
    std::size_t size() const { return pairs_.size(); }
    const Pair& pair(std::size_t p) const { return pairs_[p]; }
    const Multipartition& shape_of(std::size_t p) const { return shapes_[pairs_[p].shape]; }
    const Tableau& s_of(std::size_t p) const { return tableaux_[pairs_[p].shape][pairs_[p].s]; }
    const Tableau& t_of(std::size_t p) const { return tableaux_[pairs_[p].shape][pairs_[p].t]; }

    const std::vector<Multipartition>& shapes() const { return shapes_; }
    const std::vector<Tableau>& standard_tableaux(std::size_t shape_idx) const {
        return tableaux_[shape_idx];
    }

    const HeckeElement<F>& m_element(std::size_t p) const { return m_[p]; }
    const HeckeElement<F>& n_element(std::size_t p) const { return n_[p]; }
    const HeckeElement<F>& f_element(std::size_t p) const;
    const HeckeElement<F>& g_element(std::size_t p) const;

    /// Exact coordinates in the requested basis; solving is via the inverse
    /// of the basis coordinate matrix, computed once.  A singular matrix is a
    /// fatal internal error (the words would not form a basis).
    std::vector<F> to_m_coordinates(const HeckeElement<F>& e) const;
    std::vector<F> to_n_coordinates(const HeckeElement<F>& e) const;
    std::vector<F> to_f_coordinates(const HeckeElement<F>& e) const;

    /// Strict strong dominance between indexed pairs.
    bool strictly_strong_dominates(std::size_t p, std::size_t q) const;

    const SeminormalContext<F>& seminormal_context() const;

private:
    std::vector<F> coordinates(const HeckeElement<F>& e, const ExactMatrix<F>& inverse,
                               const std::vector<HeckeElement<F>>& basis) const;
    ExactMatrix<F> coordinate_matrix(const std::vector<HeckeElement<F>>& basis) const;

    const HeckeAlgebra<F>* algebra_;
    std::vector<Multipartition> shapes_;
    std::vector<std::vector<Tableau>> tableaux_;
    std::vector<Pair> pairs_;
    std::map<NormalWord, std::size_t> word_index_;

    std::vector<HeckeElement<F>> m_, n_, f_, g_;
    ExactMatrix<F> m_inverse_, n_inverse_, f_inverse_;
    std::optional<SeminormalContext<F>> context_;
};

extern template class PairBasis<Rational>;

}  // namespace specht
