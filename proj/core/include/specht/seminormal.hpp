#pragma once

#include <stdexcept>
#include <vector>

#include "specht/exact_matrix.hpp"
#include "specht/hecke.hpp"
#include "specht/report.hpp"

namespace specht {

/// Raised when two distinct standard tableaux share a full content sequence,
/// i.e. the parameters are not semisimple.
class SemisimplicityError : public std::runtime_error {
public:
    explicit SemisimplicityError(const std::string& what) : std::runtime_error(what) {}
};

/// Shared context for seminormal computations: all standard tableaux of rank
/// n with their content sequences, and the distinct content values appearing
/// at each position.  Construction checks that content sequences separate
/// tableaux and throws SemisimplicityError naming a colliding pair otherwise.
template <class F>
class SeminormalContext {
public:
    explicit SeminormalContext(const HeckeAlgebra<F>& algebra);

    const HeckeAlgebra<F>& algebra() const { return *algebra_; }
    const std::vector<Multipartition>& shapes() const { return shapes_; }
    const std::vector<std::vector<Tableau>>& tableaux() const { return tableaux_; }
    const std::vector<std::vector<F>>& position_contents() const { return position_contents_; }

    /// F_t: the polynomial in L_1..L_n projecting onto the content sequence
    /// of t.
    HeckeElement<F> projector(const Tableau& t) const;

    /// f_{st} = F_s m_{st} F_t.
    HeckeElement<F> f_pair(const Tableau& s, const Tableau& t) const;

    /// g_{uv} = F_{u'} n_{uv} F_{v'}.
    HeckeElement<F> g_pair(const Tableau& u, const Tableau& v) const;

private:
    const HeckeAlgebra<F>* algebra_;
    std::vector<Multipartition> shapes_;
    std::vector<std::vector<Tableau>> tableaux_;
    std::vector<std::vector<F>> position_contents_;  // distinct values per position
};

/// Matrix model of the algebra on the direct sum of one copy of each cell
/// module, built solely from the content coefficient formulas: generators act
/// on the standard-tableau basis with eigenvalue xi along rows, -1 along
/// columns, and an exact 2x2 mixing rule otherwise.  Serves as the oracle
/// independent of the rewriting engine.
template <class F>
class SeminormalModel {
public:
    explicit SeminormalModel(const HeckeAlgebra<F>& algebra);

    const std::vector<Multipartition>& shapes() const { return shapes_; }
    long multiplicity(std::size_t shape_idx) const;  // |Std(shape)|

    const ExactMatrix<F>& t_matrix(std::size_t shape_idx, long r) const;
    const ExactMatrix<F>& l_matrix(std::size_t shape_idx, long k) const;

    ExactMatrix<F> word_matrix(std::size_t shape_idx, const std::vector<long>& word) const;

    /// Trace of T_w on the regular representation: each cell module counted
    /// with multiplicity equal to its dimension.
    F trace_T(const Permutation& w) const;

    /// Trace of a full basis word L_1^{a_1}...L_n^{a_n} T_w.
    F trace_word(const NormalWord& word) const;

    /// Check every defining relation as an exact matrix identity.
    VerifyReport check_relations() const;

private:
    const HeckeAlgebra<F>* algebra_;
    std::vector<Multipartition> shapes_;
    std::vector<std::vector<Tableau>> tableaux_;
    std::vector<std::vector<ExactMatrix<F>>> t_matrices_;
    std::vector<std::vector<ExactMatrix<F>>> l_matrices_;
};

extern template class SeminormalContext<Rational>;
extern template class SeminormalModel<Rational>;

}  // namespace specht
