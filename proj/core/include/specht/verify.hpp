#pragma once

#include "specht/basis.hpp"
#include "specht/klr.hpp"
#include "specht/report.hpp"
#include "specht/seminormal.hpp"

namespace specht {

/// f_{uv} L_k = cont_v(k) f_{uv} for every pair and position.
VerifyReport verify_eigenrelation(const PairBasis<Rational>& basis);

/// Transition matrices between the m and f bases are unitriangular for
/// strict strong dominance, in both directions.
VerifyReport verify_strong_dominance(const PairBasis<Rational>& basis);

/// m_{st} n_{uv} != 0 only if u' dominates t, and n_{uv} m_{st} != 0 only if
/// v' dominates s, over all basis element pairs.
VerifyReport verify_product_vanishing(const PairBasis<Rational>& basis);

/// m_{st} L_k = cont_t(k) m_{st} + strictly strong-dominant m-terms, and the
/// n-basis analogue with leading coefficient cont_{t'}(k).
VerifyReport verify_Lk_action(const PairBasis<Rational>& basis);

/// Expansion of m_lambda in the f basis for every multicomposition lambda of
/// n with positive parts: component bounds on both tableaux and the
/// row-keyed column condition; the same-column-keyed reading is recorded as
/// a note.  For multipartitions additionally the strong-dominance cone at
/// (t^lambda, t^lambda).
VerifyReport verify_mlambda_expansion(const PairBasis<Rational>& basis);

/// Cell module action sanity: dimension, L_k triangular with content
/// diagonal, and T acting by xi on the one-row shape.
VerifyReport verify_cell_action(const PairBasis<Rational>& basis);

/// The generator matrix of the cell module of mu: coordinates of
/// m_{t^mu, t} * x modulo more dominant shapes.
ExactMatrix<Rational> cell_action_matrix(const PairBasis<Rational>& basis,
                                         const Multipartition& mu,
                                         const HeckeElement<Rational>& x);

/// Idempotent completeness and orthogonality, support on realized residue
/// sequences, nilpotency of y_r, the weight relation on y_1, commutation
/// y_r e(i) = e(i) y_r, centrality of the block idempotents, and agreement of
/// the block partition with the residue-content classification.
VerifyReport verify_klr(const HeckeAlgebra<Fp>& algebra);

/// Defining relations hold exactly in the seminormal matrix model and
/// trace(T_w) agrees between the model and the rewriting engine for all w.
VerifyReport verify_cross_model(const HeckeAlgebra<Rational>& algebra);

}  // namespace specht
