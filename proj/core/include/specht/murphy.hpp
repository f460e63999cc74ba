#pragma once

#include <vector>

#include "specht/hecke.hpp"

namespace specht {

/// The row stabilizer of t^mu: the Young subgroup attached to the rows of all
/// components of mu.
std::vector<Permutation> young_subgroup(const Multipartition& mu);

/// x_mu: sum of T_w over the Young subgroup.
template <class F>
HeckeElement<F> murphy_x(const HeckeAlgebra<F>& algebra, const Multipartition& mu);

/// Alternating version: sum of (-xi)^{-length(w)} T_w.
template <class F>
HeckeElement<F> murphy_y(const HeckeAlgebra<F>& algebra, const Multipartition& mu);

/// Charge polynomials: products of (L_m - Q_k) over the leading/trailing
/// component blocks.
template <class F>
HeckeElement<F> murphy_u_plus(const HeckeAlgebra<F>& algebra, const Multipartition& mu);
template <class F>
HeckeElement<F> murphy_u_minus(const HeckeAlgebra<F>& algebra, const Multipartition& mu);

/// m_mu = u^+ x_mu and n_mu = u^- y_mu.  Valid for multicompositions too.
template <class F>
HeckeElement<F> murphy_m(const HeckeAlgebra<F>& algebra, const Multipartition& mu);
template <class F>
HeckeElement<F> murphy_n(const HeckeAlgebra<F>& algebra, const Multipartition& mu);

/// m_{st} = T_{d(s)}^* m_mu T_{d(t)}; requires same-shape standard tableaux.
template <class F>
HeckeElement<F> murphy_m_pair(const HeckeAlgebra<F>& algebra, const Tableau& s,
                              const Tableau& t);
template <class F>
HeckeElement<F> murphy_n_pair(const HeckeAlgebra<F>& algebra, const Tableau& s,
                              const Tableau& t);

}  // namespace specht
