#pragma once

#include <vector>

#include "specht/quiver.hpp"
#include "specht/report.hpp"

namespace specht {

/// The quiver configurations exercised by the combinatorial sweeps: for each
/// e in {0,2,3,4}, multicharges (0), (0,0), (3,0) and (7,3,0) up to the given
/// level.
std::vector<QuiverParams> sweep_quiver_grid(long level_max);

/// For every multipartition of every n <= n_max and every configuration:
///   - codeg(t_mu) + deg(t_mu) = defect(block) and defect >= 0;
///   - graded_dimension(lam) = sum over removable nodes B of
///     q^{d_below(B on lam - B)} graded_dimension(lam - B);
///   - degree and defect-shift identities for every residue and layer;
///   - induction filtration layers strictly decreasing in dominance, dual
///     filtration strictly increasing, with equal shape sets.
VerifyReport sweep_combinatorics(long n_max, const std::vector<QuiverParams>& configs);

/// sum over multipartitions of n of |Std(mu)|^2 = level^n * n!.
VerifyReport sweep_counting(long n_max, long level_max);

/// Dominance infrastructure, exhaustive at small rank:
///   - s dominates t iff conj(t) dominates conj(s);
///   - lam dominates mu iff t^lam dominates t^mu;
///   - strong dominance implies the pair order, and a converse failure is
///     found and noted;
///   - v dominates w iff d(v) <= d(w) in Bruhat order, for same-shape row
///     standard tableaux;
///   - straightening witness postconditions for all valid (mu, s, a, b).
VerifyReport sweep_dominance(long n_max, long level_max);

}  // namespace specht
