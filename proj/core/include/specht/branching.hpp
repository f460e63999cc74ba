#pragma once

#include <vector>

#include "specht/laurent.hpp"
#include "specht/multipartition.hpp"
#include "specht/quiver.hpp"

namespace specht {

/// One layer of a graded cell-module filtration of an induced module:
/// a shape of size n+1 together with the grading shift of that layer.
struct FiltrationLayer {
    Multipartition shape;
    long shift = 0;
    Node added;  // provenance: the addable node that produced the shape

    bool operator==(const FiltrationLayer&) const = default;
};

struct Filtration {
    Multipartition source;
    long residue = 0;
    std::vector<FiltrationLayer> layers;
};

/// Layers of the i-induction filtration: for the addable i-nodes A_1..A_z of
/// mu listed top to bottom, layer j is (mu + A_j, d_below(A_j)).  The shapes
/// strictly decrease in dominance.
Filtration induction_filtration(const Multipartition& mu, long residue,
                                const QuiverParams& params);

/// Layers of the dual-induction filtration: addable i-nodes bottom to top with
/// shifts d_above, so the shapes strictly increase in dominance.
Filtration dual_induction_filtration(const Multipartition& nu, long residue,
                                     const QuiverParams& params);

/// Graded dimension of the induced module: sum over layers of
/// q^{shift} * graded_dimension(shape).
LaurentPoly graded_dim_induced(const Multipartition& mu, long residue,
                               const QuiverParams& params);

/// degree(t) of the unique standard (mu + A_j)-tableau extending the final
/// tableau t_mu equals degree(t_mu) + d_below(A_j), for every layer.
bool check_degree_identity(const Multipartition& mu, long residue,
                           const QuiverParams& params);

/// 2*codeg(t_mu) + deg(extension) = defect(beta) + codeg(t_mu) + d_below(A_j)
/// for every layer (degree and defect identities combined, checked on its
/// own terms).
bool check_defect_shift_identity(const Multipartition& mu, long residue,
                                 const QuiverParams& params);

}  // namespace specht
