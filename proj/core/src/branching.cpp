#include "specht/branching.hpp"

#include <algorithm>
#include <stdexcept>

#include "specht/tableau.hpp"

namespace specht {

Filtration induction_filtration(const Multipartition& mu, long residue,
                                const QuiverParams& params) {
    Filtration out;
    out.source = mu;
    out.residue = params.normalize_residue(residue);
    for (const Node& node : mu.addable_nodes(out.residue, params)) {
        out.layers.push_back({mu.with_node_added(node), mu.d_below(node, params), node});
    }
    return out;
}

Filtration dual_induction_filtration(const Multipartition& nu, long residue,
                                     const QuiverParams& params) {
    Filtration out;
    out.source = nu;
    out.residue = params.normalize_residue(residue);
    std::vector<Node> nodes = nu.addable_nodes(out.residue, params);
    std::reverse(nodes.begin(), nodes.end());
    for (const Node& node : nodes) {
        out.layers.push_back({nu.with_node_added(node), nu.d_above(node, params), node});
    }
    return out;
}

LaurentPoly graded_dim_induced(const Multipartition& mu, long residue,
                               const QuiverParams& params) {
    LaurentPoly dim;
    for (const FiltrationLayer& layer : induction_filtration(mu, residue, params).layers) {
        dim += graded_dimension(layer.shape, params).shifted(layer.shift);
    }
    return dim;
}

namespace {

/// The unique standard tableau of layer.shape whose restriction to 1..n is
/// the final tableau of mu: put n+1 on the added node.
Tableau extend_final_tableau(const Multipartition& mu, const FiltrationLayer& layer) {
    Tableau tmu = final_tableau(mu);
    long n = mu.size();
    std::vector<std::vector<std::vector<long>>> rows(static_cast<std::size_t>(layer.shape.level()));
    for (long l = 1; l <= layer.shape.level(); ++l) {
        rows[l - 1].resize(static_cast<std::size_t>(layer.shape.row_count(l)));
        for (long r = 1; r <= layer.shape.row_count(l); ++r) {
            rows[l - 1][r - 1].resize(static_cast<std::size_t>(layer.shape.row_length(l, r)));
        }
    }
    for (const Node& node : mu.diagram()) {
        rows[node.comp - 1][node.row - 1][node.col - 1] = tmu.entry(node);
    }
    rows[layer.added.comp - 1][layer.added.row - 1][layer.added.col - 1] = n + 1;
    return Tableau(layer.shape, std::move(rows));
}

}  // namespace

bool check_degree_identity(const Multipartition& mu, long residue,
                           const QuiverParams& params) {
    Tableau tmu = final_tableau(mu);
    long base = degree(tmu, params);
    for (const FiltrationLayer& layer : induction_filtration(mu, residue, params).layers) {
        Tableau extended = extend_final_tableau(mu, layer);
        if (!extended.is_standard()) return false;
        if (degree(extended, params) != base + layer.shift) return false;
    }
    return true;
}

bool check_defect_shift_identity(const Multipartition& mu, long residue,
                                 const QuiverParams& params) {
    Tableau tmu = final_tableau(mu);
    long codeg = codegree(tmu, params);
    long def = defect(mu.block(params), params);
    for (const FiltrationLayer& layer : induction_filtration(mu, residue, params).layers) {
        Tableau extended = extend_final_tableau(mu, layer);
        long lhs = 2 * codeg + degree(extended, params);
        long rhs = def + codeg + layer.shift;
        if (lhs != rhs) return false;
    }
    return true;
}

}  // namespace specht
