#pragma once

#include <string>
#include <vector>

#include "specht/laurent.hpp"
#include "specht/multipartition.hpp"
#include "specht/quiver.hpp"

namespace specht {

/// A bijective filling of a diagram with 1..n.  Standardness is a query, not
/// an invariant: row-standard tableaux are first-class citizens here.
class Tableau {
public:
    Tableau() = default;
    Tableau(Multipartition shape, std::vector<std::vector<std::vector<long>>> rows);

    const Multipartition& shape() const { return shape_; }
    long size() const { return static_cast<long>(node_of_.size()); }

    long entry(const Node& node) const;
    const Node& node_of(long k) const;  // 1-based entry
    long comp_of(long k) const { return node_of(k).comp; }

    bool is_row_standard() const;
    bool is_standard() const;

    /// Shape of the subtableau containing 1..m (a multicomposition for row
    /// standard tableaux, a multipartition for standard ones).
    Multipartition restricted_shape(long m) const;

    Tableau conjugate() const;

    /// Relabel entries through w acting on the right: (t.w)(x) = w(t(x)).
    Tableau acted_by(const std::vector<long>& images) const;

    bool operator==(const Tableau&) const = default;

    std::string str() const;  // e.g. "([[1,2],[3]]|[[4]])"

private:
    Multipartition shape_;
    std::vector<std::vector<std::vector<long>>> rows_;
    std::vector<Node> node_of_;  // entry k at node_of_[k-1]
};

/// t^mu: 1..n along the rows, components in order.  Maximal in dominance.
Tableau initial_tableau(const Multipartition& mu);

/// t_mu: 1..n down the columns, components from last to first.  Minimal in
/// dominance; equals the conjugate of t^{mu'}.
Tableau final_tableau(const Multipartition& mu);

/// All standard mu-tableaux by last-letter recursion (the node of n runs over
/// removable nodes from bottom to top), so t^mu comes first and t_mu last.
std::vector<Tableau> enumerate_standard(const Multipartition& mu);

/// All row standard mu-tableaux, deterministic order.
std::vector<Tableau> enumerate_row_standard(const Multipartition& mu);

/// Dominance on same-size tableaux: Shape(s_m) dominates Shape(t_m) for all m.
bool tableau_dominates(const Tableau& s, const Tableau& t);

/// Strong dominance on pairs: componentwise tableau dominance.
bool strong_dominates(const Tableau& s, const Tableau& t,
                      const Tableau& u, const Tableau& v);

/// The pair order: Shape(s) strictly dominates Shape(u), or shapes are equal
/// and s dominates u and t dominates v.
bool pair_dominates(const Tableau& s, const Tableau& t,
                    const Tableau& u, const Tableau& v);

/// comp_s(k) <= comp_t(k) for all k.
bool comp_leq(const Tableau& s, const Tableau& t);

/// Residues read off along entries 1..n.
std::vector<long> residue_sequence(const Tableau& t, const QuiverParams& params);

/// Degree and codegree: telescoped sums of d_below / d_above along the growth
/// sequence of the tableau.
long degree(const Tableau& t, const QuiverParams& params);
long codegree(const Tableau& t, const QuiverParams& params);

/// Graded dimension of the cell module attached to mu: sum of q^{deg t} over
/// standard mu-tableaux.
LaurentPoly graded_dimension(const Multipartition& mu, const QuiverParams& params);

}  // namespace specht
