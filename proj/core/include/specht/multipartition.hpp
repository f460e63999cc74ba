#pragma once

#include <compare>
#include <string>
#include <vector>

#include "specht/quiver.hpp"

namespace specht {

/// A box of a diagram: row, column and component, all 1-based.
struct Node {
    long row = 0;
    long col = 0;
    long comp = 0;

    auto operator<=>(const Node&) const = default;

    /// "below" in the sense used for addable/removable node counts:
    /// later component, or same component and larger row.
    bool below(const Node& other) const {
        return comp > other.comp || (comp == other.comp && row > other.row);
    }
    bool above(const Node& other) const { return other.below(*this); }
};

/// An l-tuple of partitions (rows weakly decreasing).  Multicompositions --
/// arbitrary nonnegative rows -- are carried by the same type; operations
/// that require partition shape say so.
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<std::vector<long>> components);
    Multipartition(std::initializer_list<std::vector<long>> components)
        : Multipartition(std::vector<std::vector<long>>(components)) {}

    static Multipartition empty(long level);

    const std::vector<std::vector<long>>& components() const { return components_; }
    long level() const { return static_cast<long>(components_.size()); }
    long size() const;  // total number of boxes

    /// Row length, 0 when the row does not exist.
    long row_length(long comp, long row) const;
    long row_count(long comp) const;

    bool is_multipartition() const;  // every component weakly decreasing, parts > 0
    bool contains(const Node& node) const;

    std::vector<Node> diagram() const;  // row-reading order: comp, then row, then col

    /// Conjugate: reverse the components, transpose each.
    Multipartition conjugate() const;

    Multipartition with_node_added(const Node& node) const;
    Multipartition with_node_removed(const Node& node) const;

    /// Nodes that can be added/removed keeping a multipartition shape,
    /// listed top to bottom.
    std::vector<Node> addable_nodes() const;
    std::vector<Node> removable_nodes() const;
    std::vector<Node> addable_nodes(long residue, const QuiverParams& params) const;
    std::vector<Node> removable_nodes(long residue, const QuiverParams& params) const;

    /// d_A: #(addable i-nodes strictly below A) - #(removable i-nodes strictly
    /// below A), where i is the residue of A.  d^A counts strictly above.
    long d_below(const Node& node, const QuiverParams& params) const;
    long d_above(const Node& node, const QuiverParams& params) const;

    /// Residue content of the whole diagram.
    BlockLabel block(const QuiverParams& params) const;

    /// Prefix-sum vector (component by component, rows padded to `rows`),
    /// the quantity compared in the dominance order.
    std::vector<long> dominance_vector(long rows) const;

    bool operator==(const Multipartition&) const = default;

    std::string str() const;  // e.g. "((2,1),())"

private:
    std::vector<std::vector<long>> components_;
};

/// Dominance order on multicompositions of the same size and level.
/// Size or level mismatch is a contract violation.
bool dominates(const Multipartition& lam, const Multipartition& mu);

/// All multipartitions of n with `level` components, most dominant first
/// (descending lexicographic on prefix-sum vectors, a total refinement of
/// dominance).
std::vector<Multipartition> enumerate_multipartitions(long n, long level);
std::vector<Multipartition> enumerate_multipartitions(long n, const QuiverParams& params);

/// All partitions of n (level 1 helper).
std::vector<std::vector<long>> enumerate_partitions(long n);

}  // namespace specht
