#pragma once

#include <map>
#include <string>
#include <vector>

namespace specht {

/// Quantum characteristic, level and multicharge.
///
/// e = 0 means residues are plain integers (no reduction); otherwise residues
/// live in Z/eZ and are kept normalized to [0, e).
struct QuiverParams {
    long e = 0;                      // 0, or >= 2
    std::vector<long> charge;        // multicharge (kappa_1, ..., kappa_level)

    QuiverParams() = default;
    QuiverParams(long e_, std::vector<long> charge_);

    long level() const { return static_cast<long>(charge.size()); }

    /// Reduce an integer to its residue class (identity when e = 0).
    long normalize_residue(long i) const;

    /// Residue of the node in row r, column c of component l (all 1-based).
    long node_residue(long row, long col, long comp) const;

    /// True when kappa_l - kappa_{l+1} >= n for all adjacent pairs.  Only a
    /// meaningful constraint when e != 0; reported as metadata, not enforced.
    bool separated(long n) const;

    /// (Lambda, alpha_i) = #{ l : kappa_l = i in I }.
    long weight_multiplicity(long i) const;

    bool operator==(const QuiverParams&) const = default;
};

/// Residue content of a diagram: multiplicity of each residue class among the
/// nodes.  Identifies the block a multipartition belongs to.
struct BlockLabel {
    long e = 0;
    std::map<long, long> multiplicity;  // residue -> count, zero counts dropped

    long size() const;
    void add(long residue, long count = 1);

    bool operator==(const BlockLabel&) const = default;
    bool operator<(const BlockLabel& other) const {
        return multiplicity < other.multiplicity;
    }

    std::string str() const;
};

/// Cartan pairing (alpha_i, alpha_j) for the cyclic quiver with e vertices
/// (type A-infinity when e = 0).
long cartan_pairing(long e, long i, long j);

/// defect(beta) = (Lambda, beta) - (beta, beta)/2.  (beta, beta) is always
/// even; this is asserted.
long defect(const BlockLabel& beta, const QuiverParams& params);

}  // namespace specht
