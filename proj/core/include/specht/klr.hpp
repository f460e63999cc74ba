#pragma once

#include <map>
#include <vector>

#include "specht/hecke.hpp"
#include "specht/quiver.hpp"

namespace specht {

/// The graded-generator images over a degenerate prime-field instance
/// (xi = 1 over F_p, quantum characteristic p): the residue idempotents e(i),
/// the nilpotent elements y_r, and the central block idempotents e_beta.
class KlrGenerators {
public:
    /// Computes e(i) for every i in I^n as simultaneous generalized
    /// eigenspace projections of L_1..L_n, via interpolation polynomials with
    /// exponent equal to the algebra dimension.  Sequences with empty
    /// eigenspace get the zero element.
    explicit KlrGenerators(const HeckeAlgebra<Fp>& algebra);

    const HeckeAlgebra<Fp>& algebra() const { return *algebra_; }

    const std::map<std::vector<long>, HeckeElement<Fp>>& idempotents() const {
        return idempotents_;
    }
    const HeckeElement<Fp>& idempotent(const std::vector<long>& residues) const;

    /// y_r = sum_i (L_r - i_r) e(i).
    HeckeElement<Fp> y(long r) const;

    /// e_beta = sum of e(i) over sequences with residue content beta; the map
    /// runs over the block labels of the realized sequences.
    std::map<BlockLabel, HeckeElement<Fp>> block_idempotents() const;

    /// Residue sequences realized by standard tableaux at these parameters.
    const std::vector<std::vector<long>>& realized_sequences() const { return realized_; }

private:
    const HeckeAlgebra<Fp>* algebra_;
    std::map<std::vector<long>, HeckeElement<Fp>> idempotents_;
    std::vector<std::vector<long>> realized_;
};

}  // namespace specht
