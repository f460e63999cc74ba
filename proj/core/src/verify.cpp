#include "specht/verify.hpp"

#include <algorithm>
#include <set>

#include "specht/murphy.hpp"

namespace specht {

namespace {

std::string pair_str(const PairBasis<Rational>& basis, std::size_t p) {
    return "(" + basis.s_of(p).str() + "," + basis.t_of(p).str() + ")";
}

}  // namespace

VerifyReport verify_eigenrelation(const PairBasis<Rational>& basis) {
    VerifyReport report;
    report.suite = "eigenrelation";
    const HeckeAlgebra<Rational>& alg = basis.algebra();
    for (std::size_t p = 0; p < basis.size(); ++p) {
        const HeckeElement<Rational>& f = basis.f_element(p);
        for (long k = 1; k <= alg.n(); ++k) {
            HeckeElement<Rational> lhs = alg.mul_L(f, k);
            HeckeElement<Rational> rhs = f.scaled(alg.content(basis.t_of(p), k));
            ++report.checked;
            if (!(lhs == rhs)) {
                report.violation("f" + pair_str(basis, p) + " L_" + std::to_string(k) +
                                 " is not a content eigenvector");
            }
        }
    }
    return report;
}

VerifyReport verify_strong_dominance(const PairBasis<Rational>& basis) {
    VerifyReport report;
    report.suite = "strong";
    const Rational one = 1;
    for (std::size_t p = 0; p < basis.size(); ++p) {
        std::vector<Rational> fm = basis.to_m_coordinates(basis.f_element(p));
        std::vector<Rational> mf = basis.to_f_coordinates(basis.m_element(p));
        for (auto* coords : {&fm, &mf}) {
            ++report.checked;
            if ((*coords)[p] != one) {
                report.violation("transition diagonal not 1 at " + pair_str(basis, p));
            }
            for (std::size_t q = 0; q < basis.size(); ++q) {
                if (q == p || (*coords)[q] == 0) continue;
                ++report.checked;
                if (!basis.strictly_strong_dominates(q, p)) {
                    report.violation("transition entry outside the strong dominance cone: " +
                                     pair_str(basis, q) + " in expansion of " + pair_str(basis, p));
                }
            }
        }
    }
    return report;
}

VerifyReport verify_product_vanishing(const PairBasis<Rational>& basis) {
    VerifyReport report;
    report.suite = "tilting";
    const HeckeAlgebra<Rational>& alg = basis.algebra();
    for (std::size_t p = 0; p < basis.size(); ++p) {
        for (std::size_t q = 0; q < basis.size(); ++q) {
            HeckeElement<Rational> mn = alg.mul(basis.m_element(p), basis.n_element(q));
            ++report.checked;
            if (!mn.is_zero() &&
                !tableau_dominates(basis.s_of(q).conjugate(), basis.t_of(p))) {
                report.violation("m" + pair_str(basis, p) + " n" + pair_str(basis, q) +
                                 " nonzero without u' dominating t");
            }
            HeckeElement<Rational> nm = alg.mul(basis.n_element(q), basis.m_element(p));
            ++report.checked;
            if (!nm.is_zero() &&
                !tableau_dominates(basis.t_of(q).conjugate(), basis.s_of(p))) {
                report.violation("n" + pair_str(basis, q) + " m" + pair_str(basis, p) +
                                 " nonzero without v' dominating s");
            }
        }
    }
    return report;
}

VerifyReport verify_Lk_action(const PairBasis<Rational>& basis) {
    VerifyReport report;
    report.suite = "lk-action";
    const HeckeAlgebra<Rational>& alg = basis.algebra();
    for (std::size_t p = 0; p < basis.size(); ++p) {
        for (long k = 1; k <= alg.n(); ++k) {
            {
                std::vector<Rational> coords =
                    basis.to_m_coordinates(alg.mul_L(basis.m_element(p), k));
                ++report.checked;
                if (coords[p] != alg.content(basis.t_of(p), k)) {
                    report.violation("m" + pair_str(basis, p) + " L_" + std::to_string(k) +
                                     " leading coefficient is not the content");
                }
                for (std::size_t q = 0; q < basis.size(); ++q) {
                    if (q == p || coords[q] == 0) continue;
                    ++report.checked;
                    if (!basis.strictly_strong_dominates(q, p)) {
                        report.violation("m" + pair_str(basis, p) + " L_" + std::to_string(k) +
                                         " has support outside the strong cone at " +
                                         pair_str(basis, q));
                    }
                }
            }
            {
                std::vector<Rational> coords =
                    basis.to_n_coordinates(alg.mul_L(basis.n_element(p), k));
                ++report.checked;
                if (coords[p] != alg.content(basis.t_of(p).conjugate(), k)) {
                    report.violation("n" + pair_str(basis, p) + " L_" + std::to_string(k) +
                                     " leading coefficient is not the conjugate content");
                }
                for (std::size_t q = 0; q < basis.size(); ++q) {
                    if (q == p || coords[q] == 0) continue;
                    ++report.checked;
                    if (!basis.strictly_strong_dominates(q, p)) {
                        report.violation("n" + pair_str(basis, p) + " L_" + std::to_string(k) +
                                         " has support outside the strong cone at " +
                                         pair_str(basis, q));
                    }
                }
            }
        }
    }
    return report;
}

namespace {

/// Multicompositions of n with positive parts (at most n rows per component).
void multicompositions_into(long n, long level, std::vector<std::vector<long>>& current,
                            std::vector<Multipartition>& out) {
    if (static_cast<long>(current.size()) == level) {
        long total = 0;
        for (const auto& comp : current) {
            for (long part : comp) total += part;
        }
        if (total == n) out.push_back(Multipartition(current));
        return;
    }
    // All compositions (ordered positive parts) of every k <= remaining.
    long used = 0;
    for (const auto& comp : current) {
        for (long part : comp) used += part;
    }
    long remaining = n - used;
    std::vector<std::vector<long>> comps;
    std::vector<long> comp;
    auto gen = [&](auto&& self, long rest) -> void {
        comps.push_back(comp);
        for (long part = 1; part <= rest; ++part) {
            comp.push_back(part);
            self(self, rest - part);
            comp.pop_back();
        }
    };
    // Collect compositions of any size up to remaining; filter by total later.
    gen(gen, remaining);
    for (const auto& candidate : comps) {
        current.push_back(candidate);
        multicompositions_into(n, level, current, out);
        current.pop_back();
    }
}

std::vector<Multipartition> multicompositions(long n, long level) {
    std::vector<std::vector<long>> current;
    std::vector<Multipartition> out;
    multicompositions_into(n, level, current, out);
    return out;
}

bool same_column(const Tableau& t, long i, long j) {
    const Node& a = t.node_of(i);
    const Node& b = t.node_of(j);
    return a.comp == b.comp && a.col == b.col;
}

bool same_row(const Tableau& t, long i, long j) {
    const Node& a = t.node_of(i);
    const Node& b = t.node_of(j);
    return a.comp == b.comp && a.row == b.row;
}

}  // namespace

VerifyReport verify_mlambda_expansion(const PairBasis<Rational>& basis) {
    VerifyReport report;
    report.suite = "mlambda";
    const HeckeAlgebra<Rational>& alg = basis.algebra();
    long n = alg.n();
    if (n == 0) return report;

    long column_keyed_violations = 0;
    for (const Multipartition& lam : multicompositions(n, alg.level())) {
        HeckeElement<Rational> m = murphy_m(alg, lam);
        std::vector<Rational> coords = basis.to_f_coordinates(m);
        Tableau tlam = initial_tableau(lam);
        for (std::size_t q = 0; q < basis.size(); ++q) {
            if (coords[q] == 0) continue;
            const Tableau& u = basis.s_of(q);
            const Tableau& v = basis.t_of(q);
            ++report.checked;
            if (!comp_leq(u, tlam) || !comp_leq(v, tlam)) {
                report.violation("m_" + lam.str() + ": component bound fails at " +
                                 pair_str(basis, q));
            }
            for (long i = 1; i <= n; ++i) {
                for (long j = i + 1; j <= n; ++j) {
                    if (same_row(tlam, i, j)) {
                        ++report.checked;
                        if (same_column(u, i, j) || same_column(v, i, j)) {
                            report.violation("m_" + lam.str() + ": entries " + std::to_string(i) +
                                             "," + std::to_string(j) +
                                             " share a column at " + pair_str(basis, q));
                        }
                    }
                    if (same_column(tlam, i, j)) {
                        if (same_column(u, i, j) || same_column(v, i, j)) {
                            ++column_keyed_violations;
                        }
                    }
                }
            }
            if (lam.is_multipartition()) {
                ++report.checked;
                if (!strong_dominates(u, v, tlam, tlam)) {
                    report.violation("m_" + lam.str() +
                                     ": support outside the strong cone at " + pair_str(basis, q));
                }
            }
        }
    }
    report.note("column-keyed reading of the support condition: " +
                std::to_string(column_keyed_violations) + " would-be violations");
    return report;
}

ExactMatrix<Rational> cell_action_matrix(const PairBasis<Rational>& basis,
                                         const Multipartition& mu,
                                         const HeckeElement<Rational>& x) {
    const HeckeAlgebra<Rational>& alg = basis.algebra();
    std::size_t shape_idx = basis.shapes().size();
    for (std::size_t si = 0; si < basis.shapes().size(); ++si) {
        if (basis.shapes()[si] == mu) shape_idx = si;
    }
    if (shape_idx == basis.shapes().size()) throw std::invalid_argument("shape not found");
    const std::vector<Tableau>& stds = basis.standard_tableaux(shape_idx);
    Tableau tmu = initial_tableau(mu);

    ExactMatrix<Rational> out(stds.size(), stds.size());
    for (std::size_t ti = 0; ti < stds.size(); ++ti) {
        HeckeElement<Rational> row = alg.mul(murphy_m_pair(alg, tmu, stds[ti]), x);
        std::vector<Rational> coords = basis.to_m_coordinates(row);
        for (std::size_t q = 0; q < basis.size(); ++q) {
            if (coords[q] == 0) continue;
            const auto& pair = basis.pair(q);
            if (pair.shape == shape_idx && pair.s == 0) {
                out(ti, pair.t) = coords[q];
            }
            // Entries on more dominant shapes fall in the cell ideal.
        }
    }
    return out;
}

VerifyReport verify_cell_action(const PairBasis<Rational>& basis) {
    VerifyReport report;
    report.suite = "cell-action";
    const HeckeAlgebra<Rational>& alg = basis.algebra();
    long n = alg.n();

    for (std::size_t si = 0; si < basis.shapes().size(); ++si) {
        const Multipartition& mu = basis.shapes()[si];
        const std::vector<Tableau>& stds = basis.standard_tableaux(si);
        for (long k = 1; k <= n; ++k) {
            ExactMatrix<Rational> mat =
                cell_action_matrix(basis, mu, alg.generator_L(k));
            ++report.checked;
            // Upper triangular in the enumeration order (a dominance-
            // compatible order) with contents on the diagonal.
            for (std::size_t i = 0; i < mat.rows(); ++i) {
                if (mat(i, i) != alg.content(stds[i], k)) {
                    report.violation("cell L diagonal wrong at " + mu.str());
                }
                for (std::size_t j = 0; j < i; ++j) {
                    if (mat(i, j) != 0 && !tableau_dominates(stds[j], stds[i])) {
                        report.violation("cell L action not dominance triangular at " + mu.str());
                    }
                }
            }
        }
    }

    // One-row shape: every T_i acts by xi.
    if (n >= 2) {
        std::vector<std::vector<long>> comps(static_cast<std::size_t>(alg.level()));
        comps[0] = {n};
        Multipartition row_shape(comps);
        for (long r = 1; r < n; ++r) {
            ExactMatrix<Rational> mat = cell_action_matrix(basis, row_shape, alg.generator_T(r));
            ++report.checked;
            if (!(mat.rows() == 1 && mat(0, 0) == alg.params().xi)) {
                report.violation("one-row cell module does not act by xi");
            }
        }
    }
    return report;
}

VerifyReport verify_klr(const HeckeAlgebra<Fp>& algebra) {
    VerifyReport report;
    report.suite = "klr";
    long long p = algebra.params().xi.modulus();
    report.param("p", std::to_string(p));
    report.param("n", std::to_string(algebra.n()));
    report.param("level", std::to_string(algebra.level()));

    KlrGenerators klr(algebra);
    const auto& idems = klr.idempotents();

    HeckeElement<Fp> sum;
    for (const auto& [seq, e] : idems) sum += e;
    ++report.checked;
    if (!(sum == algebra.one())) report.violation("idempotents do not sum to 1");

    for (const auto& [si, ei] : idems) {
        for (const auto& [sj, ej] : idems) {
            HeckeElement<Fp> prod = algebra.mul(ei, ej);
            ++report.checked;
            if (si == sj) {
                if (!(prod == ei)) report.violation("e(i)^2 != e(i)");
            } else if (!prod.is_zero()) {
                report.violation("e(i) e(j) != 0 for distinct sequences");
            }
        }
    }

    const auto& realized = klr.realized_sequences();
    for (const auto& [seq, e] : idems) {
        bool is_realized =
            std::find(realized.begin(), realized.end(), seq) != realized.end();
        ++report.checked;
        if (is_realized == e.is_zero()) {
            report.violation("e(i) zero/nonzero pattern disagrees with standard tableaux");
        }
    }

    long long dim = algebra.dimension();
    for (long r = 1; r <= algebra.n(); ++r) {
        HeckeElement<Fp> y = klr.y(r);
        HeckeElement<Fp> pow = algebra.one();
        for (long long i = 0; i < dim && !pow.is_zero(); ++i) pow = algebra.mul(pow, y);
        ++report.checked;
        if (!pow.is_zero()) report.violation("y_" + std::to_string(r) + " is not nilpotent");

        for (const auto& [seq, e] : idems) {
            ++report.checked;
            if (!(algebra.mul(y, e) == algebra.mul(e, y))) {
                report.violation("y_r does not commute with e(i)");
            }
        }
    }

    // y_1^{(Lambda, alpha_{i_1})} e(i) = 0.
    {
        HeckeElement<Fp> y1 = klr.y(1);
        for (const auto& [seq, e] : idems) {
            if (e.is_zero() || seq.empty()) continue;
            long mult = algebra.params().quiver.weight_multiplicity(seq[0]);
            HeckeElement<Fp> pow = e;
            for (long i = 0; i < mult; ++i) pow = algebra.mul(y1, pow);
            ++report.checked;
            if (!pow.is_zero()) report.violation("weight relation fails on y_1");
        }
    }

    // Block idempotents: sum to one, central, and match the residue-content
    // classification of multipartitions.
    auto blocks = klr.block_idempotents();
    HeckeElement<Fp> total;
    for (const auto& [beta, e] : blocks) total += e;
    ++report.checked;
    if (!(total == algebra.one())) report.violation("block idempotents do not sum to 1");

    std::vector<HeckeElement<Fp>> generators;
    for (long r = 1; r < algebra.n(); ++r) generators.push_back(algebra.generator_T(r));
    for (long k = 1; k <= algebra.n(); ++k) generators.push_back(algebra.generator_L(k));
    for (const auto& [beta, e] : blocks) {
        for (const auto& g : generators) {
            ++report.checked;
            if (!(algebra.mul(e, g) == algebra.mul(g, e))) {
                report.violation("block idempotent not central for " + beta.str());
            }
        }
    }

    std::set<BlockLabel> realized_blocks;
    for (const Multipartition& mu : enumerate_multipartitions(algebra.n(), algebra.level())) {
        realized_blocks.insert(mu.block(algebra.params().quiver));
    }
    for (const auto& [beta, e] : blocks) {
        ++report.checked;
        if (e.is_zero() == (realized_blocks.count(beta) > 0)) {
            report.violation("block " + beta.str() +
                             " zero/nonzero pattern disagrees with multipartition contents");
        }
    }
    return report;
}

VerifyReport verify_cross_model(const HeckeAlgebra<Rational>& algebra) {
    VerifyReport report;
    report.suite = "cross-model";
    report.param("n", std::to_string(algebra.n()));
    report.param("level", std::to_string(algebra.level()));

    SeminormalModel<Rational> model(algebra);
    report.merge(model.check_relations());

    std::vector<std::uint8_t> zero(static_cast<std::size_t>(algebra.n()), 0);
    for (const Permutation& w : all_permutations(algebra.n())) {
        HeckeElement<Rational> tw;
        tw.add({zero, w}, 1);
        ++report.checked;
        if (!(model.trace_T(w) == algebra.trace_regular(tw))) {
            report.violation("trace mismatch at w = " + w.str());
        }
    }

    // The same comparison over every basis word, exercising the L part.
    for (const NormalWord& word : algebra.basis_words()) {
        HeckeElement<Rational> element;
        element.add(word, 1);
        ++report.checked;
        if (!(model.trace_word(word) == algebra.trace_regular(element))) {
            report.violation("trace mismatch at basis word " + algebra.element_str(element));
        }
    }
    return report;
}

}  // namespace specht
