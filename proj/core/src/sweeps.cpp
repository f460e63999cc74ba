#include "specht/sweeps.hpp"

#include <set>

#include "specht/branching.hpp"
#include "specht/multipartition.hpp"
#include "specht/permutation.hpp"
#include "specht/tableau.hpp"

namespace specht {

void VerifyReport::merge(const VerifyReport& other) {
    checked += other.checked;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::vector<QuiverParams> sweep_quiver_grid(long level_max) {
    std::vector<std::vector<long>> charges = {{0}, {0, 0}, {3, 0}, {7, 3, 0}};
    std::vector<QuiverParams> out;
    for (long e : {0L, 2L, 3L, 4L}) {
        for (const auto& kappa : charges) {
            if (static_cast<long>(kappa.size()) <= level_max) {
                out.push_back(QuiverParams(e, kappa));
            }
        }
    }
    return out;
}

namespace {

std::string config_str(const QuiverParams& params) {
    std::string out = "e=" + std::to_string(params.e) + " kappa=(";
    for (std::size_t l = 0; l < params.charge.size(); ++l) {
        if (l > 0) out += ",";
        out += std::to_string(params.charge[l]);
    }
    return out + ")";
}

/// Residues that can label an addable node of mu.
std::set<long> addable_residues(const Multipartition& mu, const QuiverParams& params) {
    std::set<long> out;
    for (const Node& node : mu.addable_nodes()) {
        out.insert(params.node_residue(node.row, node.col, node.comp));
    }
    return out;
}

}  // namespace

VerifyReport sweep_combinatorics(long n_max, const std::vector<QuiverParams>& configs) {
    VerifyReport report;
    report.suite = "combinatorics";
    report.param("n_max", std::to_string(n_max));

    for (const QuiverParams& params : configs) {
        for (long n = 0; n <= n_max; ++n) {
            for (const Multipartition& mu : enumerate_multipartitions(n, params.level())) {
                std::string tag = config_str(params) + " mu=" + mu.str();

                BlockLabel beta = mu.block(params);
                long def = defect(beta, params);
                if (def < 0) {
                    report.violation(tag + ": negative defect " + std::to_string(def));
                }
                Tableau tmu = final_tableau(mu);
                ++report.checked;
                if (codegree(tmu, params) + degree(tmu, params) != def) {
                    report.violation(tag + ": codeg+deg != defect");
                }

                // Restriction partition of the graded dimension over the node
                // of the largest entry.
                if (n > 0) {
                    LaurentPoly total;
                    for (const Node& node : mu.removable_nodes()) {
                        Multipartition smaller = mu.with_node_removed(node);
                        total += graded_dimension(smaller, params)
                                     .shifted(smaller.d_below(node, params));
                    }
                    ++report.checked;
                    if (total != graded_dimension(mu, params)) {
                        report.violation(tag + ": restriction degree partition fails");
                    }
                }

                for (long i : addable_residues(mu, params)) {
                    std::string itag = tag + " i=" + std::to_string(i);
                    ++report.checked;
                    if (!check_degree_identity(mu, i, params)) {
                        report.violation(itag + ": degree identity fails");
                    }
                    ++report.checked;
                    if (!check_defect_shift_identity(mu, i, params)) {
                        report.violation(itag + ": defect shift identity fails");
                    }

                    Filtration ind = induction_filtration(mu, i, params);
                    Filtration dual = dual_induction_filtration(mu, i, params);
                    ++report.checked;
                    for (std::size_t j = 1; j < ind.layers.size(); ++j) {
                        const Multipartition& hi = ind.layers[j - 1].shape;
                        const Multipartition& lo = ind.layers[j].shape;
                        if (!(dominates(hi, lo) && !(hi == lo))) {
                            report.violation(itag + ": layers not strictly decreasing");
                        }
                    }
                    if (ind.layers.size() != dual.layers.size()) {
                        report.violation(itag + ": layer count mismatch");
                    } else {
                        for (std::size_t j = 0; j < ind.layers.size(); ++j) {
                            if (!(ind.layers[j].shape ==
                                  dual.layers[dual.layers.size() - 1 - j].shape)) {
                                report.violation(itag + ": dual layer shapes mismatch");
                            }
                        }
                    }
                }
            }
        }
    }
    return report;
}

VerifyReport sweep_counting(long n_max, long level_max) {
    VerifyReport report;
    report.suite = "counting";
    report.param("n_max", std::to_string(n_max));
    report.param("level_max", std::to_string(level_max));
    for (long level = 1; level <= level_max; ++level) {
        for (long n = 0; n <= n_max; ++n) {
            long long expected = 1;
            for (long k = 1; k <= n; ++k) expected *= level * k;  // level^n * n!
            long long total = 0;
            for (const Multipartition& mu : enumerate_multipartitions(n, level)) {
                long long count = static_cast<long long>(enumerate_standard(mu).size());
                total += count * count;
            }
            ++report.checked;
            if (total != expected) {
                report.violation("level=" + std::to_string(level) + " n=" + std::to_string(n) +
                                 ": sum |Std|^2 = " + std::to_string(total) + " != " +
                                 std::to_string(expected));
            }
        }
    }
    return report;
}

VerifyReport sweep_dominance(long n_max, long level_max) {
    VerifyReport report;
    report.suite = "dominance";
    report.param("n_max", std::to_string(n_max));
    report.param("level_max", std::to_string(level_max));

    bool converse_failure = false;
    std::string converse_witness;
    for (long level = 1; level <= level_max; ++level) {
        for (long n = 0; n <= n_max; ++n) {
            std::vector<Multipartition> shapes = enumerate_multipartitions(n, level);
            std::vector<Tableau> tableaux;
            for (const Multipartition& mu : shapes) {
                for (const Tableau& t : enumerate_standard(mu)) tableaux.push_back(t);
            }

            // lam dominates mu iff t^lam dominates t^mu.
            for (const Multipartition& lam : shapes) {
                for (const Multipartition& mu : shapes) {
                    ++report.checked;
                    if (dominates(lam, mu) !=
                        tableau_dominates(initial_tableau(lam), initial_tableau(mu))) {
                        report.violation("initial tableau dominance mismatch " + lam.str() +
                                         " vs " + mu.str());
                    }
                }
            }

            // Conjugation duality of tableau dominance.
            for (const Tableau& s : tableaux) {
                for (const Tableau& t : tableaux) {
                    ++report.checked;
                    if (tableau_dominates(s, t) !=
                        tableau_dominates(t.conjugate(), s.conjugate())) {
                        report.violation("conjugation duality fails " + s.str() + " vs " + t.str());
                    }
                }
            }

            // Strong dominance implies the pair order; look for a converse
            // failure witness.
            for (const Multipartition& lam : shapes) {
                std::vector<Tableau> std_lam = enumerate_standard(lam);
                for (const Multipartition& mu : shapes) {
                    std::vector<Tableau> std_mu = enumerate_standard(mu);
                    for (const Tableau& s : std_lam) {
                        for (const Tableau& t : std_lam) {
                            for (const Tableau& u : std_mu) {
                                for (const Tableau& v : std_mu) {
                                    bool strong = strong_dominates(s, t, u, v);
                                    bool pair = pair_dominates(s, t, u, v);
                                    ++report.checked;
                                    if (strong && !pair) {
                                        report.violation("strong dominance does not imply pair order at (" +
                                                         s.str() + "," + t.str() + ") vs (" + u.str() +
                                                         "," + v.str() + ")");
                                    }
                                    if (pair && !strong && !converse_failure) {
                                        converse_failure = true;
                                        converse_witness = "n=" + std::to_string(n) + " level=" +
                                                           std::to_string(level) + ": (" + s.str() +
                                                           "," + t.str() + ") vs (" + u.str() + "," +
                                                           v.str() + ")";
                                    }
                                }
                            }
                        }
                    }
                }
            }

            // Dominance-comparable tableaux exist whose component vectors are
            // incomparable (the component statistic does not refine
            // dominance); pin one witness at level 2.
            if (n == 2 && level == 2) {
                bool found = false;
                for (const Tableau& s : tableaux) {
                    for (const Tableau& t : tableaux) {
                        if (tableau_dominates(s, t) && !comp_leq(s, t) && !comp_leq(t, s)) {
                            found = true;
                        }
                    }
                }
                ++report.checked;
                if (!found) {
                    report.violation("expected dominance-comparable tableaux with incomparable "
                                     "component vectors at n=2, level=2");
                }
            }

            // Dominance matches Bruhat order on the permutations d(.) for row
            // standard tableaux of a common shape.
            for (const Multipartition& mu : shapes) {
                std::vector<Tableau> rstd = enumerate_row_standard(mu);
                for (const Tableau& v : rstd) {
                    Permutation dv = tableau_permutation(v);
                    for (const Tableau& w : rstd) {
                        ++report.checked;
                        if (tableau_dominates(v, w) != bruhat_leq(dv, tableau_permutation(w))) {
                            report.violation("Bruhat/dominance mismatch at " + v.str() + " vs " +
                                             w.str());
                        }
                    }
                }
            }

            // Straightening witness postconditions over all valid inputs.
            for (const Multipartition& mu : shapes) {
                Tableau tmu = initial_tableau(mu);
                for (const Multipartition& lam : shapes) {
                    for (const Tableau& s : enumerate_standard(lam)) {
                        for (long a = 1; a <= n; ++a) {
                            for (long b = a + 1; b <= n; ++b) {
                                const Node& na = tmu.node_of(a);
                                const Node& nb = tmu.node_of(b);
                                if (na.comp != nb.comp || na.row != nb.row) continue;
                                const Node& sa = s.node_of(a);
                                const Node& sb = s.node_of(b);
                                if (sa.comp != sb.comp || sa.col != sb.col) continue;
                                ++report.checked;
                                StraighteningWitness wit = straightening_witness(mu, s, a, b);
                                std::string tag = "witness mu=" + mu.str() + " s=" + s.str() +
                                                  " a=" + std::to_string(a) + " b=" + std::to_string(b);
                                Tableau moved = s.acted_by(wit.w.images());
                                if (!moved.is_standard()) {
                                    report.violation(tag + ": result not standard");
                                }
                                Permutation ds = tableau_permutation(s);
                                if ((ds * wit.w).length() != ds.length() + wit.w.length()) {
                                    report.violation(tag + ": lengths do not add");
                                }
                                if (!(wit.c >= a && wit.c < b)) {
                                    report.violation(tag + ": c out of range");
                                }
                                const Node& nc = tmu.node_of(wit.c);
                                const Node& nc1 = tmu.node_of(wit.c + 1);
                                if (nc.comp != nc1.comp || nc.row != nc1.row) {
                                    report.violation(tag + ": c, c+1 not in one row of t^mu");
                                }
                                const Node& mc = moved.node_of(wit.c);
                                const Node& mc1 = moved.node_of(wit.c + 1);
                                if (mc.comp != mc1.comp || mc.col != mc1.col) {
                                    report.violation(tag + ": c, c+1 not in one column of s.w");
                                }
                                for (long k = 1; k <= n; ++k) {
                                    if ((k < a || k > b) && wit.w(k) != k) {
                                        report.violation(tag + ": support escapes {a..b}");
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    if (n_max >= 3 && level_max >= 2) {
        ++report.checked;
        if (converse_failure) {
            report.note("pair order without strong dominance: " + converse_witness);
        } else {
            report.violation("expected a pair-order/strong-dominance separation by n=3, level=2");
        }
    }
    return report;
}

}  // namespace specht
