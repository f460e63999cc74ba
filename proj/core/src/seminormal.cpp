#include "specht/seminormal.hpp"

#include <algorithm>

#include "specht/murphy.hpp"

namespace specht {

template <class F>
SeminormalContext<F>::SeminormalContext(const HeckeAlgebra<F>& algebra) : algebra_(&algebra) {
    long n = algebra.n();
    shapes_ = enumerate_multipartitions(n, algebra.level());
    std::vector<const Tableau*> all;
    for (const Multipartition& mu : shapes_) {
        tableaux_.push_back(enumerate_standard(mu));
    }
    std::vector<std::vector<F>> sequences;
    std::vector<const Tableau*> flat;
    for (const auto& group : tableaux_) {
        for (const Tableau& t : group) {
            std::vector<F> seq;
            for (long k = 1; k <= n; ++k) seq.push_back(algebra.content(t, k));
            sequences.push_back(std::move(seq));
            flat.push_back(&t);
        }
    }
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        for (std::size_t j = i + 1; j < sequences.size(); ++j) {
            if (sequences[i] == sequences[j]) {
                throw SemisimplicityError("content sequences collide for tableaux " +
                                          flat[i]->str() + " and " + flat[j]->str() +
                                          "; parameters are not semisimple");
            }
        }
    }
    position_contents_.assign(static_cast<std::size_t>(n), {});
    for (const auto& seq : sequences) {
        for (long k = 0; k < n; ++k) {
            auto& values = position_contents_[static_cast<std::size_t>(k)];
            if (std::find(values.begin(), values.end(), seq[static_cast<std::size_t>(k)]) ==
                values.end()) {
                values.push_back(seq[static_cast<std::size_t>(k)]);
            }
        }
    }
}

template <class F>
HeckeElement<F> SeminormalContext<F>::projector(const Tableau& t) const {
    const HeckeAlgebra<F>& alg = *algebra_;
    HeckeElement<F> out = alg.one();
    for (long k = 1; k <= alg.n(); ++k) {
        F target = alg.content(t, k);
        for (const F& c : position_contents_[static_cast<std::size_t>(k - 1)]) {
            if (c == target) continue;
            F denom = target - c;
            // (L_k - c) / (target - c)
            HeckeElement<F> next = alg.mul_L(out, k);
            next -= out.scaled(c);
            out = next.scaled(FieldOps<F>::inverse(denom));
        }
    }
    return out;
}

template <class F>
HeckeElement<F> SeminormalContext<F>::f_pair(const Tableau& s, const Tableau& t) const {
    HeckeElement<F> m = murphy_m_pair(*algebra_, s, t);
    return algebra_->mul(algebra_->mul(projector(s), m), projector(t));
}

template <class F>
HeckeElement<F> SeminormalContext<F>::g_pair(const Tableau& u, const Tableau& v) const {
    HeckeElement<F> n = murphy_n_pair(*algebra_, u, v);
    return algebra_->mul(algebra_->mul(projector(u.conjugate()), n), projector(v.conjugate()));
}

template <class F>
SeminormalModel<F>::SeminormalModel(const HeckeAlgebra<F>& algebra) : algebra_(&algebra) {
    long n = algebra.n();
    F xi = algebra.params().xi;
    F one = algebra.from_long(1);
    shapes_ = enumerate_multipartitions(n, algebra.level());
    for (const Multipartition& mu : shapes_) tableaux_.push_back(enumerate_standard(mu));

    // Reject non-semisimple parameters the same way the projectors do.
    SeminormalContext<F> context(algebra);

    for (std::size_t si = 0; si < shapes_.size(); ++si) {
        const std::vector<Tableau>& stds = tableaux_[si];
        std::size_t dim = stds.size();
        auto index_of = [&](const Tableau& t) -> std::size_t {
            for (std::size_t i = 0; i < dim; ++i) {
                if (stds[i] == t) return i;
            }
            throw std::logic_error("tableau not found in cell basis");
        };

        std::vector<ExactMatrix<F>> tmats;
        for (long r = 1; r < n; ++r) {
            ExactMatrix<F> m(dim, dim);
            for (std::size_t vi = 0; vi < dim; ++vi) {
                const Tableau& v = stds[vi];
                const Node& nr = v.node_of(r);
                const Node& nr1 = v.node_of(r + 1);
                if (nr.comp == nr1.comp && nr.row == nr1.row) {
                    m(vi, vi) = xi;
                    continue;
                }
                if (nr.comp == nr1.comp && nr.col == nr1.col) {
                    m(vi, vi) = F{} - one;
                    continue;
                }
                Tableau swapped = v.acted_by(Permutation::transposition(n, r).images());
                std::size_t ti = index_of(swapped);
                if (tableau_dominates(v, swapped)) {
                    // v plays the dominant member of the pair.
                    F cv = algebra.content(v, r);
                    F ct = algebra.content(v, r + 1);
                    m(vi, vi) = (xi - one) * ct * FieldOps<F>::inverse(ct - cv);
                    m(vi, ti) = one;
                } else {
                    F cv = algebra.content(v, r + 1);
                    F ct = algebra.content(v, r);
                    F diff = cv - ct;
                    m(vi, ti) = (xi * cv - ct) * (cv - xi * ct) *
                                FieldOps<F>::inverse(diff * diff);
                    m(vi, vi) = (xi - one) * cv * FieldOps<F>::inverse(diff);
                }
            }
            tmats.push_back(std::move(m));
        }
        t_matrices_.push_back(std::move(tmats));

        std::vector<ExactMatrix<F>> lmats;
        for (long k = 1; k <= n; ++k) {
            ExactMatrix<F> m(dim, dim);
            for (std::size_t vi = 0; vi < dim; ++vi) {
                m(vi, vi) = algebra.content(stds[vi], k);
            }
            lmats.push_back(std::move(m));
        }
        l_matrices_.push_back(std::move(lmats));
    }
}

template <class F>
long SeminormalModel<F>::multiplicity(std::size_t shape_idx) const {
    return static_cast<long>(tableaux_[shape_idx].size());
}

template <class F>
const ExactMatrix<F>& SeminormalModel<F>::t_matrix(std::size_t shape_idx, long r) const {
    return t_matrices_[shape_idx].at(static_cast<std::size_t>(r - 1));
}

template <class F>
const ExactMatrix<F>& SeminormalModel<F>::l_matrix(std::size_t shape_idx, long k) const {
    return l_matrices_[shape_idx].at(static_cast<std::size_t>(k - 1));
}

template <class F>
ExactMatrix<F> SeminormalModel<F>::word_matrix(std::size_t shape_idx,
                                               const std::vector<long>& word) const {
    F one = algebra_->from_long(1);
    ExactMatrix<F> out = ExactMatrix<F>::identity(tableaux_[shape_idx].size(), one);
    for (long r : word) out = out * t_matrix(shape_idx, r);
    return out;
}

template <class F>
F SeminormalModel<F>::trace_T(const Permutation& w) const {
    std::vector<long> word = w.reduced_word();
    F total = algebra_->from_long(0);
    for (std::size_t si = 0; si < shapes_.size(); ++si) {
        total += algebra_->from_long(multiplicity(si)) * word_matrix(si, word).trace();
    }
    return total;
}

template <class F>
F SeminormalModel<F>::trace_word(const NormalWord& word) const {
    std::vector<long> tword = word.w.reduced_word();
    F total = algebra_->from_long(0);
    for (std::size_t si = 0; si < shapes_.size(); ++si) {
        ExactMatrix<F> m =
            ExactMatrix<F>::identity(tableaux_[si].size(), algebra_->from_long(1));
        for (long k = 1; k <= algebra_->n(); ++k) {
            for (std::uint8_t a = 0; a < word.lpow[static_cast<std::size_t>(k - 1)]; ++a) {
                m = m * l_matrix(si, k);
            }
        }
        m = m * word_matrix(si, tword);
        total += algebra_->from_long(multiplicity(si)) * m.trace();
    }
    return total;
}

template <class F>
VerifyReport SeminormalModel<F>::check_relations() const {
    VerifyReport report;
    report.suite = "seminormal-model-relations";
    const HeckeAlgebra<F>& alg = *algebra_;
    long n = alg.n();
    F xi = alg.params().xi;
    F one = alg.from_long(1);
    F delta = alg.params().degenerate ? one : alg.from_long(0);

    for (std::size_t si = 0; si < shapes_.size(); ++si) {
        std::size_t dim = tableaux_[si].size();
        ExactMatrix<F> id = ExactMatrix<F>::identity(dim, one);
        std::string tag = "shape " + shapes_[si].str();

        auto expect_zero = [&](const ExactMatrix<F>& m, const std::string& name) {
            ++report.checked;
            if (!m.is_zero()) report.violation(tag + ": " + name);
        };

        auto scaled = [&](const ExactMatrix<F>& m, const F& c) {
            ExactMatrix<F> out = m;
            for (std::size_t i = 0; i < out.rows(); ++i) {
                for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) *= c;
            }
            return out;
        };

        for (long r = 1; r < n; ++r) {
            const ExactMatrix<F>& tr = t_matrix(si, r);
            expect_zero(tr * tr - scaled(tr, xi - one) - scaled(id, xi),
                        "quadratic relation fails at T_" + std::to_string(r));
        }
        for (long r = 1; r + 1 < n; ++r) {
            const ExactMatrix<F>& a = t_matrix(si, r);
            const ExactMatrix<F>& b = t_matrix(si, r + 1);
            expect_zero(a * b * a - b * a * b, "braid relation fails at " + std::to_string(r));
        }
        for (long r = 1; r < n; ++r) {
            for (long s = r + 2; s < n; ++s) {
                const ExactMatrix<F>& a = t_matrix(si, r);
                const ExactMatrix<F>& b = t_matrix(si, s);
                expect_zero(a * b - b * a, "distant T generators do not commute");
            }
        }
        for (long r = 1; r < n; ++r) {
            for (long t = 1; t <= n; ++t) {
                if (t == r || t == r + 1) continue;
                expect_zero(t_matrix(si, r) * l_matrix(si, t) -
                                l_matrix(si, t) * t_matrix(si, r),
                            "T_r and distant L do not commute");
            }
        }
        for (long r = 1; r < n; ++r) {
            // T_r L_r + delta = L_{r+1} (T_r - xi + 1)
            ExactMatrix<F> lhs = t_matrix(si, r) * l_matrix(si, r) + scaled(id, delta);
            ExactMatrix<F> rhs =
                l_matrix(si, r + 1) * (t_matrix(si, r) - scaled(id, xi - one));
            expect_zero(lhs - rhs, "skein relation fails at " + std::to_string(r));
        }
        if (n >= 1) {
            ExactMatrix<F> prod = id;
            for (const F& q : alg.params().charges) {
                prod = prod * (l_matrix(si, 1) - scaled(id, q));
            }
            expect_zero(prod, "defining polynomial of L_1 does not vanish");
        }
        for (long k = 1; k < n; ++k) {
            expect_zero(l_matrix(si, k) * l_matrix(si, k + 1) -
                            l_matrix(si, k + 1) * l_matrix(si, k),
                        "L generators do not commute");
        }
    }
    return report;
}

template class SeminormalContext<Rational>;
template class SeminormalModel<Rational>;

}  // namespace specht
