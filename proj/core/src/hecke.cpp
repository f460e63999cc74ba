#include "specht/hecke.hpp"

#include <algorithm>
#include <stdexcept>

namespace specht {

HeckeParams<Rational> make_semisimple_params(long n, long level, std::vector<long> kappa) {
    if (kappa.empty()) {
        for (long l = level - 1; l >= 0; --l) kappa.push_back(l * (n + 1));
    }
    if (static_cast<long>(kappa.size()) != level) {
        throw std::invalid_argument("multicharge length must equal level");
    }
    HeckeParams<Rational> params;
    params.n = n;
    params.xi = 2;
    params.degenerate = false;
    params.quiver = QuiverParams(0, kappa);
    for (long l = 0; l < level; ++l) {
        Rational q = 1;
        long e = kappa[static_cast<std::size_t>(l)];
        for (long i = 0; i < std::abs(e); ++i) q *= 2;
        if (e < 0) q = 1 / q;
        params.charges.push_back(q);
    }
    return params;
}

HeckeParams<Fp> make_degenerate_params(long n, long level, long long p, std::vector<long> kappa) {
    if (p < 2) throw std::invalid_argument("prime modulus must be >= 2");
    for (long long d = 2; d * d <= p; ++d) {
        if (p % d == 0) throw std::invalid_argument("modulus must be prime");
    }
    if (kappa.empty()) kappa.assign(static_cast<std::size_t>(level), 0);
    if (static_cast<long>(kappa.size()) != level) {
        throw std::invalid_argument("multicharge length must equal level");
    }
    HeckeParams<Fp> params;
    params.n = n;
    params.xi = Fp(1, p);
    params.degenerate = true;
    params.quiver = QuiverParams(static_cast<long>(p), kappa);
    for (long l = 0; l < level; ++l) {
        params.charges.push_back(Fp(kappa[static_cast<std::size_t>(l)], p));
    }
    return params;
}

template <class F>
void HeckeElement<F>::add(const NormalWord& word, const F& coefficient) {
    if (FieldOps<F>::is_zero(coefficient)) return;
    auto [it, inserted] = terms.try_emplace(word, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (FieldOps<F>::is_zero(it->second)) terms.erase(it);
    }
}

template <class F>
HeckeElement<F>& HeckeElement<F>::operator+=(const HeckeElement& other) {
    for (const auto& [word, c] : other.terms) add(word, c);
    return *this;
}

template <class F>
HeckeElement<F>& HeckeElement<F>::operator-=(const HeckeElement& other) {
    for (const auto& [word, c] : other.terms) add(word, F{} - c);
    return *this;
}

template <class F>
HeckeElement<F> HeckeElement<F>::scaled(const F& c) const {
    HeckeElement out;
    if (FieldOps<F>::is_zero(c)) return out;
    for (const auto& [word, coeff] : terms) {
        F prod = coeff * c;
        if (!FieldOps<F>::is_zero(prod)) out.terms.emplace(word, prod);
    }
    return out;
}

namespace {

bool right_ascent(const Permutation& w, long r) {
    // length(w * s_r) > length(w) iff r appears before r+1 in one-line form.
    for (long k = 1; k <= w.degree(); ++k) {
        if (w(k) == r) return true;
        if (w(k) == r + 1) return false;
    }
    throw std::logic_error("generator index out of range");
}

std::vector<long> widen(const std::vector<std::uint8_t>& a) {
    return std::vector<long>(a.begin(), a.end());
}

std::vector<std::uint8_t> narrow(const std::vector<long>& a) {
    std::vector<std::uint8_t> out(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) out[k] = static_cast<std::uint8_t>(a[k]);
    return out;
}

}  // namespace

template <class F>
HeckeAlgebra<F>::HeckeAlgebra(HeckeParams<F> params) : params_(std::move(params)) {
    if (params_.n < 0) throw std::invalid_argument("rank must be nonnegative");
    if (params_.charges.empty()) throw std::invalid_argument("level must be >= 1");
    if (FieldOps<F>::is_zero(params_.xi)) throw std::invalid_argument("xi must be invertible");
    if ((params_.xi == from_long(1)) != params_.degenerate) {
        throw std::invalid_argument("degenerate flag inconsistent with xi");
    }
    xi_inv_ = FieldOps<F>::inverse(params_.xi);
    delta_ = params_.degenerate ? from_long(1) : from_long(0);

    // Coefficients of prod_s (x - Q_s) = x^level + sum_{i<level} C_i x^i.
    std::vector<F> coeffs{from_long(1)};
    for (const F& q : params_.charges) {
        std::vector<F> next(coeffs.size() + 1, from_long(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= q * coeffs[i];
        }
        coeffs = std::move(next);
    }
    cyclotomic_.assign(coeffs.begin(), coeffs.end() - 1);

    build_lpow_reductions();
}

template <class F>
long long HeckeAlgebra<F>::dimension() const {
    long long d = 1;
    for (long k = 1; k <= params_.n; ++k) d *= level() * k;
    return d;
}

template <class F>
std::vector<NormalWord> HeckeAlgebra<F>::basis_words() const {
    std::vector<NormalWord> out;
    std::vector<Permutation> perms = all_permutations(params_.n);
    std::vector<std::uint8_t> lpow(static_cast<std::size_t>(params_.n), 0);
    while (true) {
        for (const Permutation& w : perms) out.push_back({lpow, w});
        long k = params_.n - 1;
        while (k >= 0) {
            if (lpow[static_cast<std::size_t>(k)] + 1 < level()) {
                ++lpow[static_cast<std::size_t>(k)];
                break;
            }
            lpow[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

template <class F>
F HeckeAlgebra<F>::from_long(long long k) const {
    return FieldOps<F>::from_long(k, params_.xi);
}

template <class F>
F HeckeAlgebra<F>::power_of_xi(long e) const {
    F out = from_long(1);
    const F& base = e >= 0 ? params_.xi : xi_inv_;
    for (long i = 0; i < std::abs(e); ++i) out *= base;
    return out;
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::one() const {
    Element out;
    out.add({std::vector<std::uint8_t>(static_cast<std::size_t>(params_.n), 0),
             Permutation(params_.n)},
            from_long(1));
    return out;
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::scalar(const F& c) const {
    return one().scaled(c);
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::generator_T(long r) const {
    if (r < 1 || r >= params_.n) throw std::invalid_argument("T index out of range");
    Element out;
    out.add({std::vector<std::uint8_t>(static_cast<std::size_t>(params_.n), 0),
             Permutation::transposition(params_.n, r)},
            from_long(1));
    return out;
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::generator_L(long k) const {
    if (k < 1 || k > params_.n) throw std::invalid_argument("L index out of range");
    return mul_L(one(), k);
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::mul_T(const Element& e, long r) const {
    if (r < 1 || r >= params_.n) throw std::invalid_argument("T index out of range");
    Element out;
    F xm1 = params_.xi - from_long(1);
    for (const auto& [word, c] : e.terms) {
        Permutation ws = word.w * Permutation::transposition(params_.n, r);
        if (right_ascent(word.w, r)) {
            out.add({word.lpow, ws}, c);
        } else {
            out.add({word.lpow, word.w}, c * xm1);
            out.add({word.lpow, ws}, c * params_.xi);
        }
    }
    return out;
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::mul_Tinv(const Element& e, long r) const {
    // T_r^{-1} = xi^{-1} T_r - xi^{-1}(xi - 1).
    Element out = mul_T(e, r).scaled(xi_inv_);
    out -= e.scaled(xi_inv_ * (params_.xi - from_long(1)));
    return out;
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::mul_Tword(const Element& e, const std::vector<long>& word) const {
    Element out = e;
    for (long r : word) out = mul_T(out, r);
    return out;
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::push_L(const Permutation& w, long t) const {
    std::lock_guard<std::recursive_mutex> guard(memo_lock_);
    auto key = std::make_pair(w, t);
    auto found = push_memo_.find(key);
    if (found != push_memo_.end()) return found->second;

    Element out;
    if (w.is_identity()) {
        std::vector<std::uint8_t> lpow(static_cast<std::size_t>(params_.n), 0);
        lpow[static_cast<std::size_t>(t - 1)] = 1;
        out.add({lpow, w}, from_long(1));
    } else {
        std::vector<long> word = w.reduced_word();
        long r = word.back();
        Permutation prefix = w * Permutation::transposition(params_.n, r);
        F xm1 = params_.xi - from_long(1);
        std::vector<std::uint8_t> zero(static_cast<std::size_t>(params_.n), 0);
        if (t != r && t != r + 1) {
            out = mul_T(push_L(prefix, t), r);
        } else if (t == r) {
            // T_r L_r = L_{r+1} T_r - (xi-1) L_{r+1} - delta.
            Element up = push_L(prefix, r + 1);
            out = mul_T(up, r);
            out -= up.scaled(xm1);
            Element tail;
            tail.add({zero, prefix}, delta_);
            out -= tail;
        } else {
            // T_r L_{r+1} = L_r T_r + (xi-1) L_{r+1} + delta.
            out = mul_T(push_L(prefix, r), r);
            out += push_L(prefix, r + 1).scaled(xm1);
            Element tail;
            tail.add({zero, prefix}, delta_);
            out += tail;
        }
    }
    push_memo_.emplace(std::move(key), out);
    return out;
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::reduce_monomial(const std::vector<long>& exponents) const {
    bool normal = true;
    for (long a : exponents) {
        if (a >= level()) {
            normal = false;
            break;
        }
    }
    if (normal) {
        Element out;
        out.add({narrow(exponents), Permutation(params_.n)}, from_long(1));
        return out;
    }
    std::lock_guard<std::recursive_mutex> guard(memo_lock_);
    auto found = monomial_memo_.find(exponents);
    if (found != monomial_memo_.end()) return found->second;

    long j = 0;
    for (long k = params_.n; k >= 1; --k) {
        if (exponents[static_cast<std::size_t>(k - 1)] >= level()) {
            j = k;
            break;
        }
    }
    std::vector<long> rest = exponents;
    rest[static_cast<std::size_t>(j - 1)] -= level();

    Element out;
    const Element& reduction = lpow_reduction_.at(static_cast<std::size_t>(j - 1));
    for (const auto& [word, c] : reduction.terms) {
        std::vector<long> merged = rest;
        for (std::size_t k = 0; k < merged.size(); ++k) merged[k] += word.lpow[k];
        Element piece = mul_Tword(reduce_monomial(merged), word.w.reduced_word());
        out += piece.scaled(c);
    }
    monomial_memo_.emplace(exponents, out);
    return out;
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::mul_L(const Element& e, long k) const {
    if (k < 1 || k > params_.n) throw std::invalid_argument("L index out of range");
    Element out;
    for (const auto& [word, c] : e.terms) {
        Element pushed = push_L(word.w, k);
        for (const auto& [pword, c2] : pushed.terms) {
            std::vector<long> merged = widen(word.lpow);
            for (std::size_t i = 0; i < merged.size(); ++i) merged[i] += pword.lpow[i];
            bool normal = true;
            for (long a : merged) {
                if (a >= level()) {
                    normal = false;
                    break;
                }
            }
            F coeff = c * c2;
            if (normal) {
                out.add({narrow(merged), pword.w}, coeff);
            } else {
                Element reduced = mul_Tword(reduce_monomial(merged), pword.w.reduced_word());
                out += reduced.scaled(coeff);
            }
        }
    }
    return out;
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::left_mul_T(long r, const Element& e) const {
    if (r < 1 || r >= params_.n) throw std::invalid_argument("T index out of range");
    Element out;
    F xm1 = params_.xi - from_long(1);
    for (const auto& [word, c] : e.terms) {
        std::vector<long> rest = widen(word.lpow);
        long p = rest[static_cast<std::size_t>(r - 1)];
        long q = rest[static_cast<std::size_t>(r)];
        rest[static_cast<std::size_t>(r - 1)] = 0;
        rest[static_cast<std::size_t>(r)] = 0;
        std::vector<long> tword = word.w.reduced_word();

        // T_r L_r^p L_{r+1}^q = L_r^q L_{r+1}^p T_r
        //   + ((xi-1) L_{r+1} + delta) [ sum_{i+j=q-1} L_r^i L_{r+1}^{p+j}
        //                              - sum_{i+j=p-1} L_r^i L_{r+1}^{j+q} ].
        std::vector<long> lead = rest;
        lead[static_cast<std::size_t>(r - 1)] += q;
        lead[static_cast<std::size_t>(r)] += p;
        Element piece;
        piece.add({narrow(lead), Permutation(params_.n)}, from_long(1));
        piece = mul_Tword(mul_T(piece, r), tword);
        out += piece.scaled(c);

        auto bracket = [&](long i, long m, const F& coeff) {
            if (FieldOps<F>::is_zero(coeff)) return;
            std::vector<long> mono = rest;
            mono[static_cast<std::size_t>(r - 1)] += i;
            mono[static_cast<std::size_t>(r)] += m;
            Element term = mul_Tword(reduce_monomial(mono), tword);
            out += term.scaled(coeff);
        };
        for (long i = 0; i <= q - 1; ++i) {
            long jj = q - 1 - i;
            bracket(i, p + jj + 1, xm1 * c);
            bracket(i, p + jj, delta_ * c);
        }
        for (long i = 0; i <= p - 1; ++i) {
            long jj = p - 1 - i;
            bracket(i, jj + q + 1, (F{} - xm1) * c);
            bracket(i, jj + q, (F{} - delta_) * c);
        }
    }
    return out;
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::left_mul_Tword(const std::vector<long>& word,
                                                const Element& e) const {
    Element out = e;
    for (auto it = word.rbegin(); it != word.rend(); ++it) out = left_mul_T(*it, out);
    return out;
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::word_times_word(const NormalWord& u, const NormalWord& v) const {
    std::lock_guard<std::recursive_mutex> guard(memo_lock_);
    bool memoize = dimension() <= 128;
    if (memoize) {
        auto found = product_memo_.find({u, v});
        if (found != product_memo_.end()) return found->second;
    }
    Element out;
    out.add(u, from_long(1));
    for (long k = 1; k <= params_.n; ++k) {
        for (long c = 0; c < v.lpow[static_cast<std::size_t>(k - 1)]; ++c) {
            out = mul_L(out, k);
        }
    }
    out = mul_Tword(out, v.w.reduced_word());
    if (memoize) product_memo_.emplace(std::make_pair(u, v), out);
    return out;
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::mul(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [u, cu] : a.terms) {
        for (const auto& [v, cv] : b.terms) {
            out += word_times_word(u, v).scaled(cu * cv);
        }
    }
    return out;
}

template <class F>
HeckeElement<F> HeckeAlgebra<F>::star(const Element& e) const {
    Element out;
    for (const auto& [word, c] : e.terms) {
        Element mono;
        mono.add({word.lpow, Permutation(params_.n)}, c);
        out += left_mul_Tword(word.w.inverse().reduced_word(), mono);
    }
    return out;
}

template <class F>
F HeckeAlgebra<F>::content(const Node& node) const {
    if (params_.degenerate) {
        return from_long(node.col - node.row) + params_.charges[static_cast<std::size_t>(node.comp - 1)];
    }
    return power_of_xi(node.col - node.row) * params_.charges[static_cast<std::size_t>(node.comp - 1)];
}

template <class F>
F HeckeAlgebra<F>::content(const Tableau& t, long k) const {
    return content(t.node_of(k));
}

template <class F>
F HeckeAlgebra<F>::trace_regular(const Element& e) const {
    F total = from_long(0);
    for (const NormalWord& u : basis_words()) {
        for (const auto& [v, c] : e.terms) {
            Element prod = word_times_word(u, v);
            auto it = prod.terms.find(u);
            if (it != prod.terms.end()) total += c * it->second;
        }
    }
    return total;
}

template <class F>
std::string HeckeAlgebra<F>::element_str(const Element& e) const {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [word, c] : e.terms) {
        if (!out.empty()) out += " + ";
        out += "(" + scalar_str(c) + ")";
        for (long k = 1; k <= params_.n; ++k) {
            long a = word.lpow[static_cast<std::size_t>(k - 1)];
            if (a > 0) {
                out += "*L" + std::to_string(k);
                if (a > 1) out += "^" + std::to_string(a);
            }
        }
        if (!word.w.is_identity()) {
            out += "*T[";
            bool first = true;
            for (long r : word.w.reduced_word()) {
                if (!first) out += ".";
                out += std::to_string(r);
                first = false;
            }
            out += "]";
        }
    }
    return out;
}

template <class F>
void HeckeAlgebra<F>::build_lpow_reductions() {
    long n = params_.n;
    long l = level();
    F one_f = from_long(1);
    F xm1 = params_.xi - one_f;

    auto monomial = [&](std::vector<long> exps, const F& coeff) {
        Element out;
        out.add({narrow(exps), Permutation(n)}, coeff);
        return out;
    };

    lpow_reduction_.clear();
    if (n == 0) return;

    // L_1^level from the defining polynomial of L_1.
    Element phi1;
    for (long i = 0; i < l; ++i) {
        std::vector<long> exps(static_cast<std::size_t>(n), 0);
        exps[0] = i;
        phi1 += monomial(exps, F{} - cyclotomic_[static_cast<std::size_t>(i)]);
    }
    lpow_reduction_.push_back(phi1);

    for (long k = 2; k <= n; ++k) {
        long r = k - 1;
        // E = normal form of the defining polynomial evaluated at L_{k-1}
        // (zero for k-1 = 1, nonzero in general).
        Element e_prev = lpow_reduction_[static_cast<std::size_t>(k - 2)];
        for (long i = 0; i < l; ++i) {
            std::vector<long> exps(static_cast<std::size_t>(n), 0);
            exps[static_cast<std::size_t>(k - 2)] = i;
            e_prev += monomial(exps, cyclotomic_[static_cast<std::size_t>(i)]);
        }

        Element a_elem = left_mul_T(r, e_prev);
        Element b_elem = mul_T(a_elem, r).scaled(xi_inv_);
        b_elem -= a_elem.scaled(xi_inv_ * xm1);

        // G = ((xi-1) L_k + delta) * divided difference of the defining
        // polynomial at (L_{k-1}, L_k), minus its single non-normal term
        // (xi-1) L_k^level.
        Element g_elem;
        for (long m = 1; m <= l; ++m) {
            F cm = (m == l) ? one_f : cyclotomic_[static_cast<std::size_t>(m)];
            if (FieldOps<F>::is_zero(cm)) continue;
            for (long i = 0; i + 1 <= m; ++i) {
                long jj = m - 1 - i;
                std::vector<long> exps(static_cast<std::size_t>(n), 0);
                exps[static_cast<std::size_t>(k - 2)] = i;
                if (!(i == 0 && jj == l - 1)) {
                    exps[static_cast<std::size_t>(k - 1)] = jj + 1;
                    g_elem += monomial(exps, cm * xm1);
                }
                if (!FieldOps<F>::is_zero(delta_)) {
                    exps[static_cast<std::size_t>(k - 1)] = jj;
                    g_elem += monomial(exps, cm * delta_);
                }
            }
        }
        Element gt = mul_T(g_elem, r).scaled(xi_inv_);
        gt -= g_elem.scaled(xi_inv_ * xm1);

        Element w_elem = b_elem;
        w_elem += gt;
        for (long i = 0; i < l; ++i) {
            std::vector<long> exps(static_cast<std::size_t>(n), 0);
            exps[static_cast<std::size_t>(k - 1)] = i;
            w_elem += monomial(exps, F{} - cyclotomic_[static_cast<std::size_t>(i)]);
        }

        // The unknown u = L_k^level satisfies u (a I + b M) = W with
        // a = 1 + xi^{-1}(xi-1)^2, b = -xi^{-1}(xi-1) and M the right
        // multiplication by T_{k-1}.  M obeys the quadratic of T, which gives
        // (a I + b M)^{-1} = I + xi^{-1}(xi-1) M.
        Element phi = w_elem;
        phi += mul_T(w_elem, r).scaled(xi_inv_ * xm1);
        lpow_reduction_.push_back(phi);
    }
}

template struct HeckeElement<Rational>;
template struct HeckeElement<Fp>;
template class HeckeAlgebra<Rational>;
template class HeckeAlgebra<Fp>;

}  // namespace specht
