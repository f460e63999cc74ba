#include "specht/klr.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "specht/tableau.hpp"

namespace specht {

namespace {

using Poly = std::vector<Fp>;  // coefficients, constant term first

void strip(Poly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Fp(0, p));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    strip(out);
    return out;
}

/// f(x + c) by Horner from the top coefficient.
Poly poly_shift(const Poly& f, const Fp& c, long long p) {
    Poly out;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        // out = out * (x + c) + coefficient
        Poly next(out.size() + 1, Fp(0, p));
        for (std::size_t i = 0; i < out.size(); ++i) {
            next[i + 1] += out[i];
            next[i] += out[i] * c;
        }
        if (next.empty()) next.assign(1, Fp(0, p));
        next[0] += *it;
        strip(next);
        out = std::move(next);
    }
    return out;
}

/// Power series inverse of s modulo x^N; s must have nonzero constant term.
Poly series_inverse(const Poly& s, std::size_t N, long long p) {
    if (s.empty() || s[0].is_zero()) throw std::logic_error("series not invertible");
    Poly t(N, Fp(0, p));
    Fp inv0 = s[0].inverse();
    t[0] = inv0;
    for (std::size_t m = 1; m < N; ++m) {
        Fp acc(0, p);
        for (std::size_t i = 1; i <= m && i < s.size(); ++i) {
            acc += s[i] * t[m - i];
        }
        t[m] = (Fp(0, p) - acc) * inv0;
    }
    strip(t);
    return t;
}

/// The interpolation projector: congruent to 1 modulo (x - j)^N and to 0
/// modulo (x - j')^N for the other candidate eigenvalues j'.
Poly projection_poly(const std::vector<long>& candidates, long j, std::size_t N, long long p) {
    Poly full{Fp(1, p)};
    for (long other : candidates) {
        if (other == j) continue;
        Poly factor{Fp(-other, p), Fp(1, p)};
        for (std::size_t i = 0; i < N; ++i) full = poly_mul(full, factor, p);
    }
    Poly shifted = poly_shift(full, Fp(j, p), p);
    if (shifted.size() > N) shifted.resize(N);
    Poly inv = series_inverse(shifted, N, p);
    Poly q = poly_shift(inv, Fp(-j, p), p);
    return poly_mul(full, q, p);
}

HeckeElement<Fp> evaluate_at_L(const HeckeAlgebra<Fp>& algebra, const Poly& poly, long k) {
    HeckeElement<Fp> out;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        out = algebra.mul_L(out, k);
        out += algebra.scalar(*it);
    }
    return out;
}

}  // namespace

KlrGenerators::KlrGenerators(const HeckeAlgebra<Fp>& algebra) : algebra_(&algebra) {
    if (!algebra.params().degenerate) {
        throw std::invalid_argument("residue idempotents require the degenerate prime instance");
    }
    long n = algebra.n();
    long long p = algebra.params().xi.modulus();
    const QuiverParams& quiver = algebra.params().quiver;

    std::set<std::vector<long>> realized;
    std::vector<std::set<long>> position_values(static_cast<std::size_t>(n));
    for (const Multipartition& mu : enumerate_multipartitions(n, algebra.level())) {
        for (const Tableau& t : enumerate_standard(mu)) {
            std::vector<long> res = residue_sequence(t, quiver);
            for (long k = 0; k < n; ++k) {
                position_values[static_cast<std::size_t>(k)].insert(res[static_cast<std::size_t>(k)]);
            }
            realized.insert(std::move(res));
        }
    }
    realized_.assign(realized.begin(), realized.end());

    std::size_t N = static_cast<std::size_t>(algebra.dimension());
    std::vector<std::map<long, HeckeElement<Fp>>> projectors(static_cast<std::size_t>(n));
    for (long k = 1; k <= n; ++k) {
        std::vector<long> candidates(position_values[static_cast<std::size_t>(k - 1)].begin(),
                                     position_values[static_cast<std::size_t>(k - 1)].end());
        for (long j : candidates) {
            Poly poly = projection_poly(candidates, j, N, p);
            projectors[static_cast<std::size_t>(k - 1)].emplace(
                j, evaluate_at_L(algebra, poly, k));
        }
    }

    // Every sequence in I^n gets an entry; unrealized eigenvalues give zero.
    std::vector<long> seq(static_cast<std::size_t>(n), 0);
    while (true) {
        HeckeElement<Fp> e = algebra.one();
        for (long k = 1; k <= n && !e.is_zero(); ++k) {
            const auto& table = projectors[static_cast<std::size_t>(k - 1)];
            auto it = table.find(seq[static_cast<std::size_t>(k - 1)]);
            if (it == table.end()) {
                e = algebra.zero();
            } else {
                e = algebra.mul(e, it->second);
            }
        }
        idempotents_.emplace(seq, std::move(e));

        long k = n - 1;
        while (k >= 0) {
            if (seq[static_cast<std::size_t>(k)] + 1 < p) {
                ++seq[static_cast<std::size_t>(k)];
                break;
            }
            seq[static_cast<std::size_t>(k)] = 0;
            --k;
        }
        if (k < 0) break;
    }
}

const HeckeElement<Fp>& KlrGenerators::idempotent(const std::vector<long>& residues) const {
    auto it = idempotents_.find(residues);
    if (it == idempotents_.end()) throw std::invalid_argument("residue sequence out of range");
    return it->second;
}

HeckeElement<Fp> KlrGenerators::y(long r) const {
    const HeckeAlgebra<Fp>& alg = *algebra_;
    if (r < 1 || r > alg.n()) throw std::invalid_argument("y index out of range");
    HeckeElement<Fp> out;
    for (const auto& [seq, e] : idempotents_) {
        if (e.is_zero()) continue;
        out += alg.mul_L(e, r);
        out -= e.scaled(alg.from_long(seq[static_cast<std::size_t>(r - 1)]));
    }
    return out;
}

std::map<BlockLabel, HeckeElement<Fp>> KlrGenerators::block_idempotents() const {
    std::map<BlockLabel, HeckeElement<Fp>> out;
    for (const auto& [seq, e] : idempotents_) {
        BlockLabel beta;
        beta.e = algebra_->params().quiver.e;
        for (long i : seq) beta.add(i);
        out[beta] += e;
    }
    return out;
}

}  // namespace specht
