#include "specht/quiver.hpp"

#include <cstdlib>
#include <stdexcept>

namespace specht {

QuiverParams::QuiverParams(long e_, std::vector<long> charge_)
    : e(e_), charge(std::move(charge_)) {
    if (e != 0 && e < 2) throw std::invalid_argument("quantum characteristic must be 0 or >= 2");
    if (charge.empty()) throw std::invalid_argument("multicharge must have level >= 1");
}

long QuiverParams::normalize_residue(long i) const {
    if (e == 0) return i;
    long r = i % e;
    return r < 0 ? r + e : r;
}

long QuiverParams::node_residue(long row, long col, long comp) const {
    if (comp < 1 || comp > level()) throw std::invalid_argument("component index out of range");
    return normalize_residue(col - row + charge[comp - 1]);
}

bool QuiverParams::separated(long n) const {
    if (e == 0) return true;
    for (std::size_t l = 0; l + 1 < charge.size(); ++l) {
        if (charge[l] - charge[l + 1] < n) return false;
    }
    return true;
}

long QuiverParams::weight_multiplicity(long i) const {
    long norm = normalize_residue(i);
    long count = 0;
    for (long k : charge) {
        if (normalize_residue(k) == norm) ++count;
    }
    return count;
}

long BlockLabel::size() const {
    long s = 0;
    for (const auto& [res, count] : multiplicity) s += count;
    return s;
}

void BlockLabel::add(long residue, long count) {
    long& slot = multiplicity[residue];
    slot += count;
    if (slot == 0) multiplicity.erase(residue);
}

std::string BlockLabel::str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [res, count] : multiplicity) {
        if (!first) out += ", ";
        out += std::to_string(res) + ":" + std::to_string(count);
        first = false;
    }
    return out + "}";
}

long cartan_pairing(long e, long i, long j) {
    if (e == 0) {
        if (i == j) return 2;
        return std::abs(i - j) == 1 ? -1 : 0;
    }
    auto norm = [e](long x) { long r = x % e; return r < 0 ? r + e : r; };
    long a = norm(i), b = norm(j);
    if (a == b) return 2;
    if (e == 2) return -2;  // the two vertices are joined by a double bond
    if (norm(a + 1) == b || norm(b + 1) == a) return -1;
    return 0;
}

long defect(const BlockLabel& beta, const QuiverParams& params) {
    long lambda_beta = 0;
    long beta_beta = 0;
    for (const auto& [i, mi] : beta.multiplicity) {
        lambda_beta += params.weight_multiplicity(i) * mi;
        for (const auto& [j, mj] : beta.multiplicity) {
            beta_beta += mi * mj * cartan_pairing(params.e, i, j);
        }
    }
    if (beta_beta % 2 != 0) throw std::logic_error("(beta, beta) must be even");
    return lambda_beta - beta_beta / 2;
}

}  // namespace specht
