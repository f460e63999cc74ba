#include "specht/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace specht {

LaurentPoly LaurentPoly::monomial(long exponent, long long coefficient) {
    LaurentPoly p;
    if (coefficient != 0) p.terms_.push_back({exponent, coefficient});
    return p;
}

long long LaurentPoly::coefficient(long exponent) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term& t, long e) { return t.first < e; });
    if (it != terms_.end() && it->first == exponent) return it->second;
    return 0;
}

long LaurentPoly::min_exponent() const {
    if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
    return terms_.front().first;
}

long LaurentPoly::max_exponent() const {
    if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
    return terms_.back().first;
}

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end());
    std::vector<Term> out;
    for (const Term& t : terms_) {
        if (!out.empty() && out.back().first == t.first) {
            out.back().second += t.second;
        } else {
            out.push_back(t);
        }
    }
    std::erase_if(out, [](const Term& t) { return t.second == 0; });
    terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    for (const Term& t : other.terms_) terms_.push_back({t.first, -t.second});
    normalize();
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.terms_.push_back({ea + eb, ca * cb});
        }
    }
    out.normalize();
    return out;
}

LaurentPoly LaurentPoly::shifted(long d) const {
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.push_back({t.first + d, t.second});
    return out;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        out.terms_.push_back({-it->first, it->second});
    }
    return out;
}

long long LaurentPoly::evaluate_at_one() const {
    long long s = 0;
    for (const Term& t : terms_) s += t.second;
    return s;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        long long c = t.second;
        if (!first) {
            out += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        std::string mono;
        if (t.first == 0) {
            mono = std::to_string(c);
        } else {
            if (c != 1 && c != -1) mono = std::to_string(c) + "*";
            else if (c == -1 && first) mono = "-";
            mono += "q";
            if (t.first != 1) mono += "^" + std::to_string(t.first);
        }
        out += mono;
        first = false;
    }
    return out;
}

}  // namespace specht
