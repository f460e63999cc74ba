#include "specht/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace specht {

Permutation::Permutation(long n) : images_(static_cast<std::size_t>(n)) {
    std::iota(images_.begin(), images_.end(), 1L);
}

Permutation::Permutation(std::vector<long> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (long v : images_) {
        if (v < 1 || v > static_cast<long>(images_.size()) || seen[v - 1]) {
            throw std::invalid_argument("images must be a bijection of 1..n");
        }
        seen[v - 1] = true;
    }
}

Permutation Permutation::transposition(long n, long i) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
    Permutation s(n);
    std::swap(s.images_[i - 1], s.images_[i]);
    return s;
}

Permutation Permutation::cycle(long n, long from, long to) {
    if (from < 1 || to > n || from > to) throw std::invalid_argument("bad cycle range");
    Permutation w(n);
    for (long k = from; k < to; ++k) w.images_[k - 1] = k + 1;
    w.images_[to - 1] = from;
    return w;
}

bool Permutation::is_identity() const {
    for (std::size_t k = 0; k < images_.size(); ++k) {
        if (images_[k] != static_cast<long>(k) + 1) return false;
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<long> inv(images_.size());
    for (std::size_t k = 0; k < images_.size(); ++k) {
        inv[images_[k] - 1] = static_cast<long>(k) + 1;
    }
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& u, const Permutation& v) {
    if (u.degree() != v.degree()) throw std::invalid_argument("degree mismatch");
    std::vector<long> out(u.images_.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = v.images_[u.images_[k] - 1];
    return Permutation(std::move(out));
}

long Permutation::length() const {
    long inv = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        for (std::size_t j = i + 1; j < images_.size(); ++j) {
            if (images_[i] > images_[j]) ++inv;
        }
    }
    return inv;
}

std::vector<long> Permutation::reduced_word() const {
    // Peel the minimal left descent each time; the first letters of reduced
    // words of w are exactly its left descents, so this is lexicographically
    // smallest.
    std::vector<long> word;
    std::vector<long> img = images_;
    long n = degree();
    while (true) {
        long i = 0;
        for (long k = 1; k < n; ++k) {
            if (img[k - 1] > img[k]) {
                i = k;
                break;
            }
        }
        if (i == 0) break;
        word.push_back(i);
        std::swap(img[i - 1], img[i]);
    }
    return word;
}

std::string Permutation::str() const {
    std::string out = "[";
    for (std::size_t k = 0; k < images_.size(); ++k) {
        if (k > 0) out += ",";
        out += std::to_string(images_[k]);
    }
    return out + "]";
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.degree() != w.degree()) throw std::invalid_argument("degree mismatch");
    if (u.is_identity()) return true;
    if (w.is_identity()) return false;
    long n = w.degree();
    long i = 0;
    for (long k = 1; k < n; ++k) {
        if (w(k) > w(k + 1)) {
            i = k;
            break;
        }
    }
    Permutation si = Permutation::transposition(n, i);
    Permutation sw = si * w;  // shorter than w
    Permutation su = si * u;
    if (su.length() < u.length()) return bruhat_leq(su, sw);
    return bruhat_leq(u, sw);
}

std::vector<Permutation> all_permutations(long n) {
    std::vector<long> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1L);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::vector<std::vector<long>> all_reduced_words(const Permutation& w) {
    if (w.is_identity()) return {{}};
    long n = w.degree();
    std::vector<std::vector<long>> out;
    for (long i = 1; i < n; ++i) {
        if (w(i) > w(i + 1)) {  // i is a left descent, so some reduced word starts with it
            Permutation rest = Permutation::transposition(n, i) * w;
            for (auto word : all_reduced_words(rest)) {
                word.insert(word.begin(), i);
                out.push_back(std::move(word));
            }
        }
    }
    return out;
}

Permutation tableau_permutation(const Tableau& t) {
    if (!t.is_row_standard()) throw std::invalid_argument("tableau must be row standard");
    Tableau tmu = initial_tableau(t.shape());
    std::vector<long> images(static_cast<std::size_t>(t.size()));
    for (const Node& node : t.shape().diagram()) {
        images[tmu.entry(node) - 1] = t.entry(node);
    }
    return Permutation(std::move(images));
}

StraighteningWitness straightening_witness(const Multipartition& mu, const Tableau& s,
                                           long a, long b) {
    if (!(a < b)) throw std::invalid_argument("need a < b");
    if (!s.is_standard()) throw std::invalid_argument("tableau must be standard");
    long n = s.size();
    Tableau tmu = initial_tableau(mu);
    const Node& na = tmu.node_of(a);
    const Node& nb = tmu.node_of(b);
    if (na.comp != nb.comp || na.row != nb.row) {
        throw std::invalid_argument("a and b must share a row of the initial tableau");
    }
    if (s.node_of(a).comp != s.node_of(b).comp || s.node_of(a).col != s.node_of(b).col) {
        throw std::invalid_argument("a and b must share a column of s");
    }

    // The node of a never moves: every step permutes values in (a, b] only.
    // Each step either returns a witness pair or applies one adjacent
    // transposition that swaps a weakly-higher value past a strictly-lower
    // one; the sum of the high-side values strictly grows, so the walk
    // terminates.  Standardness is preserved because the swapped values are
    // never in one row or one column, and every step appends an ascent of
    // d(current), which squeezes the length equality for the whole word.
    Permutation total(n);
    Tableau current = s;
    while (true) {
        Node pa = current.node_of(a);
        // Entries in [a, b] occupy one row of t^mu, so the entry directly
        // below a in its column also lies in that row; shrink b to it.
        b = current.entry({pa.row + 1, pa.col, pa.comp});
        if (b - a == 1) return {total, a};

        long l = pa.comp;
        long r = pa.row;
        auto up = [&](long x) {
            const Node& node = current.node_of(x);
            return node.comp < l || (node.comp == l && node.row <= r);
        };
        long c = 0;
        for (long x = b - 1; x > a; --x) {
            if (up(x)) {
                c = x;
                break;
            }
        }
        if (c == 0) {
            // Everything in (a, b] sits strictly below the row of a.  Rotate
            // b-1 up into the node of a: the word s_a s_{a+1} ... s_{b-2}
            // sends the value of each intermediate node one down and leaves
            // b-1 directly above b, in the column of a.
            Permutation w(n);
            for (long i = a; i <= b - 2; ++i) {
                w = w * Permutation::transposition(n, i);
            }
            current = current.acted_by(w.images());
            total = total * w;
            return {total, b - 1};
        }
        // c is the largest value of (a, b) on or above the row of a, so c+1
        // lies strictly below it.
        const Node& nc = current.node_of(c);
        const Node& nc1 = current.node_of(c + 1);
        if (nc.comp == nc1.comp && nc.col == nc1.col) return {total, c};
        Permutation w = Permutation::transposition(n, c);
        current = current.acted_by(w.images());
        total = total * w;
    }
}

}  // namespace specht
