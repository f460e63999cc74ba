#include "specht/multipartition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace specht {

Multipartition::Multipartition(std::vector<std::vector<long>> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("level must be >= 1");
    for (auto& comp : components_) {
        while (!comp.empty() && comp.back() == 0) comp.pop_back();
        for (long part : comp) {
            if (part < 0) throw std::invalid_argument("negative part");
        }
    }
}

Multipartition Multipartition::empty(long level) {
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    return Multipartition(std::vector<std::vector<long>>(level));
}

long Multipartition::size() const {
    long n = 0;
    for (const auto& comp : components_) n = std::accumulate(comp.begin(), comp.end(), n);
    return n;
}

long Multipartition::row_length(long comp, long row) const {
    const auto& c = components_[comp - 1];
    if (row < 1 || row > static_cast<long>(c.size())) return 0;
    return c[row - 1];
}

long Multipartition::row_count(long comp) const {
    return static_cast<long>(components_[comp - 1].size());
}

bool Multipartition::is_multipartition() const {
    for (const auto& comp : components_) {
        for (std::size_t r = 0; r < comp.size(); ++r) {
            if (comp[r] <= 0) return false;
            if (r > 0 && comp[r] > comp[r - 1]) return false;
        }
    }
    return true;
}

bool Multipartition::contains(const Node& node) const {
    if (node.comp < 1 || node.comp > level() || node.row < 1 || node.col < 1) return false;
    return node.col <= row_length(node.comp, node.row);
}

std::vector<Node> Multipartition::diagram() const {
    std::vector<Node> nodes;
    for (long l = 1; l <= level(); ++l) {
        for (long r = 1; r <= row_count(l); ++r) {
            for (long c = 1; c <= row_length(l, r); ++c) nodes.push_back({r, c, l});
        }
    }
    return nodes;
}

Multipartition Multipartition::conjugate() const {
    std::vector<std::vector<long>> out;
    out.reserve(components_.size());
    for (auto it = components_.rbegin(); it != components_.rend(); ++it) {
        const auto& comp = *it;
        std::vector<long> transposed;
        if (!comp.empty()) {
            transposed.resize(static_cast<std::size_t>(comp[0]), 0);
            for (long part : comp) {
                for (long c = 0; c < part; ++c) ++transposed[c];
            }
        }
        out.push_back(std::move(transposed));
    }
    return Multipartition(std::move(out));
}

Multipartition Multipartition::with_node_added(const Node& node) const {
    auto comps = components_;
    auto& comp = comps[node.comp - 1];
    if (node.row == static_cast<long>(comp.size()) + 1) {
        comp.push_back(1);
    } else if (node.row >= 1 && node.row <= static_cast<long>(comp.size())) {
        ++comp[node.row - 1];
    } else {
        throw std::invalid_argument("node not addable");
    }
    Multipartition out(std::move(comps));
    if (out.row_length(node.comp, node.row) != node.col || !out.is_multipartition()) {
        throw std::invalid_argument("node not addable");
    }
    return out;
}

Multipartition Multipartition::with_node_removed(const Node& node) const {
    if (row_length(node.comp, node.row) != node.col) {
        throw std::invalid_argument("node not removable");
    }
    auto comps = components_;
    --comps[node.comp - 1][node.row - 1];
    Multipartition out(std::move(comps));
    if (!out.is_multipartition()) throw std::invalid_argument("node not removable");
    return out;
}

std::vector<Node> Multipartition::addable_nodes() const {
    std::vector<Node> nodes;
    for (long l = 1; l <= level(); ++l) {
        long rows = row_count(l);
        for (long r = 1; r <= rows + 1; ++r) {
            long len = row_length(l, r);
            long above = (r == 1) ? -1 : row_length(l, r - 1);
            if (r == 1 || len < above) nodes.push_back({r, len + 1, l});
        }
    }
    return nodes;
}

std::vector<Node> Multipartition::removable_nodes() const {
    std::vector<Node> nodes;
    for (long l = 1; l <= level(); ++l) {
        long rows = row_count(l);
        for (long r = 1; r <= rows; ++r) {
            long len = row_length(l, r);
            if (len > 0 && len > row_length(l, r + 1)) nodes.push_back({r, len, l});
        }
    }
    return nodes;
}

std::vector<Node> Multipartition::addable_nodes(long residue, const QuiverParams& params) const {
    long i = params.normalize_residue(residue);
    std::vector<Node> out;
    for (const Node& node : addable_nodes()) {
        if (params.node_residue(node.row, node.col, node.comp) == i) out.push_back(node);
    }
    return out;
}

std::vector<Node> Multipartition::removable_nodes(long residue, const QuiverParams& params) const {
    long i = params.normalize_residue(residue);
    std::vector<Node> out;
    for (const Node& node : removable_nodes()) {
        if (params.node_residue(node.row, node.col, node.comp) == i) out.push_back(node);
    }
    return out;
}

long Multipartition::d_below(const Node& node, const QuiverParams& params) const {
    long i = params.node_residue(node.row, node.col, node.comp);
    long d = 0;
    for (const Node& a : addable_nodes(i, params)) {
        if (a.below(node)) ++d;
    }
    for (const Node& b : removable_nodes(i, params)) {
        if (b.below(node)) --d;
    }
    return d;
}

long Multipartition::d_above(const Node& node, const QuiverParams& params) const {
    long i = params.node_residue(node.row, node.col, node.comp);
    long d = 0;
    for (const Node& a : addable_nodes(i, params)) {
        if (a.above(node)) ++d;
    }
    for (const Node& b : removable_nodes(i, params)) {
        if (b.above(node)) --d;
    }
    return d;
}

BlockLabel Multipartition::block(const QuiverParams& params) const {
    BlockLabel beta;
    beta.e = params.e;
    for (const Node& node : diagram()) {
        beta.add(params.node_residue(node.row, node.col, node.comp));
    }
    return beta;
}

std::vector<long> Multipartition::dominance_vector(long rows) const {
    std::vector<long> out;
    out.reserve(static_cast<std::size_t>(level() * rows));
    long running = 0;
    for (long l = 1; l <= level(); ++l) {
        long partial = running;
        for (long r = 1; r <= rows; ++r) {
            partial += row_length(l, r);
            out.push_back(partial);
        }
        running = partial;
    }
    return out;
}

std::string Multipartition::str() const {
    std::string out = "(";
    for (long l = 1; l <= level(); ++l) {
        if (l > 1) out += ",";
        out += "(";
        for (long r = 1; r <= row_count(l); ++r) {
            if (r > 1) out += ",";
            out += std::to_string(row_length(l, r));
        }
        out += ")";
    }
    return out + ")";
}

bool dominates(const Multipartition& lam, const Multipartition& mu) {
    if (lam.level() != mu.level()) throw std::invalid_argument("level mismatch in dominance");
    if (lam.size() != mu.size()) throw std::invalid_argument("size mismatch in dominance");
    long rows = 0;
    for (long l = 1; l <= lam.level(); ++l) {
        rows = std::max({rows, lam.row_count(l), mu.row_count(l)});
    }
    std::vector<long> a = lam.dominance_vector(rows);
    std::vector<long> b = mu.dominance_vector(rows);
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] < b[k]) return false;
    }
    return true;
}

std::vector<std::vector<long>> enumerate_partitions(long n) {
    std::vector<std::vector<long>> out;
    std::vector<long> current;
    auto recurse = [&](auto&& self, long remaining, long max_part) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (long part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

std::vector<Multipartition> enumerate_multipartitions(long n, const QuiverParams& params) {
    return enumerate_multipartitions(n, params.level());
}

std::vector<Multipartition> enumerate_multipartitions(long n, long level) {
    if (n < 0 || level < 1) throw std::invalid_argument("bad arguments to enumerate_multipartitions");
    std::vector<Multipartition> out;
    std::vector<std::vector<long>> current(static_cast<std::size_t>(level));
    auto recurse = [&](auto&& self, long comp, long remaining) -> void {
        if (comp == level) {
            if (remaining == 0) out.push_back(Multipartition(current));
            return;
        }
        for (long k = (comp == level - 1) ? remaining : 0; k <= remaining; ++k) {
            for (const auto& part : enumerate_partitions(k)) {
                current[static_cast<std::size_t>(comp)] = part;
                self(self, comp + 1, remaining - k);
            }
        }
        current[static_cast<std::size_t>(comp)].clear();
    };
    recurse(recurse, 0, n);

    std::sort(out.begin(), out.end(), [n](const Multipartition& a, const Multipartition& b) {
        return a.dominance_vector(n) > b.dominance_vector(n);
    });
    return out;
}

}  // namespace specht
