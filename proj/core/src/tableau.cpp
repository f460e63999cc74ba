#include "specht/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace specht {

Tableau::Tableau(Multipartition shape, std::vector<std::vector<std::vector<long>>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    long n = shape_.size();
    node_of_.assign(static_cast<std::size_t>(n), Node{});
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    if (static_cast<long>(rows_.size()) != shape_.level()) {
        throw std::invalid_argument("tableau component count mismatch");
    }
    for (long l = 1; l <= shape_.level(); ++l) {
        const auto& comp = rows_[l - 1];
        if (static_cast<long>(comp.size()) != shape_.row_count(l)) {
            throw std::invalid_argument("tableau row count mismatch");
        }
        for (long r = 1; r <= static_cast<long>(comp.size()); ++r) {
            const auto& row = comp[r - 1];
            if (static_cast<long>(row.size()) != shape_.row_length(l, r)) {
                throw std::invalid_argument("tableau row length mismatch");
            }
            for (long c = 1; c <= static_cast<long>(row.size()); ++c) {
                long k = row[c - 1];
                if (k < 1 || k > n || seen[k - 1]) {
                    throw std::invalid_argument("tableau entries must be a bijection onto 1..n");
                }
                seen[k - 1] = true;
                node_of_[k - 1] = Node{r, c, l};
            }
        }
    }
}

long Tableau::entry(const Node& node) const {
    if (!shape_.contains(node)) throw std::invalid_argument("node outside diagram");
    return rows_[node.comp - 1][node.row - 1][node.col - 1];
}

const Node& Tableau::node_of(long k) const {
    if (k < 1 || k > size()) throw std::invalid_argument("entry out of range");
    return node_of_[k - 1];
}

bool Tableau::is_row_standard() const {
    for (const auto& comp : rows_) {
        for (const auto& row : comp) {
            for (std::size_t c = 1; c < row.size(); ++c) {
                if (row[c - 1] >= row[c]) return false;
            }
        }
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!shape_.is_multipartition() || !is_row_standard()) return false;
    for (long l = 1; l <= shape_.level(); ++l) {
        for (long r = 2; r <= shape_.row_count(l); ++r) {
            for (long c = 1; c <= shape_.row_length(l, r); ++c) {
                if (entry({r - 1, c, l}) >= entry({r, c, l})) return false;
            }
        }
    }
    return true;
}

Multipartition Tableau::restricted_shape(long m) const {
    std::vector<std::vector<long>> comps(static_cast<std::size_t>(shape_.level()));
    for (long l = 1; l <= shape_.level(); ++l) {
        auto& out = comps[l - 1];
        for (const auto& row : rows_[l - 1]) {
            long len = 0;
            for (long k : row) {
                if (k <= m) ++len;
            }
            out.push_back(len);
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
    }
    return Multipartition(std::move(comps));
}

Tableau Tableau::conjugate() const {
    Multipartition cshape = shape_.conjugate();
    long level = shape_.level();
    std::vector<std::vector<std::vector<long>>> crows(static_cast<std::size_t>(level));
    for (long l = 1; l <= level; ++l) {
        long src = level + 1 - l;
        crows[l - 1].resize(static_cast<std::size_t>(cshape.row_count(l)));
        for (long r = 1; r <= cshape.row_count(l); ++r) {
            auto& row = crows[l - 1][r - 1];
            row.resize(static_cast<std::size_t>(cshape.row_length(l, r)));
            for (long c = 1; c <= static_cast<long>(row.size()); ++c) {
                row[c - 1] = entry({c, r, src});
            }
        }
    }
    return Tableau(std::move(cshape), std::move(crows));
}

Tableau Tableau::acted_by(const std::vector<long>& images) const {
    if (static_cast<long>(images.size()) != size()) {
        throw std::invalid_argument("permutation degree mismatch");
    }
    auto rows = rows_;
    for (auto& comp : rows) {
        for (auto& row : comp) {
            for (long& k : row) k = images[k - 1];
        }
    }
    return Tableau(shape_, std::move(rows));
}

std::string Tableau::str() const {
    std::string out = "(";
    for (long l = 1; l <= shape_.level(); ++l) {
        if (l > 1) out += "|";
        out += "[";
        for (long r = 1; r <= shape_.row_count(l); ++r) {
            if (r > 1) out += ",";
            out += "[";
            for (long c = 1; c <= shape_.row_length(l, r); ++c) {
                if (c > 1) out += ",";
                out += std::to_string(rows_[l - 1][r - 1][c - 1]);
            }
            out += "]";
        }
        out += "]";
    }
    return out + ")";
}

Tableau initial_tableau(const Multipartition& mu) {
    std::vector<std::vector<std::vector<long>>> rows(static_cast<std::size_t>(mu.level()));
    long next = 1;
    for (long l = 1; l <= mu.level(); ++l) {
        rows[l - 1].resize(static_cast<std::size_t>(mu.row_count(l)));
        for (long r = 1; r <= mu.row_count(l); ++r) {
            auto& row = rows[l - 1][r - 1];
            for (long c = 0; c < mu.row_length(l, r); ++c) row.push_back(next++);
        }
    }
    return Tableau(mu, std::move(rows));
}

Tableau final_tableau(const Multipartition& mu) {
    std::vector<std::vector<std::vector<long>>> rows(static_cast<std::size_t>(mu.level()));
    for (long l = 1; l <= mu.level(); ++l) {
        rows[l - 1].resize(static_cast<std::size_t>(mu.row_count(l)));
        for (long r = 1; r <= mu.row_count(l); ++r) {
            rows[l - 1][r - 1].resize(static_cast<std::size_t>(mu.row_length(l, r)));
        }
    }
    long next = 1;
    for (long l = mu.level(); l >= 1; --l) {
        long cols = mu.row_length(l, 1);
        for (long c = 1; c <= cols; ++c) {
            for (long r = 1; r <= mu.row_count(l); ++r) {
                if (mu.row_length(l, r) >= c) rows[l - 1][r - 1][c - 1] = next++;
            }
        }
    }
    return Tableau(mu, std::move(rows));
}

std::vector<Tableau> enumerate_standard(const Multipartition& mu) {
    if (!mu.is_multipartition()) throw std::invalid_argument("enumerate_standard needs a multipartition");
    long n = mu.size();
    std::vector<Tableau> out;

    // Recurse on the node of the largest entry.  Scanning the removable nodes
    // from bottom to top puts t^mu first and t_mu last.
    auto recurse = [&](auto&& self, const Multipartition& shape, long m,
                       std::vector<std::pair<Node, long>>& placed) -> void {
        if (m == 0) {
            std::vector<std::vector<std::vector<long>>> rows(static_cast<std::size_t>(mu.level()));
            for (long l = 1; l <= mu.level(); ++l) {
                rows[l - 1].resize(static_cast<std::size_t>(mu.row_count(l)));
                for (long r = 1; r <= mu.row_count(l); ++r) {
                    rows[l - 1][r - 1].resize(static_cast<std::size_t>(mu.row_length(l, r)));
                }
            }
            for (const auto& [node, k] : placed) {
                rows[node.comp - 1][node.row - 1][node.col - 1] = k;
            }
            out.push_back(Tableau(mu, std::move(rows)));
            return;
        }
        std::vector<Node> removable = shape.removable_nodes();
        for (auto it = removable.rbegin(); it != removable.rend(); ++it) {
            placed.push_back({*it, m});
            self(self, shape.with_node_removed(*it), m - 1, placed);
            placed.pop_back();
        }
    };
    std::vector<std::pair<Node, long>> placed;
    recurse(recurse, mu, n, placed);
    return out;
}

std::vector<Tableau> enumerate_row_standard(const Multipartition& mu) {
    long n = mu.size();
    // Row coordinates in scan order; entries 1..n are placed in increasing
    // order at the leftmost free cell of a chosen row, which makes every row
    // increasing and hits each row standard tableau exactly once.
    struct RowSlot {
        long comp, row, capacity, used = 0;
    };
    std::vector<RowSlot> slots;
    for (long l = 1; l <= mu.level(); ++l) {
        for (long r = 1; r <= mu.row_count(l); ++r) {
            if (mu.row_length(l, r) > 0) slots.push_back({l, r, mu.row_length(l, r)});
        }
    }
    std::vector<Tableau> out;
    std::vector<std::vector<std::vector<long>>> rows(static_cast<std::size_t>(mu.level()));
    for (long l = 1; l <= mu.level(); ++l) {
        rows[l - 1].resize(static_cast<std::size_t>(mu.row_count(l)));
        for (long r = 1; r <= mu.row_count(l); ++r) {
            rows[l - 1][r - 1].resize(static_cast<std::size_t>(mu.row_length(l, r)));
        }
    }
    auto recurse = [&](auto&& self, long k) -> void {
        if (k > n) {
            out.push_back(Tableau(mu, rows));
            return;
        }
        for (auto& slot : slots) {
            if (slot.used < slot.capacity) {
                rows[slot.comp - 1][slot.row - 1][slot.used] = k;
                ++slot.used;
                self(self, k + 1);
                --slot.used;
            }
        }
    };
    recurse(recurse, 1);
    return out;
}

bool tableau_dominates(const Tableau& s, const Tableau& t) {
    if (s.size() != t.size()) throw std::invalid_argument("size mismatch in tableau dominance");
    for (long m = 1; m <= s.size(); ++m) {
        if (!dominates(s.restricted_shape(m), t.restricted_shape(m))) return false;
    }
    return true;
}

bool strong_dominates(const Tableau& s, const Tableau& t,
                      const Tableau& u, const Tableau& v) {
    return tableau_dominates(s, u) && tableau_dominates(t, v);
}

bool pair_dominates(const Tableau& s, const Tableau& t,
                    const Tableau& u, const Tableau& v) {
    const Multipartition& lam = s.shape();
    const Multipartition& mu = u.shape();
    if (lam == mu) return tableau_dominates(s, u) && tableau_dominates(t, v);
    return dominates(lam, mu);
}

bool comp_leq(const Tableau& s, const Tableau& t) {
    if (s.size() != t.size()) throw std::invalid_argument("size mismatch in comp_leq");
    for (long k = 1; k <= s.size(); ++k) {
        if (s.comp_of(k) > t.comp_of(k)) return false;
    }
    return true;
}

std::vector<long> residue_sequence(const Tableau& t, const QuiverParams& params) {
    std::vector<long> res;
    res.reserve(static_cast<std::size_t>(t.size()));
    for (long k = 1; k <= t.size(); ++k) {
        const Node& node = t.node_of(k);
        res.push_back(params.node_residue(node.row, node.col, node.comp));
    }
    return res;
}

long degree(const Tableau& t, const QuiverParams& params) {
    Multipartition shape = Multipartition::empty(t.shape().level());
    long deg = 0;
    for (long m = 1; m <= t.size(); ++m) {
        const Node& node = t.node_of(m);
        deg += shape.d_below(node, params);
        shape = shape.with_node_added(node);
    }
    return deg;
}

long codegree(const Tableau& t, const QuiverParams& params) {
    Multipartition shape = Multipartition::empty(t.shape().level());
    long codeg = 0;
    for (long m = 1; m <= t.size(); ++m) {
        const Node& node = t.node_of(m);
        codeg += shape.d_above(node, params);
        shape = shape.with_node_added(node);
    }
    return codeg;
}

LaurentPoly graded_dimension(const Multipartition& mu, const QuiverParams& params) {
    LaurentPoly dim;
    for (const Tableau& t : enumerate_standard(mu)) {
        dim += LaurentPoly::monomial(degree(t, params), 1);
    }
    return dim;
}

}  // namespace specht
