#pragma once

// Canonical labeling for the data-regeneration tools only: finds the
// vertex order whose graph6 upper-triangle bitstream is lexicographically
// smallest. Backtracking with prefix pruning and twin skipping; meant for
// small sparse graphs, not a general-purpose canonicalizer.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "longcycle/graph.hpp"
#include "longcycle/graph6.hpp"

namespace datagen {

class Canonizer {
public:
    explicit Canonizer(const longcycle::Graph& g) : g_(g), n_(g.order()) {
        adj_.assign(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v)
            for (int w : g.neighbors(v)) adj_[static_cast<std::size_t>(v)] |= 1u << w;
        twin_class_.assign(static_cast<std::size_t>(n_), -1);
        for (int v = 0; v < n_; ++v) {
            if (twin_class_[static_cast<std::size_t>(v)] >= 0) continue;
            twin_class_[static_cast<std::size_t>(v)] = v;
            for (int w = v + 1; w < n_; ++w) {
                std::uint32_t av = adj_[static_cast<std::size_t>(v)] & ~(1u << w);
                std::uint32_t aw = adj_[static_cast<std::size_t>(w)] & ~(1u << v);
                if (av == aw) twin_class_[static_cast<std::size_t>(w)] = v;
            }
        }
    }

    longcycle::Graph canonical_graph() {
        run();
        longcycle::Graph out(n_);
        std::vector<int> pos(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(best_perm_[i])] = i;
        for (const auto& e : g_.edges())
            out.add_edge(pos[static_cast<std::size_t>(e.a)], pos[static_cast<std::size_t>(e.b)]);
        return out;
    }

    std::string canonical_g6() { return longcycle::write_graph6(canonical_graph()); }

private:
    static constexpr std::uint64_t kMax = ~0ull;

    void run() {
        best_col_.assign(static_cast<std::size_t>(n_), kMax);
        best_perm_.assign(static_cast<std::size_t>(n_), 0);
        perm_.clear();
        used_ = 0;
        place();
    }

    // Column value of `orig` when appended at position perm_.size():
    // earlier positions occupy more significant bits.
    std::uint64_t column(int orig) const {
        const int k = static_cast<int>(perm_.size());
        std::uint64_t col = 0;
        for (int i = 0; i < k; ++i)
            col |= static_cast<std::uint64_t>((adj_[static_cast<std::size_t>(orig)] >>
                                               perm_[static_cast<std::size_t>(i)]) & 1u)
                   << (k - 1 - i);
        return col;
    }

    void place() {
        const int k = static_cast<int>(perm_.size());
        if (k == n_) {
            best_perm_ = perm_;
            return;
        }
        struct Cand {
            std::uint64_t col;
            int orig;
        };
        std::vector<Cand> cands;
        for (int v = 0; v < n_; ++v)
            if (!((used_ >> v) & 1u)) cands.push_back({column(v), v});
        std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            return a.col != b.col ? a.col < b.col : a.orig < b.orig;
        });
        std::vector<std::pair<std::uint64_t, int>> tried; // (col, twin class)
        for (const Cand& c : cands) {
            if (c.col > best_col_[static_cast<std::size_t>(k)]) break;
            if (c.col < best_col_[static_cast<std::size_t>(k)]) {
                best_col_[static_cast<std::size_t>(k)] = c.col;
                for (int j = k + 1; j < n_; ++j) best_col_[static_cast<std::size_t>(j)] = kMax;
            }
            const int cls = twin_class_[static_cast<std::size_t>(c.orig)];
            bool dup = false;
            for (const auto& [tcol, tcls] : tried)
                if (tcol == c.col && tcls == cls) dup = true;
            if (dup) continue;
            tried.push_back({c.col, cls});
            perm_.push_back(c.orig);
            used_ |= 1u << c.orig;
            place();
            used_ &= ~(1u << c.orig);
            perm_.pop_back();
        }
    }

    const longcycle::Graph& g_;
    int n_;
    std::vector<std::uint32_t> adj_;
    std::vector<int> twin_class_;
    std::vector<int> perm_, best_perm_;
    std::vector<std::uint64_t> best_col_;
    std::uint32_t used_ = 0;
};

inline std::string canonical_g6(const longcycle::Graph& g) { return Canonizer(g).canonical_g6(); }

} // namespace datagen
