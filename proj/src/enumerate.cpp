#include "longcycle/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <set>

namespace longcycle {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// ---------------------------------------------------------------------
// Word-parallel scratch for the path search. Adjacency is mirrored into
// bitmasks so the reconnection test (one BFS per extension) stays cheap.
// ---------------------------------------------------------------------
class PathSearch {
public:
    enum class Mode { Longest, HamCycles, StPaths };

    PathSearch(const Graph& g, const EnumOptions& opts)
        : g_(g), n_(g.order()), words_(static_cast<std::size_t>((n_ + 63) / 64)),
          opts_(opts) {
        adjmask_.assign(static_cast<std::size_t>(n_) * words_, 0);
        for (int v = 0; v < n_; ++v)
            for (int w : g.neighbors(v)) set_bit(adj_row(v), w);
        unvisited_.assign(words_, 0);
        reach_.assign(words_, 0);
        frontier_.assign(words_, 0);
        next_.assign(words_, 0);
        union_adj_.assign(words_, 0);
        path_.assign(static_cast<std::size_t>(2 * std::max(n_, 1)), 0);
    }

    // Appendix algorithm 1. Enumerates, for v = 2..n-1, every cycle whose
    // highest vertex is v inside the prefix {0..v}; keeps the longest.
    EnumResult longest() {
        mode_ = Mode::Longest;
        best_ = 0;
        longest_out_.clear();
        for (int v = 2; v < n_; ++v) {
            prefix_limit_ = v;
            anchor_ = v;
            start_anchor_runs();
        }
        EnumResult res;
        res.algorithm = Algorithm::DFS;
        res.circumference = best_ >= 3 ? best_ : 0;
        res.cycles = make_cycle_set(std::move(longest_out_));
        longest_out_.clear();
        return res;
    }

    std::uint64_t count_ham_cycles(std::optional<Edge> via,
                                   const std::function<void(const int*, int)>& on_cycle) {
        mode_ = Mode::HamCycles;
        via_ = via;
        on_cycle_ = on_cycle;
        count_ = 0;
        if (n_ >= 3) {
            prefix_limit_ = n_ - 1;
            anchor_ = n_ - 1;
            start_anchor_runs();
        }
        return count_;
    }

    std::uint64_t count_st_paths(int s, int t, std::optional<Edge> via,
                                 const std::function<void(const int*, int)>& on_path) {
        mode_ = Mode::StPaths;
        via_ = via;
        on_cycle_ = on_path;
        count_ = 0;
        prefix_limit_ = n_ - 1;
        target_ = t;
        std::fill(unvisited_.begin(), unvisited_.end(), 0);
        for (int v = 0; v < n_; ++v) set_bit(unvisited_.data(), v);
        clear_bit(unvisited_.data(), s);
        left_ = right_ = n_;
        path_[static_cast<std::size_t>(left_)] = s;
        unvisited_count_ = n_ - 1;
        via_used_ = false;
        extend();
        return count_;
    }

private:
    std::uint64_t* adj_row(int v) { return adjmask_.data() + static_cast<std::size_t>(v) * words_; }
    const std::uint64_t* adj_row(int v) const {
        return adjmask_.data() + static_cast<std::size_t>(v) * words_;
    }
    static void set_bit(std::uint64_t* w, int i) { w[i >> 6] |= 1ull << (i & 63); }
    static void clear_bit(std::uint64_t* w, int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
    static bool test_bit(const std::uint64_t* w, int i) { return (w[i >> 6] >> (i & 63)) & 1; }

    bool adjacent(int u, int v) const { return test_bit(adj_row(u), v); }

    // Seeds the search with every path (a, anchor, b), a < b, inside the
    // current prefix. Each cycle through the anchor is generated exactly
    // once because the growth rule below is a function of the path state.
    void start_anchor_runs() {
        std::fill(unvisited_.begin(), unvisited_.end(), 0);
        for (int v = 0; v <= prefix_limit_; ++v) set_bit(unvisited_.data(), v);
        const auto& nbrs = g_.neighbors(anchor_);
        for (std::size_t ia = 0; ia < nbrs.size(); ++ia) {
            int a = nbrs[ia];
            if (a > prefix_limit_) break;
            for (std::size_t ib = ia + 1; ib < nbrs.size(); ++ib) {
                int b = nbrs[ib];
                if (b > prefix_limit_) break;
                left_ = n_ - 1;
                right_ = n_ + 1;
                path_[static_cast<std::size_t>(left_)] = a;
                path_[static_cast<std::size_t>(n_)] = anchor_;
                path_[static_cast<std::size_t>(right_)] = b;
                clear_bit(unvisited_.data(), a);
                clear_bit(unvisited_.data(), anchor_);
                clear_bit(unvisited_.data(), b);
                unvisited_count_ = prefix_limit_ + 1 - 3;
                via_used_ =
                    via_ && (Edge(a, anchor_) == *via_ || Edge(anchor_, b) == *via_);
                extend();
                set_bit(unvisited_.data(), a);
                set_bit(unvisited_.data(), anchor_);
                set_bit(unvisited_.data(), b);
            }
        }
    }

    void check_deadline() {
        if (opts_.deadline && (++ticks_ & 0x3fff) == 0 && Clock::now() > *opts_.deadline)
            throw DeadlineExceeded("enumeration deadline exceeded");
    }

    void record_closure(int closing_a, int closing_b) {
        const int len = right_ - left_ + 1;
        switch (mode_) {
        case Mode::Longest:
            if (len < 3) return;
            if (len > best_) {
                best_ = len;
                longest_out_.clear();
            }
            if (len == best_)
                longest_out_.push_back(canonical_cycle(
                    std::vector<int>(path_.begin() + left_, path_.begin() + right_ + 1)));
            break;
        case Mode::HamCycles:
            if (len != n_) return;
            if (via_ && !via_used_ && Edge(closing_a, closing_b) != *via_) return;
            ++count_;
            if (on_cycle_) on_cycle_(path_.data() + left_, len);
            break;
        case Mode::StPaths:
            if (via_ && !via_used_) return;
            ++count_;
            if (on_cycle_) on_cycle_(path_.data() + left_, len);
            break;
        }
    }

    // BFS through unvisited vertices from `src`. Fills reach_ (unvisited
    // vertices reachable from src) and union_adj_ (neighborhood closure of
    // {src} and reach_), and returns popcount(reach_).
    int reconnect_scan(int src) {
        const std::uint64_t* row = adj_row(src);
        int reached = 0;
        for (std::size_t w = 0; w < words_; ++w) {
            union_adj_[w] = row[w];
            reach_[w] = row[w] & unvisited_[w];
            frontier_[w] = reach_[w];
            reached += std::popcount(reach_[w]);
        }
        bool more = reached > 0;
        while (more) {
            std::fill(next_.begin(), next_.end(), 0);
            for (std::size_t w = 0; w < words_; ++w) {
                std::uint64_t bits = frontier_[w];
                while (bits) {
                    int v = static_cast<int>(w) * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    const std::uint64_t* vr = adj_row(v);
                    for (std::size_t x = 0; x < words_; ++x) {
                        union_adj_[x] |= vr[x];
                        next_[x] |= vr[x];
                    }
                }
            }
            more = false;
            for (std::size_t w = 0; w < words_; ++w) {
                next_[w] &= unvisited_[w] & ~reach_[w];
                if (next_[w]) more = true;
                reach_[w] |= next_[w];
                frontier_[w] = next_[w];
                reached += std::popcount(next_[w]);
            }
        }
        return reached;
    }

    bool via_interior_dead(int endL, int endR) const {
        if (!via_ || via_used_) return false;
        auto interior = [&](int x) {
            return !test_bit(unvisited_.data(), x) && x != endL && x != endR &&
                   x != (mode_ == Mode::StPaths ? target_ : -1);
        };
        return interior(via_->a) || interior(via_->b);
    }

    void extend() {
        check_deadline();
        const int len = right_ - left_ + 1;
        const int endL = path_[static_cast<std::size_t>(left_)];
        const int endR = path_[static_cast<std::size_t>(right_)];

        if (mode_ == Mode::StPaths) {
            if (len == n_) {
                if (endR == target_) record_closure(-1, -1);
                return;
            }
        } else if (len >= 3 && adjacent(endL, endR)) {
            record_closure(endL, endR);
            if (len == n_) return;
        }

        // Reconnection prune: stop as soon as no path of unvisited
        // vertices joins the two path ends (Appendix rule).
        const int reach_size = reconnect_scan(mode_ == Mode::StPaths ? endR : endL);
        const int other = mode_ == Mode::StPaths ? target_ : endR;
        const bool other_ok = mode_ == Mode::StPaths ? test_bit(reach_.data(), other)
                                                     : test_bit(union_adj_.data(), other);
        if (!other_ok) return;
        if (mode_ == Mode::Longest) {
            if (opts_.prune_by_best && len + reach_size < best_) return;
        } else {
            if (reach_size != unvisited_count_) return; // cannot span every vertex
        }
        if (via_interior_dead(endL, endR)) return;

        bool grow_right;
        if (mode_ == Mode::StPaths) {
            grow_right = true;
        } else {
            // Deterministic choice keeps every cycle reachable by exactly
            // one growth sequence; the sparser end branches less.
            int cl = 0, cr = 0;
            for (int w : g_.neighbors(endL))
                if (w <= prefix_limit_ && test_bit(unvisited_.data(), w)) ++cl;
            for (int w : g_.neighbors(endR))
                if (w <= prefix_limit_ && test_bit(unvisited_.data(), w)) ++cr;
            grow_right = cr <= cl;
        }

        const int from = grow_right ? endR : endL;
        for (int w : g_.neighbors(from)) {
            if (w > prefix_limit_) break;
            if (!test_bit(unvisited_.data(), w)) continue;
            if (mode_ == Mode::StPaths && w == target_ && len != n_ - 1) continue;
            const bool via_hit = via_ && !via_used_ && Edge(from, w) == *via_;
            if (via_hit) via_used_ = true;
            clear_bit(unvisited_.data(), w);
            --unvisited_count_;
            if (grow_right)
                path_[static_cast<std::size_t>(++right_)] = w;
            else
                path_[static_cast<std::size_t>(--left_)] = w;
            extend();
            if (grow_right)
                --right_;
            else
                ++left_;
            set_bit(unvisited_.data(), w);
            ++unvisited_count_;
            if (via_hit) via_used_ = false;
        }
    }

    const Graph& g_;
    int n_;
    std::size_t words_;
    EnumOptions opts_;
    std::vector<std::uint64_t> adjmask_, unvisited_, reach_, frontier_, next_, union_adj_;
    std::vector<int> path_;
    int left_ = 0, right_ = 0;
    int prefix_limit_ = 0, anchor_ = 0, target_ = -1;
    int unvisited_count_ = 0;
    int best_ = 0;
    Mode mode_ = Mode::Longest;
    std::optional<Edge> via_;
    bool via_used_ = false;
    std::uint64_t count_ = 0;
    std::uint64_t ticks_ = 0;
    std::vector<Cycle> longest_out_;
    std::function<void(const int*, int)> on_cycle_;
};

std::uint64_t dp_memory_limit(const DpOptions& opts) {
    if (opts.memory_limit_bytes > 0) return opts.memory_limit_bytes;
    if (const char* env = std::getenv("LONGCYCLE_DP_MEM_MB")) {
        char* end = nullptr;
        unsigned long long mb = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && mb > 0) return mb * 1024ull * 1024ull;
    }
    return 1024ull * 1024ull * 1024ull;
}

} // namespace

EnumResult enumerate_longest_cycles_dfs(const Graph& g, const EnumOptions& opts) {
    auto start = Clock::now();
    PathSearch search(g, opts);
    EnumResult res = search.longest();
    res.millis = elapsed_ms(start);
    return res;
}

EnumResult enumerate_longest_cycles_dp(const Graph& g, const DpOptions& opts) {
    auto start = Clock::now();
    const int n = g.order();
    if (n > opts.vertex_limit)
        throw CapacityError("subset DP limited to " + std::to_string(opts.vertex_limit) +
                            " vertices, got " + std::to_string(n));
    const std::uint64_t need = n >= 2 ? (1ull << (n - 1)) * sizeof(std::uint32_t) : 0;
    const std::uint64_t limit = dp_memory_limit(opts);
    if (need > limit)
        throw CapacityError("subset DP needs " + std::to_string(need) + " bytes, limit " +
                            std::to_string(limit));

    int best = 0;
    std::set<Cycle> out;
    std::vector<std::uint32_t> dp;
    std::vector<std::uint32_t> local_adj;
    std::vector<int> suffix;

    for (int anchor = 0; anchor + 2 < n; ++anchor) {
        const int m = n - anchor;
        const int nbits = m - 1;
        local_adj.assign(static_cast<std::size_t>(m), 0);
        for (int i = 0; i < m; ++i)
            for (int w : g.neighbors(anchor + i))
                if (w >= anchor) local_adj[static_cast<std::size_t>(i)] |= 1u << (w - anchor);

        dp.assign(1ull << nbits, 0);
        dp[0] = 1u; // path consisting of the anchor alone
        int anchor_best = 0;
        for (std::uint64_t s = 0; s < (1ull << nbits); ++s) {
            std::uint32_t ends = dp[s];
            if (!ends) continue;
            const std::uint32_t members = (static_cast<std::uint32_t>(s) << 1) | 1u;
            if (std::popcount(static_cast<std::uint32_t>(s)) >= 2 &&
                (ends & local_adj[0] & ~1u))
                anchor_best = std::max(anchor_best,
                                       std::popcount(static_cast<std::uint32_t>(s)) + 1);
            std::uint32_t t_bits = ends;
            while (t_bits) {
                int t = std::countr_zero(t_bits);
                t_bits &= t_bits - 1;
                std::uint32_t cand = local_adj[static_cast<std::size_t>(t)] & ~members;
                while (cand) {
                    int w = std::countr_zero(cand);
                    cand &= cand - 1;
                    dp[s | (1ull << (w - 1))] |= 1u << w;
                }
            }
        }

        if (anchor_best < 3 || anchor_best < best) continue;
        if (anchor_best > best) {
            best = anchor_best;
            out.clear();
        }
        // Reconstruct every longest cycle anchored here; both orientations
        // of a cycle collapse under the canonical form.
        std::function<void(std::uint64_t, int)> rebuild = [&](std::uint64_t s, int t) {
            suffix.push_back(t);
            std::uint64_t rest = s & ~(1ull << (t - 1));
            if (rest == 0) {
                std::vector<int> cyc;
                cyc.reserve(suffix.size() + 1);
                cyc.push_back(anchor);
                for (auto it = suffix.rbegin(); it != suffix.rend(); ++it)
                    cyc.push_back(anchor + *it);
                out.insert(canonical_cycle(cyc));
            } else {
                std::uint32_t preds = dp[rest] & local_adj[static_cast<std::size_t>(t)] & ~1u;
                while (preds) {
                    int p = std::countr_zero(preds);
                    preds &= preds - 1;
                    rebuild(rest, p);
                }
            }
            suffix.pop_back();
        };
        for (std::uint64_t s = 0; s < (1ull << nbits); ++s) {
            if (!dp[s] || std::popcount(static_cast<std::uint32_t>(s)) + 1 != best) continue;
            std::uint32_t closers = dp[s] & local_adj[0] & ~1u;
            while (closers) {
                int t = std::countr_zero(closers);
                closers &= closers - 1;
                rebuild(s, t);
            }
        }
    }

    EnumResult res;
    res.algorithm = Algorithm::DP;
    res.circumference = best;
    res.cycles = make_cycle_set(std::vector<Cycle>(out.begin(), out.end()));
    res.millis = elapsed_ms(start);
    return res;
}

BigCount count_hamiltonian_cycles(const Graph& g, std::optional<Edge> via,
                                  const EnumOptions& opts) {
    if (via && !g.has_edge(via->a, via->b))
        throw std::invalid_argument("count_hamiltonian_cycles: via edge not in graph");
    PathSearch search(g, opts);
    return BigCount(search.count_ham_cycles(via, nullptr));
}

StPathResult enumerate_st_ham_paths(const Graph& g, int s, int t, std::optional<Edge> via,
                                    bool list_paths, const EnumOptions& opts) {
    if (s == t) throw std::invalid_argument("enumerate_st_ham_paths: s and t must differ");
    if (s < 0 || t < 0 || s >= g.order() || t >= g.order())
        throw std::invalid_argument("enumerate_st_ham_paths: endpoint out of range");
    if (via && !g.has_edge(via->a, via->b))
        throw std::invalid_argument("enumerate_st_ham_paths: via edge not in graph");
    StPathResult result;
    std::function<void(const int*, int)> sink;
    if (list_paths) {
        result.paths.emplace();
        sink = [&](const int* p, int len) {
            result.paths->emplace_back(p, p + len);
        };
    }
    PathSearch search(g, opts);
    result.count = BigCount(search.count_st_paths(s, t, via, sink));
    if (result.paths) std::sort(result.paths->begin(), result.paths->end());
    return result;
}

std::map<Edge, BigCount> edge_cycle_incidence(const Graph& g, const EnumOptions& opts) {
    std::map<Edge, std::uint64_t> counts;
    for (const Edge& e : g.edges()) counts[e] = 0;
    PathSearch search(g, opts);
    search.count_ham_cycles(std::nullopt, [&](const int* path, int len) {
        for (int i = 0; i + 1 < len; ++i) ++counts[Edge(path[i], path[i + 1])];
        ++counts[Edge(path[0], path[len - 1])];
    });
    std::map<Edge, BigCount> out;
    for (const auto& [e, c] : counts) out.emplace(e, BigCount(c));
    return out;
}

namespace {

// Ordered single-end growth; the first accepted completion is the
// lexicographically smallest one because candidates are tried ascending.
class LexSearch {
public:
    explicit LexSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::optional<std::vector<int>> ham_cycle() {
        if (n_ < 3) return std::nullopt;
        path_.assign(1, 0);
        used_.assign(static_cast<std::size_t>(n_), 0);
        used_[0] = 1;
        cycle_mode_ = true;
        target_ = 0;
        if (grow()) return path_;
        return std::nullopt;
    }

    std::optional<std::vector<int>> ham_path(int s, int t) {
        path_.assign(1, s);
        used_.assign(static_cast<std::size_t>(n_), 0);
        used_[static_cast<std::size_t>(s)] = 1;
        cycle_mode_ = false;
        target_ = t;
        if (n_ == 1) return std::nullopt;
        if (grow()) return path_;
        return std::nullopt;
    }

private:
    bool feasible() const {
        // All unvisited vertices must stay reachable from the moving end
        // without crossing the path.
        std::vector<char> seen = used_;
        std::vector<int> stack{path_.back()};
        seen[static_cast<std::size_t>(path_.back())] = 2;
        int found = 0;
        bool target_touch = false;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g_.neighbors(u)) {
                if (w == target_) target_touch = true;
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                ++found;
                stack.push_back(w);
            }
        }
        int unvisited = n_ - static_cast<int>(path_.size());
        if (!cycle_mode_) {
            // target is unvisited and counted inside `found`
            return found == unvisited && seen[static_cast<std::size_t>(target_)];
        }
        return found == unvisited && target_touch;
    }

    bool grow() {
        const int last = path_.back();
        if (static_cast<int>(path_.size()) == n_) {
            if (cycle_mode_)
                return g_.has_edge(last, 0) && path_[1] < path_.back();
            return last == target_;
        }
        if (!feasible()) return false;
        for (int w : g_.neighbors(last)) {
            if (used_[static_cast<std::size_t>(w)]) continue;
            if (!cycle_mode_ && w == target_ && static_cast<int>(path_.size()) != n_ - 1)
                continue;
            used_[static_cast<std::size_t>(w)] = 1;
            path_.push_back(w);
            if (grow()) return true;
            path_.pop_back();
            used_[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    std::vector<int> path_;
    std::vector<char> used_;
    bool cycle_mode_ = true;
    int target_ = 0;
};

} // namespace

std::optional<std::vector<int>> find_hamiltonian_cycle(const Graph& g) {
    return LexSearch(g).ham_cycle();
}

std::optional<std::vector<int>> find_hamiltonian_path(const Graph& g, int s, int t) {
    if (s == t || s < 0 || t < 0 || s >= g.order() || t >= g.order())
        throw std::invalid_argument("find_hamiltonian_path: bad endpoints");
    return LexSearch(g).ham_path(s, t);
}

bool is_hamiltonian(const Graph& g) { return find_hamiltonian_cycle(g).has_value(); }

} // namespace longcycle
