#pragma once

// Internal to searchlab: the outside-in depth-first engine shared by the
// parallel kernels and the serial reference.
//
// Level d (1..m) assigns a_d and a_{n+1-d}; level m+1 assigns the middle
// entry. After level d every lag k >= n-d is complete. Partial correlation
// sums are updated incrementally as entries are placed and removed.

#include "barker/searchlab.hpp"

#include <array>
#include <cstdlib>
#include <vector>

namespace barker::search::detail {

class PrunedDfs {
public:
    struct State {
        std::array<std::int8_t, kPrunedHardLimit + 1> a{};  // 1-based, 0 = unassigned
        std::array<std::int32_t, kPrunedHardLimit> c{};     // partial c_k
        std::array<std::int32_t, kPrunedHardLimit> filled{};  // completed terms of c_k
        int level = 1;
    };

    struct Output {
        std::vector<Word> found;
        std::uint64_t nodes = 0;
        PruneStats stats;
    };

    PrunedDfs(int n, RuleSet rules, bool canonical)
        : n_(n), m_((n - 1) / 2), rules_(rules), canonical_(canonical), even_target_(m_ % 2 == 0 ? 1 : -1) {}

    // Explores the whole tree below `state`.
    void run(State state, Output& out) const { visit(state, out, nullptr, 0); }

    // Explores down to `split_level`, storing states that reach it unvisited.
    void collect_frontier(int split_level, std::vector<State>& frontier, Output& out) const {
        State root;
        visit(root, out, &frontier, split_level);
    }

private:
    void place(State& s, int pos, std::int8_t v) const {
        for (int j = 1; j <= n_; ++j) {
            if (j == pos || s.a[static_cast<std::size_t>(j)] == 0) continue;
            const auto lag = static_cast<std::size_t>(std::abs(pos - j));
            s.c[lag] += v * s.a[static_cast<std::size_t>(j)];
            ++s.filled[lag];
        }
        s.a[static_cast<std::size_t>(pos)] = v;
    }

    void remove(State& s, int pos) const {
        const std::int8_t v = s.a[static_cast<std::size_t>(pos)];
        s.a[static_cast<std::size_t>(pos)] = 0;
        for (int j = 1; j <= n_; ++j) {
            if (s.a[static_cast<std::size_t>(j)] == 0) continue;
            const auto lag = static_cast<std::size_t>(std::abs(pos - j));
            s.c[lag] -= v * s.a[static_cast<std::size_t>(j)];
            --s.filled[lag];
        }
    }

    // Rules applied to a lag that just became complete; true means cut.
    bool cut_complete_lag(const State& s, int k, PruneStats& stats) const {
        const auto ck = s.c[static_cast<std::size_t>(k)];
        if (rules_.even_lag_value && k % 2 == 0 && ck != even_target_) {
            ++stats.even_lag_value;
            return true;
        }
        if (rules_.odd_lag_mod4 && k % 2 == 1 && ck % 4 != 0) {
            ++stats.odd_lag_mod4;
            return true;
        }
        if (rules_.partial_bound && std::abs(ck) > 1) {
            ++stats.partial_bound;
            return true;
        }
        return false;
    }

    // Lags still incomplete: |partial| - remaining terms > 1 cannot recover.
    bool cut_incomplete_lags(const State& s, int first_complete, PruneStats& stats) const {
        if (!rules_.partial_bound) return false;
        for (int k = 1; k < first_complete; ++k) {
            const auto idx = static_cast<std::size_t>(k);
            const int remaining = (n_ - k) - s.filled[idx];
            if (std::abs(s.c[idx]) - remaining > 1) {
                ++stats.partial_bound;
                return true;
            }
        }
        return false;
    }

    bool prune_after(const State& s, int level, PruneStats& stats) const {
        if (level <= m_) {
            const int lag = n_ - level;
            return cut_complete_lag(s, lag, stats) || cut_incomplete_lags(s, lag, stats);
        }
        for (int k = m_; k >= 1; --k) {
            if (cut_complete_lag(s, k, stats)) return true;
        }
        return false;
    }

    void leaf(const State& s, Output& out) const {
        for (int k = 1; k < n_; ++k) {
            if (std::abs(s.c[static_cast<std::size_t>(k)]) > 1) {
                ++out.stats.leaf_reject;
                return;
            }
        }
        Word w = 0;
        for (int j = 1; j <= n_; ++j) {
            w = (w << 1) | (s.a[static_cast<std::size_t>(j)] > 0 ? 1u : 0u);
        }
        if (canonical_ && canonical_word(w, n_) != w) return;
        out.found.push_back(w);
    }

    void visit(State& s, Output& out, std::vector<State>* frontier, int split_level) const {
        if (frontier && s.level == split_level) {
            frontier->push_back(s);
            return;
        }
        ++out.nodes;
        const int level = s.level;
        if (level == m_ + 2) {
            leaf(s, out);
            return;
        }
        const std::int8_t signs[2] = {-1, 1};
        if (level == m_ + 1) {
            for (auto f : signs) {
                place(s, level, f);
                if (!prune_after(s, level, out.stats)) {
                    s.level = level + 1;
                    visit(s, out, frontier, split_level);
                    s.level = level;
                }
                remove(s, level);
            }
            return;
        }
        const int front = level;
        const int back = n_ + 1 - level;
        // a_{k+1} a_{n-k} = (-1)^{m+k} with k = level - 1.
        const std::int8_t skew_sign = ((m_ + level - 1) % 2 == 0) ? 1 : -1;
        for (auto f : signs) {
            place(s, front, f);
            for (auto b : signs) {
                if (rules_.skew_fix && b != skew_sign * f) {
                    ++out.stats.skew_fix;
                    continue;
                }
                place(s, back, b);
                if (!prune_after(s, level, out.stats)) {
                    s.level = level + 1;
                    visit(s, out, frontier, split_level);
                    s.level = level;
                }
                remove(s, back);
            }
            remove(s, front);
        }
    }

    int n_;
    int m_;
    RuleSet rules_;
    bool canonical_;
    int even_target_;
};

}  // namespace barker::search::detail
