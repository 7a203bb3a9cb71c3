#include "barker/searchlab.hpp"

#include "search_engine.hpp"
#include "search_validate.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>

namespace barker::search {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int thread_count(const SearchOptions& opts) { return opts.workers > 0 ? opts.workers : omp_get_max_threads(); }

int exhaustive_shard_bits(int n, const SearchOptions& opts) {
    if (opts.shard_width >= 0) return std::min(opts.shard_width, n);
    return std::min(n, 12);
}

std::vector<LittlewoodSeq> unpack_all(const std::vector<Word>& words, int n) {
    std::vector<LittlewoodSeq> out;
    out.reserve(words.size());
    for (auto w : words) out.push_back(unpack(w, n));
    return out;
}

}  // namespace

SearchReport exhaustive_search(int n, const SearchOptions& opts) {
    detail::check_exhaustive_n(n, opts);
    const auto t0 = Clock::now();
    const int shard_bits = exhaustive_shard_bits(n, opts);
    const int low_bits = n - shard_bits;
    const auto shards = static_cast<std::int64_t>(1) << shard_bits;
    const Word low_count = Word{1} << low_bits;

    std::vector<std::vector<Word>> per_shard(static_cast<std::size_t>(shards));
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(opts))
    for (std::int64_t s = 0; s < shards; ++s) {
        auto& hits = per_shard[static_cast<std::size_t>(s)];
        const Word base = static_cast<Word>(s) << low_bits;
        for (Word low = 0; low < low_count; ++low) {
            const Word x = base | low;
            if (!is_barker_word(x, n)) continue;
            if (opts.canonical && canonical_word(x, n) != x) continue;
            hits.push_back(x);
        }
    }

    std::vector<Word> words;
    for (const auto& hits : per_shard) words.insert(words.end(), hits.begin(), hits.end());

    SearchReport rep;
    rep.n = n;
    rep.mode = Mode::Exhaustive;
    rep.canonical = opts.canonical;
    rep.found = unpack_all(words, n);
    rep.nodes_explored = Word{1} << n;
    rep.wall_time_s = seconds_since(t0);
    return rep;
}

SearchReport pruned_search(int n, const RuleSet& rules, const SearchOptions& opts) {
    detail::check_pruned_n(n, opts);
    const auto t0 = Clock::now();
    const int m = (n - 1) / 2;
    const int split = opts.shard_width >= 0 ? std::clamp(opts.shard_width + 1, 1, m + 2) : std::min(m + 1, 7);

    const detail::PrunedDfs dfs(n, rules, opts.canonical);
    detail::PrunedDfs::Output head;
    std::vector<detail::PrunedDfs::State> frontier;
    dfs.collect_frontier(split, frontier, head);

    std::vector<detail::PrunedDfs::Output> outs(frontier.size());
    const auto count = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(opts))
    for (std::int64_t i = 0; i < count; ++i) {
        dfs.run(frontier[static_cast<std::size_t>(i)], outs[static_cast<std::size_t>(i)]);
    }

    for (const auto& o : outs) {
        head.nodes += o.nodes;
        head.stats += o.stats;
        head.found.insert(head.found.end(), o.found.begin(), o.found.end());
    }
    std::sort(head.found.begin(), head.found.end());

    SearchReport rep;
    rep.n = n;
    rep.mode = Mode::Pruned;
    rep.canonical = opts.canonical;
    rep.rules = rules;
    rep.found = unpack_all(head.found, n);
    rep.nodes_explored = head.nodes;
    rep.prune_stats = head.stats;
    rep.wall_time_s = seconds_since(t0);
    return rep;
}

PslResult psl_search(int n, const SearchOptions& opts) {
    detail::check_exhaustive_n(n, opts);
    const int shard_bits = exhaustive_shard_bits(n, opts);
    const int low_bits = n - shard_bits;
    const auto shards = static_cast<std::int64_t>(1) << shard_bits;
    const Word low_count = Word{1} << low_bits;

    struct Local {
        int best = 0;
        std::vector<Word> witnesses;
    };
    std::vector<Local> per_shard(static_cast<std::size_t>(shards));
#pragma omp parallel for schedule(dynamic) num_threads(thread_count(opts))
    for (std::int64_t s = 0; s < shards; ++s) {
        auto& local = per_shard[static_cast<std::size_t>(s)];
        local.best = n;
        const Word base = static_cast<Word>(s) << low_bits;
        for (Word low = 0; low < low_count; ++low) {
            const Word x = base | low;
            if (canonical_word(x, n) != x) continue;
            const int psl = psl_word(x, n, local.best);
            if (psl > local.best) continue;
            if (psl < local.best) {
                local.best = psl;
                local.witnesses.clear();
            }
            local.witnesses.push_back(x);
        }
    }

    PslResult res;
    res.n = n;
    res.min_psl = n;
    for (const auto& l : per_shard) res.min_psl = std::min(res.min_psl, l.witnesses.empty() ? n : l.best);
    std::vector<Word> words;
    for (const auto& l : per_shard) {
        if (!l.witnesses.empty() && l.best == res.min_psl) words.insert(words.end(), l.witnesses.begin(), l.witnesses.end());
    }
    res.witnesses = unpack_all(words, n);
    return res;
}

std::vector<ScanRow> range_scan(int n_lo, int n_hi, ScanMode mode, const SearchOptions& opts) {
    if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("range_scan: bad range");
    if (n_hi > opts.ceiling) {
        throw std::out_of_range("range_scan: n = " + std::to_string(n_hi) + " exceeds ceiling " +
                                std::to_string(opts.ceiling));
    }
    std::vector<ScanRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        const bool pruned = mode != ScanMode::Exhaustive && n % 2 == 1;
        const auto rep = pruned ? pruned_search(n, RuleSet::all(), opts) : exhaustive_search(n, opts);
        ScanRow row;
        row.n = n;
        row.mode = rep.mode;
        row.barker_count = rep.found.size();
        if (!rep.found.empty()) row.example = rep.found.front();
        row.time_s = rep.wall_time_s;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace barker::search
