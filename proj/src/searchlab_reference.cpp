// Single-threaded reference searches. No sharding; kept for tests and for the
// serial side of the benchmark.

#include "barker/searchlab.hpp"

#include "search_engine.hpp"
#include "search_validate.hpp"

#include <algorithm>
#include <chrono>

namespace barker::search::reference {

namespace {

using Clock = std::chrono::steady_clock;

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
    const Word total = Word{1} << n;
    std::vector<Word> words;
    for (Word x = 0; x < total; ++x) {
        if (is_barker_word(x, n) && (!opts.canonical || canonical_word(x, n) == x)) words.push_back(x);
    }
    SearchReport rep;
    rep.n = n;
    rep.mode = Mode::Exhaustive;
    rep.canonical = opts.canonical;
    rep.found = unpack_all(words, n);
    rep.nodes_explored = total;
    rep.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

SearchReport pruned_search(int n, const RuleSet& rules, const SearchOptions& opts) {
    detail::check_pruned_n(n, opts);
    const auto t0 = Clock::now();
    const detail::PrunedDfs dfs(n, rules, opts.canonical);
    detail::PrunedDfs::Output out;
    dfs.run(detail::PrunedDfs::State{}, out);
    std::sort(out.found.begin(), out.found.end());

    SearchReport rep;
    rep.n = n;
    rep.mode = Mode::Pruned;
    rep.canonical = opts.canonical;
    rep.rules = rules;
    rep.found = unpack_all(out.found, n);
    rep.nodes_explored = out.nodes;
    rep.prune_stats = out.stats;
    rep.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

PslResult psl_search(int n, const SearchOptions& opts) {
    detail::check_exhaustive_n(n, opts);
    const Word total = Word{1} << n;
    PslResult res;
    res.n = n;
    res.min_psl = n;
    std::vector<Word> words;
    for (Word x = 0; x < total; ++x) {
        if (canonical_word(x, n) != x) continue;
        const int psl = psl_word(x, n, n);
        if (psl < res.min_psl) {
            res.min_psl = psl;
            words.clear();
        }
        if (psl == res.min_psl) words.push_back(x);
    }
    res.witnesses = unpack_all(words, n);
    return res;
}

}  // namespace barker::search::reference
