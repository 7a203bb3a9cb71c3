#pragma once

// Exhaustive and pruned searches for Barker sequences and minimum peak
// sidelobe level. The public kernels shard the search space by fixed sign
// prefixes and run shards under OpenMP; results are merged in shard order
// and sorted, so output does not depend on scheduling or worker count.
// barker::search::reference holds single-threaded versions of the same
// searches that tests and benchmarks compare against.

#include "barker/seqcore.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace barker::search {

using Word = std::uint64_t;

inline constexpr int kDefaultCeiling = 30;
inline constexpr int kExhaustiveHardLimit = 40;
inline constexpr int kPrunedHardLimit = 64;

// a_1 is the most significant of the n low bits; +1 is a set bit. Numeric
// order of words equals lexicographic order of sequences with -1 < +1.
Word pack(const LittlewoodSeq& seq);
LittlewoodSeq unpack(Word w, int n);

bool is_barker_word(Word w, int n);
// Peak sidelobe level, or any value > cap once it is known to exceed cap.
int psl_word(Word w, int n, int cap);
Word canonical_word(Word w, int n);

enum class Mode { Exhaustive, Pruned };
std::string mode_name(Mode mode);

struct RuleSet {
    bool skew_fix = true;
    bool even_lag_value = true;
    bool odd_lag_mod4 = true;
    bool partial_bound = true;

    static RuleSet all() { return {}; }
    static RuleSet none() { return {false, false, false, false}; }
    // Comma separated names, "all" or "none".
    static RuleSet parse(const std::string& text);
    std::vector<std::string> names() const;
    bool operator==(const RuleSet&) const = default;
};

struct PruneStats {
    std::uint64_t skew_fix = 0;        // back-end branches fixed instead of enumerated
    std::uint64_t even_lag_value = 0;
    std::uint64_t odd_lag_mod4 = 0;
    std::uint64_t partial_bound = 0;
    std::uint64_t leaf_reject = 0;     // complete sequences failing the final check

    PruneStats& operator+=(const PruneStats& o);
    bool operator==(const PruneStats&) const = default;
};

struct SearchOptions {
    bool canonical = true;
    int workers = 0;       // 0: OpenMP default
    int ceiling = kDefaultCeiling;
    int shard_width = -1;  // prefix width in bits (exhaustive) or levels (pruned); -1: automatic
};

struct SearchReport {
    int n = 0;
    Mode mode = Mode::Exhaustive;
    bool canonical = true;
    RuleSet rules = RuleSet::none();
    std::vector<LittlewoodSeq> found;  // sorted
    std::uint64_t nodes_explored = 0;
    double wall_time_s = 0.0;
    PruneStats prune_stats;

    std::string to_json(bool with_timing = false) const;
    std::string to_csv(bool with_timing = false) const;
};

SearchReport exhaustive_search(int n, const SearchOptions& opts = {});
// Requires odd n.
SearchReport pruned_search(int n, const RuleSet& rules = RuleSet::all(), const SearchOptions& opts = {});

enum class ScanMode { Exhaustive, Pruned, Auto };

struct ScanRow {
    int n = 0;
    Mode mode = Mode::Exhaustive;
    std::size_t barker_count = 0;
    std::optional<LittlewoodSeq> example;
    double time_s = 0.0;
};

// Pruned and Auto modes use the pruned search for odd n and exhaustive search
// for even n.
std::vector<ScanRow> range_scan(int n_lo, int n_hi, ScanMode mode, const SearchOptions& opts = {});
std::string scan_to_json(const std::vector<ScanRow>& rows, bool with_timing = false);
std::string scan_to_csv(const std::vector<ScanRow>& rows, bool with_timing = false);

struct PslResult {
    int n = 0;
    int min_psl = 0;
    std::vector<LittlewoodSeq> witnesses;  // canonical, sorted

    std::string to_json() const;
};

PslResult psl_search(int n, const SearchOptions& opts = {});

namespace reference {

SearchReport exhaustive_search(int n, const SearchOptions& opts = {});
SearchReport pruned_search(int n, const RuleSet& rules = RuleSet::all(), const SearchOptions& opts = {});
PslResult psl_search(int n, const SearchOptions& opts = {});

}  // namespace reference

}  // namespace barker::search
