#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barker/searchlab.hpp"
#include "oracles.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

using namespace barker;
using namespace barker::search;

namespace {

std::vector<std::string> strings(const std::vector<LittlewoodSeq>& v) {
    std::vector<std::string> out;
    for (const auto& s : v) out.push_back(s.to_string());
    return out;
}

// Canonical representatives by brute force: least element of each orbit.
std::vector<std::string> oracle_canonical(int n) {
    std::set<std::string> reps;
    for (const auto& s : oracle::all_barker(n)) {
        auto least = oracle::from_string(s);
        for (const auto& img : oracle::orbit(least)) least = std::min(least, img);
        reps.insert(oracle::to_string(least));
    }
    return {reps.begin(), reps.end()};
}

int oracle_psl(const oracle::Signs& a) {
    const auto c = oracle::autocorr(a);
    long long best = 0;
    for (std::size_t k = 1; k < c.size(); ++k) best = std::max(best, c[k] < 0 ? -c[k] : c[k]);
    return static_cast<int>(best);
}

void same_report(const SearchReport& a, const SearchReport& b) {
    CHECK(a.n == b.n);
    CHECK(a.mode == b.mode);
    CHECK(a.canonical == b.canonical);
    CHECK(a.found == b.found);
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.prune_stats == b.prune_stats);
    CHECK(a.to_json() == b.to_json());
}

}  // namespace

TEST_CASE("pack and unpack") {
    const auto s = parse_sequence("++-");
    CHECK(pack(s) == 0b110);
    CHECK(unpack(0b110, 3) == s);
    CHECK(unpack(0, 2) == parse_sequence("--"));
    for (Word w = 0; w < 64; ++w) CHECK(pack(unpack(w, 6)) == w);
    CHECK(is_barker_word(pack(parse_sequence("+++++--++-+-+")), 13));
    CHECK_FALSE(is_barker_word(0b111, 3));
}

TEST_CASE("word helpers agree with the oracle") {
    for (int n = 1; n <= 10; ++n) {
        for (Word w = 0; w < (Word{1} << n); ++w) {
            const auto a = oracle::from_bits(w, n);
            REQUIRE(is_barker_word(w, n) == oracle::barker(a));
            REQUIRE(psl_word(w, n, n) == oracle_psl(a));
            auto least = a;
            for (const auto& img : oracle::orbit(a)) least = std::min(least, img);
            REQUIRE(unpack(canonical_word(w, n), n).to_string() == oracle::to_string(least));
        }
    }
}

TEST_CASE("exhaustive search matches brute force") {
    for (int n = 1; n <= 16; ++n) {
        CAPTURE(n);
        SearchOptions raw;
        raw.canonical = false;
        const auto all = exhaustive_search(n, raw);
        CHECK(strings(all.found) == oracle::all_barker(n));
        CHECK(all.nodes_explored == (std::uint64_t{1} << n));

        const auto canon = exhaustive_search(n);
        CHECK(strings(canon.found) == oracle_canonical(n));
    }
}

TEST_CASE("canonical representatives") {
    const std::vector<int> lengths{1, 2, 3, 4, 5, 7, 11, 13};
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        const auto rep = exhaustive_search(lengths[i]);
        REQUIRE(rep.found.size() == 1);
        CHECK(rep.found[0].to_string() == oracle::canonical_barker()[i]);
    }
    CHECK(exhaustive_search(6).found.empty());
    CHECK(exhaustive_search(14).found.empty());
}

TEST_CASE("pruned search matches exhaustive search on odd n") {
    for (int n = 1; n <= 21; n += 2) {
        CAPTURE(n);
        for (bool canonical : {true, false}) {
            SearchOptions opts;
            opts.canonical = canonical;
            const auto pr = pruned_search(n, RuleSet::all(), opts);
            const auto ex = exhaustive_search(n, opts);
            CHECK(pr.found == ex.found);
            CHECK(pr.mode == Mode::Pruned);
        }
    }
}

TEST_CASE("every rule subset finds the same sequences") {
    const auto expect = exhaustive_search(13, {false, 0, 30, -1}).found;
    for (int mask = 0; mask < 16; ++mask) {
        const RuleSet rules{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0, (mask & 8) != 0};
        CAPTURE(mask);
        SearchOptions opts;
        opts.canonical = false;
        const auto rep = pruned_search(13, rules, opts);
        CHECK(rep.found == expect);
        CHECK(rep.rules == rules);
        same_report(rep, reference::pruned_search(13, rules, opts));
        if (!rules.skew_fix) CHECK(rep.prune_stats.skew_fix == 0);
        if (!rules.partial_bound) CHECK(rep.prune_stats.partial_bound == 0);
    }
}

TEST_CASE("pruning visits fewer nodes") {
    const auto rep = pruned_search(21);
    CHECK(rep.found.empty());
    CHECK(rep.nodes_explored < (std::uint64_t{1} << 21));
    const auto none = pruned_search(21, RuleSet::none());
    CHECK(rep.nodes_explored < none.nodes_explored);
}

TEST_CASE("parallel kernels equal the serial reference") {
    for (int n = 1; n <= 17; ++n) {
        CAPTURE(n);
        for (bool canonical : {true, false}) {
            SearchOptions opts;
            opts.canonical = canonical;
            same_report(exhaustive_search(n, opts), reference::exhaustive_search(n, opts));
            if (n % 2) same_report(pruned_search(n, RuleSet::all(), opts), reference::pruned_search(n, RuleSet::all(), opts));
        }
        const auto a = psl_search(n);
        const auto b = reference::psl_search(n);
        CHECK(a.min_psl == b.min_psl);
        CHECK(a.witnesses == b.witnesses);
    }
    for (int n : {23, 25}) same_report(pruned_search(n), reference::pruned_search(n));
}

TEST_CASE("results do not depend on worker count or shard width") {
    const auto base = pruned_search(25);
    for (int workers : {1, 2, 3, 8}) {
        for (int width : {-1, 0, 1, 3, 6}) {
            SearchOptions opts;
            opts.workers = workers;
            opts.shard_width = width;
            CAPTURE(workers);
            CAPTURE(width);
            same_report(pruned_search(25, RuleSet::all(), opts), base);
            same_report(exhaustive_search(15, opts), exhaustive_search(15));
        }
    }
}

TEST_CASE("search errors") {
    CHECK_THROWS_AS(exhaustive_search(0), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_search(31), std::out_of_range);
    CHECK_THROWS_AS(pruned_search(31), std::out_of_range);
    CHECK_THROWS_AS(pruned_search(12), std::domain_error);
    SearchOptions high;
    high.ceiling = 41;
    CHECK_THROWS_AS(exhaustive_search(41, high), std::out_of_range);
    high.ceiling = 65;
    CHECK_THROWS_AS(pruned_search(65, RuleSet::all(), high), std::out_of_range);
    CHECK_THROWS_AS(RuleSet::parse("skew_fix,bogus"), std::invalid_argument);
}

TEST_CASE("rule parsing") {
    CHECK(RuleSet::parse("all") == RuleSet::all());
    CHECK(RuleSet::parse("none") == RuleSet::none());
    const auto r = RuleSet::parse("skew_fix,partial_bound");
    CHECK(r.skew_fix);
    CHECK_FALSE(r.even_lag_value);
    CHECK_FALSE(r.odd_lag_mod4);
    CHECK(r.partial_bound);
    CHECK(r.names() == std::vector<std::string>{"skew_fix", "partial_bound"});
}

TEST_CASE("minimum peak sidelobe") {
    CHECK(psl_search(13).min_psl == 1);
    CHECK(psl_search(6).min_psl == 2);
    CHECK(psl_search(1).min_psl == 0);
    for (int n = 2; n <= 14; ++n) {
        int best = n;
        for (Word w = 0; w < (Word{1} << n); ++w) best = std::min(best, oracle_psl(oracle::from_bits(w, n)));
        const auto res = psl_search(n);
        CHECK(res.min_psl == best);
        for (const auto& s : res.witnesses) {
            CHECK(canonicalize(s) == s);
            CHECK(autocorrelation(s).peak_sidelobe() == static_cast<std::int64_t>(best));
        }
    }
    CHECK_THROWS_AS(psl_search(31), std::out_of_range);
}

TEST_CASE("range scan") {
    const auto rows = range_scan(1, 14, ScanMode::Auto);
    REQUIRE(rows.size() == 14);
    const std::set<int> barker_lengths{1, 2, 3, 4, 5, 7, 11, 13};
    for (const auto& r : rows) {
        CAPTURE(r.n);
        CHECK(r.barker_count == (barker_lengths.count(r.n) ? 1u : 0u));
        CHECK(r.example.has_value() == (r.barker_count > 0));
        CHECK(r.mode == (r.n % 2 ? Mode::Pruned : Mode::Exhaustive));
    }
    const auto ex = range_scan(5, 5, ScanMode::Exhaustive);
    REQUIRE(ex.size() == 1);
    CHECK(ex[0].mode == Mode::Exhaustive);
    CHECK(ex[0].example->to_string() == "---+-");

    for (const auto& r : range_scan(14, 21, ScanMode::Pruned)) CHECK(r.barker_count == 0);

    CHECK_THROWS_AS(range_scan(5, 4, ScanMode::Auto), std::invalid_argument);
    CHECK_THROWS_AS(range_scan(0, 4, ScanMode::Auto), std::invalid_argument);
    CHECK_THROWS_AS(range_scan(29, 31, ScanMode::Auto), std::out_of_range);
}

TEST_CASE("serialization") {
    const auto rep = exhaustive_search(13);
    const auto j = nlohmann::json::parse(rep.to_json());
    CHECK(j["n"] == 13);
    CHECK(j["mode"] == "exhaustive");
    CHECK(j["count"] == 1);
    CHECK(j["found"][0] == "-----++--+-+-");
    CHECK_FALSE(j.contains("wall_time_s"));
    CHECK(nlohmann::json::parse(rep.to_json(true)).contains("wall_time_s"));
    // Machine output without timing is byte-stable.
    CHECK(exhaustive_search(13).to_json() == rep.to_json());
    CHECK(rep.to_csv().rfind("n,mode,canonical,count,nodes_explored\n", 0) == 0);

    const auto rows = range_scan(3, 4, ScanMode::Auto);
    const auto sj = nlohmann::json::parse(scan_to_json(rows));
    CHECK(sj.size() == 2);
    CHECK(sj[0]["example"] == "--+");
    CHECK(scan_to_csv(rows) == "n,mode,barker_count,example\n3,pruned,1,--+\n4,exhaustive,1,---+\n");

    const auto pj = nlohmann::json::parse(psl_search(6).to_json());
    CHECK(pj["min_psl"] == 2);
}
