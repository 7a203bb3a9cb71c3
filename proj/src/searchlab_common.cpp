#include "barker/searchlab.hpp"

#include <json.hpp>

#include <bit>
#include <sstream>
#include <stdexcept>

namespace barker::search {

namespace {

Word low_mask(int bits) { return bits >= 64 ? ~Word{0} : (Word{1} << bits) - 1; }

Word reverse_bits(Word w, int n) {
    Word r = 0;
    for (int i = 0; i < n; ++i) {
        r = (r << 1) | (w & 1u);
        w >>= 1;
    }
    return r;
}

// Bits of a_j for even j, which alternating negation flips.
Word alternating_mask(int n) {
    Word mask = 0;
    for (int j = 2; j <= n; j += 2) mask |= Word{1} << (n - j);
    return mask;
}

nlohmann::json seq_list(const std::vector<LittlewoodSeq>& seqs) {
    auto arr = nlohmann::json::array();
    for (const auto& s : seqs) arr.push_back(s.to_string());
    return arr;
}

}  // namespace

Word pack(const LittlewoodSeq& seq) {
    if (seq.size() > 64) throw std::invalid_argument("pack: length exceeds 64");
    Word w = 0;
    for (auto x : seq.entries()) w = (w << 1) | (x > 0 ? 1u : 0u);
    return w;
}

LittlewoodSeq unpack(Word w, int n) {
    std::vector<Sign> entries(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) entries[static_cast<std::size_t>(j - 1)] = ((w >> (n - j)) & 1u) ? 1 : -1;
    return LittlewoodSeq(std::move(entries));
}

bool is_barker_word(Word w, int n) {
    // Short lags have the most terms; test the cheap long lags first.
    for (int k = n - 2; k >= 1; --k) {
        const int terms = n - k;
        const int disagree = std::popcount((w ^ (w >> k)) & low_mask(terms));
        const int c = terms - 2 * disagree;
        if (c > 1 || c < -1) return false;
    }
    return true;
}

int psl_word(Word w, int n, int cap) {
    int peak = 0;
    for (int k = n - 1; k >= 1; --k) {
        const int terms = n - k;
        const int c = terms - 2 * std::popcount((w ^ (w >> k)) & low_mask(terms));
        const int mag = c < 0 ? -c : c;
        if (mag > peak) {
            peak = mag;
            if (peak > cap) return peak;
        }
    }
    return peak;
}

Word canonical_word(Word w, int n) {
    const Word mask = low_mask(n);
    const Word alt = alternating_mask(n);
    Word best = w;
    for (Word base : {w, reverse_bits(w, n)}) {
        for (Word img : {base, base ^ alt}) {
            best = std::min({best, img, ~img & mask});
        }
    }
    return best;
}

std::string mode_name(Mode mode) { return mode == Mode::Exhaustive ? "exhaustive" : "pruned"; }

RuleSet RuleSet::parse(const std::string& text) {
    if (text == "all") return all();
    if (text == "none" || text.empty()) return none();
    RuleSet rules = none();
    std::stringstream ss(text);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name == "skew_fix") rules.skew_fix = true;
        else if (name == "even_lag_value") rules.even_lag_value = true;
        else if (name == "odd_lag_mod4") rules.odd_lag_mod4 = true;
        else if (name == "partial_bound") rules.partial_bound = true;
        else throw std::invalid_argument("unknown pruning rule '" + name + "'");
    }
    return rules;
}

std::vector<std::string> RuleSet::names() const {
    std::vector<std::string> out;
    if (skew_fix) out.emplace_back("skew_fix");
    if (even_lag_value) out.emplace_back("even_lag_value");
    if (odd_lag_mod4) out.emplace_back("odd_lag_mod4");
    if (partial_bound) out.emplace_back("partial_bound");
    return out;
}

PruneStats& PruneStats::operator+=(const PruneStats& o) {
    skew_fix += o.skew_fix;
    even_lag_value += o.even_lag_value;
    odd_lag_mod4 += o.odd_lag_mod4;
    partial_bound += o.partial_bound;
    leaf_reject += o.leaf_reject;
    return *this;
}

std::string SearchReport::to_json(bool with_timing) const {
    nlohmann::json j;
    j["n"] = n;
    j["mode"] = mode_name(mode);
    j["canonical"] = canonical;
    j["rules"] = rules.names();
    j["count"] = found.size();
    j["found"] = seq_list(found);
    j["nodes_explored"] = nodes_explored;
    j["prune_stats"] = {{"skew_fix", prune_stats.skew_fix},
                        {"even_lag_value", prune_stats.even_lag_value},
                        {"odd_lag_mod4", prune_stats.odd_lag_mod4},
                        {"partial_bound", prune_stats.partial_bound},
                        {"leaf_reject", prune_stats.leaf_reject}};
    if (with_timing) j["wall_time_s"] = wall_time_s;
    return j.dump();
}

std::string SearchReport::to_csv(bool with_timing) const {
    std::ostringstream os;
    os << "n,mode,canonical,count,nodes_explored" << (with_timing ? ",wall_time_s" : "") << '\n';
    os << n << ',' << mode_name(mode) << ',' << (canonical ? "true" : "false") << ',' << found.size() << ','
       << nodes_explored;
    if (with_timing) os << ',' << wall_time_s;
    os << '\n';
    return os.str();
}

std::string scan_to_json(const std::vector<ScanRow>& rows, bool with_timing) {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["n"] = r.n;
        j["mode"] = mode_name(r.mode);
        j["barker_count"] = r.barker_count;
        j["example"] = r.example ? nlohmann::json(r.example->to_string()) : nlohmann::json(nullptr);
        if (with_timing) j["time_s"] = r.time_s;
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

std::string scan_to_csv(const std::vector<ScanRow>& rows, bool with_timing) {
    std::ostringstream os;
    os << "n,mode,barker_count,example" << (with_timing ? ",time_s" : "") << '\n';
    for (const auto& r : rows) {
        os << r.n << ',' << mode_name(r.mode) << ',' << r.barker_count << ','
           << (r.example ? r.example->to_string() : "");
        if (with_timing) os << ',' << r.time_s;
        os << '\n';
    }
    return os.str();
}

std::string PslResult::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["min_psl"] = min_psl;
    j["witnesses"] = seq_list(witnesses);
    return j.dump();
}

}  // namespace barker::search
