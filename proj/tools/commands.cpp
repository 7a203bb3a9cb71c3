#include "commands.hpp"

#include "barker/certlab.hpp"
#include "barker/newton.hpp"
#include "barker/polycore.hpp"
#include "barker/searchlab.hpp"
#include "barker/seqcore.hpp"

#include <json.hpp>

#include <filesystem>
#include <iomanip>
#include <sstream>

namespace barker::cli {

namespace {

using json = nlohmann::ordered_json;

LittlewoodSeq read_sequence(RunContext& ctx, const std::string& input) {
    const auto text = ctx.read_input(input);
    try {
        return parse_sequence(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string big_str(const BigInt& v) { return v.str(); }

std::string rational_str(const Rational& r) {
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string seq_or_empty(const std::optional<LittlewoodSeq>& s) { return s ? s->to_string() : std::string(); }

// --- check ---------------------------------------------------------------

enum class Status { Pass, Fail, NotApplicable };

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::NotApplicable: return "n/a";
    }
    return "?";
}

struct IdentityRow {
    std::string name;
    Status status;
    std::string detail;
};

Status of(bool ok) { return ok ? Status::Pass : Status::Fail; }

std::vector<IdentityRow> identity_suite(const LittlewoodSeq& s, bool barker) {
    const std::size_t n = s.size();
    std::vector<IdentityRow> rows;

    rows.push_back({"sidelobe bound |c_k| <= 1", of(barker), ""});

    bool parity = true;
    for (std::size_t k = 0; k < n; ++k) parity = parity && parity_identity_check(s, k);
    rows.push_back({"parity identity", of(parity), ""});
    rows.push_back({"mod-4 fold", n >= 2 ? of(mod4_fold_check(s)) : Status::NotApplicable, n >= 2 ? "" : "needs n >= 2"});

    const bool odd_barker = barker && n % 2 == 1 && n >= 3;
    const std::string why_not = n % 2 == 0 ? "even length" : (n < 3 ? "n < 3" : "not Barker");
    auto conditional = [&](const std::string& name, auto&& test, bool applicable, const std::string& reason) {
        if (!odd_barker || !applicable) {
            rows.push_back({name, Status::NotApplicable, odd_barker ? reason : why_not});
            return;
        }
        rows.push_back({name, of(test()), ""});
    };

    const std::size_t m = (n - 1) / 2;
    conditional("odd-length lag structure", [&] { return barker_odd_structure(s).ok; }, true, "");
    conditional("skew symmetry", [&] { return skew_check(s); }, true, "");
    conditional("alternating partial sums", [&] { return eq3_check(s); }, true, "");
    conditional("adjacent products", [&] { return eq4_check(s); }, true, "");
    conditional("Q coefficient structure", [&] { return q_structure_check(s).ok(); }, true, "");
    conditional("P* = (-1)^m P(-z)", [&] { return q_structure_check(s).star_equals_signed_p_neg; }, true, "");
    conditional("power sums S_2k = -2", [&] { return verify_S_pattern(s).ok(); }, m >= 2, "needs m >= 2");
    conditional("power sums s_2k = -1, s_1 = -1", [&] { return verify_s_pattern(s).ok(); }, m >= 2, "needs m >= 2");
    conditional("prefix-run blocks", [&] { return cert::lemma3_block_check(s).ok(); }, n >= 5, "needs n >= 5");
    conditional("power sum residues mod p", [&] { return cert::lemma12_residue_replay(s).ok(); }, n >= 5, "needs n >= 5");
    return rows;
}

// --- search --------------------------------------------------------------

search::SearchOptions search_options(const RunContext& ctx, const SearchArgs& args) {
    search::SearchOptions opts;
    opts.canonical = !args.raw;
    opts.workers = ctx.workers;
    opts.ceiling = args.ceiling.value_or(search::kDefaultCeiling);
    opts.shard_width = args.shard_width;
    return opts;
}

search::RuleSet parse_rules(const std::string& text) {
    try {
        return search::RuleSet::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string rules_label(const search::RuleSet& r) {
    if (r == search::RuleSet::all()) return "all";
    if (r == search::RuleSet::none()) return "none";
    std::string out;
    for (const auto& name : r.names()) out += (out.empty() ? "" : ",") + name;
    return out;
}

std::string fixed(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

}  // namespace

int cmd_autocorr(RunContext& ctx, const std::string& input) {
    const auto seq = read_sequence(ctx, input);
    const auto prof = autocorrelation(seq);
    std::string out;
    switch (ctx.format) {
        case Format::Json: out = prof.to_json() + "\n"; break;
        case Format::Csv: out = prof.to_csv(); break;
        case Format::Text: {
            std::ostringstream os;
            for (std::size_t k = 0; k < prof.length(); ++k) os << (k ? " " : "") << prof.c(k);
            out = os.str() + "\n";
        }
    }
    emit(ctx, out);
    return 0;
}

int cmd_check(RunContext& ctx, const std::string& input) {
    const auto seq = read_sequence(ctx, input);
    const auto prof = autocorrelation(seq);
    const bool barker = is_barker(seq);
    const auto rows = identity_suite(seq, barker);
    bool all_ok = true;
    for (const auto& r : rows) all_ok = all_ok && r.status != Status::Fail;

    std::string out;
    if (ctx.format == Format::Json) {
        json j;
        j["sequence"] = seq.to_string();
        j["n"] = seq.size();
        j["barker"] = barker;
        j["psl"] = prof.peak_sidelobe();
        j["merit_factor"] = seq.size() >= 2 ? json(rational_str(merit_factor(seq))) : json(nullptr);
        auto ids = json::array();
        for (const auto& r : rows) {
            json e{{"name", r.name}, {"status", status_name(r.status)}};
            if (!r.detail.empty()) e["detail"] = r.detail;
            ids.push_back(e);
        }
        j["identities"] = ids;
        out = j.dump() + "\n";
    } else if (ctx.format == Format::Csv) {
        out = "identity,status\n";
        for (const auto& r : rows) out += "\"" + r.name + "\"," + status_name(r.status) + "\n";
    } else {
        std::ostringstream os;
        os << "sequence: " << seq.to_string() << "\n"
           << "n: " << seq.size() << "\n"
           << "barker: " << (barker ? "yes" : "no") << "\n"
           << "psl: " << prof.peak_sidelobe() << "\n";
        if (seq.size() >= 2) os << "merit factor: " << rational_str(merit_factor(seq)) << "\n";
        os << "identities:\n";
        for (const auto& r : rows) {
            os << "  " << pad(r.name, 34) << status_name(r.status);
            if (!r.detail.empty()) os << " (" << r.detail << ")";
            os << "\n";
        }
        out = os.str();
    }
    emit(ctx, out);
    return barker && all_ok ? 0 : 1;
}

int cmd_canon(RunContext& ctx, const std::string& input) {
    const auto seq = read_sequence(ctx, input);
    const auto canon = canonicalize(seq);
    std::string out;
    if (ctx.format == Format::Json) {
        json j;
        j["input"] = seq.to_string();
        j["canonical"] = canon.to_string();
        auto orbit = json::array();
        for (const auto& s : symmetry_orbit(seq)) orbit.push_back(s.to_string());
        j["orbit"] = orbit;
        out = j.dump() + "\n";
    } else if (ctx.format == Format::Csv) {
        out = "input,canonical\n" + seq.to_string() + "," + canon.to_string() + "\n";
    } else {
        out = canon.to_string() + "\n";
    }
    emit(ctx, out);
    return 0;
}

int cmd_power_sums(RunContext& ctx, const std::string& input, std::optional<int> count_arg) {
    const auto seq = read_sequence(ctx, input);
    const std::size_t n = seq.size();
    if (count_arg && *count_arg < 1) throw UsageError("power-sums: count must be >= 1");
    const std::size_t count = count_arg ? static_cast<std::size_t>(*count_arg) : std::max<std::size_t>(1, n - 1);

    const auto [monic, negated] = normalize_leading(seq);
    const auto s = power_sums_monic(from_sequence(monic), count);
    std::optional<PowerSumSeries> S;
    if (n % 2 == 1) S = power_sums_q(build_Q(seq), count);

    const bool barker = is_barker(seq);
    const std::size_t m = (n - 1) / 2;
    const bool patterned = barker && n % 2 == 1 && m >= 2;
    // Marked indices: even mu up to 2m - 2 for S and s, plus mu = 1 for s.
    auto in_pattern = [&](std::size_t mu) { return patterned && mu % 2 == 0 && mu <= 2 * m - 2; };
    std::optional<bool> S_ok, s_ok;
    if (patterned) {
        S_ok = verify_S_pattern(seq).ok();
        s_ok = verify_s_pattern(seq).ok();
    }

    std::string out;
    if (ctx.format == Format::Json) {
        json j;
        j["sequence"] = seq.to_string();
        j["n"] = n;
        j["count"] = count;
        j["negated_for_monic"] = negated;
        auto arr = [](const PowerSumSeries& series) {
            auto a = json::array();
            for (const auto& v : series.values()) a.push_back(big_str(v));
            return a;
        };
        j["S"] = S ? arr(*S) : json(nullptr);
        j["s"] = arr(s);
        j["barker"] = barker;
        j["S_pattern"] = S_ok ? json(*S_ok) : json(nullptr);
        j["s_pattern"] = s_ok ? json(*s_ok) : json(nullptr);
        out = j.dump() + "\n";
    } else if (ctx.format == Format::Csv) {
        std::ostringstream os;
        os << "mu,S_mu,s_mu\n";
        for (std::size_t mu = 1; mu <= count; ++mu) os << mu << ',' << (S ? big_str(S->at(mu)) : "") << ',' << big_str(s.at(mu)) << '\n';
        out = os.str();
    } else {
        std::ostringstream os;
        os << "n = " << n << (negated ? " (negated so that P is monic)" : "") << "\n";
        os << pad("mu", 6) << pad("S_mu", 24) << "s_mu\n";
        for (std::size_t mu = 1; mu <= count; ++mu) {
            std::string Scell = S ? big_str(S->at(mu)) : "-";
            std::string scell = big_str(s.at(mu));
            if (in_pattern(mu)) {
                Scell += " *";
                scell += " *";
            } else if (patterned && mu == 1) {
                scell += " *";
            }
            os << pad(std::to_string(mu), 6) << pad(Scell, 24) << scell << "\n";
        }
        if (patterned) {
            os << "* pattern S_2..S_" << 2 * m - 2 << " = -2: " << (*S_ok ? "holds" : "FAILS") << "\n";
            os << "* pattern s_1 = -1, s_2..s_" << 2 * m - 2 << " = -1: " << (*s_ok ? "holds" : "FAILS") << "\n";
        }
        out = os.str();
    }
    emit(ctx, out);
    return 0;
}

int cmd_search(RunContext& ctx, int n, const SearchArgs& args) {
    const auto opts = search_options(ctx, args);
    const auto rules = parse_rules(args.rules);
    bool pruned;
    if (args.mode == "pruned") pruned = true;
    else if (args.mode == "exhaustive") pruned = false;
    else pruned = n % 2 == 1;
    if (pruned && n % 2 == 0) throw UsageError("search: pruned mode requires odd n");

    ctx.progress("searching n = " + std::to_string(n) + " (" + (pruned ? "pruned" : "exhaustive") + ")");
    const auto rep = pruned ? search::pruned_search(n, rules, opts) : search::exhaustive_search(n, opts);

    std::string out;
    if (ctx.format == Format::Json) {
        out = rep.to_json(ctx.timing) + "\n";
    } else if (ctx.format == Format::Csv) {
        out = rep.to_csv(ctx.timing);
    } else {
        std::ostringstream os;
        os << "n = " << n << ", mode = " << search::mode_name(rep.mode) << ", "
           << (rep.canonical ? "canonical" : "all orientations");
        if (pruned) os << ", rules = " << rules_label(rules);
        os << "\n";
        for (const auto& s : rep.found) os << s.to_string() << "\n";
        os << rep.found.size() << " sequence(s), " << rep.nodes_explored << " nodes explored";
        if (ctx.timing) os << ", " << fixed(rep.wall_time_s) << " s";
        os << "\n";
        out = os.str();
    }
    emit(ctx, out);
    return 0;
}

int cmd_scan(RunContext& ctx, int lo, int hi, const SearchArgs& args) {
    auto opts = search_options(ctx, args);
    search::ScanMode mode = search::ScanMode::Auto;
    if (args.mode == "exhaustive") mode = search::ScanMode::Exhaustive;
    else if (args.mode == "pruned") mode = search::ScanMode::Pruned;
    if (lo < 1 || lo > hi) throw UsageError("scan: bad range " + std::to_string(lo) + ".." + std::to_string(hi));
    if (hi > opts.ceiling) {
        throw UsageError("scan: n = " + std::to_string(hi) + " exceeds ceiling " + std::to_string(opts.ceiling) +
                         " (raise it with --ceiling)");
    }

    std::vector<search::ScanRow> rows;
    for (int n = lo; n <= hi; ++n) {
        auto one = search::range_scan(n, n, mode, opts);
        ctx.progress("n = " + std::to_string(n) + ": " + std::to_string(one[0].barker_count) + " found");
        rows.push_back(std::move(one[0]));
    }

    std::string out;
    if (ctx.format == Format::Json) {
        out = search::scan_to_json(rows, ctx.timing) + "\n";
    } else if (ctx.format == Format::Csv) {
        out = search::scan_to_csv(rows, ctx.timing);
    } else {
        std::ostringstream os;
        os << pad("n", 5) << pad("mode", 12) << pad("count", 7) << "example";
        if (ctx.timing) os << "  time_s";
        os << "\n";
        for (const auto& r : rows) {
            os << pad(std::to_string(r.n), 5) << pad(search::mode_name(r.mode), 12) << pad(std::to_string(r.barker_count), 7)
               << seq_or_empty(r.example);
            if (ctx.timing) os << "  " << fixed(r.time_s);
            os << "\n";
        }
        out = os.str();
    }
    emit(ctx, out);
    return 0;
}

int cmd_psl(RunContext& ctx, int n, std::optional<int> ceiling) {
    search::SearchOptions opts;
    opts.workers = ctx.workers;
    opts.ceiling = ceiling.value_or(search::kDefaultCeiling);
    const auto res = search::psl_search(n, opts);
    std::string out;
    if (ctx.format == Format::Json) {
        out = res.to_json() + "\n";
    } else if (ctx.format == Format::Csv) {
        out = "n,min_psl,witness\n";
        for (const auto& w : res.witnesses) out += std::to_string(n) + "," + std::to_string(res.min_psl) + "," + w.to_string() + "\n";
    } else {
        std::ostringstream os;
        os << "n = " << n << ", minimum PSL = " << res.min_psl << ", " << res.witnesses.size() << " canonical witness(es)\n";
        for (const auto& w : res.witnesses) os << w.to_string() << "\n";
        out = os.str();
    }
    emit(ctx, out);
    return 0;
}

int cmd_certificate(RunContext& ctx, const CertificateArgs& args) {
    if (!args.verify_path.empty()) {
        if (args.hi) throw UsageError("certificate: --verify takes at most one length");
        const auto text = ctx.read_file(args.verify_path);
        bool valid = false;
        std::string diag;
        std::optional<long long> n;
        try {
            const auto cert = cert::certificate_from_json(text);
            n = cert.n;
            diag = cert::certificate_diagnostic(cert);
            if (diag.empty() && args.n && *args.n != cert.n) {
                diag = "certificate is for n = " + std::to_string(cert.n) + ", expected " + std::to_string(*args.n);
            }
            valid = diag.empty();
        } catch (const std::invalid_argument& e) {
            diag = std::string("malformed certificate: ") + e.what();
        }
        std::string out;
        if (ctx.format == Format::Json) {
            json j;
            j["file"] = args.verify_path;
            j["n"] = n ? json(*n) : json(nullptr);
            j["valid"] = valid;
            j["diagnostic"] = diag;
            out = j.dump() + "\n";
        } else if (ctx.format == Format::Csv) {
            out = "file,n,valid\n" + args.verify_path + "," + (n ? std::to_string(*n) : "") + "," + (valid ? "true" : "false") + "\n";
        } else {
            out = valid ? "valid certificate for n = " + std::to_string(*n) + "\n" : "invalid certificate: " + diag + "\n";
        }
        emit(ctx, out);
        return valid ? 0 : 1;
    }

    if (!args.n) throw UsageError("certificate: expected a length, a range or --verify FILE");

    if (!args.hi) {
        const auto cert = cert::nonexistence_certificate(*args.n);
        const auto text = cert::to_json(cert, args.indent) + "\n";
        if (!args.dir.empty()) {
            std::filesystem::create_directories(args.dir);
            const auto path = (std::filesystem::path(args.dir) / ("certificate_" + std::to_string(*args.n) + ".json")).string();
            write_file(path, text);
            ctx.extra_outputs.push_back(path);
            emit(ctx, path + "\n");
        } else {
            emit(ctx, text);
        }
        return cert::verify_certificate(cert) ? 0 : 1;
    }

    const long long lo = *args.n, hi = *args.hi;
    if (lo > hi) throw UsageError("certificate: empty range");
    std::vector<cert::RangeSummaryRow> rows;
    if (args.dir.empty()) {
        ctx.progress("certifying odd n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
        rows = cert::certify_range(lo, hi, ctx.workers);
    } else {
        std::filesystem::create_directories(args.dir);
        for (long long n = lo % 2 ? lo : lo + 1; n <= hi; n += 2) {
            const auto cert = cert::nonexistence_certificate(n);
            const auto path = (std::filesystem::path(args.dir) / ("certificate_" + std::to_string(n) + ".json")).string();
            write_file(path, cert::to_json(cert, args.indent) + "\n");
            ctx.extra_outputs.push_back(path);
            rows.push_back({n, cert.records.size(), cert::verify_certificate(cert)});
            ctx.progress("wrote " + path);
        }
    }
    std::size_t invalid = 0;
    for (const auto& r : rows) invalid += r.valid ? 0 : 1;
    ctx.progress(std::to_string(rows.size()) + " certificate(s), " + std::to_string(invalid) + " invalid");

    std::string out;
    if (ctx.format == Format::Json) {
        auto arr = json::array();
        for (const auto& r : rows) arr.push_back({{"n", r.n}, {"records", r.records}, {"valid", r.valid}});
        out = arr.dump() + "\n";
    } else if (ctx.format == Format::Csv) {
        out = "n,records,valid\n";
        for (const auto& r : rows) out += std::to_string(r.n) + "," + std::to_string(r.records) + "," + (r.valid ? "true" : "false") + "\n";
    } else {
        std::ostringstream os;
        os << pad("n", 8) << pad("records", 9) << "valid\n";
        for (const auto& r : rows) os << pad(std::to_string(r.n), 8) << pad(std::to_string(r.records), 9) << (r.valid ? "yes" : "no") << "\n";
        out = os.str();
    }
    emit(ctx, out);
    return invalid == 0 ? 0 : 1;
}

}  // namespace barker::cli
