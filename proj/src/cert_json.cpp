#include "barker/certlab.hpp"

#include <json.hpp>

#include <set>
#include <stdexcept>

namespace barker::cert {

using nlohmann::json;

namespace {

json witness_json(const CaseRecord& rec) {
    return std::visit(
        [](const auto& w) -> json {
            using W = std::decay_t<decltype(w)>;
            json j;
            if constexpr (std::is_same_v<W, IndexWitness>) {
                j["m"] = w.m;
                j["lower"] = w.lower;
                j["upper"] = w.upper;
                j["bound"] = w.bound;
                j["lower_block"] = w.lower_block;
                j["pair"] = w.pair;
                j["pair_block"] = w.pair_block;
                if (w.lower_value) j["lower_value"] = *w.lower_value;
            } else if constexpr (std::is_same_v<W, InequalityWitness>) {
                j["lhs"] = w.lhs;
                j["two_n_minus_1"] = w.two_n_minus_1;
                j["quadratic"] = w.quadratic;
                if (!w.note.empty()) j["note"] = w.note;
            } else {
                j["max_n"] = w.max_n;
                j["up_plus_r"] = w.up_plus_r;
            }
            return j;
        },
        rec.witness);
}

void require_keys(const json& j, const std::set<std::string>& required, const std::set<std::string>& optional,
                  const char* what) {
    if (!j.is_object()) throw std::invalid_argument(std::string(what) + ": expected object");
    for (const auto& key : required) {
        if (!j.contains(key)) throw std::invalid_argument(std::string(what) + ": missing field '" + key + "'");
    }
    for (const auto& [key, _] : j.items()) {
        if (!required.count(key) && !optional.count(key)) {
            throw std::invalid_argument(std::string(what) + ": unknown field '" + key + "'");
        }
    }
}

std::int64_t get_int(const json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw std::invalid_argument(std::string("field '") + key + "' must be an integer");
    return v.get<std::int64_t>();
}

std::string get_string(const json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

template <std::size_t N>
std::array<std::int64_t, N> get_int_array(const json& j, const char* key) {
    const auto& v = j.at(key);
    if (!v.is_array() || v.size() != N) {
        throw std::invalid_argument(std::string("field '") + key + "' must be an array of " + std::to_string(N));
    }
    std::array<std::int64_t, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        if (!v[i].is_number_integer()) throw std::invalid_argument(std::string("field '") + key + "' must hold integers");
        out[i] = v[i].get<std::int64_t>();
    }
    return out;
}

Witness parse_witness(CaseId id, const json& j) {
    switch (id) {
        case CaseId::Case1:
        case CaseId::Case2:
        case CaseId::Case3: {
            require_keys(j, {"m", "lower", "upper", "bound", "lower_block", "pair", "pair_block"}, {"lower_value"},
                         "witness");
            IndexWitness w;
            w.m = get_int(j, "m");
            w.lower = get_int_array<3>(j, "lower");
            w.upper = get_int_array<3>(j, "upper");
            w.bound = get_int(j, "bound");
            w.lower_block = get_int(j, "lower_block");
            w.pair = get_int_array<2>(j, "pair");
            w.pair_block = get_int(j, "pair_block");
            if (j.contains("lower_value")) w.lower_value = get_int(j, "lower_value");
            return w;
        }
        case CaseId::Case4:
        case CaseId::Case5: {
            require_keys(j, {"lhs", "two_n_minus_1", "quadratic"}, {"note"}, "witness");
            InequalityWitness w;
            w.lhs = get_int(j, "lhs");
            w.two_n_minus_1 = get_int(j, "two_n_minus_1");
            w.quadratic = get_int(j, "quadratic");
            if (j.contains("note")) w.note = get_string(j, "note");
            return w;
        }
        case CaseId::Residual: {
            require_keys(j, {"max_n", "up_plus_r"}, {}, "witness");
            return ResidualWitness{get_int(j, "max_n"), get_int(j, "up_plus_r")};
        }
        case CaseId::EvenPReject:
            break;
    }
    throw std::invalid_argument("witness: even p never appears as a record");
}

}  // namespace

std::string to_json(const NonexistenceCertificate& cert, int indent) {
    json j;
    j["n"] = cert.n;
    j["even_p_exclusion"] = cert.even_p_exclusion;
    auto records = json::array();
    for (const auto& rec : cert.records) {
        json r;
        r["p"] = rec.p;
        r["u"] = rec.u;
        r["r"] = rec.r;
        r["case"] = std::string(case_tag(rec.case_id));
        r["witness"] = witness_json(rec);
        records.push_back(std::move(r));
    }
    j["records"] = std::move(records);
    j["conclusion"] = cert.conclusion;
    return j.dump(indent);
}

NonexistenceCertificate certificate_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("certificate: invalid JSON: ") + e.what());
    }
    require_keys(j, {"n", "even_p_exclusion", "records", "conclusion"}, {}, "certificate");
    NonexistenceCertificate cert;
    cert.n = get_int(j, "n");
    cert.even_p_exclusion = get_string(j, "even_p_exclusion");
    cert.conclusion = get_string(j, "conclusion");
    const auto& records = j.at("records");
    if (!records.is_array()) throw std::invalid_argument("certificate: 'records' must be an array");
    cert.records.reserve(records.size());
    for (const auto& r : records) {
        require_keys(r, {"p", "u", "r", "case", "witness"}, {}, "record");
        CaseRecord rec;
        rec.p = get_int(r, "p");
        rec.u = get_int(r, "u");
        rec.r = get_int(r, "r");
        const auto tag = get_string(r, "case");
        const auto id = case_from_tag(tag);
        if (!id) throw std::invalid_argument("record: unknown case tag '" + tag + "'");
        rec.case_id = *id;
        rec.witness = parse_witness(*id, r.at("witness"));
        cert.records.push_back(std::move(rec));
    }
    return cert;
}

}  // namespace barker::cert
