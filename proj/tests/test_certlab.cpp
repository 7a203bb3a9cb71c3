#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "barker/certlab.hpp"
#include "oracles.hpp"

#include <json.hpp>

using namespace barker;
using namespace barker::cert;

namespace {

LittlewoodSeq seq(const std::string& s) { return parse_sequence(s); }

std::int64_t block(std::int64_t i, std::int64_t p) { return (i - 1) / p; }

// Expected case from the (u, r, p) table, written out independently.
std::string expected_tag(std::int64_t n, std::int64_t p) {
    const auto u = n / p, r = n % p;
    if (u >= 3 && p >= 5) return "CASE1";
    if (u >= 3 && p == 3) return "CASE2";
    if (u == 2 && p >= 5 && r >= 4) return "CASE3";
    if (u == 2 && p >= 7 && r <= 3) return "CASE4";
    if (u == 1 && p >= 7) return "CASE5";
    return "RESIDUAL";
}

}  // namespace

TEST_CASE("prefix_run") {
    CHECK(prefix_run(seq("+++-+")) == 3);
    CHECK(prefix_run(seq("---+")) == 3);
    CHECK(prefix_run(seq("+-")) == 1);
    CHECK(prefix_run(seq("+++++")) == 5);
}

TEST_CASE("star swap normalization") {
    const auto a = star_swap_normalize(seq("---+-"));
    CHECK(a.seq == seq("+++-+"));
    CHECK_FALSE(a.swap_applied);

    // Reversal of the length-13 sequence starts with a run of 1.
    const auto b = star_swap_normalize(seq("+++++--++-+-+").reversed());
    CHECK(b.swap_applied);
    CHECK(b.seq.a(1) == 1);
    CHECK(prefix_run(b.seq) == 5);

    CHECK_THROWS_AS(star_swap_normalize(seq("++-")), std::domain_error);
    CHECK_THROWS_AS(star_swap_normalize(seq("+-+")), std::domain_error);
    CHECK_THROWS_AS(star_swap_normalize(seq("++++")), std::domain_error);
}

TEST_CASE("block lemma on odd Barker sequences") {
    for (int n : {5, 7, 11, 13}) {
        for (const auto& s : oracle::all_barker(n)) {
            CAPTURE(s);
            const auto rep = lemma3_block_check(seq(s));
            CHECK(rep.ok());
            CHECK(rep.p % 2 == 1);
            CHECK(rep.bound == n - rep.p - 1);
        }
    }
    const auto r13 = lemma3_block_check(seq("+++++--++-+-+"));
    CHECK(r13.p == 5);
    CHECK(r13.bound == 7);
}

TEST_CASE("block lemma reports the first violation") {
    // p = 3, bound = 7; a_4 and a_5 share the block {4,5,6} but differ.
    const auto rep = lemma3_block_check(seq("+++-+-----+"));
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violation->first == 4);
    CHECK(rep.violation->second == 5);
}

TEST_CASE("residue replay") {
    const auto r13 = lemma12_residue_replay(seq("+++++--++-+-+"));
    CHECK(r13.ok());
    CHECK(r13.p == 5);
    CHECK(r13.range_end == 6);
    CHECK(r13.residues == std::vector<std::uint64_t>(6, 4));
    REQUIRE(r13.steps.size() == 2);
    CHECK(r13.steps[0].mu == 2);
    CHECK(r13.steps[1].mu == 4);
    CHECK(r13.steps[1].divisible_case);  // 5 = 1 * p
    for (const auto& st : r13.steps) {
        CHECK(st.s_mu == -1);
        CHECK(st.s_shifted == -1);
        CHECK(st.relation_residue == 0);
    }

    const auto r11 = lemma12_residue_replay(seq("+++---+--+-"));
    CHECK(r11.ok());
    CHECK(r11.p == 3);
    CHECK(r11.residues == std::vector<std::uint64_t>(6, 2));

    const auto r5 = lemma12_residue_replay(seq("+++-+"));
    CHECK(r5.range_end == 0);
    CHECK(r5.residues.empty());
    CHECK(r5.ok());

    for (int n : {7, 11, 13}) {
        for (const auto& s : oracle::all_barker(n)) {
            CAPTURE(s);
            CHECK(lemma12_residue_replay(seq(s)).ok());
        }
    }
}

TEST_CASE("residue replay fails off the Barker hypothesis") {
    // Leading run 3 but not Barker.
    const auto rep = lemma12_residue_replay(seq("+++-++-+++-++"));
    CHECK_FALSE(rep.ok());
}

TEST_CASE("case tags") {
    for (auto id : {CaseId::EvenPReject, CaseId::Case1, CaseId::Case2, CaseId::Case3, CaseId::Case4,
                    CaseId::Case5, CaseId::Residual}) {
        CHECK(case_from_tag(case_tag(id)) == id);
    }
    CHECK_FALSE(case_from_tag("CASE6"));
}

TEST_CASE("case classification examples") {
    const auto c2 = case_classify(15, 3);
    CHECK(c2.case_id == CaseId::Case2);
    CHECK(c2.u == 5);
    CHECK(c2.r == 0);
    const auto& w2 = std::get<IndexWitness>(c2.witness);
    CHECK(w2.lower == std::array<std::int64_t, 3>{7, 8, 9});
    CHECK(w2.upper == std::array<std::int64_t, 3>{9, 8, 7});
    CHECK(w2.bound == 11);

    const auto c3 = case_classify(19, 7);
    CHECK(c3.case_id == CaseId::Case3);
    CHECK(c3.u == 2);
    CHECK(c3.r == 5);
    CHECK(std::get<IndexWitness>(c3.witness).lower_value == -1);

    const auto c1 = case_classify(21, 7);
    CHECK(c1.case_id == CaseId::Case1);

    const auto c4 = case_classify(17, 7);
    CHECK(c4.case_id == CaseId::Case4);
    const auto& w4 = std::get<InequalityWitness>(c4.witness);
    CHECK(w4.lhs == 33);
    CHECK(w4.two_n_minus_1 == 33);
    CHECK(w4.quadratic == 16);
    CHECK(w4.note == kCase4Note);

    const auto c5 = case_classify(15, 9);
    CHECK(c5.case_id == CaseId::Case5);
    const auto& w5 = std::get<InequalityWitness>(c5.witness);
    CHECK(w5.quadratic == 31);
    CHECK(w5.lhs == 33);
    CHECK(w5.two_n_minus_1 == 29);
    CHECK(w5.note.empty());

    CHECK_THROWS_AS(case_classify(13, 3), std::domain_error);
    CHECK_THROWS_AS(case_classify(16, 3), std::domain_error);
    CHECK_THROWS_AS(case_classify(15, 4), std::invalid_argument);
    CHECK_THROWS_AS(case_classify(15, 1), std::invalid_argument);
    CHECK_THROWS_AS(case_classify(15, 17), std::invalid_argument);
}

TEST_CASE("classification is total and witnesses are sound for n up to 1001") {
    for (std::int64_t n = 15; n <= 1001; n += 2) {
        for (std::int64_t p = 3; p <= n; p += 2) {
            const auto rec = case_classify(n, p);
            REQUIRE(std::string(case_tag(rec.case_id)) == expected_tag(n, p));
            REQUIRE(rec.case_id != CaseId::Residual);
            CHECK(rec.u * p + rec.r == n);
            if (const auto* w = std::get_if<IndexWitness>(&rec.witness)) {
                CHECK(w->bound == n - p - 1);
                for (std::size_t i = 0; i < 3; ++i) {
                    CHECK(w->upper[i] == n + 1 - w->lower[i]);
                    CHECK(w->lower[i] <= w->bound);
                    CHECK(block(w->lower[i], p) == w->lower_block);
                }
                CHECK(w->lower[1] == w->lower[0] + 1);
                CHECK(w->lower[2] == w->lower[1] + 1);
                CHECK(w->pair[0] == w->pair[1] + 1);
                CHECK(w->pair[0] <= w->bound);
                CHECK(block(w->pair[0], p) == block(w->pair[1], p));
                CHECK(block(w->pair[0], p) == w->pair_block);
            } else {
                const auto& q = std::get<InequalityWitness>(rec.witness);
                CHECK(q.quadratic > 0);
                CHECK(q.lhs >= q.two_n_minus_1);
            }
        }
    }
}

TEST_CASE("certificates") {
    const auto c15 = nonexistence_certificate(15);
    CHECK(c15.records.size() == 7);
    CHECK(c15.conclusion == kConclusion);
    CHECK(verify_certificate(c15));
    CHECK(certificate_diagnostic(c15).empty());

    const auto big = nonexistence_certificate(10001);
    CHECK(big.records.size() == 5000);
    CHECK(verify_certificate(big));

    CHECK_THROWS_AS(nonexistence_certificate(13), std::domain_error);
    CHECK_THROWS_AS(nonexistence_certificate(16), std::domain_error);
}

TEST_CASE("verifier rejects tampered certificates") {
    const auto good = nonexistence_certificate(41);
    REQUIRE(verify_certificate(good));

    auto reject = [](const NonexistenceCertificate& c) {
        CHECK_FALSE(verify_certificate(c));
        CHECK_FALSE(certificate_diagnostic(c).empty());
    };

    for (std::size_t i = 0; i < good.records.size(); ++i) {
        CAPTURE(i);
        auto c = good;
        c.records[i].u += 1;
        reject(c);

        c = good;
        c.records[i].case_id = c.records[i].case_id == CaseId::Case5 ? CaseId::Case4 : CaseId::Case5;
        reject(c);

        c = good;
        c.records[i].case_id = CaseId::Residual;
        c.records[i].witness = ResidualWitness{13, c.records[i].u * c.records[i].p + c.records[i].r};
        reject(c);

        c = good;
        if (auto* w = std::get_if<IndexWitness>(&c.records[i].witness)) {
            w->pair[0] += 1;
            w->pair[1] += 1;
        } else {
            std::get<InequalityWitness>(c.records[i].witness).quadratic += 2;
        }
        reject(c);

        c = good;
        c.records.erase(c.records.begin() + static_cast<std::ptrdiff_t>(i));
        reject(c);
    }

    auto c = good;
    c.records.push_back(c.records.front());
    reject(c);
    c = good;
    c.conclusion = "maybe";
    reject(c);
    c = good;
    c.even_p_exclusion.clear();
    reject(c);
    c = good;
    c.n = 43;
    reject(c);
}

TEST_CASE("certificate json round trip") {
    for (std::int64_t n : {15, 17, 19, 101, 1001}) {
        const auto cert = nonexistence_certificate(n);
        const auto text = to_json(cert);
        CHECK(certificate_from_json(text) == cert);
        CHECK(certificate_from_json(to_json(cert, 2)) == cert);
    }
}

TEST_CASE("certificate json rejects malformed input") {
    const auto text = to_json(nonexistence_certificate(15));
    auto j = nlohmann::json::parse(text);

    CHECK_THROWS_AS(certificate_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_json("[]"), std::invalid_argument);

    auto extra = j;
    extra["extra"] = 1;
    CHECK_THROWS_AS(certificate_from_json(extra.dump()), std::invalid_argument);

    auto missing = j;
    missing.erase("conclusion");
    CHECK_THROWS_AS(certificate_from_json(missing.dump()), std::invalid_argument);

    auto even = j;
    even["records"][0]["case"] = "EVEN_P_REJECT";
    CHECK_THROWS_AS(certificate_from_json(even.dump()), std::invalid_argument);

    auto unknown = j;
    unknown["records"][0]["case"] = "CASE9";
    CHECK_THROWS_AS(certificate_from_json(unknown.dump()), std::invalid_argument);

    auto wrong_type = j;
    wrong_type["records"][0]["p"] = "3";
    CHECK_THROWS_AS(certificate_from_json(wrong_type.dump()), std::invalid_argument);

    // Well-formed but wrong content parses and then fails verification.
    auto tampered = j;
    tampered["records"][0]["u"] = 4;
    CHECK_FALSE(verify_certificate(certificate_from_json(tampered.dump())));
}

TEST_CASE("certify_range") {
    const auto rows = certify_range(15, 301, 2);
    REQUIRE(rows.size() == 144);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == 15 + 2 * static_cast<std::int64_t>(i));
        CHECK(rows[i].records == static_cast<std::size_t>((rows[i].n - 1) / 2));
        CHECK(rows[i].valid);
    }
    CHECK(certify_range(14, 15).size() == 1);
    CHECK_THROWS_AS(certify_range(13, 21), std::domain_error);
    CHECK_THROWS_AS(certify_range(21, 15), std::invalid_argument);
}
