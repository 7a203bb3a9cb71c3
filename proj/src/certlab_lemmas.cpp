#include "barker/certlab.hpp"

#include <stdexcept>

namespace barker::cert {

std::size_t prefix_run(const LittlewoodSeq& seq) {
    std::size_t p = 1;
    while (p < seq.size() && seq.a(p + 1) == seq.a(1)) ++p;
    return p;
}

StarSwapResult star_swap_normalize(const LittlewoodSeq& seq) {
    if (seq.size() % 2 == 0) throw std::domain_error("star_swap_normalize: requires odd length");
    auto norm = normalize_leading(seq).first;
    if (prefix_run(norm) >= 3) return {norm, false};
    auto star = normalize_leading(norm.reversed()).first;
    if (prefix_run(star) >= 3) return {star, true};
    throw std::domain_error("star_swap_normalize: neither orientation has a leading run >= 3 (n = " +
                            std::to_string(seq.size()) + ")");
}

BlockCheckReport lemma3_block_check(const LittlewoodSeq& seq) {
    const auto [norm, swapped] = star_swap_normalize(seq);
    const std::size_t n = norm.size();
    const std::size_t p = prefix_run(norm);

    BlockCheckReport rep;
    rep.p = p;
    rep.swap_applied = swapped;
    rep.bound = n > p + 1 ? n - p - 1 : 0;
    // i and i+1 share a block unless i is a multiple of p.
    for (std::size_t i = 1; i + 1 <= rep.bound; ++i) {
        if (i % p == 0) continue;
        if (norm.a(i) != norm.a(i + 1)) {
            rep.violation = std::make_pair(i, i + 1);
            break;
        }
    }
    return rep;
}

ResidueReplayReport lemma12_residue_replay(const LittlewoodSeq& seq) {
    const auto [norm, swapped] = star_swap_normalize(seq);
    const std::size_t n = norm.size();
    const std::size_t m = (n - 1) / 2;
    const std::size_t p = prefix_run(norm);

    ResidueReplayReport rep;
    rep.p = p;
    rep.swap_applied = swapped;
    rep.range_end = static_cast<long>(2 * m) - 1 - static_cast<long>(p);
    if (rep.range_end < 1) return rep;

    const auto s = power_sums_monic(from_sequence(norm), 2 * m);
    const auto range = static_cast<std::size_t>(rep.range_end);
    const BigInt mod = p;
    auto residue = [&mod](const BigInt& v) {
        BigInt r = v % mod;
        if (r < 0) r += mod;
        return r.convert_to<std::uint64_t>();
    };

    for (std::size_t mu = 1; mu <= range; ++mu) {
        rep.residues.push_back(residue(s.at(mu)));
        if (rep.residues.back() != p - 1) rep.residues_ok = false;
    }
    // Inductive step from even mu to mu + 1: s_{mu+p+1} = s_mu = -1 and
    // s_{mu+p+1} - 2 s_{mu+1} + s_mu = 0 (mod p).
    for (std::size_t mu = 2; mu + 1 <= range; mu += 2) {
        ResidueStep step;
        step.mu = mu;
        step.divisible_case = (mu + 1) % p == 0;
        step.s_mu = s.at(mu);
        step.s_shifted = s.at(mu + p + 1);
        step.relation_residue = residue(step.s_shifted - 2 * s.at(mu + 1) + step.s_mu);
        step.ok = step.s_mu == -1 && step.s_shifted == -1 && step.relation_residue == 0;
        if (!step.ok) rep.steps_ok = false;
        rep.steps.push_back(std::move(step));
    }
    return rep;
}

}  // namespace barker::cert
