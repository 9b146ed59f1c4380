#include "alq/localpoints.hpp"

#include "alq/error.hpp"
#include "alq/quaternion.hpp"

namespace alq {

namespace {

QuaternionAlgebra disc_pq_algebra(std::uint64_t p, std::uint64_t q) {
    if (p == q || p == 2 || q == 2 || !is_prime(p) || !is_prime(q))
        throw ArithmeticError("expected distinct odd primes, got (" + std::to_string(p) + ", " +
                              std::to_string(q) + ")");
    return QuaternionAlgebra::from_ramification({Place::finite(p), Place::finite(q)});
}

}  // namespace

const char* to_string(LocalSource source) {
    switch (source) {
        case LocalSource::real_splitting: return "real_splitting";
        case LocalSource::own_prime_uniformization: return "own_prime_uniformization";
        case LocalSource::interchange_criterion: return "interchange_criterion";
        case LocalSource::cited_away_from_disc: return "cited_away_from_disc";
    }
    return "unknown";
}

std::size_t DeficiencyLedger::deficient_count() const {
    std::size_t n = 0;
    for (const auto& e : entries) n += e.pic1_nonempty ? 0 : 1;
    return n;
}

std::vector<Place> DeficiencyLedger::deficient_places() const {
    std::vector<Place> out;
    for (const auto& e : entries) {
        if (!e.pic1_nonempty && e.place) out.push_back(*e.place);
    }
    return out;
}

bool pic1_real(std::uint64_t p, std::uint64_t q, Quotient which) {
    const auto algebra = disc_pq_algebra(p, q);
    const auto d = static_cast<std::int64_t>(which == Quotient::by_p ? p : q);
    return quad_field_splits(d, algebra);
}

bool pic1_at_own_prime(std::uint64_t p, std::uint64_t q) {
    disc_pq_algebra(p, q);
    return true;
}

bool pic1_at_other_prime(std::uint64_t p, std::uint64_t q) {
    const auto interchanged = interchange(disc_pq_algebra(p, q), p);
    const auto sp = static_cast<std::int64_t>(p);
    const auto sq = static_cast<std::int64_t>(q);
    return is_isomorphic(interchanged, QuaternionAlgebra::from_symbols(-1, -sp * sq)) ||
           is_isomorphic(interchanged, QuaternionAlgebra::from_symbols(-sp, -sq));
}

DeficiencyLedger deficiency_ledger(const AdmissiblePair& pair) {
    const auto genus = genus_quotient(pair);
    if (genus.g_quotient % 2 != 0)
        throw ArithmeticError("genus of V^(p) is odd; Pic^1 does not control Pic^{g-1}");

    const auto p = pair.p();
    const auto q = pair.q();
    DeficiencyLedger ledger;
    ledger.entries = {
        {Place::infinity(), pic1_real(p, q, Quotient::by_p), LocalSource::real_splitting},
        {Place::finite(p), pic1_at_own_prime(p, q), LocalSource::own_prime_uniformization},
        {Place::finite(q), pic1_at_other_prime(q, p), LocalSource::interchange_criterion},
        {std::nullopt, true, LocalSource::cited_away_from_disc},
    };
    return ledger;
}

}  // namespace alq
