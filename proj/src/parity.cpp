#include "alq/parity.hpp"

#include <algorithm>

#include "alq/error.hpp"
#include "alq/quaternion.hpp"

namespace alq {

const char* to_string(Verdict verdict) {
    return verdict == Verdict::odd ? "odd" : "even";
}

const char* to_string(HyperellipticFlag flag) {
    return flag == HyperellipticFlag::not_hyperelliptic ? "not_hyperelliptic"
                                                        : "possibly_hyperelliptic";
}

std::string Assumption::citation() const { return label + ": " + statement; }

std::vector<Assumption> cited_assumptions() {
    return {
        {"poonen-stoll",
         "the jacobian of a genus g curve is odd iff the number of places without a rational "
         "divisor of degree g-1 is odd"},
        {"pic2-everywhere", "Pic^2 V_B(Q_l)^+ is nonempty at every place l <= inf"},
        {"pic1-away-from-disc", "Pic^1 V_B(Q_l)^+ is nonempty at every prime l not dividing pq"},
        {"own-prime-uniformization",
         "Pic^1 V^(p)(Q_p)^+ is nonempty since V^(p) is Mumford uniformized at p"},
    };
}

Verdict poonen_stoll_verdict(const DeficiencyLedger& ledger) {
    return ledger.deficient_count() % 2 == 1 ? Verdict::odd : Verdict::even;
}

ParityCertificate certify(const AdmissiblePair& pair) {
    auto genus = genus_quotient(pair);
    auto ledger = deficiency_ledger(pair);
    const auto verdict = poonen_stoll_verdict(ledger);
    return ParityCertificate{pair, genus, std::move(ledger), verdict, cited_assumptions()};
}

std::variant<ParityCertificate, Rejection> certify(std::int64_t p, std::int64_t q) {
    auto checked = check_admissible(p, q);
    if (const auto* rejection = std::get_if<Rejection>(&checked)) return *rejection;
    return certify(std::get<AdmissiblePair>(checked));
}

std::vector<AdmissiblePair> enumerate_admissible(std::uint64_t bound) {
    if (bound >= (1u << 15))
        throw ArithmeticError("enumeration bound must be below 2^15, got " + std::to_string(bound));

    std::vector<std::uint64_t> ps;
    std::vector<std::uint64_t> qs;
    for (std::uint64_t n = 5; n <= bound; ++n) {
        if (!is_prime(n)) continue;
        if (n % 24 == 5) ps.push_back(n);
        if (n % 12 == 5) qs.push_back(n);
    }

    std::vector<AdmissiblePair> pairs;
    for (auto p : ps) {
        for (auto q : qs) {
            auto checked = check_admissible(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q));
            if (auto* pair = std::get_if<AdmissiblePair>(&checked)) pairs.push_back(*pair);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

HyperellipticWitness hyperelliptic_sieve(const AdmissiblePair& pair) {
    HyperellipticWitness w{pair};
    w.product = (pair.p() - 1) * (pair.q() - 1);
    w.class_number_2pq = eichler_class_number(2 * pair.disc());
    w.half_class_ceil = (w.class_number_2pq + 1) / 2;
    w.product_bound_ceil = (w.product + 23) / 24;
    w.class_number_excludes = w.half_class_ceil > HyperellipticWitness::kF4PointBound;
    w.product_bound_excludes = w.product_bound_ceil > HyperellipticWitness::kF4PointBound;
    w.flag = w.product > 240 ? HyperellipticFlag::not_hyperelliptic
                             : HyperellipticFlag::possibly_hyperelliptic;
    return w;
}

std::vector<HyperellipticWitness> hyperelliptic_sieve(std::span<const AdmissiblePair> pairs) {
    std::vector<HyperellipticWitness> out;
    out.reserve(pairs.size());
    for (const auto& pair : pairs) out.push_back(hyperelliptic_sieve(pair));
    return out;
}

}  // namespace alq
