#pragma once

/**
 * @file parity.hpp
 * @brief Parity verdicts for jacobians of V^(p) via the Poonen-Stoll count
 *        of deficient places, certification over the admissible regime, and
 *        the finiteness sieve for hyperelliptic quotients.
 */

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "alq/localpoints.hpp"
#include "alq/shimura.hpp"

namespace alq {

enum class Verdict { even, odd };

const char* to_string(Verdict verdict);

/// A fact the certificate relies on without computing it.
struct Assumption {
    std::string label;
    std::string statement;

    /// "label: statement"
    std::string citation() const;
    bool operator==(const Assumption&) const = default;
};

/// The fixed list of cited facts every certificate carries.
std::vector<Assumption> cited_assumptions();

struct ParityCertificate {
    AdmissiblePair pair;
    GenusData genus;
    DeficiencyLedger ledger;
    Verdict verdict = Verdict::even;
    std::vector<Assumption> assumptions;

    bool operator==(const ParityCertificate&) const = default;
};

/// Odd iff the number of deficient places is odd.
Verdict poonen_stoll_verdict(const DeficiencyLedger& ledger);

/// Full pipeline for one pair. Inadmissible pairs are returned as a
/// Rejection; nothing outside the admissible regime is certified.
std::variant<ParityCertificate, Rejection> certify(std::int64_t p, std::int64_t q);

/// Certificate for a pair already known to be admissible.
ParityCertificate certify(const AdmissiblePair& pair);

/// All admissible (p, q) with p, q <= bound, sorted by (p, q).
/// Throws ArithmeticError if bound >= 2^15.
std::vector<AdmissiblePair> enumerate_admissible(std::uint64_t bound);

enum class HyperellipticFlag { possibly_hyperelliptic, not_hyperelliptic };

const char* to_string(HyperellipticFlag flag);

/// Point counts over F_4 at the good prime 2: a hyperelliptic V^(p) has at
/// most 2 #P^1(F_4) = 10 points, while the supersingular locus forces at
/// least H(2pq)/2 >= (p-1)(q-1)/24 of them.
struct HyperellipticWitness {
    AdmissiblePair pair;
    std::uint64_t product = 0;           // (p-1)(q-1)
    std::uint64_t class_number_2pq = 0;  // H(2pq)
    std::uint64_t half_class_ceil = 0;   // ceil(H(2pq) / 2)
    std::uint64_t product_bound_ceil = 0;  // ceil((p-1)(q-1) / 24)
    bool class_number_excludes = false;  // ceil(H/2) > 10
    bool product_bound_excludes = false; // ceil((p-1)(q-1)/24) > 10
    HyperellipticFlag flag = HyperellipticFlag::possibly_hyperelliptic;

    static constexpr std::uint64_t kF4PointBound = 10;
};

/// The flag is not_hyperelliptic iff (p-1)(q-1) > 240.
std::vector<HyperellipticWitness> hyperelliptic_sieve(std::span<const AdmissiblePair> pairs);
HyperellipticWitness hyperelliptic_sieve(const AdmissiblePair& pair);

}  // namespace alq
