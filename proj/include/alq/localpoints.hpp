#pragma once

/**
 * @file localpoints.hpp
 * @brief Local existence of degree-one rational divisor classes on the
 *        Atkin-Lehner quotients V^(p), V^(q) of a Shimura curve with
 *        Disc B = pq.
 *
 * Some statuses are computed (the real place, the interchange criterion at
 * the other prime), others are cited facts. Every LocalStatus carries its
 * source so a certificate can tell the two apart.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "alq/ntheory.hpp"
#include "alq/shimura.hpp"

namespace alq {

enum class LocalSource {
    real_splitting,            // Q(sqrt d) splits B  <=>  Pic^1 over R nonempty
    own_prime_uniformization,  // Pic^1 V^(p)(Q_p)^+ nonempty; cited conclusion
    interchange_criterion,     // B^{p-int} = B(-1,-pq) or B(-p,-q)
    cited_away_from_disc,      // Pic^1 V_B(Q_l)^+ nonempty for l not dividing pq
};

const char* to_string(LocalSource source);

enum class Quotient { by_p, by_q };

struct LocalStatus {
    /// nullopt stands for "every finite place not dividing pq".
    std::optional<Place> place;
    bool pic1_nonempty = true;
    LocalSource source = LocalSource::cited_away_from_disc;

    bool is_rest() const { return !place.has_value(); }
    bool operator==(const LocalStatus&) const = default;
};

struct DeficiencyLedger {
    std::vector<LocalStatus> entries;

    std::size_t deficient_count() const;
    std::vector<Place> deficient_places() const;
    bool operator==(const DeficiencyLedger&) const = default;
};

/// Pic^1 V^(d)(R)^+ nonempty, d the prime of the quotient: true iff
/// Q(sqrt d) splits the algebra ramified at {p, q}.
bool pic1_real(std::uint64_t p, std::uint64_t q, Quotient which);

/// Pic^1 V^(p)(Q_p)^+ is always nonempty (V^(p) is Mumford uniformized at
/// p without a twist). Validates that p, q are distinct odd primes.
bool pic1_at_own_prime(std::uint64_t p, std::uint64_t q);

/// Decides Pic^1 V^(q)(Q_p)^+ != empty: the p-interchange of B is
/// isomorphic to B(-1,-pq) or to B(-p,-q). With the roles swapped it
/// decides Pic^1 V^(p)(Q_q)^+.
bool pic1_at_other_prime(std::uint64_t p, std::uint64_t q);

/// Places {inf, p, q, rest} for V^(p). Since g(V^(p)) is even and Pic^2 is
/// nonempty everywhere, Pic^{g-1} is empty exactly where Pic^1 is; this is
/// checked (throws ArithmeticError if the genus is odd).
DeficiencyLedger deficiency_ledger(const AdmissiblePair& pair);

}  // namespace alq
