#pragma once

/**
 * @file shimura.hpp
 * @brief Genus data for the Shimura curve V_B of discriminant pq and its
 *        Atkin-Lehner quotient V^(p) = V_B / w_p.
 *
 * All formulas are evaluated as 12x (or 4x) their value in exact integer
 * arithmetic; a non-integral result is reported as ArithmeticError rather
 * than rounded, since it can only come from violated hypotheses.
 */

#include <cstdint>
#include <string>
#include <variant>

#include "alq/quaternion.hpp"

namespace alq {

/// Why a pair (p, q) is outside the regime p = 5 mod 24, q = 5 mod 12,
/// p != q, p a non-residue mod q. Checked in declaration order.
enum class AdmissibilityFailure {
    p_not_prime,
    q_not_prime,
    p_not_5_mod_24,
    q_not_5_mod_12,
    p_equals_q,
    p_square_mod_q,
};

struct Rejection {
    AdmissibilityFailure reason;

    std::string message() const;
    bool operator==(const Rejection&) const = default;
};

/// A pair of primes satisfying all four admissibility conditions. Only
/// check_admissible() creates one.
class AdmissiblePair {
public:
    std::uint64_t p() const { return p_; }
    std::uint64_t q() const { return q_; }
    std::uint64_t disc() const { return p_ * q_; }

    /// The indefinite algebra B ramified exactly at p and q.
    QuaternionAlgebra algebra() const;

    auto operator<=>(const AdmissiblePair&) const = default;

private:
    friend std::variant<AdmissiblePair, Rejection> check_admissible(std::int64_t, std::int64_t);
    AdmissiblePair(std::uint64_t p, std::uint64_t q) : p_(p), q_(q) {}

    std::uint64_t p_;
    std::uint64_t q_;
};

std::variant<AdmissiblePair, Rejection> check_admissible(std::int64_t p, std::int64_t q);

struct GenusData {
    std::uint64_t g_VB = 0;        // genus of V_B
    std::uint64_t e_p = 0;         // fixed points of w_p on V_B(C)
    std::uint64_t g_quotient = 0;  // genus of V^(p)
    std::uint64_t mass_half = 0;   // (g_VB + 1) / 2

    bool operator==(const GenusData&) const = default;
};

/// Genus of V_B for Disc B = pq:
/// g = 1 + (p-1)(q-1)/12 - e2/4 - e3/3, with e2 = prod (1 - (-4/l)) and
/// e3 = prod (1 - (-3/l)) over l in {p, q}. Throws unless p != q are odd primes.
std::uint64_t genus_VB(std::uint64_t p, std::uint64_t q);

/// Closed form of (g_VB + 1)/2 valid for admissible pairs:
/// 1 + ((p-1)(q-1) - 16)/24.
std::uint64_t mass_half_closed_form(std::uint64_t p, std::uint64_t q);

/// Number of fixed points of w_p on V_B(C) for Disc B = pq: CM points by
/// Z[sqrt(-p)], i.e. 2 h(-4p) if Q(sqrt(-p)) splits B and 0 otherwise.
/// Only p = 1 mod 4 is supported (then Z[sqrt(-p)] is maximal); other p
/// throw ArithmeticError.
std::uint64_t fixed_points_e(std::uint64_t p, std::uint64_t q);

/// Riemann-Hurwitz: g(V^(p)) = (g_VB + 1)/2 - e_p/4. Throws if 4 does not
/// divide e_p.
GenusData genus_quotient(const AdmissiblePair& pair);

}  // namespace alq
