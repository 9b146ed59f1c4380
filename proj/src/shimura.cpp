#include "alq/shimura.hpp"

#include "alq/error.hpp"
#include "alq/quadforms.hpp"

namespace alq {

namespace {

void require_distinct_odd_primes(std::uint64_t p, std::uint64_t q) {
    if (p == q || p == 2 || q == 2 || !is_prime(p) || !is_prime(q))
        throw ArithmeticError("expected distinct odd primes, got (" + std::to_string(p) + ", " +
                              std::to_string(q) + ")");
}

}  // namespace

std::string Rejection::message() const {
    switch (reason) {
        case AdmissibilityFailure::p_not_prime: return "p is not prime";
        case AdmissibilityFailure::q_not_prime: return "q is not prime";
        case AdmissibilityFailure::p_not_5_mod_24: return "p ≢ 5 mod 24";
        case AdmissibilityFailure::q_not_5_mod_12: return "q ≢ 5 mod 12";
        case AdmissibilityFailure::p_equals_q: return "p = q";
        case AdmissibilityFailure::p_square_mod_q: return "p is a square mod q";
    }
    return "unknown";
}

QuaternionAlgebra AdmissiblePair::algebra() const {
    return QuaternionAlgebra::from_ramification({Place::finite(p_), Place::finite(q_)});
}

std::variant<AdmissiblePair, Rejection> check_admissible(std::int64_t p, std::int64_t q) {
    using F = AdmissibilityFailure;
    if (p <= 0 || !is_prime(static_cast<std::uint64_t>(p))) return Rejection{F::p_not_prime};
    if (q <= 0 || !is_prime(static_cast<std::uint64_t>(q))) return Rejection{F::q_not_prime};
    const auto up = static_cast<std::uint64_t>(p);
    const auto uq = static_cast<std::uint64_t>(q);
    if (up % 24 != 5) return Rejection{F::p_not_5_mod_24};
    if (uq % 12 != 5) return Rejection{F::q_not_5_mod_12};
    if (up == uq) return Rejection{F::p_equals_q};
    if (legendre(p, uq) != -1) return Rejection{F::p_square_mod_q};
    return AdmissiblePair(up, uq);
}

std::uint64_t genus_VB(std::uint64_t p, std::uint64_t q) {
    require_distinct_odd_primes(p, q);
    const auto sp = static_cast<std::int64_t>(p);
    const auto sq = static_cast<std::int64_t>(q);
    const std::int64_t e2 = (1 - kronecker(-4, sp)) * (1 - kronecker(-4, sq));
    const std::int64_t e3 = (1 - kronecker(-3, sp)) * (1 - kronecker(-3, sq));

    // 12 g = 12 + (p-1)(q-1) - 3 e2 - 4 e3
    const std::int64_t twelve_g = 12 + (sp - 1) * (sq - 1) - 3 * e2 - 4 * e3;
    if (twelve_g % 12 != 0 || twelve_g < 0)
        throw ArithmeticError("genus formula is not a nonnegative integer at (" +
                              std::to_string(p) + ", " + std::to_string(q) + ")");
    return static_cast<std::uint64_t>(twelve_g / 12);
}

std::uint64_t mass_half_closed_form(std::uint64_t p, std::uint64_t q) {
    const auto product = static_cast<std::int64_t>((p - 1) * (q - 1));
    // 24 * value = 24 + product - 16
    const std::int64_t scaled = 24 + product - 16;
    if (scaled % 24 != 0 || scaled < 0)
        throw ArithmeticError("1 + ((p-1)(q-1) - 16)/24 is not integral at (" +
                              std::to_string(p) + ", " + std::to_string(q) + ")");
    return static_cast<std::uint64_t>(scaled / 24);
}

std::uint64_t fixed_points_e(std::uint64_t p, std::uint64_t q) {
    require_distinct_odd_primes(p, q);
    if (p % 4 != 1)
        throw ArithmeticError("fixed point count is only implemented for p = 1 mod 4, got " +
                              std::to_string(p));
    const auto algebra = QuaternionAlgebra::from_ramification({Place::finite(p), Place::finite(q)});
    const auto sp = static_cast<std::int64_t>(p);
    if (!quad_field_splits(-sp, algebra)) return 0;
    return 2 * class_number(-4 * sp);
}

GenusData genus_quotient(const AdmissiblePair& pair) {
    GenusData data;
    data.g_VB = genus_VB(pair.p(), pair.q());
    data.e_p = fixed_points_e(pair.p(), pair.q());
    if ((data.g_VB + 1) % 2 != 0)
        throw ArithmeticError("genus of V_B is even; Riemann-Hurwitz for w_p does not apply");
    data.mass_half = (data.g_VB + 1) / 2;
    if (data.e_p % 4 != 0)
        throw ArithmeticError("e(p) = " + std::to_string(data.e_p) + " is not divisible by 4");
    if (data.e_p / 4 > data.mass_half)
        throw ArithmeticError("negative quotient genus");
    data.g_quotient = data.mass_half - data.e_p / 4;
    return data;
}

}  // namespace alq
