#include "alq/quaternion.hpp"

#include <string>
#include <vector>

#include "alq/error.hpp"

namespace alq {

namespace {

std::uint64_t magnitude(std::int64_t n) {
    return n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
}

void add_prime_factors(std::uint64_t n, PlaceSet& out) {
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.insert(Place::finite(d));
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.insert(Place::finite(n));
}

// Distinct prime factors of a squarefree n, or empty if n has a square factor.
std::vector<std::uint64_t> squarefree_factors(std::uint64_t n, bool& squarefree) {
    std::vector<std::uint64_t> primes;
    squarefree = true;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        n /= d;
        if (n % d == 0) squarefree = false;
        while (n % d == 0) n /= d;
        primes.push_back(d);
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

}  // namespace

QuaternionAlgebra QuaternionAlgebra::from_symbols(std::int64_t a, std::int64_t b) {
    return QuaternionAlgebra(alq::ramified_places(a, b));
}

QuaternionAlgebra QuaternionAlgebra::from_ramification(PlaceSet places) {
    if (places.size() % 2 != 0)
        throw ArithmeticError("a quaternion algebra ramifies at an even number of places, got " +
                              std::to_string(places.size()));
    return QuaternionAlgebra(std::move(places));
}

PlaceSet ramified_places(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) throw ArithmeticError("quaternion symbol needs nonzero arguments");

    PlaceSet candidates{Place::infinity(), Place::finite(2)};
    add_prime_factors(magnitude(a), candidates);
    add_prime_factors(magnitude(b), candidates);

    PlaceSet ramified;
    for (const auto& v : candidates) {
        if (hilbert_symbol(a, b, v) == Sign::minus) ramified.insert(v);
    }
    return ramified;
}

std::uint64_t reduced_discriminant(const QuaternionAlgebra& algebra) {
    std::uint64_t disc = 1;
    for (const auto& v : algebra.ramified_places()) {
        if (v.is_finite()) disc *= v.prime();
    }
    return disc;
}

bool is_isomorphic(const QuaternionAlgebra& lhs, const QuaternionAlgebra& rhs) {
    return lhs.ramified_places() == rhs.ramified_places();
}

QuaternionAlgebra interchange(const QuaternionAlgebra& algebra, std::uint64_t p) {
    if (p == 2 || !is_prime(p))
        throw ArithmeticError("interchange needs an odd prime, got " + std::to_string(p));
    const Place finite = Place::finite(p);
    const Place inf = Place::infinity();

    PlaceSet places = algebra.ramified_places();
    const bool at_p = places.erase(finite) > 0;
    const bool at_inf = places.erase(inf) > 0;
    if (at_p) places.insert(inf);
    if (at_inf) places.insert(finite);
    return QuaternionAlgebra::from_ramification(std::move(places));
}

bool quad_field_splits(std::int64_t d, const QuaternionAlgebra& algebra) {
    if (d == 0 || d == 1 || !is_squarefree(d))
        throw ArithmeticError("Q(sqrt(" + std::to_string(d) + ")) needs squarefree d != 0, 1");

    const std::int64_t field_disc = (((d % 4) + 4) % 4 == 1) ? d : 4 * d;
    for (const auto& v : algebra.ramified_places()) {
        const bool splits = v.is_infinite()
                                ? d > 0
                                : kronecker(field_disc, static_cast<std::int64_t>(v.prime())) == 1;
        if (splits) return false;
    }
    return true;
}

std::uint64_t eichler_class_number(std::uint64_t discriminant) {
    bool squarefree = true;
    const auto primes = squarefree_factors(discriminant, squarefree);
    if (discriminant < 2 || !squarefree)
        throw ArithmeticError("Eichler class number needs a squarefree discriminant > 1, got " +
                              std::to_string(discriminant));
    if (primes.size() % 2 == 0)
        throw ArithmeticError("no definite quaternion algebra has discriminant " +
                              std::to_string(discriminant) + " (even number of primes)");

    // 12 H = prod(l-1) + 3 prod(1 - (-4/l)) + 4 prod(1 - (-3/l))
    __int128 mass = 1;
    __int128 order4 = 1;
    __int128 order3 = 1;
    for (auto l : primes) {
        const auto ls = static_cast<std::int64_t>(l);
        mass *= static_cast<__int128>(l - 1);
        order4 *= 1 - kronecker(-4, ls);
        order3 *= 1 - kronecker(-3, ls);
    }
    const __int128 twelve_h = mass + 3 * order4 + 4 * order3;
    if (twelve_h % 12 != 0)
        throw ArithmeticError("Eichler class number formula is not integral at D = " +
                              std::to_string(discriminant));
    return static_cast<std::uint64_t>(twelve_h / 12);
}

}  // namespace alq
