#pragma once

/**
 * @file quaternion.hpp
 * @brief Rational quaternion algebras, represented by their set of ramified
 *        places.
 *
 * Two quaternion algebras over Q are isomorphic exactly when they ramify
 * at the same places, so the ramification set is the canonical form and
 * isomorphism is set equality. Symbol algebras B(a,b), with i^2 = a,
 * j^2 = b, ij = -ji, are converted through Hilbert symbols on construction;
 * in particular B(a,b) and B(b,a) compare equal.
 */

#include <cstdint>
#include <set>

#include "alq/ntheory.hpp"

namespace alq {

using PlaceSet = std::set<Place>;

class QuaternionAlgebra {
public:
    /// B(a,b). Throws ArithmeticError if a or b is zero.
    static QuaternionAlgebra from_symbols(std::int64_t a, std::int64_t b);

    /// Algebra with the given ramification. Throws ArithmeticError when the
    /// set has odd cardinality (no such algebra exists).
    static QuaternionAlgebra from_ramification(PlaceSet places);

    const PlaceSet& ramified_places() const { return ramified_; }
    bool ramifies_at(Place v) const { return ramified_.contains(v); }
    bool is_definite() const { return ramifies_at(Place::infinity()); }
    bool is_matrix_algebra() const { return ramified_.empty(); }

    bool operator==(const QuaternionAlgebra&) const = default;

private:
    explicit QuaternionAlgebra(PlaceSet places) : ramified_(std::move(places)) {}

    PlaceSet ramified_;
};

/// Places v in {inf} U {p | 2ab} with (a,b)_v = -1.
PlaceSet ramified_places(std::int64_t a, std::int64_t b);

/// Product of the finite ramified primes.
std::uint64_t reduced_discriminant(const QuaternionAlgebra& algebra);

bool is_isomorphic(const QuaternionAlgebra& lhs, const QuaternionAlgebra& rhs);

/// Exchanges the local invariants at p and at infinity. An involution.
/// Throws ArithmeticError unless p is an odd prime.
QuaternionAlgebra interchange(const QuaternionAlgebra& algebra, std::uint64_t p);

/// Whether Q(sqrt(d)) splits the algebra, i.e. no ramified place of the
/// algebra splits in Q(sqrt(d)). Throws unless d is squarefree and d != 1.
bool quad_field_splits(std::int64_t d, const QuaternionAlgebra& algebra);

/// Eichler's class number of a maximal order in the definite algebra of
/// reduced discriminant D:
///
///   H(D) = (1/12) prod (l-1) + (1/4) prod (1 - (-4/l)) + (1/3) prod (1 - (-3/l))
///
/// over the primes l | D. Requires D squarefree with an odd number of prime
/// factors (so that a definite algebra of that discriminant exists) and
/// throws ArithmeticError otherwise, or if the sum is not an integer.
std::uint64_t eichler_class_number(std::uint64_t discriminant);

}  // namespace alq
