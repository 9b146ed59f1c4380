#pragma once

/**
 * @file ntheory.hpp
 * @brief Exact integer kernels: primality, valuations, Legendre/Kronecker
 *        symbols and Hilbert symbols at every place of Q.
 *
 * Everything here works on 64-bit inputs with 128-bit intermediates.
 * Inputs in the pipeline stay far below 2^31, so no big-integer type is
 * needed.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace alq {

/// A place of Q: a finite prime or the archimedean place.
class Place {
public:
    /// Throws ArithmeticError unless `p` is prime.
    static Place finite(std::uint64_t p);
    static constexpr Place infinity() { return Place{}; }

    /// Parses "inf" or a decimal prime.
    static Place parse(std::string_view text);

    constexpr bool is_infinite() const { return prime_ == 0; }
    constexpr bool is_finite() const { return prime_ != 0; }
    /// The prime of a finite place; 0 for infinity.
    constexpr std::uint64_t prime() const { return prime_; }

    /// "inf" or the decimal prime.
    std::string to_string() const;

    /// Finite places ascend by prime; infinity sorts last.
    constexpr std::strong_ordering operator<=>(const Place& other) const {
        return sort_key() <=> other.sort_key();
    }
    constexpr bool operator==(const Place&) const = default;

private:
    constexpr Place() = default;
    explicit constexpr Place(std::uint64_t p) : prime_(p) {}

    constexpr std::uint64_t sort_key() const {
        return is_infinite() ? UINT64_MAX : prime_;
    }

    std::uint64_t prime_ = 0;
};

/// Value of a Hilbert symbol. Never zero.
enum class Sign : int { minus = -1, plus = 1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }
constexpr Sign operator*(Sign a, Sign b) {
    return a == b ? Sign::plus : Sign::minus;
}

/// Deterministic for every n < 2^64 (Miller-Rabin with the first twelve
/// prime bases).
bool is_prime(std::uint64_t n);

struct Valuation {
    int exponent = 0;
    std::int64_t unit = 0;  // n = p^exponent * unit, p does not divide unit

    bool operator==(const Valuation&) const = default;
};

/// Throws ArithmeticError when n == 0 or p is not prime.
Valuation valuation(std::int64_t n, std::uint64_t p);

/// Legendre symbol (a/p) in {-1, 0, +1}. Throws unless p is an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

/// Kronecker symbol (a/n) for any nonzero n.
int kronecker(std::int64_t a, std::int64_t n);

/// Hilbert symbol (a,b)_v by the closed local formulas.
/// Throws ArithmeticError if a or b is zero.
Sign hilbert_symbol(std::int64_t a, std::int64_t b, Place v);

/// Hilbert symbol decided by searching for a primitive solution of
/// z^2 = a x^2 + b y^2 modulo p^k, k = 3 + 2 max(v_p(a), v_p(b)).
/// Shares no code path with hilbert_symbol beyond valuation(); used as the
/// verification oracle for it. Cost is O(p^k) in the worst case.
Sign hilbert_symbol_by_search(std::int64_t a, std::int64_t b, Place v);

/// True iff n has no square factor > 1. Throws on n == 0.
bool is_squarefree(std::int64_t n);

}  // namespace alq
