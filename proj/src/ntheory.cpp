#include "alq/ntheory.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "alq/error.hpp"

namespace alq {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, int r) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// a mod n in [0, n)
std::uint64_t reduce(std::int64_t a, std::uint64_t n) {
    const auto m = static_cast<__int128>(n);
    auto r = static_cast<__int128>(a) % m;
    if (r < 0) r += m;
    return static_cast<std::uint64_t>(r);
}

// Jacobi symbol for odd n > 0, a in [0, n).
int jacobi(std::uint64_t a, std::uint64_t n) {
    int t = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const std::uint64_t r = n & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

// x odd: 1 iff x = 3 mod 4
int epsilon(std::int64_t x) { return reduce(x, 4) == 3 ? 1 : 0; }

// x odd: 1 iff x = +-3 mod 8
int omega(std::int64_t x) {
    const auto r = reduce(x, 8);
    return (r == 3 || r == 5) ? 1 : 0;
}

void require_nonzero(std::int64_t a, std::int64_t b) {
    if (a == 0 || b == 0) throw ArithmeticError("hilbert symbol needs nonzero arguments");
}

// Squares modulo m, memoised per modulus. The oracle asks for the same
// few moduli thousands of times.
std::shared_ptr<const std::vector<bool>> square_table(std::uint64_t m) {
    static std::mutex mutex;
    static std::map<std::uint64_t, std::shared_ptr<const std::vector<bool>>> cache;

    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;

    auto table = std::make_shared<std::vector<bool>>(m, false);
    for (std::uint64_t z = 0; z < m; ++z) (*table)[mul_mod(z, z, m)] = true;
    cache.emplace(m, table);
    return table;
}

}  // namespace

Place Place::finite(std::uint64_t p) {
    if (!is_prime(p)) throw ArithmeticError("place " + std::to_string(p) + " is not prime");
    return Place{p};
}

Place Place::parse(std::string_view text) {
    if (text == "inf" || text == "infinity") return infinity();
    std::uint64_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ArithmeticError("cannot parse place '" + std::string(text) + "'");
    return finite(value);
}

std::string Place::to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(prime_);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto p : bases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    return std::all_of(std::begin(bases), std::end(bases),
                       [&](std::uint64_t a) { return miller_rabin_witness(n, a, d, r); });
}

Valuation valuation(std::int64_t n, std::uint64_t p) {
    if (n == 0) throw ArithmeticError("valuation of zero is undefined");
    if (!is_prime(p)) throw ArithmeticError("valuation needs a prime, got " + std::to_string(p));
    const auto pp = static_cast<std::int64_t>(p);
    Valuation v{0, n};
    while (v.unit % pp == 0) {
        v.unit /= pp;
        ++v.exponent;
    }
    return v;
}

int legendre(std::int64_t a, std::uint64_t p) {
    if (p == 2 || !is_prime(p))
        throw ArithmeticError("legendre symbol needs an odd prime, got " + std::to_string(p));
    return jacobi(reduce(a, p), p);
}

int kronecker(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    // n fits in int64, so |n| fits in uint64
    std::uint64_t m = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    if (n < 0 && a < 0) result = -result;
    while ((m & 1) == 0) {
        if ((a & 1) == 0) return 0;
        if (omega(a)) result = -result;
        m >>= 1;
    }
    if (m == 1) return result;
    return result * jacobi(reduce(a, m), m);
}

Sign hilbert_symbol(std::int64_t a, std::int64_t b, Place v) {
    require_nonzero(a, b);
    if (v.is_infinite()) return (a < 0 && b < 0) ? Sign::minus : Sign::plus;

    const std::uint64_t p = v.prime();
    const auto va = valuation(a, p);
    const auto vb = valuation(b, p);

    if (p == 2) {
        const int e = epsilon(va.unit) * epsilon(vb.unit) + va.exponent * omega(vb.unit) +
                      vb.exponent * omega(va.unit);
        return (e & 1) ? Sign::minus : Sign::plus;
    }

    int s = 1;
    if ((va.exponent & 1) && (vb.exponent & 1) && ((p - 1) / 2) % 2 == 1) s = -s;
    if (vb.exponent & 1) s *= legendre(va.unit, p);
    if (va.exponent & 1) s *= legendre(vb.unit, p);
    return s < 0 ? Sign::minus : Sign::plus;
}

Sign hilbert_symbol_by_search(std::int64_t a, std::int64_t b, Place v) {
    require_nonzero(a, b);
    // Over R, z^2 = a x^2 + b y^2 has a nonzero solution unless the right
    // side is negative definite.
    if (v.is_infinite()) return (a < 0 && b < 0) ? Sign::minus : Sign::plus;

    const std::uint64_t p = v.prime();
    const int k = 3 + 2 * std::max(valuation(a, p).exponent, valuation(b, p).exponent);
    std::uint64_t m = 1;
    for (int i = 0; i < k; ++i) m *= p;

    const auto squares = square_table(m);
    const auto& sq = *squares;
    const std::uint64_t am = reduce(a, m);
    const std::uint64_t bm = reduce(b, m);

    // y a unit, scaled to 1: is a x^2 + b a square?
    for (std::uint64_t x = 0; x < m; ++x) {
        if (sq[(mul_mod(am, mul_mod(x, x, m), m) + bm) % m]) return Sign::plus;
    }
    // p | y and x a unit, scaled to 1: is a + b y^2 a square?
    for (std::uint64_t y = 0; y < m; y += p) {
        if (sq[(am + mul_mod(bm, mul_mod(y, y, m), m)) % m]) return Sign::plus;
    }
    // p | x and p | y force p | z: no primitive solution left.
    return Sign::minus;
}

bool is_squarefree(std::int64_t n) {
    if (n == 0) throw ArithmeticError("squarefree test of zero");
    std::uint64_t m = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return false;
        }
    }
    return true;
}

}  // namespace alq
