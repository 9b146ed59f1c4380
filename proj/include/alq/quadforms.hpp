#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace alq {

/// Binary quadratic form a x^2 + b x y + c y^2.
struct QuadraticForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;

    constexpr std::int64_t discriminant() const { return b * b - 4 * a * c; }

    /// |b| <= a <= c, with b >= 0 whenever |b| == a or a == c.
    constexpr bool is_reduced() const {
        const std::int64_t abs_b = b < 0 ? -b : b;
        if (!(abs_b <= a && a <= c)) return false;
        if ((abs_b == a || a == c) && b < 0) return false;
        return true;
    }

    bool is_primitive() const;

    auto operator<=>(const QuadraticForm&) const = default;
};

/// Every reduced primitive positive-definite form of discriminant D,
/// ordered by (a, b, c). Throws ArithmeticError unless D < 0 and
/// D = 0 or 1 mod 4.
std::vector<QuadraticForm> reduced_forms(std::int64_t discriminant);

/// Form class number h(D) = |reduced_forms(D)|. For p = 1 mod 4 this is the
/// class number of Q(sqrt(-p)) at D = -4p.
std::uint64_t class_number(std::int64_t discriminant);

}  // namespace alq
