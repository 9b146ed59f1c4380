#include "alq/quadforms.hpp"

#include <numeric>
#include <string>

#include "alq/error.hpp"

namespace alq {

bool QuadraticForm::is_primitive() const {
    return std::gcd(std::gcd(a, b), c) == 1;
}

std::vector<QuadraticForm> reduced_forms(std::int64_t discriminant) {
    const std::int64_t d = discriminant;
    if (d >= 0) throw ArithmeticError("discriminant must be negative, got " + std::to_string(d));
    if (const auto r = ((d % 4) + 4) % 4; r != 0 && r != 1)
        throw ArithmeticError(std::to_string(d) + " is not a discriminant (must be 0 or 1 mod 4)");

    std::vector<QuadraticForm> forms;
    // reduced forms satisfy 3a^2 <= |D|
    for (std::int64_t a = 1; 3 * a * a <= -d; ++a) {
        for (std::int64_t b = -a + 1; b <= a; ++b) {
            // b^2 = D mod 4a is necessary for c to be integral
            const std::int64_t numerator = b * b - d;
            if (numerator % (4 * a) != 0) continue;
            const QuadraticForm f{a, b, numerator / (4 * a)};
            if (f.is_reduced() && f.is_primitive()) forms.push_back(f);
        }
    }
    return forms;
}

std::uint64_t class_number(std::int64_t discriminant) {
    return reduced_forms(discriminant).size();
}

}  // namespace alq
