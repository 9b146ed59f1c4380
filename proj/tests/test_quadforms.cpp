#include <cstdlib>
#include <set>

#include "alq/error.hpp"
#include "alq/ntheory.hpp"
#include "alq/quadforms.hpp"
#include "doctest.h"

using namespace alq;

namespace {

// Gauss reduction by the usual normalise / swap steps, written independently
// of the enumeration in reduced_forms().
QuadraticForm reduce_form(QuadraticForm f) {
    for (;;) {
        // normalise: -a < b <= a
        if (!(-f.a < f.b && f.b <= f.a)) {
            const std::int64_t two_a = 2 * f.a;
            std::int64_t k = (f.a - f.b) / two_a;
            if ((f.a - f.b) % two_a < 0) --k;  // floor
            const std::int64_t b = f.b + two_a * k;
            f.c = (b * b - f.discriminant()) / (4 * f.a);
            f.b = b;
            continue;
        }
        if (f.a > f.c) {
            f = {f.c, -f.b, f.a};
            continue;
        }
        if (f.a == f.c && f.b < 0) f.b = -f.b;
        return f;
    }
}

}  // namespace

TEST_CASE("reduced_forms examples") {
    CHECK(reduced_forms(-4) == std::vector<QuadraticForm>{{1, 0, 1}});
    CHECK(reduced_forms(-20) == std::vector<QuadraticForm>{{1, 0, 5}, {2, 2, 3}});
    CHECK(reduced_forms(-3) == std::vector<QuadraticForm>{{1, 1, 1}});
}

TEST_CASE("reduced_forms rejects non-discriminants") {
    CHECK_THROWS_AS(reduced_forms(0), ArithmeticError);
    CHECK_THROWS_AS(reduced_forms(5), ArithmeticError);
    CHECK_THROWS_AS(reduced_forms(-2), ArithmeticError);
    CHECK_THROWS_AS(reduced_forms(-5), ArithmeticError);
}

TEST_CASE("class_number examples") {
    CHECK(class_number(-4) == 1);
    CHECK(class_number(-20) == 2);
    CHECK(class_number(-116) == 6);
    CHECK(class_number(-23) == 3);
    CHECK(class_number(-163) == 1);
}

TEST_CASE("every returned form is reduced, primitive and of the right discriminant") {
    for (std::int64_t d = -3; d >= -3000; --d) {
        const auto r = ((d % 4) + 4) % 4;
        if (r != 0 && r != 1) continue;
        const auto forms = reduced_forms(d);
        REQUIRE(!forms.empty());
        for (const auto& f : forms) {
            REQUIRE(f.a > 0);
            REQUIRE(f.discriminant() == d);
            REQUIRE(f.is_reduced());
            REQUIRE(f.is_primitive());
        }
    }
}

TEST_CASE("reduction of arbitrary forms lands exactly on the enumerated set") {
    for (std::int64_t d = -3; d >= -400; --d) {
        const auto r = ((d % 4) + 4) % 4;
        if (r != 0 && r != 1) continue;
        std::set<QuadraticForm> reached;
        for (std::int64_t a = 1; a <= 40; ++a) {
            for (std::int64_t b = -40; b <= 40; ++b) {
                if ((b * b - d) % (4 * a) != 0) continue;
                const QuadraticForm f{a, b, (b * b - d) / (4 * a)};
                if (!f.is_primitive()) continue;
                reached.insert(reduce_form(f));
            }
        }
        const auto forms = reduced_forms(d);
        INFO("D = " << d);
        REQUIRE(std::set<QuadraticForm>(forms.begin(), forms.end()) == reached);
    }
}

TEST_CASE("h(-4p) = 2 mod 4 for p = 5 mod 8") {
    for (std::int64_t p = 5; p < 3000; p += 8) {
        if (!is_prime(static_cast<std::uint64_t>(p))) continue;
        INFO("p = " << p);
        REQUIRE(class_number(-4 * p) % 4 == 2);
    }
}
