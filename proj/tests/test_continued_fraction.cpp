#include <doctest.h>

#include <random>
#include <vector>

#include "slicedepth/continued_fraction.hpp"

using namespace slicedepth;

namespace {

std::vector<Int> ints(std::initializer_list<long long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

// Random fraction with p odd, q even, coprime, 0 < q < |p| <= bound.
Fraction random_odd_even_fraction(std::mt19937_64& rng, long long bound) {
    std::uniform_int_distribution<long long> pd(3, bound);
    std::bernoulli_distribution coin;
    for (;;) {
        long long p = pd(rng) | 1;
        if (p < 3) continue;
        std::uniform_int_distribution<long long> qd(1, (p - 1) / 2);
        long long q = 2 * qd(rng);
        Int pi(p), qi(q);
        if (boost::multiprecision::gcd(pi, qi) != 1) continue;
        if (coin(rng)) pi = -pi;
        return Fraction(pi, qi);
    }
}

}  // namespace

TEST_CASE("eval_cf nests innermost-first") {
    CHECK(eval_cf(ints({4, 4})) == Fraction(Int(17), Int(4)));
    CHECK(eval_cf(ints({4, 4, 4, 4})) == Fraction(Int(305), Int(72)));
    CHECK(eval_cf(ints({4, 2, 4, 2})) == Fraction(Int(89), Int(20)));
    CHECK(eval_cf(ints({2})) == Fraction(Int(2), Int(1)));
    CHECK(eval_cf(ints({4, -2})) == Fraction(Int(7), Int(2)));
    CHECK(eval_cf(ints({-4, 2})) == Fraction(Int(-7), Int(2)));
}

TEST_CASE("eval_cf rejects empty and zero-tail sequences") {
    CHECK_THROWS_AS(eval_cf(std::vector<Int>{}), EmptySequenceError);
    CHECK_THROWS_AS(eval_cf(ints({2, 0})), ZeroTailError);
    CHECK_THROWS_AS(eval_cf(ints({3, 1, -1})), ZeroTailError);  // tail 1 + 1/(-1) = 0
}

TEST_CASE("EvenCF validates its coefficients") {
    CHECK_NOTHROW(EvenCF(ints({4, -2})));
    CHECK_THROWS_AS(EvenCF(ints({4, 3})), NotEvenError);
    CHECK_THROWS_AS(EvenCF(ints({4, 0})), Error);
    CHECK(EvenCF().empty());
}

TEST_CASE("even_cf reproduces the worked expansions") {
    CHECK(even_cf(Fraction(Int(17), Int(4))) == EvenCF(ints({4, 4})));
    CHECK(even_cf(Fraction(Int(9), Int(2))) == EvenCF(ints({4, 2})));
    // derived case: eval_cf([4,-2]) = 4 - 1/2 = 7/2, so 7/2 -> [4,-2]
    EvenCF cf = even_cf(Fraction(Int(7), Int(2)));
    CHECK(cf == EvenCF(ints({4, -2})));
    CHECK(eval_cf(cf) == Fraction(Int(7), Int(2)));
}

TEST_CASE("even_cf rejects fractions outside its domain") {
    CHECK_THROWS_AS(even_cf(Fraction(Int(4), Int(3))), BadParityError);   // p even
    CHECK_THROWS_AS(even_cf(Fraction(Int(7), Int(3))), BadParityError);   // q odd
    CHECK_THROWS_AS(even_cf(Fraction(Int(3), Int(8))), OutOfRangeError);  // q >= |p|
    CHECK_THROWS_AS(even_cf(Fraction(Int(7), Int(1))), BadParityError);   // integer, q = 1
}

TEST_CASE("determinant is |p| for odd p") {
    CHECK(determinant(Fraction(Int(17), Int(4))) == 17);
    CHECK(determinant(Fraction(Int(9), Int(2))) == 9);
    CHECK(determinant(Fraction(Int(7), Int(2))) == 7);
    CHECK(determinant(Fraction(Int(-7), Int(2))) == 7);
    CHECK_THROWS_AS(determinant(Fraction(Int(4), Int(3))), BadParityError);
}

TEST_CASE("nearest_even picks the closer even integer") {
    CHECK(nearest_even(Fraction(Int(17), Int(4))) == 4);   // 4.25
    CHECK(nearest_even(Fraction(Int(9), Int(2))) == 4);    // 4.5: evens at 4 and 6
    CHECK(nearest_even(Fraction(Int(7), Int(2))) == 4);    // 3.5
    CHECK(nearest_even(Fraction(Int(-7), Int(2))) == -4);  // -3.5
    CHECK(nearest_even(Fraction(Int(1), Int(4))) == 0);
    CHECK_THROWS_AS(nearest_even(Fraction(Int(3))), Error);  // odd integer: tie
}

TEST_CASE("roundtrip: eval_cf(even_cf(f)) == f with all entries even and nonzero") {
    std::mt19937_64 rng(987654321);
    for (int i = 0; i < 300; ++i) {
        Fraction f = random_odd_even_fraction(rng, 1000000);
        EvenCF cf = even_cf(f);
        CHECK(eval_cf(cf) == f);
        CHECK(cf.size() % 2 == 0);
        for (const Int& a : cf.coefficients()) {
            CHECK(a != 0);
            CHECK(a % 2 == 0);
        }
    }
}
