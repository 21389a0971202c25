#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "slicedepth/fraction.hpp"

namespace slicedepth {

/// Coefficient sequence (a_1, ..., a_m) of an all-even continued
/// fraction C(a_1, ..., a_m). Every entry is even and nonzero. The
/// length may be odd; odd-length sequences present links and are
/// rejected where a knot is required (see build_word).
class EvenCF {
public:
    EvenCF() = default;

    explicit EvenCF(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) {
        for (const Int& a : coeffs_) {
            if (a == 0) throw Error("even continued fraction: coefficients must be nonzero");
            if (a % 2 != 0)
                throw NotEvenError("even continued fraction: odd coefficient " + a.str());
        }
    }

    const std::vector<Int>& coefficients() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    bool empty() const { return coeffs_.empty(); }

    friend bool operator==(const EvenCF& a, const EvenCF& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const EvenCF& a, const EvenCF& b) { return !(a == b); }

private:
    std::vector<Int> coeffs_;
};

/// Value of a_1 + 1/(a_2 + 1/(... + 1/a_m)), evaluated innermost-first
/// with exact arithmetic.
inline Fraction eval_cf(std::span<const Int> coefficients) {
    if (coefficients.empty()) throw EmptySequenceError();
    Fraction tail(coefficients.back());
    for (std::size_t i = coefficients.size() - 1; i-- > 0;) {
        if (tail.is_zero()) throw ZeroTailError(i + 1);
        tail = Fraction(coefficients[i]) + tail.reciprocal();
    }
    return tail;
}

inline Fraction eval_cf(const std::vector<Int>& coefficients) {
    return eval_cf(std::span<const Int>(coefficients.data(), coefficients.size()));
}

inline Fraction eval_cf(const EvenCF& cf) { return eval_cf(cf.coefficients()); }

namespace detail {

/// Floor division with b > 0 (cpp_int division truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

}  // namespace detail

/// The even integer nearest to x. Throws if x is equidistant between
/// two even integers, i.e. an odd integer; that cannot happen for a
/// fraction with odd numerator and even denominator.
inline Int nearest_even(const Fraction& x) {
    Int f = detail::floor_div(x.numerator(), x.denominator());
    Int lo = (f % 2 == 0) ? f : f - 1;  // lo <= x < lo + 2, lo even
    // distance comparison, exactly: x - lo vs (lo + 2) - x
    Int lhs = 2 * x.numerator();
    Int rhs = (2 * lo + 2) * x.denominator();
    if (lhs == rhs) throw Error("nearest_even: tie, x is an odd integer");
    return lhs < rhs ? lo : lo + 2;
}

/// All-even continued fraction expansion of f = p/q with p odd,
/// q even and 0 < q < |p|. At each step the quotient is the even
/// integer nearest to the current value; the remainders' denominators
/// strictly decrease, so the loop terminates. The expansion is checked
/// against eval_cf before returning.
inline EvenCF even_cf(const Fraction& f) {
    const Int& p = f.numerator();
    const Int& q = f.denominator();
    if (q == 0) throw OutOfRangeError("even_cf: denominator is zero");
    if (p % 2 == 0) throw BadParityError("even_cf: numerator must be odd, got " + p.str());
    if (q % 2 != 0) throw BadParityError("even_cf: denominator must be even, got " + q.str());
    if (q >= boost::multiprecision::abs(p))
        throw OutOfRangeError("even_cf: need 0 < q < |p|, got " + f.str());

    std::vector<Int> out;
    Fraction x = f;
    for (;;) {
        Int a = nearest_even(x);
        out.push_back(a);
        Fraction r = x - Fraction(a);
        if (r.is_zero()) break;
        x = r.reciprocal();
    }
    EvenCF result(std::move(out));
    if (result.size() % 2 != 0 || eval_cf(result) != f)
        throw Error("even_cf: expansion failed its exit check for " + f.str());
    return result;
}

/// Determinant of the 2-bridge knot with fraction p/q, which is |p|.
inline Int determinant(const Fraction& f) {
    if (f.numerator() % 2 == 0)
        throw BadParityError("determinant: numerator must be odd, got " + f.numerator().str());
    return boost::multiprecision::abs(f.numerator());
}

}  // namespace slicedepth
