#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "slicedepth/continued_fraction.hpp"
#include "slicedepth/word.hpp"

namespace slicedepth {

enum class Bound { Lower, Upper };

/// A bound on slice depth together with the result it comes from.
struct Justification {
    Bound bound = Bound::Upper;
    int value = 0;
    std::string citation;
};

namespace citation {
inline constexpr const char* two_bridge_upper = "Theorem 4.1";
inline constexpr const char* two_bridge_lower = "Corollary 4.2 (Joseph)";
inline constexpr const char* pretzel_upper = "Theorem 4.4";
inline constexpr const char* pretzel_lower =
    "Corollary 4.5 (Dai-Miller family: 2-twist spin of P(2i+1,4i+1,4i+3))";
inline constexpr const char* ribbon_upper = "Theorem 4.6";
inline constexpr const char* unknotting_upper = "Theorem 4.7";
}  // namespace citation

/// Slice-depth bounds for the n-twist spin of a classical knot. A
/// missing bound is represented as an absent optional, never as 0 or
/// a sentinel.
struct SliceDepthVerdict {
    unsigned twist = 2;
    std::optional<int> lower;
    std::optional<int> upper;
    bool exact = false;
    std::vector<Justification> justifications;

    friend bool operator==(const SliceDepthVerdict& a, const SliceDepthVerdict& b) {
        auto key = [](const SliceDepthVerdict& v) {
            std::vector<std::pair<std::pair<int, int>, std::string>> js;
            for (const Justification& j : v.justifications)
                js.push_back({{static_cast<int>(j.bound), j.value}, j.citation});
            return std::tuple(v.twist, v.lower, v.upper, v.exact, js);
        };
        return key(a) == key(b);
    }
};

/// Assembles a verdict and checks its internal consistency: exact iff
/// both bounds present and equal, lower <= upper, and every present
/// bound justified.
inline SliceDepthVerdict make_verdict(unsigned twist, std::optional<int> lower,
                                      std::optional<int> upper,
                                      std::vector<Justification> justifications) {
    if (twist == 0) throw Error("verdict: twist must be a positive integer");
    if (lower && *lower < 0) throw Error("verdict: negative lower bound");
    if (upper && *upper < 0) throw Error("verdict: negative upper bound");
    if (lower && upper && *lower > *upper) throw Error("verdict: lower bound exceeds upper bound");
    auto justified = [&justifications](Bound b, int value) {
        return std::any_of(justifications.begin(), justifications.end(),
                           [&](const Justification& j) { return j.bound == b && j.value == value; });
    };
    if (lower && !justified(Bound::Lower, *lower)) throw Error("verdict: unjustified lower bound");
    if (upper && !justified(Bound::Upper, *upper)) throw Error("verdict: unjustified upper bound");
    for (const Justification& j : justifications) {
        const std::optional<int>& bound = (j.bound == Bound::Lower) ? lower : upper;
        if (!bound || *bound != j.value) throw Error("verdict: justification for an absent bound");
    }
    SliceDepthVerdict v;
    v.twist = twist;
    v.lower = lower;
    v.upper = upper;
    v.exact = lower && upper && *lower == *upper;
    v.justifications = std::move(justifications);
    return v;
}

namespace detail {

/// Inverse of a modulo m (m > 1, gcd(a, m) = 1), in (0, m).
inline Int mod_inverse(Int a, const Int& m) {
    a %= m;
    if (a < 0) a += m;
    Int r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1) throw Error("mod_inverse: arguments are not coprime");
    if (s0 < 0) s0 += m;
    return s0;
}

/// Denominators equivalent to q as presentations of the 2-bridge knot
/// with determinant p: q, its inverse mod p, and their p-complements.
inline std::set<Int> denominator_class(const Int& p, const Int& q) {
    Int q0 = q % p;
    if (q0 < 0) q0 += p;
    Int inv = mod_inverse(q0, p);
    return {q0, inv, p - q0, p - inv};
}

inline SliceDepthVerdict two_bridge_verdict(unsigned twist, bool word_condition_holds,
                                            const Int& det) {
    std::optional<int> lower, upper;
    std::vector<Justification> js;
    if (twist == 2 && det > 1) {
        lower = 1;
        js.push_back({Bound::Lower, 1, citation::two_bridge_lower});
    }
    if (word_condition_holds) {
        upper = 1;
        js.push_back({Bound::Upper, 1, citation::two_bridge_upper});
    }
    return make_verdict(twist, lower, upper, std::move(js));
}

}  // namespace detail

struct TwoBridgeOptions {
    /// Try the word condition on every even-denominator presentation
    /// of the knot, not just the one given.
    bool representative_search = true;
};

/// Presentations of the knot of f on which the word condition is
/// tried: f itself, then |p|/c for each even c among q, its inverse
/// mod |p|, and their complements.
inline std::vector<Fraction> two_bridge_representatives(const Fraction& f,
                                                        bool representative_search) {
    std::vector<Fraction> reps;
    auto push_unique = [&reps](Fraction g) {
        if (std::find(reps.begin(), reps.end(), g) == reps.end()) reps.push_back(std::move(g));
    };
    if (f.denominator() % 2 == 0) push_unique(f);
    if (!representative_search) {
        if (reps.empty()) push_unique(f);  // let even_cf raise the parity error
        return reps;
    }
    Int p = boost::multiprecision::abs(f.numerator());
    for (const Int& c : detail::denominator_class(p, f.denominator()))
        if (c % 2 == 0 && c != 0) push_unique(Fraction(p, c));
    return reps;
}

/// Outcome of the reduction condition over the tried presentations.
struct TwoBridgeWordCondition {
    bool accepted = false;
    OEWord word;                                // word of the first presentation tried
    std::optional<ReductionWitness> witness;    // for the first accepted presentation
    std::vector<std::pair<Fraction, OEWord>> tried;
};

inline TwoBridgeWordCondition two_bridge_word_condition(const Fraction& f,
                                                        TwoBridgeOptions opts = {}) {
    if (f.numerator() % 2 == 0)
        throw BadParityError("two-bridge fraction must have an odd numerator, got " + f.str());
    std::vector<Fraction> reps = two_bridge_representatives(f, opts.representative_search);
    if (reps.empty()) {
        even_cf(f);  // a valid fraction always has an even presentation; raise its error
        throw Error("two_bridge_word_condition: no presentation to try for " + f.str());
    }
    TwoBridgeWordCondition out;
    for (const Fraction& rep : reps) {
        OEWord w = build_word(even_cf(rep));
        if (out.tried.empty()) out.word = w;
        ReductionResult r = reduces(w);
        if (r.accepted && !out.accepted) {
            out.accepted = true;
            out.witness = std::move(r.witness);
        }
        out.tried.push_back({rep, std::move(w)});
    }
    return out;
}

/// Slice-depth verdict for the n-twist spin of the 2-bridge knot with
/// fraction f. The word condition gives upper = 1; for n = 2 the
/// determinant gives lower = 1.
inline SliceDepthVerdict classify_two_bridge(const Fraction& f, unsigned twist,
                                             TwoBridgeOptions opts = {}) {
    TwoBridgeWordCondition cond = two_bridge_word_condition(f, opts);
    return detail::two_bridge_verdict(twist, cond.accepted, determinant(f));
}

inline SliceDepthVerdict classify_two_bridge(const EvenCF& coefficients, unsigned twist,
                                             TwoBridgeOptions opts = {}) {
    if (coefficients.size() % 2 != 0) throw OddLengthError();
    Fraction f = eval_cf(coefficients);
    if (!opts.representative_search) {
        bool accepted = reduces(build_word(coefficients)).accepted;
        return detail::two_bridge_verdict(twist, accepted, determinant(f));
    }
    return classify_two_bridge(f, twist, opts);
}

struct PretzelOptions {
    /// Accept the i = 0 member P(1, 1, 3) of the pattern as well.
    bool allow_i_zero = false;
};

/// Whether (p, q, r) = (4i+1, 8i+1, 8i+3) for some integer i >= 1
/// (or i >= 0 when allowed), equivalently p = 1 mod 4, q = 2p - 1 and
/// r = 2p + 1.
inline bool pretzel_pattern_matches(const Int& p, const Int& q, const Int& r,
                                    PretzelOptions opts = {}) {
    if (p < (opts.allow_i_zero ? 1 : 5)) return false;
    return p % 4 == 1 && q == 2 * p - 1 && r == 2 * p + 1;
}

/// Slice-depth verdict for the n-twist spin of the pretzel knot
/// P(p, q, r). Bounds are emitted only for the P(4i+1, 8i+1, 8i+3)
/// family: upper = 2, and additionally lower = 1 when n = 2.
inline SliceDepthVerdict classify_pretzel(const Int& p, const Int& q, const Int& r, unsigned twist,
                                          PretzelOptions opts = {}) {
    if (p % 2 == 0 || q % 2 == 0 || r % 2 == 0)
        throw InvalidPretzelError("pretzel parameters must all be odd for a knot, got P(" +
                                  p.str() + "," + q.str() + "," + r.str() + ")");
    std::optional<int> lower, upper;
    std::vector<Justification> js;
    if (pretzel_pattern_matches(p, q, r, opts)) {
        if (twist == 2) {
            lower = 1;
            js.push_back({Bound::Lower, 1, citation::pretzel_lower});
        }
        upper = 2;
        js.push_back({Bound::Upper, 2, citation::pretzel_upper});
    }
    return make_verdict(twist, lower, upper, std::move(js));
}

/// Ribbon knot of 1-fusion R(a_1, ..., a_m): the band winding counts,
/// the signed sum sigma of full twists originally in the ribbon band,
/// and the crossing-sign sum w of the band core after unknotting.
struct RibbonOneFusionData {
    std::vector<Int> windings;
    Int sigma;
    Int w;
};

/// Upper bound 2 when a_1 + ... + a_m + sigma + w is even; no lower
/// bound is available for this family.
inline SliceDepthVerdict classify_ribbon_one_fusion(const RibbonOneFusionData& data,
                                                    unsigned twist) {
    if (data.windings.empty()) throw Error("ribbon data: need at least one winding count");
    Int sum = data.sigma + data.w;
    for (const Int& a : data.windings) sum += a;
    std::optional<int> upper;
    std::vector<Justification> js;
    if (sum % 2 == 0) {
        upper = 2;
        js.push_back({Bound::Upper, 2, citation::ribbon_upper});
    }
    return make_verdict(twist, std::nullopt, upper, std::move(js));
}

/// One band of an unknotting-number presentation: sigma_i and w_i as
/// for the ribbon case, and lambda_i, the number of times the band
/// wraps around the axis circle.
struct UnknottingBand {
    Int sigma;
    Int w;
    Int lambda;
};

struct UnknottingBandData {
    std::vector<UnknottingBand> bands;
};

/// Upper bound u (the number of bands) when sigma_i + w_i + lambda_i
/// is even for every band; no lower bound.
inline SliceDepthVerdict classify_unknotting(const UnknottingBandData& data, unsigned twist) {
    if (data.bands.empty()) throw Error("unknotting data: need at least one band");
    bool all_even = true;
    for (const UnknottingBand& b : data.bands) {
        if (b.lambda < 0) throw Error("unknotting data: lambda must be non-negative");
        if ((b.sigma + b.w + b.lambda) % 2 != 0) all_even = false;
    }
    std::optional<int> upper;
    std::vector<Justification> js;
    if (all_even) {
        upper = static_cast<int>(data.bands.size());
        js.push_back({Bound::Upper, *upper, citation::unknotting_upper});
    }
    return make_verdict(twist, std::nullopt, upper, std::move(js));
}

}  // namespace slicedepth
