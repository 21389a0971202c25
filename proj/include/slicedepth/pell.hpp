#pragma once

#include <cstddef>
#include <vector>

#include "slicedepth/fraction.hpp"

namespace slicedepth {

/// Odd-index convergent x_n/y_n of the continued fraction of sqrt(5)
/// or sqrt(6), together with the shifted fraction p/q = x/y + 2.
struct PellRecord {
    unsigned index = 0;  // odd convergent index n
    Int convergent_x;
    Int convergent_y;
    Int shifted_p;
    Int shifted_q;
};

/// First `count` odd-index convergents of sqrt(d) for d = 5 or 6.
/// sqrt(5) = [2; 4, 4, ...] and sqrt(6) = [2; 2, 4, 2, 4, ...]; for
/// odd n the convergent solves x^2 - d y^2 = 1 and the shifted
/// fraction solves p^2 - 4pq - c q^2 = 1 with c = d - 4. Both
/// identities are verified exactly on every emitted record.
inline std::vector<PellRecord> pell_family(int d, std::size_t count) {
    if (d != 5 && d != 6) throw Error("pell_family: d must be 5 or 6");
    if (count == 0) throw Error("pell_family: count must be at least 1");
    const Int c = d - 4;

    std::vector<PellRecord> out;
    out.reserve(count);
    // convergent recurrence h_n = a_n h_{n-1} + h_{n-2}, a_0 = 2
    Int h_prev = 1, h = 2, k_prev = 0, k = 1;
    for (unsigned n = 1; out.size() < count; ++n) {
        Int a = (d == 5) ? 4 : ((n % 2 == 1) ? 2 : 4);
        Int h_next = a * h + h_prev;
        Int k_next = a * k + k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        if (n % 2 == 0) continue;

        PellRecord r{n, h, k, h + 2 * k, k};
        if (r.convergent_x * r.convergent_x - d * r.convergent_y * r.convergent_y != 1)
            throw IdentityError("pell_family: convergent identity failed at index " +
                                std::to_string(n));
        if (r.shifted_p * r.shifted_p - 4 * r.shifted_p * r.shifted_q -
                c * r.shifted_q * r.shifted_q != 1)
            throw IdentityError("pell_family: shifted identity failed at index " +
                                std::to_string(n));
        if (boost::multiprecision::gcd(r.shifted_p, r.shifted_q) != 1)
            throw IdentityError("pell_family: shifted fraction not reduced at index " +
                                std::to_string(n));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace slicedepth
