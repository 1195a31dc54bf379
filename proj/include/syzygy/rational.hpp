#pragma once

#include <gmpxx.h>

#include <string>

#include "syzygy/error.hpp"

namespace syzygy {

/// Exact arbitrary-precision rational scalar. mpq_class keeps the canonical
/// form (positive denominator, gcd(num, den) = 1) after every arithmetic
/// operation, which is exactly the invariant the library needs.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "n", "-n" or "n/d" (optionally signed) into a canonical rational.
/// Throws BadInput on anything else, including a zero denominator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw BadInput("empty rational literal");
    std::string t;
    t.reserve(s.size());
    for (char c : s) {
        if (c == ' ') continue;
        if (c == '-' || c == '/' || (c >= '0' && c <= '9')) {
            t.push_back(c);
        } else {
            throw BadInput("bad rational literal: \"" + s + "\"");
        }
    }
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, t.c_str(), 10) != 0) {
        mpq_clear(q);
        throw BadInput("bad rational literal: \"" + s + "\"");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw BadInput("zero denominator: \"" + s + "\"");
    }
    mpq_canonicalize(q);
    Rat out(q);
    mpq_clear(q);
    return out;
}

/// Renders a canonical rational as "n" or "n/d".
inline std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace syzygy
