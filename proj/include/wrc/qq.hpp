#pragma once

#include <gmpxx.h>

#include <string>

#include "wrc/errors.hpp"

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals from GMP. Rationals are kept canonical (reduced, positive
// denominator) by mpq_class itself.

namespace wrc {

using ZZ = mpz_class;
using QQ = mpq_class;

inline std::string to_string(const ZZ& z) { return z.get_str(); }

/// Renders "p" or "p/q"; denominator printed only when != 1.
inline std::string to_string(const QQ& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p" or "p/q" with optional sign.
inline QQ qq_from_string(const std::string& s) {
    QQ q;
    if (q.set_str(s, 10) != 0) throw parse_error("bad rational literal: " + s);
    q.canonicalize();
    if (q.get_den() == 0) throw parse_error("zero denominator: " + s);
    return q;
}

inline long long to_ll(const ZZ& z) {
    if (!z.fits_slong_p()) throw error("integer too large for long long: " + z.get_str());
    return z.get_si();
}

/// C(n, k) with out-of-range arguments evaluating to 0.
inline ZZ binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return ZZ(0);
    ZZ r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace wrc
