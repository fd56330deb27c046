#include "wrc/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace wrc {
namespace linalg {

namespace {

using i128 = __int128;

inline i128 iabs(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

constexpr i128 I64MAX = i128(INT64_MAX);

long long fit64(i128 v) {
    if (v > I64MAX || v < -I64MAX) throw int_overflow{};
    return static_cast<long long>(v);
}

inline ZZ gcd_of(const ZZ& a, const ZZ& b) {
    ZZ r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool abs_less(const long long& a, const long long& b) {
    unsigned long long ua =
        a < 0 ? 0ULL - static_cast<unsigned long long>(a) : static_cast<unsigned long long>(a);
    unsigned long long ub =
        b < 0 ? 0ULL - static_cast<unsigned long long>(b) : static_cast<unsigned long long>(b);
    return ua < ub;
}
bool abs_less(const ZZ& a, const ZZ& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

long long lcm_of(const long long& a, const long long& b) {
    i128 g = gcd128(a, b);
    if (g == 0) return 0;
    return fit64(iabs(i128(a) / g * b));
}
ZZ lcm_of(const ZZ& a, const ZZ& b) {
    ZZ r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

long long exact_div(const long long& a, const long long& b) { return a / b; }
ZZ exact_div(const ZZ& a, const ZZ& b) {
    ZZ r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

long long checked_mul(const long long& a, const long long& b) { return fit64(i128(a) * b); }
ZZ checked_mul(const ZZ& a, const ZZ& b) { return a * b; }

} // namespace

// --- long long instantiation (exact via __int128 intermediates) ---------

template <>
void combine_rows<long long>(std::vector<long long>& target, const std::vector<long long>& source,
                             const long long& a, const long long& b) {
    const std::size_t n = target.size();
    static thread_local std::vector<i128> buf;
    buf.resize(n);
    i128 g = 0;
    for (std::size_t k = 0; k < n; ++k) {
        buf[k] = i128(a) * target[k] - i128(b) * source[k];
        if (g != 1) g = gcd128(g, buf[k]);
    }
    if (g == 0) {
        std::fill(target.begin(), target.end(), 0);
        return;
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (buf[k] != 0) {
            if (buf[k] < 0) g = -g;
            break;
        }
    }
    for (std::size_t k = 0; k < n; ++k) target[k] = fit64(buf[k] / g);
}

template <>
void normalize_row<long long>(std::vector<long long>& row) {
    i128 g = 0;
    for (long long v : row) {
        if (g == 1) break;
        g = gcd128(g, v);
    }
    if (g == 0) return;
    for (long long v : row) {
        if (v != 0) {
            if (v < 0) g = -g;
            break;
        }
    }
    if (g == 1) return;
    long long gl = static_cast<long long>(g);
    for (auto& v : row) v /= gl;
}

// --- ZZ instantiation ----------------------------------------------------

template <>
void combine_rows<ZZ>(std::vector<ZZ>& target, const std::vector<ZZ>& source, const ZZ& a,
                      const ZZ& b) {
    const std::size_t n = target.size();
    // a and b may alias entries of target; copy before mutating
    const ZZ av = a, bv = b;
    ZZ g = 0;
    for (std::size_t k = 0; k < n; ++k) {
        target[k] = av * target[k] - bv * source[k];
        if (g != 1) g = gcd_of(g, target[k]);
    }
    if (g == 0) return;
    for (std::size_t k = 0; k < n; ++k) {
        if (target[k] != 0) {
            if (target[k] < 0) g = -g;
            break;
        }
    }
    if (g == 1) return;
    for (auto& v : target) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

template <>
void normalize_row<ZZ>(std::vector<ZZ>& row) {
    ZZ g = 0;
    for (const auto& v : row) {
        if (g == 1) break;
        g = gcd_of(g, v);
    }
    if (g == 0) return;
    for (const auto& v : row) {
        if (v != 0) {
            if (v < 0) g = -g;
            break;
        }
    }
    if (g == 1) return;
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// --- generic algorithms ---------------------------------------------------

template <class T>
Rref<T> rref(std::vector<std::vector<T>> rows, std::size_t ncols) {
    for (auto& r : rows) normalize_row<T>(r);
    Rref<T> out;
    std::vector<bool> used(rows.size(), false);
    for (std::size_t col = 0; col < ncols; ++col) {
        std::size_t best = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r][col] == 0) continue;
            if (best == rows.size() || abs_less(rows[r][col], rows[best][col])) best = r;
        }
        if (best == rows.size()) continue;
        used[best] = true;
        T pivot = rows[best][col];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || rows[r][col] == 0) continue;
            combine_rows<T>(rows[r], rows[best], pivot, rows[r][col]);
        }
        for (std::size_t k = 0; k < out.rows.size(); ++k) {
            if (out.rows[k][col] == 0) continue;
            combine_rows<T>(out.rows[k], rows[best], pivot, out.rows[k][col]);
        }
        out.rows.push_back(std::move(rows[best]));
        out.pivot_cols.push_back(col);
    }
    return out;
}

template <class T>
std::vector<std::vector<T>> nullspace(const std::vector<std::vector<T>>& rows, std::size_t ncols) {
    Rref<T> R = rref<T>(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : R.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<T>> kernel;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        T scale(1);
        for (std::size_t r = 0; r < R.rows.size(); ++r) {
            if (R.rows[r][f] == 0) continue;
            scale = lcm_of(scale, R.rows[r][R.pivot_cols[r]]);
        }
        std::vector<T> v(ncols, T(0));
        v[f] = scale;
        for (std::size_t r = 0; r < R.rows.size(); ++r) {
            if (R.rows[r][f] == 0) continue;
            v[R.pivot_cols[r]] =
                -checked_mul(R.rows[r][f], exact_div(scale, R.rows[r][R.pivot_cols[r]]));
        }
        normalize_row<T>(v);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

template <class T>
std::vector<T> RowSpan<T>::add(std::vector<T> v) {
    normalize_row<T>(v);
    auto find_lead = [&](std::size_t from) {
        std::size_t k = from;
        while (k < ncols_ && v[k] == 0) ++k;
        return k;
    };
    std::size_t lead = find_lead(0);
    while (lead < ncols_) {
        auto it = rows_.find(lead);
        if (it == rows_.end()) break;
        combine_rows<T>(v, it->second, it->second[lead], v[lead]);
        lead = find_lead(lead);
    }
    if (lead >= ncols_) return {};
    rows_.emplace(lead, v);
    return v;
}

// explicit instantiations
template Rref<long long> rref<long long>(std::vector<std::vector<long long>>, std::size_t);
template Rref<ZZ> rref<ZZ>(std::vector<std::vector<ZZ>>, std::size_t);
template std::vector<std::vector<long long>> nullspace<long long>(
    const std::vector<std::vector<long long>>&, std::size_t);
template std::vector<std::vector<ZZ>> nullspace<ZZ>(const std::vector<std::vector<ZZ>>&,
                                                    std::size_t);
template class RowSpan<long long>;
template class RowSpan<ZZ>;

} // namespace linalg
} // namespace wrc
