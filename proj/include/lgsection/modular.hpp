#pragma once

// Arithmetic in GF(p) for p < 2^63, with 128-bit intermediate products.

#include <cstdint>
#include <stdexcept>

#include <gmpxx.h>

namespace lgs::mod {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 add(u64 a, u64 b, u64 p) noexcept {
    const u64 s = a + b;
    return s >= p ? s - p : s;
}

inline u64 sub(u64 a, u64 b, u64 p) noexcept { return a >= b ? a - b : a + p - b; }

inline u64 mul(u64 a, u64 b, u64 p) noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % p);
}

inline u64 neg(u64 a, u64 p) noexcept { return a == 0 ? 0 : p - a; }

inline u64 pow(u64 base, u64 e, u64 p) noexcept {
    u64 r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = mul(r, base, p);
        base = mul(base, base, p);
        e >>= 1;
    }
    return r;
}

// Inverse by Fermat; p must be prime and a nonzero mod p.
inline u64 inv(u64 a, u64 p) {
    if (a % p == 0) throw std::domain_error("mod::inv: zero has no inverse");
    return pow(a, p - 2, p);
}

inline u64 reduce(std::int64_t v, u64 p) noexcept {
    const __int128 r = static_cast<__int128>(v) % static_cast<__int128>(p);
    return static_cast<u64>(r < 0 ? r + p : r);
}

// Floor remainder, so negative values land in [0, p). unsigned long is
// 64-bit on the supported platforms.
inline u64 reduce(const mpz_class& v, u64 p) {
    static_assert(sizeof(unsigned long) == sizeof(u64));
    return mpz_fdiv_ui(v.get_mpz_t(), p);
}

} // namespace lgs::mod
