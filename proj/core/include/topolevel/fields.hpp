#ifndef TOPOLEVEL_FIELDS_HPP
#define TOPOLEVEL_FIELDS_HPP

#include <cstdint>

#include <gmpxx.h>

namespace topolevel {

// Coefficient field for exact linear algebra.  Rationals are the
// authoritative path; the prime field is an opt-in fast path for
// rank-only computations.
enum class Field { exact_rationals, prime_field };

using Rational = mpq_class;

// Arithmetic in Z/p for the Mersenne prime 2^31 - 1.
struct PrimeField {
    static constexpr std::uint32_t p = 2147483647u;

    static std::uint32_t add(std::uint32_t a, std::uint32_t b) {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    static std::uint32_t sub(std::uint32_t a, std::uint32_t b) {
        return a >= b ? a - b : a + p - b;
    }
    static std::uint32_t neg(std::uint32_t a) { return a == 0 ? 0 : p - a; }
    static std::uint32_t mul(std::uint32_t a, std::uint32_t b) {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(a) * b) % p);
    }
    static std::uint32_t pow(std::uint32_t base, std::uint64_t e) {
        std::uint64_t acc = 1;
        std::uint64_t cur = base % p;
        while (e > 0) {
            if (e & 1) acc = (acc * cur) % p;
            cur = (cur * cur) % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(acc);
    }
    static std::uint32_t inv(std::uint32_t a) { return pow(a, p - 2); }
    static std::uint32_t from_int(std::int64_t v) {
        std::int64_t m = v % static_cast<std::int64_t>(p);
        if (m < 0) m += p;
        return static_cast<std::uint32_t>(m);
    }
};

}  // namespace topolevel

#endif
