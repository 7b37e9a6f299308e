#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace slfsr {

/// Largest integer accepted by factor_integer. Desk-scale q^{mn} - 1 stays
/// below this, so trial division is always enough.
inline constexpr std::uint64_t kFactorCap = std::uint64_t{1} << 63;

struct IntFactorization {
    std::uint64_t value = 1;
    std::vector<std::pair<std::uint64_t, unsigned>> prime_powers;

    bool operator==(const IntFactorization&) const = default;
};

inline IntFactorization factor_integer(std::uint64_t n) {
    if (n == 0 || n > kFactorCap)
        throw std::out_of_range("factor_integer: " + std::to_string(n) + " outside [1, 2^63]");
    IntFactorization out{n, {}};
    auto take = [&](std::uint64_t p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e != 0)
            out.prime_powers.emplace_back(p, e);
    };
    take(2);
    take(3);
    for (std::uint64_t p = 5; p <= n / p; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n > 1)
        out.prime_powers.emplace_back(n, 1);
    return out;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t phi = n;
    for (auto [p, e] : factor_integer(n).prime_powers)
        phi = phi / p * (p - 1);
    return phi;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d <= n / d; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// base^exp, or infeasible_error when the result would exceed 2^63.
inline std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > kFactorCap / base)
            throw infeasible_error("integer power " + std::to_string(base) + "^" +
                                   std::to_string(exp) + " exceeds 2^63");
        r *= base;
    }
    return r;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return a / std::gcd(a, b) * b;
}

}  // namespace slfsr
