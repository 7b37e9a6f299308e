#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "integer.hpp"
#include "polynomial.hpp"

namespace slfsr {

namespace detail {

template <FiniteField F>
void require_monic_nonconstant(const Polynomial<F>& f, const char* what) {
    if (f.degree() < 1 || !f.is_monic())
        throw std::invalid_argument(std::string(what) + ": expected a monic polynomial of degree >= 1");
}

template <FiniteField F>
Polynomial<F> random_below(const Polynomial<F>& f, std::mt19937_64& rng) {
    const auto& field = f.field();
    std::vector<typename F::value_type> c;
    for (int i = 0; i < f.degree(); ++i)
        c.push_back(field.element(rng() % field.size()));
    return Polynomial<F>(field, std::move(c));
}

/// Replace every coefficient c_i (i a multiple of p) of a p-th power by its
/// p-th root, dividing exponents by p.
template <FiniteField F>
Polynomial<F> pth_root_poly(const Polynomial<F>& f) {
    const auto& field = f.field();
    const auto p = field.characteristic();
    std::vector<typename F::value_type> c;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p)
        c.push_back(field.pth_root(f.coeffs()[i]));
    return Polynomial<F>(field, std::move(c));
}

}  // namespace detail

/// Rabin's test: f of degree n is irreducible iff x^{Q^n} = x mod f and
/// gcd(x^{Q^{n/r}} - x, f) = 1 for every prime r | n.
template <FiniteField F>
bool is_irreducible(const Polynomial<F>& f) {
    detail::require_monic_nonconstant(f, "is_irreducible");
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == 1)
        return true;
    const auto x = Polynomial<F>::x(f.field()) % f;
    for (auto [r, e] : factor_integer(n).prime_powers) {
        auto h = frobenius_power(x, n / static_cast<unsigned>(r), f);
        if (!gcd(h - x, f).is_one())
            return false;
    }
    return frobenius_power(x, n, f) == x;
}

/// Square-free decomposition: f = prod g_i^{e_i} with each g_i square-free
/// and pairwise coprime. Input must be monic.
template <FiniteField F>
std::vector<std::pair<Polynomial<F>, unsigned>> squarefree_decomposition(const Polynomial<F>& f) {
    std::vector<std::pair<Polynomial<F>, unsigned>> out;
    if (f.degree() < 1)
        return out;
    const auto p = static_cast<unsigned>(f.field().characteristic());
    auto c = gcd(f, f.derivative());
    auto w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        auto y = gcd(w, c);
        auto fac = w / y;
        if (fac.degree() > 0)
            out.emplace_back(fac.monic(), i);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, e] : squarefree_decomposition(detail::pth_root_poly(c).monic()))
            out.emplace_back(std::move(g), e * p);
    }
    return out;
}

/// Distinct-degree factorisation of a monic square-free polynomial: pairs
/// (product of all irreducible factors of degree d, d).
template <FiniteField F>
std::vector<std::pair<Polynomial<F>, unsigned>> distinct_degree_factors(const Polynomial<F>& f) {
    std::vector<std::pair<Polynomial<F>, unsigned>> out;
    auto rest = f;
    const auto x = Polynomial<F>::x(f.field());
    auto h = x % rest;
    for (unsigned d = 1; rest.degree() >= static_cast<int>(2 * d); ++d) {
        h = powmod(h, f.field().size(), rest);
        auto g = gcd(rest, h - x);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() > 0)
        out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
    return out;
}

/// Equal-degree splitting (Cantor-Zassenhaus; trace map in characteristic
/// 2) of a monic square-free f whose irreducible factors all have degree d.
/// Returns the factors sorted ascending.
template <FiniteField F>
std::vector<Polynomial<F>> equal_degree_factors(const Polynomial<F>& f, unsigned d, std::mt19937_64& rng) {
    if (f.degree() <= static_cast<int>(d)) {
        return {f.monic()};
    }
    const auto& field = f.field();
    const std::uint64_t Q = field.size();
    const bool even = field.characteristic() == 2;
    unsigned k = 0;  // Q = 2^k
    if (even)
        while ((std::uint64_t{1} << k) < Q)
            ++k;
    for (;;) {
        auto a = detail::random_below(f, rng);
        if (a.degree() < 1)
            continue;
        if (auto g = gcd(a, f); !g.is_one()) {
            auto left = equal_degree_factors(g, d, rng);
            auto right = equal_degree_factors(f / g, d, rng);
            left.insert(left.end(), right.begin(), right.end());
            std::sort(left.begin(), left.end());
            return left;
        }
        Polynomial<F> b(field);
        if (even) {
            // absolute trace a + a^2 + ... + a^{2^{kd-1}}
            auto t = a % f;
            b = t;
            for (unsigned i = 1; i < k * d; ++i) {
                t = mulmod(t, t, f);
                b = b + t;
            }
        } else {
            // a^{(Q^d - 1)/2} = prod_i (a^{(Q-1)/2})^{Q^i}
            auto t = powmod(a, (Q - 1) / 2, f);
            b = t;
            for (unsigned i = 1; i < d; ++i) {
                t = powmod(t, Q, f);
                b = mulmod(b, t, f);
            }
            b = b - Polynomial<F>::one(field);
        }
        auto g = gcd(b, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            auto left = equal_degree_factors(g, d, rng);
            auto right = equal_degree_factors(f / g, d, rng);
            left.insert(left.end(), right.begin(), right.end());
            std::sort(left.begin(), left.end());
            return left;
        }
    }
}

/// Complete factorisation of a monic polynomial into monic irreducibles with
/// multiplicities, sorted by factor. Deterministic for a given seed.
template <FiniteField F>
std::vector<std::pair<Polynomial<F>, unsigned>> factor(const Polynomial<F>& f, std::uint64_t seed = 0) {
    detail::require_monic_nonconstant(f, "factor");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Polynomial<F>, unsigned>> out;
    for (const auto& [sq, e] : squarefree_decomposition(f))
        for (const auto& [part, d] : distinct_degree_factors(sq))
            for (auto& g : equal_degree_factors(part, d, rng))
                out.emplace_back(std::move(g), e);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

/// Order of x modulo an irreducible g with g(0) != 0: strip prime factors
/// from Q^d - 1 while x^{e/p} = 1.
template <FiniteField F>
std::uint64_t irreducible_order(const Polynomial<F>& g) {
    const std::uint64_t N = checked_pow(g.field().size(), static_cast<unsigned>(g.degree())) - 1;
    const auto x = Polynomial<F>::x(g.field());
    std::uint64_t e = N;
    for (auto [p, k] : factor_integer(N).prime_powers) {
        for (unsigned i = 0; i < k; ++i) {
            if (powmod(x, e / p, g).is_one())
                e /= p;
            else
                break;
        }
    }
    return e;
}

}  // namespace detail

/// Least e >= 1 with f | x^e - 1. f must be monic with f(0) != 0.
template <FiniteField F>
std::uint64_t poly_order(const Polynomial<F>& f, std::uint64_t seed = 0) {
    detail::require_monic_nonconstant(f, "poly_order");
    if (f.field().is_zero(f[0]))
        throw std::invalid_argument("poly_order: f(0) = 0, order undefined");
    checked_pow(f.field().size(), static_cast<unsigned>(f.degree()));
    if (is_irreducible(f))
        return detail::irreducible_order(f);
    const std::uint64_t p = f.field().characteristic();
    std::uint64_t order = 1;
    for (const auto& [g, e] : factor(f, seed)) {
        // ord(g^e) = ord(g) * p^t with t least such that p^t >= e
        std::uint64_t o = detail::irreducible_order(g);
        for (std::uint64_t pt = 1; pt < e; pt *= p)
            o *= p;
        order = lcm_u64(order, o);
    }
    return order;
}

/// Monic f of degree n is primitive iff f(0) != 0 and ord f = Q^n - 1.
template <FiniteField F>
bool is_primitive(const Polynomial<F>& f) {
    detail::require_monic_nonconstant(f, "is_primitive");
    if (f.field().is_zero(f[0]))
        return false;
    if (!is_irreducible(f))
        return false;
    const std::uint64_t N = checked_pow(f.field().size(), static_cast<unsigned>(f.degree())) - 1;
    return detail::irreducible_order(f) == N;
}

/// Enumeration cap for enumerate_primitive and other q^n-sized scans.
inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 24;

namespace detail {

inline Poly monic_from_index(const PrimeField& field, unsigned n, std::uint64_t index) {
    std::vector<PrimeField::value_type> c(n + 1, 0);
    for (unsigned i = 0; i < n; ++i) {
        c[i] = static_cast<PrimeField::value_type>(index % field.q());
        index /= field.q();
    }
    c[n] = 1;
    return Poly(field, std::move(c));
}

}  // namespace detail

/// All monic primitive polynomials of degree n over F_q, in ascending order
/// (top coefficients most significant).
inline std::vector<Poly> enumerate_primitive(unsigned n, const PrimeField& field) {
    if (n == 0)
        throw std::invalid_argument("enumerate_primitive: degree must be >= 1");
    std::uint64_t count = 0;
    try {
        count = checked_pow(field.q(), n);
    } catch (const infeasible_error&) {
        count = kEnumerationCap + 1;
    }
    if (count > kEnumerationCap)
        throw infeasible_error("enumerate_primitive: q^n exceeds 2^24");
    std::vector<Poly> out;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        if (idx % field.q() == 0)  // zero constant term
            continue;
        auto f = detail::monic_from_index(field, n, idx);
        if (is_primitive(f))
            out.push_back(std::move(f));
    }
    return out;
}

/// The least primitive polynomial of degree n; agrees with
/// enumerate_primitive(n, field).front() but stops at the first hit, so it
/// also works beyond the enumeration cap.
inline Poly first_primitive(unsigned n, const PrimeField& field) {
    if (n == 0)
        throw std::invalid_argument("first_primitive: degree must be >= 1");
    const std::uint64_t count = checked_pow(field.q(), n);
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        if (idx % field.q() == 0)
            continue;
        auto f = detail::monic_from_index(field, n, idx);
        if (is_primitive(f))
            return f;
    }
    throw std::logic_error("no primitive polynomial found");  // unreachable for prime q
}

}  // namespace slfsr
