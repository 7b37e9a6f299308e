#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "integer.hpp"

namespace slfsr {

/// What the generic polynomial algorithms need from a coefficient field.
/// Elements are enumerable: element(i) for i < size() is a bijection whose
/// inverse is index_of; the polynomial ordering is built on it.
template <class F>
concept FiniteField = std::equality_comparable<F> && requires(const F& f, const typename F::value_type& a,
                                                              std::uint64_t i) {
    typename F::value_type;
    { f.size() } -> std::convertible_to<std::uint64_t>;
    { f.characteristic() } -> std::convertible_to<std::uint64_t>;
    { f.zero() } -> std::same_as<typename F::value_type>;
    { f.one() } -> std::same_as<typename F::value_type>;
    { f.add(a, a) } -> std::same_as<typename F::value_type>;
    { f.sub(a, a) } -> std::same_as<typename F::value_type>;
    { f.neg(a) } -> std::same_as<typename F::value_type>;
    { f.mul(a, a) } -> std::same_as<typename F::value_type>;
    { f.inv(a) } -> std::same_as<typename F::value_type>;
    { f.pth_root(a) } -> std::same_as<typename F::value_type>;
    { f.is_zero(a) } -> std::convertible_to<bool>;
    { f.element(i) } -> std::same_as<typename F::value_type>;
    { f.index_of(a) } -> std::convertible_to<std::uint64_t>;
    { f.format(a) } -> std::convertible_to<std::string>;
};

/// F_q for a prime q < 2^31. Elements are canonical residues in [0, q).
class PrimeField {
public:
    using value_type = std::uint32_t;

    explicit PrimeField(std::uint64_t q) : q_(static_cast<std::uint32_t>(q)) {
        if (q >= (std::uint64_t{1} << 31) || !is_prime_u64(q))
            throw std::invalid_argument("field modulus " + std::to_string(q) + " is not a prime below 2^31");
    }

    std::uint32_t q() const { return q_; }
    std::uint64_t size() const { return q_; }
    std::uint64_t characteristic() const { return q_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }

    value_type from_int(std::int64_t v) const {
        auto r = v % static_cast<std::int64_t>(q_);
        return static_cast<value_type>(r < 0 ? r + q_ : r);
    }

    value_type add(value_type a, value_type b) const {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<value_type>(s >= q_ ? s - q_ : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (q_ - b); }
    value_type neg(value_type a) const { return a == 0 ? 0 : q_ - a; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>(std::uint64_t{a} * b % q_);
    }
    value_type pow(value_type a, std::uint64_t e) const {
        value_type r = 1;
        while (e != 0) {
            if (e & 1)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    value_type inv(value_type a) const {
        if (a == 0)
            throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
        return pow(a, q_ - 2);
    }
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

    // Frobenius is the identity on a prime field.
    value_type pth_root(value_type a) const { return a; }

    bool is_zero(value_type a) const { return a == 0; }
    value_type element(std::uint64_t index) const { return static_cast<value_type>(index); }
    std::uint64_t index_of(value_type a) const { return a; }
    std::string format(value_type a) const { return std::to_string(a); }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t q_;
};

}  // namespace slfsr
