#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "prime_field.hpp"

namespace slfsr {

/// Dense univariate polynomial over a finite field, coefficients ascending
/// (constant term first). The zero polynomial has no coefficients and
/// degree -1, which compares below every real degree.
template <FiniteField F>
class Polynomial {
public:
    using field_type = F;
    using value_type = typename F::value_type;

    explicit Polynomial(F field) : field_(std::move(field)) {}

    Polynomial(F field, std::vector<value_type> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial constant(const F& field, value_type c) { return Polynomial(field, {std::move(c)}); }

    /// c * x^k
    static Polynomial monomial(const F& field, value_type c, std::size_t k) {
        std::vector<value_type> v(k + 1, field.zero());
        v[k] = std::move(c);
        return Polynomial(field, std::move(v));
    }

    static Polynomial x(const F& field) { return monomial(field, field.one(), 1); }
    static Polynomial one(const F& field) { return constant(field, field.one()); }

    const F& field() const { return field_; }
    const std::vector<value_type>& coeffs() const { return coeffs_; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == field_.one(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == field_.one(); }

    const value_type& lead() const {
        if (coeffs_.empty())
            throw std::domain_error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    value_type operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }

    value_type eval(const value_type& at) const {
        value_type r = field_.zero();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            r = field_.add(field_.mul(r, at), *it);
        return r;
    }

    Polynomial derivative() const {
        std::vector<value_type> d;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            // i * c_i, with i taken mod the characteristic
            value_type acc = field_.zero();
            for (std::uint64_t k = 0; k < i % field_.characteristic(); ++k)
                acc = field_.add(acc, coeffs_[i]);
            d.push_back(acc);
        }
        return Polynomial(field_, std::move(d));
    }

    Polynomial monic() const {
        if (is_zero())
            return *this;
        auto inv = field_.inv(lead());
        std::vector<value_type> c;
        c.reserve(coeffs_.size());
        for (const auto& a : coeffs_)
            c.push_back(field_.mul(a, inv));
        return Polynomial(field_, std::move(c));
    }

    Polynomial scaled(const value_type& s) const {
        std::vector<value_type> c;
        c.reserve(coeffs_.size());
        for (const auto& a : coeffs_)
            c.push_back(field_.mul(a, s));
        return Polynomial(field_, std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    /// Degree first, then coefficients from the top down by element index.
    /// Over F_q this is the numeric order of the coefficient vector read as a
    /// base-q integer with c_0 least significant.
    friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0)
            return c;
        for (int i = a.degree(); i >= 0; --i) {
            auto ia = a.field_.index_of(a.coeffs_[i]);
            auto ib = a.field_.index_of(b.coeffs_[i]);
            if (ia != ib)
                return ia <=> ib;
        }
        return std::strong_ordering::equal;
    }

private:
    void trim() {
        while (!coeffs_.empty() && field_.is_zero(coeffs_.back()))
            coeffs_.pop_back();
    }

    F field_;
    std::vector<value_type> coeffs_;
};

using Poly = Polynomial<PrimeField>;

namespace detail {

template <FiniteField F>
void require_same_field(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (!(a.field() == b.field()))
        throw std::invalid_argument("polynomials over different fields");
}

}  // namespace detail

template <FiniteField F>
Polynomial<F> operator+(const Polynomial<F>& a, const Polynomial<F>& b) {
    detail::require_same_field(a, b);
    const auto& f = a.field();
    std::vector<typename F::value_type> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = f.add(a[i], b[i]);
    return Polynomial<F>(f, std::move(c));
}

template <FiniteField F>
Polynomial<F> operator-(const Polynomial<F>& a, const Polynomial<F>& b) {
    detail::require_same_field(a, b);
    const auto& f = a.field();
    std::vector<typename F::value_type> c(std::max(a.coeffs().size(), b.coeffs().size()), f.zero());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = f.sub(a[i], b[i]);
    return Polynomial<F>(f, std::move(c));
}

template <FiniteField F>
Polynomial<F> operator-(const Polynomial<F>& a) {
    return Polynomial<F>(a.field()) - a;
}

template <FiniteField F>
Polynomial<F> operator*(const Polynomial<F>& a, const Polynomial<F>& b) {
    detail::require_same_field(a, b);
    const auto& f = a.field();
    if (a.is_zero() || b.is_zero())
        return Polynomial<F>(f);
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<typename F::value_type> c(x.size() + y.size() - 1, f.zero());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (f.is_zero(x[i]))
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            c[i + j] = f.add(c[i + j], f.mul(x[i], y[j]));
    }
    return Polynomial<F>(f, std::move(c));
}

/// Euclidean division: a = q*b + r with deg r < deg b.
template <FiniteField F>
std::pair<Polynomial<F>, Polynomial<F>> divmod(const Polynomial<F>& a, const Polynomial<F>& b) {
    detail::require_same_field(a, b);
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    const auto& f = a.field();
    if (a.degree() < b.degree())
        return {Polynomial<F>(f), a};
    auto r = a.coeffs();
    const auto& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    const auto lead_inv = f.inv(d.back());
    const bool monic = d.back() == f.one();
    std::vector<typename F::value_type> q(r.size() - db, f.zero());
    for (std::size_t k = r.size(); k-- > db;) {
        if (f.is_zero(r[k]))
            continue;
        auto factor = monic ? r[k] : f.mul(r[k], lead_inv);
        q[k - db] = factor;
        for (std::size_t j = 0; j <= db; ++j)
            r[k - db + j] = f.sub(r[k - db + j], f.mul(factor, d[j]));
    }
    r.resize(db);
    return {Polynomial<F>(f, std::move(q)), Polynomial<F>(f, std::move(r))};
}

template <FiniteField F>
Polynomial<F> operator/(const Polynomial<F>& a, const Polynomial<F>& b) {
    return divmod(a, b).first;
}

template <FiniteField F>
Polynomial<F> operator%(const Polynomial<F>& a, const Polynomial<F>& b) {
    return divmod(a, b).second;
}

/// Monic gcd; gcd(0, 0) is 0.
template <FiniteField F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
    detail::require_same_field(a, b);
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <FiniteField F>
Polynomial<F> lcm(const Polynomial<F>& a, const Polynomial<F>& b) {
    if (a.is_zero() || b.is_zero())
        return Polynomial<F>(a.field());
    return ((a * b) / gcd(a, b)).monic();
}

template <FiniteField F>
Polynomial<F> mulmod(const Polynomial<F>& a, const Polynomial<F>& b, const Polynomial<F>& mod) {
    return (a * b) % mod;
}

/// base^e mod `mod` by square-and-multiply.
template <FiniteField F>
Polynomial<F> powmod(Polynomial<F> base, std::uint64_t e, const Polynomial<F>& mod) {
    detail::require_same_field(base, mod);
    if (mod.is_zero())
        throw std::domain_error("powmod with zero modulus");
    auto result = Polynomial<F>::one(mod.field()) % mod;
    base = base % mod;
    while (e != 0) {
        if (e & 1)
            result = mulmod(result, base, mod);
        e >>= 1;
        if (e != 0)
            base = mulmod(base, base, mod);
    }
    return result;
}

/// a^{Q^k} mod `mod`, where Q is the coefficient field size. Applies the
/// Q-power map k times so the exponent itself never materialises.
template <FiniteField F>
Polynomial<F> frobenius_power(Polynomial<F> a, unsigned k, const Polynomial<F>& mod) {
    const std::uint64_t Q = a.field().size();
    a = a % mod;
    for (unsigned i = 0; i < k; ++i)
        a = powmod(std::move(a), Q, mod);
    return a;
}

}  // namespace slfsr
