#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ff_core.hpp"

namespace slfsr {

/// Coordinate vector (a_0, ..., a_{m-1}) of an element of F_{q^m} in the
/// power basis {1, y, ..., y^{m-1}}.
struct ExtElem {
    std::vector<std::uint32_t> coords;

    bool operator==(const ExtElem&) const = default;

    /// Same order as ExtField::index_of: a_{m-1} most significant.
    friend std::strong_ordering operator<=>(const ExtElem& a, const ExtElem& b) {
        if (auto c = a.coords.size() <=> b.coords.size(); c != 0)
            return c;
        for (std::size_t i = a.coords.size(); i-- > 0;)
            if (a.coords[i] != b.coords[i])
                return a.coords[i] <=> b.coords[i];
        return std::strong_ordering::equal;
    }
};

/// F_{q^m} = F_q[Y]/(g) for a primitive modulus g of degree m, so the class
/// y of Y generates the multiplicative group. Cheap to copy; copies share
/// one immutable description.
class ExtField {
public:
    using value_type = ExtElem;

    explicit ExtField(Poly modulus) {
        if (modulus.degree() < 1 || !modulus.is_monic())
            throw std::invalid_argument("extension modulus must be monic of degree >= 1");
        if (!is_primitive(modulus))
            throw std::invalid_argument("extension modulus " + format_poly(modulus) + " is not primitive");
        const auto m = static_cast<unsigned>(modulus.degree());
        const auto size = checked_pow(modulus.field().q(), m);
        impl_ = std::make_shared<const Impl>(Impl{modulus.field(), m, std::move(modulus), size});
    }

    /// Uses the least primitive polynomial of degree m as the modulus.
    static ExtField with_default_modulus(const PrimeField& base, unsigned m) {
        return ExtField(first_primitive(m, base));
    }

    const PrimeField& base() const { return impl_->base; }
    unsigned degree() const { return impl_->m; }
    const Poly& modulus() const { return impl_->modulus; }

    std::uint64_t size() const { return impl_->size; }
    std::uint64_t characteristic() const { return impl_->base.q(); }

    value_type zero() const { return ExtElem{std::vector<std::uint32_t>(impl_->m, 0)}; }
    value_type one() const { return from_base(1); }
    value_type generator() const {
        if (impl_->m == 1)
            return from_base(base().neg(impl_->modulus[0]));
        auto e = zero();
        e.coords[1] = 1;
        return e;
    }
    value_type from_base(std::uint32_t c) const {
        auto e = zero();
        e.coords[0] = base().from_int(c);
        return e;
    }

    value_type add(const value_type& a, const value_type& b) const {
        check(a);
        check(b);
        auto r = a;
        for (unsigned i = 0; i < impl_->m; ++i)
            r.coords[i] = base().add(a.coords[i], b.coords[i]);
        return r;
    }
    value_type sub(const value_type& a, const value_type& b) const {
        check(a);
        check(b);
        auto r = a;
        for (unsigned i = 0; i < impl_->m; ++i)
            r.coords[i] = base().sub(a.coords[i], b.coords[i]);
        return r;
    }
    value_type neg(const value_type& a) const { return sub(zero(), a); }

    value_type mul(const value_type& a, const value_type& b) const {
        check(a);
        check(b);
        const unsigned m = impl_->m;
        const auto& F = base();
        std::vector<std::uint32_t> prod(2 * m - 1, 0);
        for (unsigned i = 0; i < m; ++i) {
            if (a.coords[i] == 0)
                continue;
            for (unsigned j = 0; j < m; ++j)
                prod[i + j] = F.add(prod[i + j], F.mul(a.coords[i], b.coords[j]));
        }
        // y^m = -sum g_i y^i
        const auto& g = impl_->modulus.coeffs();
        for (unsigned k = 2 * m - 1; k-- > m;) {
            const auto t = prod[k];
            if (t == 0)
                continue;
            for (unsigned i = 0; i < m; ++i)
                prod[k - m + i] = F.sub(prod[k - m + i], F.mul(t, g[i]));
        }
        prod.resize(m);
        return ExtElem{std::move(prod)};
    }

    value_type pow(value_type a, std::uint64_t e) const {
        auto r = one();
        while (e != 0) {
            if (e & 1)
                r = mul(r, a);
            e >>= 1;
            if (e != 0)
                a = mul(a, a);
        }
        return r;
    }

    value_type inv(const value_type& a) const {
        if (is_zero(a))
            throw std::domain_error("inverse of zero in " + descriptor());
        return pow(a, size() - 2);
    }

    value_type frobenius(const value_type& a) const { return pow(a, characteristic()); }
    value_type pth_root(const value_type& a) const { return pow(a, size() / characteristic()); }

    bool is_zero(const value_type& a) const {
        check(a);
        return std::all_of(a.coords.begin(), a.coords.end(), [](auto c) { return c == 0; });
    }

    value_type element(std::uint64_t index) const {
        auto e = zero();
        for (unsigned i = 0; i < impl_->m; ++i) {
            e.coords[i] = static_cast<std::uint32_t>(index % base().q());
            index /= base().q();
        }
        return e;
    }
    std::uint64_t index_of(const value_type& a) const {
        std::uint64_t idx = 0;
        for (unsigned i = impl_->m; i-- > 0;)
            idx = idx * base().q() + a.coords[i];
        return idx;
    }

    /// Multiplicative order of a nonzero element, by stripping |F*|.
    std::uint64_t element_order(const value_type& a) const {
        if (is_zero(a))
            throw std::domain_error("order of zero");
        std::uint64_t e = size() - 1;
        if (e == 1)
            return 1;
        for (auto [p, k] : factor_integer(size() - 1).prime_powers)
            for (unsigned i = 0; i < k && pow(a, e / p) == one(); ++i)
                e /= p;
        return e;
    }

    /// Polynomial in y: "y+1", "0".
    std::string format(const value_type& a) const { return format_poly(Poly(base(), a.coords), 'y'); }

    /// Coordinate form "a0,a1,...,a{m-1}".
    std::string format_coords(const value_type& a) const {
        std::string out;
        for (unsigned i = 0; i < a.coords.size(); ++i) {
            if (i != 0)
                out += ',';
            out += std::to_string(a.coords[i]);
        }
        return out;
    }

    value_type parse_coords(std::string_view text) const {
        auto toks = detail::split(detail::strip_spaces(text), ',');
        if (toks.size() != impl_->m)
            throw parse_error("element '" + std::string(text) + "' needs " + std::to_string(impl_->m) +
                              " coordinates");
        auto e = zero();
        for (unsigned i = 0; i < impl_->m; ++i)
            e.coords[i] = base().from_int(static_cast<std::int64_t>(detail::parse_uint(toks[i], text) % base().q()));
        return e;
    }

    /// "q=2,m=2,g=x^2+x+1"
    std::string descriptor() const {
        return "q=" + std::to_string(base().q()) + ",m=" + std::to_string(impl_->m) +
               ",g=" + format_poly(impl_->modulus);
    }

    friend bool operator==(const ExtField& a, const ExtField& b) {
        return a.impl_ == b.impl_ || a.impl_->modulus == b.impl_->modulus;
    }

private:
    struct Impl {
        PrimeField base;
        unsigned m;
        Poly modulus;
        std::uint64_t size;
    };

    void check(const value_type& a) const {
        if (a.coords.size() != impl_->m)
            throw std::invalid_argument("element with " + std::to_string(a.coords.size()) +
                                        " coordinates used in " + descriptor());
    }

    std::shared_ptr<const Impl> impl_;
};

using ExtPoly = Polynomial<ExtField>;

/// Parses "q=2,m=2,g=x^2+x+1"; g is optional and defaults to the least
/// primitive polynomial of degree m.
inline ExtField parse_field_descriptor(std::string_view text) {
    std::uint64_t q = 0;
    unsigned m = 0;
    std::string g;
    for (const auto& kv : detail::split(detail::strip_spaces(text), ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw parse_error("bad field descriptor token '" + kv + "'");
        const auto key = kv.substr(0, eq);
        const auto val = kv.substr(eq + 1);
        if (key == "q")
            q = detail::parse_uint(val, text);
        else if (key == "m")
            m = static_cast<unsigned>(detail::parse_uint(val, text));
        else if (key == "g")
            g = val;
        else
            throw parse_error("unknown field descriptor key '" + key + "'");
    }
    if (q == 0 || m == 0)
        throw parse_error("field descriptor '" + std::string(text) + "' needs q and m");
    PrimeField base(q);
    if (g.empty())
        return ExtField::with_default_modulus(base, m);
    auto mod = parse_poly(g, base);
    if (mod.degree() != static_cast<int>(m))
        throw parse_error("modulus '" + g + "' does not have degree m=" + std::to_string(m));
    return ExtField(std::move(mod));
}

/// f over F_q viewed in F_{q^m}[X].
inline ExtPoly lift(const Poly& f, const ExtField& F) {
    if (!(f.field() == F.base()))
        throw std::invalid_argument("lift: base field mismatch");
    std::vector<ExtElem> c;
    for (auto a : f.coeffs())
        c.push_back(F.from_base(a));
    return ExtPoly(F, std::move(c));
}

/// Minimal polynomial over F_q of s: the product of (X - s^{q^i}) over the
/// distinct Frobenius conjugates of s.
inline Poly min_poly_over_base(const ExtField& F, const ExtElem& s) {
    std::vector<ExtElem> conj{s};
    for (auto t = F.frobenius(s); t != s; t = F.frobenius(t))
        conj.push_back(t);
    auto acc = ExtPoly::one(F);
    for (const auto& c : conj)
        acc = acc * ExtPoly(F, {F.neg(c), F.one()});
    std::vector<std::uint32_t> out;
    for (const auto& c : acc.coeffs()) {
        if (!std::all_of(c.coords.begin() + 1, c.coords.end(), [](auto v) { return v == 0; }))
            throw std::logic_error("min_poly_over_base: coefficient outside F_q");
        out.push_back(c.coords[0]);
    }
    return Poly(F.base(), std::move(out));
}

/// All monic irreducible degree-n factors of a primitive f of degree m*n
/// over F_{q^m}, sorted ascending. There are exactly m of them.
inline std::vector<ExtPoly> irreducible_factors_deg_n(const Poly& f, const ExtField& parent, unsigned n,
                                                     std::uint64_t seed = 0) {
    const unsigned m = parent.degree();
    if (!(f.field() == parent.base()))
        throw std::invalid_argument("irreducible_factor_deg_n: base field mismatch");
    if (n == 0 || f.degree() != static_cast<int>(m * n))
        throw std::invalid_argument("irreducible_factor_deg_n: deg f = " + std::to_string(f.degree()) +
                                    " is not m*n = " + std::to_string(m * n));
    if (!is_primitive(f))
        throw std::invalid_argument("irreducible_factor_deg_n: " + format_poly(f) + " is not primitive");
    auto lifted = lift(f, parent);
    if (m == 1)
        return {lifted};
    std::mt19937_64 rng(seed);
    return equal_degree_factors(lifted, n, rng);
}

/// The least monic irreducible degree-n factor f_0 of f over F_{q^m}.
inline ExtPoly irreducible_factor_deg_n(const Poly& f, const ExtField& parent, unsigned n, std::uint64_t seed = 0) {
    return irreducible_factors_deg_n(f, parent, n, seed).front();
}

/// True iff g is the minimal polynomial over F_{q^m} of a generator of
/// F_{(q^m)^n}^*.
inline bool is_primitive_ext(const ExtPoly& g) {
    if (g.degree() >= 0 && g.field().is_zero(g[0]))
        throw std::invalid_argument("is_primitive_ext: g(0) = 0");
    return is_primitive(g);
}

}  // namespace slfsr
