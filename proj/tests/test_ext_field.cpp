#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "slfsr/ext_field.hpp"

using namespace slfsr;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

Poly P(const char* text, const PrimeField& field = F2) { return parse_poly(text, field); }

ExtElem E(std::vector<std::uint32_t> c) { return ExtElem{std::move(c)}; }

// Product of f_0 and its Frobenius conjugates, coefficientwise.
ExtPoly conjugate(const ExtPoly& g) {
    const auto& F = g.field();
    std::vector<ExtElem> c;
    for (const auto& a : g.coeffs())
        c.push_back(F.frobenius(a));
    return ExtPoly(F, c);
}

struct Case {
    unsigned q, m;
};

const std::vector<Case> kSmallFields{{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8},
                                     {3, 1}, {3, 2}, {3, 3}, {3, 4}, {3, 5}, {5, 2}, {5, 3}, {7, 2}};

}  // namespace

TEST(ExtField, F4Arithmetic) {
    const ExtField F(P("x^2+x+1"));
    const auto y = F.generator();
    EXPECT_EQ(y, E({0, 1}));
    EXPECT_EQ(F.mul(y, y), E({1, 1}));
    EXPECT_EQ(F.pow(y, 3), F.one());
    EXPECT_EQ(F.add(y, F.one()), E({1, 1}));
    EXPECT_EQ(F.size(), 4u);
}

TEST(ExtField, InverseMatchesExhaustiveSearch) {
    for (auto [q, m] : kSmallFields) {
        const auto F = ExtField::with_default_modulus(PrimeField(q), m);
        for (std::uint64_t i = 1; i < F.size(); ++i) {
            const auto a = F.element(i);
            std::uint64_t found = 0;
            for (std::uint64_t j = 1; j < F.size(); ++j)
                if (F.mul(a, F.element(j)) == F.one())
                    found = j;
            ASSERT_EQ(F.index_of(F.inv(a)), found) << F.descriptor() << " " << F.format_coords(a);
        }
    }
}

TEST(ExtField, Errors) {
    const ExtField F(P("x^2+x+1"));
    EXPECT_THROW(F.inv(F.zero()), std::domain_error);
    EXPECT_THROW(F.mul(F.one(), E({1, 0, 0})), std::invalid_argument);
    EXPECT_THROW(ExtField(P("x^4+x^3+x^2+x+1")), std::invalid_argument);
    EXPECT_THROW(ExtField(P("x^2+1")), std::invalid_argument);
}

TEST(ExtField, DefaultModulusIsLeastPrimitive) {
    EXPECT_EQ(ExtField::with_default_modulus(F2, 2).modulus(), P("x^2+x+1"));
    EXPECT_EQ(ExtField::with_default_modulus(F2, 4).modulus(), P("x^4+x+1"));
    EXPECT_EQ(ExtField::with_default_modulus(F2, 2).descriptor(), "q=2,m=2,g=x^2+x+1");
}

TEST(ExtField, CoordinateMapIsLinear) {
    for (auto [q, m] : kSmallFields) {
        const PrimeField base(q);
        const auto F = ExtField::with_default_modulus(base, m);
        for (std::uint64_t i = 0; i < F.size(); ++i)
            for (std::uint64_t j = 0; j < F.size(); ++j) {
                const auto a = F.element(i), b = F.element(j);
                const auto s = F.add(a, b);
                for (unsigned k = 0; k < m; ++k)
                    ASSERT_EQ(s.coords[k], (a.coords[k] + b.coords[k]) % q);
            }
        for (std::uint32_t c = 0; c < q; ++c)
            for (std::uint64_t i = 0; i < F.size(); ++i) {
                const auto a = F.element(i);
                const auto s = F.mul(F.from_base(c), a);
                for (unsigned k = 0; k < m; ++k)
                    ASSERT_EQ(s.coords[k], c * a.coords[k] % q);
            }
    }
}

TEST(ExtField, FieldAxiomsSampled) {
    std::mt19937_64 rng(17);
    for (auto [q, m] : kSmallFields) {
        const auto F = ExtField::with_default_modulus(PrimeField(q), m);
        for (int t = 0; t < 200; ++t) {
            const auto a = F.element(rng() % F.size());
            const auto b = F.element(rng() % F.size());
            const auto c = F.element(rng() % F.size());
            ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
            ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
            ASSERT_EQ(F.mul(a, b), F.mul(b, a));
        }
    }
}

TEST(ExtField, ElementOrderMatchesRepeatedMultiplication) {
    for (auto [q, m] : kSmallFields) {
        const auto F = ExtField::with_default_modulus(PrimeField(q), m);
        for (std::uint64_t i = 1; i < F.size(); ++i) {
            const auto a = F.element(i);
            std::uint64_t ord = 1;
            for (auto p = a; !(p == F.one()); p = F.mul(p, a))
                ++ord;
            ASSERT_EQ(F.element_order(a), ord);
        }
        EXPECT_EQ(F.element_order(F.generator()), F.size() - 1);
    }
}

TEST(MinPoly, Examples) {
    const ExtField F(P("x^2+x+1"));
    EXPECT_EQ(min_poly_over_base(F, F.zero()), P("x"));
    EXPECT_EQ(min_poly_over_base(F, F.one()), P("x+1"));
    EXPECT_EQ(min_poly_over_base(F, F.generator()), P("x^2+x+1"));
}

TEST(MinPoly, PropertiesExhaustive) {
    for (auto [q, m] : kSmallFields) {
        const PrimeField base(q);
        const auto F = ExtField::with_default_modulus(base, m);
        // x^{q^m} - x
        auto field_poly = Poly::monomial(base, 1, F.size()) - Poly::x(base);
        for (std::uint64_t i = 0; i < F.size(); ++i) {
            const auto s = F.element(i);
            const auto mp = min_poly_over_base(F, s);
            ASSERT_TRUE(mp.is_monic());
            ASSERT_TRUE(is_irreducible(mp));
            ASSERT_TRUE((field_poly % mp).is_zero());
            // evaluating at s gives zero
            auto acc = F.zero();
            for (int k = mp.degree(); k >= 0; --k)
                acc = F.add(F.mul(acc, s), F.from_base(mp[k]));
            ASSERT_TRUE(F.is_zero(acc));
            if (i == 0)
                continue;
            std::uint64_t ord = 1;
            for (auto p = s; !(p == F.one()); p = F.mul(p, s))
                ++ord;
            const bool generator = ord == F.size() - 1;
            ASSERT_EQ(generator, mp.degree() == static_cast<int>(m) && is_primitive(mp));
        }
    }
}

TEST(IrreducibleFactor, F4Example) {
    const auto F = ExtField::with_default_modulus(F2, 2);
    const auto f = P("x^4+x+1");
    const auto f0 = irreducible_factor_deg_n(f, F, 2);
    EXPECT_EQ(f0.degree(), 2);
    EXPECT_TRUE(f0.is_monic());
    EXPECT_EQ(f0 * conjugate(f0), lift(f, F));

    // brute force: all 16 monic quadratics over F_4, with an independent F_4 table
    const auto divisors = oracle::f4_monic_divisors({1, 1, 0, 0, 1}, 2);
    ASSERT_EQ(divisors.size(), 2u);
    std::set<ExtPoly> expected;
    for (const auto& d : divisors) {
        std::vector<ExtElem> c;
        for (int v : d)
            c.push_back(E({static_cast<std::uint32_t>(v & 1), static_cast<std::uint32_t>(v >> 1)}));
        expected.insert(ExtPoly(F, c));
    }
    const auto all = irreducible_factors_deg_n(f, F, 2);
    EXPECT_EQ(std::set<ExtPoly>(all.begin(), all.end()), expected);
    EXPECT_EQ(f0, *expected.begin());
}

TEST(IrreducibleFactor, LinearFactors) {
    const auto F = ExtField::with_default_modulus(F2, 2);
    const auto f0 = irreducible_factor_deg_n(P("x^2+x+1"), F, 1);
    EXPECT_EQ(f0.degree(), 1);
    EXPECT_TRUE(f0.eval(F.generator()) == F.zero() || f0.eval(F.mul(F.generator(), F.generator())) == F.zero());
    const auto F1 = ExtField::with_default_modulus(F2, 1);
    EXPECT_EQ(irreducible_factor_deg_n(P("x^4+x+1"), F1, 4), lift(P("x^4+x+1"), F1));
}

TEST(IrreducibleFactor, Errors) {
    const auto F = ExtField::with_default_modulus(F2, 2);
    EXPECT_THROW(irreducible_factor_deg_n(P("x^4+x+1"), F, 3), std::invalid_argument);
    EXPECT_THROW(irreducible_factor_deg_n(P("x^4+x^3+x^2+x+1"), F, 2), std::invalid_argument);
}

TEST(IrreducibleFactor, FactorsMatchBruteForce) {
    struct Cell {
        unsigned q, m, n;
    };
    for (auto [q, m, n] : std::vector<Cell>{{2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}, {2, 4, 2}, {2, 2, 4}}) {
        const PrimeField base(q);
        const auto F = ExtField::with_default_modulus(base, m);
        std::uint64_t count = 1;
        for (unsigned i = 0; i < n; ++i)
            count *= F.size();
        for (const auto& f : enumerate_primitive(m * n, base)) {
            const auto factors = irreducible_factors_deg_n(f, F, n, 7);
            ASSERT_EQ(factors.size(), m);
            auto prod = ExtPoly::one(F);
            for (const auto& g : factors) {
                EXPECT_EQ(g.degree(), static_cast<int>(n));
                EXPECT_TRUE(is_primitive_ext(g));
                prod = prod * g;
            }
            EXPECT_EQ(prod, lift(f, F));

            std::set<ExtPoly> brute;
            const auto lf = lift(f, F);
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::vector<ExtElem> c;
                auto t = idx;
                for (unsigned i = 0; i < n; ++i) {
                    c.push_back(F.element(t % F.size()));
                    t /= F.size();
                }
                c.push_back(F.one());
                ExtPoly g(F, c);
                if ((lf % g).is_zero())
                    brute.insert(g);
            }
            EXPECT_EQ(std::set<ExtPoly>(factors.begin(), factors.end()), brute) << format_poly(f);
        }
    }
}

TEST(IrreducibleFactor, SeedIndependent) {
    const auto F = ExtField::with_default_modulus(F2, 3);
    for (const auto& f : enumerate_primitive(6, F2))
        for (std::uint64_t seed = 0; seed < 5; ++seed)
            EXPECT_EQ(irreducible_factor_deg_n(f, F, 2, seed), irreducible_factor_deg_n(f, F, 2, 0));
}

TEST(PrimitiveExt, Examples) {
    const auto F = ExtField::with_default_modulus(F2, 2);
    EXPECT_TRUE(is_primitive_ext(irreducible_factor_deg_n(P("x^4+x+1"), F, 2)));
    EXPECT_FALSE(is_primitive_ext(ExtPoly(F, {F.neg(F.one()), F.one()})));
    EXPECT_TRUE(is_primitive_ext(ExtPoly(F, {F.neg(F.generator()), F.one()})));
    EXPECT_THROW(is_primitive_ext(ExtPoly(F, {F.zero(), F.one(), F.one()})), std::invalid_argument);
}

TEST(ExtText, DescriptorAndCoords) {
    const auto F = parse_field_descriptor("q=2,m=2,g=x^2+x+1");
    EXPECT_EQ(F.descriptor(), "q=2,m=2,g=x^2+x+1");
    EXPECT_EQ(parse_field_descriptor("q=2,m=4").modulus(), P("x^4+x+1"));
    EXPECT_EQ(F.parse_coords("1,1"), E({1, 1}));
    EXPECT_EQ(F.format_coords(E({0, 1})), "0,1");
    EXPECT_EQ(F.format(E({1, 1})), "y+1");
    EXPECT_THROW(F.parse_coords("1,1,0"), parse_error);
    EXPECT_THROW(parse_field_descriptor("q=2,m=2,g=x^2+1"), std::invalid_argument);
    EXPECT_THROW(parse_field_descriptor("q=2,k=2"), parse_error);
    EXPECT_THROW(parse_field_descriptor("q=4,m=2"), std::invalid_argument);
}

TEST(ExtField, Degree3OverF3) {
    const auto F = ExtField::with_default_modulus(F3, 3);
    EXPECT_EQ(F.size(), 27u);
    EXPECT_TRUE(is_primitive(F.modulus()));
    EXPECT_EQ(F.element_order(F.generator()), 26u);
}
