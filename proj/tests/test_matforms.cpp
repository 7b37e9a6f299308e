#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "slfsr/matforms.hpp"

using namespace slfsr;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

Poly P(const char* text, const PrimeField& field = F2) { return parse_poly(text, field); }
MatFq M(const char* text, const PrimeField& field = F2) { return parse_matrix(text, field); }

oracle::IMat to_imat(const MatFq& a) {
    oracle::IMat r(a.rows(), std::vector<int>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r[i][j] = static_cast<int>(a(i, j));
    return r;
}

MatFq random_matrix(std::mt19937_64& rng, const PrimeField& field, std::size_t d) {
    std::vector<MatFq::value_type> e(d * d);
    for (auto& v : e)
        v = static_cast<MatFq::value_type>(rng() % field.q());
    return MatFq(field, d, d, e);
}

BlockCompanion random_bcm(std::mt19937_64& rng, const PrimeField& field, unsigned m, unsigned n) {
    std::vector<MatFq> blocks;
    for (unsigned i = 0; i < n; ++i)
        blocks.push_back(random_matrix(rng, field, m));
    return BlockCompanion(field, m, blocks);
}

}  // namespace

TEST(MatFq, Examples) {
    EXPECT_EQ(det(MatFq::identity(F2, 3)), 1u);
    const auto C = companion(P("x^4+x+1"));
    EXPECT_EQ(pow(C, 0), MatFq::identity(F2, 4));
    EXPECT_EQ(M("1,1;0,1") * M("1,1;0,1"), MatFq::identity(F2, 2));
    const BlockCompanion B(F2, 2, {M("1,1;0,1"), M("0,0;1,0")});
    EXPECT_EQ(det(B.expand()), det(B.block(0)));
    EXPECT_EQ(det(B.expand()), 1u);
}

TEST(MatFq, Errors) {
    EXPECT_THROW(inverse(M("1,1;1,1")), std::domain_error);
    EXPECT_THROW(M("1,0;0,1") * M("1,0,1"), std::invalid_argument);
    EXPECT_THROW(M("1,0;0"), parse_error);
    EXPECT_THROW(M("1,x;0,1"), parse_error);
}

TEST(MatFq, DeterminantMatchesPermutationExpansion) {
    std::mt19937_64 rng(1);
    for (const auto& field : {F2, F3, PrimeField(5)})
        for (std::size_t d = 1; d <= 5; ++d)
            for (int t = 0; t < 50; ++t) {
                const auto A = random_matrix(rng, field, d);
                ASSERT_EQ(static_cast<int>(det(A)), oracle::det_perm(to_imat(A), field.q()));
            }
}

TEST(MatFq, InverseRoundTrip) {
    std::mt19937_64 rng(2);
    for (const auto& field : {F2, F3})
        for (std::size_t d = 1; d <= 6; ++d)
            for (int t = 0; t < 50; ++t) {
                const auto A = random_matrix(rng, field, d);
                if (det(A) == 0)
                    continue;
                EXPECT_EQ(A * inverse(A), MatFq::identity(field, d));
            }
}

TEST(MatFq, IndexRoundTrip) {
    for (std::uint64_t idx = 0; idx < 81; ++idx) {
        const auto A = matrix_from_index(F3, 2, 2, idx);
        EXPECT_EQ(matrix_index(A), idx);
        EXPECT_EQ(to_imat(A), oracle::mat_from_index(idx, 2, 3));
    }
}

TEST(MatText, RoundTrip) {
    EXPECT_EQ(format_matrix(M("1,1;0,1")), "1,1;0,1");
    const auto B = parse_block_companion("1,1;0,1|0,0;1,0", F2);
    EXPECT_EQ(format_block_companion(B), "C0=1,1;0,1;C1=0,0;1,0");
    EXPECT_EQ(parse_block_companion(format_block_companion(B), F2), B);
    EXPECT_THROW(parse_block_companion("1,1;0,1|1,0,1", F2), std::invalid_argument);
}

TEST(Companion, Examples) {
    EXPECT_EQ(companion(P("x+2", F3)), M("1", F3));
    EXPECT_EQ(companion(P("x^2+x+1")), M("0,1;1,1"));
    EXPECT_THROW(companion(P("2x+1", F3)), std::invalid_argument);
}

TEST(CharPoly, Examples) {
    EXPECT_EQ(char_poly(MatFq::identity(F2, 2)), P("x^2+1"));
    EXPECT_EQ(char_poly(companion(P("x^4+x+1"))), P("x^4+x+1"));
    const BlockCompanion B(F2, 2, {M("1,1;0,1"), M("0,0;1,0")});
    EXPECT_EQ(char_poly(B.expand()), P("x^4+x+1"));
}

TEST(CharPoly, Errors) {
    EXPECT_THROW(char_poly(M("1,0,1")), std::invalid_argument);
    EXPECT_THROW(char_poly(MatFq::identity(F2, 13)), infeasible_error);
    EXPECT_NO_THROW(char_poly(MatFq::identity(F2, 12)));
}

TEST(CharPoly, CayleyHamiltonAndTrace) {
    std::mt19937_64 rng(4);
    for (const auto& field : {F2, F3, PrimeField(5)})
        for (std::size_t d = 1; d <= 7; ++d)
            for (int t = 0; t < 20; ++t) {
                const auto A = random_matrix(rng, field, d);
                const auto chi = char_poly(A);
                ASSERT_EQ(chi.degree(), static_cast<int>(d));
                ASSERT_TRUE(chi.is_monic());
                // chi(A) = 0
                MatFq acc(field, d, d);
                for (int k = chi.degree(); k >= 0; --k)
                    acc = acc * A + scale(MatFq::identity(field, d), chi[k]);
                ASSERT_TRUE(acc.is_zero());
                // constant term is (-1)^d det A
                const auto c0 = d % 2 ? field.neg(det(A)) : det(A);
                ASSERT_EQ(chi[0], c0);
                // min_poly divides char_poly and annihilates A
                const auto mu = min_poly(A);
                ASSERT_TRUE((chi % mu).is_zero());
            }
}

TEST(CharPoly, CompanionRecoversPolynomial) {
    std::mt19937_64 rng(6);
    for (const auto& field : {F2, F3})
        for (int d = 1; d <= 8; ++d)
            for (int t = 0; t < 20; ++t) {
                std::vector<std::uint32_t> c(d + 1);
                for (auto& v : c)
                    v = rng() % field.q();
                c.back() = 1;
                const Poly f(field, c);
                EXPECT_EQ(char_poly(companion(f)), f);
                EXPECT_EQ(min_poly(companion(f)), f);
            }
}

TEST(MinPolyMat, Examples) {
    EXPECT_EQ(min_poly(MatFq::identity(F2, 3)), P("x+1"));
    EXPECT_EQ(min_poly(companion(P("x^4+x+1"))), P("x^4+x+1"));
    EXPECT_EQ(min_poly(MatFq(F2, 2, 2)), P("x"));
}

TEST(MatrixOrder, Examples) {
    EXPECT_EQ(matrix_order(MatFq::identity(F2, 2)), 1u);
    EXPECT_EQ(matrix_order(companion(P("x^4+x+1"))), 15u);
    EXPECT_EQ(matrix_order(companion(P("x^4+x^3+x^2+x+1"))), 5u);
    EXPECT_THROW(matrix_order(M("1,1;1,1")), std::domain_error);
}

TEST(MatrixOrder, MatchesDirectPoweringRandom) {
    std::mt19937_64 rng(8);
    for (const auto& field : {F2, F3})
        for (std::size_t d = 1; d <= 4; ++d)
            for (int t = 0; t < 40; ++t) {
                const auto A = random_matrix(rng, field, d);
                if (det(A) == 0)
                    continue;
                const auto ord = matrix_order(A);
                ASSERT_EQ(ord, oracle::mat_order_by_powering(to_imat(A), field.q(), 100'000));
                ASSERT_EQ(pow(A, ord), MatFq::identity(field, d));
                for (auto [p, e] : factor_integer(ord).prime_powers)
                    ASSERT_NE(pow(A, ord / p), MatFq::identity(field, d));
            }
}

TEST(Singer, Examples) {
    EXPECT_TRUE(is_singer(companion(P("x^4+x+1"))));
    EXPECT_FALSE(is_singer(MatFq::identity(F2, 2)));
    EXPECT_FALSE(is_singer(M("0,1;1,0")));
    EXPECT_FALSE(is_singer(M("1,1;1,1")));
}

// Exhaustive over GL_2(F_2) and GL_2(F_3).
TEST(Singer, EquivalentCharacterisations) {
    for (const auto& field : {F2, F3}) {
        const std::uint64_t q = field.q();
        for (std::uint64_t idx = 0; idx < q * q * q * q; ++idx) {
            const auto A = matrix_from_index(field, 2, 2, idx);
            if (det(A) == 0)
                continue;
            const auto direct = oracle::mat_order_by_powering(to_imat(A), static_cast<int>(q), 1000);
            ASSERT_EQ(matrix_order(A), direct) << format_matrix(A);
            const bool max_order = direct == q * q - 1;
            const auto mu = min_poly(A);
            ASSERT_EQ(max_order, is_primitive(char_poly(A))) << format_matrix(A);
            ASSERT_EQ(max_order, mu.degree() == 2 && is_primitive(mu)) << format_matrix(A);
            ASSERT_EQ(max_order, is_singer(A));
        }
    }
}

TEST(Centralizer, Examples) {
    EXPECT_EQ(centralizer_size(MatFq::identity(F2, 2)), 6u);
    EXPECT_EQ(centralizer_size(companion(P("x^2+x+1"))), 3u);
    EXPECT_EQ(centralizer_size(companion(P("x^3+x+1"))), 7u);
    EXPECT_EQ(centralizer_size(companion(P("x^2+x+2", F3))), 8u);
    EXPECT_THROW(centralizer_size(MatFq::identity(F2, 5)), infeasible_error);
}

TEST(Theta, Examples) {
    const ExtField F(P("x^2+x+1"));
    const auto A = companion(F.modulus());
    EXPECT_TRUE(theta_embed(F, F.zero(), A).is_zero());
    EXPECT_EQ(theta_embed(F, F.one(), A), MatFq::identity(F2, 2));
    EXPECT_EQ(theta_embed(F, F.generator(), A), A);
    EXPECT_THROW(theta_embed(F, F.generator(), MatFq::identity(F2, 2)), std::invalid_argument);
}

TEST(Theta, RingHomomorphism) {
    std::mt19937_64 rng(10);
    for (unsigned m : {2u, 3u}) {
        const auto F = ExtField::with_default_modulus(F2, m);
        const auto C = companion(F.modulus());
        // a second embedding: a conjugate of the companion matrix
        MatFq P2 = C;
        do {
            P2 = random_matrix(rng, F2, m);
        } while (det(P2) == 0);
        for (const auto& A : {C, inverse(P2) * C * P2}) {
            for (std::uint64_t i = 0; i < F.size(); ++i)
                for (std::uint64_t j = 0; j < F.size(); ++j) {
                    const auto s = F.element(i), t = F.element(j);
                    ASSERT_EQ(theta_embed(F, F.add(s, t), A), theta_embed(F, s, A) + theta_embed(F, t, A));
                    ASSERT_EQ(theta_embed(F, F.mul(s, t), A), theta_embed(F, s, A) * theta_embed(F, t, A));
                }
        }
    }
}

TEST(Delta, Examples) {
    const BlockCompanion B(F2, 2, {M("1,1;0,1"), M("0,0;1,0")});
    EXPECT_EQ(delta_poly(B), P("x^4+x+1"));
    const BlockCompanion B1(F2, 1, {M("1"), M("1"), M("0"), M("0")});
    EXPECT_EQ(delta_poly(B1), P("x^4+x+1"));
    const BlockCompanion B2(F2, 2, {M("0,1;1,1")});
    EXPECT_EQ(delta_poly(B2), P("x^2+x+1"));
}

TEST(Delta, Errors) {
    EXPECT_THROW(BlockCompanion(F2, 2, {M("1,1;0,1"), M("1")}), std::invalid_argument);
    EXPECT_THROW(BlockCompanion(F2, 2, {M("1,1;0,1", F3)}), std::invalid_argument);
}

// Delta(X) agrees with the characteristic polynomial of the expanded matrix.
TEST(Delta, EqualsCharPolyOfExpansionExhaustive) {
    for (std::uint64_t a = 0; a < 16; ++a)
        for (std::uint64_t b = 0; b < 16; ++b) {
            const BlockCompanion B(F2, 2, {matrix_from_index(F2, 2, 2, a), matrix_from_index(F2, 2, 2, b)});
            ASSERT_EQ(delta_poly(B), char_poly(B.expand())) << format_block_companion(B);
            ASSERT_EQ(det(B.expand()) != 0, det(B.block(0)) != 0);
        }
}

TEST(Delta, EqualsCharPolyOfExpansionRandom) {
    std::mt19937_64 rng(12);
    for (const auto& field : {F2, F3})
        for (unsigned m = 1; m <= 3; ++m)
            for (unsigned n = 1; n <= 3; ++n)
                for (int t = 0; t < 100; ++t) {
                    const auto B = random_bcm(rng, field, m, n);
                    ASSERT_EQ(delta_poly(B), char_poly(B.expand())) << format_block_companion(B);
                    ASSERT_EQ(det(B.expand()) == 0, det(B.block(0)) == 0);
                }
}

TEST(Delta, ExpansionShape) {
    const BlockCompanion B(F3, 2, {M("1,2;0,1", F3), M("0,0;1,0", F3), M("2,2;2,2", F3)});
    const auto T = B.expand();
    ASSERT_EQ(T.rows(), 6u);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const std::uint32_t expected = (i >= 2 && j == i - 2) ? 1 : 0;
            EXPECT_EQ(T(i, j), expected);
        }
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                EXPECT_EQ(T(2 * r + i, 4 + j), B.block(r)(i, j));
}
