#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ext_field.hpp"
#include "matrix.hpp"

namespace slfsr {

/// Largest dimension accepted by the cofactor-expansion determinant.
inline constexpr std::size_t kCharPolyMaxDim = 12;

/// m x m matrix with entries in F_q[X].
class PolyMat {
public:
    PolyMat(PrimeField field, std::size_t m) : field_(field), m_(m), e_(m * m, Poly(field)) {}

    const PrimeField& field() const { return field_; }
    std::size_t dim() const { return m_; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * m_ + j]; }
    Poly& at(std::size_t i, std::size_t j) { return e_.at(i * m_ + j); }

    /// Laplace expansion along rows, memoised over the set of columns already
    /// used: sum over permutations in O(d 2^d) polynomial products.
    Poly det() const {
        if (m_ > kCharPolyMaxDim)
            throw infeasible_error("polynomial determinant dimension " + std::to_string(m_) + " exceeds " +
                                   std::to_string(kCharPolyMaxDim));
        if (m_ == 0)
            return Poly::one(field_);
        const std::size_t full = (std::size_t{1} << m_) - 1;
        std::vector<Poly> partial(full + 1, Poly(field_));
        partial[0] = Poly::one(field_);
        for (std::size_t mask = 0; mask < full; ++mask) {
            if (partial[mask].is_zero())
                continue;
            const auto row = static_cast<std::size_t>(std::popcount(mask));
            for (std::size_t j = 0; j < m_; ++j) {
                if (mask & (std::size_t{1} << j))
                    continue;
                const auto& entry = (*this)(row, j);
                if (entry.is_zero())
                    continue;
                // inversions contributed by placing column j after the used columns above j
                const bool odd = std::popcount(mask >> (j + 1)) & 1;
                auto term = partial[mask] * entry;
                auto& slot = partial[mask | (std::size_t{1} << j)];
                slot = odd ? slot - term : slot + term;
            }
        }
        return partial[full];
    }

private:
    PrimeField field_;
    std::size_t m_;
    std::vector<Poly> e_;
};

/// (C_0, ..., C_{n-1}): the taps of a sigma-LFSR of order n over F_{q^m},
/// equivalently the (m,n)-block companion matrix
///
///     [ 0  0 ... 0  C_0     ]
///     [ I  0 ... 0  C_1     ]
///     [ .        .  .       ]
///     [ 0  0 ... I  C_{n-1} ]
class BlockCompanion {
public:
    BlockCompanion(PrimeField field, unsigned m, std::vector<MatFq> blocks)
        : field_(field), m_(m), blocks_(std::move(blocks)) {
        if (m_ == 0 || blocks_.empty())
            throw std::invalid_argument("block companion needs m >= 1 and at least one block");
        for (const auto& c : blocks_)
            if (!(c.field() == field_) || c.rows() != m_ || c.cols() != m_)
                throw std::invalid_argument("block companion: every block must be " + std::to_string(m_) + "x" +
                                            std::to_string(m_) + " over F_" + std::to_string(field_.q()));
    }

    const PrimeField& field() const { return field_; }
    unsigned m() const { return m_; }
    unsigned n() const { return static_cast<unsigned>(blocks_.size()); }
    const std::vector<MatFq>& blocks() const { return blocks_; }
    const MatFq& block(std::size_t i) const { return blocks_.at(i); }

    /// The mn x mn matrix T.
    MatFq expand() const {
        const std::size_t m = m_, n = blocks_.size(), d = m * n;
        MatFq T(field_, d, d);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    T.at(r * m + i, (n - 1) * m + j) = blocks_[r](i, j);
            if (r >= 1)
                for (std::size_t i = 0; i < m; ++i)
                    T.at(r * m + i, (r - 1) * m + i) = 1;
        }
        return T;
    }

    /// T is invertible iff C_0 is (det T = +-det C_0).
    bool invertible() const { return det(blocks_.front()) != 0; }

    bool operator==(const BlockCompanion&) const = default;
    friend std::strong_ordering operator<=>(const BlockCompanion& a, const BlockCompanion& b) {
        if (auto c = a.m_ <=> b.m_; c != 0)
            return c;
        return a.blocks_ <=> b.blocks_;
    }

private:
    PrimeField field_;
    unsigned m_;
    std::vector<MatFq> blocks_;
};

/// "C0=1,1;0,1;C1=0,0;1,0"
inline std::string format_block_companion(const BlockCompanion& b) {
    std::string out;
    for (std::size_t i = 0; i < b.n(); ++i) {
        if (i != 0)
            out += ';';
        out += "C" + std::to_string(i) + "=" + format_matrix(b.block(i));
    }
    return out;
}

/// Accepts "C0=...;C1=..." or the CLI form "1,1;0,1|0,0;1,0".
inline BlockCompanion parse_block_companion(std::string_view text, const PrimeField& field) {
    const auto s = detail::strip_spaces(text);
    std::vector<std::string> parts;
    if (s.find('=') == std::string::npos) {
        parts = detail::split(s, '|');
    } else {
        std::size_t pos = 0;
        for (std::size_t k = 0;; ++k) {
            const std::string tag = "C" + std::to_string(k) + "=";
            if (s.compare(pos, tag.size(), tag) != 0)
                throw parse_error("expected '" + tag + "' at '" + s.substr(pos) + "'");
            pos += tag.size();
            const std::string next = ";C" + std::to_string(k + 1) + "=";
            const auto end = s.find(next, pos);
            parts.push_back(s.substr(pos, end == std::string::npos ? std::string::npos : end - pos));
            if (end == std::string::npos)
                break;
            pos = end + 1;
        }
    }
    std::vector<MatFq> blocks;
    for (const auto& p : parts)
        blocks.push_back(parse_matrix(p, field));
    if (blocks.empty() || !blocks.front().is_square())
        throw parse_error("block list '" + std::string(text) + "' needs square blocks");
    const auto m = static_cast<unsigned>(blocks.front().rows());
    return BlockCompanion(field, m, std::move(blocks));
}

/// Companion matrix of monic f = X^n - c_{n-1}X^{n-1} - ... - c_0:
/// ones on the subdiagonal, last column (c_0, ..., c_{n-1}).
inline MatFq companion(const Poly& f) {
    if (f.degree() < 1 || !f.is_monic())
        throw std::invalid_argument("companion: expected a monic polynomial of degree >= 1, got " + format_poly(f));
    const auto& F = f.field();
    const auto n = static_cast<std::size_t>(f.degree());
    MatFq C(F, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        C.at(i, n - 1) = F.neg(f[i]);
        if (i + 1 < n)
            C.at(i + 1, i) = 1;
    }
    return C;
}

/// det(X I - A), by exact cofactor expansion.
inline Poly char_poly(const MatFq& A) {
    detail::require_square(A, "char_poly");
    if (A.rows() > kCharPolyMaxDim)
        throw infeasible_error("char_poly: dimension " + std::to_string(A.rows()) + " exceeds " +
                               std::to_string(kCharPolyMaxDim));
    const auto& F = A.field();
    PolyMat M(F, A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            M.at(i, j) = Poly(F, {F.neg(A(i, j)), static_cast<MatFq::value_type>(i == j ? 1 : 0)});
    return M.det();
}

/// Delta(X) = det(I_m X^n - C_{n-1} X^{n-1} - ... - C_0), computed on the
/// m x m polynomial matrix. Equals char_poly(B.expand()).
inline Poly delta_poly(const BlockCompanion& B) {
    const auto& F = B.field();
    const std::size_t m = B.m(), n = B.n();
    PolyMat M(F, m);
    std::vector<MatFq::value_type> c(n + 1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t l = 0; l < n; ++l)
                c[l] = F.neg(B.block(l)(i, j));
            c[n] = i == j ? 1 : 0;
            M.at(i, j) = Poly(F, c);
        }
    return M.det();
}

/// Minimal polynomial as the lcm of the minimal annihilators of the Krylov
/// sequences e_i, e_i A, e_i A^2, ... for each standard basis vector.
inline Poly min_poly(const MatFq& A) {
    detail::require_square(A, "min_poly");
    const auto& F = A.field();
    const std::size_t d = A.rows();
    auto result = Poly::one(F);
    for (std::size_t i = 0; i < d; ++i) {
        struct Reduced {
            std::vector<MatFq::value_type> v;
            std::vector<MatFq::value_type> combo;  // in the basis x^0, x^1, ...
            std::size_t pivot;
        };
        std::vector<Reduced> basis;
        std::vector<MatFq::value_type> w(d, 0);
        w[i] = 1;
        for (std::size_t k = 0; k <= d; ++k) {
            auto v = w;
            std::vector<MatFq::value_type> combo(d + 1, 0);
            combo[k] = 1;
            for (const auto& r : basis) {
                if (v[r.pivot] == 0)
                    continue;
                const auto f = F.mul(v[r.pivot], F.inv(r.v[r.pivot]));
                for (std::size_t j = 0; j < d; ++j)
                    v[j] = F.sub(v[j], F.mul(f, r.v[j]));
                for (std::size_t j = 0; j <= d; ++j)
                    combo[j] = F.sub(combo[j], F.mul(f, r.combo[j]));
            }
            std::size_t pivot = 0;
            while (pivot < d && v[pivot] == 0)
                ++pivot;
            if (pivot == d) {
                result = lcm(result, Poly(F, combo));
                break;
            }
            basis.push_back({std::move(v), std::move(combo), pivot});
            w = row_times(w, A);
        }
    }
    return result;
}

/// Multiplicative order of an invertible A, as the order of its minimal
/// polynomial.
inline std::uint64_t matrix_order(const MatFq& A) {
    detail::require_square(A, "matrix_order");
    if (det(A) == 0)
        throw std::domain_error("matrix_order: matrix is singular (minimal polynomial has root 0)");
    return poly_order(min_poly(A));
}

/// A in GL_d(F_q) with order q^d - 1, decided by primitivity of its
/// characteristic polynomial.
inline bool is_singer(const MatFq& A) {
    detail::require_square(A, "is_singer");
    if (det(A) == 0)
        return false;
    if (A.rows() <= kCharPolyMaxDim)
        return is_primitive(char_poly(A));
    auto p = min_poly(A);
    return p.degree() == static_cast<int>(A.rows()) && is_primitive(p);
}

/// |{P in GL_d(F_q) : AP = PA}| by exhaustive enumeration.
inline std::uint64_t centralizer_size(const MatFq& A) {
    detail::require_square(A, "centralizer_size");
    const auto& F = A.field();
    const std::size_t d = A.rows();
    std::uint64_t total = 0;
    try {
        total = checked_pow(F.q(), static_cast<unsigned>(d * d));
    } catch (const infeasible_error&) {
        total = kEnumerationCap + 1;
    }
    if (total > kEnumerationCap)
        throw infeasible_error("centralizer_size: q^(d^2) exceeds 2^24");
    std::uint64_t count = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto P = matrix_from_index(F, d, d, idx);
        if (A * P == P * A && det(P) != 0)
            ++count;
    }
    return count;
}

/// theta(s) = h(A), where h is the coordinate polynomial of s. Requires the
/// minimal polynomial of A to be the modulus of s's field, which makes theta
/// an F_q-algebra isomorphism F_{q^m} -> F_q[A].
inline MatFq theta_embed(const ExtField& F, const ExtElem& s, const MatFq& A) {
    detail::require_square(A, "theta_embed");
    if (A.rows() != F.degree() || !(A.field() == F.base()))
        throw std::invalid_argument("theta_embed: matrix dimension does not match the field degree");
    if (min_poly(A) != F.modulus())
        throw std::invalid_argument("theta_embed: minimal polynomial of A is not " + format_poly(F.modulus()));
    if (s.coords.size() != F.degree())
        throw std::invalid_argument("theta_embed: element has the wrong number of coordinates");
    // Horner: ((a_{m-1} A + a_{m-2}) A + ...) + a_0
    const auto I = MatFq::identity(A.field(), A.rows());
    MatFq acc(A.field(), A.rows(), A.cols());
    for (std::size_t i = s.coords.size(); i-- > 0;)
        acc = acc * A + scale(I, s.coords[i]);
    return acc;
}

}  // namespace slfsr
