#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ff_core.hpp"

namespace slfsr {

/// Dense row-major matrix over a prime field.
class MatFq {
public:
    using value_type = PrimeField::value_type;

    MatFq(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    MatFq(PrimeField field, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
        : field_(field), rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows * cols)
            throw std::invalid_argument("matrix needs " + std::to_string(rows * cols) + " entries, got " +
                                        std::to_string(a_.size()));
        for (auto& v : a_)
            v = field_.from_int(v);
    }

    static MatFq identity(PrimeField field, std::size_t d) {
        MatFq I(field, d, d);
        for (std::size_t i = 0; i < d; ++i)
            I.a_[i * d + i] = 1;
        return I;
    }

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<value_type>& entries() const { return a_; }

    value_type operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    value_type& at(std::size_t i, std::size_t j) { return a_.at(i * cols_ + j); }

    bool is_zero() const {
        for (auto v : a_)
            if (v != 0)
                return false;
        return true;
    }

    bool operator==(const MatFq& o) const = default;
    friend std::strong_ordering operator<=>(const MatFq& a, const MatFq& b) {
        if (auto c = a.rows_ <=> b.rows_; c != 0)
            return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0)
            return c;
        return a.a_ <=> b.a_;
    }

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<value_type> a_;
};

namespace detail {

inline void require_same_shape(const MatFq& a, const MatFq& b) {
    if (!(a.field() == b.field()) || a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix shape or field mismatch");
}

inline void require_square(const MatFq& a, const char* what) {
    if (!a.is_square())
        throw std::invalid_argument(std::string(what) + ": matrix is not square");
}

}  // namespace detail

inline MatFq operator+(const MatFq& a, const MatFq& b) {
    detail::require_same_shape(a, b);
    auto r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.field().add(a(i, j), b(i, j));
    return r;
}

inline MatFq operator-(const MatFq& a, const MatFq& b) {
    detail::require_same_shape(a, b);
    auto r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.field().sub(a(i, j), b(i, j));
    return r;
}

inline MatFq operator*(const MatFq& a, const MatFq& b) {
    if (!(a.field() == b.field()) || a.cols() != b.rows())
        throw std::invalid_argument("matrix product dimension mismatch: " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()));
    const auto& F = a.field();
    MatFq r(F, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                r.at(i, j) = F.add(r(i, j), F.mul(x, b(k, j)));
        }
    return r;
}

inline MatFq scale(const MatFq& a, MatFq::value_type s) {
    auto r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) = a.field().mul(a(i, j), s);
    return r;
}

/// Row vector times matrix.
inline std::vector<MatFq::value_type> row_times(const std::vector<MatFq::value_type>& v, const MatFq& a) {
    if (v.size() != a.rows())
        throw std::invalid_argument("row vector length does not match matrix rows");
    const auto& F = a.field();
    std::vector<MatFq::value_type> r(a.cols(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            r[j] = F.add(r[j], F.mul(v[i], a(i, j)));
    }
    return r;
}

inline MatFq pow(MatFq base, std::uint64_t e) {
    detail::require_square(base, "pow");
    auto r = MatFq::identity(base.field(), base.rows());
    while (e != 0) {
        if (e & 1)
            r = r * base;
        e >>= 1;
        if (e != 0)
            base = base * base;
    }
    return r;
}

/// Rank by Gaussian elimination.
inline std::size_t rank(MatFq a) {
    const auto& F = a.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == 0)
            ++p;
        if (p == a.rows())
            continue;
        for (std::size_t j = 0; j < a.cols(); ++j)
            std::swap(a.at(p, j), a.at(r, j));
        const auto inv = F.inv(a(r, c));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            const auto f = F.mul(a(i, c), inv);
            if (f == 0)
                continue;
            for (std::size_t j = c; j < a.cols(); ++j)
                a.at(i, j) = F.sub(a(i, j), F.mul(f, a(r, j)));
        }
        ++r;
    }
    return r;
}

inline MatFq::value_type det(MatFq a) {
    detail::require_square(a, "det");
    const auto& F = a.field();
    const std::size_t d = a.rows();
    MatFq::value_type result = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (p < d && a(p, c) == 0)
            ++p;
        if (p == d)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < d; ++j)
                std::swap(a.at(p, j), a.at(c, j));
            result = F.neg(result);
        }
        result = F.mul(result, a(c, c));
        const auto inv = F.inv(a(c, c));
        for (std::size_t i = c + 1; i < d; ++i) {
            const auto f = F.mul(a(i, c), inv);
            if (f == 0)
                continue;
            for (std::size_t j = c; j < d; ++j)
                a.at(i, j) = F.sub(a(i, j), F.mul(f, a(c, j)));
        }
    }
    return result;
}

/// Gauss-Jordan inverse; throws std::domain_error for singular input.
inline MatFq inverse(const MatFq& m) {
    detail::require_square(m, "inverse");
    const auto& F = m.field();
    const std::size_t d = m.rows();
    MatFq a = m;
    MatFq inv = MatFq::identity(F, d);
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t p = c;
        while (p < d && a(p, c) == 0)
            ++p;
        if (p == d)
            throw std::domain_error("inverse of a singular matrix");
        for (std::size_t j = 0; j < d; ++j) {
            std::swap(a.at(p, j), a.at(c, j));
            std::swap(inv.at(p, j), inv.at(c, j));
        }
        const auto s = F.inv(a(c, c));
        for (std::size_t j = 0; j < d; ++j) {
            a.at(c, j) = F.mul(a(c, j), s);
            inv.at(c, j) = F.mul(inv(c, j), s);
        }
        for (std::size_t i = 0; i < d; ++i) {
            if (i == c || a(i, c) == 0)
                continue;
            const auto f = a(i, c);
            for (std::size_t j = 0; j < d; ++j) {
                a.at(i, j) = F.sub(a(i, j), F.mul(f, a(c, j)));
                inv.at(i, j) = F.sub(inv(i, j), F.mul(f, inv(c, j)));
            }
        }
    }
    return inv;
}

/// Index of a d x d matrix in the enumeration order used by the census:
/// row-major entries read as base-q digits, entry (0,0) most significant.
inline std::uint64_t matrix_index(const MatFq& a) {
    std::uint64_t idx = 0;
    for (auto v : a.entries())
        idx = idx * a.field().q() + v;
    return idx;
}

inline MatFq matrix_from_index(const PrimeField& field, std::size_t rows, std::size_t cols, std::uint64_t index) {
    std::vector<MatFq::value_type> e(rows * cols, 0);
    for (std::size_t k = e.size(); k-- > 0;) {
        e[k] = static_cast<MatFq::value_type>(index % field.q());
        index /= field.q();
    }
    return MatFq(field, rows, cols, std::move(e));
}

/// "1,1;0,1": rows separated by ';', entries by ','.
inline std::string format_matrix(const MatFq& a) {
    std::string out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i != 0)
            out += ';';
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j != 0)
                out += ',';
            out += std::to_string(a(i, j));
        }
    }
    return out;
}

inline MatFq parse_matrix(std::string_view text, const PrimeField& field) {
    const auto s = detail::strip_spaces(text);
    auto rows = detail::split(s, ';');
    std::size_t cols = 0;
    std::vector<MatFq::value_type> e;
    for (const auto& row : rows) {
        auto toks = detail::split(row, ',');
        if (cols == 0)
            cols = toks.size();
        else if (toks.size() != cols)
            throw parse_error("ragged matrix row '" + row + "' in '" + std::string(text) + "'");
        for (const auto& t : toks)
            e.push_back(static_cast<MatFq::value_type>(detail::parse_uint(t, text) % field.q()));
    }
    return MatFq(field, rows.size(), cols, std::move(e));
}

}  // namespace slfsr
