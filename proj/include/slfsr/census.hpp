#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lfsr.hpp"
#include "matforms.hpp"

namespace slfsr {

using BigInt = boost::multiprecision::cpp_int;

/// Candidate-tuple cap for the block-companion census.
inline constexpr std::uint64_t kCensusCap = 100'000'000;
/// Cap on the number of m-dimensional subspaces scanned by splitting_count.
inline constexpr std::uint64_t kSubspaceCap = 10'000'000;

namespace detail {

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt r = 1;
    for (std::uint64_t i = 0; i < exp; ++i)
        r *= base;
    return r;
}

/// min(v, cap + 1) as a uint64
inline std::uint64_t clamp_u64(const BigInt& v, std::uint64_t cap) {
    return v > cap ? cap + 1 : static_cast<std::uint64_t>(v);
}

}  // namespace detail

/// |GL_m(F_q)| = prod_{i=0}^{m-1} (q^m - q^i)
inline BigInt gl_order(unsigned m, const PrimeField& field) {
    const BigInt qm = detail::big_pow(field.q(), m);
    BigInt r = 1;
    for (unsigned i = 0; i < m; ++i)
        r *= qm - detail::big_pow(field.q(), i);
    return r;
}

/// q^{m(m-1)(n-1)} * prod_{i=1}^{m-1} (q^m - q^i): the conjectured size of
/// every fiber of the characteristic map.
inline BigInt expected_fiber_size(unsigned m, unsigned n, const PrimeField& field) {
    const BigInt qm = detail::big_pow(field.q(), m);
    BigInt r = detail::big_pow(field.q(), std::uint64_t{m} * (m - 1) * (n - 1));
    for (unsigned i = 1; i < m; ++i)
        r *= qm - detail::big_pow(field.q(), i);
    return r;
}

namespace detail {

inline std::uint64_t phi_qmn(unsigned m, unsigned n, const PrimeField& field) {
    if (m == 0 || n == 0)
        throw std::invalid_argument("upsilon: m and n must be >= 1");
    std::uint64_t qmn = 0;
    try {
        qmn = checked_pow(field.q(), m * n);
    } catch (const infeasible_error&) {
        throw infeasible_error("upsilon: q^(mn) - 1 exceeds the 2^63 factoring cap");
    }
    return euler_phi(qmn - 1);
}

}  // namespace detail

/// Number of primitive sigma-LFSRs of order n over F_{q^m} predicted by
///     phi(q^{mn} - 1)/(mn) * q^{m(m-1)(n-1)} * prod_{i=1}^{m-1} (q^m - q^i).
inline BigInt upsilon(unsigned m, unsigned n, const PrimeField& field) {
    const std::uint64_t phi = detail::phi_qmn(m, n, field);
    if (phi % (std::uint64_t{m} * n) != 0)
        throw std::logic_error("mn does not divide phi(q^mn - 1)");
    return BigInt(phi / (std::uint64_t{m} * n)) * expected_fiber_size(m, n, field);
}

/// The same count written as |GL_m|/(q^m - 1) * phi(q^{mn} - 1)/(mn) * q^{m(m-1)(n-1)}.
inline BigInt upsilon_gl_form(unsigned m, unsigned n, const PrimeField& field) {
    const std::uint64_t phi = detail::phi_qmn(m, n, field);
    const BigInt gl = gl_order(m, field);
    const BigInt qm1 = detail::big_pow(field.q(), m) - 1;
    const BigInt num = gl * phi * detail::big_pow(field.q(), std::uint64_t{m} * (m - 1) * (n - 1));
    const BigInt den = qm1 * m * n;
    if (num % den != 0)
        throw std::logic_error("upsilon GL form is not an integer");
    return num / den;
}

/// Gaussian binomial [n choose k]_q: the number of k-dimensional subspaces
/// of F_q^n.
inline BigInt gaussian_binomial(unsigned n, unsigned k, std::uint64_t q) {
    if (k > n)
        return 0;
    BigInt num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= detail::big_pow(q, n - i) - 1;
        den *= detail::big_pow(q, i + 1) - 1;
    }
    return num / den;
}

/// GL_m(F_q) in index order (see matrix_index).
inline std::vector<MatFq> enumerate_gl(unsigned m, const PrimeField& field) {
    const std::uint64_t total = detail::clamp_u64(detail::big_pow(field.q(), std::uint64_t{m} * m), kEnumerationCap);
    if (total > kEnumerationCap)
        throw infeasible_error("enumerate_gl: q^(m^2) exceeds 2^24");
    std::vector<MatFq> out;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto A = matrix_from_index(field, m, m, idx);
        if (det(A) != 0)
            out.push_back(std::move(A));
    }
    return out;
}

namespace detail {

inline void check_census_feasible(unsigned m, unsigned n, const PrimeField& field) {
    if (m == 0 || n == 0)
        throw std::invalid_argument("census: m and n must be >= 1");
    const BigInt candidates = gl_order(m, field) * big_pow(field.q(), std::uint64_t{m} * m * (n - 1));
    if (candidates > kCensusCap)
        throw infeasible_error("census (q=" + std::to_string(field.q()) + ",m=" + std::to_string(m) +
                               ",n=" + std::to_string(n) + "): " + candidates.str() + " candidates exceed 10^8");
    if (std::uint64_t{m} * n > kCharPolyMaxDim)
        throw infeasible_error("census: mn exceeds the determinant cap");
    checked_pow(field.q(), m * n);
}

/// Decides primitivity of degree-mn candidates; uses the precomputed set
/// P(mn, q) when it is enumerable.
class PrimitivityOracle {
public:
    PrimitivityOracle(unsigned degree, const PrimeField& field) {
        if (checked_pow(field.q(), degree) <= kEnumerationCap) {
            auto all = enumerate_primitive(degree, field);
            set_.emplace(all.begin(), all.end());
        }
    }
    bool operator()(const Poly& f) const {
        if (set_)
            return set_->count(f) != 0;
        return is_primitive(f);
    }
    const std::optional<std::set<Poly>>& known() const { return set_; }

private:
    std::optional<std::set<Poly>> set_;
};

/// Visits every (C_0, ..., C_{n-1}) with C_0 in `c0s` and C_1..C_{n-1}
/// ranging over M_m(F_q) in index order, with its Delta(X).
template <class Visit>
void scan_tuples(unsigned m, unsigned n, const PrimeField& field, std::span<const MatFq> c0s, Visit&& visit) {
    const std::uint64_t per_block = checked_pow(field.q(), m * m);
    std::uint64_t tails = 1;
    for (unsigned i = 1; i < n; ++i)
        tails *= per_block;
    std::vector<MatFq> blocks(n, MatFq(field, m, m));
    for (const auto& c0 : c0s) {
        blocks[0] = c0;
        for (std::uint64_t t = 0; t < tails; ++t) {
            std::uint64_t rest = t;
            for (unsigned i = n; i-- > 1;) {
                blocks[i] = matrix_from_index(field, m, m, rest % per_block);
                rest /= per_block;
            }
            BlockCompanion B(field, m, blocks);
            auto delta = delta_poly(B);
            visit(std::move(B), std::move(delta));
        }
    }
}

}  // namespace detail

/// BCMS(m, n; q): block companion tuples with C_0 invertible and Delta(X)
/// primitive of degree mn, in lexicographic (C_0, C_1, ...) index order.
inline std::vector<BlockCompanion> enumerate_bcms(unsigned m, unsigned n, const PrimeField& field) {
    detail::check_census_feasible(m, n, field);
    const auto gl = enumerate_gl(m, field);
    const detail::PrimitivityOracle primitive(m * n, field);
    std::vector<BlockCompanion> out;
    detail::scan_tuples(m, n, field, gl, [&](BlockCompanion B, Poly delta) {
        if (primitive(delta))
            out.push_back(std::move(B));
    });
    return out;
}

struct Fiber {
    Poly poly;
    std::uint64_t size = 0;
    std::vector<BlockCompanion> members;  // filled only on request
};

struct CensusReport {
    unsigned q = 0, m = 0, n = 0;
    std::uint64_t total = 0;
    BigInt upsilon;
    BigInt expected_fiber;
    std::vector<Fiber> fibers;  // ascending by polynomial
    bool surjectivity_checked = false;
    bool surjective = false;  // key set == P(mn, q)
    bool conjecture1_holds = false;
    bool conjecture2_holds = false;
};

struct CensusOptions {
    unsigned jobs = 1;
    bool members = false;
};

/// Groups BCMS(m, n; q) by characteristic polynomial. The candidate space
/// is split into contiguous slices of GL_m (one per worker) and the partial
/// histograms are merged in slice order, so the report does not depend on
/// the worker count.
inline CensusReport fiber_histogram(unsigned m, unsigned n, const PrimeField& field, const CensusOptions& opts = {}) {
    detail::check_census_feasible(m, n, field);
    const auto gl = enumerate_gl(m, field);
    const detail::PrimitivityOracle primitive(m * n, field);

    using Partial = std::map<Poly, Fiber>;
    const unsigned jobs = std::max(1u, std::min<unsigned>(opts.jobs, static_cast<unsigned>(gl.size())));
    std::vector<Partial> partials(jobs);
    auto work = [&](unsigned w) {
        const std::size_t lo = gl.size() * w / jobs;
        const std::size_t hi = gl.size() * (w + 1) / jobs;
        auto& out = partials[w];
        detail::scan_tuples(m, n, field, std::span<const MatFq>(gl).subspan(lo, hi - lo),
                            [&](BlockCompanion B, Poly delta) {
                                if (!primitive(delta))
                                    return;
                                auto [it, fresh] = out.try_emplace(delta, Fiber{delta, 0, {}});
                                ++it->second.size;
                                if (opts.members)
                                    it->second.members.push_back(std::move(B));
                            });
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back(work, w);
        for (auto& t : pool)
            t.join();
    }

    Partial merged;
    for (auto& part : partials)
        for (auto& [key, fib] : part) {
            auto [it, fresh] = merged.try_emplace(key, Fiber{key, 0, {}});
            it->second.size += fib.size;
            for (auto& b : fib.members)
                it->second.members.push_back(std::move(b));
        }

    CensusReport rep;
    rep.q = field.q();
    rep.m = m;
    rep.n = n;
    rep.upsilon = upsilon(m, n, field);
    rep.expected_fiber = expected_fiber_size(m, n, field);
    for (auto& [key, fib] : merged) {
        rep.total += fib.size;
        rep.fibers.push_back(std::move(fib));
    }
    if (const auto& known = primitive.known()) {
        rep.surjectivity_checked = true;
        rep.surjective = known->size() == rep.fibers.size();  // keys are a subset of P(mn, q)
    }
    rep.conjecture1_holds = BigInt(rep.total) == rep.upsilon;
    rep.conjecture2_holds = (!rep.surjectivity_checked || rep.surjective) &&
                            std::all_of(rep.fibers.begin(), rep.fibers.end(),
                                        [&](const Fiber& f) { return BigInt(f.size) == rep.expected_fiber; });
    return rep;
}

/// Number of Singer cycles in GL_m(F_q), by testing every invertible matrix.
inline std::uint64_t count_singer_gl(unsigned m, const PrimeField& field) {
    if (gl_order(m, field) > 10'000'000)
        throw infeasible_error("count_singer_gl: |GL_m| exceeds 10^7");
    std::uint64_t count = 0;
    for (const auto& A : enumerate_gl(m, field))
        if (is_singer(A))
            ++count;
    return count;
}

/// |GL_m| phi(q^m - 1) / (m (q^m - 1)): Singer cycles counted through the
/// normaliser of a Singer subgroup.
inline BigInt singer_count_formula(unsigned m, const PrimeField& field) {
    const std::uint64_t qm1 = checked_pow(field.q(), m) - 1;
    return gl_order(m, field) * euler_phi(qm1) / (BigInt(m) * qm1);
}

/// A block companion Singer cycle with characteristic polynomial f:
///   f_0 = least degree-n factor of f over F_{q^m} (default modulus g),
///   f_0 = X^n - beta_{n-1} X^{n-1} - ... - beta_0,
///   A = companion(g), C_i = theta(beta_i) = h_i(A).
inline BlockCompanion construct_primitive_sigma(const Poly& f, unsigned m, unsigned n, std::uint64_t seed = 0) {
    if (m == 0 || n == 0 || f.degree() != static_cast<int>(m * n))
        throw std::invalid_argument("construct: deg f = " + std::to_string(f.degree()) + " is not m*n = " +
                                    std::to_string(m * n));
    if (!f.is_monic() || !is_primitive(f))
        throw std::invalid_argument("construct: " + format_poly(f) + " is not primitive");
    const auto F = ExtField::with_default_modulus(f.field(), m);
    const auto f0 = irreducible_factor_deg_n(f, F, n, seed);
    const auto A = companion(F.modulus());
    std::vector<MatFq> blocks;
    for (unsigned i = 0; i < n; ++i)
        blocks.push_back(theta_embed(F, F.neg(f0[i]), A));
    BlockCompanion B(f.field(), m, std::move(blocks));
    if (!B.invertible() || delta_poly(B) != f)
        throw std::logic_error("construct: postcondition failed for " + format_poly(f));
    return B;
}

struct SplittingReport {
    unsigned q = 0, m = 0, n = 0;
    Poly alpha_minpoly;
    std::uint64_t subspace_count = 0;  // alpha-splitting subspaces of dimension m
    std::uint64_t total_subspaces = 0;  // all m-dimensional subspaces visited
};

namespace detail {

/// Calls visit(rows) once per m-dimensional subspace of F_q^d, passing its
/// reduced row echelon basis.
template <class Visit>
void for_each_subspace(unsigned d, unsigned m, const PrimeField& field, Visit&& visit) {
    const std::uint32_t q = field.q();
    std::vector<unsigned> pivots(m);
    for (unsigned i = 0; i < m; ++i)
        pivots[i] = i;
    for (;;) {
        // free positions: row i, column j > pivots[i], j not a pivot column
        std::vector<std::pair<unsigned, unsigned>> free;
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = pivots[i] + 1; j < d; ++j)
                if (std::find(pivots.begin(), pivots.end(), j) == pivots.end())
                    free.emplace_back(i, j);
        std::vector<std::vector<std::uint32_t>> rows(m, std::vector<std::uint32_t>(d, 0));
        for (unsigned i = 0; i < m; ++i)
            rows[i][pivots[i]] = 1;
        std::vector<std::uint32_t> digits(free.size(), 0);
        for (;;) {
            for (std::size_t k = 0; k < free.size(); ++k)
                rows[free[k].first][free[k].second] = digits[k];
            visit(rows);
            std::size_t k = 0;
            while (k < digits.size() && ++digits[k] == q)
                digits[k++] = 0;
            if (k == digits.size())
                break;
        }
        // next pivot combination
        int i = static_cast<int>(m) - 1;
        while (i >= 0 && pivots[i] == d - m + static_cast<unsigned>(i))
            --i;
        if (i < 0)
            return;
        ++pivots[i];
        for (unsigned k = static_cast<unsigned>(i) + 1; k < m; ++k)
            pivots[k] = pivots[k - 1] + 1;
    }
}

}  // namespace detail

/// Counts the m-dimensional subspaces W of F_{q^{mn}} = F_q[X]/(f) with
/// W + aW + ... + a^{n-1}W = F_{q^{mn}}, where a is the class of X.
inline SplittingReport splitting_count(const Poly& f, unsigned m, unsigned n) {
    if (m == 0 || n == 0 || f.degree() != static_cast<int>(m * n))
        throw std::invalid_argument("splitting: deg f is not m*n");
    if (!f.is_monic() || !is_primitive(f))
        throw std::invalid_argument("splitting: " + format_poly(f) + " is not primitive");
    const auto& field = f.field();
    const unsigned d = m * n;
    const BigInt subspaces = gaussian_binomial(d, m, field.q());
    if (subspaces > kSubspaceCap)
        throw infeasible_error("splitting: " + subspaces.str() + " subspaces exceed 10^7");
    // v * X mod f on ascending coefficient rows: the transposed companion matrix
    const MatFq C = companion(f);
    MatFq mult_by_alpha(field, d, d);
    for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j)
            mult_by_alpha.at(i, j) = C(j, i);
    SplittingReport rep{field.q(), m, n, f};
    MatFq span(field, d, d);
    detail::for_each_subspace(d, m, field, [&](const std::vector<std::vector<std::uint32_t>>& basis) {
        ++rep.total_subspaces;
        unsigned r = 0;
        for (const auto& u : basis) {
            auto v = u;
            for (unsigned k = 0; k < n; ++k) {
                for (unsigned j = 0; j < d; ++j)
                    span.at(k * m + r, j) = v[j];
                v = row_times(v, mult_by_alpha);
            }
            ++r;
        }
        if (rank(span) == d)
            ++rep.subspace_count;
    });
    return rep;
}

struct SplittingRelation {
    Poly f;
    unsigned m = 0, n = 0;
    std::uint64_t fiber = 0;
    std::uint64_t splitting = 0;
    BigInt lhs;  // fiber * (q^{mn} - 1)
    BigInt rhs;  // splitting * |GL_m|
    bool holds = false;
};

/// Checks |fiber(f)| (q^{mn} - 1) = #splitting subspaces * |GL_m(F_q)|.
/// `fiber` may be supplied from an existing census; otherwise it is counted.
inline SplittingRelation verify_splitting_fiber_relation(const Poly& f, unsigned m, unsigned n,
                                                         std::optional<std::uint64_t> fiber = std::nullopt) {
    SplittingRelation rel{f, m, n, 0, 0, 0, 0, false};
    if (fiber) {
        rel.fiber = *fiber;
    } else {
        const auto rep = fiber_histogram(m, n, f.field());
        for (const auto& fb : rep.fibers)
            if (fb.poly == f)
                rel.fiber = fb.size;
    }
    rel.splitting = splitting_count(f, m, n).subspace_count;
    rel.lhs = BigInt(rel.fiber) * (detail::big_pow(f.field().q(), std::uint64_t{m} * n) - 1);
    rel.rhs = BigInt(rel.splitting) * gl_order(m, f.field());
    rel.holds = rel.lhs == rel.rhs;
    return rel;
}

/// Parameter grid such as "q=2,m<=2,n<=3" or "q=3,m=2,n=1".
struct Grid {
    unsigned q = 2;
    unsigned m_lo = 1, m_hi = 1;
    unsigned n_lo = 1, n_hi = 1;
};

inline Grid parse_grid(std::string_view text) {
    Grid g;
    bool have_m = false, have_n = false;
    for (const auto& term : detail::split(detail::strip_spaces(text), ',')) {
        const auto le = term.find("<=");
        const auto eq = term.find('=');
        if (eq == std::string::npos || eq == 0)
            throw parse_error("bad grid term '" + term + "'");
        const bool upto = le != std::string::npos && le + 1 == eq;
        const std::string key = term.substr(0, upto ? le : eq);
        const auto value = static_cast<unsigned>(detail::parse_uint(term.substr(eq + 1), text));
        if (value == 0)
            throw parse_error("grid value must be >= 1 in '" + term + "'");
        if (key == "q" && !upto) {
            g.q = value;
        } else if (key == "m") {
            g.m_lo = upto ? 1 : value;
            g.m_hi = value;
            have_m = true;
        } else if (key == "n") {
            g.n_lo = upto ? 1 : value;
            g.n_hi = value;
            have_n = true;
        } else {
            throw parse_error("bad grid term '" + term + "'");
        }
    }
    if (!have_m || !have_n)
        throw parse_error("grid '" + std::string(text) + "' needs both m and n");
    return g;
}

struct CellReport {
    unsigned q = 0, m = 0, n = 0;
    bool skipped = false;
    std::string skip_reason;
    CensusReport census;
    std::optional<std::uint64_t> singer_gl;  // n = 1 only
    bool singer_matches = true;
    std::uint64_t constructed = 0;
    bool construct_ok = true;
    std::vector<SplittingRelation> splitting;
    bool splitting_skipped = false;

    bool passed() const {
        if (skipped)
            return true;
        bool ok = census.conjecture1_holds && census.conjecture2_holds && singer_matches && construct_ok;
        for (const auto& r : splitting)
            ok = ok && r.holds;
        return ok;
    }
};

/// Runs every check on each feasible cell of the grid; infeasible cells are
/// marked skipped.
inline std::vector<CellReport> verify_all(const Grid& grid, const CensusOptions& opts = {}, std::uint64_t seed = 0) {
    const PrimeField field(grid.q);
    std::vector<CellReport> out;
    for (unsigned m = grid.m_lo; m <= grid.m_hi; ++m)
        for (unsigned n = grid.n_lo; n <= grid.n_hi; ++n) {
            CellReport cell;
            cell.q = field.q();
            cell.m = m;
            cell.n = n;
            try {
                cell.census = fiber_histogram(m, n, field, CensusOptions{opts.jobs, false});
                if (n == 1) {
                    cell.singer_gl = count_singer_gl(m, field);
                    cell.singer_matches = BigInt(*cell.singer_gl) == cell.census.total &&
                                          BigInt(*cell.singer_gl) == singer_count_formula(m, field) &&
                                          BigInt(*cell.singer_gl) == upsilon(m, 1, field);
                }
                for (const auto& fib : cell.census.fibers) {
                    const auto B = construct_primitive_sigma(fib.poly, m, n, seed);
                    cell.construct_ok = cell.construct_ok && B.invertible() && delta_poly(B) == fib.poly;
                    ++cell.constructed;
                }
                cell.construct_ok = cell.construct_ok && cell.constructed == cell.census.fibers.size();
                if (gaussian_binomial(m * n, m, field.q()) <= kSubspaceCap) {
                    for (const auto& fib : cell.census.fibers)
                        cell.splitting.push_back(verify_splitting_fiber_relation(fib.poly, m, n, fib.size));
                } else {
                    cell.splitting_skipped = true;
                }
            } catch (const infeasible_error& e) {
                cell = CellReport{};
                cell.q = field.q();
                cell.m = m;
                cell.n = n;
                cell.skipped = true;
                cell.skip_reason = e.what();
            }
            out.push_back(std::move(cell));
        }
    return out;
}

}  // namespace slfsr
