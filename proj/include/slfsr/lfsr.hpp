#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "matforms.hpp"

namespace slfsr {

/// Classical LFSR of order n over F_q:
///     s_{i+n} = s_i c_0 + s_{i+1} c_1 + ... + s_{i+n-1} c_{n-1}.
/// taps[i] multiplies s_{k+i}.
struct LfsrSpec {
    PrimeField field;
    std::vector<std::uint32_t> taps;

    unsigned order() const { return static_cast<unsigned>(taps.size()); }

    /// X^n - c_{n-1} X^{n-1} - ... - c_0
    Poly char_poly() const {
        std::vector<std::uint32_t> c;
        for (auto t : taps)
            c.push_back(field.neg(field.from_int(t)));
        c.push_back(1);
        return Poly(field, std::move(c));
    }

    /// The companion matrix of char_poly(): S_{k+1} = S_k A for row states.
    MatFq transition() const { return companion(char_poly()); }
};

/// sigma-LFSR of order n over F_{q^m} acting on coordinate row vectors:
///     s_{i+n} = s_i C_0 + s_{i+1} C_1 + ... + s_{i+n-1} C_{n-1}.
struct SigmaLfsrSpec {
    ExtField parent;
    std::vector<MatFq> taps;

    unsigned order() const { return static_cast<unsigned>(taps.size()); }
    BlockCompanion block_companion() const { return BlockCompanion(parent.base(), parent.degree(), taps); }
};

struct PeriodReport {
    std::uint64_t period = 1;
    std::uint64_t preperiod = 0;

    bool operator==(const PeriodReport&) const = default;
};

namespace detail {

inline void validate(const LfsrSpec& spec, std::size_t init_len) {
    if (spec.taps.empty())
        throw std::invalid_argument("LFSR order must be >= 1");
    if (init_len != spec.taps.size())
        throw std::invalid_argument("initial state has length " + std::to_string(init_len) + ", expected " +
                                    std::to_string(spec.taps.size()));
}

inline void validate(const SigmaLfsrSpec& spec, std::size_t init_len) {
    if (spec.taps.empty())
        throw std::invalid_argument("sigma-LFSR order must be >= 1");
    for (const auto& c : spec.taps)
        if (c.rows() != spec.parent.degree() || c.cols() != spec.parent.degree() ||
            !(c.field() == spec.parent.base()))
            throw std::invalid_argument("tap matrix is not " + std::to_string(spec.parent.degree()) + "x" +
                                        std::to_string(spec.parent.degree()) + " over the base field");
    if (init_len != spec.taps.size())
        throw std::invalid_argument("initial state has length " + std::to_string(init_len) + ", expected " +
                                    std::to_string(spec.taps.size()));
}

/// Walks a deterministic state map from `start` with a first-visit table over
/// the whole state space. States are encoded as integers below `space`.
template <class Step>
PeriodReport walk_states(std::uint64_t start, std::uint64_t space, Step step) {
    if (space > kEnumerationCap)
        throw infeasible_error("state space of " + std::to_string(space) + " states exceeds 2^24");
    constexpr std::uint32_t unseen = 0xFFFFFFFFu;
    std::vector<std::uint32_t> first(space, unseen);
    std::uint64_t state = start;
    for (std::uint32_t k = 0;; ++k) {
        if (first[state] != unseen)
            return PeriodReport{k - first[state], first[state]};
        first[state] = k;
        state = step(state);
    }
}

}  // namespace detail

inline std::vector<std::uint32_t> lfsr_run(const LfsrSpec& spec, std::span<const std::uint32_t> init,
                                           std::size_t count) {
    detail::validate(spec, init.size());
    const auto& F = spec.field;
    const std::size_t n = spec.taps.size();
    std::vector<std::uint32_t> s;
    s.reserve(std::max(count, n));
    for (auto v : init)
        s.push_back(F.from_int(v));
    while (s.size() < count) {
        const std::size_t i = s.size() - n;
        std::uint32_t next = 0;
        for (std::size_t j = 0; j < n; ++j)
            next = F.add(next, F.mul(s[i + j], F.from_int(spec.taps[j])));
        s.push_back(next);
    }
    s.resize(count);
    return s;
}

inline std::vector<ExtElem> sigma_run(const SigmaLfsrSpec& spec, std::span<const ExtElem> init, std::size_t count) {
    detail::validate(spec, init.size());
    const auto& F = spec.parent.base();
    const std::size_t n = spec.taps.size();
    const std::size_t m = spec.parent.degree();
    std::vector<ExtElem> s;
    s.reserve(std::max(count, n));
    for (const auto& e : init) {
        if (e.coords.size() != m)
            throw std::invalid_argument("initial element has " + std::to_string(e.coords.size()) +
                                        " coordinates, expected " + std::to_string(m));
        s.push_back(e);
    }
    while (s.size() < count) {
        const std::size_t i = s.size() - n;
        std::vector<std::uint32_t> next(m, 0);
        for (std::size_t j = 0; j < n; ++j) {
            auto part = row_times(s[i + j].coords, spec.taps[j]);
            for (std::size_t k = 0; k < m; ++k)
                next[k] = F.add(next[k], part[k]);
        }
        s.push_back(ExtElem{std::move(next)});
    }
    s.resize(count);
    return s;
}

/// Exact period and preperiod of the generated sequence, from the state
/// sequence S_0, S_1, ... (a sequence and its state sequence share both).
inline PeriodReport period_report(const LfsrSpec& spec, std::span<const std::uint32_t> init) {
    detail::validate(spec, init.size());
    const auto& F = spec.field;
    const unsigned n = spec.order();
    const std::uint64_t q = F.q();
    std::uint64_t space = 0;
    try {
        space = checked_pow(q, n);
    } catch (const infeasible_error&) {
        throw infeasible_error("LFSR state space q^n exceeds 2^24");
    }
    // s_k is digit k (least significant first)
    std::uint64_t start = 0;
    for (std::size_t k = n; k-- > 0;)
        start = start * q + F.from_int(init[k]);
    const std::uint64_t top = space / q;
    std::vector<std::uint32_t> taps;
    for (auto t : spec.taps)
        taps.push_back(F.from_int(t));
    return detail::walk_states(start, space, [&](std::uint64_t st) {
        std::uint64_t rest = st;
        std::uint32_t next = 0;
        for (unsigned j = 0; j < n; ++j) {
            next = F.add(next, F.mul(static_cast<std::uint32_t>(rest % q), taps[j]));
            rest /= q;
        }
        return st / q + next * top;
    });
}

inline PeriodReport period_report(const SigmaLfsrSpec& spec, std::span<const ExtElem> init) {
    detail::validate(spec, init.size());
    const auto& F = spec.parent.base();
    const unsigned n = spec.order();
    const unsigned m = spec.parent.degree();
    const std::uint64_t q = F.q();
    std::uint64_t space = 0;
    try {
        space = checked_pow(q, m * n);
    } catch (const infeasible_error&) {
        throw infeasible_error("sigma-LFSR state space q^(mn) exceeds 2^24");
    }
    const std::uint64_t Q = spec.parent.size();
    std::uint64_t start = 0;
    for (std::size_t k = n; k-- > 0;)
        start = start * Q + spec.parent.index_of(init[k]);
    const std::uint64_t top = space / Q;
    return detail::walk_states(start, space, [&](std::uint64_t st) {
        std::uint64_t rest = st;
        std::vector<std::uint32_t> next(m, 0);
        for (unsigned j = 0; j < n; ++j) {
            auto part = row_times(spec.parent.element(rest % Q).coords, spec.taps[j]);
            for (unsigned k = 0; k < m; ++k)
                next[k] = F.add(next[k], part[k]);
            rest /= Q;
        }
        return st / Q + spec.parent.index_of(ExtElem{std::move(next)}) * top;
    });
}

inline bool is_primitive_lfsr(const LfsrSpec& spec) {
    if (spec.taps.empty() || spec.field.from_int(spec.taps[0]) == 0)
        return false;
    return is_primitive(spec.char_poly());
}

/// Primitive iff Delta(X) is a primitive polynomial of degree mn.
inline bool is_primitive_sigma(const SigmaLfsrSpec& spec) {
    detail::validate(spec, spec.taps.size());
    return is_primitive(delta_poly(spec.block_companion()));
}

/// Definition-level check: every nonzero initial state gives a periodic
/// sequence of period q^{mn} - 1. Enumerates the state space.
inline bool is_primitive_sigma_by_states(const SigmaLfsrSpec& spec) {
    detail::validate(spec, spec.taps.size());
    const unsigned n = spec.order();
    const std::uint64_t Q = spec.parent.size();
    const std::uint64_t space = checked_pow(Q, n);
    if (space > kEnumerationCap)
        throw infeasible_error("sigma-LFSR state space exceeds 2^24");
    // One cycle through every nonzero state: it suffices to follow one
    // nonzero start, the rest of the states lie on the same cycle.
    std::vector<ExtElem> init(n, spec.parent.zero());
    init[0] = spec.parent.one();
    return period_report(spec, init) == PeriodReport{space - 1, 0};
}

/// Word-packed binary sigma-LFSR (q = 2, m <= 64). Element s_k is emitted as
/// one word with coordinate a_j in bit j. The tap products are table-driven:
/// one 256-entry table per tap and byte of the state word.
class KeystreamGenerator {
public:
    KeystreamGenerator(const SigmaLfsrSpec& spec, std::span<const ExtElem> init) {
        detail::validate(spec, init.size());
        if (spec.parent.base().q() != 2)
            throw std::invalid_argument("keystream words need q = 2, got q = " +
                                        std::to_string(spec.parent.base().q()));
        m_ = spec.parent.degree();
        if (m_ > 64)
            throw std::invalid_argument("keystream words need m <= 64");
        n_ = spec.order();
        chunks_ = (m_ + 7) / 8;
        tables_.assign(std::size_t{n_} * chunks_ * 256, 0);
        for (unsigned t = 0; t < n_; ++t) {
            std::vector<std::uint64_t> rows(m_, 0);
            for (unsigned i = 0; i < m_; ++i)
                for (unsigned j = 0; j < m_; ++j)
                    if (spec.taps[t](i, j))
                        rows[i] |= std::uint64_t{1} << j;
            for (unsigned c = 0; c < chunks_; ++c)
                for (unsigned byte = 0; byte < 256; ++byte) {
                    std::uint64_t acc = 0;
                    for (unsigned b = 0; b < 8 && 8 * c + b < m_; ++b)
                        if (byte & (1u << b))
                            acc ^= rows[8 * c + b];
                    tables_[(std::size_t{t} * chunks_ + c) * 256 + byte] = acc;
                }
        }
        ring_.resize(n_);
        for (unsigned k = 0; k < n_; ++k)
            ring_[k] = pack(init[k]);
    }

    static std::uint64_t pack(const ExtElem& e) {
        std::uint64_t w = 0;
        for (std::size_t j = 0; j < e.coords.size(); ++j)
            if (e.coords[j] & 1)
                w |= std::uint64_t{1} << j;
        return w;
    }

    std::uint64_t next() {
        const std::uint64_t out = ring_[head_];
        std::uint64_t acc = 0;
        std::size_t pos = head_;
        for (unsigned t = 0; t < n_; ++t) {
            std::uint64_t w = ring_[pos];
            const std::uint64_t* table = &tables_[std::size_t{t} * chunks_ * 256];
            for (unsigned c = 0; c < chunks_; ++c, w >>= 8)
                acc ^= table[c * 256 + (w & 0xFF)];
            if (++pos == n_)
                pos = 0;
        }
        ring_[head_] = acc;
        if (++head_ == n_)
            head_ = 0;
        return out;
    }

    void fill(std::span<std::uint64_t> out) {
        for (auto& w : out)
            w = next();
    }

private:
    unsigned m_ = 0;
    unsigned n_ = 0;
    unsigned chunks_ = 0;
    std::vector<std::uint64_t> tables_;
    std::vector<std::uint64_t> ring_;
    std::size_t head_ = 0;
};

inline std::vector<std::uint64_t> keystream_words(const SigmaLfsrSpec& spec, std::span<const ExtElem> init,
                                                  std::size_t word_count) {
    KeystreamGenerator gen(spec, init);
    std::vector<std::uint64_t> out(word_count);
    gen.fill(out);
    return out;
}

struct BenchResult {
    std::uint64_t words = 0;
    unsigned runs = 0;
    double median_seconds = 0;
    double words_per_second = 0;
    std::uint64_t checksum = 0;
};

/// Median-of-runs throughput of KeystreamGenerator over a fixed workload.
inline BenchResult bench_keystream(const SigmaLfsrSpec& spec, std::span<const ExtElem> init, std::uint64_t words,
                                   unsigned runs) {
    if (runs == 0)
        throw std::invalid_argument("bench needs at least one run");
    std::vector<double> seconds;
    std::uint64_t checksum = 0;
    for (unsigned r = 0; r < runs; ++r) {
        KeystreamGenerator gen(spec, init);
        std::uint64_t acc = 0;
        const auto t0 = std::chrono::steady_clock::now();
        for (std::uint64_t i = 0; i < words; ++i)
            acc ^= gen.next() + i;
        const auto t1 = std::chrono::steady_clock::now();
        seconds.push_back(std::chrono::duration<double>(t1 - t0).count());
        checksum = acc;
    }
    std::sort(seconds.begin(), seconds.end());
    const double med = seconds[seconds.size() / 2];
    return BenchResult{words, runs, med, med > 0 ? static_cast<double>(words) / med : 0.0, checksum};
}

/// Seeded random taps with invertible C_0, for benchmarks and sampling.
inline SigmaLfsrSpec random_sigma_spec(const ExtField& F, unsigned n, std::uint64_t seed) {
    if (n == 0)
        throw std::invalid_argument("sigma-LFSR order must be >= 1");
    std::mt19937_64 rng(seed);
    const auto& base = F.base();
    const std::size_t m = F.degree();
    auto random_block = [&] {
        std::vector<MatFq::value_type> e(m * m);
        for (auto& v : e)
            v = static_cast<MatFq::value_type>(rng() % base.q());
        return MatFq(base, m, m, std::move(e));
    };
    std::vector<MatFq> taps;
    do {
        taps.assign(1, random_block());
    } while (det(taps.front()) == 0);
    for (unsigned i = 1; i < n; ++i)
        taps.push_back(random_block());
    return SigmaLfsrSpec{F, std::move(taps)};
}

/// Seeded random initial state of n elements, not all zero.
inline std::vector<ExtElem> random_sigma_state(const ExtField& F, unsigned n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<ExtElem> init;
    bool nonzero = false;
    while (!nonzero) {
        init.clear();
        for (unsigned k = 0; k < n; ++k) {
            auto e = F.zero();
            for (auto& c : e.coords)
                c = static_cast<std::uint32_t>(rng() % F.base().q());
            nonzero = nonzero || !F.is_zero(e);
            init.push_back(std::move(e));
        }
    }
    return init;
}

}  // namespace slfsr
