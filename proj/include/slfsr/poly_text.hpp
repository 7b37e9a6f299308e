#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace slfsr {

/// Human form, highest degree first: "x^4+x+1", "2x^2+x+2", "0".
/// Coefficients that print with a '+' are parenthesised ("(y+1)x").
template <FiniteField F>
std::string format_poly(const Polynomial<F>& f, char var = 'x') {
    if (f.is_zero())
        return "0";
    const auto& field = f.field();
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        const auto& c = f.coeffs()[k];
        if (field.is_zero(c))
            continue;
        if (!out.empty())
            out += '+';
        std::string cs = field.format(c);
        if (cs.find('+') != std::string::npos)
            cs = "(" + cs + ")";
        if (k == 0) {
            out += cs;
            continue;
        }
        if (c != field.one())
            out += cs;
        out += var;
        if (k > 1)
            out += '^' + std::to_string(k);
    }
    return out;
}

/// Coefficient form, ascending: "1,1,0,0,1".
inline std::string format_poly_coeffs(const Poly& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i != 0)
            out += ',';
        out += std::to_string(f.coeffs()[i]);
    }
    return out;
}

namespace detail {

inline std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            out += ch;
    return out;
}

inline std::uint64_t parse_uint(std::string_view tok, std::string_view context) {
    if (tok.empty() || tok.size() > 18)
        throw parse_error("bad number '" + std::string(tok) + "' in '" + std::string(context) + "'");
    std::uint64_t v = 0;
    for (char ch : tok) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw parse_error("bad number '" + std::string(tok) + "' in '" + std::string(context) + "'");
        v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    return v;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace detail

/// Parses either the human form ("x^4+x+1", "x^2-1", "2*x+1") or the
/// ascending coefficient form ("1,1,0,0,1"). A bare integer is a constant.
inline Poly parse_poly(std::string_view text, const PrimeField& field) {
    const std::string s = detail::strip_spaces(text);
    if (s.empty())
        throw parse_error("empty polynomial '" + std::string(text) + "'");
    const bool human = s.find_first_of("xX^+-") != std::string::npos;
    if (!human) {
        std::vector<PrimeField::value_type> c;
        for (const auto& tok : detail::split(s, ','))
            c.push_back(field.from_int(static_cast<std::int64_t>(detail::parse_uint(tok, text) % field.q())));
        return Poly(field, std::move(c));
    }
    std::vector<PrimeField::value_type> c;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw parse_error("unexpected '" + s.substr(pos, 1) + "' in '" + std::string(text) + "'");
        }
        std::size_t end = s.find_first_of("+-", pos);
        if (end == std::string::npos)
            end = s.size();
        const std::string term = s.substr(pos, end - pos);
        if (term.empty())
            throw parse_error("empty term in '" + std::string(text) + "'");
        std::uint64_t coeff = 1;
        std::uint64_t exponent = 0;
        const auto xpos = term.find_first_of("xX");
        if (xpos == std::string::npos) {
            coeff = detail::parse_uint(term, text) % field.q();
        } else {
            std::string head = term.substr(0, xpos);
            if (!head.empty() && head.back() == '*')
                head.pop_back();
            if (!head.empty())
                coeff = detail::parse_uint(head, text) % field.q();
            std::string tail = term.substr(xpos + 1);
            if (tail.empty()) {
                exponent = 1;
            } else if (tail[0] == '^') {
                exponent = detail::parse_uint(tail.substr(1), text);
            } else {
                throw parse_error("bad term '" + term + "' in '" + std::string(text) + "'");
            }
            if (exponent > 4096)
                throw parse_error("exponent too large in term '" + term + "'");
        }
        if (c.size() <= exponent)
            c.resize(exponent + 1, 0);
        auto v = field.from_int(static_cast<std::int64_t>(coeff));
        c[exponent] = negative ? field.sub(c[exponent], v) : field.add(c[exponent], v);
        pos = end;
    }
    return Poly(field, std::move(c));
}

}  // namespace slfsr
