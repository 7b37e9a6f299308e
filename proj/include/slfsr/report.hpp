#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "census.hpp"
#include "json.hpp"

namespace slfsr {

inline constexpr const char* kReportSchema = "1";

namespace detail {

/// Exact integers: JSON numbers while they fit in 64 bits, strings beyond.
inline nlohmann::ordered_json big_to_json(const BigInt& v) {
    if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max())
        return static_cast<std::uint64_t>(v);
    return v.str();
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const CensusReport& rep, bool members = false) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["q"] = rep.q;
    j["m"] = rep.m;
    j["n"] = rep.n;
    j["total"] = rep.total;
    j["upsilon"] = detail::big_to_json(rep.upsilon);
    j["expected_fiber"] = detail::big_to_json(rep.expected_fiber);
    auto fibers = nlohmann::ordered_json::array();
    for (const auto& f : rep.fibers) {
        nlohmann::ordered_json jf;
        jf["poly"] = format_poly(f.poly);
        jf["size"] = f.size;
        if (members) {
            auto list = nlohmann::ordered_json::array();
            for (const auto& b : f.members)
                list.push_back(format_block_companion(b));
            jf["members"] = std::move(list);
        }
        fibers.push_back(std::move(jf));
    }
    j["fibers"] = std::move(fibers);
    if (rep.surjectivity_checked)
        j["surjective"] = rep.surjective;
    j["conjecture1"] = rep.conjecture1_holds;
    j["conjecture2"] = rep.conjecture2_holds;
    return j;
}

inline std::string csv_header() {
    return "q,m,n,total,upsilon,fibers,min_fiber,max_fiber,expected_fiber,conjecture1,conjecture2";
}

inline std::string to_csv_row(const CensusReport& rep) {
    std::uint64_t lo = 0, hi = 0;
    if (!rep.fibers.empty()) {
        auto [a, b] = std::minmax_element(rep.fibers.begin(), rep.fibers.end(),
                                          [](const Fiber& x, const Fiber& y) { return x.size < y.size; });
        lo = a->size;
        hi = b->size;
    }
    auto flag = [](bool v) { return v ? "true" : "false"; };
    return std::to_string(rep.q) + "," + std::to_string(rep.m) + "," + std::to_string(rep.n) + "," +
           std::to_string(rep.total) + "," + rep.upsilon.str() + "," + std::to_string(rep.fibers.size()) + "," +
           std::to_string(lo) + "," + std::to_string(hi) + "," + rep.expected_fiber.str() + "," +
           flag(rep.conjecture1_holds) + "," + flag(rep.conjecture2_holds);
}

inline nlohmann::ordered_json to_json(const CellReport& cell) {
    nlohmann::ordered_json j;
    j["q"] = cell.q;
    j["m"] = cell.m;
    j["n"] = cell.n;
    if (cell.skipped) {
        j["skipped"] = true;
        j["reason"] = cell.skip_reason;
        return j;
    }
    j["skipped"] = false;
    j["census"] = to_json(cell.census);
    if (cell.singer_gl) {
        j["singer_gl"] = *cell.singer_gl;
        j["singer_matches"] = cell.singer_matches;
    }
    j["constructed"] = cell.constructed;
    j["construct_ok"] = cell.construct_ok;
    auto rels = nlohmann::ordered_json::array();
    for (const auto& r : cell.splitting) {
        nlohmann::ordered_json jr;
        jr["poly"] = format_poly(r.f);
        jr["fiber"] = r.fiber;
        jr["splitting_subspaces"] = r.splitting;
        jr["lhs"] = detail::big_to_json(r.lhs);
        jr["rhs"] = detail::big_to_json(r.rhs);
        jr["holds"] = r.holds;
        rels.push_back(std::move(jr));
    }
    j["splitting"] = std::move(rels);
    if (cell.splitting_skipped)
        j["splitting_skipped"] = true;
    j["passed"] = cell.passed();
    return j;
}

inline nlohmann::ordered_json to_json(const std::vector<CellReport>& cells) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    auto arr = nlohmann::ordered_json::array();
    bool all = true;
    for (const auto& c : cells) {
        arr.push_back(to_json(c));
        all = all && c.passed();
    }
    j["cells"] = std::move(arr);
    j["all_passed"] = all;
    return j;
}

}  // namespace slfsr
