// sigma_lfsr: command-line front end for the slfsr library.
//
// Exit codes: 0 success, 1 usage or malformed input, 2 infeasible
// parameters, 3 a conjecture or relation check failed.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slfsr/slfsr.hpp"

namespace {

using namespace slfsr;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitConjecture = 3;

struct Options {
    std::uint64_t seed = 0;
    unsigned q = 2;
    std::string f;
    unsigned deg = 0;
    unsigned m = 0, n = 0;
    std::string taps, init, field, blocks, grid;
    std::size_t count = 16;
    bool hex = false, raw = false;
    bool members = false;
    unsigned jobs = 1;
    std::string format = "json";
    std::uint64_t words = std::uint64_t{1} << 26;
    unsigned runs = 5;
};

std::vector<std::uint32_t> parse_values(const std::string& text) {
    std::vector<std::uint32_t> out;
    for (const auto& tok : detail::split(detail::strip_spaces(text), ','))
        out.push_back(static_cast<std::uint32_t>(detail::parse_uint(tok, text)));
    return out;
}

std::vector<ExtElem> parse_state(const ExtField& F, const std::string& text) {
    std::vector<ExtElem> out;
    for (const auto& tok : detail::split(detail::strip_spaces(text), '|'))
        out.push_back(F.parse_coords(tok));
    return out;
}

SigmaLfsrSpec parse_sigma(const Options& o) {
    auto F = parse_field_descriptor(o.field);
    auto B = parse_block_companion(o.blocks, F.base());
    if (B.m() != F.degree())
        throw parse_error("blocks '" + o.blocks + "' are " + std::to_string(B.m()) + "x" + std::to_string(B.m()) +
                          " but the field has m=" + std::to_string(F.degree()));
    return SigmaLfsrSpec{F, B.blocks()};
}

int primpoly_list(const Options& o) {
    for (const auto& f : enumerate_primitive(o.deg, PrimeField(o.q)))
        std::cout << format_poly(f) << '\n';
    return kExitOk;
}

int primpoly_test(const Options& o) {
    const auto f = parse_poly(o.f, PrimeField(o.q));
    std::cout << (is_primitive(f) ? "true" : "false") << '\n';
    return kExitOk;
}

int primpoly_order(const Options& o) {
    const auto f = parse_poly(o.f, PrimeField(o.q));
    std::cout << poly_order(f, o.seed) << '\n';
    return kExitOk;
}

int lfsr_run_cmd(const Options& o) {
    const LfsrSpec spec{PrimeField(o.q), parse_values(o.taps)};
    const auto init = parse_values(o.init);
    const auto seq = lfsr_run(spec, init, o.count);
    for (std::size_t i = 0; i < seq.size(); ++i)
        std::cout << (i ? " " : "") << seq[i];
    std::cout << '\n';
    return kExitOk;
}

int sigma_run_cmd(const Options& o) {
    const auto spec = parse_sigma(o);
    const auto init = parse_state(spec.parent, o.init);
    if (o.hex || o.raw) {
        const auto words = keystream_words(spec, init, o.count);
        if (o.raw) {
            std::fwrite(words.data(), sizeof(std::uint64_t), words.size(), stdout);
            return kExitOk;
        }
        const int width = static_cast<int>((spec.parent.degree() + 3) / 4);
        for (auto w : words)
            std::printf("%0*llx\n", width, static_cast<unsigned long long>(w));
        return kExitOk;
    }
    for (const auto& e : sigma_run(spec, init, o.count))
        std::cout << spec.parent.format_coords(e) << '\n';
    return kExitOk;
}

int sigma_test_cmd(const Options& o) {
    const auto spec = parse_sigma(o);
    const auto B = spec.block_companion();
    std::cout << "field: " << spec.parent.descriptor() << '\n';
    std::cout << "blocks: " << format_block_companion(B) << '\n';
    std::cout << "delta: " << format_poly(delta_poly(B)) << '\n';
    std::cout << "primitive: " << (is_primitive_sigma(spec) ? "true" : "false") << '\n';
    return kExitOk;
}

int bench_cmd(const Options& o) {
    const auto F = ExtField::with_default_modulus(PrimeField(2), o.m);
    const auto spec = random_sigma_spec(F, o.n, o.seed);
    const auto init = random_sigma_state(F, o.n, o.seed + 1);
    const auto r = bench_keystream(spec, init, o.words, o.runs);
    json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["words"] = r.words;
    j["runs"] = r.runs;
    j["median_seconds"] = r.median_seconds;
    j["words_per_second"] = r.words_per_second;
    j["checksum"] = r.checksum;
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

int census_run_cmd(const Options& o) {
    const auto rep = fiber_histogram(o.m, o.n, PrimeField(o.q), CensusOptions{o.jobs, o.members});
    if (o.format == "csv")
        std::cout << csv_header() << '\n' << to_csv_row(rep) << '\n';
    else
        std::cout << to_json(rep, o.members).dump(2) << '\n';
    return rep.conjecture1_holds && rep.conjecture2_holds ? kExitOk : kExitConjecture;
}

int census_verify_cmd(const Options& o) {
    const auto cells = verify_all(parse_grid(o.grid), CensusOptions{o.jobs, false}, o.seed);
    bool all = true;
    for (const auto& c : cells)
        all = all && c.passed();
    if (o.format == "csv") {
        std::cout << csv_header() << '\n';
        for (const auto& c : cells)
            if (!c.skipped)
                std::cout << to_csv_row(c.census) << '\n';
    } else {
        std::cout << to_json(cells).dump(2) << '\n';
    }
    return all ? kExitOk : kExitConjecture;
}

int construct_cmd(const Options& o) {
    const auto f = parse_poly(o.f, PrimeField(o.q));
    const auto B = construct_primitive_sigma(f, o.m, o.n, o.seed);
    json j;
    j["f"] = format_poly(f);
    j["field"] = ExtField::with_default_modulus(PrimeField(o.q), o.m).descriptor();
    j["m"] = o.m;
    j["n"] = o.n;
    j["blocks"] = format_block_companion(B);
    j["delta"] = format_poly(delta_poly(B));
    std::cout << j.dump(2) << '\n';
    return kExitOk;
}

int splitting_cmd(const Options& o) {
    const auto f = parse_poly(o.f, PrimeField(o.q));
    const auto rel = verify_splitting_fiber_relation(f, o.m, o.n);
    const auto rep = splitting_count(f, o.m, o.n);
    json j;
    j["f"] = format_poly(f);
    j["m"] = o.m;
    j["n"] = o.n;
    j["splitting_subspaces"] = rel.splitting;
    j["total_subspaces"] = rep.total_subspaces;
    j["fiber"] = rel.fiber;
    j["lhs"] = detail::big_to_json(rel.lhs);
    j["rhs"] = detail::big_to_json(rel.rhs);
    j["holds"] = rel.holds;
    std::cout << j.dump(2) << '\n';
    return rel.holds ? kExitOk : kExitConjecture;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Word-oriented LFSRs over finite fields, block companion Singer cycles and their census"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--seed", o.seed, "Seed for the randomised polynomial factoring step")->capture_default_str();

    int (*action)(const Options&) = nullptr;
    auto bind = [&](CLI::App* sub, int (*fn)(const Options&)) {
        sub->callback([&action, fn] { action = fn; });
    };
    auto add_q = [&](CLI::App* sub) { sub->add_option("--q", o.q, "Prime field size")->capture_default_str(); };
    auto add_f = [&](CLI::App* sub) {
        sub->add_option("--f", o.f, "Polynomial, e.g. x^4+x+1 or 1,1,0,0,1")->required();
    };
    auto add_mn = [&](CLI::App* sub) {
        sub->add_option("--m", o.m, "Block size m")->required()->check(CLI::PositiveNumber);
        sub->add_option("--n", o.n, "Number of blocks n")->required()->check(CLI::PositiveNumber);
    };

    auto* prim = app.add_subcommand("primpoly", "Primitive polynomials over F_q and their orders");
    prim->require_subcommand(1);
    auto* pl = prim->add_subcommand("list", "List the set P(n, q) of monic primitive polynomials of degree n");
    add_q(pl);
    pl->add_option("--deg", o.deg, "Degree n")->required()->check(CLI::PositiveNumber);
    bind(pl, primpoly_list);
    auto* pt = prim->add_subcommand("test", "Test whether f is primitive (order q^n - 1)");
    add_q(pt);
    add_f(pt);
    bind(pt, primpoly_test);
    auto* po = prim->add_subcommand("order", "Order of f: least e with f | x^e - 1");
    add_q(po);
    add_f(po);
    bind(po, primpoly_order);

    auto* lfsr = app.add_subcommand("lfsr", "Classical LFSRs over F_q");
    lfsr->require_subcommand(1);
    auto* lr = lfsr->add_subcommand("run", "Run s_{i+n} = c_0 s_i + ... + c_{n-1} s_{i+n-1}");
    add_q(lr);
    lr->add_option("--taps", o.taps, "Taps c_0,...,c_{n-1}")->required();
    lr->add_option("--init", o.init, "Initial values s_0,...,s_{n-1}")->required();
    lr->add_option("--count", o.count, "Number of terms")->capture_default_str();
    bind(lr, lfsr_run_cmd);

    auto* sigma = app.add_subcommand("sigma", "sigma-LFSRs over F_{q^m} with matrix taps");
    sigma->require_subcommand(1);
    auto* sr = sigma->add_subcommand("run", "Run s_{i+n} = s_i C_0 + ... + s_{i+n-1} C_{n-1}");
    sr->add_option("--field", o.field, "Field descriptor q=2,m=2[,g=x^2+x+1]")->required();
    sr->add_option("--blocks", o.blocks, "Tap matrices C_0|C_1|..., rows separated by ';'")->required();
    sr->add_option("--init", o.init, "Initial elements as coordinates, e.g. 1,0|0,0")->required();
    sr->add_option("--count", o.count, "Number of terms")->capture_default_str();
    auto* hex = sr->add_flag("--hex", o.hex, "Emit keystream words in hex (q = 2)");
    sr->add_flag("--raw", o.raw, "Emit keystream words as raw little-endian uint64 (q = 2)")->excludes(hex);
    bind(sr, sigma_run_cmd);
    auto* st = sigma->add_subcommand("test", "Compute Delta(X) = det(I X^n - sum C_l X^l) and test primitivity");
    st->add_option("--field", o.field, "Field descriptor q=2,m=2[,g=x^2+x+1]")->required();
    st->add_option("--blocks", o.blocks, "Tap matrices C_0|C_1|...")->required();
    bind(st, sigma_test_cmd);

    auto* bench = app.add_subcommand("bench", "Throughput measurements");
    bench->require_subcommand(1);
    auto* bk = bench->add_subcommand("keystream", "Word-packed binary sigma-LFSR keystream throughput");
    bk->add_option("--m", o.m, "Word size m (<= 63)")->default_val(32)->check(CLI::Range(1, 63));
    bk->add_option("--n", o.n, "Number of taps n")->default_val(4)->check(CLI::PositiveNumber);
    bk->add_option("--words", o.words, "Words per run")->capture_default_str();
    bk->add_option("--runs", o.runs, "Runs; the median is reported")->capture_default_str();
    bind(bk, bench_cmd);

    auto* census = app.add_subcommand("census", "Block companion Singer cycles BCMS(m, n; q) and the map to P(mn, q)");
    census->require_subcommand(1);
    auto* cr = census->add_subcommand("run", "Fiber histogram of the characteristic map on BCMS(m, n; q)");
    add_q(cr);
    add_mn(cr);
    cr->add_flag("--members", o.members, "List the tuples (C_0,...,C_{n-1}) in every fiber");
    cr->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    cr->add_option("--format", o.format, "json or csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
    bind(cr, census_run_cmd);
    auto* cv = census->add_subcommand("verify", "Check the count and fiber conjectures over a parameter grid");
    cv->add_option("--grid", o.grid, "Grid, e.g. q=2,m<=2,n<=3")->required();
    cv->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    cv->add_option("--format", o.format, "json or csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
    bind(cv, census_verify_cmd);

    auto* con = app.add_subcommand("construct", "Build a block companion Singer cycle with characteristic polynomial f");
    add_q(con);
    add_f(con);
    add_mn(con);
    bind(con, construct_cmd);

    auto* spl = app.add_subcommand("splitting",
                                   "Count m-dimensional alpha-splitting subspaces of F_{q^{mn}} and compare with the fiber of f");
    add_q(spl);
    add_f(spl);
    add_mn(spl);
    bind(spl, splitting_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return action(o);
    } catch (const infeasible_error& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::out_of_range& e) {
        std::cerr << "infeasible: " << e.what() << '\n';
        return kExitInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
