// opnorm: operator (p,q)-norms of small complex matrices.

#include "opnorm/error.hpp"
#include "opnorm/exponent.hpp"
#include "opnorm/matrix_io.hpp"
#include "opnorm/strategy.hpp"
#include "opnorm/structure.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace opnorm;

namespace {

enum Exit : int { ok = 0, failure = 1, parse_error = 2, bad_exponent = 3, write_error = 4, verify_failed = 5 };

struct Options {
    std::string matrix;
    std::string p = "2";
    std::string q = "2";
    double tol = default_classify_tolerance;
    std::uint64_t seed = default_seed;
    int resolution = 8;
    std::string out;
    std::string suite = "all";
    bool witness = false;
};

std::uint64_t seed_from_env(std::uint64_t fallback)
{
    const char* s = std::getenv("OPNORM_SEED");
    if (!s || !*s)
        return fallback;
    char* end = nullptr;
    const auto v = std::strtoull(s, &end, 0);
    if (*end != '\0') {
        std::cerr << "opnorm: ignoring malformed OPNORM_SEED '" << s << "'\n";
        return fallback;
    }
    return v;
}

Matrix load(const std::string& path)
{
    return read_matrix_file(path);
}

void print_estimate(std::ostream& out, const NormEstimate& e)
{
    out << format_number(e.value) << ' ' << to_string(e.status) << ' ' << e.method;
    if (e.bracket)
        out << " lo=" << format_number(e.bracket->lo) << " hi=" << format_number(e.bracket->hi);
    out << '\n';
}

void print_witness(std::ostream& out, const ComplexVector& w)
{
    out << "witness";
    for (const auto& z : w)
        out << ' ' << format_complex(z);
    out << '\n';
}

int cmd_norm(const Options& o, bool witness_only)
{
    const auto p = ExtendedExponent::parse(o.p);
    const auto q = ExtendedExponent::parse(o.q);
    const Matrix a = load(o.matrix);
    EstimatorConfig cfg;
    cfg.seed = o.seed;
    const auto e = evaluate_norm(a, p, q, cfg, o.tol);
    if (witness_only) {
        if (!e.witness) {
            std::cerr << "opnorm: no witness available for " << e.method << '\n';
            return failure;
        }
        print_estimate(std::cout, e);
        print_witness(std::cout, *e.witness);
        return ok;
    }
    print_estimate(std::cout, e);
    if (o.witness && e.witness)
        print_witness(std::cout, *e.witness);
    return ok;
}

int cmd_scan(const Options& o)
{
    const Matrix a = load(o.matrix);
    EstimatorConfig cfg;
    cfg.seed = o.seed;
    const auto cells = scan_grid(a, o.resolution, cfg, o.tol);
    if (o.out.empty() || o.out == "-") {
        write_scan_csv(std::cout, cells);
        return ok;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        std::cerr << "opnorm: cannot write '" << o.out << "'\n";
        return write_error;
    }
    write_scan_csv(f, cells);
    f.flush();
    if (!f) {
        std::cerr << "opnorm: cannot write '" << o.out << "'\n";
        return write_error;
    }
    return ok;
}

int cmd_classify(const Options& o)
{
    const Matrix a = load(o.matrix);
    std::cout << describe(classify(a, o.tol)) << '\n';
    return ok;
}

int cmd_verify(const Options& o)
{
    const Matrix a = load(o.matrix);
    EstimatorConfig cfg;
    cfg.seed = o.seed;
    const auto results = run_verify_suite(a, o.suite, cfg, o.tol);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.detail.empty())
            std::cout << "  " << r.detail;
        std::cout << '\n';
        all &= r.pass;
    }
    return all ? ok : verify_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Operator (p,q)-norms of small complex matrices"};
    app.require_subcommand(1);
    Options o;
    o.seed = seed_from_env(default_seed);

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("matrix", o.matrix, "CSV or JSON matrix file")->required();
        sub->add_option("--tol", o.tol, "classification tolerance")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", o.seed, "random seed (default from OPNORM_SEED)");
    };
    const auto add_exponents = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "domain exponent: inf, decimal or a/b");
        sub->add_option("--q", o.q, "target exponent: inf, decimal or a/b");
    };

    auto* norm = app.add_subcommand("norm", "print ||A||_{p,q} with its certification");
    add_common(norm);
    add_exponents(norm);
    norm->add_flag("--witness", o.witness, "also print the maximizing vector");

    auto* witness = app.add_subcommand("witness", "print the maximizing vector");
    add_common(witness);
    add_exponents(witness);

    auto* scan = app.add_subcommand("scan", "tabulate the unit square u=1/p, v=1/q");
    add_common(scan);
    scan->add_option("--resolution", o.resolution, "grid steps per side")->check(CLI::Range(2, 1024));
    scan->add_option("--out", o.out, "output CSV path ('-' for stdout)");

    auto* cls = app.add_subcommand("classify", "print the structural class");
    add_common(cls);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    add_common(verify);
    verify->add_option("--suite", o.suite, "interpolation, strictness, cross-check or all")
        ->check(CLI::IsMember({"interpolation", "strictness", "cross-check", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*norm)
            return cmd_norm(o, false);
        if (*witness)
            return cmd_norm(o, true);
        if (*scan)
            return cmd_scan(o);
        if (*cls)
            return cmd_classify(o);
        return cmd_verify(o);
    } catch (const ParseError& e) {
        std::cerr << "opnorm: " << o.matrix;
        if (e.line() > 0)
            std::cerr << ':' << e.line() << ':' << e.column();
        std::cerr << ": " << e.what() << '\n';
        return parse_error;
    } catch (const ExponentError& e) {
        std::cerr << "opnorm: invalid exponent: " << e.what() << '\n';
        return bad_exponent;
    } catch (const std::exception& e) {
        std::cerr << "opnorm: " << e.what() << '\n';
        return failure;
    }
}
