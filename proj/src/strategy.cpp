#include "opnorm/strategy.hpp"

#include "opnorm/error.hpp"
#include "opnorm/exact.hpp"
#include "opnorm/interpolation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

namespace opnorm {

std::string format_number(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

NormEstimate evaluate_norm(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q,
                           const EstimatorConfig& cfg, double tol)
{
    if (auto closed = closed_form_norm(classify(a, tol), a.size(), p, q))
        return *closed;
    return bracket_norm(a, p, q, cfg);
}

std::vector<ScanCell> scan_grid(const Matrix& a, int resolution, const EstimatorConfig& cfg, double tol,
                                unsigned threads)
{
    if (resolution < 2)
        throw DomainError("scan resolution must be at least 2");
    const auto side = static_cast<std::size_t>(resolution) + 1;
    std::vector<ScanCell> cells(side * side);
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < side; ++j) {
            cells[i * side + j].u = static_cast<double>(i) / resolution;
            cells[i * side + j].v = static_cast<double>(j) / resolution;
        }

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(cells.size()));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (std::size_t k = next++; k < cells.size(); k = next++) {
            try {
                auto& c = cells[k];
                c.estimate = evaluate_norm(a, ExtendedExponent::from_reciprocal(c.u),
                                           ExtendedExponent::from_reciprocal(c.v), cfg, tol);
            } catch (...) {
                if (!failed.exchange(true))
                    failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t)
            pool.emplace_back(worker);
        worker();
    }
    if (failure)
        std::rethrow_exception(failure);
    return cells;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanCell>& cells)
{
    out << "u,v,value,status,method\n";
    for (const auto& c : cells)
        out << format_number(c.u) << ',' << format_number(c.v) << ',' << format_number(c.estimate.value) << ','
            << to_string(c.estimate.status) << ',' << c.estimate.method << '\n';
}

namespace {

ExtendedExponent ratio(long long a, long long b) { return ExtendedExponent::from_ratio(a, b); }

bool rel_close(double x, double y, double rel)
{
    return std::abs(x - y) <= rel * std::max({std::abs(x), std::abs(y), 1e-300});
}

void interpolation_suite(const Matrix& a, const EstimatorConfig& cfg, double tol, std::vector<CheckResult>& out)
{
    const NormEvaluator numeric = [&cfg](const Matrix& m, const ExtendedExponent& p, const ExtendedExponent& q) {
        return bracket_norm(m, p, q, cfg);
    };
    const std::vector<double> thetas{0.0, 0.125, 0.25, 0.375, 0.5, 0.625, 0.75, 0.875, 1.0};

    struct Named {
        const char* name;
        Segment seg;
    };
    const Named segments[] = {
        {"p=1 edge", {{1.0, 0.0}, {1.0, 1.0}}},
        {"m(2,theta) family", {{1.0, 0.0}, {0.5, 0.5}}},
        {"diagonal", {{0.0, 0.0}, {1.0, 1.0}}},
    };
    for (const auto& [name, seg] : segments) {
        const auto report = check_log_convexity(a, seg, thetas, numeric);
        std::size_t equal = 0, strict = 0;
        for (const auto& r : report.rows) {
            equal += r.flag == SlackFlag::Equality;
            strict += r.flag == SlackFlag::Strict;
        }
        out.push_back({std::string("rt-bound ") + name, !report.violation && report.dichotomy_consistent(),
                       "equality=" + std::to_string(equal) + " strict=" + std::to_string(strict) +
                           (report.violation ? " VIOLATION" : "")});
    }

    if (!match_magic_squared(a, tol) || !a.is_entrywise_nonnegative())
        return;
    const std::vector<double> quarter{0.0, 0.25, 0.5, 0.75, 1.0};
    for (const auto& r : {ratio(3, 2), ratio(2, 1), ratio(4, 1)}) {
        const Segment seg{{0.0, r.reciprocal()}, {r.conjugate_reciprocal(), 1.0}};
        const auto report = check_log_convexity(a, seg, quarter, numeric);
        double worst = 0.0;
        for (const auto& row : report.rows)
            worst = std::max(worst, std::abs(row.slack) / row.rt_bound);
        out.push_back({"theorem segment r=" + r.to_string(), report.equality_everywhere && !report.violation,
                       "max relative slack=" + format_number(worst)});
    }
}

void strictness_suite(const Matrix& a, std::vector<CheckResult>& out)
{
    const auto report = check_strictness_line(a, default_thetas());
    std::size_t strict = 0;
    double half_gap = 0.0;
    for (const auto& r : report.rows) {
        strict += r.strict;
        if (r.theta == 0.5)
            half_gap = r.gap;
    }
    out.push_back({"strictness propagation on p=1", report.propagation_holds(),
                   "gap(theta=1/2)=" + format_number(half_gap) + " strict at " + std::to_string(strict) + "/" +
                       std::to_string(report.rows.size()) +
                       (report.hypothesis_at_sampled_p ? " hypothesis holds at p in {1,2,inf}"
                                                       : " hypothesis fails at p in {1,2,inf}")});
}

void cross_check_suite(const Matrix& a, const EstimatorConfig& cfg, double tol, std::vector<CheckResult>& out)
{
    const bool zero =
        std::all_of(a.entries().begin(), a.entries().end(), [](cplx z) { return z == cplx(0.0, 0.0); });
    if (!zero) {
        const std::pair<ExtendedExponent, ExtendedExponent> interior[] = {
            {ratio(3, 2), ratio(3, 1)}, {ratio(3, 1), ratio(3, 2)}, {ratio(4, 1), ratio(4, 3)},
            {ratio(2, 1), ratio(4, 1)}, {ratio(4, 1), ratio(2, 1)}};
        bool ok = true;
        std::string detail;
        for (const auto& [p, q] : interior) {
            const double lo = power_iteration_norm(a, p, q, cfg).value;
            const double hi = embedding_upper_bound(a, p, q);
            ok &= lo <= hi * (1.0 + 1e-9);
            if (!detail.empty())
                detail += ' ';
            detail += "(" + p.to_string() + "," + q.to_string() + "):" + format_number(lo) + "<=" + format_number(hi);
        }
        out.push_back({"power iteration within brackets", ok, detail});

        bool dual_ok = true;
        std::string dual_detail;
        for (const auto& [p, q] : {std::pair{ratio(3, 2), ratio(3, 1)}, std::pair{ratio(3, 1), ratio(3, 2)}}) {
            const double direct = power_iteration_norm(a, p, q, cfg).value;
            const double adjoint = power_iteration_norm(a.adjoint(), q.conjugate(), p.conjugate(), cfg).value;
            dual_ok &= rel_close(direct, adjoint, 1e-6);
            if (!dual_detail.empty())
                dual_detail += ' ';
            dual_detail += format_number(direct) + "~" + format_number(adjoint);
        }
        out.push_back({"duality ||A||_{p,q} = ||A*||_{q',p'}", dual_ok, dual_detail});
    }

    bool lines_ok = true;
    double worst = 0.0;
    const auto compare = [&](const NormEstimate& exact, const ExtendedExponent& p, const ExtendedExponent& q) {
        const double bf = brute_force_norm(a, p, q, cfg).value;
        const double err = std::abs(bf - exact.value) / std::max(exact.value, 1e-300);
        worst = std::max(worst, exact.value > 0.0 ? err : std::abs(bf));
        lines_ok &= bf <= exact.value * (1.0 + 1e-9) + 1e-12 && (exact.value == 0.0 || err <= 1e-3);
    };
    const auto one = ExtendedExponent(1.0);
    const auto inf = ExtendedExponent::infinity();
    for (const auto& q : {ratio(2, 1), ratio(3, 1)})
        compare(norm_1_to_q(a, q), one, q);
    for (const auto& p : {ratio(3, 2), ratio(3, 1)})
        compare(norm_p_to_inf(a, p), p, inf);
    out.push_back({"exact lines vs brute force", lines_ok, "max relative error=" + format_number(worst)});

    if (match_magic_squared(a, tol) && a.is_entrywise_nonnegative()) {
        const auto alpha = match_magic_squared(a, tol)->alpha;
        const auto n = static_cast<double>(a.size());
        bool ok = true;
        double spread = 0.0;
        for (const auto& p : {one, ratio(3, 2), ratio(2, 1), ratio(4, 1), inf}) {
            const double expected = alpha * std::pow(n, p.reciprocal());
            const double values[] = {
                norm_inf_to_p_nonneg(a, p).value,
                norm_dual(a, p.conjugate(), one, evaluate_nonneg_row_sums).value,
                norm_magic_interior(a, p).estimate.value,
            };
            for (double v : values) {
                spread = std::max(spread, std::abs(v - expected) / expected);
                ok &= rel_close(v, expected, 1e-10);
            }
        }
        out.push_back({"magic-squared evaluator agreement", ok, "max relative spread=" + format_number(spread)});
    }
}

} // namespace

std::vector<CheckResult> run_verify_suite(const Matrix& a, std::string_view suite, const EstimatorConfig& cfg,
                                          double tol)
{
    const bool all = suite == "all";
    if (!all && suite != "interpolation" && suite != "strictness" && suite != "cross-check")
        throw DomainError("unknown suite '" + std::string(suite) + "'");
    std::vector<CheckResult> out;
    if (all || suite == "interpolation")
        interpolation_suite(a, cfg, tol, out);
    if (all || suite == "strictness")
        strictness_suite(a, out);
    if (all || suite == "cross-check")
        cross_check_suite(a, cfg, tol, out);
    return out;
}

} // namespace opnorm
