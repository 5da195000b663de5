#include "opnorm/interpolation.hpp"

#include "opnorm/error.hpp"
#include "opnorm/exact.hpp"
#include "opnorm/structure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

namespace opnorm {

SquarePoint SquarePoint::checked(double u, double v)
{
    if (!(u >= 0.0 && u <= 1.0 && v >= 0.0 && v <= 1.0))
        throw DomainError("point lies outside the unit square");
    return {u, v};
}

ExponentPair SquarePoint::exponents() const
{
    return {ExtendedExponent::from_reciprocal(u), ExtendedExponent::from_reciprocal(v)};
}

SquarePoint point_at(const Segment& s, double theta)
{
    if (!(theta >= 0.0 && theta <= 1.0))
        throw DomainError("theta must lie in [0, 1]");
    if (theta == 0.0)
        return s.a;
    if (theta == 1.0)
        return s.b;
    const double u = (1.0 - theta) * s.a.u + theta * s.b.u;
    const double v = (1.0 - theta) * s.a.v + theta * s.b.v;
    return {std::clamp(u, 0.0, 1.0), std::clamp(v, 0.0, 1.0)};
}

double rt_upper_bound(double norm_a, double norm_b, double theta)
{
    if (theta == 0.0)
        return norm_a;
    if (theta == 1.0)
        return norm_b;
    return std::pow(norm_a, 1.0 - theta) * std::pow(norm_b, theta);
}

ExponentPair mn_exponents(const ExtendedExponent& p, double theta)
{
    if (!(theta > 0.0 && theta < 1.0))
        throw DomainError("theta must lie strictly between 0 and 1");
    const double inv_p = p.reciprocal();
    return {ExtendedExponent::from_reciprocal(std::min(1.0, 1.0 - theta + theta * inv_p)),
            ExtendedExponent::from_reciprocal(theta * inv_p)};
}

TheoremSegment theorem_segment(const ExtendedExponent& p, const ExtendedExponent& q)
{
    if (!(q <= p))
        throw DomainError("theorem segment needs q <= p");
    const double u = p.reciprocal();
    const double d = std::clamp(q.reciprocal() - u, 0.0, 1.0);
    const auto r = ExtendedExponent::from_reciprocal(d);
    const double span = 1.0 - d;
    const double theta = span > 0.0 ? std::clamp(u / span, 0.0, 1.0) : 0.0;
    return {r, Segment{{0.0, d}, {1.0 - d, 1.0}}, theta};
}

NormEstimate norm_by_equality_propagation(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q)
{
    const auto ts = theorem_segment(p, q);
    const double at_start = norm_inf_to_p_nonneg(a, ts.r).value;
    const double at_end =
        norm_dual(a, ts.r.conjugate(), ExtendedExponent(1.0), evaluate_nonneg_row_sums).value;
    const double midpoint = norm_magic_interior(a, ts.r).estimate.value;
    const double mid_bound = rt_upper_bound(at_start, at_end, 0.5);
    if (std::abs(mid_bound - midpoint) > equality_threshold * std::max(mid_bound, 1.0))
        throw DomainError("interpolation bound is not attained at the segment midpoint");
    return NormEstimate::exact(rt_upper_bound(at_start, at_end, ts.theta), "equality-propagation");
}

std::string_view to_string(SlackFlag f) noexcept
{
    switch (f) {
    case SlackFlag::Equality:
        return "equality";
    case SlackFlag::Strict:
        return "strict";
    case SlackFlag::Uncertified:
        return "uncertified";
    case SlackFlag::Violation:
        return "violation";
    }
    return "?";
}

ConvexityReport check_log_convexity(const Matrix& a, const Segment& seg, const std::vector<double>& thetas,
                                    const NormEvaluator& eval)
{
    const auto at = [&](const SquarePoint& pt) {
        const auto e = pt.exponents();
        return eval(a, e.p, e.q);
    };
    const double upper_a = at(seg.a).upper();
    const double upper_b = at(seg.b).upper();

    ConvexityReport report;
    bool all_equal = !thetas.empty();
    for (double theta : thetas) {
        ConvexityRow row;
        row.theta = theta;
        row.point = point_at(seg, theta);
        row.estimate = at(row.point);
        row.rt_bound = rt_upper_bound(upper_a, upper_b, theta);
        row.slack = row.rt_bound - row.estimate.value;

        const double thr = equality_threshold * std::max(row.rt_bound, 1e-300);
        if (-row.slack > thr)
            row.flag = SlackFlag::Violation;
        else if (row.slack <= thr)
            row.flag = SlackFlag::Equality;
        else if (row.estimate.upper() < row.rt_bound - thr)
            row.flag = SlackFlag::Strict;
        else
            row.flag = SlackFlag::Uncertified;

        const bool interior = theta > 0.0 && theta < 1.0;
        report.violation |= row.flag == SlackFlag::Violation;
        report.equality_at_interior |= interior && row.flag == SlackFlag::Equality;
        report.strict_at_interior |= interior && row.flag == SlackFlag::Strict;
        all_equal &= row.flag == SlackFlag::Equality;
        report.rows.push_back(std::move(row));
    }
    report.equality_everywhere = all_equal;
    return report;
}

StrictnessReport check_strictness_line(const Matrix& a, const std::vector<double>& thetas)
{
    StrictnessReport report;
    report.norm_1_inf = norm_1_to_q(a, ExtendedExponent::infinity()).value;
    report.norm_1_1 = norm_1_to_q(a, ExtendedExponent(1.0)).value;

    const double inf_inf = norm_p_to_inf(a, ExtendedExponent::infinity()).value;
    const double two_two = norm_2_to_2(a).value;
    const auto same = [](double x, double y) { return std::abs(x - y) <= 1e-9 * std::max({x, y, 1e-300}); };
    report.hypothesis_at_sampled_p = same(report.norm_1_1, inf_inf) && same(report.norm_1_1, two_two);

    report.strict_everywhere = !thetas.empty();
    for (double theta : thetas) {
        if (!(theta > 0.0 && theta < 1.0))
            throw DomainError("strictness thetas must lie strictly between 0 and 1");
        StrictnessRow row;
        row.theta = theta;
        const auto q = ExtendedExponent::from_reciprocal(theta);
        row.q = q.value();
        row.value = norm_1_to_q(a, q).value;
        row.rt_bound = rt_upper_bound(report.norm_1_inf, report.norm_1_1, theta);
        row.gap = row.rt_bound - row.value;
        row.strict = row.gap > equality_threshold * std::max(row.rt_bound, 1e-300);
        report.strict_somewhere |= row.strict;
        report.strict_everywhere &= row.strict;
        report.rows.push_back(row);
    }
    return report;
}

std::vector<double> default_thetas()
{
    std::vector<double> t;
    for (int k = 1; k <= 15; ++k)
        t.push_back(k / 16.0);
    return t;
}

namespace {

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

constexpr const char* csv_header = "theta,u,v,value,status,rt_bound,slack,flag\n";

} // namespace

void write_csv(std::ostream& out, const ConvexityReport& report)
{
    out << csv_header;
    for (const auto& r : report.rows) {
        out << num(r.theta) << ',' << num(r.point.u) << ',' << num(r.point.v) << ',' << num(r.estimate.value)
            << ',' << to_string(r.estimate.status) << ',' << num(r.rt_bound) << ',' << num(r.slack) << ','
            << to_string(r.flag) << '\n';
    }
}

void write_csv(std::ostream& out, const StrictnessReport& report)
{
    out << csv_header;
    for (const auto& r : report.rows) {
        out << num(r.theta) << ',' << 1 << ',' << num(r.theta) << ',' << num(r.value) << ",exact,"
            << num(r.rt_bound) << ',' << num(r.gap) << ',' << (r.strict ? "strict" : "equality") << '\n';
    }
}

} // namespace opnorm
