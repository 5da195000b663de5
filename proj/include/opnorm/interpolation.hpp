#pragma once
// Geometry of the (1/p, 1/q) unit square: interpolation upper bounds along
// segments, equality propagation, and the m(p, theta) / n(p, theta) family.

#include "opnorm/exponent.hpp"
#include "opnorm/matrix.hpp"
#include "opnorm/norm_estimate.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace opnorm {

/// (u, v) = (1/p, 1/q) in [0, 1]^2.
struct SquarePoint {
    double u = 0.0;
    double v = 0.0;

    /// Throws DomainError outside the unit square.
    static SquarePoint checked(double u, double v);
    static SquarePoint from(const ExponentPair& e) { return {e.p.reciprocal(), e.q.reciprocal()}; }
    ExponentPair exponents() const;
};

struct Segment {
    SquarePoint a;
    SquarePoint b;
};

/// (1 - theta) a + theta b; throws DomainError for theta outside [0, 1].
SquarePoint point_at(const Segment& s, double theta);

/// norm_a^(1 - theta) * norm_b^theta.
double rt_upper_bound(double norm_a, double norm_b, double theta);

/// (m, n) with (1/m, 1/n) = (1 - theta + theta/p, theta/p); theta in (0, 1).
ExponentPair mn_exponents(const ExtendedExponent& p, double theta);

/// The segment (0, 1/r) -> (1 - 1/r, 1) along which a magic-squared matrix
/// has constant norm alpha n^(1/r), and the parameter placing (1/p, 1/q) on
/// it. Requires q <= p; r is given by 1/r = 1/q - 1/p.
struct TheoremSegment {
    ExtendedExponent r;
    Segment segment;
    double theta = 0.0;
};
TheoremSegment theorem_segment(const ExtendedExponent& p, const ExtendedExponent& q);

/// ||A||_{p,q} for magic-squared A and q <= p, derived without the closed
/// form: the two segment endpoints are evaluated exactly, the midpoint is
/// certified by norm_magic_interior, and equality then holds along the whole
/// segment. Returns Exact with method "equality-propagation".
NormEstimate norm_by_equality_propagation(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q);

/// Relative slack under which a value is taken to meet its interpolation bound.
inline constexpr double equality_threshold = 1e-9;

enum class SlackFlag { Equality, Strict, Uncertified, Violation };
std::string_view to_string(SlackFlag f) noexcept;

struct ConvexityRow {
    double theta = 0.0;
    SquarePoint point;
    NormEstimate estimate;
    double rt_bound = 0.0;
    double slack = 0.0; // rt_bound - certified value
    SlackFlag flag = SlackFlag::Uncertified;
};

struct ConvexityReport {
    std::vector<ConvexityRow> rows;
    bool violation = false;
    bool equality_at_interior = false; // some interior theta meets the bound
    bool equality_everywhere = false;  // every sampled theta meets the bound
    bool strict_at_interior = false;   // some interior theta is certified strictly below
    /// Equality somewhere in the interior forces equality at every sample.
    bool dichotomy_consistent() const { return !(equality_at_interior && strict_at_interior); }
};

/// Evaluates `eval` at each theta along `seg` and compares with the bound
/// from the endpoint values (evaluated at theta = 0 and 1).
ConvexityReport check_log_convexity(const Matrix& a, const Segment& seg, const std::vector<double>& thetas,
                                    const NormEvaluator& eval);

struct StrictnessRow {
    double theta = 0.0;
    double q = 0.0; // 1/theta
    double value = 0.0;
    double rt_bound = 0.0;
    double gap = 0.0;
    bool strict = false;
};

struct StrictnessReport {
    std::vector<StrictnessRow> rows;
    double norm_1_inf = 0.0;
    double norm_1_1 = 0.0;
    bool strict_somewhere = false;
    bool strict_everywhere = false;
    /// ||A||_{p,p} = ||A||_{1,1} = ||A||_{inf,inf} checked at p in {1, 2, inf} only.
    bool hypothesis_at_sampled_p = false;
    bool propagation_holds() const { return !strict_somewhere || strict_everywhere; }
};

/// Exact comparison of ||A||_{1,1/theta} with ||A||_{1,inf}^(1-theta) ||A||_{1,1}^theta.
StrictnessReport check_strictness_line(const Matrix& a, const std::vector<double>& thetas);

/// {k/16 : k = 1..15}.
std::vector<double> default_thetas();

/// CSV with header theta,u,v,value,status,rt_bound,slack,flag.
void write_csv(std::ostream& out, const ConvexityReport& report);
/// CSV with header theta,u,v,value,status,rt_bound,slack,flag (u = 1 on this line).
void write_csv(std::ostream& out, const StrictnessReport& report);

} // namespace opnorm
