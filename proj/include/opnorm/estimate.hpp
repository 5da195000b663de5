#pragma once
// Numerical estimation of ||A||_{p,q} at arbitrary exponents.

#include "opnorm/exponent.hpp"
#include "opnorm/matrix.hpp"
#include "opnorm/norm_estimate.hpp"
#include "opnorm/random.hpp"

#include <cstdint>
#include <vector>

namespace opnorm {

struct EstimatorConfig {
    int max_iterations = 5000;
    double tolerance = 1e-12;
    int restarts = 16;
    std::uint64_t seed = default_seed;
    int sample_count = 100000;

    /// Throws DomainError unless every field is positive and tolerance < 1.
    void validate() const;
};

/// One run of the nonlinear power iteration from a given start.
struct PowerIterationRun {
    ComplexVector witness;       // best iterate, unit p-norm
    double value = 0.0;          // ||A witness||_q
    std::vector<double> history; // ||A x_k||_q for k = 0, 1, ...
    bool monotone = true;        // history never dropped by more than 1e-12 relative
};

/// Alternating dual-map iteration x <- J_p'(A^T J_q(A x)), where J_r is the
/// dual map at r. Each step cannot decrease ||A x||_q. Needs 1 < p, q < inf.
PowerIterationRun power_iteration_run(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q,
                                      ComplexVector start, int max_iterations, double tolerance);

/// All restarts of power_iteration_norm, in restart order.
std::vector<PowerIterationRun> power_iteration_runs(const Matrix& a, const ExtendedExponent& p,
                                                    const ExtendedExponent& q, const EstimatorConfig& cfg);

/// Best of cfg.restarts power-iteration runs, reported as a LowerBound.
/// Throws DomainError for boundary exponents or A = 0.
NormEstimate power_iteration_norm(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q,
                                  const EstimatorConfig& cfg = {});

/// Random sphere search plus structured candidates, each polished by
/// coordinate-wise golden-section ascent. LowerBound; any p, q.
NormEstimate brute_force_norm(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q,
                              const EstimatorConfig& cfg = {});

/// Exact where (p, q) lies on an exactly computable line; otherwise a Bracket
/// whose lower end comes from the estimators and whose upper end is
/// embedding_upper_bound.
NormEstimate bracket_norm(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q,
                          const EstimatorConfig& cfg = {});

/// Exact evaluation if (p, q) lies on a line valid for this matrix
/// (p = 1, q = inf, (2, 2), and p = inf or q = 1 for nonnegative A).
std::optional<NormEstimate> exact_line_norm(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q);

/// Smallest interpolation bound through exactly computable endpoints;
/// +inf when no segment through (1/p, 1/q) has both ends exact.
double interpolation_upper_bound(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q);

/// Upper end used by bracket_norm: the interpolation bound, also combined
/// with the inclusions ||x||_r <= n^{1/r - 1/s} ||x||_s (r <= s) so that
/// points with q < p, unreachable by exact segments, stay finite.
double embedding_upper_bound(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q);

/// Deterministic merge: largest value, then lexicographically smallest witness.
bool better_estimate(double value_a, const ComplexVector& witness_a, double value_b,
                     const ComplexVector& witness_b);

} // namespace opnorm
