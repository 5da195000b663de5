#pragma once
// Exact (p,q)-norm evaluators on the exponent lines where a formula exists
// for every matrix, plus the nonnegative and magic-squared special lines.

#include "opnorm/exponent.hpp"
#include "opnorm/matrix.hpp"
#include "opnorm/norm_estimate.hpp"

namespace opnorm {

/// ||A||_{p,inf} = max over rows of ||row||_p'. Witness attains the
/// maximizing row (lowest index on ties).
NormEstimate norm_p_to_inf(const Matrix& a, const ExtendedExponent& p);

/// ||A||_{1,q} = max over columns of ||column||_q. Witness is the basis
/// vector of the maximizing column.
NormEstimate norm_1_to_q(const Matrix& a, const ExtendedExponent& q);

/// ||A||_{inf,p} for an entrywise nonnegative A: the p-norm of the row sums,
/// attained at the all-ones vector. Throws DomainError otherwise.
NormEstimate norm_inf_to_p_nonneg(const Matrix& a, const ExtendedExponent& p);

/// ||A||_{p,q} computed as ||A*||_{q',p'} by `inner`. The witness is dropped
/// since it lives in the dual space.
NormEstimate norm_dual(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q,
                       const NormEvaluator& inner);

/// Largest singular value by power iteration on A*A.
NormEstimate norm_2_to_2(const Matrix& a);

/// Result of the interior evaluator for magic-squared matrices.
struct MagicInteriorNorm {
    ExponentPair at; // (2p/(p-1), 2p/(p+1))
    NormEstimate estimate;
};

/// ||A||_{2p/(p-1), 2p/(p+1)} = alpha n^(1/p) for magic-squared A.
///
/// The value is certified from both sides: the all-ones witness gives the
/// lower bound and the geometric mean of ||A||_{inf,p} and ||A||_{p',1}
/// (each evaluated exactly) gives the upper bound. Throws DomainError when A
/// is not magic squared or when the two sides disagree.
MagicInteriorNorm norm_magic_interior(const Matrix& a, const ExtendedExponent& p,
                                      double tol = 1e-9);

/// Evaluator adaptors with the NormEvaluator signature. Each throws
/// DomainError when (p, q) is off its line.
NormEstimate evaluate_row_dual(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q);
NormEstimate evaluate_column_norm(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q);
NormEstimate evaluate_nonneg_row_sums(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q);

} // namespace opnorm
