#include "opnorm/exact.hpp"

#include "opnorm/error.hpp"
#include "opnorm/random.hpp"
#include "opnorm/structure.hpp"

#include <cmath>

namespace opnorm {

NormEstimate norm_p_to_inf(const Matrix& a, const ExtendedExponent& p)
{
    const auto dual = p.conjugate();
    const std::size_t n = a.size();
    std::size_t best_row = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double v = vector_norm(a.row(i), dual);
        if (v > best) {
            best = v;
            best_row = i;
        }
    }
    return NormEstimate::exact(best, "row-dual", hoelder_maximizer(a.row(best_row), p));
}

NormEstimate norm_1_to_q(const Matrix& a, const ExtendedExponent& q)
{
    const std::size_t n = a.size();
    std::size_t best_col = 0;
    double best = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double v = vector_norm(a.column(j), q);
        if (v > best) {
            best = v;
            best_col = j;
        }
    }
    return NormEstimate::exact(best, "column-norm", basis_vector(n, best_col));
}

NormEstimate norm_inf_to_p_nonneg(const Matrix& a, const ExtendedExponent& p)
{
    if (!a.is_entrywise_nonnegative())
        throw DomainError("norm_inf_to_p_nonneg needs a real, entrywise nonnegative matrix");
    const std::size_t n = a.size();
    std::vector<double> row_sums(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (cplx z : a.row(i))
            row_sums[i] += z.real();
    return NormEstimate::exact(norm_of_moduli(row_sums, p), "row-sums", all_ones_vector(n));
}

NormEstimate norm_dual(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q,
                       const NormEvaluator& inner)
{
    NormEstimate e = inner(a.adjoint(), q.conjugate(), p.conjugate());
    e.witness.reset();
    e.method = "dual:" + e.method;
    return e;
}

NormEstimate norm_2_to_2(const Matrix& a)
{
    constexpr int max_iterations = 10000;
    constexpr double rayleigh_tolerance = 1e-13;
    const std::size_t n = a.size();
    const Matrix adj = a.adjoint();

    Rng rng(default_seed);
    ComplexVector v = all_ones_vector(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] += 1e-3 * cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    const ExtendedExponent two(2.0);
    auto normalize = [&](ComplexVector& x) {
        const double s = vector_norm(x, two);
        for (std::size_t i = 0; i < n; ++i)
            x[i] /= s;
    };
    normalize(v);

    double rayleigh = 0.0;
    for (int it = 0; it < max_iterations; ++it) {
        const ComplexVector av = a.apply(v);
        const double next = std::pow(vector_norm(av, two), 2);
        ComplexVector w = adj.apply(av);
        if (w.is_zero())
            break;
        normalize(w);
        const bool done = it > 0 && std::abs(next - rayleigh) <= rayleigh_tolerance * next;
        rayleigh = next;
        if (done)
            break;
        v = std::move(w);
    }
    const double value = vector_norm(a.apply(v), two);
    return NormEstimate::exact(value, "power-2-2", std::move(v));
}

MagicInteriorNorm norm_magic_interior(const Matrix& a, const ExtendedExponent& p, double tol)
{
    const auto magic = match_magic_squared(a, tol);
    if (!magic)
        throw DomainError("norm_magic_interior needs a magic-squared matrix");
    const std::size_t n = a.size();

    // (1/P, 1/Q) is the midpoint of (0, 1/p) and (1/p', 1)
    const double u = 0.5 * p.conjugate_reciprocal();
    const double v = 0.5 * (1.0 + p.reciprocal());
    const ExponentPair at{ExtendedExponent::from_reciprocal(u), ExtendedExponent::from_reciprocal(v)};

    const double scale = std::pow(static_cast<double>(n), -u);
    ComplexVector witness(std::vector<cplx>(n, cplx(scale, 0.0)));
    const double lower = vector_norm(a.apply(witness), at.q);

    const double left = norm_inf_to_p_nonneg(a, p).value;
    const double right = norm_dual(a, p.conjugate(), ExtendedExponent(1.0), evaluate_nonneg_row_sums).value;
    const double upper = std::sqrt(left * right);
    if (std::abs(upper - lower) > 1e-10 * std::max(upper, 1.0))
        throw DomainError("magic-squared interior bounds disagree");

    return {at, NormEstimate::exact(lower, "magic-interior", std::move(witness))};
}

NormEstimate evaluate_row_dual(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q)
{
    if (!q.is_infinite())
        throw DomainError("row-dual evaluator needs q = inf");
    return norm_p_to_inf(a, p);
}

NormEstimate evaluate_column_norm(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q)
{
    if (!p.is_one())
        throw DomainError("column-norm evaluator needs p = 1");
    return norm_1_to_q(a, q);
}

NormEstimate evaluate_nonneg_row_sums(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q)
{
    if (!p.is_infinite())
        throw DomainError("row-sum evaluator needs p = inf");
    return norm_inf_to_p_nonneg(a, q);
}

} // namespace opnorm
