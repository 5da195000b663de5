#pragma once

#include "opnorm/exponent.hpp"
#include "opnorm/matrix.hpp"
#include "opnorm/vector.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace opnorm {

enum class Certification { Exact, LowerBound, Bracket };

std::string_view to_string(Certification c) noexcept;

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// A value of ||A||_{p,q} with how far it can be trusted.
///
/// For LowerBound the witness achieves the value; for Bracket, value == lo,
/// lo is achieved by the witness and hi is a proven upper bound.
struct NormEstimate {
    double value = 0.0;
    Certification status = Certification::Exact;
    std::optional<Interval> bracket;
    std::string method;
    std::optional<ComplexVector> witness; // unit p-norm when present

    static NormEstimate exact(double value, std::string method, std::optional<ComplexVector> witness = {});
    static NormEstimate lower_bound(double value, std::string method, ComplexVector witness);
    static NormEstimate bracketed(double lo, double hi, std::string method, std::optional<ComplexVector> witness);

    bool is_exact() const noexcept { return status == Certification::Exact; }

    /// Best proven upper bound: value for Exact, hi for Bracket, +inf otherwise.
    double upper() const noexcept;
};

/// ||A w||_q / ||w||_p.
double achieved_ratio(const Matrix& a, const ComplexVector& w, const ExtendedExponent& p, const ExtendedExponent& q);

using NormEvaluator =
    std::function<NormEstimate(const Matrix&, const ExtendedExponent& p, const ExtendedExponent& q)>;

} // namespace opnorm
