#include "opnorm/norm_estimate.hpp"

#include <limits>

namespace opnorm {

std::string_view to_string(Certification c) noexcept
{
    switch (c) {
    case Certification::Exact:
        return "exact";
    case Certification::LowerBound:
        return "lower-bound";
    case Certification::Bracket:
        return "bracket";
    }
    return "?";
}

NormEstimate NormEstimate::exact(double value, std::string method, std::optional<ComplexVector> witness)
{
    return NormEstimate{value, Certification::Exact, std::nullopt, std::move(method), std::move(witness)};
}

NormEstimate NormEstimate::lower_bound(double value, std::string method, ComplexVector witness)
{
    return NormEstimate{value, Certification::LowerBound, std::nullopt, std::move(method), std::move(witness)};
}

NormEstimate NormEstimate::bracketed(double lo, double hi, std::string method, std::optional<ComplexVector> witness)
{
    return NormEstimate{lo, Certification::Bracket, Interval{lo, hi}, std::move(method), std::move(witness)};
}

double NormEstimate::upper() const noexcept
{
    switch (status) {
    case Certification::Exact:
        return value;
    case Certification::Bracket:
        return bracket ? bracket->hi : std::numeric_limits<double>::infinity();
    case Certification::LowerBound:
        break;
    }
    return std::numeric_limits<double>::infinity();
}

double achieved_ratio(const Matrix& a, const ComplexVector& w, const ExtendedExponent& p, const ExtendedExponent& q)
{
    return vector_norm(a.apply(w), q) / vector_norm(w, p);
}

} // namespace opnorm
