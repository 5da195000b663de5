#include "opnorm/vector.hpp"

#include "opnorm/error.hpp"
#include "opnorm/kernels.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace opnorm {
namespace {

// Scratch for moduli; avoids a heap allocation for the usual n <= 64.
class ModulusBuffer {
public:
    explicit ModulusBuffer(std::span<const cplx> x) : n_(x.size())
    {
        if (n_ > stack_.size())
            heap_.resize(n_);
        double* m = data();
        kernels::active().modulus(x.data(), m, n_);
        for (std::size_t i = 0; i < n_; ++i)
            if (!(m[i] > 1e-150 && m[i] < 1e150) && x[i] != cplx(0.0, 0.0))
                m[i] = std::abs(x[i]);
    }
    double* data() noexcept { return n_ > stack_.size() ? heap_.data() : stack_.data(); }
    std::span<const double> span() noexcept { return {data(), n_}; }

private:
    std::size_t n_;
    std::array<double, 64> stack_{};
    std::vector<double> heap_;
};

cplx conj_phase(cplx z, double modulus)
{
    return modulus > 0.0 ? std::conj(z) / modulus : cplx(0.0, 0.0);
}

} // namespace

bool ComplexVector::is_zero() const noexcept
{
    return std::all_of(data_.begin(), data_.end(), [](cplx z) { return z == cplx(0.0, 0.0); });
}

double norm_of_moduli(std::span<const double> m, const ExtendedExponent& p)
{
    const auto& k = kernels::active();
    if (m.empty())
        return 0.0;
    if (p.is_infinite())
        return k.max(m.data(), m.size());
    if (p.is_one())
        return k.sum(m.data(), m.size());

    const double top = k.max(m.data(), m.size());
    if (top == 0.0)
        return 0.0;
    if (p.is_two() && top > 1e-150 && top < 1e150)
        return std::sqrt(k.sum_squares(m.data(), m.size()));

    const double pv = p.value();
    double s = 0.0;
    for (double v : m)
        s += std::pow(v / top, pv);
    return top * std::pow(s, p.reciprocal());
}

double vector_norm(std::span<const cplx> x, const ExtendedExponent& p)
{
    ModulusBuffer m(x);
    return norm_of_moduli(m.span(), p);
}

cplx pairing(std::span<const cplx> a, std::span<const cplx> x)
{
    cplx s(0.0, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * x[i];
    return s;
}

ComplexVector dual_map(const ComplexVector& x, const ExtendedExponent& p)
{
    if (!p.is_interior() || p.is_infinite())
        throw DomainError("dual_map needs 1 < p < inf");
    ModulusBuffer buf(x.span());
    const auto m = buf.span();
    const double top = kernels::active().max(m.data(), m.size());
    if (top == 0.0)
        throw DomainError("dual_map of the zero vector");

    const double pv = p.value();
    double s = 0.0;
    for (double v : m)
        s += std::pow(v / top, pv);
    const double scaled_norm = std::pow(s, p.reciprocal());

    ComplexVector y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (m[i] == 0.0)
            continue;
        const double t = (m[i] / top) / scaled_norm;
        y[i] = std::pow(t, pv - 1.0) * conj_phase(x[i], m[i]);
    }
    return y;
}

double hoelder_max(const ComplexVector& a, const ExtendedExponent& p)
{
    return vector_norm(a, p.conjugate());
}

ComplexVector hoelder_maximizer(std::span<const cplx> a, const ExtendedExponent& p)
{
    const std::size_t n = a.size();
    ModulusBuffer buf(a);
    const auto m = buf.span();
    if (std::all_of(m.begin(), m.end(), [](double v) { return v == 0.0; }))
        return basis_vector(n, 0);

    ComplexVector x(n);
    if (p.is_one()) {
        const auto k = static_cast<std::size_t>(std::max_element(m.begin(), m.end()) - m.begin());
        x[k] = conj_phase(a[k], m[k]);
        return x;
    }
    if (p.is_infinite() || p.conjugate().is_one()) {
        for (std::size_t i = 0; i < n; ++i)
            x[i] = m[i] > 0.0 ? conj_phase(a[i], m[i]) : cplx(1.0, 0.0);
        return x;
    }
    return dual_map(ComplexVector(std::vector<cplx>(a.begin(), a.end())), p.conjugate());
}

ComplexVector basis_vector(std::size_t n, std::size_t k)
{
    ComplexVector e(n);
    e[k] = 1.0;
    return e;
}

} // namespace opnorm
