#include "opnorm/structure.hpp"

#include "opnorm/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace opnorm {
namespace {

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);
    return buf;
}

double max_modulus(const Matrix& a)
{
    double m = 0.0;
    for (cplx z : a.entries())
        m = std::max(m, std::abs(z));
    return m;
}

bool nonnegative_within(const Matrix& a, double tol)
{
    return std::all_of(a.entries().begin(), a.entries().end(),
                       [tol](cplx z) { return z.real() >= -tol && std::abs(z.imag()) <= tol; });
}

class CirculantSearch {
public:
    CirculantSearch(const Matrix& a, std::vector<double> gens, double tol)
        : a_(a), n_(a.size()), gens_(std::move(gens)), tol_(tol), sigma_(n_, unset), used_(n_, false) {}

    std::optional<std::vector<std::size_t>> run()
    {
        if (assign(0))
            return sigma_;
        return std::nullopt;
    }

private:
    static constexpr std::size_t unset = static_cast<std::size_t>(-1);
    static constexpr long node_budget = 200000;

    bool close(cplx entry, double g) const { return std::abs(entry - cplx(g, 0.0)) <= tol_; }

    // Following sigma from `start` must not close a cycle shorter than n.
    bool no_short_cycle(std::size_t start) const
    {
        std::size_t k = sigma_[start];
        std::size_t length = 1;
        while (k != unset && k != start) {
            k = sigma_[k];
            ++length;
        }
        return k == unset || length == n_;
    }

    bool full_check() const
    {
        std::vector<std::size_t> power(n_);
        std::iota(power.begin(), power.end(), std::size_t{0});
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t c = 0; c < n_; ++c)
                power[c] = sigma_[power[c]];
            for (std::size_t c = 0; c < n_; ++c)
                if (!close(a_(r, c), gens_[power[c]]))
                    return false;
        }
        return true;
    }

    bool assign(std::size_t c)
    {
        if (++nodes_ > node_budget)
            return false;
        if (c == n_)
            return full_check();
        for (std::size_t k = 0; k < n_; ++k) {
            if (used_[k] || !close(a_(0, c), gens_[k]))
                continue;
            if (n_ > 1 && k == c)
                continue;
            sigma_[c] = k;
            used_[k] = true;
            if (no_short_cycle(c) && assign(c + 1))
                return true;
            sigma_[c] = unset;
            used_[k] = false;
            if (nodes_ > node_budget)
                return false;
        }
        return false;
    }

    const Matrix& a_;
    std::size_t n_;
    std::vector<double> gens_;
    double tol_;
    std::vector<std::size_t> sigma_;
    std::vector<bool> used_;
    long nodes_ = 0;
};

} // namespace

bool matches_identity(const Matrix& a, double tol)
{
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(a(i, j) - cplx(i == j ? 1.0 : 0.0, 0.0)) > tol)
                return false;
    return true;
}

std::optional<UnitaryPermutation> match_unitary_permutation(const Matrix& a, double tol)
{
    const std::size_t n = a.size();
    UnitaryPermutation perm;
    std::vector<bool> taken(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = a.row(i);
        std::size_t best = 0;
        for (std::size_t j = 1; j < n; ++j)
            if (std::abs(row[j]) > std::abs(row[best]))
                best = j;
        const double mod = std::abs(row[best]);
        if (std::abs(mod - 1.0) > tol || taken[best])
            return std::nullopt;
        for (std::size_t j = 0; j < n; ++j)
            if (j != best && std::abs(row[j]) > tol)
                return std::nullopt;
        taken[best] = true;
        perm.sigma.push_back(best);
        perm.phases.push_back(row[best] / mod);
    }
    return perm;
}

std::optional<ScaledAllOnes> match_scaled_all_ones(const Matrix& a, double tol)
{
    if (!nonnegative_within(a, tol))
        return std::nullopt;
    double mean = 0.0;
    for (cplx z : a.entries())
        mean += z.real();
    mean /= static_cast<double>(a.entries().size());
    const double scaled_tol = tol * std::max(1.0, mean);
    for (cplx z : a.entries())
        if (std::abs(z - cplx(mean, 0.0)) > scaled_tol)
            return std::nullopt;
    return ScaledAllOnes{std::max(mean, 0.0)};
}

std::optional<Circulant> match_circulant(const Matrix& a, double tol)
{
    if (!nonnegative_within(a, tol))
        return std::nullopt;
    const std::size_t n = a.size();
    std::vector<double> gens(n);
    for (std::size_t j = 0; j < n; ++j)
        gens[j] = a(n - 1, j).real();
    const double scaled_tol = tol * std::max(1.0, max_modulus(a));
    auto sigma = CirculantSearch(a, gens, scaled_tol).run();
    if (!sigma)
        return std::nullopt;
    return Circulant{std::move(gens), std::move(*sigma)};
}

std::optional<MagicSquared> match_magic_squared(const Matrix& a, double tol)
{
    if (!nonnegative_within(a, tol))
        return std::nullopt;
    const std::size_t n = a.size();
    std::vector<cplx> row_sums(n), col_sums(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            row_sums[i] += a(i, j);
            col_sums[j] += a(i, j);
        }
    double alpha = 0.0;
    for (cplx s : row_sums)
        alpha += s.real();
    alpha /= static_cast<double>(n);
    const double scaled_tol = tol * std::max(1.0, alpha);
    for (std::size_t k = 0; k < n; ++k)
        if (std::abs(row_sums[k] - alpha) > scaled_tol || std::abs(col_sums[k] - alpha) > scaled_tol)
            return std::nullopt;
    return MagicSquared{std::max(alpha, 0.0)};
}

MatrixClass classify(const Matrix& a, double tol)
{
    if (!(tol >= 0.0))
        throw DomainError("classification tolerance must be >= 0");
    if (matches_identity(a, tol))
        return Identity{};
    if (auto m = match_unitary_permutation(a, tol))
        return *m;
    if (auto m = match_scaled_all_ones(a, tol))
        return *m;
    if (auto m = match_circulant(a, tol))
        return *m;
    if (auto m = match_magic_squared(a, tol))
        return *m;
    return General{};
}

Matrix make_circulant(const std::vector<double>& generators, const std::vector<std::size_t>& sigma)
{
    const std::size_t n = generators.size();
    if (sigma.size() != n)
        throw DomainError("sigma and generators differ in length");
    // sigma must be a single n-cycle
    std::size_t k = 0, length = 0;
    do {
        if (sigma[k] >= n)
            throw DomainError("sigma is not a permutation");
        k = sigma[k];
        ++length;
    } while (k != 0 && length <= n);
    if (k != 0 || length != n)
        throw DomainError("sigma is not a cyclic permutation of order n");

    Matrix a(n);
    std::vector<std::size_t> power(n);
    std::iota(power.begin(), power.end(), std::size_t{0});
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            power[c] = sigma[power[c]];
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = generators[power[c]];
    }
    return a;
}

ComplexVector all_ones_vector(std::size_t n)
{
    if (n == 0)
        throw DomainError("dimension must be at least 1");
    return ComplexVector(std::vector<cplx>(n, cplx(1.0, 0.0)));
}

namespace {

// xi_0 / ||xi_0||_p
ComplexVector flat_witness(std::size_t n, const ExtendedExponent& p)
{
    const double scale = std::pow(static_cast<double>(n), -p.reciprocal());
    return ComplexVector(std::vector<cplx>(n, cplx(scale, 0.0)));
}

double dimension_factor(std::size_t n, const ExtendedExponent& p, const ExtendedExponent& q)
{
    return std::pow(static_cast<double>(n), q.reciprocal() - p.reciprocal());
}

struct ClosedForm {
    std::size_t n;
    const ExtendedExponent& p;
    const ExtendedExponent& q;

    bool q_le_p() const { return q <= p; }

    std::optional<NormEstimate> operator()(const MagicSquared& m) const
    {
        if (!q_le_p())
            return std::nullopt;
        return NormEstimate::exact(m.alpha * dimension_factor(n, p, q), "closed-form", flat_witness(n, p));
    }

    std::optional<NormEstimate> permutation_like() const
    {
        if (q_le_p())
            return NormEstimate::exact(dimension_factor(n, p, q), "closed-form", flat_witness(n, p));
        return NormEstimate::exact(1.0, "closed-form", basis_vector(n, 0));
    }
    std::optional<NormEstimate> operator()(const Identity&) const { return permutation_like(); }
    std::optional<NormEstimate> operator()(const UnitaryPermutation&) const { return permutation_like(); }

    std::optional<NormEstimate> operator()(const Circulant& c) const
    {
        if (q_le_p()) {
            const double total = std::accumulate(c.generators.begin(), c.generators.end(), 0.0);
            return NormEstimate::exact(total * dimension_factor(n, p, q), "closed-form", flat_witness(n, p));
        }
        std::vector<cplx> g(c.generators.begin(), c.generators.end());
        if (q.is_infinite()) {
            // the last row is the generator vector itself
            return NormEstimate::exact(vector_norm(g, p.conjugate()), "closed-form", hoelder_maximizer(g, p));
        }
        if (p.is_one()) {
            // every column is a rearrangement of the generators
            return NormEstimate::exact(vector_norm(g, q), "closed-form", basis_vector(n, 0));
        }
        return std::nullopt;
    }

    std::optional<NormEstimate> operator()(const ScaledAllOnes& s) const
    {
        const double value =
            s.a * std::pow(static_cast<double>(n), 1.0 - p.reciprocal() + q.reciprocal());
        return NormEstimate::exact(value, "closed-form", flat_witness(n, p));
    }

    std::optional<NormEstimate> operator()(const General&) const { return std::nullopt; }
};

std::string cycle_notation(const std::vector<std::size_t>& sigma)
{
    std::string out = "(";
    std::size_t k = 0;
    do {
        if (out.size() > 1)
            out += ' ';
        out += std::to_string(k + 1);
        k = sigma[k];
    } while (k != 0);
    return out + ")";
}

} // namespace

std::optional<NormEstimate> closed_form_norm(const MatrixClass& cls, std::size_t n, const ExtendedExponent& p,
                                             const ExtendedExponent& q)
{
    return std::visit(ClosedForm{n, p, q}, cls);
}

std::string format_complex(cplx z)
{
    const double re = z.real() == 0.0 ? 0.0 : z.real();
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    char buf[80];
    if (im == 0.0)
        std::snprintf(buf, sizeof buf, "%.12g", re);
    else if (re == 0.0)
        std::snprintf(buf, sizeof buf, "%.12gi", im);
    else
        std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
    return buf;
}

std::string describe(const MatrixClass& cls)
{
    struct Describe {
        std::string operator()(const Identity&) const { return "identity"; }
        std::string operator()(const General&) const { return "general"; }
        std::string operator()(const MagicSquared& m) const { return "magic-squared alpha=" + fmt(m.alpha); }
        std::string operator()(const ScaledAllOnes& s) const { return "scaled-all-ones a=" + fmt(s.a); }
        std::string operator()(const Circulant& c) const
        {
            std::string out = "circulant a=(";
            for (std::size_t k = 0; k < c.generators.size(); ++k)
                out += (k ? "," : "") + fmt(c.generators[k]);
            return out + ") sigma=" + cycle_notation(c.sigma);
        }
        std::string operator()(const UnitaryPermutation& u) const
        {
            std::string out = "unitary-permutation sigma=[";
            for (std::size_t k = 0; k < u.sigma.size(); ++k)
                out += (k ? "," : "") + std::to_string(u.sigma[k] + 1);
            out += "] phases=[";
            for (std::size_t k = 0; k < u.phases.size(); ++k)
                out += (k ? "," : "") + format_complex(u.phases[k]);
            return out + "]";
        }
    };
    return std::visit(Describe{}, cls);
}

} // namespace opnorm
