#include "opnorm/estimate.hpp"

#include "opnorm/error.hpp"
#include "opnorm/exact.hpp"
#include "opnorm/interpolation.hpp"
#include "opnorm/kernels.hpp"
#include "opnorm/structure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

namespace opnorm {

void EstimatorConfig::validate() const
{
    if (max_iterations <= 0 || restarts <= 0 || sample_count <= 0)
        throw DomainError("estimator counts must be positive");
    if (!(tolerance > 0.0 && tolerance < 1.0))
        throw DomainError("estimator tolerance must lie in (0, 1)");
}

bool better_estimate(double value_a, const ComplexVector& witness_a, double value_b,
                     const ComplexVector& witness_b)
{
    if (value_a != value_b)
        return value_a > value_b;
    return std::lexicographical_compare(witness_a.begin(), witness_a.end(), witness_b.begin(), witness_b.end(),
                                        [](cplx x, cplx y) {
                                            if (x.real() != y.real())
                                                return x.real() < y.real();
                                            return x.imag() < y.imag();
                                        });
}

namespace {

ComplexVector normalized(ComplexVector x, const ExtendedExponent& p)
{
    const double s = vector_norm(x, p);
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] /= s;
    return x;
}

// ||A x||_q / ||x||_p with scratch buffers reused across calls.
class RatioEvaluator {
public:
    RatioEvaluator(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q)
        : a_(a), p_(p), q_(q), n_(a.size()), k_(kernels::active()), y_(n_), m_(n_) {}

    double operator()(const cplx* x)
    {
        k_.modulus(x, m_.data(), n_);
        const double denom = norm_of_moduli(m_, p_);
        if (denom == 0.0)
            return 0.0;
        k_.matvec(a_.entries().data(), x, y_.data(), n_);
        k_.modulus(y_.data(), m_.data(), n_);
        return norm_of_moduli(m_, q_) / denom;
    }

private:
    const Matrix& a_;
    ExtendedExponent p_, q_;
    std::size_t n_;
    const kernels::KernelTable& k_;
    std::vector<cplx> y_;
    std::vector<double> m_;
};

// Maximizes f on [lo, hi] by golden-section search; returns (argmax, max).
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, int iterations)
{
    constexpr double inv_phi = 0.6180339887498949;
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < iterations; ++it) {
        if (fc >= fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    return fc >= fd ? std::pair{c, fc} : std::pair{d, fd};
}

// Coordinate-wise golden-section ascent on moduli (and phases when
// `with_phases`). Only improving moves are accepted.
double polish(RatioEvaluator& f, std::vector<cplx>& x, bool with_phases)
{
    constexpr int golden_iterations = 25;
    constexpr double min_step = 1e-8;
    constexpr int max_sweeps = 200;

    double current = f(x.data());
    double step = 0.5;
    for (int sweep = 0; sweep < max_sweeps && step > min_step; ++sweep) {
        const double before = current;
        double scale = 0.0;
        for (cplx z : x)
            scale = std::max(scale, std::abs(z));
        if (scale == 0.0)
            break;

        for (std::size_t j = 0; j < x.size(); ++j) {
            const cplx saved = x[j];
            const double r = std::abs(saved);
            const double angle = r > 0.0 ? std::arg(saved) : 0.0;

            auto by_modulus = [&](double t) {
                x[j] = std::polar(t, angle);
                return f(x.data());
            };
            const auto [t, ft] = golden_max(by_modulus, std::max(0.0, r - step * scale), r + step * scale,
                                            golden_iterations);
            if (ft > current) {
                x[j] = std::polar(t, angle);
                current = ft;
            } else {
                x[j] = saved;
            }

            if (with_phases && std::abs(x[j]) > 0.0) {
                const cplx kept = x[j];
                const double mod = std::abs(kept);
                const double a0 = std::arg(kept);
                auto by_angle = [&](double phi) {
                    x[j] = std::polar(mod, phi);
                    return f(x.data());
                };
                const auto [phi, fphi] = golden_max(by_angle, a0 - step * std::numbers::pi,
                                                    a0 + step * std::numbers::pi, golden_iterations);
                if (fphi > current) {
                    x[j] = std::polar(mod, phi);
                    current = fphi;
                } else {
                    x[j] = kept;
                }
            }
        }
        if (current - before <= 1e-14 * current)
            step *= 0.5;
    }
    return current;
}

// Keeps the k best (value, vector) pairs seen so far.
class TopK {
public:
    explicit TopK(std::size_t k) : k_(k) {}

    void offer(double value, const std::vector<cplx>& x)
    {
        if (entries_.size() == k_ && value <= entries_.back().first)
            return;
        auto pos = std::find_if(entries_.begin(), entries_.end(), [&](const auto& e) { return value > e.first; });
        entries_.insert(pos, {value, x});
        if (entries_.size() > k_)
            entries_.pop_back();
    }

    const std::vector<std::pair<double, std::vector<cplx>>>& entries() const { return entries_; }

private:
    std::size_t k_;
    std::vector<std::pair<double, std::vector<cplx>>> entries_;
};

} // namespace

PowerIterationRun power_iteration_run(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q,
                                      ComplexVector start, int max_iterations, double tolerance)
{
    if (!p.is_interior() || p.is_infinite() || !q.is_interior() || q.is_infinite())
        throw DomainError("power iteration needs 1 < p, q < inf");
    const auto p_dual = p.conjugate();

    PowerIterationRun run;
    ComplexVector x = normalized(std::move(start), p);
    ComplexVector y = a.apply(x);
    double value = vector_norm(y, q);
    run.history.push_back(value);
    run.witness = x;
    run.value = value;

    for (int it = 0; it < max_iterations && !y.is_zero(); ++it) {
        const ComplexVector w = a.apply_transpose(dual_map(y, q));
        if (w.is_zero())
            break;
        ComplexVector next = dual_map(w, p_dual);
        ComplexVector next_y = a.apply(next);
        const double next_value = vector_norm(next_y, q);
        run.history.push_back(next_value);
        if (next_value < value - 1e-12 * value)
            run.monotone = false;
        if (next_value > run.value) {
            run.value = next_value;
            run.witness = next;
        }
        const bool converged = next_value - value <= tolerance * next_value;
        x = std::move(next);
        y = std::move(next_y);
        value = next_value;
        if (converged)
            break;
    }
    return run;
}

std::vector<PowerIterationRun> power_iteration_runs(const Matrix& a, const ExtendedExponent& p,
                                                    const ExtendedExponent& q, const EstimatorConfig& cfg)
{
    cfg.validate();
    if (std::all_of(a.entries().begin(), a.entries().end(), [](cplx z) { return z == cplx(0.0, 0.0); }))
        throw DomainError("power iteration on the zero matrix");
    const std::size_t n = a.size();
    const bool nonneg = a.is_entrywise_nonnegative();

    Rng rng(cfg.seed);
    std::vector<PowerIterationRun> runs;
    runs.reserve(static_cast<std::size_t>(cfg.restarts));
    for (int r = 0; r < cfg.restarts; ++r) {
        ComplexVector start = all_ones_vector(n);
        if (r > 0) {
            for (std::size_t i = 0; i < n; ++i) {
                const double mod = rng.uniform(0.05, 1.0);
                start[i] = nonneg ? cplx(mod, 0.0) : mod * rng.phase();
            }
        }
        runs.push_back(power_iteration_run(a, p, q, std::move(start), cfg.max_iterations, cfg.tolerance));
    }
    return runs;
}

NormEstimate power_iteration_norm(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q,
                                  const EstimatorConfig& cfg)
{
    auto runs = power_iteration_runs(a, p, q, cfg);
    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r)
        if (better_estimate(runs[r].value, runs[r].witness, runs[best].value, runs[best].witness))
            best = r;
    return NormEstimate::lower_bound(runs[best].value, "power-iteration", std::move(runs[best].witness));
}

NormEstimate brute_force_norm(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q,
                              const EstimatorConfig& cfg)
{
    cfg.validate();
    constexpr std::size_t polished = 6;
    const std::size_t n = a.size();
    const bool nonneg = a.is_entrywise_nonnegative();
    RatioEvaluator f(a, p, q);
    TopK top(polished);
    std::vector<cplx> x(n);

    // all-ones and standard basis vectors
    std::fill(x.begin(), x.end(), cplx(1.0, 0.0));
    top.offer(f(x.data()), x);
    for (std::size_t k = 0; k < n; ++k) {
        std::fill(x.begin(), x.end(), cplx(0.0, 0.0));
        x[k] = 1.0;
        top.offer(f(x.data()), x);
    }

    // every vector with entries in {0} + phase set, for small n
    if (n <= 4) {
        const std::vector<cplx> phases =
            nonneg ? std::vector<cplx>{1.0} : std::vector<cplx>{1.0, -1.0, cplx(0, 1), cplx(0, -1)};
        const std::size_t base = phases.size() + 1;
        std::size_t total = 1;
        for (std::size_t k = 0; k < n; ++k)
            total *= base;
        for (std::size_t code = 1; code < total; ++code) {
            std::size_t c = code;
            for (std::size_t k = 0; k < n; ++k, c /= base) {
                const std::size_t digit = c % base;
                x[k] = digit == 0 ? cplx(0.0, 0.0) : phases[digit - 1];
            }
            top.offer(f(x.data()), x);
        }
    }

    // random points; odd samples use cubed moduli to reach near-sparse vectors
    Rng rng(cfg.seed);
    for (int s = 0; s < cfg.sample_count; ++s) {
        for (std::size_t k = 0; k < n; ++k) {
            double mod = rng.uniform();
            if (s & 1)
                mod = mod * mod * mod;
            x[k] = nonneg ? cplx(mod, 0.0) : mod * rng.phase();
        }
        top.offer(f(x.data()), x);
    }

    double best_value = -1.0;
    ComplexVector best_witness;
    for (const auto& [value, candidate] : top.entries()) {
        std::vector<cplx> v = candidate;
        polish(f, v, !nonneg);
        ComplexVector w = normalized(ComplexVector(std::move(v)), p);
        const double achieved = vector_norm(a.apply(w), q);
        if (best_value < 0.0 || better_estimate(achieved, w, best_value, best_witness)) {
            best_value = achieved;
            best_witness = std::move(w);
        }
    }
    return NormEstimate::lower_bound(best_value, "brute-force", std::move(best_witness));
}

namespace {

std::vector<double> column_sums(const Matrix& a)
{
    std::vector<double> sums(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            sums[j] += a(i, j).real();
    return sums;
}

// ||A||_{p,1} for nonnegative A: the p'-norm of the column sums.
NormEstimate nonneg_p_to_1(const Matrix& a, const ExtendedExponent& p)
{
    const auto sums = column_sums(a);
    const std::vector<cplx> c(sums.begin(), sums.end());
    return NormEstimate::exact(norm_of_moduli(sums, p.conjugate()), "column-sums", hoelder_maximizer(c, p));
}

// A line in the unit square on which every point is exactly computable.
struct ExactEdge {
    enum class Kind { ColumnNorm, RowDual, NonnegRowSums, NonnegColumnSums, Diagonal } kind;

    SquarePoint at(double s) const
    {
        switch (kind) {
        case Kind::ColumnNorm:
            return {1.0, s};
        case Kind::RowDual:
            return {s, 0.0};
        case Kind::NonnegRowSums:
            return {0.0, s};
        case Kind::NonnegColumnSums:
            return {s, 1.0};
        case Kind::Diagonal:
            return {s, s};
        }
        return {};
    }

    // t with e + t d on this line, or NaN
    double crossing(const SquarePoint& e, double du, double dv) const
    {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        switch (kind) {
        case Kind::ColumnNorm:
            return du != 0.0 ? (1.0 - e.u) / du : nan;
        case Kind::RowDual:
            return dv != 0.0 ? (0.0 - e.v) / dv : nan;
        case Kind::NonnegRowSums:
            return du != 0.0 ? (0.0 - e.u) / du : nan;
        case Kind::NonnegColumnSums:
            return dv != 0.0 ? (1.0 - e.v) / dv : nan;
        case Kind::Diagonal:
            return du != dv ? (e.v - e.u) / (du - dv) : nan;
        }
        return nan;
    }
};

class ExactCatalog {
public:
    explicit ExactCatalog(const Matrix& a) : a_(a), cls_(classify(a))
    {
        edges_.push_back({ExactEdge::Kind::ColumnNorm});
        edges_.push_back({ExactEdge::Kind::RowDual});
        if (a.is_entrywise_nonnegative()) {
            edges_.push_back({ExactEdge::Kind::NonnegRowSums});
            edges_.push_back({ExactEdge::Kind::NonnegColumnSums});
        }
        const auto e = ExponentPair{ExtendedExponent(2.0), ExtendedExponent(2.0)};
        if (closed_form_norm(cls_, a.size(), e.p, e.q))
            edges_.push_back({ExactEdge::Kind::Diagonal});
    }

    const std::vector<ExactEdge>& edges() const { return edges_; }

    double value(const ExactEdge& edge, const SquarePoint& pt)
    {
        const auto key = std::tuple{static_cast<int>(edge.kind), pt.u, pt.v};
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        const auto e = pt.exponents();
        double v = 0.0;
        switch (edge.kind) {
        case ExactEdge::Kind::ColumnNorm:
            v = norm_1_to_q(a_, e.q).value;
            break;
        case ExactEdge::Kind::RowDual:
            v = norm_p_to_inf(a_, e.p).value;
            break;
        case ExactEdge::Kind::NonnegRowSums:
            v = norm_inf_to_p_nonneg(a_, e.q).value;
            break;
        case ExactEdge::Kind::NonnegColumnSums:
            v = nonneg_p_to_1(a_, e.p).value;
            break;
        case ExactEdge::Kind::Diagonal:
            v = closed_form_norm(cls_, a_.size(), e.p, e.q)->value;
            break;
        }
        memo_.emplace(key, v);
        return v;
    }

    double spectral()
    {
        if (!spectral_)
            spectral_ = norm_2_to_2(a_).value;
        return *spectral_;
    }

private:
    const Matrix& a_;
    MatrixClass cls_;
    std::vector<ExactEdge> edges_;
    std::map<std::tuple<int, double, double>, double> memo_;
    std::optional<double> spectral_;
};

} // namespace

std::optional<NormEstimate> exact_line_norm(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q)
{
    if (p.is_one())
        return norm_1_to_q(a, q);
    if (q.is_infinite())
        return norm_p_to_inf(a, p);
    if (p.is_two() && q.is_two())
        return norm_2_to_2(a);
    if (a.is_entrywise_nonnegative()) {
        if (p.is_infinite())
            return norm_inf_to_p_nonneg(a, q);
        if (q.is_one())
            return nonneg_p_to_1(a, p);
    }
    return std::nullopt;
}

namespace {

double rt_bound_at(ExactCatalog& catalog, const SquarePoint& target)
{
    constexpr int resolution = 64;
    constexpr double eps = 1e-12;
    double best = std::numeric_limits<double>::infinity();

    auto through = [&](const SquarePoint& start, double start_value) {
        const double du = target.u - start.u;
        const double dv = target.v - start.v;
        if (std::abs(du) < eps && std::abs(dv) < eps)
            return;
        for (const auto& edge : catalog.edges()) {
            const double t = edge.crossing(start, du, dv);
            if (!(t > 1.0 + eps) || !std::isfinite(t))
                continue;
            const double u = start.u + t * du;
            const double v = start.v + t * dv;
            if (u < -eps || u > 1.0 + eps || v < -eps || v > 1.0 + eps)
                continue;
            // snap onto the edge so the endpoint is exactly on its line
            const auto snap = [&](double x) { return x < eps ? 0.0 : x > 1.0 - eps ? 1.0 : x; };
            SquarePoint end{snap(u), snap(v)};
            switch (edge.kind) {
            case ExactEdge::Kind::ColumnNorm: end.u = 1.0; break;
            case ExactEdge::Kind::RowDual: end.v = 0.0; break;
            case ExactEdge::Kind::NonnegRowSums: end.u = 0.0; break;
            case ExactEdge::Kind::NonnegColumnSums: end.v = 1.0; break;
            case ExactEdge::Kind::Diagonal: end.v = end.u; break;
            }
            best = std::min(best, rt_upper_bound(start_value, catalog.value(edge, end), 1.0 / t));
        }
    };

    through({0.5, 0.5}, catalog.spectral());
    for (const auto& edge : catalog.edges()) {
        for (int k = 0; k <= resolution; ++k) {
            const SquarePoint start = edge.at(static_cast<double>(k) / resolution);
            through(start, catalog.value(edge, start));
        }
    }
    return best;
}

} // namespace

double interpolation_upper_bound(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q)
{
    ExactCatalog catalog(a);
    return rt_bound_at(catalog, {p.reciprocal(), q.reciprocal()});
}

double embedding_upper_bound(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q)
{
    ExactCatalog catalog(a);
    const double u = p.reciprocal();
    const double v = q.reciprocal();
    const double n = static_cast<double>(a.size());
    double best = rt_bound_at(catalog, {u, v});
    best = std::min(best, std::pow(n, 1.0 - u) * norm_1_to_q(a, q).value);
    best = std::min(best, std::pow(n, v) * norm_p_to_inf(a, p).value);
    if (v > u) {
        const double lift = std::pow(n, v - u);
        best = std::min(best, lift * rt_bound_at(catalog, {u, u}));
        best = std::min(best, lift * rt_bound_at(catalog, {v, v}));
    }
    return best;
}

NormEstimate bracket_norm(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q,
                          const EstimatorConfig& cfg)
{
    if (auto exact = exact_line_norm(a, p, q))
        return *exact;
    if (std::all_of(a.entries().begin(), a.entries().end(), [](cplx z) { return z == cplx(0.0, 0.0); }))
        return NormEstimate::exact(0.0, "zero-matrix", basis_vector(a.size(), 0));

    const double hi = embedding_upper_bound(a, p, q);
    const bool interior = p.is_interior() && !p.is_infinite() && q.is_interior() && !q.is_infinite();
    NormEstimate lower = interior ? power_iteration_norm(a, p, q, cfg) : brute_force_norm(a, p, q, cfg);
    return NormEstimate::bracketed(lower.value, hi, "rt-bracket", std::move(lower.witness));
}

} // namespace opnorm
