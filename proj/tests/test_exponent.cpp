#include "opnorm/error.hpp"
#include "opnorm/exponent.hpp"
#include "opnorm/matrix.hpp"
#include "opnorm/vector.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>

using namespace opnorm;

TEST_CASE("exponent construction and reciprocal")
{
    CHECK_THROWS_AS(ExtendedExponent(0.5), ExponentError);
    CHECK_THROWS_AS(ExtendedExponent(std::nan("")), ExponentError);
    CHECK_THROWS_AS(ExtendedExponent(oracle::inf), ExponentError);
    CHECK(ExtendedExponent(1.0).reciprocal() == 1.0);
    CHECK(ExtendedExponent::infinity().reciprocal() == 0.0);
    CHECK(ExtendedExponent::infinity().is_infinite());
    CHECK(std::isinf(ExtendedExponent::infinity().value()));
    CHECK(ExtendedExponent::from_reciprocal(0.0).is_infinite());
    CHECK(ExtendedExponent::from_reciprocal(1.0).is_one());
    CHECK_THROWS_AS(ExtendedExponent::from_reciprocal(1.5), ExponentError);
}

TEST_CASE("holder conjugate")
{
    CHECK(ExtendedExponent(1.0).conjugate().is_infinite());
    CHECK(ExtendedExponent::infinity().conjugate().is_one());
    CHECK(ExtendedExponent(2.0).conjugate().is_two());
    CHECK(ExtendedExponent(4.0).conjugate().value() == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(holder_conjugate(ExtendedExponent::from_ratio(3, 2)).value() == doctest::Approx(3.0));
}

TEST_CASE("conjugation is an involution")
{
    Rng rng(11);
    std::vector<ExtendedExponent> ps{ExtendedExponent(1.0), ExtendedExponent::infinity()};
    for (int k = 0; k < 200; ++k)
        ps.emplace_back(std::exp(rng.uniform(0.0, std::log(1e6))));
    for (const auto& p : ps) {
        const auto back = p.conjugate().conjugate();
        CHECK(back == p);
        CHECK(back.is_infinite() == p.is_infinite());
        if (!p.is_infinite())
            CHECK(std::abs(back.value() - p.value()) <= 1e-12 * p.value());
        CHECK(p.reciprocal() + p.conjugate().reciprocal() == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("reciprocal round trip")
{
    Rng rng(12);
    for (int k = 0; k < 200; ++k) {
        const ExtendedExponent p(1.0 + rng.uniform(0.0, 50.0));
        const auto back = ExtendedExponent::from_reciprocal(p.reciprocal());
        CHECK(std::abs(back.value() - p.value()) <= 1e-12 * p.value());
    }
    CHECK(ExtendedExponent::from_reciprocal(ExtendedExponent(1.0).reciprocal()).is_one());
    CHECK(ExtendedExponent::from_reciprocal(ExtendedExponent::infinity().reciprocal()).is_infinite());
}

TEST_CASE("exponent parsing")
{
    CHECK(ExtendedExponent::parse("inf").is_infinite());
    CHECK(ExtendedExponent::parse(" 2 ").is_two());
    CHECK(ExtendedExponent::parse("1.5").value() == 1.5);
    const auto r = ExtendedExponent::parse("4/3");
    CHECK(r.reciprocal() == 0.75);
    CHECK(r.conjugate().value() == 4.0);
    CHECK(ExtendedExponent::parse("3/3").is_one());
    CHECK_THROWS_AS(ExtendedExponent::parse("2/3"), ExponentError);
    CHECK_THROWS_AS(ExtendedExponent::parse("0.5"), ExponentError);
    CHECK_THROWS_AS(ExtendedExponent::parse("abc"), ExponentError);
    CHECK_THROWS_AS(ExtendedExponent::parse(""), ExponentError);
    CHECK_THROWS_AS(ExtendedExponent::parse("3/0"), ExponentError);
    CHECK(ExtendedExponent::parse("inf").to_string() == "inf");
    CHECK(ExtendedExponent::parse("3/2").to_string() == "1.5");
}

TEST_CASE("exponent comparison")
{
    CHECK(ExtendedExponent(2.0) == ExtendedExponent::from_reciprocal(0.5));
    CHECK(ExtendedExponent(3.0) == ExtendedExponent::from_ratio(3, 1));
    CHECK_FALSE(ExtendedExponent(2.0) == ExtendedExponent(2.0 + 1e-9));
    CHECK(ExtendedExponent(2.0) < ExtendedExponent::infinity());
    CHECK(ExtendedExponent(1.0) < ExtendedExponent(1.5));
    CHECK(ExtendedExponent(3.0) <= ExtendedExponent(3.0));
}

TEST_CASE("vector norms")
{
    const ExtendedExponent two(2.0);
    CHECK(vector_norm(ComplexVector{1.0, 1.0, 1.0}, two) == doctest::Approx(std::sqrt(3.0)));
    CHECK(vector_norm(ComplexVector{8.0, 1.0, 6.0}, ExtendedExponent::infinity()) == 8.0);
    CHECK(vector_norm(ComplexVector{3.0, cplx(0.0, -4.0)}, two) == doctest::Approx(5.0));
    CHECK(vector_norm(ComplexVector{0.0, 0.0}, ExtendedExponent(3.0)) == 0.0);
    CHECK(vector_norm(ComplexVector{1e-200, 1e-200}, two) == doctest::Approx(std::sqrt(2.0) * 1e-200));
    CHECK(vector_norm(ComplexVector{1e200, 1e200}, ExtendedExponent(3.0)) ==
          doctest::Approx(std::cbrt(2.0) * 1e200));
}

TEST_CASE("vector norm matches the definition and is non-increasing in p")
{
    Rng rng(13);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng.index(7);
        ComplexVector x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = rng.uniform(0.0, 3.0) * rng.phase();
        double prev = INFINITY;
        for (double p : {1.0, 1.3, 2.0, 3.7, 10.0, 80.0}) {
            const double v = vector_norm(x, ExtendedExponent(p));
            CHECK(v == doctest::Approx(oracle::norm(oracle::to_vec(x), p)).epsilon(1e-12));
            CHECK(v <= prev * (1.0 + 1e-14));
            prev = v;
        }
        CHECK(vector_norm(x, ExtendedExponent::infinity()) <= prev);
    }
}

TEST_CASE("dual map")
{
    const auto y = dual_map(ComplexVector{1.0, 1.0}, ExtendedExponent(2.0));
    CHECK(y[0].real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(y[1].real() == doctest::Approx(1.0 / std::sqrt(2.0)));

    const auto e = dual_map(ComplexVector{2.0, 0.0}, ExtendedExponent(3.0));
    CHECK(e[0].real() == doctest::Approx(1.0));
    CHECK(e[1] == cplx(0.0, 0.0));

    CHECK_THROWS_AS(dual_map(ComplexVector{1.0}, ExtendedExponent(1.0)), DomainError);
    CHECK_THROWS_AS(dual_map(ComplexVector{1.0}, ExtendedExponent::infinity()), DomainError);
    CHECK_THROWS_AS(dual_map(ComplexVector{0.0, 0.0}, ExtendedExponent(2.0)), DomainError);
}

TEST_CASE("dual map attains the Hoelder bound")
{
    // (1, 2) at p = 3: sup Re<y, x> over ||y||_{3/2} = 1 is ||x||_3 = 9^(1/3).
    const ExtendedExponent p(3.0);
    const ComplexVector x{1.0, 2.0};
    const auto y = dual_map(x, p);
    CHECK(vector_norm(y, p.conjugate()) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(pairing(y.span(), x.span()).real() == doctest::Approx(std::cbrt(9.0)).epsilon(1e-12));

    // oracle: maximize over the unit 3/2-sphere by dense angle sampling
    double best = 0.0;
    for (int k = 0; k <= 200000; ++k) {
        const double t = 0.5 * M_PI * k / 200000.0;
        const double c = std::cos(t), s = std::sin(t);
        const double scale = std::pow(std::pow(c, 1.5) + std::pow(s, 1.5), -1.0 / 1.5);
        best = std::max(best, scale * (c * 1.0 + s * 2.0));
    }
    CHECK(best == doctest::Approx(std::cbrt(9.0)).epsilon(1e-9));

    Rng rng(14);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng.index(6);
        ComplexVector v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = rng.uniform(0.0, 2.0) * rng.phase();
        const ExtendedExponent r(1.05 + rng.uniform(0.0, 8.0));
        const auto w = dual_map(v, r);
        const cplx pr = pairing(w.span(), v.span());
        CHECK(pr.real() == doctest::Approx(vector_norm(v, r)).epsilon(1e-12));
        CHECK(std::abs(pr.imag()) <= 1e-12 * vector_norm(v, r));
        CHECK(vector_norm(w, r.conjugate()) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("hoelder max")
{
    CHECK(hoelder_max(ComplexVector{9.0, 4.0, 2.0}, ExtendedExponent(2.0)) == doctest::Approx(std::sqrt(101.0)));
    CHECK(hoelder_max(ComplexVector{1.0, 1.0, 1.0, 1.0}, ExtendedExponent(1.0)) == 1.0);
    CHECK(hoelder_max(ComplexVector{3.0, 5.0, 7.0}, ExtendedExponent(1.0)) == 7.0);
}

TEST_CASE("hoelder inequality and its maximizer")
{
    Rng rng(15);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = 1 + rng.index(4);
        ComplexVector a(n);
        for (std::size_t i = 0; i < n; ++i)
            a[i] = rng.uniform(0.0, 2.0) * rng.phase();
        const double pv = t % 5 == 0 ? 1.0 : 1.0 + rng.uniform(0.0, 5.0);
        const auto p = t % 7 == 0 ? ExtendedExponent::infinity() : ExtendedExponent(pv);
        const double bound = hoelder_max(a, p);

        const auto x = hoelder_maximizer(a.span(), p);
        CHECK(vector_norm(x, p) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(pairing(a.span(), x.span())) == doctest::Approx(bound).epsilon(1e-12));

        double sampled = 0.0;
        const double pe = p.is_infinite() ? oracle::inf : p.value();
        for (int s = 0; s < 20000; ++s) {
            oracle::Vec z(n);
            for (auto& c : z)
                c = rng.uniform() * rng.phase();
            const double nz = oracle::norm(z, pe);
            if (nz == 0.0)
                continue;
            cplx sum = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                sum += a[i] * z[i];
            sampled = std::max(sampled, std::abs(sum) / nz);
        }
        CHECK(sampled <= bound * (1.0 + 1e-12));

        Matrix row(n);
        for (std::size_t j = 0; j < n; ++j)
            row(0, j) = a[j];
        const double searched = oracle::search_norm(row, pe, 2.0, 100 + t, 2000);
        CHECK(searched <= bound * (1.0 + 1e-12));
        CHECK(searched >= bound * (1.0 - 1e-3));
    }
}
