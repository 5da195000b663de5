#include "opnorm/structure.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace opnorm;

namespace {

const ExtendedExponent inf = ExtendedExponent::infinity();
ExtendedExponent ex(double p) { return ExtendedExponent(p); }

template <class T>
bool holds(const MatrixClass& c)
{
    return std::holds_alternative<T>(c);
}

Matrix permute(const Matrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols)
{
    Matrix b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            b(i, j) = a(rows[i], cols[j]);
    return b;
}

std::vector<std::size_t> shuffled(std::size_t n, Rng& rng)
{
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    for (std::size_t i = n; i > 1; --i)
        std::swap(v[i - 1], v[rng.index(i)]);
    return v;
}

Matrix random_phased_permutation(std::size_t n, Rng& rng)
{
    const auto sigma = shuffled(n, rng);
    Matrix s(n);
    for (std::size_t i = 0; i < n; ++i)
        s(i, sigma[i]) = rng.phase();
    return s;
}

// sum of k permutation matrices with positive weights: magic squared
Matrix random_magic(std::size_t n, Rng& rng, double& alpha)
{
    Matrix a(n);
    alpha = 0.0;
    for (int k = 0; k < 3; ++k) {
        const double w = std::round(rng.uniform(1.0, 9.0));
        alpha += w;
        const auto sigma = shuffled(n, rng);
        for (std::size_t i = 0; i < n; ++i)
            a(i, sigma[i]) += w;
    }
    return a;
}

} // namespace

TEST_CASE("classify examples")
{
    const auto c = classify(oracle::loshu());
    REQUIRE(holds<MagicSquared>(c));
    CHECK(std::get<MagicSquared>(c).alpha == doctest::Approx(15.0));
    CHECK(describe(c) == "magic-squared alpha=15");

    CHECK(holds<Identity>(classify(Matrix::identity(3))));
    CHECK(describe(classify(Matrix::identity(3))) == "identity");

    Matrix s(2);
    s(0, 1) = 1.0;
    s(1, 0) = cplx(0.0, -1.0);
    const auto cs = classify(s);
    REQUIRE(holds<UnitaryPermutation>(cs));
    CHECK(std::get<UnitaryPermutation>(cs).sigma == std::vector<std::size_t>{1, 0});
    CHECK(describe(cs) == "unitary-permutation sigma=[2,1] phases=[1,-1i]");

    CHECK(holds<General>(classify(Matrix{{1, 2}, {3, 4}})));
    CHECK(describe(classify(Matrix{{1, 2}, {3, 4}})) == "general");

    const auto ones = classify(Matrix{{2, 2, 2}, {2, 2, 2}, {2, 2, 2}});
    REQUIRE(holds<ScaledAllOnes>(ones));
    CHECK(std::get<ScaledAllOnes>(ones).a == 2.0);
    CHECK(describe(ones) == "scaled-all-ones a=2");
}

TEST_CASE("specificity order")
{
    // 1x1 identity is also a unitary permutation, all-ones and magic squared
    CHECK(holds<Identity>(classify(Matrix{{1}})));
    // real permutation matrices are magic squared with alpha 1 as well
    CHECK(holds<UnitaryPermutation>(classify(Matrix{{0, 1}, {1, 0}})));
    // all-ones is circulant for every sigma
    CHECK(holds<ScaledAllOnes>(classify(Matrix{{1, 1}, {1, 1}})));
    // circulant matrices are magic squared with alpha = sum of generators
    CHECK(holds<Circulant>(classify(make_circulant({1, 2, 3}, {1, 2, 0}))));
}

TEST_CASE("circulant construction and round trip")
{
    // sigma = (1 2 3): 0 -> 1 -> 2 -> 0
    const Matrix a = make_circulant({1, 2, 3}, {1, 2, 0});
    // entry(i, j) = gens[sigma^(i+1)(j)], written out by hand
    const Matrix expected{{2, 3, 1}, {3, 1, 2}, {1, 2, 3}};
    CHECK(a == expected);
    const auto c = classify(a);
    REQUIRE(holds<Circulant>(c));
    CHECK(std::get<Circulant>(c).generators == std::vector<double>{1, 2, 3});
    CHECK(describe(c) == "circulant a=(1,2,3) sigma=(1 2 3)");

    CHECK_THROWS(make_circulant({1, 2, 3}, {0, 2, 1}));
    CHECK_THROWS(make_circulant({1, 2}, {1, 2, 0}));

    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 2 + rng.index(5);
        std::vector<double> g(n);
        for (auto& x : g)
            x = std::round(rng.uniform(0.0, 9.0)) + 0.25 * static_cast<double>(&x - g.data());
        auto order = shuffled(n, rng);
        std::vector<std::size_t> sigma(n);
        for (std::size_t k = 0; k < n; ++k)
            sigma[order[k]] = order[(k + 1) % n];
        const Matrix m = make_circulant(g, sigma);
        const auto found = match_circulant(m, 1e-12);
        REQUIRE(found.has_value());
        CHECK(found->generators == g);
        CHECK(make_circulant(found->generators, found->sigma) == m);
    }
}

TEST_CASE("closed forms")
{
    const auto magic = closed_form_norm(MagicSquared{15.0}, 3, ex(3), ex(2));
    REQUIRE(magic);
    CHECK(magic->value == doctest::Approx(15.0 * std::pow(3.0, 1.0 / 6.0)).epsilon(1e-14));
    CHECK(magic->method == "closed-form");
    CHECK(magic->is_exact());
    CHECK_FALSE(closed_form_norm(MagicSquared{15.0}, 3, ex(2), ex(3)));

    CHECK(closed_form_norm(Identity{}, 4, ex(2), ex(1))->value == doctest::Approx(2.0));
    CHECK(closed_form_norm(Identity{}, 4, ex(2), ex(5))->value == 1.0);
    CHECK(closed_form_norm(ScaledAllOnes{1.0}, 3, ex(1), inf)->value == doctest::Approx(1.0));
    CHECK(closed_form_norm(ScaledAllOnes{2.0}, 3, ex(2), ex(4))->value ==
          doctest::Approx(2.0 * std::pow(3.0, 1.0 - 0.5 + 0.25)));

    const Circulant circ{{1, 2, 3}, {1, 2, 0}};
    CHECK(closed_form_norm(circ, 3, ex(3), ex(2))->value == doctest::Approx(6.0 * std::pow(3.0, 0.5 - 1.0 / 3)));
    CHECK(closed_form_norm(circ, 3, ex(3), inf)->value ==
          doctest::Approx(std::pow(1 + std::pow(2, 1.5) + std::pow(3, 1.5), 1 / 1.5)));
    CHECK(closed_form_norm(circ, 3, ex(1), ex(4))->value ==
          doctest::Approx(std::pow(1 + std::pow(2, 4) + std::pow(3, 4), 0.25)));
    CHECK_FALSE(closed_form_norm(circ, 3, ex(2), ex(3)));
    CHECK_FALSE(closed_form_norm(General{}, 3, ex(2), ex(2)));
}

TEST_CASE("closed-form witnesses are feasible and attain the value")
{
    Rng rng(32);
    const std::vector<std::pair<Matrix, MatrixClass>> cases{
        {oracle::loshu(), classify(oracle::loshu())},
        {Matrix::identity(4), Identity{}},
        {random_phased_permutation(5, rng), classify(random_phased_permutation(5, rng))},
        {make_circulant({1, 2, 3}, {1, 2, 0}), classify(make_circulant({1, 2, 3}, {1, 2, 0}))},
        {Matrix{{2, 2}, {2, 2}}, ScaledAllOnes{2.0}},
    };
    const std::vector<ExtendedExponent> ps{ex(1), ExtendedExponent::from_ratio(3, 2), ex(2), ex(4), inf};
    for (const auto& [a, _] : cases) {
        const auto cls = classify(a);
        for (const auto& p : ps)
            for (const auto& q : ps) {
                const auto e = closed_form_norm(cls, a.size(), p, q);
                if (!e)
                    continue;
                REQUIRE(e->witness);
                const auto w = oracle::to_vec(*e->witness);
                const double pe = p.is_infinite() ? oracle::inf : p.value();
                const double qe = q.is_infinite() ? oracle::inf : q.value();
                CHECK(oracle::norm(w, pe) == doctest::Approx(1.0).epsilon(1e-10));
                CHECK(oracle::ratio(a, w, pe, qe) == doctest::Approx(e->value).epsilon(1e-9));
            }
    }
}

TEST_CASE("all ones vector")
{
    CHECK(all_ones_vector(3) == ComplexVector{1.0, 1.0, 1.0});
    CHECK(vector_norm(all_ones_vector(3), ExtendedExponent(4.0)) == doctest::Approx(std::pow(3.0, 0.25)));
    CHECK(oracle::loshu().apply(all_ones_vector(3)) == ComplexVector{15.0, 15.0, 15.0});
}

TEST_CASE("magic-squared corners")
{
    const auto cls = classify(oracle::loshu());
    for (double p : {1.0, 1.25, 2.0, 3.0, 7.5}) {
        CHECK(closed_form_norm(cls, 3, ex(p), ex(p))->value == doctest::Approx(15.0).epsilon(1e-14));
        CHECK(closed_form_norm(cls, 3, inf, ex(p))->value ==
              doctest::Approx(15.0 * std::pow(3.0, 1.0 / p)).epsilon(1e-14));
    }
}

TEST_CASE("classification is tolerance-monotone")
{
    Rng rng(33);
    const double tols[] = {0.0, 1e-12, 1e-9, 1e-6, 1e-3, 1e-2, 0.1, 0.4};
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 2 + rng.index(3);
        double alpha = 0.0;
        Matrix a;
        switch (t % 4) {
        case 0: a = random_magic(n, rng, alpha); break;
        case 1: a = random_phased_permutation(n, rng); break;
        case 2: a = Matrix::identity(n); break;
        default: a = make_circulant(std::vector<double>(n, 1.5), [&] {
                     std::vector<std::size_t> s(n);
                     for (std::size_t i = 0; i < n; ++i)
                         s[i] = (i + 1) % n;
                     return s;
                 }());
        }
        const double noise = std::pow(10.0, -rng.uniform(3.0, 13.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) += noise * cplx(rng.uniform(), 0.0);

        bool magic = false, perm = false, ident = false, ones = false, circ = false;
        for (double tol : tols) {
            const bool m = match_magic_squared(a, tol).has_value();
            const bool p = match_unitary_permutation(a, tol).has_value();
            const bool i = matches_identity(a, tol);
            const bool o = match_scaled_all_ones(a, tol).has_value();
            const bool c = match_circulant(a, tol).has_value();
            CHECK((!magic || m));
            CHECK((!perm || p));
            CHECK((!ident || i));
            CHECK((!ones || o));
            CHECK((!circ || c));
            magic = m, perm = p, ident = i, ones = o, circ = c;
        }
        if (t % 4 != 1)
            CHECK(magic);
    }
}

TEST_CASE("permutation similarity keeps magic squares")
{
    Rng rng(34);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + rng.index(5);
        double alpha = 0.0;
        const Matrix a = t == 0 ? oracle::loshu() : random_magic(n, rng, alpha);
        if (t == 0)
            alpha = 15.0;
        const Matrix b = permute(a, shuffled(a.size(), rng), shuffled(a.size(), rng));
        const auto m = match_magic_squared(b, default_classify_tolerance);
        REQUIRE(m);
        CHECK(m->alpha == doctest::Approx(alpha).epsilon(1e-14));
        const auto c = classify(b);
        const bool magic_like = holds<MagicSquared>(c) || holds<Circulant>(c) || holds<ScaledAllOnes>(c) ||
                                holds<UnitaryPermutation>(c) || holds<Identity>(c);
        CHECK(magic_like);
        if (holds<MagicSquared>(c))
            CHECK(std::get<MagicSquared>(c).alpha == doctest::Approx(alpha).epsilon(1e-14));
    }
}

TEST_CASE("non-magic inputs are rejected")
{
    CHECK_FALSE(match_magic_squared(Matrix{{1, 2}, {3, 4}}, 1e-9));
    CHECK_FALSE(match_magic_squared(Matrix{{2, -1}, {-1, 2}}, 1e-9));
    Matrix complex_entry = Matrix{{1, 1}, {1, 1}};
    complex_entry(0, 0) = cplx(1.0, 0.5);
    CHECK_FALSE(match_magic_squared(complex_entry, 1e-9));
    CHECK(match_magic_squared(Matrix{{1 + 1e-12, 1}, {1, 1 - 1e-12}}, 1e-9));
    CHECK(match_magic_squared(Matrix{{-1e-12, 2}, {2, -1e-12}}, 1e-9));
}

TEST_CASE("format complex")
{
    CHECK(format_complex(cplx(1.5, 0.0)) == "1.5");
    CHECK(format_complex(cplx(0.0, -2.0)) == "-2i");
    CHECK(format_complex(cplx(1.0, 2.0)) == "1+2i");
    CHECK(format_complex(cplx(1.0, -2.0)) == "1-2i");
}
