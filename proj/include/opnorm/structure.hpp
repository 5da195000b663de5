#pragma once
// Structured matrix classes with closed-form (p,q)-norms.

#include "opnorm/matrix.hpp"
#include "opnorm/norm_estimate.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace opnorm {

/// Entrywise nonnegative, every row and column sums to alpha.
struct MagicSquared {
    double alpha = 0.0;
};

struct Identity {};

/// Row i holds a single unit-modulus entry phases[i] in column sigma[i].
struct UnitaryPermutation {
    std::vector<std::size_t> sigma; // 0-based images
    std::vector<cplx> phases;
};

/// entry(i, j) = generators[sigma^(i+1)(j)] in 0-based indices, sigma an n-cycle.
/// The last row equals the generators since sigma^n = id.
struct Circulant {
    std::vector<double> generators;
    std::vector<std::size_t> sigma;
};

/// Every entry equals a.
struct ScaledAllOnes {
    double a = 0.0;
};

struct General {};

using MatrixClass = std::variant<Identity, UnitaryPermutation, ScaledAllOnes, Circulant, MagicSquared, General>;

inline constexpr double default_classify_tolerance = 1e-9;

/// Most specific class, tested in the order
/// Identity, UnitaryPermutation, ScaledAllOnes, Circulant, MagicSquared, General.
MatrixClass classify(const Matrix& a, double tol = default_classify_tolerance);

// Per-class tests used by classify. Each one accepts more matrices as tol grows.
bool matches_identity(const Matrix& a, double tol);
std::optional<UnitaryPermutation> match_unitary_permutation(const Matrix& a, double tol);
std::optional<ScaledAllOnes> match_scaled_all_ones(const Matrix& a, double tol);
std::optional<Circulant> match_circulant(const Matrix& a, double tol);
std::optional<MagicSquared> match_magic_squared(const Matrix& a, double tol);

/// Builds the circulant matrix for generators and an n-cycle sigma (0-based images).
Matrix make_circulant(const std::vector<double>& generators, const std::vector<std::size_t>& sigma);

/// (1, 1, ..., 1).
ComplexVector all_ones_vector(std::size_t n);

/// Closed-form ||A||_{p,q} for a structured class, or nullopt where the class
/// has no formula at (p, q). Returned estimates are Exact with method
/// "closed-form" and a witness of unit p-norm.
std::optional<NormEstimate> closed_form_norm(const MatrixClass& cls, std::size_t n, const ExtendedExponent& p,
                                             const ExtendedExponent& q);

/// "magic-squared alpha=15", "circulant a=(1,2,3) sigma=(1 2 3)", ...
std::string describe(const MatrixClass& cls);

/// Formats a complex number as "a", "bi" or "a+bi" with 12 significant digits.
std::string format_complex(cplx z);

} // namespace opnorm
