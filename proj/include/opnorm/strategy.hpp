#pragma once
// End-to-end norm queries, unit-square scans and the verification suites
// behind the command-line tool.

#include "opnorm/estimate.hpp"
#include "opnorm/structure.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace opnorm {

/// classify -> closed form -> exact lines -> interpolation bracket.
NormEstimate evaluate_norm(const Matrix& a, const ExtendedExponent& p, const ExtendedExponent& q,
                           const EstimatorConfig& cfg = {}, double tol = default_classify_tolerance);

struct ScanCell {
    double u = 0.0;
    double v = 0.0;
    NormEstimate estimate;
};

/// evaluate_norm on the grid u, v in {k / resolution}, ordered by (u, v).
/// Cells are evaluated on worker threads; the result does not depend on
/// scheduling.
std::vector<ScanCell> scan_grid(const Matrix& a, int resolution, const EstimatorConfig& cfg = {},
                                double tol = default_classify_tolerance, unsigned threads = 0);

/// Header u,v,value,status,method then one row per cell.
void write_scan_csv(std::ostream& out, const std::vector<ScanCell>& cells);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Suites: "interpolation", "strictness", "cross-check", "all".
/// Throws DomainError for an unknown suite name.
std::vector<CheckResult> run_verify_suite(const Matrix& a, std::string_view suite, const EstimatorConfig& cfg = {},
                                          double tol = default_classify_tolerance);

/// "%.12g" formatting used for all printed numbers.
std::string format_number(double v);

} // namespace opnorm
