#pragma once

// Prawitz area sums and the univalence criterion
//
//   T_N(zeta) = sum_{n=1}^{N} (n - lam) |A_n(lam, f, zeta)|^2 <= lam,
//
// where A_n = Phi_n(f o sigma_zeta; 0) is evaluated through the literal shifted
// double sum of Phi_k(f; zeta).

#include <string>
#include <vector>

#include "univalence/catalog.hpp"
#include "univalence/numeric.hpp"

namespace univalence {

enum class Verdict { consistent, violated, indeterminate };

std::string to_string(Verdict v);

struct CriterionReport {
    double lambda = 0.0;
    Complex zeta;
    int truncation = 0;
    std::vector<Complex> terms; // A_1..A_N
    double partial_sum = 0.0;   // T_N
    double budget = 0.0;        // lambda
    double margin = 0.0;        // lambda - T_N
    double sup_abs_term = 0.0;  // max |A_n|
    Verdict verdict = Verdict::indeterminate;
};

inline constexpr double default_criterion_tol = 1e-9;
inline constexpr double default_scan_epsilon = 0.05;

/// sum_{n=1}^{N} (n - lam) |a_n(lam)|^2 with [z/f(z)]^lam = 1 + sum a_n z^n; f must be in S.
double prawitz_sum_s(const CatalogFunction &fn, double lambda, int N);

/// Decimal digits the shifted sum for A_1..A_N needs at zeta, estimated from
/// the absolute size of its summands (0 when double precision suffices).
int criterion_working_digits(const CatalogFunction &fn, double lambda, Complex zeta, int N);

/// A_0..A_N (A_0 = 1). Runs in extended precision when the shifted sum cancels.
std::vector<Complex> criterion_terms(const CatalogFunction &fn, double lambda, Complex zeta, int N);

/// Verdict: consistent when T_N <= lam + tol. Otherwise violated, provided every
/// weight n - lam beyond N is non-negative (always true for lam <= 1, and for
/// lam > 1 once N + 1 >= lam); otherwise indeterminate.
CriterionReport univalence_criterion(const CatalogFunction &fn, double lambda, Complex zeta, int N,
                                     double tol = default_criterion_tol);

class ZetaGrid
{
public:
    ZetaGrid(std::vector<double> radii, int angles);

    /// |zeta| in {0, 0.2, 0.4, 0.6} x 16 angles.
    static ZetaGrid standard();
    /// "default" or "r1,r2,...xM".
    static ZetaGrid parse(const std::string &text);

    /// Radius 0 contributes a single point; other radii M equally spaced angles from 0.
    std::vector<Complex> points() const;
    const std::vector<double> &radii() const { return radii_; }
    int angles() const { return angles_; }

private:
    std::vector<double> radii_;
    int angles_;
};

struct ScanRow {
    Complex zeta;
    double partial_sum = 0.0;
    double margin = 0.0;
    Verdict verdict = Verdict::indeterminate;
};

struct ScanTable {
    std::string function_id;
    double lambda = 0.0;
    int truncation = 0;
    std::vector<ScanRow> rows; // grid order
    bool full_mapping_consistent = false;
    double epsilon = 0.0;
};

/// univalence_criterion over every grid point, rows in grid order.
ScanTable criterion_scan(const CatalogFunction &fn, double lambda, const ZetaGrid &grid, int N,
                         double tol = default_criterion_tol);

/// criterion_scan restricted to lam <= 1, flagging whether every gap lam - T_N
/// lies in [-tol, epsilon].
ScanTable fullmap_scan(const CatalogFunction &fn, double lambda, const ZetaGrid &grid, int N,
                       double tol = default_criterion_tol, double epsilon = default_scan_epsilon);

/// max_{1<=n<=N} |A_n|.
double boundedness_probe(const CatalogFunction &fn, double lambda, Complex zeta, int N);

struct DecayRow {
    int n = 0;
    double phi_lhs = 0.0; // (1-|z|^2)^{n+1} |phi_n|
    double phi_rhs = 0.0;
    double Phi_lhs = 0.0; // (1-|z|^2)^n |Phi_n|
    double Phi_rhs = 0.0;
};

struct DecayReport {
    Complex z;
    double lambda = 0.0;
    std::vector<DecayRow> rows; // n = 1..N
    double worst_slack = 0.0;   // min over rows of rhs - lhs
};

/// Coefficient decay bounds for univalent f at z, n = 1..N, lam in (0, 1).
DecayReport decay_bound_checks(const CatalogFunction &fn, Complex z, int N, double lambda);

} // namespace univalence
