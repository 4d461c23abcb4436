#include "univalence/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <sstream>
#include <stdexcept>

#include "univalence/error.hpp"
#include "univalence/sequences.hpp"
#include "univalence/transforms.hpp"

namespace univalence {

namespace {

void validate(double lambda, Complex zeta, int N)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("lambda must be positive");
    }
    if (N < 1) {
        throw std::invalid_argument("truncation N must be at least 1");
    }
    require_in_disk(zeta, "zeta");
}

template <class C>
std::vector<Complex> terms_with(const CatalogFunction &fn, double lambda, Complex zeta, int N)
{
    const auto f = fn.template series<C>(zeta, N + 1);
    auto phi = phi_capital_coefficients<C>(f, lambda, N);
    phi[0] = C(1);
    const auto a = shifted_phi_sum<C>(std::span<const C>(phi), lambda, zeta, 0.0, N);
    std::vector<Complex> out(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        out[n] = to_complex(a[n]);
    }
    out[0] = 1.0;
    return out;
}

} // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::consistent:
        return "consistent";
    case Verdict::violated:
        return "violated";
    case Verdict::indeterminate:
        return "indeterminate";
    }
    return "?";
}

double prawitz_sum_s(const CatalogFunction &fn, double lambda, int N)
{
    validate(lambda, 0.0, N);
    if (!fn.normalized()) {
        throw std::invalid_argument("prawitz_sum_s: normalization violated, need f(0) = 0 and f'(0) = 1 (" + fn.id() +
                                    ")");
    }
    // [z/f(z)]^lam = [f'(0) z / (f(z) - f(0))]^lam
    const auto a = phi_capital_coefficients(series_at(fn, 0.0, N + 1), lambda, N);
    CompensatedSum sum;
    for (int n = 1; n <= N; ++n) {
        sum.add((n - lambda) * std::norm(a[static_cast<std::size_t>(n)]));
    }
    return sum.value();
}

int criterion_working_digits(const CatalogFunction &fn, double lambda, Complex zeta, int N)
{
    validate(lambda, zeta, N);
    const auto f = series_at(fn, zeta, N + 1);
    require_locally_univalent(f);
    const auto phi = phi_capital_majorant(f, lambda, N);

    // Bound the summands of the shifted sum in absolute value.
    const auto n_terms = static_cast<std::size_t>(N) + 1;
    const long double r = std::abs(zeta);
    const long double s = 1.0L - r * r;
    std::vector<long double> inner(n_terms, 0.0L), pascal, pow_r(n_terms), pow_s(n_terms);
    pow_r[0] = pow_s[0] = 1.0L;
    for (std::size_t i = 1; i < n_terms; ++i) {
        pow_r[i] = pow_r[i - 1] * r;
        pow_s[i] = pow_s[i - 1] * s;
    }
    inner[0] = 1.0L;
    for (std::size_t j = 1; j < n_terms; ++j) {
        pascal.push_back(1.0L);
        for (std::size_t i = pascal.size() - 1; i-- > 1;) {
            pascal[i] += pascal[i - 1];
        }
        long double acc = 0.0L;
        for (std::size_t k = 1; k <= j; ++k) {
            acc += pascal[k - 1] * pow_r[j - k] * pow_s[k] * phi[k];
        }
        inner[j] = acc;
    }
    long double worst = 0.0L;
    long double binom = 1.0L;
    std::vector<long double> binom_abs(n_terms);
    for (std::size_t m = 0; m < n_terms; ++m) {
        binom_abs[m] = std::fabs(binom);
        binom = binom * (static_cast<long double>(lambda) - static_cast<long double>(m)) / static_cast<long double>(m + 1);
    }
    for (std::size_t n = 1; n < n_terms; ++n) {
        long double acc = 0.0L;
        for (std::size_t j = 0; j <= n; ++j) {
            acc += binom_abs[n - j] * pow_r[n - j] * inner[j];
        }
        worst = std::max({worst, acc * static_cast<long double>(n + 1), phi[n]});
    }
    return digits_for_loss(static_cast<double>(std::log10(std::max(worst, 1.0L))));
}

std::vector<Complex> criterion_terms(const CatalogFunction &fn, double lambda, Complex zeta, int N)
{
    const int digits = criterion_working_digits(fn, lambda, zeta, N);
    return with_working_digits(digits, [&]<class C>() { return terms_with<C>(fn, lambda, zeta, N); });
}

CriterionReport univalence_criterion(const CatalogFunction &fn, double lambda, Complex zeta, int N, double tol)
{
    const auto a = criterion_terms(fn, lambda, zeta, N);
    CriterionReport report;
    report.lambda = lambda;
    report.zeta = zeta;
    report.truncation = N;
    report.terms.assign(a.begin() + 1, a.end());
    report.budget = lambda;

    CompensatedSum sum;
    for (int n = 1; n <= N; ++n) {
        const double abs_a = std::abs(a[static_cast<std::size_t>(n)]);
        sum.add((n - lambda) * abs_a * abs_a);
        report.sup_abs_term = std::max(report.sup_abs_term, abs_a);
    }
    report.partial_sum = sum.value();
    report.margin = lambda - report.partial_sum;

    // Past n = N every weight n - lam is non-negative once N + 1 >= lam, so T_N
    // can only grow from there.
    const bool tail_nonnegative = N + 1 >= lambda;
    if (report.partial_sum <= lambda + tol) {
        report.verdict = Verdict::consistent;
    } else {
        report.verdict = tail_nonnegative ? Verdict::violated : Verdict::indeterminate;
    }
    return report;
}

ZetaGrid::ZetaGrid(std::vector<double> radii, int angles) : radii_(std::move(radii)), angles_(angles)
{
    if (radii_.empty()) {
        throw std::invalid_argument("grid: at least one radius is required");
    }
    for (double r : radii_) {
        if (!(r >= 0.0 && r < 1.0)) {
            throw std::invalid_argument("grid: radii must lie in [0, 1)");
        }
    }
    if (angles_ < 1) {
        throw std::invalid_argument("grid: angle count must be at least 1");
    }
}

ZetaGrid ZetaGrid::standard()
{
    return {{0.0, 0.2, 0.4, 0.6}, 16};
}

ZetaGrid ZetaGrid::parse(const std::string &text)
{
    if (text == "default") {
        return standard();
    }
    const auto x = text.rfind('x');
    if (x == std::string::npos) {
        throw std::invalid_argument("grid: expected 'default' or 'r1,r2,...xM', got '" + text + "'");
    }
    std::vector<double> radii;
    std::stringstream list(text.substr(0, x));
    std::string item;
    while (std::getline(list, item, ',')) {
        std::size_t used = 0;
        double r = 0.0;
        try {
            r = std::stod(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != item.size()) {
            throw std::invalid_argument("grid: bad radius '" + item + "'");
        }
        radii.push_back(r);
    }
    std::size_t used = 0;
    int angles = 0;
    const std::string tail = text.substr(x + 1);
    try {
        angles = std::stoi(tail, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != tail.size()) {
        throw std::invalid_argument("grid: bad angle count '" + tail + "'");
    }
    return {std::move(radii), angles};
}

std::vector<Complex> ZetaGrid::points() const
{
    std::vector<Complex> out;
    for (double r : radii_) {
        if (r == 0.0) {
            out.emplace_back(0.0, 0.0);
            continue;
        }
        for (int a = 0; a < angles_; ++a) {
            out.push_back(std::polar(r, 2.0 * std::numbers::pi * a / angles_));
        }
    }
    return out;
}

ScanTable criterion_scan(const CatalogFunction &fn, double lambda, const ZetaGrid &grid, int N, double tol)
{
    ScanTable table;
    table.function_id = fn.id();
    table.lambda = lambda;
    table.truncation = N;
    for (const Complex zeta : grid.points()) {
        const auto report = univalence_criterion(fn, lambda, zeta, N, tol);
        table.rows.push_back({zeta, report.partial_sum, report.margin, report.verdict});
    }
    return table;
}

ScanTable fullmap_scan(const CatalogFunction &fn, double lambda, const ZetaGrid &grid, int N, double tol,
                       double epsilon)
{
    if (lambda > 1.0) {
        throw std::invalid_argument("fullmap_scan: lambda must be at most 1");
    }
    auto table = criterion_scan(fn, lambda, grid, N, tol);
    table.epsilon = epsilon;
    table.full_mapping_consistent = std::all_of(table.rows.begin(), table.rows.end(), [&](const ScanRow &row) {
        return row.margin >= -tol && row.margin <= epsilon;
    });
    return table;
}

double boundedness_probe(const CatalogFunction &fn, double lambda, Complex zeta, int N)
{
    const auto a = criterion_terms(fn, lambda, zeta, N);
    double sup = 0.0;
    for (int n = 1; n <= N; ++n) {
        sup = std::max(sup, std::abs(a[static_cast<std::size_t>(n)]));
    }
    return sup;
}

DecayReport decay_bound_checks(const CatalogFunction &fn, Complex z, int N, double lambda)
{
    if (!fn.flags().univalent_on_disk) {
        throw std::invalid_argument("decay bounds need a univalent function, got " + fn.id());
    }
    if (!(lambda > 0.0 && lambda < 1.0)) {
        throw std::invalid_argument("decay bounds need lambda in (0, 1)");
    }
    if (N < 1) {
        throw std::invalid_argument("decay bounds need N >= 1");
    }
    require_in_disk(z, "z");
    const auto f = series_at(fn, z, N + 2);
    const auto phi = aharonov_phi(f, N).values;
    const auto big_phi = phi_capital_direct(f, lambda, N).values;
    const double r = std::abs(z);
    const double s = 1.0 - r * r;

    DecayReport report{z, lambda, {}, 0.0};
    double worst = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= N; ++n) {
        DecayRow row;
        row.n = n;
        row.phi_lhs = std::pow(s, n + 1) * std::abs(phi[static_cast<std::size_t>(n)]);
        for (int k = 1; k <= n; ++k) {
            row.phi_rhs += gen_binomial(n - 1, k - 1) * std::pow(r, n - k) / std::sqrt(static_cast<double>(k));
        }
        row.Phi_lhs = std::pow(s, n) * std::abs(big_phi[static_cast<std::size_t>(n)]);
        for (int j = 0; j <= n; ++j) {
            double inner = 0.0;
            for (int k = 0; k <= j; ++k) {
                inner += gen_binomial(j - 1, j - k) * std::sqrt(lambda) / std::sqrt(std::abs(k - lambda)) *
                         std::pow(r, n - k);
            }
            row.Phi_rhs += gen_binomial(lambda, n - j) * inner;
        }
        worst = std::min({worst, row.phi_rhs - row.phi_lhs, row.Phi_rhs - row.Phi_lhs});
        report.rows.push_back(row);
    }
    report.worst_slack = worst;
    return report;
}

} // namespace univalence
