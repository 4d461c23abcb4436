#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "univalence/acceptance.hpp"
#include "univalence/catalog.hpp"
#include "univalence/criteria.hpp"
#include "univalence/error.hpp"
#include "univalence/quadrature.hpp"
#include "univalence/sequences.hpp"

namespace univalence {

namespace {

using nlohmann::ordered_json;

constexpr int schema_version = 1;

std::string fmt17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
    return buf;
}

// nlohmann prints the shortest round-trip form; numbers here always carry 17 digits.
void write_json(std::ostream &os, const ordered_json &j, int indent = 0)
{
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    const std::string close(static_cast<std::size_t>(indent), ' ');
    switch (j.type()) {
    case ordered_json::value_t::object: {
        if (j.empty()) {
            os << "{}";
            return;
        }
        if (j.size() == 2 && j.contains("re") && j.contains("im")) {
            os << "{\"re\": " << fmt17(j["re"].get<double>()) << ", \"im\": " << fmt17(j["im"].get<double>()) << "}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (const auto &[key, value] : j.items()) {
            os << (first ? "" : ",\n") << pad << ordered_json(key).dump() << ": ";
            write_json(os, value, indent + 2);
            first = false;
        }
        os << "\n" << close << "}";
        return;
    }
    case ordered_json::value_t::array: {
        if (j.empty()) {
            os << "[]";
            return;
        }
        os << "[\n";
        bool first = true;
        for (const auto &value : j) {
            os << (first ? "" : ",\n") << pad;
            write_json(os, value, indent + 2);
            first = false;
        }
        os << "\n" << close << "]";
        return;
    }
    case ordered_json::value_t::number_float: {
        const double x = j.get<double>();
        if (std::isfinite(x)) {
            os << fmt17(x);
        } else {
            os << "null";
        }
        return;
    }
    default:
        os << j.dump();
    }
}

ordered_json cjson(Complex z)
{
    return {{"re", z.real()}, {"im", z.imag()}};
}

ordered_json cjson(const std::vector<Complex> &v)
{
    auto arr = ordered_json::array();
    for (const Complex z : v) {
        arr.push_back(cjson(z));
    }
    return arr;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(std::ostream &os, const Table &t)
{
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        os << (i ? "," : "") << t.header[i];
    }
    os << "\n";
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << row[i];
        }
        os << "\n";
    }
}

struct Output {
    ordered_json json;
    Table table;
};

// Raw option text, converted after parsing so errors can name the field.
struct Options {
    std::string fn = "koebe";
    std::optional<std::string> lambda;
    std::string zeta = "0";
    std::string z = "0";
    int N = 16;
    int count = 8;
    std::string kind = "phi";
    std::string grid = "default";
    std::string mesh = "256,256,2";
    double tol = default_criterion_tol;
    double epsilon = default_scan_epsilon;
    double delta = -1.0;
    std::string format;
    std::string out;
};

template <class F>
auto field(const char *name, F &&convert)
{
    try {
        return convert();
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(std::string(name) + ": " + e.what());
    }
}

CatalogFunction get_fn(const Options &o)
{
    return field("--fn", [&] { return parse_function(o.fn); });
}

Complex get_point(const char *name, const std::string &text)
{
    return field(name, [&] {
        const Complex z = parse_complex(text);
        require_in_disk(z, "point");
        return z;
    });
}

double get_lambda(const Options &o)
{
    if (!o.lambda) {
        throw std::invalid_argument("--lambda: required for this command");
    }
    return field("--lambda", [&] {
        std::size_t used = 0;
        const double v = std::stod(*o.lambda, &used);
        if (used != o.lambda->size() || !(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("expected a positive number, got '" + *o.lambda + "'");
        }
        return v;
    });
}

MeshSpec get_mesh(const Options &o)
{
    return field("--mesh", [&] {
        MeshSpec m;
        char extra = 0;
        if (std::sscanf(o.mesh.c_str(), "%d,%d,%lf%c", &m.radial_nodes, &m.angular_nodes, &m.grading, &extra) != 3) {
            throw std::invalid_argument("expected R,A,grading, got '" + o.mesh + "'");
        }
        m.validate();
        return m;
    });
}

void require_positive(const char *name, int v, int minimum = 1)
{
    if (v < minimum) {
        throw std::invalid_argument(std::string(name) + ": must be at least " + std::to_string(minimum));
    }
}

ordered_json header(const char *command, const CatalogFunction &fn)
{
    ordered_json j;
    j["schema"] = schema_version;
    j["command"] = command;
    j["function"] = fn.id();
    return j;
}

ordered_json mesh_json(const MeshSpec &m)
{
    return {{"radial_nodes", m.radial_nodes},
            {"angular_nodes", m.angular_nodes},
            {"grading", m.grading},
            {"center", cjson(m.center)}};
}

Output cmd_series(const Options &o)
{
    const auto fn = get_fn(o);
    const Complex z = get_point("--z", o.z);
    require_positive("--N", o.N, 0);
    const auto s = series_at(fn, z, o.N);
    Output out{header("series", fn), {{"k", "re", "im"}, {}}};
    out.json["center"] = cjson(z);
    out.json["order"] = o.N;
    out.json["coefficients"] = cjson(s.coeffs());
    for (int k = 0; k <= o.N; ++k) {
        out.table.rows.push_back({std::to_string(k), fmt17(s[k].real()), fmt17(s[k].imag())});
    }
    return out;
}

Output cmd_sequence(const Options &o)
{
    const auto fn = get_fn(o);
    const Complex z = get_point("--z", o.z);
    require_positive("--count", o.count, 0);
    SequenceSet set;
    if (o.kind == "phi") {
        set = aharonov_phi(series_at(fn, z, o.count + 2), o.count);
    } else if (o.kind == "Phi") {
        set = phi_capital_direct(series_at(fn, z, o.count + 1), get_lambda(o), o.count);
    } else if (o.kind == "Psi") {
        set = psi_sequence(fn, z, o.count);
    } else {
        throw std::invalid_argument("--kind: expected phi, Phi or Psi, got '" + o.kind + "'");
    }
    const auto inv = local_invariants(series_at(fn, z, 3));
    Output out{header("sequence", fn), {{"n", "re", "im"}, {}}};
    out.json["kind"] = to_string(set.kind);
    if (set.lambda) {
        out.json["lambda"] = *set.lambda;
    }
    out.json["center"] = cjson(z);
    out.json["pre_schwarzian"] = cjson(inv.pre_schwarzian);
    out.json["schwarzian"] = cjson(inv.schwarzian);
    out.json["values"] = cjson(set.values);
    for (std::size_t n = 0; n < set.values.size(); ++n) {
        out.table.rows.push_back({std::to_string(n), fmt17(set.values[n].real()), fmt17(set.values[n].imag())});
    }
    return out;
}

Output cmd_criterion(const Options &o)
{
    const auto fn = get_fn(o);
    const double lambda = get_lambda(o);
    const Complex zeta = get_point("--zeta", o.zeta);
    require_positive("--N", o.N);
    const auto r = univalence_criterion(fn, lambda, zeta, o.N, o.tol);
    Output out{header("criterion", fn),
               {{"lambda", "zeta_re", "zeta_im", "N", "T_N", "budget", "margin", "sup_abs_term", "verdict"}, {}}};
    out.json["lambda"] = lambda;
    out.json["zeta"] = cjson(zeta);
    out.json["N"] = o.N;
    out.json["terms"] = cjson(r.terms);
    out.json["T_N"] = r.partial_sum;
    out.json["budget"] = r.budget;
    out.json["margin"] = r.margin;
    out.json["sup_abs_term"] = r.sup_abs_term;
    out.json["verdict"] = to_string(r.verdict);
    out.table.rows.push_back({fmt17(lambda), fmt17(zeta.real()), fmt17(zeta.imag()), std::to_string(o.N),
                              fmt17(r.partial_sum), fmt17(r.budget), fmt17(r.margin), fmt17(r.sup_abs_term),
                              to_string(r.verdict)});
    return out;
}

Output cmd_scan(const Options &o)
{
    const auto fn = get_fn(o);
    const double lambda = get_lambda(o);
    const auto grid = field("--grid", [&] { return ZetaGrid::parse(o.grid); });
    require_positive("--N", o.N);
    const auto table = lambda <= 1.0 ? fullmap_scan(fn, lambda, grid, o.N, o.tol, o.epsilon)
                                     : criterion_scan(fn, lambda, grid, o.N, o.tol);
    Output out{header("scan", fn), {{"zeta_re", "zeta_im", "T_N", "margin", "verdict"}, {}}};
    out.json["lambda"] = lambda;
    out.json["N"] = o.N;
    out.json["grid"] = o.grid;
    auto rows = ordered_json::array();
    for (const auto &row : table.rows) {
        rows.push_back({{"zeta", cjson(row.zeta)},
                        {"T_N", row.partial_sum},
                        {"margin", row.margin},
                        {"verdict", to_string(row.verdict)}});
        out.table.rows.push_back({fmt17(row.zeta.real()), fmt17(row.zeta.imag()), fmt17(row.partial_sum),
                                  fmt17(row.margin), to_string(row.verdict)});
    }
    out.json["rows"] = rows;
    if (lambda <= 1.0) {
        out.json["epsilon"] = table.epsilon;
        out.json["full_mapping_consistent"] = table.full_mapping_consistent;
    }
    return out;
}

Output cmd_bounds(const Options &o)
{
    const auto fn = get_fn(o);
    const double lambda = get_lambda(o);
    const Complex z = get_point("--z", o.z);
    require_positive("--N", o.N);
    const auto r = decay_bound_checks(fn, z, o.N, lambda);
    Output out{header("bounds", fn), {{"n", "phi_lhs", "phi_rhs", "Phi_lhs", "Phi_rhs"}, {}}};
    out.json["lambda"] = lambda;
    out.json["z"] = cjson(z);
    auto rows = ordered_json::array();
    for (const auto &row : r.rows) {
        rows.push_back({{"n", row.n},
                        {"phi_lhs", row.phi_lhs},
                        {"phi_rhs", row.phi_rhs},
                        {"Phi_lhs", row.Phi_lhs},
                        {"Phi_rhs", row.Phi_rhs}});
        out.table.rows.push_back({std::to_string(row.n), fmt17(row.phi_lhs), fmt17(row.phi_rhs), fmt17(row.Phi_lhs),
                                  fmt17(row.Phi_rhs)});
    }
    out.json["rows"] = rows;
    out.json["worst_slack"] = r.worst_slack;
    return out;
}

Output cmd_area(const Options &o)
{
    const auto fn = get_fn(o);
    const double lambda = get_lambda(o);
    const Complex z = get_point("--z", o.z);
    const auto r = prawitz_integral(fn, lambda, z, get_mesh(o), o.delta);
    Output out{header("area", fn), {{"lambda", "z_re", "z_im", "value", "error_estimate", "bound"}, {}}};
    out.json["lambda"] = lambda;
    out.json["z"] = cjson(z);
    out.json["value"] = r.value;
    out.json["error_estimate"] = r.error_estimate;
    out.json["bound"] = 1.0 / lambda;
    out.json["mesh"] = mesh_json(r.mesh);
    out.table.rows.push_back({fmt17(lambda), fmt17(z.real()), fmt17(z.imag()), fmt17(r.value),
                              fmt17(r.error_estimate), fmt17(1.0 / lambda)});
    return out;
}

Output cmd_grunsky(const Options &o)
{
    const auto fn = get_fn(o);
    const Complex z = get_point("--z", o.z);
    const auto r = psi_grunsky_identity_check(fn, z, o.N, get_mesh(o), o.delta);
    Output out{header("grunsky", fn),
               {{"z_re", "z_im", "N", "U_f", "error_estimate", "psi_sum", "scaled_norm", "residual"}, {}}};
    out.json["z"] = cjson(z);
    out.json["N"] = o.N;
    out.json["U_f"] = r.norm.value;
    out.json["error_estimate"] = r.norm.error_estimate;
    out.json["psi_sum"] = r.psi_sum;
    out.json["scaled_norm"] = r.scaled_norm;
    out.json["residual"] = r.residual;
    out.json["mesh"] = mesh_json(r.norm.mesh);
    out.table.rows.push_back({fmt17(z.real()), fmt17(z.imag()), std::to_string(o.N), fmt17(r.norm.value),
                              fmt17(r.norm.error_estimate), fmt17(r.psi_sum), fmt17(r.scaled_norm),
                              fmt17(r.residual)});
    return out;
}

void emit(const Output &result, const Options &o, const std::string &default_format, std::ostream &out)
{
    const std::string format = o.format.empty() ? default_format : o.format;
    std::ostringstream text;
    if (format == "json") {
        write_json(text, result.json);
        text << "\n";
    } else if (format == "csv") {
        write_csv(text, result.table);
    } else {
        throw std::invalid_argument("--format: expected json or csv, got '" + format + "'");
    }
    if (o.out.empty()) {
        out << text.str();
        return;
    }
    std::ofstream file(o.out);
    if (!file) {
        throw std::invalid_argument("--out: cannot open '" + o.out + "' for writing");
    }
    file << text.str();
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Coefficient sequences, Prawitz sums and univalence criteria for analytic functions on the disk"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--fn", o.fn, "catalog function, e.g. koebe, exp_scale:k=4");
        sub->add_option("--format", o.format, "json or csv");
        sub->add_option("--out", o.out, "write output to this file");
    };
    auto *series = app.add_subcommand("series", "Taylor coefficients of a catalog function");
    add_common(series);
    series->add_option("--z", o.z, "expansion center");
    series->add_option("--N", o.N, "order");

    auto *sequence = app.add_subcommand("sequence", "phi, Phi or Psi sequence at z");
    add_common(sequence);
    sequence->add_option("--kind", o.kind, "phi, Phi or Psi");
    sequence->add_option("--z", o.z, "center");
    sequence->add_option("--count", o.count, "last index");
    sequence->add_option("--lambda", o.lambda, "exponent for Phi");

    auto *criterion = app.add_subcommand("criterion", "partial sum T_N at one zeta");
    add_common(criterion);
    criterion->add_option("--lambda", o.lambda)->required();
    criterion->add_option("--zeta", o.zeta);
    criterion->add_option("--N", o.N);
    criterion->add_option("--tol", o.tol);

    auto *scan = app.add_subcommand("scan", "criterion over a zeta grid");
    add_common(scan);
    scan->add_option("--lambda", o.lambda)->required();
    scan->add_option("--grid", o.grid, "default or r1,r2,...xM");
    scan->add_option("--N", o.N);
    scan->add_option("--tol", o.tol);
    scan->add_option("--epsilon", o.epsilon, "full-mapping gap allowance");

    auto *bounds = app.add_subcommand("bounds", "coefficient decay bounds");
    add_common(bounds);
    bounds->add_option("--lambda", o.lambda)->required();
    bounds->add_option("--z", o.z);
    bounds->add_option("--N", o.N);

    auto *area = app.add_subcommand("area", "Prawitz integral at z");
    add_common(area);
    area->add_option("--lambda", o.lambda)->required();
    area->add_option("--z", o.z);
    area->add_option("--mesh", o.mesh, "R,A,grading");
    area->add_option("--delta", o.delta, "near-diagonal series radius");

    auto *grunsky = app.add_subcommand("grunsky", "Grunsky norm and the Psi identity");
    add_common(grunsky);
    grunsky->add_option("--z", o.z);
    grunsky->add_option("--N", o.N, "last Psi index (default 64, at least 32)");
    grunsky->add_option("--mesh", o.mesh, "R,A,grading");
    grunsky->add_option("--delta", o.delta, "near-diagonal series radius");

    auto *selftest = app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (selftest->parsed()) {
            const auto results = run_acceptance(out);
            for (const auto &r : results) {
                if (!r.passed) {
                    return 1;
                }
            }
            return 0;
        }
        if (series->parsed()) {
            emit(cmd_series(o), o, "json", out);
        } else if (sequence->parsed()) {
            emit(cmd_sequence(o), o, "json", out);
        } else if (criterion->parsed()) {
            emit(cmd_criterion(o), o, "json", out);
        } else if (scan->parsed()) {
            emit(cmd_scan(o), o, "csv", out);
        } else if (bounds->parsed()) {
            emit(cmd_bounds(o), o, "json", out);
        } else if (area->parsed()) {
            emit(cmd_area(o), o, "json", out);
        } else if (grunsky->parsed()) {
            if (grunsky->get_option("--N")->count() == 0) {
                o.N = 64;
            }
            emit(cmd_grunsky(o), o, "json", out);
        }
    } catch (const NumericError &e) {
        err << "numeric failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument &e) {
        err << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        err << "numeric failure: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace univalence
