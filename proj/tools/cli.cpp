#include "cli.hpp"

#include "szego/acceptance.hpp"
#include "szego/boundary_numerics.hpp"
#include "szego/division.hpp"
#include "szego/poly_io.hpp"
#include "szego/szego.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>

namespace szego::cli {

namespace {

using nlohmann::json;

constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

/// Bad input that is not a polynomial parse error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Polynomial parse error together with the text it came from.
struct AnnotatedParseError : std::runtime_error {
    AnnotatedParseError(const std::string& source, const std::string& text, const ParseError& e)
        : std::runtime_error(annotate(source, text, e)) {}

    static std::string annotate(const std::string& source, const std::string& text, const ParseError& e) {
        std::ostringstream os;
        os << source << ": parse error " << e.what() << "\n  " << text << "\n  " << std::string(e.position(), ' ')
           << "^";
        return os.str();
    }
};

struct Config {
    std::string ellipse;
    std::string ellipsoid_path;
    std::string poly;
    std::string poly_path;
    int nodes = 1024;
    int degree = 12;
    int quad_order = 48;
    std::optional<int> ambient_degree;
    std::optional<double> tol;
    std::string out_path;
    std::string format = "text";
    bool no_timestamp = false;
    std::vector<int> criteria;
};

struct Report {
    json data;
    std::vector<std::string> text;
    bool passed = true;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json read_json_file(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

Ellipse parse_ellipse_flag(const std::string& text) {
    const auto fields = split(text, ',');
    if (fields.size() != 2 && fields.size() != 4) throw UsageError("--ellipse expects a,b or a,b,h,k");
    std::vector<Rational> v;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        try {
            v.push_back(parse_rational(trim(fields[i])));
        } catch (const std::invalid_argument&) {
            throw UsageError("--ellipse: field " + std::to_string(i + 1) + " ('" + fields[i] +
                             "') is not a rational number");
        }
    }
    if (v.size() == 2) v.insert(v.end(), {Rational(0), Rational(0)});
    try {
        return Ellipse(v[0], v[1], v[2], v[3]);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--ellipse: ") + e.what());
    }
}

Ellipse load_ellipse(const Config& c) {
    if (!c.ellipse.empty()) return parse_ellipse_flag(c.ellipse);
    if (c.ellipsoid_path.empty()) throw UsageError("a domain is required (--ellipse or --ellipsoid)");
    try {
        return ellipse_from_json(read_json_file(c.ellipsoid_path));
    } catch (const std::invalid_argument& e) {
        throw UsageError(c.ellipsoid_path + ": " + e.what());
    } catch (const json::exception& e) {
        throw UsageError(c.ellipsoid_path + ": " + e.what());
    }
}

Ellipsoid load_ellipsoid(const Config& c) {
    if (!c.ellipse.empty()) return parse_ellipse_flag(c.ellipse).to_ellipsoid();
    if (c.ellipsoid_path.empty()) throw UsageError("a domain is required (--ellipse or --ellipsoid)");
    try {
        return ellipsoid_from_json(read_json_file(c.ellipsoid_path));
    } catch (const std::invalid_argument& e) {
        throw UsageError(c.ellipsoid_path + ": " + e.what());
    } catch (const json::exception& e) {
        throw UsageError(c.ellipsoid_path + ": " + e.what());
    }
}

/// The polynomial text and a label naming where it came from.
std::pair<std::string, std::string> poly_source(const Config& c) {
    if (!c.poly.empty()) return {c.poly, "--poly"};
    if (!c.poly_path.empty()) return {trim(read_file(c.poly_path)), c.poly_path};
    throw UsageError("a polynomial is required (--poly or --poly-file)");
}

template <typename Parse>
auto parse_with_location(const Config& c, Parse parse) {
    const auto [text, source] = poly_source(c);
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw AnnotatedParseError(source, text, e);
    }
}

PolyZZbar load_zzbar(const Config& c) {
    return parse_with_location(c, [](const std::string& t) { return parse_zzbar(t); });
}

json complex_json(cdouble z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json complex_list(const Eigen::VectorXcd& v) {
    json out = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(complex_json(v[k]));
    return out;
}

std::string complex_text(cdouble z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

std::string sci(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6e", x);
    return buf;
}

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Report dirichlet(const Config& c) {
    const Ellipsoid e = load_ellipsoid(c);
    const PolyRealN p = e.dim() == 2 ? parse_with_location(c, [](const std::string& t) {
        return zzbar_to_xy(parse_zzbar(t));
    })
                                     : parse_with_location(c, [&](const std::string& t) {
                                           return parse_real(t, e.dim());
                                       });
    const PolyRealN u = harmonic_extension(e, p);
    const bool harmonic = laplacian(u).is_zero();
    const bool divisible = divide_exact(p - u, e.defining_poly()).has_value();

    Report r;
    r.passed = harmonic && divisible;
    r.data = {{"command", "dirichlet"},
              {"domain", to_json(e)},
              {"input", to_pretty_string(p)},
              {"extension", to_pretty_string(u)},
              {"extension_terms", to_json(u)},
              {"certificate", {{"harmonic", harmonic}, {"r_divides_p_minus_u", divisible}}},
              {"passed", r.passed}};
    r.text = {"extension: " + to_pretty_string(u),
              std::string("certificate: harmonic ") + (harmonic ? "ok" : "FAILED") + ", r divides p - u " +
                  (divisible ? "ok" : "FAILED")};
    return r;
}

Report szego(const Config& c) {
    const Ellipse e = load_ellipse(c);
    const PolyZZbar f = load_zzbar(c);
    SzegoOptions options;
    options.ambient_degree = c.ambient_degree;
    SzegoDecomposition d;
    try {
        d = szego_project(e, f, options);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    const auto cert = verify_decomposition(d, e);

    Report r;
    r.passed = cert.passed();
    json checks = json::array();
    for (const auto& check : cert.checks)
        checks.push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
    r.data = {{"command", "szego"},
              {"ellipse", to_json(e)},
              {"input", to_pretty_string(f)},
              {"N", d.N},
              {"projection", to_pretty_string(d.projection)},
              {"preimage", to_pretty_string(d.preimage)},
              {"cofactor", to_pretty_string(d.cofactor)},
              {"projection_terms", to_json(d.projection)},
              {"certificate", {{"passed", cert.passed()}, {"residual", to_pretty_string(cert.residual)}, {"checks", checks}}},
              {"passed", r.passed}};
    r.text = {"projection: " + to_pretty_string(d.projection), "preimage: " + to_pretty_string(d.preimage),
              "cofactor: " + to_pretty_string(d.cofactor), "N: " + std::to_string(d.N),
              std::string("certificate: ") + (cert.passed() ? "passed" : "FAILED")};
    for (const auto& check : cert.checks)
        r.text.push_back("  " + check.name + ": " + (check.passed ? "ok" : "FAILED") +
                         (check.detail.empty() ? "" : " (" + check.detail + ")"));
    return r;
}

Report verify(const Config& c) {
    const Ellipse e = load_ellipse(c);
    const PolyZZbar f = load_zzbar(c);
    const double tol = c.tol.value_or(1e-8);
    const auto cmp = compare_symbolic_numeric(e, f, c.nodes, c.degree);

    Report r;
    r.passed = cmp.max_coeff_dev < tol;
    r.data = {{"command", "verify"},
              {"ellipse", to_json(e)},
              {"input", to_pretty_string(f)},
              {"M", c.nodes},
              {"basis_degree", c.degree},
              {"exact_projection", to_pretty_string(cmp.exact.projection)},
              {"numeric_coefficients", complex_list(cmp.numeric.monomial_coefficients())},
              {"max_coeff_dev", cmp.max_coeff_dev},
              {"condition_estimate", cmp.numeric.condition_estimate},
              {"tolerance", tol},
              {"passed", r.passed}};
    r.text = {"exact projection: " + to_pretty_string(cmp.exact.projection),
              "max coefficient deviation: " + sci(cmp.max_coeff_dev) + " (tolerance " + sci(tol) + ")",
              "condition estimate: " + sci(cmp.numeric.condition_estimate),
              std::string("result: ") + (r.passed ? "passed" : "FAILED")};
    if (cmp.numeric.warning) {
        r.data["warning"] = *cmp.numeric.warning;
        r.text.push_back("warning: " + *cmp.numeric.warning);
    }
    return r;
}

Report experiment_szbar(const Config& c) {
    const Ellipse e = load_ellipse(c);
    const auto report = szbar_constancy_experiment(e, c.nodes, c.degree);
    const double floor =
        quadrature_floor(boundary_grid(matched_disc(e, c.nodes), c.nodes, Weighting::Unweighted), c.degree);
    // Constant exactly on discs.
    const bool expect_constant = e.is_disc();
    const bool constant = report.deviation_from_constant < 10 * floor;
    const bool separated = report.deviation_from_constant > 1e3 * floor;

    Report r;
    r.passed = expect_constant ? constant : separated;
    r.data = {{"experiment", "szbar"},
              {"ellipse", to_json(e)},
              {"M", c.nodes},
              {"basis_degree", c.degree},
              {"coefficients", complex_list(report.projection.monomial_coefficients())},
              {"deviations",
               {{"from_constant", report.deviation_from_constant},
                {"from_span_1_z", report.deviation_from_span_1_z},
                {"disc_floor", floor}}},
              {"condition_estimate", report.projection.condition_estimate},
              {"expected", expect_constant ? "constant" : "nonconstant"},
              {"passed", r.passed}};
    r.text = {"S zbar constant term: " + complex_text(report.projection.monomial_coefficients()[0]),
              "deviation from constant: " + sci(report.deviation_from_constant),
              "deviation from span{1, z}: " + sci(report.deviation_from_span_1_z),
              "disc floor: " + sci(floor),
              std::string("expected ") + (expect_constant ? "constant" : "nonconstant") + ": " +
                  (r.passed ? "confirmed" : "NOT CONFIRMED")};
    return r;
}

Report experiment_harmonic(const Config& c) {
    const Ellipse e = load_ellipse(c);
    const PolyRealN p = zzbar_to_xy(load_zzbar(c));
    const double tol = c.tol.value_or(1e-8);
    HarmonicCheckReport report;
    try {
        report = harmonic_szego_bergman_check(e, p, c.degree, c.nodes, c.quad_order);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }

    Report r;
    r.passed = report.max_deviation < tol;
    r.data = {{"experiment", "harmonic"},
              {"ellipse", to_json(e)},
              {"input", to_pretty_string(p)},
              {"M", c.nodes},
              {"basis_degree", c.degree},
              {"quad_order", c.quad_order},
              {"coefficients",
               {{"szego", complex_list(report.szego.monomial_coefficients())},
                {"bergman", complex_list(report.bergman.monomial_coefficients())}}},
              {"deviations", {{"max", report.max_deviation}}},
              {"condition_estimate", report.szego.condition_estimate},
              {"tolerance", tol},
              {"passed", r.passed}};
    r.text = {"max Szego/Bergman coefficient deviation: " + sci(report.max_deviation) + " (tolerance " + sci(tol) + ")",
              std::string("result: ") + (r.passed ? "passed" : "FAILED")};
    const auto m = report.szego.monomial_coefficients();
    for (Eigen::Index k = 0; k < m.size(); ++k)
        if (std::abs(m[k]) > tol) r.text.push_back("  z^" + std::to_string(k) + ": " + complex_text(m[k]));
    return r;
}

Report suite(const Config& c, std::ostream& live) {
    const bool stream = c.format == "text" && c.out_path.empty();
    const auto results = run_acceptance(c.criteria, [&](const CriterionResult& r) {
        if (stream) live << format_result(r) << std::endl;
    });
    Report r;
    json criteria = json::array();
    int passed = 0;
    for (const auto& res : results) {
        json entry = {{"id", res.id}, {"name", res.name}, {"passed", res.passed}, {"detail", res.detail}};
        if (!c.no_timestamp) entry["runtime_ms"] = res.runtime_ms;
        criteria.push_back(entry);
        if (res.passed) ++passed;
        if (!stream) r.text.push_back(format_result(res));
    }
    r.passed = passed == static_cast<int>(results.size());
    r.data = {{"command", "suite"}, {"criteria", criteria}, {"passed", r.passed}};
    r.text.push_back(std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed");
    return r;
}

void add_domain_options(CLI::App* app, Config& c) {
    auto* ellipse = app->add_option("--ellipse", c.ellipse, "Ellipse a,b,h,k (rationals)");
    app->add_option("--ellipsoid", c.ellipsoid_path, "Domain JSON file")->check(CLI::ExistingFile)->excludes(ellipse);
}

void add_poly_options(CLI::App* app, Config& c) {
    auto* poly = app->add_option("--poly", c.poly, "Polynomial in z, zbar or x, y");
    app->add_option("--poly-file", c.poly_path, "File holding the polynomial")->check(CLI::ExistingFile)->excludes(poly);
}

void add_numeric_options(CLI::App* app, Config& c) {
    app->add_option("--nodes", c.nodes, "Boundary nodes M")
        ->check([](const std::string& s) -> std::string {
            int m = 0;
            const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), m);
            if (ec != std::errc{} || end != s.data() + s.size()) return "must be an integer";
            return m >= 16 && m % 2 == 0 ? "" : "must be even and at least 16";
        });
    app->add_option("--degree", c.degree, "Basis degree")->check(CLI::NonNegativeNumber);
    app->add_option("--tol", c.tol, "Pass threshold")->check(CLI::PositiveNumber);
}

void add_output_options(CLI::App* app, Config& c) {
    app->add_option("--out", c.out_path, "Write the report to this file");
    app->add_option("--format", c.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    app->add_flag("--no-timestamp", c.no_timestamp, "Omit wall-clock fields from the report");
}

void emit(const Report& r, const Config& c, double runtime_ms, std::ostream& out) {
    std::string body;
    if (c.format == "json") {
        json data = r.data;
        if (!c.no_timestamp) {
            data["timestamp"] = utc_timestamp();
            if (data.contains("experiment")) data["runtime_ms"] = runtime_ms;
        }
        body = data.dump(2) + "\n";
    } else {
        for (const auto& line : r.text) body += line + "\n";
    }
    if (c.out_path.empty()) {
        out << body;
        return;
    }
    std::ofstream file(c.out_path);
    if (!file) throw UsageError("cannot write " + c.out_path);
    file << body;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and numerical Szego projections on ellipses"};
    app.require_subcommand(1);
    Config c;

    auto* dir = app.add_subcommand("dirichlet", "Harmonic extension of polynomial boundary data");
    add_domain_options(dir, c);
    add_poly_options(dir, c);
    add_output_options(dir, c);

    auto* sz = app.add_subcommand("szego", "Exact weighted Szego projection with certificate");
    add_domain_options(sz, c);
    add_poly_options(sz, c);
    sz->add_option("--ambient-degree", c.ambient_degree, "Ambient degree N")->check(CLI::NonNegativeNumber);
    add_output_options(sz, c);

    auto* ver = app.add_subcommand("verify", "Compare the exact projection with boundary quadrature");
    add_domain_options(ver, c);
    add_poly_options(ver, c);
    add_numeric_options(ver, c);
    add_output_options(ver, c);

    auto* exp = app.add_subcommand("experiment", "Numerical experiments");
    exp->require_subcommand(1);
    auto* szbar = exp->add_subcommand("szbar", "Is the projection of zbar constant?");
    add_domain_options(szbar, c);
    add_numeric_options(szbar, c);
    add_output_options(szbar, c);
    auto* harm = exp->add_subcommand("harmonic", "Szego versus Bergman on harmonic data on a disc");
    add_domain_options(harm, c);
    add_poly_options(harm, c);
    add_numeric_options(harm, c);
    harm->add_option("--quad-order", c.quad_order, "Area quadrature order")->check(CLI::PositiveNumber);
    add_output_options(harm, c);

    auto* st = app.add_subcommand("suite", "Run the acceptance criteria");
    st->add_option("--criteria", c.criteria, "Only these criteria")->delimiter(',')->check(CLI::Range(1, 10));
    add_output_options(st, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        Report r;
        if (dir->parsed())
            r = dirichlet(c);
        else if (sz->parsed())
            r = szego(c);
        else if (ver->parsed())
            r = verify(c);
        else if (szbar->parsed())
            r = experiment_szbar(c);
        else if (harm->parsed())
            r = experiment_harmonic(c);
        else
            r = suite(c, out);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        emit(r, c, ms, out);
        if (!r.passed) {
            err << "check failed\n";
            if (c.format == "json" || !c.out_path.empty()) err << r.data.dump(2) << "\n";
            return kCheckFailed;
        }
        return 0;
    } catch (const AnnotatedParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace szego::cli
