// Command-line front end: transform tables as CSV, verification manifest as
// JSON.  Single-threaded orchestration; the library kernels parallelize
// internally and stay bitwise reproducible across thread counts.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "jeft/reference.hpp"
#include "jeft/verify.hpp"

namespace {

using namespace jeft;

struct RunConfig {
    std::string model = "h2";
    int nr = 96;
    // 0 = model default: 256 on h2, 48 polar (x96 azimuth) on h3.  The h3
    // product rule resolves spherical harmonics through degree 2*nb - 1;
    // below 48 the boundary-quadrature floor for bumps of support R/2
    // (Euclidean radius tanh(1)) sits above the 1e-8 b-independence
    // tolerance of the radial Helgason checks.
    int nb = 0;
    int nlambda = 128;
    double radius = 4.0;
    double lambda_max = 12.0;
    std::string out;
    std::vector<std::string> checks;
    double lambda = std::numeric_limits<double>::quiet_NaN();
    std::string bump;  // "center_r,support"
    int suite_index = 0;

    ModelParams params() const {
        ModelParams p = model == "h3" ? ModelParams::h3(radius, lambda_max)
                                      : ModelParams::h2(radius, lambda_max);
        p.validate();
        return p;
    }
    GridSizes sizes() const {
        int b = nb > 0 ? nb : (model == "h3" ? 48 : 256);
        return GridSizes{nr, b, nlambda};
    }
};

// Shared options live on the main app; subcommands use fallthrough() so
// "jeft_cli spherical --model h3" still parses.  Config files are only
// processed for the app parse() is called on, so --config must be here too.
void add_common(CLI::App& app, RunConfig& cfg) {
    app.add_option("--model", cfg.model, "Model: h2 or h3")
        ->check(CLI::IsMember({"h2", "h3"}));
    app.add_option("--nr", cfg.nr, "Radial quadrature nodes");
    app.add_option("--nb", cfg.nb, "Boundary nodes (polar count on h3)");
    app.add_option("--nlambda", cfg.nlambda, "Spectral nodes");
    app.add_option("--radius", cfg.radius, "Support truncation radius R");
    app.add_option("--lambda-max", cfg.lambda_max, "Spectral cutoff Lambda");
    app.add_option("--lambda", cfg.lambda, "Single spectral parameter");
    app.add_option("--bump", cfg.bump,
                   "Bump function as center_r,support (overrides --suite)");
    app.add_option("--suite", cfg.suite_index, "Suite function index")
        ->check(CLI::Range(0, 4));
    app.set_config("--config", "", "key = value config file");
    app.allow_config_extras(false);
}

InteriorFunction pick_function(const RunConfig& cfg, const ModelParams& model) {
    if (!cfg.bump.empty()) {
        std::istringstream ss(cfg.bump);
        double center_r = 0.0, support = 0.0;
        char comma = 0;
        if (!(ss >> center_r >> comma >> support) || comma != ',')
            throw std::invalid_argument("--bump expects center_r,support");
        Point c = point_at(center_r, BoundaryPoint{{1, 0, 0}, model.dim});
        return bump({support, c, 1.0}, model);
    }
    return suite(model)[static_cast<size_t>(cfg.suite_index)];
}

std::vector<complex_t> spectral_sample(const RunConfig& cfg,
                                       const QuadratureGrid& grid) {
    if (!std::isnan(cfg.lambda)) return {complex_t(cfg.lambda, 0.0)};
    return std::vector<complex_t>(grid.spectral_nodes.begin(),
                                  grid.spectral_nodes.end());
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// CSV rows: lambda_re,lambda_im,<coords>,value_re,value_im with 17 significant
// digits and LF line endings.
void write_csv(const std::string& path, const std::vector<std::string>& coords,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file: " + path);
    os << "lambda_re,lambda_im";
    for (const auto& c : coords) os << ',' << c;
    os << ",value_re,value_im\n";
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << fmt(row[i]);
        os << '\n';
    }
}

std::vector<Point> cli_points(const ModelParams& model) {
    std::vector<Point> pts{Point::origin(model.dim)};
    auto more = interior_sample(model, 6, 4, 0.2, 1.2);
    pts.insert(pts.end(), more.begin(), more.end());
    return pts;
}

int cmd_helgason(const RunConfig& cfg) {
    ModelParams model = cfg.params();
    QuadratureGrid grid = build_grids(model, cfg.sizes());
    InteriorFunction f = pick_function(cfg, model);
    auto lambdas = spectral_sample(cfg, grid);
    HelgasonGrid F = helgason_grid(f, lambdas, {}, grid);

    std::vector<std::string> coords{"b_x", "b_y"};
    if (model.dim == 3) coords.push_back("b_z");
    std::vector<std::vector<double>> rows;
    for (size_t l = 0; l < lambdas.size(); ++l)
        for (size_t j = 0; j < F.nb(); ++j) {
            std::vector<double> row{lambdas[l].real(), lambdas[l].imag()};
            for (int k = 0; k < model.dim; ++k)
                row.push_back(F.boundary_nodes[j].v[k]);
            row.push_back(F.at(l, j).real());
            row.push_back(F.at(l, j).imag());
            rows.push_back(std::move(row));
        }
    write_csv(cfg.out, coords, rows);
    return 0;
}

int cmd_jeft(const RunConfig& cfg) {
    ModelParams model = cfg.params();
    QuadratureGrid grid = build_grids(model, cfg.sizes());
    InteriorFunction f = pick_function(cfg, model);
    auto lambdas = spectral_sample(cfg, grid);
    auto points = cli_points(model);
    SphericalEvaluator phi(model);
    JeftGrid F = jeft_direct_grid(f, lambdas, points, grid, phi);

    std::vector<std::string> coords{"x_1", "x_2"};
    if (model.dim == 3) coords.push_back("x_3");
    std::vector<std::vector<double>> rows;
    for (size_t l = 0; l < lambdas.size(); ++l)
        for (size_t j = 0; j < points.size(); ++j) {
            std::vector<double> row{lambdas[l].real(), lambdas[l].imag()};
            for (int k = 0; k < model.dim; ++k) row.push_back(points[j].v[k]);
            row.push_back(F.at(l, j).real());
            row.push_back(F.at(l, j).imag());
            rows.push_back(std::move(row));
        }
    write_csv(cfg.out, coords, rows);
    return 0;
}

int cmd_poisson(const RunConfig& cfg) {
    ModelParams model = cfg.params();
    QuadratureGrid grid = build_grids(model, cfg.sizes());
    double lam = std::isnan(cfg.lambda) ? 1.0 : cfg.lambda;
    BoundaryFunction ones{[](const BoundaryPoint&) { return complex_t(1.0); }};
    auto points = cli_points(model);

    std::vector<std::string> coords{"x_1", "x_2"};
    if (model.dim == 3) coords.push_back("x_3");
    std::vector<std::vector<double>> rows;
    for (const Point& x : points) {
        complex_t v = poisson_transform(ones, SpectralParam(lam), x, grid);
        std::vector<double> row{lam, 0.0};
        for (int k = 0; k < model.dim; ++k) row.push_back(x.v[k]);
        row.push_back(v.real());
        row.push_back(v.imag());
        rows.push_back(std::move(row));
    }
    write_csv(cfg.out, coords, rows);
    return 0;
}

int cmd_spherical(const RunConfig& cfg) {
    ModelParams model = cfg.params();
    QuadratureGrid grid = build_grids(model, cfg.sizes());
    InteriorFunction f = pick_function(cfg, model);
    auto lambdas = spectral_sample(cfg, grid);
    SphericalEvaluator phi(model);

    std::vector<std::vector<double>> rows;
    for (const complex_t& lam : lambdas) {
        complex_t v = spherical_transform(f, SpectralParam(lam), grid, phi);
        rows.push_back({lam.real(), lam.imag(), v.real(), v.imag()});
    }
    write_csv(cfg.out, {}, rows);
    return 0;
}

int cmd_inverse(const RunConfig& cfg) {
    ModelParams model = cfg.params();
    QuadratureGrid grid = build_grids(model, cfg.sizes());
    InteriorFunction f = pick_function(cfg, model);
    std::vector<complex_t> lambdas(grid.spectral_nodes.begin(),
                                   grid.spectral_nodes.end());
    HelgasonGrid F = helgason_grid(f, lambdas, grid.spectral_weights, grid);
    auto points = cli_points(model);
    auto values = inverse_helgason_field(F, points);

    std::vector<std::string> coords{"x_1", "x_2"};
    if (model.dim == 3) coords.push_back("x_3");
    std::vector<std::vector<double>> rows;
    for (size_t j = 0; j < points.size(); ++j) {
        std::vector<double> row{0.0, 0.0};  // integrated over lambda
        for (int k = 0; k < model.dim; ++k) row.push_back(points[j].v[k]);
        row.push_back(values[j].real());
        row.push_back(values[j].imag());
        rows.push_back(std::move(row));
    }
    write_csv(cfg.out, coords, rows);
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyConfig vc;
    vc.model = cfg.params();
    vc.sizes = cfg.sizes();
    auto reports = run_all(vc, cfg.checks);
    nlohmann::ordered_json manifest = manifest_json(vc, reports);
    std::string text = manifest.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(cfg.out, std::ios::binary);
        if (!os) throw std::invalid_argument("cannot open output file: " + cfg.out);
        os << text;
    }
    for (const auto& r : reports)
        if (!r.pass) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Joint-eigenspace Fourier analysis on the hyperbolic ball"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* helgason = app.add_subcommand("helgason", "Helgason transform table");
    auto* jeft_cmd = app.add_subcommand("jeft", "Joint-eigenspace transform table");
    auto* poisson = app.add_subcommand("poisson", "Poisson transform of F == 1");
    auto* spherical = app.add_subcommand("spherical", "Spherical transform table");
    auto* inverse = app.add_subcommand("inverse", "Plancherel inversion table");
    auto* verify = app.add_subcommand("verify", "Run the verification harness");
    add_common(app, cfg);
    for (CLI::App* c : {helgason, jeft_cmd, poisson, spherical, inverse, verify})
        c->fallthrough();
    for (CLI::App* c : {helgason, jeft_cmd, poisson, spherical, inverse})
        c->add_option("--out", cfg.out, "Output CSV path")->required();
    verify->add_option("--out", cfg.out, "Manifest path (default: stdout)");
    verify->add_option("--check", cfg.checks, "Run only the named checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*helgason) return cmd_helgason(cfg);
        if (*jeft_cmd) return cmd_jeft(cfg);
        if (*poisson) return cmd_poisson(cfg);
        if (*spherical) return cmd_spherical(cfg);
        if (*inverse) return cmd_inverse(cfg);
        return cmd_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
