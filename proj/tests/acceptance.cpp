#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "jeft/verify.hpp"

// Acceptance gate: one criterion per test case, each printing a single
// PASS/FAIL line with its pinned tolerance.  Every criterion covers both
// models.  Tolerances are fixed here, not read from configuration.

using namespace jeft;

namespace {

VerifyConfig config_for(int dim) {
    VerifyConfig cfg;
    // default production grids; see tools/jeft_cli.cpp for the h3 boundary
    // resolution note (48 polar x 96 azimuth)
    if (dim == 2) {
        cfg.model = ModelParams::h2();
        cfg.sizes = GridSizes{96, 256, 128};
    } else {
        cfg.model = ModelParams::h3();
        cfg.sizes = GridSizes{96, 48, 128};
    }
    return cfg;
}

void report(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("criterion %d (%s): %s  [%s]\n", id, name,
                pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("criterion 1: lemma 2 equivalence") {
    constexpr double kTol = 1e-6;
    constexpr double kBudgetSeconds = 300.0;
    auto t0 = std::chrono::steady_clock::now();
    double err = 0.0;
    for (int dim : {2, 3}) {
        VerifyConfig cfg = config_for(dim);
        QuadratureGrid grid = build_grids(cfg.model, cfg.sizes);
        for (const InteriorFunction& f : suite(cfg.model))
            err = std::max(err,
                           verify_lemma2(f, cfg, grid).max_rel_error);
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    bool pass = err <= kTol && secs <= kBudgetSeconds;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "max_rel %.3g <= %.0e, runtime %.1fs <= %.0fs", err, kTol,
                  secs, kBudgetSeconds);
    report(1, "lemma 2 equivalence", pass, buf);
    CHECK(err <= kTol);
    CHECK(secs <= kBudgetSeconds);
}

TEST_CASE("criterion 2: lemma 1 restriction") {
    constexpr double kTol = 1e-8;
    double err = 0.0;
    for (int dim : {2, 3}) {
        VerifyConfig cfg = config_for(dim);
        QuadratureGrid grid = build_grids(cfg.model, cfg.sizes);
        auto fns = suite(cfg.model);
        for (size_t i : {0u, 1u, 4u}) {  // the radial suite members
            REQUIRE(fns[i].is_radial);
            err = std::max(err,
                           verify_lemma1(fns[i], cfg, grid).max_rel_error);
        }
    }
    bool pass = err <= kTol;
    char buf[96];
    std::snprintf(buf, sizeof buf, "max_rel %.3g <= %.0e", err, kTol);
    report(2, "lemma 1 restriction", pass, buf);
    CHECK(pass);
}

TEST_CASE("criterion 3: kernel factorization") {
    constexpr double kTol = 1e-8;
    double err = 0.0;
    for (int dim : {2, 3}) {
        VerifyConfig cfg = config_for(dim);
        QuadratureGrid grid = build_grids(cfg.model, cfg.sizes);
        double lams[] = {0.5, 1.3, 2.7, 4.1};
        err = std::max(
            err,
            verify_kernel_factorization(lams, 100, cfg, grid).max_rel_error);
    }
    bool pass = err <= kTol;
    char buf[96];
    std::snprintf(buf, sizeof buf, "max_rel %.3g <= %.0e on 100 triples", err,
                  kTol);
    report(3, "kernel factorization", pass, buf);
    CHECK(pass);
}

TEST_CASE("criterion 4: joint-eigenfunction property") {
    constexpr double kTol = 1e-4;
    double err = 0.0, worst_ratio_lo = 1e9, worst_ratio_hi = 0.0,
           neg_min = 1e9;
    for (int dim : {2, 3}) {
        VerifyConfig cfg = config_for(dim);
        QuadratureGrid grid = build_grids(cfg.model, cfg.sizes);
        auto fns = suite(cfg.model);
        double lams[] = {0.5, 1.0, 2.0};
        for (size_t i : {0u, 4u}) {
            VerificationReport r =
                verify_eigenproperty(fns[i], lams, cfg, grid);
            err = std::max(err, r.max_rel_error);
            for (const char* key : {"ratio_jeft", "ratio_poisson"}) {
                double ratio = r.metadata[key].get<double>();
                worst_ratio_lo = std::min(worst_ratio_lo, ratio);
                worst_ratio_hi = std::max(worst_ratio_hi, ratio);
            }
            neg_min = std::min(
                neg_min,
                r.metadata["negative_control_residual"].get<double>());
        }
    }
    bool ratios_ok = worst_ratio_lo >= 3.5 && worst_ratio_hi <= 4.5;
    bool pass = err <= kTol && ratios_ok && neg_min > 1e-1;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "max residual %.3g <= %.0e, h->h/2 ratios in [%.2f, %.2f], "
                  "negative control %.2g > 0.1",
                  err, kTol, worst_ratio_lo, worst_ratio_hi, neg_min);
    report(4, "joint-eigenfunction property", pass, buf);
    CHECK(err <= kTol);
    CHECK(ratios_ok);
    CHECK(neg_min > 1e-1);
}

TEST_CASE("criterion 5: plancherel") {
    constexpr double kTol = 1e-3;
    double err = 0.0, corrupt_break = 1e9;
    for (int dim : {2, 3}) {
        VerifyConfig cfg = config_for(dim);
        QuadratureGrid grid = build_grids(cfg.model, cfg.sizes);
        auto fns = suite(cfg.model);
        for (const InteriorFunction& f : fns)
            err = std::max(err,
                           verify_plancherel(f, cfg, grid).max_rel_error);
        VerificationReport bad = verify_plancherel(
            fns[0], cfg, grid, Corruption::constant_density);
        corrupt_break = std::min(
            corrupt_break, bad.metadata["parseval_err"].get<double>());
    }
    bool pass = err <= kTol && corrupt_break >= 0.10;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "max parseval/roundtrip err %.3g <= %.0e, corrupted density "
                  "breaks parseval by %.0f%% >= 10%%",
                  err, kTol, 100.0 * corrupt_break);
    report(5, "plancherel", pass, buf);
    CHECK(err <= kTol);
    CHECK(corrupt_break >= 0.10);
}

TEST_CASE("criterion 6: paley-wiener support recovery") {
    constexpr double kTol = 0.10;
    double err = 0.0;
    bool ordering = true;
    double slopes[2][2] = {};
    for (int dim : {2, 3}) {
        VerifyConfig cfg = config_for(dim);
        QuadratureGrid grid = build_grids(cfg.model, cfg.sizes);
        auto fns = suite(cfg.model);
        double R = cfg.model.support_radius;
        double radii[2] = {R / 2.0, R / 4.0};
        for (int k = 0; k < 2; ++k) {
            std::vector<double> etas;
            for (int i = 0; i < 5; ++i) {
                double e = cfg.pw_eta_scale / radii[k] * (0.5 + 0.125 * i);
                etas.push_back(e);
                etas.push_back(-e);
            }
            VerificationReport r =
                verify_paley_wiener(fns[k], radii[k], etas, cfg, grid);
            err = std::max(err, r.max_rel_error);
            slopes[dim - 2][k] = r.metadata["slope"].get<double>();
        }
        ordering = ordering && slopes[dim - 2][0] > slopes[dim - 2][1];
    }
    bool pass = err <= kTol && ordering;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "slope err %.3g <= %.2f; slopes h2 %.3f > %.3f, h3 %.3f > "
                  "%.3f (true 2.0 / 1.0)",
                  err, kTol, slopes[0][0], slopes[0][1], slopes[1][0],
                  slopes[1][1]);
    report(6, "paley-wiener support recovery", pass, buf);
    CHECK(err <= kTol);
    CHECK(ordering);
}

TEST_CASE("criterion 7: convolution factorization") {
    constexpr double kTol = 1e-4;
    double err = 0.0;
    for (int dim : {2, 3}) {
        VerifyConfig cfg = config_for(dim);
        QuadratureGrid grid = build_grids(cfg.model, cfg.sizes);
        auto fns = suite(cfg.model);
        InteriorFunction g =
            bump({0.6, Point::origin(cfg.model.dim), 1.0}, cfg.model);
        err = std::max(
            err, verify_convolution(fns[1], g, cfg, grid).max_rel_error);
    }
    bool pass = err <= kTol;
    char buf[96];
    std::snprintf(buf, sizeof buf, "max_rel %.3g <= %.0e", err, kTol);
    report(7, "convolution factorization", pass, buf);
    CHECK(pass);
}

TEST_CASE("criterion 8: determinism of the verify manifest") {
    auto spawn = [&](const std::string& args, const std::string& env) {
        std::string cmd = env + (env.empty() ? "" : " ") + "\"" JEFT_CLI_PATH
                          "\" " + args + " > /dev/null 2>&1";
        int st = std::system(cmd.c_str());
        return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    };
    bool pass = true;
    std::string detail;
    for (int dim : {2, 3}) {
        std::string model = dim == 2 ? "h2" : "h3";
        std::string args = "verify --model " + model +
                           " --check lemma1 --check kernel_factorization";
        std::string base = "/tmp/acceptance_" + model + "_";
        bool ok = true;
        ok &= spawn(args + " --out " + base + "a.json", "") == 0;
        ok &= spawn(args + " --out " + base + "b.json", "") == 0;
        ok &= spawn(args + " --out " + base + "c.json",
                    "OMP_NUM_THREADS=1") == 0;
        ok &= spawn(args + " --out " + base + "d.json",
                    "OMP_NUM_THREADS=4") == 0;
        std::string a = slurp(base + "a.json");
        ok &= !a.empty();
        ok &= a == slurp(base + "b.json");   // run-to-run
        ok &= a == slurp(base + "c.json");   // 1 worker
        ok &= a == slurp(base + "d.json");   // N workers
        pass = pass && ok;
        detail += model + (ok ? " byte-identical" : " MISMATCH") + "; ";
    }
    report(8, "determinism", pass, detail + "2 runs x {default,1,4} threads");
    CHECK(pass);
}
