#pragma once

#include <string>

#include "jeft/operators.hpp"
#include "jeft/transforms.hpp"

#include "json.hpp"

namespace jeft {

struct VerificationReport {
    std::string name;
    double max_rel_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    double wall_seconds = 0.0;     // informational; kept out of the manifest
    nlohmann::ordered_json metadata;  // grid sizes, measured slopes, ...

    void finish() { pass = max_rel_error <= tolerance; }
};

// Deliberate corruptions used as negative controls; a harness where these
// still pass is itself broken.
enum class Corruption {
    none,
    density_in_composed,  // lemma2: scale the composed path by |c|^-2
    constant_density,     // plancherel: flatten the spectral density
};

struct VerifyConfig {
    ModelParams model = ModelParams::h2();
    GridSizes sizes{};
    // Plancherel needs a wider spectral window than the default Lambda; the
    // flat bumps' transforms decay too slowly below lambda ~ 45.
    double plancherel_cutoff = 56.0;
    int plancherel_spectral = 168;
    // Exponential-type scan: eta_j = +/- pw_eta_scale/R_true * {0.5 .. 1.0}.
    double pw_eta_scale = 200.0;
};

VerificationReport verify_lemma2(const InteriorFunction& f,
                                 const VerifyConfig& cfg,
                                 const QuadratureGrid& grid,
                                 Corruption corrupt = Corruption::none);

VerificationReport verify_lemma1(const InteriorFunction& f_radial,
                                 const VerifyConfig& cfg,
                                 const QuadratureGrid& grid);

VerificationReport verify_kernel_factorization(std::span<const double> lambdas,
                                               int n_pairs,
                                               const VerifyConfig& cfg,
                                               const QuadratureGrid& grid);

VerificationReport verify_convolution(const InteriorFunction& f,
                                      const InteriorFunction& g_radial,
                                      const VerifyConfig& cfg,
                                      const QuadratureGrid& grid);

VerificationReport verify_plancherel(const InteriorFunction& f,
                                     const VerifyConfig& cfg,
                                     const QuadratureGrid& grid,
                                     Corruption corrupt = Corruption::none);

VerificationReport verify_paley_wiener(const InteriorFunction& f, double R_true,
                                       std::span<const double> etas,
                                       const VerifyConfig& cfg,
                                       const QuadratureGrid& grid);

VerificationReport verify_eigenproperty(const InteriorFunction& f,
                                        std::span<const double> lambdas,
                                        const VerifyConfig& cfg,
                                        const QuadratureGrid& grid);

// The full battery (7 checks over the deterministic suite).  check_names
// empty means all; unknown names throw.
std::vector<VerificationReport> run_all(const VerifyConfig& cfg,
                                        std::span<const std::string> check_names = {});

// Deterministic JSON manifest (no wall times).
nlohmann::ordered_json manifest_json(const VerifyConfig& cfg,
                                     std::span<const VerificationReport> reports);

// Deterministic interior sample sets shared by several checks.
std::vector<Point> interior_sample(const ModelParams& model, int n_radii,
                                   int n_dirs, double r_min, double r_max);

}  // namespace jeft
