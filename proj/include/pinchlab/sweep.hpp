#ifndef PINCHLAB_SWEEP_HPP
#define PINCHLAB_SWEEP_HPP

#include <iosfwd>
#include <string>

#include "pinchlab/eisenstein.hpp"
#include "pinchlab/scattering.hpp"
#include "pinchlab/zeta.hpp"

namespace pinchlab {

enum class Quantity {
    WeightedEisenstein,
    StarredEisenstein,
    WeightedQuotient,
    ZRatio,
    GammaMode,
    Synthetic,  // exact power law injection, for harness validation
};

Quantity quantity_from_name(const std::string& name);
std::string quantity_name(Quantity q);

enum class OutputFormat { Jsonl, Csv };

// Pinching sweep: the surface family is pants(l, l2, l3) over the l grid,
// evaluated for every s and z, then fitted to a power law in l.
struct SweepConfig {
    double l2 = 1.0, l3 = 1.0;
    std::vector<double> l_grid;                  // strictly decreasing, in (0, 2]
    std::vector<std::complex<double>> s_grid;
    std::vector<HPoint> z_points = {{0.0, 1.0}};  // pinching-axis default
    Budgets budgets;
    Quantity quantity = Quantity::StarredEisenstein;
    int mode_k = 1;                               // for GammaMode
    std::complex<double> synthetic_alpha = 2.0;   // for Synthetic
    std::complex<double> synthetic_log_c = 0.0;
    double residual_bound = std::numeric_limits<double>::infinity();
    int threads = 1;
    std::string out_path;  // empty: stdout
    OutputFormat format = OutputFormat::Jsonl;

    void validate() const;
    static std::vector<double> default_l_grid(Quantity q);
    static std::vector<std::complex<double>> default_s_grid(Quantity q);
};

struct SweepSample {
    double l = 0.0;
    std::complex<double> value;
    bool ok = false;
    double delta_estimate = std::numeric_limits<double>::quiet_NaN();
    WarningList warnings;
};

struct SweepReport {
    Quantity quantity;
    double l2 = 0.0, l3 = 0.0;
    std::complex<double> s;
    std::optional<HPoint> z;  // absent for quantities that do not sample a point
    std::optional<int> mode_k;
    std::vector<SweepSample> samples;
    FitReport fit;            // over the ok samples
    bool fit_failed = false;  // too few samples or residual above the bound
    std::string fit_error;
    double cauchy = std::numeric_limits<double>::quiet_NaN();
    std::string validity;  // "ok" or "exploratory" (Re s within margin of any delta_l)
    WarningList warnings;
};

// Evaluates the configured quantity over the grid (worker pool of
// cfg.threads; results are slotted by index, so output is identical for
// any thread count) and fits each (s, z) series.  Per-point evaluation
// errors become sample warnings; fit failures are recorded on the report,
// not thrown.
std::vector<SweepReport> run_sweep(const SweepConfig& cfg);

bool any_fit_error(const std::vector<SweepReport>& reports);

// One record per (s, z): "schema":1 JSON lines, or the flat CSV table.
// Numbers carry 17 significant digits; identical reports serialize to
// identical bytes.
void emit_reports(std::ostream& os, const std::vector<SweepReport>& reports,
                  OutputFormat format);

// Single-evaluation records for the zeta / eisenstein subcommands.
void write_zeta_record(std::ostream& os, const SurfaceSpec& spec, std::complex<double> s,
                       const ZetaValue& zv);
void write_eisenstein_record(std::ostream& os, const SurfaceSpec& spec, HPoint z,
                             std::complex<double> s, const EisensteinValue& ev);

}  // namespace pinchlab

#endif
