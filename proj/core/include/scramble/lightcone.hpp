#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace scramble {

// Sampled diagnostic on an (r, t) grid, e.g. C_r(t). Rows follow times,
// columns follow sites; both axes strictly increasing.
struct ScramblingField {
    std::vector<double> times;
    std::vector<int> sites;
    Eigen::MatrixXd values; // (time index, site index)

    void validate() const;
    double value(std::size_t time_index, std::size_t site_index) const;
};

// Per site: the first time the field crosses theta from below, linearly
// interpolated between samples. Sites that never cross carry NaN; the number
// of distinct up-crossings is kept so oscillatory re-entries stay visible.
struct ContourResult {
    double theta = 0;
    std::vector<int> sites;
    std::vector<double> first_crossing;
    std::vector<int> crossing_count;

    bool has_crossing(std::size_t site_index) const;
};

struct VelocityFit {
    double velocity = 0;
    double intercept = 0;     // of the fitted line, in the fit's y variable
    int points_used = 0;
    double rms_residual = 0;  // measured along the time axis
};

ContourResult extract_contour(const ScramblingField& field, double theta);

// Least-squares line r = v t + b over contour sites in [site_lo, site_hi]
// with a finite crossing; v_B = dr/dt. Needs at least 3 points.
VelocityFit fit_butterfly_velocity(const ContourResult& contour, int site_lo, int site_hi);

// Default v_B window: sites 4..N-2, clear of both edges.
int default_butterfly_site_lo();
int default_butterfly_site_hi(int n_qubits);

// Least-squares line S = v t + b over samples with t in [t_lo, t_hi];
// v_E = dS/dt in nats per unit time. Needs at least 3 points.
VelocityFit fit_entanglement_velocity(const std::vector<double>& times,
                                      const std::vector<double>& entropies, double t_lo,
                                      double t_hi);

// Default v_E window: the linear-growth stretch between the first times the
// series reaches 0.1 and 0.5 of the Page value. Throws when the series never
// reaches the upper fraction.
std::pair<double, double> entropy_growth_window(const std::vector<double>& times,
                                                const std::vector<double>& entropies,
                                                double page, double lo_fraction = 0.1,
                                                double hi_fraction = 0.5);

} // namespace scramble
