#include "scramble/lightcone.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace scramble {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

// Least squares y = v x + b; residual RMS reported along x by dividing
// through the slope, so windows in different y units stay comparable.
VelocityFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double det = n * sxx - sx * sx;
    if (det == 0.0) throw std::invalid_argument("degenerate fit: all x equal");
    VelocityFit fit;
    fit.velocity = (n * sxy - sx * sy) / det;
    fit.intercept = (sy * sxx - sx * sxy) / det;
    fit.points_used = static_cast<int>(x.size());
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.velocity * x[i] + fit.intercept);
        ss += r * r;
    }
    const double rms_y = std::sqrt(ss / n);
    fit.rms_residual = fit.velocity != 0.0 ? rms_y / std::abs(fit.velocity) : rms_y;
    return fit;
}

} // namespace

void ScramblingField::validate() const {
    if (times.empty() || sites.empty()) throw std::invalid_argument("empty field");
    if (values.rows() != static_cast<Eigen::Index>(times.size()) ||
        values.cols() != static_cast<Eigen::Index>(sites.size()))
        throw std::invalid_argument("field shape does not match its axes");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] <= times[i - 1])
            throw std::invalid_argument("field times must be strictly increasing");
    for (std::size_t i = 1; i < sites.size(); ++i)
        if (sites[i] <= sites[i - 1])
            throw std::invalid_argument("field sites must be strictly increasing");
}

double ScramblingField::value(std::size_t time_index, std::size_t site_index) const {
    return values(static_cast<Eigen::Index>(time_index),
                  static_cast<Eigen::Index>(site_index));
}

bool ContourResult::has_crossing(std::size_t site_index) const {
    return !std::isnan(first_crossing.at(site_index));
}

ContourResult extract_contour(const ScramblingField& field, double theta) {
    field.validate();
    ContourResult contour;
    contour.theta = theta;
    contour.sites = field.sites;
    contour.first_crossing.assign(field.sites.size(), kNan);
    contour.crossing_count.assign(field.sites.size(), 0);
    for (std::size_t s = 0; s < field.sites.size(); ++s) {
        if (field.value(0, s) >= theta) {
            // Already at threshold when sampling starts.
            contour.first_crossing[s] = field.times[0];
            contour.crossing_count[s] = 1;
        }
        for (std::size_t i = 1; i < field.times.size(); ++i) {
            const double prev = field.value(i - 1, s);
            const double cur = field.value(i, s);
            if (!(prev < theta && cur >= theta)) continue;
            ++contour.crossing_count[s];
            if (std::isnan(contour.first_crossing[s])) {
                const double frac = (theta - prev) / (cur - prev);
                contour.first_crossing[s] =
                    field.times[i - 1] + frac * (field.times[i] - field.times[i - 1]);
            }
        }
    }
    return contour;
}

VelocityFit fit_butterfly_velocity(const ContourResult& contour, int site_lo, int site_hi) {
    if (site_lo > site_hi) throw std::invalid_argument("empty site window");
    std::vector<double> t, r;
    for (std::size_t s = 0; s < contour.sites.size(); ++s) {
        if (contour.sites[s] < site_lo || contour.sites[s] > site_hi) continue;
        if (!contour.has_crossing(s)) continue;
        t.push_back(contour.first_crossing[s]);
        r.push_back(contour.sites[s]);
    }
    if (t.size() < 3)
        throw std::invalid_argument("butterfly fit needs at least 3 crossing sites in window");
    return least_squares_line(t, r);
}

int default_butterfly_site_lo() { return 4; }

int default_butterfly_site_hi(int n_qubits) { return n_qubits - 2; }

VelocityFit fit_entanglement_velocity(const std::vector<double>& times,
                                      const std::vector<double>& entropies, double t_lo,
                                      double t_hi) {
    if (times.size() != entropies.size())
        throw std::invalid_argument("entropy series length mismatch");
    std::vector<double> t, s;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (times[i] < t_lo || times[i] > t_hi) continue;
        t.push_back(times[i]);
        s.push_back(entropies[i]);
    }
    if (t.size() < 3)
        throw std::invalid_argument("entanglement fit needs at least 3 samples in window");
    return least_squares_line(t, s);
}

std::pair<double, double> entropy_growth_window(const std::vector<double>& times,
                                                const std::vector<double>& entropies,
                                                double page, double lo_fraction,
                                                double hi_fraction) {
    if (times.size() != entropies.size() || times.empty())
        throw std::invalid_argument("entropy series length mismatch");
    if (!(0 <= lo_fraction && lo_fraction < hi_fraction))
        throw std::invalid_argument("window fractions must satisfy 0 <= lo < hi");
    const double lo = lo_fraction * page;
    const double hi = hi_fraction * page;
    double t_lo = kNan, t_hi = kNan;
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (std::isnan(t_lo) && entropies[i] >= lo) t_lo = times[i];
        if (entropies[i] >= hi) {
            t_hi = times[i];
            break;
        }
    }
    if (std::isnan(t_lo) || std::isnan(t_hi))
        throw std::invalid_argument("entropy series never reaches the fit window");
    return {t_lo, t_hi};
}

} // namespace scramble
