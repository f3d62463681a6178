#include "scramble/runner.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>

#include "scramble/density_matrix.hpp"
#include "scramble/errors.hpp"
#include "scramble/lightcone.hpp"
#include "scramble/observables.hpp"
#include "scramble/operator_analysis.hpp"
#include "scramble/operator_kernels.hpp"
#include "scramble/parallel.hpp"
#include "scramble/propagation.hpp"
#include "scramble/state.hpp"
#include "scramble/version.hpp"

namespace scramble {
namespace {

using nlohmann::json;

enum class Engine { Spectral, Krylov };

// Echo diagnostics evolve states both ways; the spectral route wins while the
// decomposition is affordable, then Lanczos takes over.
constexpr int kEchoSpectralAutoCap = 13;

// Forward-trajectory snapshots are kept for parallel post-processing only
// while they fit comfortably; past this the pipeline streams sequentially.
constexpr std::size_t kSnapshotBudgetBytes = std::size_t{1} << 30;

bool is_echo_kind(ExperimentKind kind) {
    return kind == ExperimentKind::Lightcone || kind == ExperimentKind::OperatorState ||
           kind == ExperimentKind::Velocities;
}

Engine state_engine(const ExperimentConfig& c, int n_qubits) {
    if (c.propagator == "spectral") return Engine::Spectral;
    if (c.propagator == "krylov") return Engine::Krylov;
    if (is_echo_kind(c.kind) && n_qubits <= kEchoSpectralAutoCap) return Engine::Spectral;
    return Engine::Krylov;
}

void require_state_budget(const HamiltonianSpec& spec, const NumericalLimits& limits) {
    if (spec.n_qubits > limits.state_qubits)
        throw resource_limit_error("model '" + spec.label() + "' needs state vectors on " +
                                   std::to_string(spec.n_qubits) +
                                   " qubits, past the state limit of " +
                                   std::to_string(limits.state_qubits));
}

void require_operator_budget(const HamiltonianSpec& spec, const NumericalLimits& limits) {
    if (spec.n_qubits > limits.operator_qubits)
        throw resource_limit_error("model '" + spec.label() + "' needs dense operators on " +
                                   std::to_string(spec.n_qubits) +
                                   " qubits, past the operator limit of " +
                                   std::to_string(limits.operator_qubits));
}

std::vector<int> scan_sites(const ExperimentConfig& c, int n_qubits) {
    if (!c.v.sites.empty()) return c.v.sites;
    std::vector<int> sites(static_cast<std::size_t>(n_qubits));
    std::iota(sites.begin(), sites.end(), 1);
    return sites;
}

std::size_t snapshot_bytes(int n_qubits, std::size_t states) {
    return states * (std::size_t{16} << n_qubits);
}

// Calls fn(k, psi(t_k)) for every sample of the forward quench trajectory.
// fn must be safe to call concurrently for distinct k.
void for_each_forward_state(const HamiltonianSpec& spec, const ExperimentConfig& c,
                            SpectralCache& cache, int workers,
                            const std::function<void(std::size_t, const StateVector&)>& fn) {
    const int n = spec.n_qubits;
    require_state_budget(spec, c.limits);
    const StateVector psi0 = product_state(c.initial_state, n);
    const std::size_t count = c.times.size();

    if (state_engine(c, n) == Engine::Spectral) {
        auto decomp = cache.get(spec);
        const SpectralPropagator prop(decomp, n);
        parallel_for(workers, count,
                     [&](std::size_t k) { fn(k, prop.evolve(psi0, c.times[k])); });
        return;
    }

    auto action = std::make_shared<const HamiltonianAction>(spec);
    const KrylovPropagator prop(action, c.krylov);
    if (snapshot_bytes(n, count) <= kSnapshotBudgetBytes) {
        std::vector<StateVector> snaps;
        snaps.reserve(count);
        StateVector cur = psi0;
        double prev = 0.0;
        for (std::size_t k = 0; k < count; ++k) {
            cur = prop.evolve(cur, c.times[k] - prev);
            prev = c.times[k];
            snaps.push_back(cur);
        }
        parallel_for(workers, count, [&](std::size_t k) { fn(k, snaps[k]); });
        return;
    }
    StateVector cur = psi0;
    double prev = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        cur = prop.evolve(cur, c.times[k] - prev);
        prev = c.times[k];
        fn(k, cur);
    }
}

// One model's echo diagnostics: C and F on the (t, r) grid, plus the
// entanglement of the operator state Phi(t) = W(t)|psi0> when asked for.
struct EchoResult {
    std::vector<int> sites;
    Eigen::MatrixXd c;      // (time index, site index)
    Eigen::MatrixXcd otoc;  // same layout
    std::vector<EntropySample> phi_entropy;
};

EchoResult compute_echo(const HamiltonianSpec& spec, const ExperimentConfig& c,
                        const std::vector<int>& sites, const Region* phi_region,
                        SpectralCache& cache, int workers) {
    const int n = spec.n_qubits;
    const auto count = c.times.size();
    const auto n_sites = sites.size();

    EchoResult out;
    out.sites = sites;
    out.c.resize(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(n_sites));
    out.otoc.resize(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(n_sites));
    if (phi_region) out.phi_entropy.resize(count);

    const StateVector psi0 = product_state(c.initial_state, n);

    if (state_engine(c, n) == Engine::Spectral) {
        auto decomp = cache.get(spec);
        const SpectralPropagator prop(decomp, n);
        const Eigen::Index dim = psi0.dim();
        parallel_for(workers, count, [&](std::size_t k) {
            const double t = c.times[k];
            // u_r = W(t) V_r |psi0>, all sites in one batch.
            Eigen::MatrixXcd cols(dim, static_cast<Eigen::Index>(n_sites));
            for (std::size_t i = 0; i < n_sites; ++i) {
                Eigen::VectorXcd v = psi0.amplitudes();
                apply_pauli_inplace(v, c.v.kind, sites[i] - 1);
                cols.col(static_cast<Eigen::Index>(i)) = v;
            }
            prop.evolve_batch(cols, t);
            apply_pauli_left(cols, c.w.kind, c.w.site);
            prop.evolve_batch(cols, -t);

            // Phi(t) = W(t)|psi0>, shared by every site's w branch.
            Eigen::MatrixXcd phi(dim, 1);
            phi.col(0) = psi0.amplitudes();
            prop.evolve_batch(phi, t);
            apply_pauli_left(phi, c.w.kind, c.w.site);
            prop.evolve_batch(phi, -t);
            const Eigen::VectorXcd phi_v = phi.col(0);

            for (std::size_t i = 0; i < n_sites; ++i) {
                Eigen::VectorXcd w_r = phi_v;
                apply_pauli_inplace(w_r, c.v.kind, sites[i] - 1);
                const auto col = cols.col(static_cast<Eigen::Index>(i));
                out.c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) =
                    0.5 * (col - w_r).squaredNorm();
                out.otoc(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) =
                    col.dot(w_r);
            }
            if (phi_region)
                out.phi_entropy[k] = entropy_sample(StateVector(n, phi_v), *phi_region, t);
        });
        return out;
    }

    require_state_budget(spec, c.limits);
    auto action = std::make_shared<const HamiltonianAction>(spec);
    const KrylovPropagator prop(action, c.krylov);

    auto sample = [&](std::size_t k, const StateVector& psi_t,
                      const std::vector<StateVector>& chi_t) {
        const double t = c.times[k];
        const StateVector phi =
            prop.evolve(apply_local_pauli(psi_t, c.w.kind, c.w.site), -t);
        if (phi_region) out.phi_entropy[k] = entropy_sample(phi, *phi_region, t);
        for (std::size_t i = 0; i < n_sites; ++i) {
            const StateVector u =
                prop.evolve(apply_local_pauli(chi_t[i], c.w.kind, c.w.site), -t);
            const StateVector w_r = apply_local_pauli(phi, c.v.kind, sites[i]);
            out.c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) =
                0.5 * (u.amplitudes() - w_r.amplitudes()).squaredNorm();
            out.otoc(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)) =
                u.amplitudes().dot(w_r.amplitudes());
        }
    };

    // Forward states psi(t) and chi_r(t) = e^{-iHt} V_r |psi0> step
    // incrementally; each sample then pays its own backward evolutions.
    StateVector psi = psi0;
    std::vector<StateVector> chi;
    chi.reserve(n_sites);
    for (std::size_t i = 0; i < n_sites; ++i)
        chi.push_back(apply_local_pauli(psi0, c.v.kind, sites[i]));

    if (snapshot_bytes(n, (n_sites + 1) * count) <= kSnapshotBudgetBytes) {
        std::vector<StateVector> psi_snaps;
        std::vector<std::vector<StateVector>> chi_snaps;
        psi_snaps.reserve(count);
        chi_snaps.reserve(count);
        double prev = 0.0;
        for (std::size_t k = 0; k < count; ++k) {
            const double seg = c.times[k] - prev;
            prev = c.times[k];
            psi = prop.evolve(psi, seg);
            for (auto& x : chi) x = prop.evolve(x, seg);
            psi_snaps.push_back(psi);
            chi_snaps.push_back(chi);
        }
        parallel_for(workers, count,
                     [&](std::size_t k) { sample(k, psi_snaps[k], chi_snaps[k]); });
        return out;
    }

    double prev = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const double seg = c.times[k] - prev;
        prev = c.times[k];
        psi = prop.evolve(psi, seg);
        for (auto& x : chi) x = prop.evolve(x, seg);
        sample(k, psi, chi);
    }
    return out;
}

// Density profiles of W(t) on the full time grid, dense operator picture.
std::vector<OperatorDensityProfile> compute_profiles(const HamiltonianSpec& spec,
                                                     const ExperimentConfig& c,
                                                     SpectralCache& cache, int workers) {
    const int n = spec.n_qubits;
    require_operator_budget(spec, c.limits);
    auto decomp = cache.get(spec);
    const HeisenbergEvolver evolver(decomp, n, dense_pauli(c.w.kind, c.w.site, n));
    std::vector<OperatorDensityProfile> profiles(c.times.size());
    parallel_for(workers, c.times.size(), [&](std::size_t k) {
        profiles[k] = operator_density_profile(evolver.at_time(c.times[k]));
    });
    return profiles;
}

double model_alpha(const HamiltonianSpec& spec) {
    switch (spec.family) {
        case HamiltonianFamily::Local: return std::numeric_limits<double>::infinity();
        case HamiltonianFamily::Powerlaw: return spec.alpha;
        case HamiltonianFamily::FastScrambler: return std::numeric_limits<double>::quiet_NaN();
    }
    return std::numeric_limits<double>::quiet_NaN();
}

using Tables = std::vector<std::pair<std::string, ResultTable>>;

void run_lightcone(const ExperimentConfig& c, SpectralCache& cache, int workers,
                   Tables& tables) {
    ResultTable field({"model", "t", "r", "C", "F_re", "F_im"});
    ResultTable contour({"model", "theta", "r", "t_theta", "crossings"});
    for (const auto& spec : c.models) {
        const auto sites = scan_sites(c, spec.n_qubits);
        const EchoResult echo = compute_echo(spec, c, sites, nullptr, cache, workers);
        const std::string label = spec.label();
        for (std::size_t k = 0; k < c.times.size(); ++k)
            for (std::size_t i = 0; i < sites.size(); ++i)
                field.add_row({label, c.times[k], std::int64_t{sites[i]},
                               echo.c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)),
                               echo.otoc(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)).real(),
                               echo.otoc(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)).imag()});
        const ScramblingField f{c.times, sites, echo.c};
        for (double theta : c.thetas) {
            const ContourResult cont = extract_contour(f, theta);
            for (std::size_t i = 0; i < sites.size(); ++i)
                contour.add_row({label, theta, std::int64_t{sites[i]},
                                 cont.first_crossing[i], std::int64_t{cont.crossing_count[i]}});
        }
    }
    tables.emplace_back("field", std::move(field));
    tables.emplace_back("contour", std::move(contour));
}

void run_entropy(const ExperimentConfig& c, SpectralCache& cache, int workers,
                 Tables& tables) {
    std::vector<std::vector<EntropySample>> series(c.models.size());
    for (std::size_t m = 0; m < c.models.size(); ++m) {
        const Region region = c.region.resolve(c.models[m].n_qubits);
        auto& slots = series[m];
        slots.resize(c.times.size());
        for_each_forward_state(c.models[m], c, cache, workers,
                               [&](std::size_t k, const StateVector& psi) {
                                   slots[k] = entropy_sample(psi, region, c.times[k]);
                               });
    }
    ResultTable table({"t", "model", "S_halfchain", "S_over_page"});
    for (std::size_t k = 0; k < c.times.size(); ++k)
        for (std::size_t m = 0; m < c.models.size(); ++m)
            table.add_row({c.times[k], c.models[m].label(), series[m][k].entropy,
                           series[m][k].normalized});
    tables.emplace_back("entropy", std::move(table));
}

void run_operator_state(const ExperimentConfig& c, SpectralCache& cache, int workers,
                        Tables& tables) {
    ResultTable entropy({"model", "t", "S", "S_over_page"});
    ResultTable commutator({"model", "t", "r", "C", "F_re", "F_im"});
    for (const auto& spec : c.models) {
        const Region region = c.region.resolve(spec.n_qubits);
        std::vector<int> sites = c.v.sites;
        if (sites.empty()) {
            // Default probe: the first site past the entropy region.
            const Region rest = region.complement(spec.n_qubits);
            sites = {rest.sites().front()};
        }
        const EchoResult echo = compute_echo(spec, c, sites, &region, cache, workers);
        const std::string label = spec.label();
        for (std::size_t k = 0; k < c.times.size(); ++k) {
            entropy.add_row({label, c.times[k], echo.phi_entropy[k].entropy,
                             echo.phi_entropy[k].normalized});
            for (std::size_t i = 0; i < sites.size(); ++i)
                commutator.add_row(
                    {label, c.times[k], std::int64_t{sites[i]},
                     echo.c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)),
                     echo.otoc(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)).real(),
                     echo.otoc(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(i)).imag()});
        }
    }
    tables.emplace_back("entropy", std::move(entropy));
    tables.emplace_back("commutator", std::move(commutator));
}

void append_density_table(Tables& tables, const std::string& label, int n_qubits,
                          const std::vector<double>& times,
                          const std::vector<OperatorDensityProfile>& profiles) {
    std::vector<std::string> columns{"t"};
    for (int ell = 0; ell <= n_qubits; ++ell) columns.push_back("p" + std::to_string(ell));
    ResultTable table(std::move(columns));
    for (std::size_t k = 0; k < times.size(); ++k) {
        std::vector<Cell> row{times[k]};
        for (int ell = 0; ell <= n_qubits; ++ell) row.emplace_back(profiles[k].density(ell));
        table.add_row(std::move(row));
    }
    tables.emplace_back("density-" + label, std::move(table));
}

void run_operator_size(const ExperimentConfig& c, SpectralCache& cache, int workers,
                       Tables& tables) {
    std::vector<std::vector<OperatorDensityProfile>> profiles(c.models.size());
    for (std::size_t m = 0; m < c.models.size(); ++m)
        profiles[m] = compute_profiles(c.models[m], c, cache, workers);

    ResultTable size({"t", "model", "L", "L_over_haar"});
    for (std::size_t k = 0; k < c.times.size(); ++k)
        for (std::size_t m = 0; m < c.models.size(); ++m) {
            const double length = operator_size(profiles[m][k]);
            size.add_row({c.times[k], c.models[m].label(), length,
                          length / haar_operator_size(c.models[m].n_qubits)});
        }
    tables.emplace_back("size", std::move(size));
    for (std::size_t m = 0; m < c.models.size(); ++m)
        append_density_table(tables, c.models[m].label(), c.models[m].n_qubits, c.times,
                             profiles[m]);
}

void run_thermalization(const ExperimentConfig& c, SpectralCache& cache, int workers,
                        Tables& tables) {
    ResultTable magnetization({"model", "t", "M_z", "M_z_avg"});
    ResultTable mixing({"model", "t", "trace_distance"});
    for (const auto& spec : c.models) {
        const Region region = c.region.resolve(spec.n_qubits);
        std::vector<double> m_z(c.times.size());
        std::vector<double> dist(c.times.size());
        for_each_forward_state(spec, c, cache, workers,
                               [&](std::size_t k, const StateVector& psi) {
                                   m_z[k] = total_magnetization_z(psi);
                                   dist[k] = trace_distance_to_maximally_mixed(
                                       reduced_density_matrix(psi, region));
                               });
        const std::vector<double> running = time_average(c.times, m_z);
        const std::string label = spec.label();
        for (std::size_t k = 0; k < c.times.size(); ++k) {
            magnetization.add_row({label, c.times[k], m_z[k], running[k]});
            mixing.add_row({label, c.times[k], dist[k]});
        }
    }
    tables.emplace_back("magnetization", std::move(magnetization));
    tables.emplace_back("mixing", std::move(mixing));
}

void run_velocities(const ExperimentConfig& c, SpectralCache& cache, int workers,
                    Tables& tables) {
    ResultTable velocities({"model", "alpha", "v_B", "v_B_points", "v_B_rms", "v_E",
                            "v_E_points", "v_E_rms", "v_E_window_lo", "v_E_window_hi"});
    ResultTable contour({"model", "theta", "r", "t_theta", "crossings"});
    ResultTable entropy({"model", "t", "S_halfchain", "S_over_page"});

    for (const auto& spec : c.models) {
        const int n = spec.n_qubits;
        const std::string label = spec.label();

        std::vector<int> sites(static_cast<std::size_t>(n));
        std::iota(sites.begin(), sites.end(), 1);
        const EchoResult echo = compute_echo(spec, c, sites, nullptr, cache, workers);
        const ScramblingField field{c.times, sites, echo.c};
        for (double theta : c.thetas) {
            const ContourResult cont = extract_contour(field, theta);
            for (std::size_t i = 0; i < sites.size(); ++i)
                contour.add_row({label, theta, std::int64_t{sites[i]},
                                 cont.first_crossing[i], std::int64_t{cont.crossing_count[i]}});
        }

        const Region region = c.region.resolve(n);
        std::vector<EntropySample> ent(c.times.size());
        for_each_forward_state(spec, c, cache, workers,
                               [&](std::size_t k, const StateVector& psi) {
                                   ent[k] = entropy_sample(psi, region, c.times[k]);
                               });
        std::vector<double> entropies(c.times.size());
        for (std::size_t k = 0; k < c.times.size(); ++k) entropies[k] = ent[k].entropy;
        for (std::size_t k = 0; k < c.times.size(); ++k)
            entropy.add_row({label, c.times[k], ent[k].entropy, ent[k].normalized});

        const int site_lo =
            c.butterfly_sites ? c.butterfly_sites->first : default_butterfly_site_lo();
        const int site_hi =
            c.butterfly_sites ? c.butterfly_sites->second : default_butterfly_site_hi(n);
        const int n_a = region.size();
        const double page = page_value(std::min(n_a, n - n_a), std::max(n_a, n - n_a));
        try {
            const VelocityFit butterfly = fit_butterfly_velocity(
                extract_contour(field, c.thetas.front()), site_lo, site_hi);
            const auto window = entropy_growth_window(c.times, entropies, page,
                                                      c.entropy_fractions.first,
                                                      c.entropy_fractions.second);
            const VelocityFit growth = fit_entanglement_velocity(c.times, entropies,
                                                                 window.first, window.second);
            velocities.add_row({label, model_alpha(spec), butterfly.velocity,
                                std::int64_t{butterfly.points_used}, butterfly.rms_residual,
                                growth.velocity, std::int64_t{growth.points_used},
                                growth.rms_residual, window.first, window.second});
        } catch (const std::invalid_argument& e) {
            throw numerical_error("model '" + label + "': " + e.what());
        }
    }
    tables.emplace_back("velocities", std::move(velocities));
    tables.emplace_back("contour", std::move(contour));
    tables.emplace_back("entropy", std::move(entropy));
}

void run_finite_size(const ExperimentConfig& c, SpectralCache& cache, int workers,
                     Tables& tables) {
    ResultTable size({"model", "n_qubits", "t", "L", "L_over_haar"});
    ResultTable entropy({"model", "n_qubits", "t", "S_halfchain", "S_over_page"});
    for (const auto& spec : c.models) {
        const int n = spec.n_qubits;
        const std::string label = spec.label();
        // Size scaling stops at the dense-operator budget; entropy covers
        // every size in the sweep.
        if (n <= c.limits.operator_qubits) {
            const auto profiles = compute_profiles(spec, c, cache, workers);
            for (std::size_t k = 0; k < c.times.size(); ++k) {
                const double length = operator_size(profiles[k]);
                size.add_row({label, std::int64_t{n}, c.times[k], length,
                              length / haar_operator_size(n)});
            }
        }
        const Region region = c.region.resolve(n);
        std::vector<EntropySample> ent(c.times.size());
        for_each_forward_state(spec, c, cache, workers,
                               [&](std::size_t k, const StateVector& psi) {
                                   ent[k] = entropy_sample(psi, region, c.times[k]);
                               });
        for (std::size_t k = 0; k < c.times.size(); ++k)
            entropy.add_row({label, std::int64_t{n}, c.times[k], ent[k].entropy,
                             ent[k].normalized});
    }
    tables.emplace_back("size", std::move(size));
    tables.emplace_back("entropy", std::move(entropy));
}

json table_summary(const Tables& tables) {
    json out = json::array();
    for (const auto& [name, table] : tables) {
        json entry;
        entry["name"] = name;
        entry["rows"] = table.row_count();
        entry["columns"] = table.columns();
        out.push_back(entry);
    }
    return out;
}

} // namespace

RunResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    const int workers = resolve_worker_count(config.workers);

    RunResult result;
    result.config = config;
    SpectralCache cache(config.limits.spectral_qubits);

    switch (config.kind) {
        case ExperimentKind::Lightcone:
            run_lightcone(config, cache, workers, result.tables);
            break;
        case ExperimentKind::Entropy:
            run_entropy(config, cache, workers, result.tables);
            break;
        case ExperimentKind::OperatorState:
            run_operator_state(config, cache, workers, result.tables);
            break;
        case ExperimentKind::OperatorSize:
            run_operator_size(config, cache, workers, result.tables);
            break;
        case ExperimentKind::Thermalization:
            run_thermalization(config, cache, workers, result.tables);
            break;
        case ExperimentKind::Velocities:
            run_velocities(config, cache, workers, result.tables);
            break;
        case ExperimentKind::FiniteSize:
            run_finite_size(config, cache, workers, result.tables);
            break;
    }

    const auto stop = std::chrono::steady_clock::now();
    json meta;
    meta["name"] = config.name;
    meta["experiment"] = to_string(config.kind);
    meta["code_version"] = kVersion;
    meta["config"] = json::parse(resolved_json_text(config));
    meta["workers_used"] = workers;
    meta["tables"] = table_summary(result.tables);
    meta["wall_time_seconds"] =
        std::chrono::duration_cast<std::chrono::duration<double>>(stop - start).count();
    result.metadata_json = meta.dump(2) + "\n";
    return result;
}

std::vector<std::string> write_outputs(RunResult& result) {
    namespace fs = std::filesystem;
    const fs::path dir(result.config.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw config_error("cannot create output directory '" + dir.string() +
                           "': " + ec.message());

    std::vector<std::string> written;
    auto write_file = [&](const fs::path& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw config_error("cannot open '" + path.string() + "' for writing");
        out << content;
        out.flush();
        if (!out.good()) throw config_error("failed writing '" + path.string() + "'");
        written.push_back(path.string());
    };

    for (const auto& [name, table] : result.tables)
        write_file(dir / (result.config.name + "-" + name + ".csv"), table.to_csv());
    write_file(dir / (result.config.name + "-metadata.json"), result.metadata_json);
    result.written_files = written;
    return written;
}

RunResult run_and_write(const ExperimentConfig& config) {
    RunResult result = run_experiment(config);
    write_outputs(result);
    return result;
}

} // namespace scramble
