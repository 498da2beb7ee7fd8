#include "beamrange/engine.hpp"

#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <thread>

#include "beamrange/coeffs.hpp"
#include "beamrange/solvers.hpp"

namespace beamrange {

namespace {

double par_of(const CMatrix& s) {
    const double peak = s.cwiseAbs2().maxCoeff();
    const double mean = s.squaredNorm() / static_cast<double>(s.size());
    return peak / mean;
}

void check_feasible(const CMatrix& s, const ConstraintSpec& constraint) {
    const double budget = static_cast<double>(s.size());
    const double tol = 1e-9;
    switch (constraint.kind) {
        case ConstraintKind::Energy:
            if (s.squaredNorm() > budget * (1.0 + tol)) {
                throw std::runtime_error("infeasible initial waveform: energy exceeds Mt*N");
            }
            break;
        case ConstraintKind::Par:
            if (s.squaredNorm() > budget * (1.0 + tol) ||
                par_of(s) > constraint.gamma_p * (1.0 + tol)) {
                throw std::runtime_error("infeasible initial waveform: PAR exceeds gamma_p");
            }
            break;
        case ConstraintKind::ContinuousPhase:
            if (((s.cwiseAbs().array() - 1.0).abs() > tol).any()) {
                throw std::runtime_error("infeasible initial waveform: not unimodular");
            }
            break;
        case ConstraintKind::DiscretePhase: {
            if (((s.cwiseAbs().array() - 1.0).abs() > tol).any()) {
                throw std::runtime_error("infeasible initial waveform: not unimodular");
            }
            const double step = 2.0 * M_PI / constraint.alphabet_size;
            for (int m = 0; m < s.rows(); ++m) {
                for (int j = 0; j < s.cols(); ++j) {
                    const double phase = std::arg(s(m, j));
                    if (std::abs(std::remainder(phase, step)) > tol) {
                        throw std::runtime_error(
                            "infeasible initial waveform: phase outside the alphabet");
                    }
                }
            }
            break;
        }
    }
}

PolarSolution solve_entry(const EntryCoefficients& ec, const ConstraintSpec& constraint,
                          Complex current, SolveStats* stats) {
    switch (constraint.kind) {
        case ConstraintKind::Energy:
            return solve_energy(ec, current, stats);
        case ConstraintKind::Par:
            return solve_par(ec, current, stats);
        case ConstraintKind::ContinuousPhase:
            return solve_continuous(ec, std::abs(current) < 1e-12 ? 0.0 : std::arg(current),
                                    stats);
        case ConstraintKind::DiscretePhase:
            return solve_discrete(ec, constraint.alphabet_size, stats);
    }
    throw std::logic_error("unhandled constraint kind");
}

/// Runs tasks with a small worker pool; results land at their task index.
void run_parallel(std::vector<std::function<void()>>& tasks) {
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(tasks.size()));
    if (workers <= 1) {
        for (auto& task : tasks) task();
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
                tasks[i]();
            }
        });
    }
    for (auto& worker : pool) worker.join();
}

}  // namespace

const char* to_string(StopReason reason) {
    switch (reason) {
        case StopReason::Threshold: return "threshold";
        case StopReason::MaxSweeps: return "max_sweeps";
        case StopReason::Stall: return "stall";
    }
    return "unknown";
}

CMatrix init_waveform(int mt, int n, int l0, std::uint64_t seed) {
    if (l0 < 2) throw std::invalid_argument("initializer alphabet must be >= 2");
    std::mt19937_64 gen(seed);
    CMatrix s(mt, n);
    for (int m = 0; m < mt; ++m) {
        for (int j = 0; j < n; ++j) {
            const auto l = static_cast<int>(gen() % static_cast<std::uint64_t>(l0));
            s(m, j) = std::polar(1.0, 2.0 * M_PI * l / l0);
        }
    }
    return s;
}

RunRecord run(const RunConfig& cfg, const std::optional<CMatrix>& s0) {
    const auto t_start = std::chrono::steady_clock::now();
    const RunConfig v = validate_config(cfg);

    CMatrix s = s0 ? *s0 : init_waveform(v.mt, v.n, v.init_alphabet, v.seed);
    if (s0) {
        validate_waveform(s);
        if (s.rows() != v.mt || s.cols() != v.n) {
            throw std::runtime_error("initial waveform dimensions do not match the config");
        }
    }
    check_feasible(s, v.constraint);

    RunRecord record;
    double f_prev = objective(s, v.scenario, v.eta).objective;

#ifndef NDEBUG
    std::mt19937_64 sample_gen(v.seed ^ 0x9e3779b97f4a7c15ULL);
#endif

    for (int sweep = 1; sweep <= v.max_sweeps; ++sweep) {
        bool changed = false;
        for (int t = 0; t < v.mt; ++t) {
            for (int d = 0; d < v.n; ++d) {
                const Complex old_value = s(t, d);
                const EntryCoefficients ec =
                    entry_coefficients(s, t, d, v.scenario, v.constraint, v.eta);
                SolveStats stats;
                const PolarSolution sol = solve_entry(ec, v.constraint, old_value, &stats);
                if (stats.grid_fallback) record.diagnostics.grid_fallbacks++;
                if (stats.degenerate) record.diagnostics.degenerate_keeps++;
                if (!stats.kept_current) {
                    const Complex new_value = std::polar(sol.r_star, sol.phi_star);
                    if (new_value != old_value) {
#ifndef NDEBUG
                        if (sample_gen() % 100 == 0) {
                            const double before = objective(s, v.scenario, v.eta).objective;
                            CMatrix probe = s;
                            probe(t, d) = new_value;
                            const double after = objective(probe, v.scenario, v.eta).objective;
                            assert(after <= before + 1e-10 * (1.0 + std::abs(before)));
                        }
#endif
                        s(t, d) = new_value;
                        changed = true;
                    }
                }
            }
        }

        const IslrReport report = objective(s, v.scenario, v.eta);
        record.history.push_back(
            {sweep, report.objective, report.spatial_islr_db, report.range_islr_db});
        record.final_report = report;
        record.sweeps_used = sweep;

        const double delta = f_prev - report.objective;
        f_prev = report.objective;
        if (!changed) {
            record.stop_reason = StopReason::Stall;
            break;
        }
        if (delta <= v.zeta) {
            record.stop_reason = StopReason::Threshold;
            break;
        }
        record.stop_reason = StopReason::MaxSweeps;
    }

    record.waveform = std::move(s);
    record.diagnostics.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    return record;
}

std::vector<ParetoPoint> pareto_sweep(const RunConfig& base, std::vector<double> etas,
                                      int trials) {
    if (trials < 1) throw ConfigError("trials must be >= 1");
    std::sort(etas.begin(), etas.end());

    struct TrialResult {
        RunRecord record;
        bool ok = false;
        std::string error;
    };
    std::vector<TrialResult> results(etas.size() * trials);
    std::vector<std::function<void()>> tasks;
    tasks.reserve(results.size());
    for (size_t e = 0; e < etas.size(); ++e) {
        for (int trial = 0; trial < trials; ++trial) {
            tasks.push_back([&, e, trial] {
                RunConfig cfg = base;
                cfg.eta = etas[e];
                cfg.seed = base.seed + static_cast<std::uint64_t>(trial);
                TrialResult& slot = results[e * trials + trial];
                try {
                    slot.record = run(cfg);
                    slot.ok = true;
                } catch (const std::exception& ex) {
                    slot.error = ex.what();
                }
            });
        }
    }
    run_parallel(tasks);

    std::vector<ParetoPoint> points;
    points.reserve(etas.size());
    for (size_t e = 0; e < etas.size(); ++e) {
        ParetoPoint point;
        point.eta = etas[e];
        const TrialResult* best = nullptr;
        for (int trial = 0; trial < trials; ++trial) {
            const TrialResult& cand = results[e * trials + trial];
            if (!cand.ok) {
                if (point.error.empty()) point.error = cand.error;
                continue;
            }
            if (!best || cand.record.final_report.objective < best->record.final_report.objective) {
                best = &cand;
            }
        }
        if (best) {
            point.record = best->record;
            point.spatial_islr_db = best->record.final_report.spatial_islr_db;
            point.range_islr_db = best->record.final_report.range_islr_db;
            point.error.clear();
        } else {
            point.failed = true;
        }
        points.push_back(std::move(point));
    }
    return points;
}

}  // namespace beamrange
