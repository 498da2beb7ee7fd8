#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "beamrange/engine.hpp"
#include "support.hpp"

using namespace beamrange;

namespace {

RunConfig small_config(ConstraintKind kind, double eta, std::uint64_t seed = 1) {
    RunConfig cfg;
    cfg.mt = 3;
    cfg.n = 16;
    cfg.eta = eta;
    cfg.seed = seed;
    cfg.zeta = 1e-6;
    cfg.max_sweeps = 200;
    cfg.constraint.kind = kind;
    cfg.constraint.gamma_p = std::pow(10.0, 0.15);  // 1.5 dB
    cfg.constraint.alphabet_size = 8;
    cfg.scenario = test_support::test_scenario(cfg.mt, cfg.n);
    return cfg;
}

double par_of(const CMatrix& s) {
    return s.size() * s.cwiseAbs2().maxCoeff() / s.squaredNorm();
}

}  // namespace

TEST_CASE("initializer: determinism and alphabet membership") {
    const CMatrix a = init_waveform(4, 32, 8, 42);
    const CMatrix b = init_waveform(4, 32, 8, 42);
    CHECK(a == b);  // bitwise
    CHECK(init_waveform(4, 32, 8, 43) != a);

    for (int m = 0; m < 4; ++m) {
        for (int j = 0; j < 32; ++j) {
            CHECK(std::abs(std::abs(a(m, j)) - 1.0) <= 1e-15);
            const double phase = std::arg(a(m, j));
            CHECK(std::abs(std::remainder(phase, 2.0 * M_PI / 8)) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(init_waveform(4, 32, 1, 1), std::invalid_argument);
}

TEST_CASE("huge threshold stops after exactly one sweep") {
    RunConfig cfg = small_config(ConstraintKind::ContinuousPhase, 0.5);
    cfg.zeta = 1e9;
    const RunRecord record = run(cfg);
    CHECK(record.sweeps_used == 1);
    CHECK(record.history.size() == 1);
    CHECK(record.stop_reason == StopReason::Threshold);
}

TEST_CASE("per-sweep objective is monotone for every constraint and eta") {
    for (ConstraintKind kind : {ConstraintKind::Energy, ConstraintKind::Par,
                                ConstraintKind::ContinuousPhase, ConstraintKind::DiscretePhase}) {
        for (double eta : {0.0, 0.5, 1.0}) {
            const RunRecord record = run(small_config(kind, eta));
            REQUIRE(!record.history.empty());
            for (size_t i = 1; i < record.history.size(); ++i) {
                CHECK(record.history[i].f_o <= record.history[i - 1].f_o + 1e-12);
            }
            CHECK(record.final_report.objective ==
                  doctest::Approx(record.history.back().f_o));
        }
    }
}

TEST_CASE("final waveform satisfies its constraint") {
    const double budget = 3.0 * 16.0;

    const RunRecord energy = run(small_config(ConstraintKind::Energy, 0.5));
    CHECK(energy.waveform.squaredNorm() <= budget + 1e-9);

    const RunRecord par = run(small_config(ConstraintKind::Par, 0.5));
    CHECK(par.waveform.squaredNorm() <= budget + 1e-9);
    CHECK(par_of(par.waveform) <= std::pow(10.0, 0.15) + 1e-9);

    const RunRecord cont = run(small_config(ConstraintKind::ContinuousPhase, 0.5));
    CHECK((cont.waveform.cwiseAbs().array() - 1.0).abs().maxCoeff() <= 1e-12);

    const RunRecord disc = run(small_config(ConstraintKind::DiscretePhase, 0.5));
    for (int m = 0; m < disc.waveform.rows(); ++m) {
        for (int j = 0; j < disc.waveform.cols(); ++j) {
            CHECK(std::abs(std::abs(disc.waveform(m, j)) - 1.0) <= 1e-12);
            CHECK(std::abs(std::remainder(std::arg(disc.waveform(m, j)), 2.0 * M_PI / 8)) <=
                  1e-12);
        }
    }
}

TEST_CASE("identical configs give identical records") {
    const RunConfig cfg = small_config(ConstraintKind::DiscretePhase, 0.3, 7);
    const RunRecord a = run(cfg);
    const RunRecord b = run(cfg);
    CHECK(a.sweeps_used == b.sweeps_used);
    CHECK(a.waveform == b.waveform);
    REQUIRE(a.history.size() == b.history.size());
    for (size_t i = 0; i < a.history.size(); ++i) {
        CHECK(a.history[i].f_o == b.history[i].f_o);
    }
}

TEST_CASE("threshold stop implies the last delta closed below zeta") {
    const RunRecord record = run(small_config(ConstraintKind::ContinuousPhase, 0.5));
    if (record.stop_reason == StopReason::Threshold && record.history.size() >= 2) {
        const auto& h = record.history;
        CHECK(h[h.size() - 2].f_o - h.back().f_o <= 1e-6);
    }
}

TEST_CASE("restarting from a converged point stalls immediately") {
    RunConfig cfg = small_config(ConstraintKind::DiscretePhase, 0.5);
    const RunRecord first = run(cfg);
    const RunRecord again = run(cfg, first.waveform);
    CHECK(again.stop_reason == StopReason::Stall);
    CHECK(again.sweeps_used == 1);
    CHECK(again.waveform == first.waveform);
}

TEST_CASE("infeasible starts are rejected") {
    RunConfig cfg = small_config(ConstraintKind::Energy, 0.5);
    CHECK_THROWS_WITH_AS(run(cfg, CMatrix(2.0 * CMatrix::Ones(3, 16))),
                         doctest::Contains("infeasible"), std::runtime_error);

    cfg = small_config(ConstraintKind::Par, 0.5);
    CMatrix spiky = test_support::random_unimodular(3, 16, 3);
    spiky(0, 0) *= 3.0;
    spiky *= std::sqrt(48.0 / spiky.squaredNorm());
    CHECK_THROWS_WITH_AS(run(cfg, spiky), doctest::Contains("infeasible"), std::runtime_error);

    cfg = small_config(ConstraintKind::ContinuousPhase, 0.5);
    CHECK_THROWS_WITH_AS(run(cfg, CMatrix(0.5 * CMatrix::Ones(3, 16))),
                         doctest::Contains("infeasible"), std::runtime_error);

    cfg = small_config(ConstraintKind::DiscretePhase, 0.5);
    CMatrix off = test_support::random_unimodular(3, 16, 4);  // continuous phases
    CHECK_THROWS_WITH_AS(run(cfg, off), doctest::Contains("infeasible"), std::runtime_error);

    cfg = small_config(ConstraintKind::Energy, 0.5);
    CHECK_THROWS_AS(run(cfg, CMatrix::Ones(2, 16)), std::runtime_error);  // wrong shape
}

TEST_CASE("pareto sweep: ordering, best-of-trials, determinism") {
    RunConfig base = small_config(ConstraintKind::DiscretePhase, 0.5, 11);
    base.mt = 2;
    base.n = 8;
    base.scenario = test_support::test_scenario(base.mt, base.n);
    base.max_sweeps = 60;

    const std::vector<double> etas = {1.0, 0.0, 0.5};  // deliberately unsorted
    const auto points = pareto_sweep(base, etas, 2);
    REQUIRE(points.size() == 3);
    CHECK(points[0].eta == 0.0);
    CHECK(points[1].eta == 0.5);
    CHECK(points[2].eta == 1.0);
    for (const auto& point : points) CHECK(!point.failed);

    // Per point: the kept record is the best of the individual trial runs.
    for (const auto& point : points) {
        RunConfig cfg = base;
        cfg.eta = point.eta;
        double best = std::numeric_limits<double>::infinity();
        for (int trial = 0; trial < 2; ++trial) {
            cfg.seed = base.seed + trial;
            best = std::min(best, run(cfg).final_report.objective);
        }
        CHECK(point.record.final_report.objective == doctest::Approx(best).epsilon(1e-12));
    }

    const auto again = pareto_sweep(base, etas, 2);
    for (size_t i = 0; i < points.size(); ++i) {
        CHECK(points[i].record.waveform == again[i].record.waveform);
    }

    CHECK_THROWS_AS(pareto_sweep(base, etas, 0), ConfigError);
}
