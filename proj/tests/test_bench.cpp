#include <doctest.h>

#include <cmath>
#include <set>

#include "test_util.hpp"
#include "zne/errors.hpp"
#include "zne/bench/clifford2q.hpp"
#include "zne/bench/generators.hpp"
#include "zne/bench/scenarios.hpp"
#include "zne/simulate.hpp"

using namespace zne;
using namespace zne::bench;

TEST_CASE("clifford table enumerates the full group") {
    const Clifford2QTable& t = Clifford2QTable::instance();
    CHECK(t.size() == 11520);

    // identity is element 0 with an empty word
    CHECK(t.word(0).empty());
    CHECK(t.inverse_of(0) == 0);

    // inverses compose to the identity
    Rng rng(3);
    for (int rep = 0; rep < 50; ++rep) {
        const int idx = static_cast<int>(rng.uniform_int(11520));
        const int inv = t.inverse_of(idx);
        const Mat4 prod = matmul4(t.unitary(inv), t.unitary(idx));
        CHECK(t.index_of(prod) == 0);
    }

    // words reproduce their unitaries
    for (int rep = 0; rep < 20; ++rep) {
        const int idx = static_cast<int>(rng.uniform_int(11520));
        Circuit c;
        c.n_qubits = 2;
        c.layers = t.word(idx);
        const auto u = unitary_of(c);
        Mat4 m;
        for (int i = 0; i < 16; ++i) m[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)];
        CHECK(t.index_of(m) == idx);
    }
}

TEST_CASE("rb circuits: identity property, determinism, depth calibration") {
    const Observable obs = Observable::projector(0);
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        const Circuit c = generate_rb_circuit(2, 27, seed);
        CHECK(simulate_expectation(c, NoiseModel::none(), obs) == doctest::Approx(1.0).epsilon(1e-10));
    }

    CHECK(generate_rb_circuit(2, 27, 5) == generate_rb_circuit(2, 27, 5));
    CHECK_THROWS_AS(generate_rb_circuit(3, 27, 1), Error);

    double mean_depth = 0.0;
    const int seeds = 20;
    for (int s = 0; s < seeds; ++s) mean_depth += generate_rb_circuit(2, 27, 1000 + s).depth();
    mean_depth /= seeds;
    CHECK(mean_depth > 27.0 * 0.6);
    CHECK(mean_depth < 27.0 * 1.4);
}

TEST_CASE("random6 circuits match the sampled-set contract") {
    const Circuit c = generate_random6(99);
    CHECK(c.n_qubits == 6);
    CHECK(c.depth() == 40);
    CHECK(c == generate_random6(99));
    CHECK_FALSE(c == generate_random6(100));

    const std::set<GateKind> allowed_1q = {GateKind::H, GateKind::X, GateKind::Y,
                                           GateKind::Z, GateKind::S, GateKind::T};
    for (const Layer& l : c.layers) {
        std::set<int> used;
        for (const Gate& g : l.gates) {
            if (g.targets.size() == 1) CHECK(allowed_1q.count(g.kind) == 1);
            else CHECK((g.kind == GateKind::ISwap || g.kind == GateKind::CZ));
            for (int q : g.targets) CHECK(used.insert(q).second);
        }
        CHECK(used.size() == 6);  // dense moments
    }
}

TEST_CASE("mirror circuits are identities of the requested depth") {
    const Circuit c = generate_mirror_circuit(5, 10, 4);
    CHECK(c.n_qubits == 5);
    CHECK(c.depth() == 10);
    CHECK(simulate_expectation(c, NoiseModel::none(), Observable::projector(0)) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("parametric generator emits rotation gates with angles") {
    const Circuit c = generate_random_parametric(4, 8, 11);
    CHECK(c.depth() == 8);
    int rotations = 0;
    for (const Layer& l : c.layers)
        for (const Gate& g : l.gates)
            if (gate_is_parametric(g.kind)) {
                ++rotations;
                CHECK(g.params.size() == 1);
            }
    CHECK(rotations > 8);
}

TEST_CASE("direct noise scaling exponentiates the dissipative strength") {
    const NoiseModel nm = NoiseModel::global_depolarizing_per_layer(0.95);
    const NoiseModel s2 = nm.scaled_by(2.0);
    CHECK(s2.dep_keep == doctest::Approx(0.95 * 0.95));
    CHECK(nm.scaled_by(1.0).dep_keep == doctest::Approx(0.95));

    // E(lambda) of a mirror circuit under direct scaling is exactly
    // exponential: survival = 1/D + (1 - 1/D) p^(d lambda)
    const Circuit c = generate_mirror_circuit(3, 6, 21);
    const Observable obs = Observable::projector(0);
    for (double lambda : {1.0, 1.7, 2.5}) {
        const double e = simulate_expectation(c, nm.scaled_by(lambda), obs);
        const double p = std::pow(0.95, 6.0 * lambda);
        CHECK(e == doctest::Approx(0.125 + 0.875 * p).epsilon(1e-10));
    }
}

TEST_CASE("zne runner: exact mode memoizes and matches direct simulation") {
    const Circuit c = test::random_circuit(2, 6, 8);
    const NoiseModel nm = NoiseModel::local_depolarizing_per_layer(0.01);
    const Observable obs = Observable::projector(0);

    ZneOptions opt;
    opt.scaling = ScalingMethod::Circuit;
    opt.lambdas = {1.0, 2.0, 3.0};
    opt.fit.method = "linear";
    const ZneRun run = run_zne(c, nm, obs, opt);
    REQUIRE(run.curve.size() == 3);
    CHECK(run.curve.points[0].y ==
          doctest::Approx(simulate_expectation(c, nm, obs)).epsilon(1e-12));
    CHECK(run.curve.points[1].y ==
          doctest::Approx(simulate_expectation(fold_global(c, 2.0), nm, obs)).epsilon(1e-12));
    CHECK(run.realized_lambdas[1] == doctest::Approx(2.0));

    // zero noise: every extrapolator returns the exact value
    const ZneRun clean = run_zne(c, NoiseModel::none(), obs, opt);
    CHECK(clean.estimate.value ==
          doctest::Approx(simulate_expectation(c, NoiseModel::none(), obs)).epsilon(1e-9));
}

TEST_CASE("scenario smoke runs are deterministic under the seed") {
    Table2Config cfg;
    cfg.circuits = 2;
    cfg.scalings = {"circuit"};
    cfg.seed = 42;
    const Table2Result a = run_table2(cfg);
    const Table2Result b = run_table2(cfg);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i)
        CHECK(a.records[i].error_percent == b.records[i].error_percent);

    // aggregate recomputable from records
    const Table2Summary* cell = a.find("circuit", "linear");
    REQUIRE(cell != nullptr);
    double sum = 0.0;
    int n = 0;
    for (const Table2Record& r : a.records)
        if (r.scaling == "circuit" && r.extrapolation == "linear" && r.noise == "dep") {
            sum += r.error_percent;
            ++n;
        }
    CHECK(n == cfg.circuits);
    CHECK(cell->dep_mean == doctest::Approx(sum / n).epsilon(1e-12));
}

TEST_CASE("adaptive comparison: errors shrink with budget, reruns identical") {
    AdaptiveCompareConfig cfg;
    cfg.trials = 40;
    cfg.budgets = {400, 1600, 6400};
    const AdaptiveCompareResult r = run_adaptive_compare(cfg);
    REQUIRE(r.levels.size() == 3);
    CHECK(r.levels.back().median_adaptive < r.levels.front().median_adaptive);
    CHECK(r.levels.back().median_nonadaptive < r.levels.front().median_nonadaptive);

    const AdaptiveCompareResult again = run_adaptive_compare(cfg);
    for (std::size_t i = 0; i < r.levels.size(); ++i) {
        CHECK(r.levels[i].median_adaptive == again.levels[i].median_adaptive);
        CHECK(r.levels[i].median_nonadaptive == again.levels[i].median_nonadaptive);
    }
}

TEST_CASE("dense observables evaluate Tr(O rho)") {
    std::vector<cplx> zmat = {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{-1, 0}};
    const Observable z = Observable::dense(zmat, 1);
    Circuit c;
    c.n_qubits = 1;
    c.layers.push_back(Layer{{Gate{GateKind::X, {0}, {}}}});
    CHECK(simulate_expectation(c, NoiseModel::none(), z) == doctest::Approx(-1.0));
    Circuit h;
    h.n_qubits = 1;
    h.layers.push_back(Layer{{Gate{GateKind::H, {0}, {}}}});
    CHECK(simulate_expectation(h, NoiseModel::none(), z) == doctest::Approx(0.0));
}

TEST_CASE("random6 smoke run produces sane records") {
    Random6Config cfg;
    cfg.circuits = 2;
    cfg.seed = 7;
    const Random6Result r = run_random6_study(cfg);
    REQUIRE(r.records.size() == 2);
    for (const auto& rec : r.records) {
        CHECK(rec.l2_unmitigated > 0.0);
        CHECK(rec.l2_mitigated > 0.0);
        CHECK(std::isfinite(rec.improvement));
    }
}

TEST_CASE("random6 full study: the bulk of improvement ratios fall in [1, 7]") {
    const Random6Result r = run_random6_study(Random6Config{});
    int in_band = 0;
    for (const auto& rec : r.records)
        if (rec.improvement >= 1.0 && rec.improvement <= 7.0) ++in_band;
    CHECK(in_band >= static_cast<int>(r.records.size() * 3 / 4));
}

TEST_CASE("table2 full grid lands in the published bands") {
    const Table2Result r = run_table2(Table2Config{});

    // depolarizing column
    const Table2Summary* quad = r.find("circuit", "quadratic");
    REQUIRE(quad != nullptr);
    CHECK(quad->dep_mean > 2.75 * 0.3);  // generous floor; exact fits can beat the published mean
    CHECK(quad->dep_mean < 10.0);

    // amplitude-damping column
    const Table2Summary* unmit = r.find("none", "unmitigated");
    const Table2Summary* lin = r.find("circuit", "linear");
    const Table2Summary* expo = r.find("circuit", "exponential");
    REQUIRE((unmit && lin && expo));
    CHECK(unmit->amp_mean > 10.0);
    CHECK(unmit->amp_mean < 23.0);
    CHECK(lin->amp_mean > 3.1 * 0.5);
    CHECK(lin->amp_mean < 7.7);
    CHECK(expo->amp_mean < unmit->amp_mean);

    // Richardson is allowed to blow past the unmitigated error, and its
    // spread should show the instability
    const Table2Summary* rich = r.find("circuit", "richardson");
    REQUIRE(rich != nullptr);
    CHECK(rich->dep_std > quad->dep_std);
}
