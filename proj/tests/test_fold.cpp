#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"
#include "zne/errors.hpp"
#include "zne/fold.hpp"
#include "zne/noise.hpp"
#include "zne/simulate.hpp"

using namespace zne;

TEST_CASE("resolve_fold arithmetic") {
    SUBCASE("lambda 1 folds nothing") {
        const FoldSpec s = resolve_fold(10, 1.0);
        CHECK(s.n == 0);
        CHECK(s.s == 0);
        CHECK(s.realized_lambda == 1.0);
    }
    SUBCASE("lambda 3 on depth 10") {
        const FoldSpec s = resolve_fold(10, 3.0);
        CHECK(s.k == 10);
        CHECK(s.n == 1);
        CHECK(s.s == 0);
        CHECK(s.realized_lambda == 3.0);
    }
    SUBCASE("fractional lambda snaps to the 2/d grid") {
        // d=4, lambda=1.4: k = round(0.8) = 1 -> n=0, s=1, realized 1.5
        const FoldSpec s = resolve_fold(4, 1.4);
        CHECK(s.k == 1);
        CHECK(s.n == 0);
        CHECK(s.s == 1);
        CHECK(s.realized_lambda == doctest::Approx(1.5));
    }
    SUBCASE("ties round away from zero") {
        // d=4, lambda=1.25: k_real = 0.5 -> k = 1
        CHECK(resolve_fold(4, 1.25).k == 1);
    }
    CHECK_THROWS_AS(resolve_fold(4, 0.99), Error);
    CHECK_THROWS_AS(resolve_fold(0, 2.0), Error);
}

TEST_CASE("fold_global: identity at lambda 1, depth law, unitary preserved") {
    const Circuit c = test::random_circuit(2, 2, 3);
    CHECK(fold_global(c, 1.0) == c);

    const Circuit f3 = fold_global(c, 3.0);
    CHECK(f3.depth() == 6);
    CHECK(test::max_abs_diff(unitary_of(f3), unitary_of(c)) < 1e-10);

    const Circuit c4 = test::random_circuit(2, 4, 9);
    const Circuit f = fold_global(c4, 1.5);
    CHECK(f.depth() == 6);  // d(2n+1) + 2s with n=0, s=1
    // the echo covers the last layer: layers d-1, adj(d-1), (d-1)
    CHECK(f.layers[4] == adjoint(Circuit{2, {c4.layers[3]}}).layers[0]);
    CHECK(f.layers[5] == c4.layers[3]);
    // zero-noise expectation unchanged
    const Observable obs = Observable::projector(0);
    CHECK(simulate_expectation(f, NoiseModel::none(), obs) ==
          doctest::Approx(simulate_expectation(c4, NoiseModel::none(), obs)).epsilon(1e-10));
}

TEST_CASE("fold_gates: subset selection per method") {
    const Circuit c = test::random_circuit(2, 4, 21);

    for (auto method : {FoldMethod::from_left(), FoldMethod::from_right(), FoldMethod::at_random(5)}) {
        CHECK(fold_gates(c, 1.0, method) == c);
        const Circuit f3 = fold_gates(c, 3.0, method);
        CHECK(f3.depth() == 12);  // every layer folded once
        CHECK(test::max_abs_diff(unitary_of(f3), unitary_of(c)) < 1e-10);
    }
    // all methods coincide at odd lambda (s = 0)
    CHECK(fold_gates(c, 3.0, FoldMethod::from_left()) == fold_gates(c, 3.0, FoldMethod::at_random(1)));

    // d=4, lambda=2 -> k=2, n=0, S={0,1} from the left
    const Circuit f = fold_gates(c, 2.0, FoldMethod::from_left());
    CHECK(f.depth() == 8);
    CHECK(f.layers[0] == c.layers[0]);
    CHECK(f.layers[2] == c.layers[0]);  // first layer folded in place
    CHECK(f.layers[3] == c.layers[1]);
    CHECK(f.layers[6] == c.layers[2]);  // later layers untouched
    CHECK(f.layers[7] == c.layers[3]);
    CHECK(test::max_abs_diff(unitary_of(f), unitary_of(c)) < 1e-10);

    // from the right folds the tail instead
    const Circuit fr = fold_gates(c, 2.0, FoldMethod::from_right());
    CHECK(fr.layers[0] == c.layers[0]);
    CHECK(fr.layers[1] == c.layers[1]);
    CHECK(fr.depth() == 8);

    CHECK_THROWS_AS(fold_gates(c, 2.0, FoldMethod::global()), Error);
}

TEST_CASE("folding preserves the unitary across the representable grid") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const int n_qubits = 2 + static_cast<int>(seed % 3);
        const int depth = 3 + static_cast<int>(seed % 5);
        const Circuit c = test::random_circuit(n_qubits, depth, 100 + seed);
        const auto u = unitary_of(c);
        for (double lambda : {1.0, 1.0 + 2.0 / depth, 2.0, 3.0, 3.7}) {
            const FoldSpec spec = resolve_fold(depth, lambda);
            const Circuit fg = fold_global(c, lambda);
            CHECK(fg.depth() == spec.folded_depth(depth));
            CHECK(test::max_abs_diff(unitary_of(fg), u) < 1e-10);
            for (auto method :
                 {FoldMethod::from_left(), FoldMethod::from_right(), FoldMethod::at_random(seed)}) {
                const Circuit f = fold_gates(c, lambda, method);
                CHECK(f.depth() == spec.folded_depth(depth));
                CHECK(test::max_abs_diff(unitary_of(f), u) < 1e-10);
            }
        }
    }
}

TEST_CASE("odd lambda: all methods give the same layer multiset and equal depolarized outcomes") {
    const Circuit c = test::random_circuit(3, 5, 55);
    const double lambda = 5.0;
    const Circuit fg = fold_global(c, lambda);
    const Circuit fl = fold_gates(c, lambda, FoldMethod::from_left());

    auto layer_text = [](const Circuit& cc) {
        std::vector<std::string> v;
        for (const Layer& l : cc.layers) v.push_back(serialize_circuit(Circuit{cc.n_qubits, {l}}));
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(layer_text(fg) == layer_text(fl));

    const NoiseModel nm = NoiseModel::global_depolarizing_per_layer(0.97);
    const Observable obs = Observable::projector(0);
    const double eg = simulate_expectation(fg, nm, obs);
    const double el = simulate_expectation(fl, nm, obs);
    const double er = simulate_expectation(fold_gates(c, lambda, FoldMethod::at_random(3)), nm, obs);
    CHECK(eg == doctest::Approx(el).epsilon(1e-10));
    CHECK(el == doctest::Approx(er).epsilon(1e-10));
}

TEST_CASE("at-random folding is deterministic per seed") {
    const Circuit c = test::random_circuit(3, 7, 77);
    const Circuit a = fold_gates(c, 1.8, FoldMethod::at_random(123));
    const Circuit b = fold_gates(c, 1.8, FoldMethod::at_random(123));
    const Circuit d = fold_gates(c, 1.8, FoldMethod::at_random(124));
    CHECK(a == b);
    CHECK_FALSE(a == d);  // overwhelmingly likely for depth 7
}
