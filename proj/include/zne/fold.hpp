#pragma once

#include <cstdint>

#include "zne/circuit.hpp"

namespace zne {

// Integer arithmetic realizing a requested scale factor on the 2/d grid.
// k = n*d + s whole+partial folds give a circuit of d(2n+1) + 2s layers and
// realized scale 1 + 2k/d.
struct FoldSpec {
    int n = 0;
    int s = 0;
    long k = 0;
    double realized_lambda = 1.0;

    long folded_depth(int d) const { return static_cast<long>(d) * (2L * n + 1) + 2L * s; }
};

enum class FoldMethodKind { Global, FromLeft, FromRight, AtRandom };

struct FoldMethod {
    FoldMethodKind kind = FoldMethodKind::Global;
    std::uint64_t seed = 0;  // used by AtRandom only

    static FoldMethod global() { return {FoldMethodKind::Global, 0}; }
    static FoldMethod from_left() { return {FoldMethodKind::FromLeft, 0}; }
    static FoldMethod from_right() { return {FoldMethodKind::FromRight, 0}; }
    static FoldMethod at_random(std::uint64_t seed) { return {FoldMethodKind::AtRandom, seed}; }
};

// k is the integer closest to d(lambda-1)/2, ties rounded away from zero;
// then n = k / d and s = k % d. lambda < 1 is rejected.
FoldSpec resolve_fold(int depth, double lambda);

// Whole-circuit folding: c . (c^dag . c)^n followed by an echo of the last s
// layers (undo then redo). Unitary is unchanged.
Circuit fold_global(const Circuit& c, double lambda);

// In-place per-layer folding; the subset S of layers folded one extra time is
// chosen by the method (first s, last s, or s sampled without replacement).
Circuit fold_gates(const Circuit& c, double lambda, FoldMethod method);

}  // namespace zne
