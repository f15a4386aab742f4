#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "zne/circuit.hpp"

namespace zne::bench {

using Mat4 = std::array<cplx, 16>;

Mat4 matmul4(const Mat4& a, const Mat4& b);
Mat4 dagger4(const Mat4& m);

// The full two-qubit Clifford group (11520 elements up to global phase),
// enumerated once by breadth-first search over single-layer generators
// (simultaneous 1q Cliffords, CZ, CNOT both ways, iSWAP). Each element keeps
// the shortest layer word found, which doubles as its canonical
// decomposition into the gate set.
class Clifford2QTable {
  public:
    static const Clifford2QTable& instance();

    int size() const { return static_cast<int>(elems_.size()); }
    const Mat4& unitary(int idx) const { return elems_[static_cast<std::size_t>(idx)].u; }
    int word_length(int idx) const { return elems_[static_cast<std::size_t>(idx)].depth; }
    std::vector<Layer> word(int idx) const;
    int inverse_of(int idx) const { return inverse_[static_cast<std::size_t>(idx)]; }

    // lookup up to global phase; -1 when the matrix is not in the group
    int index_of(const Mat4& u) const;

    // mean layer count of a uniformly drawn element
    double mean_word_length() const { return mean_word_length_; }

  private:
    Clifford2QTable();

    struct Elem {
        Mat4 u;
        int parent;
        int gen;
        int depth;
    };

    // entries quantized after fixing the global phase; exact for Clifford
    // matrix values, tolerant of accumulated rounding
    using Key = std::array<std::int16_t, 32>;
    struct KeyHash {
        std::size_t operator()(const Key& k) const {
            std::size_t h = 1469598103934665603ULL;
            for (std::int16_t v : k) {
                h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(v));
                h *= 1099511628211ULL;
            }
            return h;
        }
    };
    static Key canonical_key(const Mat4& u);

    std::vector<Elem> elems_;
    std::vector<int> inverse_;
    std::vector<Layer> generators_;
    std::unordered_map<Key, int, KeyHash> index_;
    double mean_word_length_ = 0.0;
};

}  // namespace zne::bench
