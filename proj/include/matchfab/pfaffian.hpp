#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "matchfab/exact.hpp"
#include "matchfab/generators.hpp"
#include "matchfab/graph.hpp"

namespace matchfab {

inline constexpr long long kDefaultCycleCap = 1'000'000;
inline constexpr int kDefaultDetOrderCap = 700;

// Dense square integer matrix.  Entries start in {-1, 0, +1} for skew
// adjacency matrices and grow into general BigInts under elimination.
class SkewMatrix {
public:
    SkewMatrix() = default;
    explicit SkewMatrix(int order) : order_(order), a_(static_cast<size_t>(order) * order) {}

    int order() const { return order_; }
    const BigInt& at(int i, int j) const { return a_[idx(i, j)]; }
    BigInt& at(int i, int j) { return a_[idx(i, j)]; }

    bool is_antisymmetric() const;

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= order_ || j < 0 || j >= order_)
            throw Error("matrix index out of range");
        return static_cast<size_t>(i) * order_ + j;
    }

    int order_ = 0;
    std::vector<BigInt> a_;
};

// A(G^e): a_ij = +1 iff the edge is directed i -> j, -1 iff j -> i, else 0.
SkewMatrix skew_adjacency(const OrientedGraph& og);

// Deletes the given rows and columns (each list sorted or not, no
// duplicates); realizes the B, B', D, D', K submatrices.
SkewMatrix submatrix(const SkewMatrix& m, const std::vector<int>& drop_rows,
                     const std::vector<int>& drop_cols);

// Fraction-free Bareiss elimination; exact at every step.
BigInt determinant_bareiss(const SkewMatrix& m);

// Determinant modulo a word-sized prime, by Gaussian elimination mod p.
std::uint64_t determinant_mod(const SkewMatrix& m, std::uint64_t prime);

// Bareiss result cross-checked against the residues modulo several primes;
// throws InternalError on a mismatch.
BigInt determinant_exact(const SkewMatrix& m);

// sqrt(det A(G^e)); throws NotPerfectSquareError when the determinant is not
// a perfect square (a non-Pfaffian orientation or a bug).
BigInt pm_count_via_determinant(const OrientedGraph& og);

struct NiceCycle {
    std::vector<int> vertices;  // closed walk without the repeated endpoint
    bool oddly_oriented = false; // meaningful only when built from an orientation
};

// All elementary cycles, each reported once (minimal vertex first, second
// vertex smaller than the last).  Throws CapExceededError beyond cap.
std::vector<std::vector<int>> enumerate_elementary_cycles(const Graph& g, long long cap);

// Even elementary cycles whose removal leaves a graph with a perfect
// matching (the empty remainder counts).
std::vector<NiceCycle> enumerate_nice_cycles(const Graph& g, long long cap = kDefaultCycleCap);
std::vector<NiceCycle> enumerate_nice_cycles(const OrientedGraph& og,
                                             long long cap = kDefaultCycleCap);

// Number of co-oriented edges is odd when the cycle is traversed in vertex
// order; for even cycles this is independent of the traversal direction.
bool oddly_oriented(const OrientedGraph& og, const std::vector<int>& cycle);

// Same parity test for an open path, traversed first to last.
bool oddly_oriented_path(const OrientedGraph& og, const std::vector<int>& path);

struct PfaffianVerdict {
    bool pfaffian = false;
    bool indeterminate = false; // cycle cap exceeded: no verdict either way
    long long cycles_checked = 0;
};

// Certifies the Pfaffian property by exhaustive nice-cycle inspection.
PfaffianVerdict verify_pfaffian(const OrientedGraph& og, long long cycle_cap = kDefaultCycleCap);

struct LemmaCheck {
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

// Numerical verification of the submatrix determinant identities at one
// generation: det B_g = det B'_g = 0, det D'_g = -det D_g,
// det K_{g+1} = (det K_g)^3 det A_g, det A_{g+1} = 4 (det A_g)^2 (det K_g)^2,
// det A_g = 4^{(4^g+6g-1)/9}.
std::map<std::string, LemmaCheck> verify_determinant_lemmas(int g);

// Plain text dump: first line the order, then rows of space-separated entries.
std::string dump_matrix(const SkewMatrix& m);

} // namespace matchfab
