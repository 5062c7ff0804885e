// kernel.hpp -- index-pair metric and cumulant kernel model.
//
// Index pairs (i,j) of an N x N symmetric matrix carry the distance
//   d(a1a2, a3a4) = min(|a1-a3|+|a2-a4|, |a1-a4|+|a2-a3|),
// i.e. the l1 distance on {1..N}^2 modulo the transpose symmetry.
// The 2-cumulant model is
//   kappa2(p,q) = C_kappa / (1 + d(p,q)^s),   s > 2,
// and cumulants of order k >= 3 are modelled as
//   kappa_k(p_1..p_k) = C(k) * prod_{e in T_min} kappa2(e),
// with T_min the minimal spanning tree on the k points under d.

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace corrmoment {

struct IndexPair {
    int i = 1;  // row index, 1-based
    int j = 1;  // column index, 1-based

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

// Ensemble definition: matrix size n, decay exponent s (strictly > 2),
// kernel amplitude C_kappa and per-order amplitudes C(k), k >= 3.
struct CorrelationParams {
    int n = 0;
    double s = 3.0;
    double c_kappa = 1.0;
    std::map<int, double> c_k_table;

    CorrelationParams() = default;
    CorrelationParams(int n_, double s_, double c_kappa_ = 1.0,
                      std::map<int, double> c_k = {});

    // C(k); orders absent from the table default to 1.
    double c_k(int k) const;
};

// d(p,q); symmetric in its arguments and invariant under swapping the
// coordinates within either pair.
int metric_distance(const IndexPair& p, const IndexPair& q);

// C_kappa / (1 + d^s). The model adopts the decay bound itself, with
// positive sign, as the kernel value.
double kappa2(const IndexPair& p, const IndexPair& q,
              const CorrelationParams& params);

// Kernel evaluation by integer distance. PowerLaw is the model above;
// Delta concentrates all mass at d = 0 (the i.i.d. Wigner limit).
enum class KernelKind { PowerLaw, Delta };

// Precomputed kappa2 as a function of d in [0, max_distance]. Distances
// on an n-grid never exceed 2(n-1), so tables are cheap to build once per
// size and shared by the brute-force summation loops.
struct KappaTable {
    std::vector<double> value;

    KappaTable() = default;
    KappaTable(const CorrelationParams& params, int max_distance,
               KernelKind kind = KernelKind::PowerLaw);

    double operator()(int d) const { return value[static_cast<size_t>(d)]; }
    int max_distance() const { return static_cast<int>(value.size()) - 1; }
};

// Minimal spanning tree on k >= 2 points under d, returned as (i,j) index
// pairs into `points` with i < j. Kruskal with ties broken toward the
// lexicographically smallest (i,j), so the tree is deterministic.
std::vector<std::pair<int, int>>
minimal_spanning_tree(std::span<const IndexPair> points);

// Total d-weight of the tree minimal_spanning_tree() returns.
long long minimal_spanning_tree_weight(std::span<const IndexPair> points);

// C(k) * prod over MST edges of kappa2, k = points.size() >= 3.
double kappa_k_bound(std::span<const IndexPair> points,
                     const CorrelationParams& params);

}  // namespace corrmoment
