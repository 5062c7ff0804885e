#include "corrmoment/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace corrmoment {

CorrelationParams::CorrelationParams(int n_, double s_, double c_kappa_,
                                     std::map<int, double> c_k)
    : n(n_), s(s_), c_kappa(c_kappa_), c_k_table(std::move(c_k)) {
    if (n < 1) throw std::invalid_argument("CorrelationParams: n must be positive");
    if (!(s > 2.0)) throw std::invalid_argument("CorrelationParams: need s > 2");
    if (!(c_kappa > 0.0))
        throw std::invalid_argument("CorrelationParams: C_kappa must be positive");
    for (const auto& [k, c] : c_k_table) {
        if (k < 3)
            throw std::invalid_argument("CorrelationParams: C(k) table keys start at 3");
        if (!(c > 0.0))
            throw std::invalid_argument("CorrelationParams: amplitudes must be positive");
    }
}

double CorrelationParams::c_k(int k) const {
    auto it = c_k_table.find(k);
    return it == c_k_table.end() ? 1.0 : it->second;
}

int metric_distance(const IndexPair& p, const IndexPair& q) {
    const int direct = std::abs(p.i - q.i) + std::abs(p.j - q.j);
    const int swapped = std::abs(p.i - q.j) + std::abs(p.j - q.i);
    return std::min(direct, swapped);
}

double kappa2(const IndexPair& p, const IndexPair& q,
              const CorrelationParams& params) {
    const int d = metric_distance(p, q);
    return params.c_kappa / (1.0 + std::pow(static_cast<double>(d), params.s));
}

KappaTable::KappaTable(const CorrelationParams& params, int max_distance,
                       KernelKind kind) {
    value.resize(static_cast<size_t>(max_distance) + 1);
    for (int d = 0; d <= max_distance; ++d) {
        value[static_cast<size_t>(d)] =
            kind == KernelKind::Delta
                ? (d == 0 ? params.c_kappa : 0.0)
                : params.c_kappa / (1.0 + std::pow(static_cast<double>(d), params.s));
    }
}

namespace {

struct EdgeRec {
    int d;
    int i, j;
};

std::vector<EdgeRec> sorted_edges(std::span<const IndexPair> points) {
    const int k = static_cast<int>(points.size());
    std::vector<EdgeRec> edges;
    edges.reserve(static_cast<size_t>(k) * (k - 1) / 2);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            edges.push_back({metric_distance(points[i], points[j]), i, j});
    std::sort(edges.begin(), edges.end(), [](const EdgeRec& a, const EdgeRec& b) {
        return std::tie(a.d, a.i, a.j) < std::tie(b.d, b.i, b.j);
    });
    return edges;
}

int find_root(std::vector<int>& parent, int v) {
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

}  // namespace

std::vector<std::pair<int, int>>
minimal_spanning_tree(std::span<const IndexPair> points) {
    const int k = static_cast<int>(points.size());
    if (k < 2) throw std::invalid_argument("minimal_spanning_tree: degenerate tree");

    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<std::pair<int, int>> tree;
    tree.reserve(static_cast<size_t>(k) - 1);
    for (const EdgeRec& e : sorted_edges(points)) {
        const int ri = find_root(parent, e.i);
        const int rj = find_root(parent, e.j);
        if (ri == rj) continue;
        parent[ri] = rj;
        tree.emplace_back(e.i, e.j);
        if (static_cast<int>(tree.size()) == k - 1) break;
    }
    return tree;
}

long long minimal_spanning_tree_weight(std::span<const IndexPair> points) {
    long long total = 0;
    for (auto [i, j] : minimal_spanning_tree(points))
        total += metric_distance(points[i], points[j]);
    return total;
}

double kappa_k_bound(std::span<const IndexPair> points,
                     const CorrelationParams& params) {
    const int k = static_cast<int>(points.size());
    if (k < 3) throw std::invalid_argument("kappa_k_bound: use kappa2");
    double prod = params.c_k(k);
    for (auto [i, j] : minimal_spanning_tree(points))
        prod *= kappa2(points[i], points[j], params);
    return prod;
}

}  // namespace corrmoment
