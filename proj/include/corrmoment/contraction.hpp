// contraction.hpp -- exact summation of factor products over {0..n-1}^V.
//
// Two strategies:
//   contract_all     greedy variable elimination (tensor-network style);
//                    cost and peak table size are planned up front.
//   enumerate_all    plain nested summation with factors hoisted to the
//                    loop depth where their variables are bound; the
//                    fallback when elimination tables would not fit.
//
// Both are deterministic under any thread count: parallel loops fill
// independent cells / per-slice partials that are combined serially.

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace corrmoment {

// Evaluates on the global assignment array indexed by variable id.
using FactorEval = std::function<double(const int*)>;

struct Factor {
    std::vector<int> vars;  // ascending global variable ids
    FactorEval eval;
};

struct ContractOptions {
    std::size_t max_table_cells = 30'000'000;  // per intermediate table
    double max_ops = 6e10;
};

struct EliminationPlan {
    std::vector<int> order;
    double ops = 0.0;
    std::size_t peak_cells = 0;
    bool feasible = true;
};

// Simulates greedy min-scope elimination over the variable scopes alone.
EliminationPlan plan_elimination(int n, std::vector<std::vector<int>> scopes,
                                 const ContractOptions& opt = {});

struct CostError : std::runtime_error {
    double estimated_ops;
    CostError(const std::string& what, double ops)
        : std::runtime_error(what), estimated_ops(ops) {}
};

// Sum over all variables of the product of all factors.
double contract_all(int n, const std::vector<Factor>& factors,
                    const ContractOptions& opt = {});

double enumerate_all_serial(int n, const std::vector<Factor>& factors);
double enumerate_all(int n, const std::vector<Factor>& factors);

}  // namespace corrmoment
