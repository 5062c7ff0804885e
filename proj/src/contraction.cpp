#include "corrmoment/contraction.hpp"

#include <algorithm>
#include <cmath>

#include "corrmoment/parallel.hpp"

namespace corrmoment {

namespace {

std::vector<int> sorted_union(const std::vector<std::vector<int>>& scopes,
                              const std::vector<int>& which) {
    std::vector<int> u;
    for (int f : which)
        for (int v : scopes[static_cast<size_t>(f)]) u.push_back(v);
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
}

}  // namespace

EliminationPlan plan_elimination(int n, std::vector<std::vector<int>> scopes,
                                 const ContractOptions& opt) {
    EliminationPlan plan;
    std::vector<int> vars;
    for (const auto& s : scopes)
        for (int v : s) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    while (!vars.empty()) {
        // pick the variable whose join has the smallest scope
        int best_var = -1;
        size_t best_width = static_cast<size_t>(-1);
        std::vector<int> best_join;
        for (int v : vars) {
            std::vector<int> join;
            for (size_t f = 0; f < scopes.size(); ++f)
                if (std::find(scopes[f].begin(), scopes[f].end(), v) != scopes[f].end())
                    join.push_back(static_cast<int>(f));
            const size_t width = sorted_union(scopes, join).size();
            if (width < best_width) {
                best_width = width;
                best_var = v;
                best_join = std::move(join);
            }
        }
        std::vector<int> united = sorted_union(scopes, best_join);
        plan.order.push_back(best_var);
        plan.ops += std::pow(static_cast<double>(n), static_cast<double>(united.size()));
        std::vector<int> result;
        for (int v : united)
            if (v != best_var) result.push_back(v);
        const size_t cells = static_cast<size_t>(
            std::min(1e18, std::pow(static_cast<double>(n),
                                    static_cast<double>(result.size()))));
        plan.peak_cells = std::max(plan.peak_cells, cells);
        // replace joined scopes by the result scope
        std::sort(best_join.rbegin(), best_join.rend());
        for (int f : best_join) scopes.erase(scopes.begin() + f);
        scopes.push_back(std::move(result));
        vars.erase(std::find(vars.begin(), vars.end(), best_var));
    }
    plan.feasible = plan.peak_cells <= opt.max_table_cells && plan.ops <= opt.max_ops;
    return plan;
}

namespace {

// Materialized intermediate: values over the scope, row-major in scope order.
struct Table {
    std::vector<int> vars;
    std::vector<double> data;
};

double product_at(const std::vector<const Factor*>& lazies,
                  const std::vector<const Table*>& tables, const int* assign,
                  int max_var) {
    double p = 1.0;
    for (const Factor* f : lazies) p *= f->eval(assign);
    for (const Table* t : tables) {
        size_t idx = 0;
        for (int v : t->vars) idx = idx * 0 + idx, (void)v;  // placeholder
        p *= 0.0;
    }
    (void)max_var;
    return p;
}

}  // namespace

double contract_all(int n, const std::vector<Factor>& factors,
                    const ContractOptions& opt) {
    // working set: lazy input factors plus materialized tables
    struct Node {
        std::vector<int> vars;
        const Factor* lazy = nullptr;
        std::vector<double> table;  // used when lazy == nullptr

        double value_at(const int* assign, int n_) const {
            if (lazy) return lazy->eval(assign);
            size_t idx = 0;
            for (int v : vars) idx = idx * static_cast<size_t>(n_) +
                                     static_cast<size_t>(assign[v]);
            return table[idx];
        }
    };

    std::vector<Node> nodes;
    std::vector<std::vector<int>> scopes;
    for (const Factor& f : factors) {
        Node nd;
        nd.vars = f.vars;
        nd.lazy = &f;
        nodes.push_back(std::move(nd));
        scopes.push_back(f.vars);
    }
    EliminationPlan plan = plan_elimination(n, scopes, opt);
    if (!plan.feasible)
        throw CostError("contract_all: elimination over cost cap", plan.ops);

    int max_var = 0;
    for (const Factor& f : factors)
        for (int v : f.vars) max_var = std::max(max_var, v);

    for (int ev : plan.order) {
        std::vector<Node> joined, rest;
        for (Node& nd : nodes) {
            const bool has =
                std::find(nd.vars.begin(), nd.vars.end(), ev) != nd.vars.end();
            (has ? joined : rest).push_back(std::move(nd));
        }
        std::vector<std::vector<int>> jscopes;
        for (const Node& nd : joined) jscopes.push_back(nd.vars);
        std::vector<int> united;
        {
            std::vector<int> all;
            for (const auto& s : jscopes)
                for (int v : s) all.push_back(v);
            std::sort(all.begin(), all.end());
            all.erase(std::unique(all.begin(), all.end()), all.end());
            united = std::move(all);
        }
        std::vector<int> result_vars;
        for (int v : united)
            if (v != ev) result_vars.push_back(v);

        Node out;
        out.vars = result_vars;
        size_t cells = 1;
        for (size_t i = 0; i < result_vars.size(); ++i) cells *= static_cast<size_t>(n);
        out.table.assign(cells, 0.0);

        const long long cellsll = static_cast<long long>(cells);
#pragma omp parallel for schedule(static)
        for (long long ci = 0; ci < cellsll; ++ci) {
            int assign[64] = {};
            std::vector<int> local(static_cast<size_t>(max_var) + 1, 0);
            size_t rem = static_cast<size_t>(ci);
            for (size_t p = result_vars.size(); p-- > 0;) {
                local[static_cast<size_t>(result_vars[p])] = static_cast<int>(rem % n);
                rem /= static_cast<size_t>(n);
            }
            (void)assign;
            KahanSum acc;
            for (int v = 0; v < n; ++v) {
                local[static_cast<size_t>(ev)] = v;
                double prod = 1.0;
                for (const Node& nd : joined) prod *= nd.value_at(local.data(), n);
                acc.add(prod);
            }
            out.table[static_cast<size_t>(ci)] = acc.value();
        }
        rest.push_back(std::move(out));
        nodes = std::move(rest);
    }

    // all variables gone: multiply the scalar nodes
    double result = 1.0;
    std::vector<int> empty_assign(static_cast<size_t>(max_var) + 1, 0);
    for (const Node& nd : nodes) result *= nd.value_at(empty_assign.data(), n);
    return result;
}

namespace {

struct EnumPlan {
    std::vector<int> order;                       // variable ids, outer to inner
    std::vector<std::vector<int>> ready_factors;  // per depth
    int max_var = 0;
};

EnumPlan make_enum_plan(const std::vector<Factor>& factors) {
    EnumPlan plan;
    std::vector<int> vars;
    for (const Factor& f : factors)
        for (int v : f.vars) {
            vars.push_back(v);
            plan.max_var = std::max(plan.max_var, v);
        }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    plan.order = vars;
    plan.ready_factors.resize(vars.size());
    for (size_t f = 0; f < factors.size(); ++f) {
        size_t depth = 0;
        for (int v : factors[f].vars) {
            const size_t pos = static_cast<size_t>(
                std::find(vars.begin(), vars.end(), v) - vars.begin());
            depth = std::max(depth, pos);
        }
        plan.ready_factors[depth].push_back(static_cast<int>(f));
    }
    return plan;
}

double enum_rec(int n, const std::vector<Factor>& factors, const EnumPlan& plan,
                size_t depth, double partial, std::vector<int>& assign) {
    const int var = plan.order[depth];
    const bool last = depth + 1 == plan.order.size();
    KahanSum acc;
    for (int v = 0; v < n; ++v) {
        assign[static_cast<size_t>(var)] = v;
        double p = partial;
        for (int f : plan.ready_factors[depth])
            p *= factors[static_cast<size_t>(f)].eval(assign.data());
        if (last)
            acc.add(p);
        else
            acc.add(enum_rec(n, factors, plan, depth + 1, p, assign));
    }
    return acc.value();
}

}  // namespace

double enumerate_all_serial(int n, const std::vector<Factor>& factors) {
    EnumPlan plan = make_enum_plan(factors);
    if (plan.order.empty()) {
        double p = 1.0;
        int dummy = 0;
        for (const Factor& f : factors) p *= f.eval(&dummy);
        return p;
    }
    // mirror the parallel split: per-outer-value partials combined in order
    std::vector<double> partials(static_cast<size_t>(n));
    for (int v0 = 0; v0 < n; ++v0) {
        std::vector<int> assign(static_cast<size_t>(plan.max_var) + 1, 0);
        assign[static_cast<size_t>(plan.order[0])] = v0;
        double p = 1.0;
        for (int f : plan.ready_factors[0])
            p *= factors[static_cast<size_t>(f)].eval(assign.data());
        partials[static_cast<size_t>(v0)] =
            plan.order.size() == 1 ? p
                                   : enum_rec(n, factors, plan, 1, p, assign);
    }
    KahanSum acc;
    for (double p : partials) acc.add(p);
    return acc.value();
}

double enumerate_all(int n, const std::vector<Factor>& factors) {
    EnumPlan plan = make_enum_plan(factors);
    if (plan.order.empty()) {
        double p = 1.0;
        int dummy = 0;
        for (const Factor& f : factors) p *= f.eval(&dummy);
        return p;
    }
    std::vector<double> partials(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic)
    for (int v0 = 0; v0 < n; ++v0) {
        std::vector<int> assign(static_cast<size_t>(plan.max_var) + 1, 0);
        assign[static_cast<size_t>(plan.order[0])] = v0;
        double p = 1.0;
        for (int f : plan.ready_factors[0])
            p *= factors[static_cast<size_t>(f)].eval(assign.data());
        partials[static_cast<size_t>(v0)] =
            plan.order.size() == 1 ? p
                                   : enum_rec(n, factors, plan, 1, p, assign);
    }
    KahanSum acc;
    for (double p : partials) acc.add(p);
    return acc.value();
}

}  // namespace corrmoment
