#include "corrmoment/graph_reduce.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace corrmoment {

std::vector<int> WeightedGraph::remaining_marks() const {
    std::vector<int> out;
    for (size_t m = 0; m < marks.size(); ++m)
        if (mark_alive[m]) out.push_back(static_cast<int>(m));
    return out;
}

int WeightedGraph::remaining_pair_count() const {
    int c = 0;
    for (size_t m = 0; m < marks.size(); ++m)
        if (mark_alive[m] && marks[m].size() == 2) ++c;
    return c;
}

int WeightedGraph::total_weight() const {
    int w = 0;
    for (const auto& e : edges) w += e.weight;
    return w;
}

bool WeightedGraph::fully_reduced() const {
    return size() == 1 && remaining_marks().empty();
}

PairingGraph build_kgon(const Partition& p) {
    if (p.k < 2) throw std::invalid_argument("build_kgon: need k >= 2");
    PairingGraph g;
    g.k = p.k;
    g.partition = p;
    // canonical block order == first-traversal order of C(pi), since blocks
    // are sorted by smallest slot
    for (const auto& b : p.blocks) {
        std::vector<int> slots;
        for (int e : b) slots.push_back(e - 1);
        g.marks.push_back(std::move(slots));
    }
    return g;
}

WeightedGraph initial_weighted(const PairingGraph& g) {
    WeightedGraph w;
    w.k = g.k;
    w.marks = g.marks;
    w.mark_alive.assign(g.marks.size(), 1);
    w.next_edge_id = g.k;
    for (int v = 0; v < g.k; ++v) w.vertices.push_back(v + 1);
    for (int e = 0; e < g.k; ++e) {
        int mark = -1;
        for (size_t m = 0; m < g.marks.size(); ++m)
            if (std::find(g.marks[m].begin(), g.marks[m].end(), e) != g.marks[m].end())
                mark = static_cast<int>(m);
        w.edges.push_back(GraphEdge{e, 0, mark});
    }
    return w;
}

namespace {

int edge_pos(const WeightedGraph& g, int id) {
    for (int i = 0; i < g.size(); ++i)
        if (g.edges[static_cast<size_t>(i)].id == id) return i;
    return -1;
}

// Remove vertex `vpos` and its two incident edges, splicing in `ne`.
// For a 2-cycle the surviving vertex is the one not at vpos, so callers
// resolve the parallel-edge ambiguity by picking vpos.
void merge_at(WeightedGraph& g, int vpos, const GraphEdge& ne) {
    const int m = g.size();
    if (m < 2) throw std::logic_error("merge_at: nothing to merge");
    if (m == 2) {
        g.vertices = {g.vertices[static_cast<size_t>(1 - vpos)]};
        g.edges = {ne};
        return;
    }
    std::vector<int> nv;
    std::vector<GraphEdge> nedges;
    nv.reserve(static_cast<size_t>(m) - 1);
    nedges.reserve(static_cast<size_t>(m) - 1);
    for (int t = 1; t < m; ++t)
        nv.push_back(g.vertices[static_cast<size_t>((vpos + t) % m)]);
    for (int t = 1; t < m - 1; ++t)
        nedges.push_back(g.edges[static_cast<size_t>((vpos + t) % m)]);
    nedges.push_back(ne);  // runs from v_{vpos-1} back to v_{vpos+1}
    g.vertices = std::move(nv);
    g.edges = std::move(nedges);
}

// Replace the weighted edge at position q and both its neighbours, removing
// the two vertices between them.
void replace3_at(WeightedGraph& g, int q, const GraphEdge& ne) {
    const int m = g.size();
    if (m < 3) throw std::logic_error("replace3_at: cycle too short");
    if (m == 3) {
        g.vertices = {g.vertices[static_cast<size_t>((q + 2) % 3)]};
        g.edges = {ne};
        return;
    }
    std::vector<int> nv;
    std::vector<GraphEdge> nedges;
    for (int t = 2; t < m; ++t)
        nv.push_back(g.vertices[static_cast<size_t>((q + t) % m)]);
    for (int t = 2; t < m - 1; ++t)
        nedges.push_back(g.edges[static_cast<size_t>((q + t) % m)]);
    nedges.push_back(ne);
    g.vertices = std::move(nv);
    g.edges = std::move(nedges);
}

void step_I_pass(WeightedGraph& g, ReductionTrace* trace) {
    for (size_t mk = 0; mk < g.marks.size(); ++mk) {
        if (!g.mark_alive[mk] || g.marks[mk].size() != 2) continue;
        const int m = g.size();
        const int p1 = edge_pos(g, g.marks[mk][0]);
        const int p2 = edge_pos(g, g.marks[mk][1]);
        int vpos = -1;
        if (m == 2) {
            // parallel edges: remove the smaller-labelled vertex
            vpos = g.vertices[0] < g.vertices[1] ? 0 : 1;
        } else if ((p1 + 1) % m == p2) {
            vpos = p2;
        } else if ((p2 + 1) % m == p1) {
            vpos = p1;
        } else {
            continue;
        }
        GraphEdge ne{g.next_edge_id++, 1, -1};
        const int removed = g.vertices[static_cast<size_t>(vpos)];
        g.mark_alive[mk] = 0;
        if (trace)
            trace->push_back(TraceStep{StepKind::I,
                                       {g.marks[mk][0], g.marks[mk][1]},
                                       {removed},
                                       ne.id,
                                       1,
                                       static_cast<int>(mk),
                                       AlgebraKind::TElement});
        merge_at(g, vpos, ne);
    }
}

bool step_II_fixpoint(WeightedGraph& g, ReductionTrace* trace) {
    bool changed = false;
    for (;;) {
        const int m = g.size();
        if (m < 2) return changed;
        // vertex whose two incident edges both carry nonzero weight;
        // smallest original label wins
        int best = -1;
        for (int v = 0; v < m; ++v) {
            const GraphEdge& prev = g.edges[static_cast<size_t>((v - 1 + m) % m)];
            const GraphEdge& next = g.edges[static_cast<size_t>(v)];
            if (prev.id == next.id) continue;
            if (prev.weight > 0 && next.weight > 0 &&
                (best < 0 || g.vertices[static_cast<size_t>(v)] <
                                 g.vertices[static_cast<size_t>(best)]))
                best = v;
        }
        if (best < 0) return changed;
        const GraphEdge& prev = g.edges[static_cast<size_t>((best - 1 + m) % m)];
        const GraphEdge& next = g.edges[static_cast<size_t>(best)];
        GraphEdge ne{g.next_edge_id++, prev.weight + next.weight, -1};
        if (trace)
            trace->push_back(TraceStep{StepKind::II,
                                       {prev.id, next.id},
                                       {g.vertices[static_cast<size_t>(best)]},
                                       ne.id,
                                       ne.weight,
                                       -1,
                                       AlgebraKind::MatrixProduct});
        merge_at(g, best, ne);
        changed = true;
    }
}

struct Site3 {
    int mark;
    int weighted_id;
};

bool step_III_fixpoint(WeightedGraph& g, ReductionTrace* trace) {
    bool changed = false;
    for (;;) {
        const int m = g.size();
        if (m < 3) return changed;
        // collect sites: weighted edge flanked by the two edges of one pair
        std::vector<Site3> sites;
        for (int q = 0; q < m; ++q) {
            const GraphEdge& mid = g.edges[static_cast<size_t>(q)];
            if (mid.weight == 0) continue;
            const GraphEdge& left = g.edges[static_cast<size_t>((q - 1 + m) % m)];
            const GraphEdge& right = g.edges[static_cast<size_t>((q + 1) % m)];
            if (left.mark < 0 || left.mark != right.mark) continue;
            if (g.marks[static_cast<size_t>(left.mark)].size() != 2) continue;
            sites.push_back(Site3{left.mark, mid.id});
        }
        if (sites.empty()) return changed;
        std::sort(sites.begin(), sites.end(), [](const Site3& a, const Site3& b) {
            return std::tie(a.mark, a.weighted_id) < std::tie(b.mark, b.weighted_id);
        });
        bool applied = false;
        for (const Site3& s : sites) {
            // revalidate: an earlier replacement in this sweep may have
            // destroyed the site
            const int mm = g.size();
            if (mm < 3) break;
            const int q = edge_pos(g, s.weighted_id);
            if (q < 0) continue;
            const GraphEdge& mid = g.edges[static_cast<size_t>(q)];
            const GraphEdge& left = g.edges[static_cast<size_t>((q - 1 + mm) % mm)];
            const GraphEdge& right = g.edges[static_cast<size_t>((q + 1) % mm)];
            if (left.mark != s.mark || right.mark != s.mark) continue;
            GraphEdge ne{g.next_edge_id++, mid.weight + 1, -1};
            g.mark_alive[static_cast<size_t>(s.mark)] = 0;
            if (trace)
                trace->push_back(
                    TraceStep{StepKind::III,
                              {left.id, mid.id, right.id},
                              {g.vertices[static_cast<size_t>(q)],
                               g.vertices[static_cast<size_t>((q + 1) % mm)]},
                              ne.id,
                              ne.weight,
                              s.mark,
                              AlgebraKind::SumInMatrix});
            replace3_at(g, q, ne);
            applied = true;
            changed = true;
        }
        if (!applied) return changed;
    }
}

}  // namespace

WeightedGraph step_I(const PairingGraph& g) {
    WeightedGraph w = initial_weighted(g);
    step_I_pass(w, nullptr);
    return w;
}

WeightedGraph step_II(WeightedGraph g) {
    step_II_fixpoint(g, nullptr);
    return g;
}

WeightedGraph step_III(WeightedGraph g) {
    step_III_fixpoint(g, nullptr);
    return g;
}

std::pair<WeightedGraph, ReductionTrace> reduce(const PairingGraph& g) {
    WeightedGraph w = initial_weighted(g);
    ReductionTrace trace;
    step_I_pass(w, &trace);
    for (;;) {
        bool changed = step_II_fixpoint(w, &trace);
        changed |= step_III_fixpoint(w, &trace);
        if (!changed) break;
    }
    return {std::move(w), std::move(trace)};
}

WeightedGraph replay(const PairingGraph& g, const ReductionTrace& trace) {
    WeightedGraph w = initial_weighted(g);
    for (const TraceStep& st : trace) {
        const int m = w.size();
        GraphEdge ne{st.new_edge_id, st.new_weight, -1};
        w.next_edge_id = std::max(w.next_edge_id, st.new_edge_id + 1);
        if (st.kind == StepKind::III) {
            const int q = edge_pos(w, st.consumed_edge_ids[1]);
            if (q < 0) throw std::runtime_error("replay: stale step III edge");
            if (st.mark_removed >= 0) w.mark_alive[static_cast<size_t>(st.mark_removed)] = 0;
            replace3_at(w, q, ne);
            continue;
        }
        // steps I and II: locate the recorded removed vertex
        int vpos = -1;
        for (int v = 0; v < m; ++v) {
            const GraphEdge& prev = w.edges[static_cast<size_t>((v - 1 + m) % m)];
            const GraphEdge& next = w.edges[static_cast<size_t>(v)];
            if (w.vertices[static_cast<size_t>(v)] != st.removed_vertices[0]) continue;
            const int a = st.consumed_edge_ids[0], b = st.consumed_edge_ids[1];
            if ((prev.id == a && next.id == b) || (prev.id == b && next.id == a)) {
                vpos = v;
                break;
            }
        }
        if (vpos < 0) throw std::runtime_error("replay: stale step I/II site");
        if (st.mark_removed >= 0) w.mark_alive[static_cast<size_t>(st.mark_removed)] = 0;
        merge_at(w, vpos, ne);
    }
    return w;
}

std::vector<TupleAdjacency> classify_tuple_adjacency(const WeightedGraph& g) {
    std::vector<TupleAdjacency> out;
    const int m = g.size();
    if (m < 3) return out;
    auto edge = [&](int pos) -> const GraphEdge& {
        return g.edges[static_cast<size_t>(((pos % m) + m) % m)];
    };
    std::vector<char> used(static_cast<size_t>(g.next_edge_id), 0);
    for (int q = 0; q < m; ++q) {
        const GraphEdge& mid = edge(q);
        if (mid.weight == 0 || used[static_cast<size_t>(mid.id)]) continue;
        const GraphEdge& left = edge(q - 1);
        const GraphEdge& right = edge(q + 1);
        if (left.mark < 0 || left.mark != right.mark) continue;
        if (g.marks[static_cast<size_t>(left.mark)].size() != 3) continue;
        // locate the tuple's third edge relative to the flanked position
        TupleAdjacency t;
        t.mark = left.mark;
        if (edge(q + 2).mark == left.mark || edge(q - 2).mark == left.mark) {
            t.type = 1;  // third edge directly attached: one connected arc
            t.edge_ids = {left.id, mid.id, right.id,
                          edge(q + 2).mark == left.mark ? edge(q + 2).id
                                                        : edge(q - 2).id};
        } else if (edge(q + 2).weight > 0 && edge(q + 3).mark == left.mark) {
            t.type = 3;  // tuple edges interleaved with two weighted edges
            t.edge_ids = {left.id, mid.id, right.id, edge(q + 2).id, edge(q + 3).id};
            used[static_cast<size_t>(edge(q + 2).id)] = 1;
        } else if (edge(q - 2).weight > 0 && edge(q - 3).mark == left.mark) {
            t.type = 3;
            t.edge_ids = {edge(q - 3).id, edge(q - 2).id, left.id, mid.id, right.id};
            used[static_cast<size_t>(edge(q - 2).id)] = 1;
        } else {
            t.type = 2;  // third edge in a separate component around mid
            int third = -1;
            for (int e : g.marks[static_cast<size_t>(left.mark)])
                if (e != left.id && e != right.id) third = e;
            t.edge_ids = {left.id, mid.id, right.id, third};
        }
        used[static_cast<size_t>(mid.id)] = 1;
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

const char* mark_style(int mark) {
    static const char* styles[] = {"solid", "dashed", "dotted", "bold",
                                   "dashed,bold", "dotted,bold"};
    return styles[mark % 6];
}

}  // namespace

std::string to_dot(const WeightedGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n  layout=circo;\n";
    const int m = g.size();
    for (int v = 0; v < m; ++v) os << "  a" << g.vertices[static_cast<size_t>(v)] << ";\n";
    for (int e = 0; e < m; ++e) {
        const GraphEdge& ed = g.edges[static_cast<size_t>(e)];
        os << "  a" << g.vertices[static_cast<size_t>(e)] << " -- a"
           << g.vertices[static_cast<size_t>((e + 1) % m)];
        if (ed.weight > 0)
            os << " [label=\"" << ed.weight << "\", color=gray, penwidth=2]";
        else
            os << " [style=\"" << mark_style(ed.mark) << "\", class=\"mark" << ed.mark
               << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const PairingGraph& g, const std::string& name) {
    return to_dot(initial_weighted(g), name);
}

}  // namespace corrmoment
