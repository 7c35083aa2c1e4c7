#include "matchflip/visibility.h"

#include <algorithm>
#include <functional>
#include <list>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/make_biconnected_planar.hpp>

namespace matchflip {

namespace {

using bgraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using bedge = boost::graph_traits<bgraph>::edge_descriptor;

bgraph to_boost(const planar_graph_input& g) {
    bgraph bg(g.n);
    int id = 0;
    for (const edge& e : g.edges) {
        auto [d, ok] = boost::add_edge(e.u, e.v, bg);
        boost::put(boost::edge_index, bg, d, id++);
    }
    return bg;
}

}  // namespace

void check_graph_input(const planar_graph_input& g) {
    if (g.n < 0) throw std::invalid_argument("negative vertex count");
    std::set<edge> seen;
    for (const edge& e : g.edges) {
        if (e.u < 0 || e.v < 0 || e.u >= g.n || e.v >= g.n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        if (!seen.insert(make_edge(e.u, e.v)).second) throw std::invalid_argument("duplicate edge");
    }
}

planarity_result planarity_test(const planar_graph_input& g) {
    check_graph_input(g);
    bgraph bg = to_boost(g);
    planarity_result res;
    std::vector<std::vector<bedge>> emb(g.n);
    std::vector<bedge> kuratowski;
    if (g.n == 0) {
        res.planar = true;
        return res;
    }
    res.planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg, boost::boyer_myrvold_params::embedding = &emb[0],
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    auto index = boost::get(boost::edge_index, bg);
    if (res.planar) {
        res.rotation.resize(g.n);
        for (int v = 0; v < g.n; ++v)
            for (const bedge& e : emb[v]) res.rotation[v].push_back(index[e]);
    } else {
        for (const bedge& e : kuratowski) res.certificate.push_back(index[e]);
        std::sort(res.certificate.begin(), res.certificate.end());
    }
    return res;
}

std::vector<int> st_numbering(const planar_graph_input& g, int s, int t) {
    const int n = g.n;
    std::vector<std::vector<int>> adj(n);
    for (const edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    if (!std::binary_search(adj[s].begin(), adj[s].end(), t))
        throw std::invalid_argument("st-numbering needs the edge {s, t}");
    // Iterative DFS from s whose first tree edge is (s, t).
    std::vector<int> pre(n, -1), parent(n, -1), low(n, -1), order;
    std::vector<std::size_t> next_child(n, 0);
    std::vector<int> stack;
    auto visit = [&](int v, int p) {
        pre[v] = int(order.size());
        order.push_back(v);
        parent[v] = p;
        low[v] = v;
        stack.push_back(v);
    };
    visit(s, -1);
    bool first = true;
    while (!stack.empty()) {
        int v = stack.back();
        int w = -1;
        if (first) {
            w = t;
            first = false;
        } else {
            while (next_child[v] < adj[v].size()) {
                int c = adj[v][next_child[v]++];
                if (pre[c] < 0) {
                    w = c;
                    break;
                }
                if (c != parent[v] && pre[c] < pre[low[v]]) low[v] = c;
            }
        }
        if (w >= 0) {
            visit(w, v);
            continue;
        }
        stack.pop_back();
        if (parent[v] >= 0 && pre[low[v]] < pre[low[parent[v]]]) low[parent[v]] = low[v];
    }
    if (int(order.size()) != n) throw std::invalid_argument("st-numbering needs a connected graph");
    // Sign-list construction: each vertex goes next to its parent, on the side
    // dictated by the sign of its low point.
    std::list<int> seq{s, t};
    std::vector<std::list<int>::iterator> where(n);
    where[s] = seq.begin();
    where[t] = std::next(seq.begin());
    std::vector<char> minus(n, 0);
    minus[s] = 1;
    for (int v : order) {
        if (v == s || v == t) continue;
        int p = parent[v];
        if (minus[low[v]]) {
            where[v] = seq.insert(where[p], v);
            minus[p] = 0;
        } else {
            where[v] = seq.insert(std::next(where[p]), v);
            minus[p] = 1;
        }
    }
    std::vector<int> number(n, 0);
    int k = 1;
    for (int v : seq) number[v] = k++;
    return number;
}

bool is_st_numbering(const planar_graph_input& g, const std::vector<int>& number) {
    const int n = g.n;
    if (int(number.size()) != n) return false;
    std::vector<int> sorted = number;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i + 1) return false;
    std::vector<char> lower(n, 0), higher(n, 0);
    for (const edge& e : g.edges) {
        int a = e.u, b = e.v;
        if (number[a] > number[b]) std::swap(a, b);
        higher[a] = 1;
        lower[b] = 1;
    }
    bool has_st_edge = false;
    for (const edge& e : g.edges)
        if (std::min(number[e.u], number[e.v]) == 1 && std::max(number[e.u], number[e.v]) == n)
            has_st_edge = true;
    if (n >= 2 && !has_st_edge) return false;
    for (int v = 0; v < n; ++v) {
        if (number[v] == 1 || number[v] == n) continue;
        if (!lower[v] || !higher[v]) return false;
    }
    return true;
}

namespace {

// Layout of one connected component with at least one edge. Vertex and edge
// ids are local to the component; returns vertex segments and edge columns/rows
// before column refinement.
struct component_layout {
    std::vector<int> row;         // per vertex
    std::vector<int> edge_col;    // per edge
};

component_layout layout_component(const planar_graph_input& g) {
    const int n = g.n;
    const int m0 = int(g.edges.size());
    bgraph bg = to_boost(g);
    std::vector<std::vector<bedge>> emb(n);
    if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                             boost::boyer_myrvold_params::embedding = &emb[0]))
        throw std::logic_error("component unexpectedly nonplanar");
    boost::make_biconnected_planar(bg, &emb[0], boost::get(boost::edge_index, bg));
    // Re-index (new edges get ids after the original ones) and re-embed the augmented graph.
    planar_graph_input aug{n, g.edges};
    {
        std::set<edge> have;
        for (const edge& e : g.edges) have.insert(make_edge(e.u, e.v));
        boost::graph_traits<bgraph>::edge_iterator it, end;
        for (boost::tie(it, end) = boost::edges(bg); it != end; ++it) {
            edge e = make_edge(int(boost::source(*it, bg)), int(boost::target(*it, bg)));
            if (have.insert(e).second) aug.edges.push_back(e);
        }
    }
    planarity_result emb2 = planarity_test(aug);
    const int m = int(aug.edges.size());

    const int s = 0;
    const int st_edge = emb2.rotation[s].front();
    const int t = aug.edges[st_edge].u == s ? aug.edges[st_edge].v : aug.edges[st_edge].u;
    std::vector<int> num = st_numbering(aug, s, t);

    // Darts: 2*e is u->v, 2*e+1 is v->u (u, v as stored).
    auto head = [&](int d) { return d % 2 == 0 ? aug.edges[d / 2].v : aug.edges[d / 2].u; };
    std::vector<std::map<int, int>> pos(n);  // edge id -> position in rotation
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < int(emb2.rotation[v].size()); ++i) pos[v][emb2.rotation[v][i]] = i;
    auto next_dart = [&](int d) {
        const int v = head(d);
        const auto& rot = emb2.rotation[v];
        const int e = rot[(pos[v].at(d / 2) + 1) % rot.size()];
        return aug.edges[e].u == v ? 2 * e : 2 * e + 1;
    };
    std::vector<int> face(2 * m, -1);
    int faces = 0;
    for (int d = 0; d < 2 * m; ++d) {
        if (face[d] >= 0) continue;
        for (int x = d; face[x] < 0; x = next_dart(x)) face[x] = faces;
        ++faces;
    }
    // Orient every edge from lower to higher st-number; its dual arc runs from
    // the face of the forward dart to the face of the backward dart.
    auto forward_dart = [&](int e) {
        return num[aug.edges[e].u] < num[aug.edges[e].v] ? 2 * e : 2 * e + 1;
    };
    const int outer = face[forward_dart(st_edge)];
    // Split the outer face: s_star keeps arcs leaving it, t_star takes arcs entering it.
    const int s_star = outer, t_star = faces;
    const int dual_n = faces + 1;
    std::vector<std::vector<int>> dual(dual_n);
    std::vector<int> indeg(dual_n, 0), left(m), right(m);
    for (int e = 0; e < m; ++e) {
        int d = forward_dart(e);
        int a = face[d], b = face[d ^ 1];
        if (b == outer) b = t_star;
        left[e] = a;
        right[e] = b;
        dual[a].push_back(b);
        ++indeg[b];
    }
    std::vector<int> xf(dual_n, 0);
    std::queue<int> q;
    for (int f = 0; f < dual_n; ++f)
        if (indeg[f] == 0) q.push(f);
    int processed = 0;
    while (!q.empty()) {
        int f = q.front();
        q.pop();
        ++processed;
        for (int h : dual[f]) {
            xf[h] = std::max(xf[h], xf[f] + 1);
            if (--indeg[h] == 0) q.push(h);
        }
    }
    if (processed != dual_n) throw std::logic_error("dual graph is not acyclic");
    (void)s_star;
    component_layout out;
    out.row.resize(n);
    for (int v = 0; v < n; ++v) out.row[v] = num[v] - 1;
    out.edge_col.resize(m0);
    for (int e = 0; e < m0; ++e) out.edge_col[e] = xf[left[e]];
    return out;
}

}  // namespace

visibility_rep build_visibility_rep(const planar_graph_input& g) {
    planarity_result pr = planarity_test(g);
    if (!pr.planar) throw nonplanar_graph("graph is not planar", pr.certificate);
    const int n = g.n;
    visibility_rep rep;
    rep.vertices.resize(n);
    rep.edges.resize(g.edges.size());

    // Connected components, ordered by smallest vertex.
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (const edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    int comps = 0;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = comps;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x])
                if (comp[y] < 0) {
                    comp[y] = comps;
                    stack.push_back(y);
                }
        }
        ++comps;
    }
    coord x_offset = 0;
    for (int c = 0; c < comps; ++c) {
        std::vector<int> verts, local(n, -1), edge_ids;
        for (int v = 0; v < n; ++v)
            if (comp[v] == c) {
                local[v] = int(verts.size());
                verts.push_back(v);
            }
        planar_graph_input sub{int(verts.size()), {}};
        for (int e = 0; e < int(g.edges.size()); ++e)
            if (comp[g.edges[e].u] == c) {
                edge_ids.push_back(e);
                sub.edges.push_back(edge{local[g.edges[e].u], local[g.edges[e].v]});
            }
        if (sub.edges.empty()) {
            rep.vertices[verts[0]] = vertex_segment{0, x_offset, x_offset + 1};
            x_offset += 3;
            continue;
        }
        component_layout lay = layout_component(sub);
        // Give every edge its own column: edges sharing a dual column are
        // spread over a band of columns, ordered bottom to top.
        const int ms = int(sub.edges.size());
        std::vector<int> order(ms);
        std::iota(order.begin(), order.end(), 0);
        auto bottom = [&](int e) {
            return std::min(lay.row[sub.edges[e].u], lay.row[sub.edges[e].v]);
        };
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (lay.edge_col[a] != lay.edge_col[b]) return lay.edge_col[a] < lay.edge_col[b];
            return bottom(a) < bottom(b);
        });
        std::vector<coord> col(ms);
        for (int i = 0; i < ms; ++i) col[order[i]] = x_offset + i;
        coord x_max = x_offset;
        for (int le = 0; le < ms; ++le) {
            const edge& e = sub.edges[le];
            int a = e.u, b = e.v;
            if (lay.row[a] > lay.row[b]) std::swap(a, b);
            edge_segment seg;
            seg.x = col[le];
            seg.y_bottom = lay.row[a];
            seg.y_top = lay.row[b];
            seg.bottom_vertex = verts[a];
            seg.top_vertex = verts[b];
            rep.edges[edge_ids[le]] = seg;
            x_max = std::max(x_max, seg.x);
        }
        for (int lv = 0; lv < sub.n; ++lv) {
            vertex_segment vs{lay.row[lv], 0, 0};
            bool any = false;
            for (int le = 0; le < ms; ++le) {
                const edge& e = sub.edges[le];
                if (e.u != lv && e.v != lv) continue;
                if (!any) vs.x_left = vs.x_right = col[le];
                vs.x_left = std::min(vs.x_left, col[le]);
                vs.x_right = std::max(vs.x_right, col[le]);
                any = true;
            }
            rep.vertices[verts[lv]] = vs;
        }
        x_offset = x_max + 2;
    }
    return rep;
}

std::vector<std::string> check_visibility_rep(const planar_graph_input& g, const visibility_rep& r) {
    std::vector<std::string> out;
    const int n = g.n;
    if (int(r.vertices.size()) != n || r.edges.size() != g.edges.size()) {
        out.push_back("segment counts do not match the graph");
        return out;
    }
    for (int v = 0; v < n; ++v)
        if (r.vertices[v].x_left > r.vertices[v].x_right)
            out.push_back("vertex " + std::to_string(v) + " has an inverted segment");
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const edge_segment& es = r.edges[i];
        const edge& e = g.edges[i];
        if (!((es.bottom_vertex == e.u && es.top_vertex == e.v) ||
              (es.bottom_vertex == e.v && es.top_vertex == e.u))) {
            out.push_back("edge " + std::to_string(i) + " attaches to the wrong vertices");
            continue;
        }
        const vertex_segment& lo = r.vertices[es.bottom_vertex];
        const vertex_segment& hi = r.vertices[es.top_vertex];
        if (es.y_bottom != lo.y || es.y_top != hi.y || es.y_bottom >= es.y_top)
            out.push_back("edge " + std::to_string(i) + " does not span its vertex rows");
        if (es.x < lo.x_left || es.x > lo.x_right || es.x < hi.x_left || es.x > hi.x_right)
            out.push_back("edge " + std::to_string(i) + " attaches outside a vertex segment");
    }
    // Vertex/vertex: disjoint.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const vertex_segment &p = r.vertices[a], &q = r.vertices[b];
            if (p.y == q.y && p.x_left <= q.x_right && q.x_left <= p.x_right)
                out.push_back("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                              " overlap");
        }
    // Edge/edge: distinct columns, hence disjoint.
    for (std::size_t i = 0; i < r.edges.size(); ++i)
        for (std::size_t j = i + 1; j < r.edges.size(); ++j)
            if (r.edges[i].x == r.edges[j].x)
                out.push_back("edges " + std::to_string(i) + " and " + std::to_string(j) +
                              " share a column");
    // Edge/vertex: only at the edge's own attachments.
    for (std::size_t i = 0; i < r.edges.size(); ++i) {
        const edge_segment& es = r.edges[i];
        for (int v = 0; v < n; ++v) {
            if (v == es.bottom_vertex || v == es.top_vertex) continue;
            const vertex_segment& vs = r.vertices[v];
            if (vs.x_left <= es.x && es.x <= vs.x_right && es.y_bottom <= vs.y && vs.y <= es.y_top)
                out.push_back("edge " + std::to_string(i) + " meets vertex " + std::to_string(v));
        }
    }
    return out;
}

visibility_rep stretch(const visibility_rep& r, const std::vector<std::pair<coord, coord>>& rows,
                       const std::vector<std::pair<coord, coord>>& cols) {
    for (const auto& [at, count] : rows)
        if (count < 0) throw std::invalid_argument("negative row insertion");
    for (const auto& [at, count] : cols)
        if (count < 0) throw std::invalid_argument("negative column insertion");
    auto shift = [](const std::vector<std::pair<coord, coord>>& ins, coord v) {
        coord d = 0;
        for (const auto& [at, count] : ins)
            if (v >= at) d += count;
        return v + d;
    };
    visibility_rep out = r;
    for (vertex_segment& vs : out.vertices) {
        vs.y = shift(rows, vs.y);
        vs.x_left = shift(cols, vs.x_left);
        vs.x_right = shift(cols, vs.x_right);
    }
    for (edge_segment& es : out.edges) {
        es.x = shift(cols, es.x);
        es.y_bottom = shift(rows, es.y_bottom);
        es.y_top = shift(rows, es.y_top);
    }
    return out;
}

coord grid_side(const visibility_rep& r) {
    if (r.vertices.empty()) return 0;
    coord xl = r.vertices[0].x_left, xr = r.vertices[0].x_right;
    coord yl = r.vertices[0].y, yh = r.vertices[0].y;
    for (const auto& v : r.vertices) {
        xl = std::min(xl, v.x_left);
        xr = std::max(xr, v.x_right);
        yl = std::min(yl, v.y);
        yh = std::max(yh, v.y);
    }
    for (const auto& e : r.edges) {
        xl = std::min(xl, e.x);
        xr = std::max(xr, e.x);
    }
    return std::max(xr - xl, yh - yl);
}

}  // namespace matchflip
