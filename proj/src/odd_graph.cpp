#include "nestcast/odd_graph.hpp"

#include "nestcast/catalan.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nestcast {

int popcount_mask(Mask m) { return std::popcount(m); }

namespace {

DyckNest blow_to(DyckNest nest, int k) {
    if (static_cast<int>(nest.size() / 2) > k)
        throw std::invalid_argument("appearance_profile: nest heavier than target weight");
    while (static_cast<int>(nest.size() / 2) < k) nest = blow_nest(nest);
    return nest;
}

Mask full_mask(int n) { return (Mask{1} << n) - 1; }

Mask right_rotate(Mask m, int r, int n) {
    if (r == 0) return m & full_mask(n);
    return ((m << r) | (m >> (n - r))) & full_mask(n);
}

std::vector<Mask> all_masks(int weight, int n) {
    std::vector<Mask> out;
    const Mask full = full_mask(n);
    Mask v = full_mask(weight);
    while (true) {
        out.push_back(v);
        const Mask c = v & (~v + 1);
        const Mask r = v + c;
        const Mask next = (((r ^ v) >> 2) / c) | r;
        if (next > full) break;
        v = next;
    }
    return out;
}

} // namespace

Mask appearance_profile(const DyckNest& nest, int k) {
    const DyckNest blown = blow_to(nest, k);
    const std::string word = nest_to_word(blown);
    Mask m = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (word[i] == '1') m |= Mask{1} << (i + 1);
    return m;
}

std::size_t OddGraph::index_of(Mask m) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), m);
    if (it == vertices.end() || *it != m)
        throw std::out_of_range("OddGraph::index_of: no such vertex");
    return static_cast<std::size_t>(it - vertices.begin());
}

bool OddGraph::has_vertex(Mask m) const {
    const auto it = std::lower_bound(vertices.begin(), vertices.end(), m);
    return it != vertices.end() && *it == m;
}

std::vector<Mask> OddGraph::neighbors(Mask m) const {
    if (!has_vertex(m)) throw std::out_of_range("OddGraph::neighbors: no such vertex");
    const Mask comp = ~m & full_mask(n_positions);
    std::vector<Mask> out;
    for (int p = n_positions - 1; p >= 0; --p)
        if (comp & (Mask{1} << p)) out.push_back(comp & ~(Mask{1} << p));
    std::sort(out.begin(), out.end());
    return out;
}

std::string OddGraph::vertex_nest(std::size_t index) const {
    if (index >= vertices.size())
        throw std::out_of_range("OddGraph::vertex_nest: index out of range");
    const DyckNest& nest = class_nests[vertex_class[index]];
    const int n = n_positions;
    const int jp = vertex_rotation[index];
    std::vector<int> rotated(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        const int from = ((i - jp) % n + n) % n;
        rotated[static_cast<std::size_t>(i)] =
            from == 0 ? 0 : nest[static_cast<std::size_t>(from - 1)];
    }
    const bool contiguous =
        std::all_of(rotated.begin(), rotated.end(), [](int v) { return v <= 9; });
    std::string out;
    for (std::size_t i = 0; i < rotated.size(); ++i) {
        if (!contiguous && i > 0) out.push_back(',');
        if (contiguous)
            out.push_back(static_cast<char>('0' + rotated[i]));
        else
            out += std::to_string(rotated[i]);
    }
    return out;
}

OddGraph build_odd(int k, const NestTable* table) {
    if (k < 1 || k > 15)
        throw std::invalid_argument("build_odd: k outside [1, 15]");
    OddGraph g;
    g.k = k;
    g.n_positions = 2 * k + 1;
    NestTable local;
    if (table == nullptr || table->k != k) {
        local = generate_table(k);
        table = &local;
    }
    const std::uint64_t classes = catalan(k);
    g.class_nests.reserve(classes);
    for (std::uint64_t m = 0; m < classes; ++m)
        g.class_nests.push_back(blow_to(table->nests[m], k));

    // All C(2k+1, k) masks of weight k, ascending (Gosper's hack).
    g.vertices = all_masks(k, g.n_positions);

    g.vertex_class.assign(g.vertices.size(), 0);
    g.vertex_rotation.assign(g.vertices.size(), -1);
    for (std::uint64_t m = 0; m < classes; ++m) {
        const Mask base = appearance_profile(g.class_nests[m], k);
        for (int jp = 0; jp < g.n_positions; ++jp) {
            const std::size_t idx = g.index_of(right_rotate(base, jp, g.n_positions));
            if (g.vertex_rotation[idx] != -1)
                throw std::logic_error("build_odd: two classes reach one vertex");
            g.vertex_class[idx] = m;
            g.vertex_rotation[idx] = jp;
        }
    }
    for (int r : g.vertex_rotation)
        if (r < 0) throw std::logic_error("build_odd: vertex not reached by any class");
    return g;
}

Arc arc_at(const OddGraph& g, std::size_t index, int p) {
    if (index >= g.vertices.size())
        throw std::out_of_range("arc_at: index out of range");
    const Mask v = g.vertices[index];
    if (p < 0 || p >= g.n_positions || (v & (Mask{1} << p)))
        throw std::invalid_argument("arc_at: position not free at this vertex");
    Arc a;
    a.from = v;
    a.to = (~v & full_mask(g.n_positions)) & ~(Mask{1} << p);
    a.position = p;
    const int n = g.n_positions;
    const int jp = g.vertex_rotation[index];
    const int from = ((p - jp) % n + n) % n;
    a.color = from == 0
                  ? 0
                  : g.class_nests[g.vertex_class[index]][static_cast<std::size_t>(from - 1)];
    return a;
}

std::vector<Arc> arcs_of(const OddGraph& g, std::size_t index) {
    if (index >= g.vertices.size())
        throw std::out_of_range("arcs_of: index out of range");
    std::vector<Arc> out;
    const Mask v = g.vertices[index];
    for (int p = 0; p < g.n_positions; ++p)
        if (!(v & (Mask{1} << p))) out.push_back(arc_at(g, index, p));
    return out;
}

bool MiddleGraph::adjacent(Mask u, Mask w) const {
    const int wu = popcount_mask(u);
    const int ww = popcount_mask(w);
    if (wu > ww) std::swap(u, w);
    if (std::min(wu, ww) != k || std::max(wu, ww) != k + 1) return false;
    return (u & ~reverse_mask(w, n_positions)) == 0;
}

MiddleGraph build_middle(int k) {
    if (k < 1 || k > 15)
        throw std::invalid_argument("build_middle: k outside [1, 15]");
    MiddleGraph g;
    g.k = k;
    g.n_positions = 2 * k + 1;
    g.lower = all_masks(k, g.n_positions);
    g.upper = all_masks(k + 1, g.n_positions);
    return g;
}

Mask reverse_mask(Mask m, int n_positions) {
    Mask out = 0;
    for (int i = 0; i < n_positions; ++i)
        if (m & (Mask{1} << i)) out |= Mask{1} << (n_positions - 1 - i);
    return out;
}

Mask reverse_complement_mask(Mask m, int n_positions) {
    return ~reverse_mask(m, n_positions) & full_mask(n_positions);
}

Mask lift_partner(Mask y, int n_positions) {
    return reverse_complement_mask(y, n_positions);
}

} // namespace nestcast
