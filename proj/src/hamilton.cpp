#include "nestcast/hamilton.hpp"

#include "nestcast/catalan.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace nestcast {

namespace {

DyckNest blow_to(DyckNest nest, int k) {
    while (static_cast<int>(nest.size() / 2) < k) nest = blow_nest(nest);
    return nest;
}

std::string repeat01(int times) {
    std::string s;
    for (int i = 0; i < times; ++i) s += "01";
    return s;
}

PatternWord marked(std::string word, int phi) {
    return PatternWord{std::move(word), phi};
}

} // namespace

PatternEdge pattern_s1(const std::string& infix) {
    return {marked("0" + infix + "00111", 1),
            marked("0" + infix + "01101", 4),
            marked("0" + infix + "01011", 0)};
}

PatternEdge pattern_s2() {
    return {marked("00110011", 6), marked("00100111", 0), marked("00010111", 2)};
}

PatternEdge pattern_s3() {
    return {marked("000111", 0), marked("010011", 1), marked("010101", 5)};
}

PatternEdge pattern_s4() {
    return {marked("000111", 0), marked("001011", 1), marked("010011", 3),
            marked("010101", 5)};
}

PatternWord bar_word(const PatternWord& w) {
    PatternWord out;
    out.word.assign(w.word.rbegin(), w.word.rend());
    for (char& c : out.word) c = (c == '0') ? '1' : '0';
    out.phi = static_cast<int>(w.word.size()) - 1 - w.phi;
    return out;
}

PatternEdge bar_edge(const PatternEdge& e) {
    PatternEdge out;
    for (const PatternWord& w : e) out.push_back(bar_word(w));
    return out;
}

PatternEdge prepend_edge(const std::string& prefix, const PatternEdge& e) {
    PatternEdge out;
    for (const PatternWord& w : e) out.push_back(marked(prefix + w.word, w.phi));
    return out;
}

PatternEdge append_edge(const PatternEdge& e, const std::string& suffix) {
    PatternEdge out;
    for (const PatternWord& w : e)
        out.push_back(marked(w.word + suffix, w.phi + static_cast<int>(suffix.size())));
    return out;
}

PatternEdge embed_edge(const PatternEdge& e, const std::string& v) {
    PatternEdge out;
    for (const PatternWord& w : e) {
        const PatternWord b = bar_word(w);
        out.push_back(marked("0" + b.word + "1" + v,
                             b.phi + 1 + static_cast<int>(v.size())));
    }
    return out;
}

std::vector<std::string> dyck_words(int k) {
    if (k < 0) throw std::invalid_argument("dyck_words: negative weight");
    std::vector<std::string> out;
    std::string cur;
    // Depth-first with '0' before '1' yields lexicographic order directly.
    auto rec = [&](auto&& self, int opens, int closes) -> void {
        if (opens + closes == 2 * k) {
            out.push_back(cur);
            return;
        }
        if (opens < k) {
            cur.push_back('0');
            self(self, opens + 1, closes);
            cur.pop_back();
        }
        if (closes < opens) {
            cur.push_back('1');
            self(self, opens, closes + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace {

/// Pattern hyperedges of the spanning structure for weight k, built by
/// the three-family recursion.  T[m] is the full edge set at weight m,
/// E[m] and F[m] the two auxiliary families feeding larger weights.
std::vector<PatternEdge> pattern_edges(int k) {
    std::vector<std::vector<PatternEdge>> T(static_cast<std::size_t>(k) + 1);
    std::vector<std::vector<PatternEdge>> E(static_cast<std::size_t>(k) + 1);
    std::vector<std::vector<PatternEdge>> F(static_cast<std::size_t>(k) + 1);
    T[3] = {pattern_s1(""), pattern_s3()};
    E[3] = {pattern_s4()};
    for (int m = 4; m <= k; ++m) {
        const std::size_t um = static_cast<std::size_t>(m);
        for (const PatternEdge& e : T[um - 1])
            E[um].push_back(prepend_edge("01", e));
        if (m == 4) {
            F[um] = {pattern_s1("01"), pattern_s2(), embed_edge(pattern_s3(), ""),
                     append_edge(pattern_s1(""), "01")};
        } else {
            for (const PatternEdge& e : T[um - 2])
                F[um].push_back(prepend_edge("0011", e));
            for (int j = 3; j <= m; ++j) {
                for (const std::string& v : dyck_words(m - j)) {
                    F[um].push_back(append_edge(pattern_s1(repeat01(j - 3)), v));
                    for (const PatternEdge& e : E[static_cast<std::size_t>(j) - 1])
                        F[um].push_back(embed_edge(e, v));
                    for (const PatternEdge& e : F[static_cast<std::size_t>(j) - 1])
                        F[um].push_back(embed_edge(e, v));
                }
            }
        }
        T[um] = F[um];
        T[um].push_back(append_edge(pattern_s3(), repeat01(m - 3)));
        for (const PatternEdge& e : E[um - 1]) T[um].push_back(prepend_edge("01", e));
        for (const PatternEdge& e : F[um - 1]) T[um].push_back(prepend_edge("01", e));
    }
    return T[static_cast<std::size_t>(k)];
}

std::uint64_t edge_key(Mask a, Mask b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::unordered_set<std::uint64_t> factor_edge_set(const TwoFactor& f) {
    std::unordered_set<std::uint64_t> keys;
    for (const VerticalList& list : f.cycles) {
        const std::size_t n = list.rows.size();
        for (std::size_t i = 0; i < n; ++i)
            keys.insert(edge_key(list.rows[i], list.rows[(i + 1) % n]));
    }
    return keys;
}

FlippingCycle flip_arrangement(const TwoFactor& f, const Hyperedge& e,
                               const std::unordered_set<std::uint64_t>& factor) {
    const std::size_t count = e.size();
    if (count < 2 || count > 4)
        throw std::invalid_argument("flipping_cycle: hyperedge must have 2 to 4 members");
    std::vector<FlippableTuple> tuples;
    for (const TupleRef& ref : e) {
        if (ref.n >= f.cycles.size())
            throw std::invalid_argument("flipping_cycle: hyperedge names a missing list");
        tuples.push_back(flippable_tuple(f.cycles[static_cast<std::size_t>(ref.n)],
                                         ref.position));
    }
    // Member 0 stays first; the rest are permuted, then each member is
    // tried in both orientations.  The first arrangement whose
    // connectors are disjoint-support non-factor edges wins.
    std::vector<std::size_t> order(count);
    for (std::size_t i = 0; i < count; ++i) order[i] = i;
    do {
        for (unsigned bits = 0; bits < (1u << count); ++bits) {
            std::vector<Mask> a(count), b(count);
            for (std::size_t i = 0; i < count; ++i) {
                const FlippableTuple& t = tuples[order[i]];
                const bool swapped = (bits >> i) & 1u;
                a[i] = swapped ? t.lower : t.upper;
                b[i] = swapped ? t.upper : t.lower;
            }
            bool ok = true;
            for (std::size_t i = 0; i < count && ok; ++i) {
                const Mask from = b[i];
                const Mask to = a[(i + 1) % count];
                if ((from & to) != 0 || factor.count(edge_key(from, to)) != 0)
                    ok = false;
            }
            if (!ok) continue;
            FlippingCycle cycle;
            for (std::size_t i = 0; i < count; ++i) {
                cycle.vertices.push_back(a[i]);
                cycle.vertices.push_back(b[i]);
            }
            return cycle;
        }
    } while (std::next_permutation(order.begin() + 1, order.end()));
    throw std::runtime_error("flipping_cycle: no valid arrangement of the tuples");
}

} // namespace

SpanningTree spanning_tree(int k, const NestTable* table) {
    if (k < 3)
        throw std::invalid_argument("spanning_tree: defined for k >= 3");
    NestTable local;
    if (table == nullptr || table->k != k) {
        local = generate_table(k);
        table = &local;
    }
    std::unordered_map<std::string, std::uint64_t> rank_of;
    rank_of.reserve(table->nests.size());
    for (std::uint64_t n = 0; n < table->nests.size(); ++n)
        rank_of[nest_to_word(blow_to(table->nests[n], k))] = n;

    SpanningTree tree;
    tree.k = k;
    for (const PatternEdge& pe : pattern_edges(k)) {
        Hyperedge edge;
        for (const PatternWord& w : pe) {
            if (static_cast<int>(w.word.size()) != 2 * k)
                throw std::logic_error("spanning_tree: pattern word has wrong length");
            const auto it = rank_of.find(w.word);
            if (it == rank_of.end())
                throw std::logic_error("spanning_tree: pattern word is not a tight word");
            edge.push_back(TupleRef{it->second, 2 * k - w.phi});
        }
        tree.edges.push_back(std::move(edge));
    }
    return tree;
}

FlippingCycle flipping_cycle(const OddGraph& g, const TwoFactor& f,
                             const Hyperedge& e) {
    const auto factor = factor_edge_set(f);
    FlippingCycle cycle = flip_arrangement(f, e, factor);
    for (const Mask m : cycle.vertices)
        if (!g.has_vertex(m))
            throw std::logic_error("flipping_cycle: tuple vertex missing from graph");
    return cycle;
}

HamiltonCertificate hamilton_odd(int k, const NestTable* table) {
    if (k < 3)
        throw std::invalid_argument(
            "hamilton_odd: needs k >= 3 (the k=2 graph is the Petersen graph, "
            "which has no Hamilton cycle)");
    NestTable local;
    if (table == nullptr || table->k != k) {
        local = generate_table(k);
        table = &local;
    }
    const OddGraph g = build_odd(k, table);
    const TwoFactor f = uniform_two_factor(g, table);
    const SpanningTree tree = spanning_tree(k, table);

    const auto factor = factor_edge_set(f);
    std::unordered_set<std::uint64_t> edges = factor;
    for (const Hyperedge& e : tree.edges) {
        const FlippingCycle fc = flip_arrangement(f, e, factor);
        const std::size_t m = fc.vertices.size();
        for (std::size_t i = 0; i < m; ++i) {
            const std::uint64_t key =
                edge_key(fc.vertices[i], fc.vertices[(i + 1) % m]);
            if (factor.count(key) != 0) {
                if (edges.erase(key) == 0)
                    throw std::logic_error("hamilton_odd: tuple edge flipped twice");
            } else {
                if (!edges.insert(key).second)
                    throw std::logic_error("hamilton_odd: connector edge collision");
            }
        }
    }

    const std::size_t n_vertices = g.vertices.size();
    std::vector<std::array<Mask, 2>> adjacency(n_vertices);
    std::vector<int> degree(n_vertices, 0);
    for (const std::uint64_t key : edges) {
        const Mask a = static_cast<Mask>(key >> 32);
        const Mask b = static_cast<Mask>(key & 0xffffffffu);
        for (const auto& [from, to] : {std::pair(a, b), std::pair(b, a)}) {
            const std::size_t idx = g.index_of(from);
            if (degree[idx] >= 2)
                throw std::logic_error("hamilton_odd: vertex degree exceeds 2");
            adjacency[idx][static_cast<std::size_t>(degree[idx]++)] = to;
        }
    }
    for (std::size_t i = 0; i < n_vertices; ++i)
        if (degree[i] != 2)
            throw std::logic_error("hamilton_odd: vertex degree below 2");

    HamiltonCertificate cert;
    cert.k = k;
    cert.graph = "odd";
    cert.n_positions = 2 * k + 1;
    std::vector<bool> visited(n_vertices, false);
    Mask prev = 0; // never a vertex: weight 0 != k
    Mask cur = g.vertices[0];
    for (std::size_t step = 0; step < n_vertices; ++step) {
        const std::size_t idx = g.index_of(cur);
        if (visited[idx])
            throw std::logic_error("hamilton_odd: trace revisits a vertex early");
        visited[idx] = true;
        cert.cycle.push_back(cur);
        const Mask next = (adjacency[idx][0] == prev) ? adjacency[idx][1]
                                                      : adjacency[idx][0];
        prev = cur;
        cur = next;
    }
    if (cur != g.vertices[0])
        throw std::logic_error("hamilton_odd: trace does not close into one cycle");
    return cert;
}

HamiltonCertificate hamilton_middle(int k, const NestTable* table) {
    if (k < 3)
        throw std::invalid_argument(
            "hamilton_middle: needs k >= 3 (the construction builds on the "
            "k >= 3 spanning structure over the vertical lists)");
    NestTable local;
    if (table == nullptr || table->k != k) {
        local = generate_table(k);
        table = &local;
    }
    const OddGraph g = build_odd(k, table);
    const TwoFactor f = uniform_two_factor(g, table);
    const SpanningTree tree = spanning_tree(k, table);
    const int n = 2 * k + 1;

    // M_k is the bipartite double cover of O_k: the lower level keeps each
    // mask, the upper level carries its reverse complement, and every O_k
    // edge (u, w) lifts to the two edges (u, RC(w)) and (RC(u), w).  A cycle
    // of odd length lifts to a single cycle of twice the length, a cycle of
    // even length to two disjoint copies.  Each vertical list has odd length
    // 2k+1, so the lifted 2-factor is again C_k disjoint cycles.
    std::unordered_set<std::uint64_t> edges;
    const LiftedTwoFactor lifted = lift_two_factor(f);
    for (const std::vector<Mask>& cyc : lifted.cycles) {
        const std::size_t m = cyc.size();
        for (std::size_t i = 0; i < m; ++i)
            edges.insert(edge_key(cyc[i], cyc[(i + 1) % m]));
    }

    // Each flipping cycle has even length, so it lifts to two disjoint
    // copies.  Flipping BOTH copies would reproduce the lift of the base
    // Hamilton cycle, which falls apart into two sheets whenever C(2k+1, k)
    // is even.  Flipping exactly ONE copy per hyperedge instead merges the
    // lifted list cycles directly: the copy removes one lift of each tuple
    // arc (the other lift stays behind) and its connectors stitch the
    // touched cycles together in one ring, so the tree of hyperedges joins
    // all C_k lifted cycles into a single one regardless of parity.
    const auto factor = factor_edge_set(f);
    for (const Hyperedge& e : tree.edges) {
        const FlippingCycle fc = flip_arrangement(f, e, factor);
        const std::size_t m = fc.vertices.size();
        std::vector<Mask> w(m);
        for (std::size_t t = 0; t < m; ++t)
            w[t] = (t % 2 == 0) ? fc.vertices[t]
                                : reverse_complement_mask(fc.vertices[t], n);
        for (std::size_t t = 0; t < m; ++t) {
            const std::uint64_t key = edge_key(w[t], w[(t + 1) % m]);
            if (t % 2 == 0) { // (a_i, b_i): one lift of a 2-factor arc
                if (edges.erase(key) == 0)
                    throw std::logic_error(
                        "hamilton_middle: lifted tuple arc missing");
            } else {          // (b_i, a_{i+1}): one lift of a connector
                if (!edges.insert(key).second)
                    throw std::logic_error(
                        "hamilton_middle: lifted connector collision");
            }
        }
    }

    const std::size_t total = 2 * g.vertices.size();
    if (edges.size() != total)
        throw std::logic_error("hamilton_middle: edge count is off after flips");
    std::unordered_map<Mask, std::array<Mask, 2>> adjacency;
    std::unordered_map<Mask, int> degree;
    adjacency.reserve(total);
    degree.reserve(total);
    for (const std::uint64_t key : edges) {
        const Mask a = static_cast<Mask>(key >> 32);
        const Mask b = static_cast<Mask>(key & 0xffffffffu);
        for (const auto& [from, to] : {std::pair(a, b), std::pair(b, a)}) {
            int& d = degree[from];
            if (d >= 2)
                throw std::logic_error("hamilton_middle: vertex degree exceeds 2");
            adjacency[from][static_cast<std::size_t>(d++)] = to;
        }
    }
    if (degree.size() != total)
        throw std::logic_error("hamilton_middle: flips left vertices untouched");

    HamiltonCertificate cert;
    cert.k = k;
    cert.graph = "middle";
    cert.n_positions = n;
    cert.cycle.reserve(total);
    std::unordered_set<Mask> visited;
    visited.reserve(total);
    Mask prev = 0; // never a vertex: weight 0
    Mask cur = g.vertices[0];
    for (std::size_t step = 0; step < total; ++step) {
        if (!visited.insert(cur).second)
            throw std::logic_error("hamilton_middle: trace revisits a vertex early");
        cert.cycle.push_back(cur);
        const std::array<Mask, 2>& a2 = adjacency.at(cur);
        const Mask next = (a2[0] == prev) ? a2[1] : a2[0];
        prev = cur;
        cur = next;
    }
    if (cur != g.vertices[0])
        throw std::logic_error("hamilton_middle: trace does not close into one cycle");
    return cert;
}

} // namespace nestcast
