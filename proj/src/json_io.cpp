#include "nestcast/json_io.hpp"

#include "nestcast/catalan.hpp"
#include "nestcast/control_seq.hpp"
#include "nestcast/trgs.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace nestcast {

using nlohmann::json;

std::string mask_to_bits(Mask m, int n_positions) {
    std::string s(static_cast<std::size_t>(n_positions), '0');
    for (int i = 0; i < n_positions; ++i)
        if ((m >> i) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

Mask bits_to_mask(const std::string& bits) {
    if (bits.empty() || bits.size() > 31)
        throw std::invalid_argument("bits_to_mask: need 1..31 characters");
    Mask m = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            m |= (Mask{1} << i);
        else if (bits[i] != '0')
            throw std::invalid_argument("bits_to_mask: invalid character");
    }
    return m;
}

std::string trgs_table_json(int k, const NestTable* table) {
    NestTable local;
    if (table == nullptr || table->k != k) {
        local = generate_table(k);
        table = &local;
    }
    const std::vector<int> h = h_sequence(k, table);
    json rows = json::array();
    std::string b = "0";
    for (std::uint64_t n = 0; n < catalan(k); ++n) {
        json row;
        row["n"] = n;
        row["b"] = b;
        if (n == 0) {
            row["gamma"] = nullptr;
            row["rho"] = nullptr;
            row["h"] = nullptr;
        } else {
            row["gamma"] = gamma_of(b);
            row["rho"] = trgs_rank(rho_of(b));
            row["h"] = h[n];
        }
        rows.push_back(std::move(row));
        b = trgs_successor(b);
    }
    json doc;
    doc["schema"] = "nestcast.trgs.v1";
    doc["k"] = k;
    doc["count"] = catalan(k);
    doc["rows"] = std::move(rows);
    return doc.dump(2);
}

std::string graph_json(const OddGraph& g, bool with_arcs) {
    json vertices = json::array();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        json v;
        v["id"] = i;
        v["mask"] = mask_to_bits(g.vertices[i], g.n_positions);
        v["class"] = g.vertex_class[i];
        v["rotation"] = g.vertex_rotation[i];
        v["nest"] = g.vertex_nest(i);
        vertices.push_back(std::move(v));
    }
    json edges = json::array();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        for (const Mask w : g.neighbors(g.vertices[i])) {
            const std::size_t j = g.index_of(w);
            if (i < j) edges.push_back(json::array({i, j}));
        }
    }
    json doc;
    doc["schema"] = "nestcast.graph.v1";
    doc["family"] = "odd";
    doc["k"] = g.k;
    doc["n_positions"] = g.n_positions;
    doc["vertices"] = std::move(vertices);
    doc["edges"] = std::move(edges);
    if (with_arcs) {
        json arcs = json::array();
        for (std::size_t i = 0; i < g.vertices.size(); ++i) {
            for (const Arc& a : arcs_of(g, i)) {
                json row;
                row["from"] = i;
                row["to"] = g.index_of(a.to);
                row["position"] = a.position;
                row["color"] = a.color;
                arcs.push_back(std::move(row));
            }
        }
        doc["arcs"] = std::move(arcs);
    }
    return doc.dump(2);
}

std::string graph_json(const MiddleGraph& g) {
    json vertices = json::array();
    for (std::size_t i = 0; i < g.lower.size(); ++i) {
        json v;
        v["id"] = i;
        v["mask"] = mask_to_bits(g.lower[i], g.n_positions);
        v["level"] = "lower";
        vertices.push_back(std::move(v));
    }
    const std::size_t base = g.lower.size();
    for (std::size_t i = 0; i < g.upper.size(); ++i) {
        json v;
        v["id"] = base + i;
        v["mask"] = mask_to_bits(g.upper[i], g.n_positions);
        v["level"] = "upper";
        vertices.push_back(std::move(v));
    }
    json edges = json::array();
    for (std::size_t i = 0; i < g.lower.size(); ++i)
        for (std::size_t j = 0; j < g.upper.size(); ++j)
            if (g.adjacent(g.lower[i], g.upper[j]))
                edges.push_back(json::array({i, base + j}));
    json doc;
    doc["schema"] = "nestcast.graph.v1";
    doc["family"] = "middle";
    doc["k"] = g.k;
    doc["n_positions"] = g.n_positions;
    doc["vertices"] = std::move(vertices);
    doc["edges"] = std::move(edges);
    return doc.dump(2);
}

std::string graph_dot(const OddGraph& g, bool with_arcs) {
    std::ostringstream out;
    if (with_arcs) {
        out << "digraph odd_k" << g.k << " {\n";
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            out << "  v" << i << " [label=\""
                << mask_to_bits(g.vertices[i], g.n_positions) << "\"];\n";
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            for (const Arc& a : arcs_of(g, i))
                out << "  v" << i << " -> v" << g.index_of(a.to)
                    << " [label=\"" << a.color << "\"];\n";
    } else {
        out << "graph odd_k" << g.k << " {\n";
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            out << "  v" << i << " [label=\""
                << mask_to_bits(g.vertices[i], g.n_positions) << "\"];\n";
        for (std::size_t i = 0; i < g.vertices.size(); ++i)
            for (const Mask w : g.neighbors(g.vertices[i])) {
                const std::size_t j = g.index_of(w);
                if (i < j) out << "  v" << i << " -- v" << j << ";\n";
            }
    }
    out << "}\n";
    return out.str();
}

std::string graph_dot(const MiddleGraph& g) {
    std::ostringstream out;
    out << "graph middle_k" << g.k << " {\n";
    for (std::size_t i = 0; i < g.lower.size(); ++i)
        out << "  v" << i << " [label=\""
            << mask_to_bits(g.lower[i], g.n_positions) << "\"];\n";
    const std::size_t base = g.lower.size();
    for (std::size_t i = 0; i < g.upper.size(); ++i)
        out << "  v" << (base + i) << " [label=\""
            << mask_to_bits(g.upper[i], g.n_positions) << "\"];\n";
    for (std::size_t i = 0; i < g.lower.size(); ++i)
        for (std::size_t j = 0; j < g.upper.size(); ++j)
            if (g.adjacent(g.lower[i], g.upper[j]))
                out << "  v" << i << " -- v" << (base + j) << ";\n";
    out << "}\n";
    return out.str();
}

std::string two_factor_json(const TwoFactor& f) {
    const int n = 2 * f.k + 1;
    json cycles = json::array();
    for (const VerticalList& list : f.cycles) {
        json c;
        c["n"] = list.n;
        json rows = json::array();
        for (const Mask m : list.rows) rows.push_back(mask_to_bits(m, n));
        c["vertices"] = std::move(rows);
        c["positions"] = list.arc_pos;
        cycles.push_back(std::move(c));
    }
    json doc;
    doc["schema"] = "nestcast.two_factor.v1";
    doc["graph"] = "odd";
    doc["k"] = f.k;
    doc["n_positions"] = n;
    doc["cycles"] = std::move(cycles);
    return doc.dump(2);
}

std::string two_factor_json(const LiftedTwoFactor& f) {
    const int n = 2 * f.k + 1;
    json cycles = json::array();
    for (std::size_t i = 0; i < f.cycles.size(); ++i) {
        json c;
        c["n"] = i;
        json rows = json::array();
        for (const Mask m : f.cycles[i]) rows.push_back(mask_to_bits(m, n));
        c["vertices"] = std::move(rows);
        cycles.push_back(std::move(c));
    }
    json doc;
    doc["schema"] = "nestcast.two_factor.v1";
    doc["graph"] = "middle";
    doc["k"] = f.k;
    doc["n_positions"] = n;
    doc["cycles"] = std::move(cycles);
    return doc.dump(2);
}

std::string hamilton_json(const HamiltonCertificate& c) {
    json cycle = json::array();
    for (const Mask m : c.cycle) cycle.push_back(mask_to_bits(m, c.n_positions));
    json doc;
    doc["schema"] = "nestcast.hamilton.v1";
    doc["graph"] = c.graph;
    doc["k"] = c.k;
    doc["n_positions"] = c.n_positions;
    doc["length"] = c.cycle.size();
    doc["cycle"] = std::move(cycle);
    return doc.dump(2);
}

} // namespace nestcast
