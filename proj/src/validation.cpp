#include "nestcast/validation.hpp"

#include "json.hpp"

#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace nestcast {

namespace {

using nlohmann::json;

// The checks below re-derive adjacency and counting from first
// principles (bit operations and binomials) instead of calling the
// construction code, so a constructor bug cannot hide behind a
// matching validator bug.

std::uint64_t binom_u64(int n, int r) {
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    unsigned __int128 acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc *= static_cast<unsigned>(n - r + i);
        acc /= static_cast<unsigned>(i);
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint32_t reverse_bits(std::uint32_t m, int n) {
    std::uint32_t out = 0;
    for (int i = 0; i < n; ++i)
        if ((m >> i) & 1u) out |= (1u << (n - 1 - i));
    return out;
}

int weight(std::uint32_t m) { return std::popcount(m); }

/// Middle-levels adjacency: one mask of weight k, one of weight k+1,
/// and the smaller is a subset of the reverse of the larger.
bool middle_adjacent(std::uint32_t u, std::uint32_t w, int k, int n) {
    if (weight(u) > weight(w)) std::swap(u, w);
    if (weight(u) != k || weight(w) != k + 1) return false;
    return (u & ~reverse_bits(w, n)) == 0;
}

struct BitParse {
    bool ok = false;
    std::uint32_t mask = 0;
};

BitParse parse_bits(const std::string& bits, int n) {
    BitParse r;
    if (static_cast<int>(bits.size()) != n) return r;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            r.mask |= (1u << i);
        else if (bits[i] != '0')
            return r;
    }
    r.ok = true;
    return r;
}

ValidationResult fail(std::string message) {
    return ValidationResult{false, std::move(message)};
}

ValidationResult pass() { return ValidationResult{true, ""}; }

struct Header {
    int k = 0;
    int n = 0;          ///< positions
    std::string graph;  ///< "odd" or "middle"
};

/// Common header checks; on failure the result's message is set.
bool read_header(const json& doc, const char* schema, Header& h,
                 ValidationResult& err) {
    if (!doc.is_object()) {
        err = fail("document is not a JSON object");
        return false;
    }
    if (doc.value("schema", "") != schema) {
        err = fail(std::string("schema is not ") + schema);
        return false;
    }
    if (!doc.contains("k") || !doc["k"].is_number_integer()) {
        err = fail("missing integer field k");
        return false;
    }
    h.k = doc["k"].get<int>();
    if (h.k < 1 || h.k > 15) {
        err = fail("k out of range");
        return false;
    }
    h.n = 2 * h.k + 1;
    if (!doc.contains("n_positions") || doc["n_positions"].get<int>() != h.n) {
        err = fail("n_positions does not equal 2k+1");
        return false;
    }
    h.graph = doc.value("graph", "");
    if (h.graph != "odd" && h.graph != "middle") {
        err = fail("graph must be \"odd\" or \"middle\"");
        return false;
    }
    return true;
}

} // namespace

ValidationResult validate_two_factor(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const std::exception& e) {
        return fail(std::string("parse error: ") + e.what());
    }
    try {
        Header h;
        ValidationResult err = pass();
        if (!read_header(doc, "nestcast.two_factor.v1", h, err)) return err;
        const std::uint64_t catalan_k = binom_u64(2 * h.k, h.k) / (h.k + 1);
        const std::uint64_t n_vertices = binom_u64(h.n, h.k);
        if (!doc.contains("cycles") || !doc["cycles"].is_array())
            return fail("missing cycles array");
        const json& cycles = doc["cycles"];
        if (cycles.size() != catalan_k)
            return fail("cycle count is not the Catalan number of k");

        const std::uint32_t full = (1u << h.n) - 1u;
        const std::size_t expect_len =
            (h.graph == "odd") ? static_cast<std::size_t>(h.n)
                               : static_cast<std::size_t>(2 * h.n);
        std::set<std::uint32_t> seen;
        std::set<std::uint64_t> list_ids;
        for (std::size_t c = 0; c < cycles.size(); ++c) {
            std::ostringstream at;
            at << "cycle " << c;
            const json& cyc = cycles[c];
            if (!cyc.contains("n") || !cyc["n"].is_number_unsigned())
                return fail(at.str() + ": missing rank n");
            if (!list_ids.insert(cyc["n"].get<std::uint64_t>()).second)
                return fail(at.str() + ": duplicate rank n");
            if (!cyc.contains("vertices") || !cyc["vertices"].is_array())
                return fail(at.str() + ": missing vertices");
            const json& verts = cyc["vertices"];
            if (verts.size() != expect_len)
                return fail(at.str() + ": wrong cycle length");
            std::vector<std::uint32_t> rows;
            for (const json& v : verts) {
                if (!v.is_string())
                    return fail(at.str() + ": vertex is not a bit string");
                const BitParse p = parse_bits(v.get<std::string>(), h.n);
                if (!p.ok)
                    return fail(at.str() + ": vertex is not a valid bit string");
                rows.push_back(p.mask);
                if (!seen.insert(p.mask).second)
                    return fail(at.str() + ": vertex appears twice in the factor");
            }
            if (h.graph == "odd") {
                if (!cyc.contains("positions") || !cyc["positions"].is_array())
                    return fail(at.str() + ": missing positions");
                const json& pos = cyc["positions"];
                if (pos.size() != rows.size())
                    return fail(at.str() + ": positions length mismatch");
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    const std::uint32_t u = rows[i];
                    const std::uint32_t w = rows[(i + 1) % rows.size()];
                    if (weight(u) != h.k)
                        return fail(at.str() + ": vertex weight is not k");
                    const int p = pos[i].get<int>();
                    if (p < 0 || p >= h.n)
                        return fail(at.str() + ": arc position out of range");
                    if ((u >> p) & 1u)
                        return fail(at.str() + ": arc leaves from an occupied position");
                    if (w != ((~u & full) & ~(1u << p)))
                        return fail(at.str() + ": arc step does not match the recorded position");
                }
            } else {
                for (std::size_t i = 0; i < rows.size(); ++i) {
                    const std::uint32_t u = rows[i];
                    const std::uint32_t w = rows[(i + 1) % rows.size()];
                    if (!middle_adjacent(u, w, h.k, h.n))
                        return fail(at.str() + ": consecutive vertices are not adjacent");
                }
            }
        }
        const std::uint64_t expect_total =
            (h.graph == "odd") ? n_vertices : 2 * n_vertices;
        if (seen.size() != expect_total)
            return fail("factor does not cover every vertex exactly once");
        return pass();
    } catch (const std::exception& e) {
        return fail(std::string("invalid document: ") + e.what());
    }
}

ValidationResult validate_hamilton(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const std::exception& e) {
        return fail(std::string("parse error: ") + e.what());
    }
    try {
        Header h;
        ValidationResult err = pass();
        if (!read_header(doc, "nestcast.hamilton.v1", h, err)) return err;
        const std::uint64_t n_lower = binom_u64(h.n, h.k);
        const std::uint64_t expect_len =
            (h.graph == "odd") ? n_lower : 2 * n_lower;
        if (!doc.contains("cycle") || !doc["cycle"].is_array())
            return fail("missing cycle array");
        const json& cyc = doc["cycle"];
        if (doc.value("length", std::uint64_t{0}) != cyc.size())
            return fail("length field does not match the cycle");
        if (cyc.size() != expect_len)
            return fail("cycle does not have one entry per vertex");
        std::vector<std::uint32_t> rows;
        std::set<std::uint32_t> seen;
        for (const json& v : cyc) {
            if (!v.is_string())
                return fail("cycle entry is not a bit string");
            const BitParse p = parse_bits(v.get<std::string>(), h.n);
            if (!p.ok) return fail("cycle entry is not a valid bit string");
            if (!seen.insert(p.mask).second)
                return fail("cycle revisits a vertex");
            rows.push_back(p.mask);
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::uint32_t u = rows[i];
            const std::uint32_t w = rows[(i + 1) % rows.size()];
            if (h.graph == "odd") {
                if (weight(u) != h.k)
                    return fail("cycle vertex weight is not k");
                if ((u & w) != 0)
                    return fail("consecutive cycle vertices are not disjoint");
            } else {
                if (!middle_adjacent(u, w, h.k, h.n))
                    return fail("consecutive cycle vertices are not adjacent");
            }
        }
        // Distinctness plus the exact count means every vertex appears.
        return pass();
    } catch (const std::exception& e) {
        return fail(std::string("invalid document: ") + e.what());
    }
}

ValidationResult validate_spanning_tree(const SpanningTree& t) {
    if (t.k < 3) return fail("spanning structure needs k >= 3");
    const std::uint64_t lists = binom_u64(2 * t.k, t.k) / (t.k + 1);
    std::vector<std::size_t> parent(lists);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::uint64_t weight_sum = 0;
    std::set<std::pair<std::uint64_t, int>> tuples_used;
    std::vector<std::set<std::uint64_t>> members;
    for (std::size_t e = 0; e < t.edges.size(); ++e) {
        const Hyperedge& edge = t.edges[e];
        std::ostringstream at;
        at << "hyperedge " << e;
        if (edge.size() < 2 || edge.size() > 4)
            return fail(at.str() + ": needs 2 to 4 members");
        std::set<std::uint64_t> ranks;
        for (const TupleRef& m : edge) {
            if (m.n >= lists) return fail(at.str() + ": rank out of range");
            if (m.position < 1 || m.position > 2 * t.k)
                return fail(at.str() + ": flip position out of range");
            if (!ranks.insert(m.n).second)
                return fail(at.str() + ": repeats a list");
            if (!tuples_used.insert({m.n, m.position}).second)
                return fail(at.str() + ": reuses a flippable tuple");
        }
        for (const auto& prev : members) {
            int shared = 0;
            for (const std::uint64_t r : ranks) shared += prev.count(r) ? 1 : 0;
            if (shared > 1)
                return fail(at.str() + ": shares two lists with another hyperedge");
        }
        members.push_back(ranks);
        weight_sum += edge.size() - 1;
        const std::size_t root = find(static_cast<std::size_t>(edge[0].n));
        for (const TupleRef& m : edge)
            parent[find(static_cast<std::size_t>(m.n))] = root;
    }
    if (weight_sum != lists - 1)
        return fail("sum of (|e| - 1) is not (number of lists - 1)");
    const std::size_t root = find(0);
    for (std::size_t i = 0; i < lists; ++i)
        if (find(i) != root)
            return fail("hyperedges do not connect all lists");
    return pass();
}

} // namespace nestcast
