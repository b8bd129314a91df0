// nestcast: command-line front end over the nest/castling library.
//
// Subcommands:
//   trgs        print the rank table (ranks, strings, branch digit,
//               parent rank, offset) as text or JSON
//   graph       export the odd or middle-levels graph as JSON or DOT
//   two-factor  emit the uniform 2-factor certificate (JSON)
//   hamilton    emit a Hamilton cycle certificate (JSON)
//   verify      run the verification harness against the embedded
//               reference tables and the library's invariants
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 resource cap exceeded.
//
// Caching: nest tables are cached on disk only when --cache-dir is
// given or $NESTCAST_CACHE_DIR is set; otherwise every run recomputes.

#include "CLI11.hpp"
#include "golden_embed.hpp"
#include "json.hpp"

#include "nestcast/castling.hpp"
#include "nestcast/catalan.hpp"
#include "nestcast/control_seq.hpp"
#include "nestcast/dyck.hpp"
#include "nestcast/hamilton.hpp"
#include "nestcast/json_io.hpp"
#include "nestcast/odd_graph.hpp"
#include "nestcast/trgs.hpp"
#include "nestcast/two_factor.hpp"
#include "nestcast/validation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <future>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unistd.h>
#include <unordered_set>
#include <utility>
#include <vector>

using namespace nestcast;

namespace {

constexpr std::uint64_t default_seed = 20260816;

// ------------------------------------------------------------------ caching

struct CacheConfig {
    bool enabled = false;
    std::string dir; ///< empty = resolve via default_cache_dir()
};

CacheConfig cache_config(const std::string& flag_dir) {
    CacheConfig c;
    if (!flag_dir.empty()) {
        c.enabled = true;
        c.dir = flag_dir;
    } else if (const char* env = std::getenv("NESTCAST_CACHE_DIR"); env && *env) {
        c.enabled = true; // load_or_generate_table resolves the env var itself
    }
    return c;
}

NestTable table_for(int k, const CacheConfig& cache) {
    return cache.enabled ? load_or_generate_table(k, cache.dir) : generate_table(k);
}

// --------------------------------------------------- embedded reference data

const std::string& embedded(const std::string& name) {
    const auto& files = golden_embed::files();
    const auto it = files.find(name);
    if (it == files.end())
        throw std::runtime_error("missing embedded reference table: " + name);
    return it->second;
}

std::vector<std::string> embedded_lines(const std::string& name) {
    std::istringstream in(embedded(name));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::vector<std::string>> embedded_rows(const std::string& name) {
    std::vector<std::vector<std::string>> rows;
    for (const std::string& line : embedded_lines(name)) {
        std::istringstream in(line);
        std::vector<std::string> fields;
        std::string f;
        while (in >> f) fields.push_back(f);
        rows.push_back(std::move(fields));
    }
    return rows;
}

// ------------------------------------------------------------ check harness

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

void expect(bool cond, const std::string& what) {
    if (!cond) fail(what);
}

template <typename A, typename B>
void expect_eq(const A& got, const B& want, const std::string& what) {
    if (!(got == static_cast<A>(want))) {
        std::ostringstream os;
        os << what << " (got " << got << ", want " << want << ")";
        fail(os.str());
    }
}

struct Check {
    std::string name;
    std::function<void()> run;
};

struct CheckResult {
    bool ok = false;
    long long ms = 0;
    std::string message;
};

/// Runs every check, at most `jobs` concurrently, and prints one line
/// per check in registration order.  Returns the number of failures.
int run_checks(const std::vector<Check>& checks, int jobs) {
    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= checks.size()) return;
            const auto start = std::chrono::steady_clock::now();
            CheckResult r;
            try {
                checks[i].run();
                r.ok = true;
            } catch (const std::exception& e) {
                r.ok = false;
                r.message = e.what();
            }
            r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
            results[i] = std::move(r);
        }
    };
    const int degree = std::max(1, std::min<int>(jobs, static_cast<int>(checks.size())));
    std::vector<std::future<void>> pool;
    for (int j = 1; j < degree; ++j) pool.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : pool) f.get();

    int failures = 0;
    long long total_ms = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const CheckResult& r = results[i];
        total_ms += r.ms;
        if (!r.ok) ++failures;
        std::printf("CHECK %s: %s (%lld ms)%s%s\n", checks[i].name.c_str(),
                    r.ok ? "ok" : "FAIL", r.ms, r.message.empty() ? "" : ": ",
                    r.message.c_str());
    }
    std::printf("%zu checks, %d failures (%lld ms total)\n", checks.size(), failures,
                total_ms);
    return failures;
}

// ------------------------------------------------------------ shared helpers

DyckNest blow_to(DyckNest nest, int k) {
    while (static_cast<int>(nest.size()) < 2 * k) nest = blow_nest(nest);
    return nest;
}

std::string pad_to(std::string b, std::size_t width) {
    while (b.size() < width) b.insert(b.begin(), '0');
    return b;
}

Mask rotate_left(Mask m, int j, int width) {
    j %= width;
    const Mask full = (Mask{1} << width) - 1;
    return ((m << j) | (m >> (width - j))) & full;
}

std::string join_digits(const std::vector<int>& v) {
    std::string out;
    for (const int d : v) out += static_cast<char>('0' + d);
    return out;
}

std::uint64_t binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    std::uint64_t v = 1;
    for (int i = 1; i <= r; ++i) v = v * static_cast<std::uint64_t>(n - r + i) /
                                      static_cast<std::uint64_t>(i);
    return v;
}

using EdgeKeySet = std::set<std::vector<std::pair<std::uint64_t, int>>>;

EdgeKeySet normalized_tree(const SpanningTree& t) {
    EdgeKeySet out;
    for (const Hyperedge& e : t.edges) {
        std::vector<std::pair<std::uint64_t, int>> members;
        for (const TupleRef& ref : e) members.emplace_back(ref.n, ref.position);
        std::sort(members.begin(), members.end());
        out.insert(members);
    }
    return out;
}

EdgeKeySet embedded_tree(const std::string& file) {
    const auto rows = embedded_rows(file);
    EdgeKeySet out;
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
        expect(rows[i][0] == "e" && rows[i + 1][0] == "p" &&
                   rows[i].size() == rows[i + 1].size(),
               file + ": malformed hyperedge row pair");
        std::vector<std::pair<std::uint64_t, int>> members;
        for (std::size_t j = 1; j < rows[i].size(); ++j)
            members.emplace_back(std::stoull(rows[i][j]), std::stoi(rows[i + 1][j]));
        std::sort(members.begin(), members.end());
        out.insert(members);
    }
    return out;
}

// ------------------------------------------------------- suite: tables

std::vector<Check> tables_checks() {
    std::vector<Check> checks;

    checks.push_back({"growth-strings", [] {
        const auto lines = embedded_lines("trgs_first.txt");
        expect_eq(lines.size(), std::size_t{18}, "count");
        for (std::size_t n = 0; n < lines.size(); ++n)
            expect_eq(trgs_unrank(n), lines[n], "rank " + std::to_string(n));
    }});

    checks.push_back({"branch-digits", [] {
        const auto rows = embedded_rows("gamma_42.txt");
        expect_eq(rows[0].size(), std::size_t{42}, "count");
        for (std::size_t i = 0; i < rows[0].size(); ++i)
            expect_eq(gamma_of(std::uint64_t{i + 1}), std::stoi(rows[0][i]),
                      "rank " + std::to_string(i + 1));
        expect_eq(gamma_of(std::uint64_t{43}), 1, "rank 43");
    }});

    checks.push_back({"parent-ranks", [] {
        const auto rows = embedded_rows("rho_41.txt");
        expect_eq(rows[0].size(), std::size_t{41}, "count");
        for (std::size_t i = 0; i < rows[0].size(); ++i)
            expect_eq(parent_of(i + 1), std::stoull(rows[0][i]),
                      "rank " + std::to_string(i + 1));
    }});

    checks.push_back({"tight-nests", [] {
        const auto lines = embedded_lines("tight_nests_14.txt");
        const NestTable t = generate_table(4);
        expect_eq(lines.size(), std::size_t{14}, "count");
        for (std::size_t n = 0; n < lines.size(); ++n)
            expect_eq(render_nest(t.nests[n]), lines[n], "rank " + std::to_string(n));
    }});

    checks.push_back({"tight-words", [] {
        const auto lines = embedded_lines("tight_words_14.txt");
        const NestTable t = generate_table(4);
        expect_eq(lines.size(), std::size_t{14}, "count");
        for (std::size_t n = 0; n < lines.size(); ++n)
            expect_eq(nest_to_word(t.nests[n]), lines[n], "rank " + std::to_string(n));
    }});

    checks.push_back({"blown-words", [] {
        const auto lines = embedded_lines("blown4_words.txt");
        const NestTable t = generate_table(4);
        for (std::size_t n = 0; n < lines.size(); ++n)
            expect_eq(nest_to_word(blow_to(t.nests[n], 4)), lines[n],
                      "rank " + std::to_string(n));
    }});

    checks.push_back({"castle-table", [] {
        const auto rows = embedded_rows("castle_steps.txt");
        expect_eq(rows.size(), std::size_t{14}, "row count");
        const NestTable t = generate_table(4);
        for (const auto& row : rows) {
            const std::uint64_t n = std::stoull(row[0]);
            const std::string at = " at rank " + std::to_string(n);
            if (n == 0) {
                expect_eq(row[7], render_nest(t.nests[0], true), "root nest");
                expect_eq(row[9], render_clone(clone_of(0, 2)), "root signature");
                continue;
            }
            const int k = tight_half_length(n);
            expect_eq(std::stoi(row[1]), k, "half length" + at);
            const std::uint64_t rho = parent_of(n);
            expect_eq(std::stoull(row[2]), rho, "parent rank" + at);
            expect_eq(row[3], pad_to(trgs_unrank(rho), static_cast<std::size_t>(k) - 1),
                      "padded parent" + at);
            expect_eq(row[4], pad_to(trgs_unrank(n), static_cast<std::size_t>(k) - 1),
                      "padded child" + at);
            expect_eq(std::stoi(row[5]), gamma_of(n), "branch digit" + at);
            expect_eq(row[6], render_nest(blow_to(t.nests[rho], k), true),
                      "blown parent nest" + at);
            expect_eq(row[7], render_nest(t.nests[n], true), "child nest" + at);
            expect_eq(row[8], render_clone(clone_of(rho, k)), "parent signature" + at);
            expect_eq(row[9], render_clone(clone_of(n, k)), "child signature" + at);
            const CloneSignature sigma = clone_of(n, k);
            expect_eq(std::stoi(row[10]),
                      sigma[static_cast<std::size_t>(gamma_of(n)) - 1],
                      "measured entry" + at);
            expect(castle_step(t.nests[rho], trgs_unrank(n)) == t.nests[n],
                   "castle step" + at);
        }
    }});

    checks.push_back({"rank-offset-table", [] {
        const auto rows = embedded_rows("rank_table_42.txt");
        expect_eq(rows.size(), std::size_t{42}, "row count");
        const std::vector<int> h = h_sequence(5);
        for (const auto& row : rows) {
            const std::uint64_t n = std::stoull(row[0]);
            const std::string at = " at rank " + std::to_string(n);
            std::string b = trgs_unrank(n);
            expect_eq(row[1], b, "string" + at);
            if (n == 0) {
                expect(row[2] == "-" && row[3] == "-" && row[4] == "-", "root row");
                continue;
            }
            expect_eq(std::stoi(row[2]), gamma_of(n), "branch digit" + at);
            expect_eq(std::stoull(row[3]), parent_of(n), "parent rank" + at);
            expect_eq(std::stoi(row[4]), h[n], "offset" + at);
        }
    }});

    checks.push_back({"tail-offsets", [] {
        for (const auto& row : embedded_rows("h_tails.txt"))
            expect_eq(h_of(std::stoull(row[0])), std::stoi(row[1]),
                      "rank " + row[0]);
    }});

    checks.push_back({"flip-table", [] {
        for (const auto& row : embedded_rows("flip_pairs.txt")) {
            const std::uint64_t n = std::stoull(row[0]);
            const std::uint64_t r = std::stoull(row[1]);
            const int hn = std::stoi(row[2]);
            const int hr = std::stoi(row[3]);
            const std::string at = " for pair " + row[0] + "/" + row[1];
            expect_eq(h_of(n), hn, "offset of n" + at);
            expect_eq(h_of(r), hr, "offset of r" + at);
            const int k = tight_half_length(n);
            expect_eq(tight_half_length(r), k, "half lengths" + at);
            switch (classify_flip(n, r)) {
            case FlipKind::preserved:
                expect(hn == hr && flavor_of(n) == flavor_of(r), "preserved flip" + at);
                break;
            case FlipKind::supplementary_x_to_y:
                expect(flavor_of(n) == CastleFlavor::X &&
                           flavor_of(r) == CastleFlavor::Y && hr == k + hn - 1,
                       "x-to-y flip" + at);
                break;
            case FlipKind::supplementary_y_to_x:
                expect(flavor_of(n) == CastleFlavor::Y &&
                           flavor_of(r) == CastleFlavor::X && hr == hn + 1 - k,
                       "y-to-x flip" + at);
                break;
            }
        }
    }});

    checks.push_back({"thread-table", [] {
        const auto rows = embedded_rows("threads_k6.txt");
        const std::vector<Thread> threads = thread_partition(6);
        expect_eq(threads.size(), rows.size(), "thread count");
        std::uint64_t next_rank = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::string at = " at thread " + std::to_string(i);
            expect_eq(threads[i].head, std::stoull(rows[i][1]), "head" + at);
            expect_eq(threads[i].edge_count, std::stoi(rows[i][2]), "edges" + at);
            expect_eq(threads[i].head_gamma, rows[i][3] == "*" ? 0 : std::stoi(rows[i][3]),
                      "head digit" + at);
            expect_eq(threads[i].head, next_rank, "tiling" + at);
            next_rank = threads[i].head +
                        static_cast<std::uint64_t>(threads[i].edge_count) + 1;
            for (int s = 1; s <= threads[i].edge_count; ++s)
                expect_eq(parent_of(threads[i].head + static_cast<std::uint64_t>(s)),
                          threads[i].head + static_cast<std::uint64_t>(s) - 1,
                          "interior parent" + at);
        }
        expect_eq(next_rank, catalan(6), "threads must tile the rank range");
    }});

    checks.push_back({"triangle-table", [] {
        const auto rows = embedded_rows("catalan_triangle.txt");
        expect_eq(rows.size(), std::size_t{8}, "line count");
        for (std::size_t n = 0; n < rows.size(); ++n) {
            const auto line = triangle_line(static_cast<int>(n));
            expect_eq(line.size(), rows[n].size(), "width of line " + std::to_string(n));
            for (std::size_t i = 0; i < line.size(); ++i)
                expect_eq(line[i], std::stoull(rows[n][i]),
                          "entry " + std::to_string(n) + "," + std::to_string(i));
        }
    }});

    checks.push_back({"rotation-classes", [] {
        const OddGraph g = build_odd(3);
        const auto rows = embedded_rows("rotation_classes_k3.txt");
        expect_eq(rows.size(), std::size_t{5}, "class count");
        std::set<Mask> all;
        for (std::size_t m = 0; m < rows.size(); ++m) {
            std::set<Mask> frozen, orbit;
            const Mask profile = appearance_profile(g.class_nests[m], 3);
            for (int j = 0; j < 7; ++j) {
                frozen.insert(bits_to_mask(rows[m][static_cast<std::size_t>(j)]));
                orbit.insert(rotate_left(profile, j, 7));
            }
            expect(frozen == orbit, "orbit of class " + std::to_string(m));
            all.insert(orbit.begin(), orbit.end());
        }
        expect_eq(all.size(), std::size_t{35}, "orbit cover");
    }});

    checks.push_back({"arc-table", [] {
        const OddGraph g = build_odd(3);
        const auto rows = embedded_rows("arcs_k3.txt");
        expect_eq(rows.size(), std::size_t{20}, "arc count");
        for (const auto& row : rows) {
            const std::uint64_t n = std::stoull(row[0]);
            const int p = std::stoi(row[1]);
            const std::string at = " for class " + row[0] + " position " + row[1];
            const Mask from = appearance_profile(g.class_nests[n], 3);
            const Arc arc = arc_at(g, g.index_of(from), p);
            expect((arc.from & arc.to) == 0, "disjoint supports" + at);
            const std::size_t to_idx = g.index_of(arc.to);
            expect_eq(g.vertex_nest(to_idx), row[2], "far nest" + at);
            expect_eq(g.vertex_class[to_idx], std::stoull(row[3]), "far class" + at);
            expect_eq(g.vertex_rotation[to_idx], std::stoi(row[4]), "far rotation" + at);
            expect_eq(arc.color + arc_at(g, to_idx, p).color, 3, "color sum" + at);
        }
    }});

    checks.push_back({"permutation-table", [] {
        const auto rows = embedded_rows("permutations.txt");
        expect_eq(rows.size(), std::size_t{9}, "case count");
        std::size_t differing = 0;
        for (const auto& row : rows) {
            const int k = std::stoi(row[0]);
            std::string b = row[1];
            while (b.size() > 1 && b.front() == '0') b.erase(b.begin());
            const std::uint64_t n = trgs_rank(b);
            const ColumnPermutation cp = permutation_of(n, k);
            const std::string at =
                " for rank " + std::to_string(n) + " at k=" + row[0];
            expect_eq(join_digits(cp.p), row[2], "p" + at);
            expect_eq(join_digits(cp.pi), row[3], "pi" + at);
            if (row[2] != row[3]) ++differing;
        }
        expect_eq(differing, std::size_t{2}, "cases where pi differs from p");
    }});

    checks.push_back({"list-table", [] {
        const OddGraph g1 = build_odd(1);
        const TwoFactor f1 = uniform_two_factor(g1);
        for (const auto& row : embedded_rows("list_rows_k1.txt")) {
            const VerticalList& l = f1.cycles[std::stoull(row[0])];
            const std::size_t r = std::stoull(row[1]);
            expect_eq(g1.vertex_nest(g1.index_of(l.rows[r])), row[2], "k=1 nest");
            expect_eq(l.arc_pos[r], std::stoi(row[3]), "k=1 schedule");
        }
        const OddGraph g2 = build_odd(2);
        const TwoFactor f2 = uniform_two_factor(g2);
        for (const auto& row : embedded_rows("list_rows_k2.txt")) {
            const VerticalList& l = f2.cycles[std::stoull(row[0])];
            const std::size_t r = std::stoull(row[1]);
            expect_eq(g2.vertex_nest(g2.index_of(l.rows[r])), row[2], "k=2 nest");
            expect_eq(l.arc_pos[r], std::stoi(row[3]), "k=2 schedule");
        }
        const OddGraph g3 = build_odd(3);
        const TwoFactor f3 = uniform_two_factor(g3);
        for (const auto& row : embedded_rows("list_rows_k3.txt")) {
            const VerticalList& l = f3.cycles[std::stoull(row[0])];
            const std::size_t r = std::stoull(row[1]);
            const std::string at = " at list " + row[0] + " row " + row[1];
            expect_eq(g3.vertex_nest(g3.index_of(l.rows[r])), row[2], "k=3 nest" + at);
            expect_eq(l.arc_pos[r], std::stoi(row[3]), "k=3 schedule" + at);
            expect_eq(l.row_class[r], std::stoull(row[4]), "k=3 class" + at);
            expect_eq(l.row_rotation[r], std::stoi(row[5]), "k=3 rotation" + at);
        }
        const auto arcpos4 = embedded_rows("list0_arcpos_k4.txt");
        const OddGraph g4 = build_odd(4);
        const VerticalList l4 = vertical_list(g4, 0);
        expect_eq(l4.arc_pos.size(), arcpos4[0].size(), "k=4 schedule length");
        for (std::size_t i = 0; i < arcpos4[0].size(); ++i)
            expect_eq(l4.arc_pos[i], std::stoi(arcpos4[0][i]),
                      "k=4 schedule entry " + std::to_string(i));
        const SpanningTree tree3 = spanning_tree(3);
        for (const auto& row : embedded_rows("list_marks_k3.txt")) {
            const std::size_t list = std::stoull(row[0]);
            const int lower_row = std::stoi(row[1]);
            const std::size_t z = std::stoull(row[2]);
            const std::string at = " at list " + row[0] + " row " + row[1];
            const VerticalList& l = f3.cycles[list];
            const int j = l.arc_pos[static_cast<std::size_t>(lower_row) - 1];
            const FlippableTuple t = flippable_tuple(l, j);
            expect(t.upper == l.rows[static_cast<std::size_t>(lower_row) - 1] &&
                       t.lower == l.rows[static_cast<std::size_t>(lower_row)],
                   "marked pair" + at);
            bool found = false;
            for (const TupleRef& ref : tree3.edges[z])
                if (ref.n == list && ref.position == j) found = true;
            expect(found, "marked pair must belong to its hyperedge" + at);
        }
    }});

    return checks;
}

// --------------------------------------------------- suite: properties

std::vector<Check> properties_checks(int max_k, std::uint64_t seed) {
    std::vector<Check> checks;
    const auto capped = [max_k](int hi) { return std::min(max_k, hi); };

    checks.push_back({"rank-roundtrip", [max_k, seed] {
        std::mt19937_64 rng(seed);
        const int k = std::min(max_k + 3, 12);
        std::uniform_int_distribution<std::uint64_t> dist(0, catalan(k) - 1);
        for (int i = 0; i < 300; ++i) {
            const std::uint64_t n = dist(rng);
            expect_eq(trgs_rank(trgs_unrank(n)), n, "rank " + std::to_string(n));
        }
    }});

    checks.push_back({"successor-order", [capped] {
        const std::uint64_t limit = catalan(capped(6));
        std::string b = "0";
        for (std::uint64_t n = 0; n + 1 < limit; ++n) {
            const std::string next = trgs_successor(b);
            expect_eq(trgs_rank(next), n + 1, "successor of rank " + std::to_string(n));
            b = next;
        }
    }});

    checks.push_back({"parent-digit", [capped] {
        for (std::uint64_t n = 1; n < catalan(capped(6)); ++n) {
            const std::string b = trgs_unrank(n);
            const std::string p = rho_of(b);
            expect_eq(trgs_rank(p), parent_of(n), "parent of rank " + std::to_string(n));
            const std::size_t g = b.size() - static_cast<std::size_t>(gamma_of(b));
            std::string bumped = pad_to(p, b.size());
            ++bumped[g];
            expect_eq(bumped, b,
                      "parent must decrement the rightmost nonzero digit at rank " +
                          std::to_string(n));
        }
    }});

    checks.push_back({"word-nest-roundtrip", [capped] {
        for (int k = 1; k <= capped(6); ++k)
            for (const std::string& w : dyck_words(k)) {
                const DyckNest nest = word_to_nest(w);
                expect(validate_nest(nest), "nest validity for word " + w);
                expect_eq(nest_to_word(nest), w, "round trip for word " + w);
                expect(parse_nest(render_nest(nest)) == nest, "render round trip for " + w);
            }
    }});

    checks.push_back({"blow-reduce", [capped] {
        const int k = capped(6);
        const NestTable t = generate_table(k);
        for (const DyckNest& tight : t.nests) {
            DyckNest copy = tight;
            expect(!reduce_step(copy), "tight nests admit no reduction");
            expect(reduce_tight(blow_nest(blow_nest(tight))) == tight,
                   "blow twice then reduce must return the tight core");
        }
    }});

    checks.push_back({"castle-rebuild", [capped] {
        const int k = capped(7);
        const NestTable t = generate_table(k);
        for (std::uint64_t n = 1; n < catalan(k); ++n)
            expect(castle_step(t.nests[parent_of(n)], trgs_unrank(n)) == t.nests[n],
                   "castle step at rank " + std::to_string(n));
    }});

    checks.push_back({"clone-laws", [capped] {
        for (int k = 2; k <= capped(8); ++k) {
            const NestTable t = generate_table(k);
            std::set<std::string> seen;
            for (std::uint64_t n = 0; n < catalan(k); ++n) {
                const CloneSignature sigma = clone_of(n, k);
                expect(seen.insert(render_clone(sigma)).second, "signature collision");
                expect(clone_decode(sigma, k) == blow_to(t.nests[n], k),
                       "signature round trip at rank " + std::to_string(n));
                if (n == 0) continue;
                const CloneSignature parent = clone_of(parent_of(n), k);
                const std::size_t g = static_cast<std::size_t>(gamma_of(n));
                for (std::size_t j = 0; j < sigma.size(); ++j)
                    expect((sigma[j] != parent[j]) == (j == g - 1),
                           "single-entry difference at rank " + std::to_string(n));
            }
            expect_eq(seen.size(), catalan(k), "signature bijection at k=" +
                                                   std::to_string(k));
        }
    }});

    checks.push_back({"offset-reconstruction", [capped] {
        for (int k = 3; k <= capped(7); ++k) {
            const NestTable t = generate_table(k);
            const std::vector<int> direct = h_sequence(k, &t);
            const std::vector<int> rebuilt = recreate_h(k);
            expect_eq(rebuilt.size(), direct.size(), "size at k=" + std::to_string(k));
            for (std::size_t n = 1; n < direct.size(); ++n)
                expect_eq(rebuilt[n], direct[n], "rank " + std::to_string(n) +
                                                     " at k=" + std::to_string(k));
        }
    }});

    checks.push_back({"sign-dichotomy", [capped] {
        const int k = capped(7);
        const NestTable t = generate_table(k);
        const std::vector<int> h = h_sequence(k, &t);
        for (std::uint64_t n = 1; n < catalan(k); ++n) {
            const CastleFlavor fl = flavor_of(trgs_unrank(n), t.nests[parent_of(n)]);
            expect((fl == CastleFlavor::X) == (h[n] < 0),
                   "dichotomy at rank " + std::to_string(n));
        }
    }});

    checks.push_back({"prefix-blocks", [capped] {
        for (int k = 2; k <= std::max(2, capped(10)); ++k) {
            const JPrefix jp = j_prefix(k);
            expect_eq(jp.total, catalan(k), "total at k=" + std::to_string(k));
            const auto line = triangle_line(k - 1);
            expect_eq(jp.block_sizes.size(), line.size(),
                      "block count at k=" + std::to_string(k));
            for (std::size_t i = 0; i < line.size(); ++i)
                expect_eq(jp.block_sizes[i], line[i],
                          "block " + std::to_string(i) + " at k=" + std::to_string(k));
        }
    }});

    checks.push_back({"graph-shape", [capped] {
        for (int k = 1; k <= capped(5); ++k) {
            const OddGraph g = build_odd(k);
            expect_eq(g.vertices.size(), binom(2 * k + 1, k),
                      "vertex count at k=" + std::to_string(k));
            std::set<std::pair<std::uint64_t, int>> ids;
            for (std::size_t i = 0; i < g.vertices.size(); ++i) {
                expect_eq(popcount_mask(g.vertices[i]), k, "vertex weight");
                expect(g.vertex_class[i] < catalan(k), "class range");
                expect(ids.emplace(g.vertex_class[i], g.vertex_rotation[i]).second,
                       "class/rotation pairs must be unique");
                expect_eq(g.neighbors(g.vertices[i]).size(),
                          static_cast<std::size_t>(k) + 1, "degree");
            }
        }
    }});

    checks.push_back({"color-sums", [capped] {
        for (int k = 3; k <= std::max(3, capped(4)); ++k) {
            const OddGraph g = build_odd(k);
            for (std::size_t i = 0; i < g.vertices.size(); ++i)
                for (const Arc& arc : arcs_of(g, i)) {
                    const Arc back = arc_at(g, g.index_of(arc.to), arc.position);
                    expect_eq(back.to, arc.from, "reverse arc endpoint");
                    expect_eq(arc.color + back.color, k, "color sum at k=" +
                                                             std::to_string(k));
                }
        }
    }});

    checks.push_back({"two-factor-shape", [capped] {
        for (int k = 1; k <= capped(7); ++k) {
            const OddGraph g = build_odd(k);
            const TwoFactor f = uniform_two_factor(g);
            expect_eq(f.cycles.size(), catalan(k), "cycle count at k=" + std::to_string(k));
            std::unordered_set<Mask> seen;
            for (const VerticalList& l : f.cycles) {
                expect_eq(l.rows.size(), static_cast<std::size_t>(2 * k + 1),
                          "cycle length at k=" + std::to_string(k));
                expect_eq(l.arc_pos.back(), 0, "closing row position");
                for (const Mask m : l.rows)
                    expect(seen.insert(m).second, "vertex reuse across cycles");
            }
            expect_eq(seen.size(), g.vertices.size(), "cover at k=" + std::to_string(k));
            if (k <= 5)
                expect(validate_two_factor(two_factor_json(f)).ok,
                       "serialized certificate at k=" + std::to_string(k));
        }
    }});

    checks.push_back({"lift-shape", [capped] {
        for (int k = 1; k <= capped(5); ++k) {
            const OddGraph g = build_odd(k);
            const MiddleGraph mg = build_middle(k);
            const LiftedTwoFactor lifted = lift_two_factor(uniform_two_factor(g));
            expect_eq(lifted.cycles.size(), catalan(k),
                      "lifted cycle count at k=" + std::to_string(k));
            for (const auto& cyc : lifted.cycles) {
                expect_eq(cyc.size(), static_cast<std::size_t>(2 * (2 * k + 1)),
                          "lifted cycle length at k=" + std::to_string(k));
                for (std::size_t i = 0; i < cyc.size(); ++i) {
                    const Mask a = cyc[i];
                    const Mask b = cyc[(i + 1) % cyc.size()];
                    expect(popcount_mask(a) != popcount_mask(b), "level alternation");
                    expect(mg.adjacent(a, b), "adjacency at k=" + std::to_string(k));
                }
            }
            expect(validate_two_factor(two_factor_json(lifted)).ok,
                   "serialized lifted certificate at k=" + std::to_string(k));
        }
    }});

    checks.push_back({"cache-identity", [] {
        const std::string dir =
            "/tmp/nestcast_verify_cache_" + std::to_string(::getpid());
        const NestTable fresh = generate_table(5);
        const NestTable cold = load_or_generate_table(5, dir);
        const NestTable warm = load_or_generate_table(5, dir);
        expect_eq(cold.nests.size(), fresh.nests.size(), "cold size");
        expect_eq(warm.nests.size(), fresh.nests.size(), "warm size");
        for (std::size_t n = 0; n < fresh.nests.size(); ++n) {
            expect(cold.nests[n] == fresh.nests[n], "cold nest " + std::to_string(n));
            expect(warm.nests[n] == fresh.nests[n], "warm nest " + std::to_string(n));
        }
    }});

    return checks;
}

// ----------------------------------------------------- suite: hamilton

std::vector<Check> hamilton_checks(int max_k) {
    std::vector<Check> checks;

    checks.push_back({"spanning-frozen", [] {
        expect(normalized_tree(spanning_tree(3)) == embedded_tree("spanning_k3.txt"),
               "k=3 hyperedge set");
        expect(normalized_tree(spanning_tree(4)) == embedded_tree("spanning_k4.txt"),
               "k=4 hyperedge set");
    }});

    checks.push_back({"spanning-valid", [max_k] {
        for (int k = 3; k <= std::max(3, std::min(max_k, 6)); ++k) {
            const ValidationResult v = validate_spanning_tree(spanning_tree(k));
            expect(v.ok, "k=" + std::to_string(k) + ": " + v.message);
        }
    }});

    for (int k = 3; k <= std::max(3, std::min(max_k, 7)); ++k) {
        checks.push_back({"hamilton-odd-k" + std::to_string(k), [k] {
            const HamiltonCertificate cert = hamilton_odd(k);
            expect_eq(cert.cycle.size(), binom(2 * k + 1, k), "cycle length");
            const ValidationResult v = validate_hamilton(hamilton_json(cert));
            expect(v.ok, v.message);
        }});
        checks.push_back({"hamilton-middle-k" + std::to_string(k), [k] {
            const HamiltonCertificate cert = hamilton_middle(k);
            expect_eq(cert.cycle.size(), 2 * binom(2 * k + 1, k), "cycle length");
            const ValidationResult v = validate_hamilton(hamilton_json(cert));
            expect(v.ok, v.message);
        }});
    }

    return checks;
}

// -------------------------------------------------------------- subcommands

int cmd_trgs(int k, bool as_json, const CacheConfig& cache) {
    const NestTable t = table_for(k, cache);
    if (as_json) {
        std::printf("%s\n", trgs_table_json(k, &t).c_str());
        return 0;
    }
    const std::vector<int> h = h_sequence(k, &t);
    std::printf("# n b gamma rho h\n");
    std::string b = "0";
    for (std::uint64_t n = 0; n < catalan(k); ++n) {
        if (n == 0)
            std::printf("0 0 - - -\n");
        else
            std::printf("%llu %s %d %llu %d\n", static_cast<unsigned long long>(n),
                        b.c_str(), gamma_of(b), static_cast<unsigned long long>(
                        trgs_rank(rho_of(b))), h[n]);
        b = trgs_successor(b);
    }
    return 0;
}

int cmd_graph(const std::string& kind, int k, const std::string& format, bool arcs,
              int cap, const CacheConfig& cache) {
    if (k > cap) {
        std::fprintf(stderr,
                     "graph: k=%d exceeds the resource cap of %d (raise it with "
                     "--max-k if you really want this)\n",
                     k, cap);
        return 3;
    }
    if (kind == "middle") {
        if (arcs) {
            std::fprintf(stderr,
                         "graph: --arcs applies to the odd graph only (arc colors "
                         "are defined on odd-graph edges)\n");
            return 2;
        }
        const MiddleGraph g = build_middle(k);
        std::printf("%s\n", (format == "dot" ? graph_dot(g) : graph_json(g)).c_str());
        return 0;
    }
    const NestTable t = table_for(k, cache);
    const OddGraph g = build_odd(k, &t);
    std::printf("%s\n",
                (format == "dot" ? graph_dot(g, arcs) : graph_json(g, arcs)).c_str());
    return 0;
}

int cmd_two_factor(int k, int cap, const CacheConfig& cache) {
    if (k > cap) {
        std::fprintf(stderr, "two-factor: k=%d exceeds the resource cap of %d\n", k, cap);
        return 3;
    }
    const NestTable t = table_for(k, cache);
    const OddGraph g = build_odd(k, &t);
    const std::string doc = two_factor_json(uniform_two_factor(g, &t));
    const ValidationResult v = validate_two_factor(doc);
    if (!v.ok) {
        std::fprintf(stderr, "two-factor: certificate failed validation: %s\n",
                     v.message.c_str());
        return 1;
    }
    std::printf("%s\n", doc.c_str());
    return 0;
}

int cmd_hamilton(const std::string& kind, int k, int cap, const CacheConfig& cache) {
    if (k < 3) {
        std::fprintf(stderr,
                     "hamilton: k must be at least 3; the k=2 odd graph is the "
                     "Petersen graph, which famously has no Hamilton cycle\n");
        return 2;
    }
    if (k > cap) {
        std::fprintf(stderr, "hamilton: k=%d exceeds the resource cap of %d\n", k, cap);
        return 3;
    }
    const NestTable t = table_for(k, cache);
    const HamiltonCertificate cert =
        kind == "middle" ? hamilton_middle(k, &t) : hamilton_odd(k, &t);
    const std::string doc = hamilton_json(cert);
    const ValidationResult v = validate_hamilton(doc);
    if (!v.ok) {
        std::fprintf(stderr, "hamilton: certificate failed validation: %s\n",
                     v.message.c_str());
        return 1;
    }
    std::printf("%s\n", doc.c_str());
    return 0;
}

int cmd_verify(const std::string& suite, int max_k, int jobs, std::uint64_t seed) {
    std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
    std::vector<Check> checks;
    const auto add = [&checks](std::vector<Check> more) {
        for (Check& c : more) checks.push_back(std::move(c));
    };
    if (suite == "tables" || suite == "all") add(tables_checks());
    if (suite == "properties" || suite == "all") add(properties_checks(max_k, seed));
    if (suite == "hamilton" || suite == "all") add(hamilton_checks(max_k));
    const int failures = run_checks(checks, jobs);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nest/castling toolkit: rank tables, odd and middle-levels "
                 "graphs, uniform 2-factors, and Hamilton cycle certificates"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    std::string cache_dir;
    app.add_option("--cache-dir", cache_dir,
                   "cache nest tables in this directory (also enabled by "
                   "$NESTCAST_CACHE_DIR; no caching otherwise)");

    // trgs
    auto* trgs = app.add_subcommand("trgs", "print the rank table");
    int trgs_k = 4;
    bool trgs_json = false;
    trgs->add_option("--k", trgs_k, "half length bound (1..10)")
        ->required()
        ->check(CLI::Range(1, 10));
    trgs->add_flag("--json", trgs_json, "machine-readable output");

    // graph
    auto* graph = app.add_subcommand("graph", "export a graph");
    std::string graph_kind;
    int graph_k = 3;
    std::string graph_format = "json";
    bool graph_arcs = false;
    int graph_cap = odd_graph_max_k;
    graph->add_option("kind", graph_kind, "odd or middle")
        ->required()
        ->check(CLI::IsMember({"odd", "middle"}));
    graph->add_option("--k", graph_k, "half length (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    graph->add_option("--format", graph_format, "dot or json (default json)")
        ->check(CLI::IsMember({"dot", "json"}));
    graph->add_flag("--arcs", graph_arcs, "include arc colors (odd graph only)");
    graph->add_option("--max-k", graph_cap, "resource cap on k (default 9)")
        ->check(CLI::PositiveNumber);

    // two-factor
    auto* factor = app.add_subcommand("two-factor", "emit the uniform 2-factor");
    int factor_k = 3;
    int factor_cap = odd_graph_max_k;
    factor->add_option("--k", factor_k, "half length (>= 1)")
        ->required()
        ->check(CLI::PositiveNumber);
    factor->add_option("--max-k", factor_cap, "resource cap on k (default 9)")
        ->check(CLI::PositiveNumber);

    // hamilton
    auto* hamilton = app.add_subcommand("hamilton", "emit a Hamilton cycle certificate");
    std::string hamilton_kind;
    int hamilton_k = 3;
    int hamilton_cap = odd_graph_max_k;
    hamilton->add_option("kind", hamilton_kind, "odd or middle")
        ->required()
        ->check(CLI::IsMember({"odd", "middle"}));
    hamilton->add_option("--k", hamilton_k, "half length (>= 3)")->required();
    hamilton->add_option("--max-k", hamilton_cap, "resource cap on k (default 9)")
        ->check(CLI::PositiveNumber);

    // verify
    auto* verify = app.add_subcommand("verify", "run the verification harness");
    std::string verify_suite;
    int verify_max_k = 7;
    int verify_jobs = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t verify_seed = default_seed;
    verify->add_option("--suite", verify_suite, "tables, properties, hamilton, or all")
        ->required()
        ->check(CLI::IsMember({"tables", "properties", "hamilton", "all"}));
    verify->add_option("--max-k", verify_max_k, "bound for the parameterised checks (1..9)")
        ->check(CLI::Range(1, 9));
    verify->add_option("--jobs", verify_jobs, "maximum concurrent checks")
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_seed, "seed for randomized property checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e); // prints the message
        return 2;
    }

    const CacheConfig cache = cache_config(cache_dir);
    try {
        if (trgs->parsed()) return cmd_trgs(trgs_k, trgs_json, cache);
        if (graph->parsed())
            return cmd_graph(graph_kind, graph_k, graph_format, graph_arcs, graph_cap,
                             cache);
        if (factor->parsed()) return cmd_two_factor(factor_k, factor_cap, cache);
        if (hamilton->parsed())
            return cmd_hamilton(hamilton_kind, hamilton_k, hamilton_cap, cache);
        if (verify->parsed())
            return cmd_verify(verify_suite, verify_max_k, verify_jobs, verify_seed);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
