#include "nestcast/castling.hpp"

#include "nestcast/catalan.hpp"
#include "nestcast/trgs.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nestcast {

namespace {

int nest_weight(const DyckNest& nest) { return static_cast<int>(nest.size() / 2); }

DyckNest blow_to(DyckNest nest, int k) {
    if (nest_weight(nest) > k)
        throw std::invalid_argument("castling: nest heavier than target weight");
    while (nest_weight(nest) < k) nest = blow_nest(nest);
    return nest;
}

/// The castle decomposition W | X | Y | Z of the parent nest blown to
/// the child's weight.  Indices are into blown (size 2k): W = [0, w_end),
/// X = [w_end, y_start), Y = [y_start, z_start), Z = [z_start, 2k).
struct CastleSplit {
    DyckNest blown;
    int k = 0;
    int gamma = 0;
    std::size_t w_end = 0;
    std::size_t y_start = 0;
    std::size_t z_start = 0;
};

CastleSplit split_for(std::string_view b_child, const DyckNest& parent) {
    CastleSplit s;
    s.gamma = gamma_of(b_child); // validates b_child, rejects the root
    s.k = static_cast<int>(b_child.size()) + 1;
    s.blown = blow_to(parent, s.k);
    const std::size_t size = s.blown.size();
    s.w_end = static_cast<std::size_t>(s.gamma - 1);
    s.z_start = size - static_cast<std::size_t>(s.gamma);
    const int x = s.blown[s.w_end];
    s.y_start = 0;
    for (std::size_t i = s.w_end + 1; i < s.z_start; ++i) {
        if (s.blown[i] == x + 1) {
            s.y_start = i;
            break;
        }
    }
    if (s.y_start == 0)
        throw std::invalid_argument("castle_step: no successor entry in the middle block");
    return s;
}

DyckNest assemble(const CastleSplit& s) {
    DyckNest child;
    child.reserve(s.blown.size());
    child.insert(child.end(), s.blown.begin(),
                 s.blown.begin() + static_cast<std::ptrdiff_t>(s.w_end));
    child.insert(child.end(), s.blown.begin() + static_cast<std::ptrdiff_t>(s.y_start),
                 s.blown.begin() + static_cast<std::ptrdiff_t>(s.z_start));
    child.insert(child.end(), s.blown.begin() + static_cast<std::ptrdiff_t>(s.w_end),
                 s.blown.begin() + static_cast<std::ptrdiff_t>(s.y_start));
    child.insert(child.end(), s.blown.begin() + static_cast<std::ptrdiff_t>(s.z_start),
                 s.blown.end());
    return child;
}

CloneSignature clone_of_nest(const DyckNest& nest) {
    const int k = nest_weight(nest);
    std::vector<int> first(static_cast<std::size_t>(k) + 1, -1);
    std::vector<int> second(static_cast<std::size_t>(k) + 1, -1);
    for (std::size_t i = 0; i < nest.size(); ++i) {
        const std::size_t v = static_cast<std::size_t>(nest[i]);
        if (first[v] < 0)
            first[v] = static_cast<int>(i);
        else
            second[v] = static_cast<int>(i);
    }
    CloneSignature sigma(static_cast<std::size_t>(k) - 1, 0);
    for (int j = 1; j < k; ++j)
        sigma[static_cast<std::size_t>(j - 1)] =
            (second[static_cast<std::size_t>(j)] - first[static_cast<std::size_t>(j)]) / 2;
    return sigma;
}

/// Flavor plus h from one castle step, given b(n) and the parent nest.
struct StepClass {
    CastleFlavor flavor = CastleFlavor::X;
    int h = 0;
};

StepClass step_class(std::string_view b, const DyckNest& parent) {
    const CastleSplit s = split_for(b, parent);
    const DyckNest child = assemble(s);
    // The measured entry sigma_gamma grows with the weight exactly when
    // blowing stretches the gamma span, i.e. when the maximal pair lies
    // strictly between the two occurrences of the value gamma.  That is
    // the depends-on-k side of the dichotomy (written sigma_gamma = k + h
    // with h < 0); otherwise sigma_gamma is the weight-free value h >= 0.
    std::size_t p1 = 0;
    while (p1 < child.size() && child[p1] != s.k) ++p1;
    std::size_t g1 = child.size(), g2 = child.size();
    for (std::size_t i = 0; i < child.size(); ++i) {
        if (child[i] == s.gamma) {
            if (g1 == child.size())
                g1 = i;
            else
                g2 = i;
        }
    }
    if (p1 + 1 >= child.size() || g2 == child.size())
        throw std::logic_error("castling: malformed child nest in step classification");
    StepClass out;
    const bool stretched = (g1 < p1) && (p1 + 1 < g2);
    out.flavor = stretched ? CastleFlavor::X : CastleFlavor::Y;
    const CloneSignature sigma = clone_of_nest(child);
    const int sigma_gamma = sigma[static_cast<std::size_t>(s.gamma - 1)];
    out.h = stretched ? sigma_gamma - s.k : sigma_gamma;
    return out;
}

/// Tight parent nests along the root path of b, deepest last.
DyckNest tight_nest_of_string(const std::string& b) {
    if (b == "0") return DyckNest{1, 1};
    std::vector<std::string> chain;
    for (std::string cur = b; cur != "0"; cur = rho_of(cur)) chain.push_back(cur);
    DyckNest nest{1, 1};
    for (auto it = chain.rbegin(); it != chain.rend(); ++it)
        nest = castle_step(nest, *it);
    return nest;
}

} // namespace

DyckNest castle_step(const DyckNest& parent, std::string_view b_child) {
    return assemble(split_for(b_child, parent));
}

NestTable generate_table(int k) {
    // Weight 10 is the largest whose strings stay within decimal digits.
    if (k < 1 || k > 10)
        throw std::invalid_argument("generate_table: k outside [1, 10]");
    NestTable t;
    t.k = k;
    const std::uint64_t total = catalan(k);
    t.nests.reserve(total);
    t.nests.push_back(DyckNest{1, 1});
    std::string b = "1";
    for (std::uint64_t n = 1; n < total; ++n) {
        const std::uint64_t parent = trgs_rank(rho_of(b));
        t.nests.push_back(castle_step(t.nests[parent], b));
        b = trgs_successor(b);
    }
    return t;
}

DyckNest nest_of(std::uint64_t n) { return tight_nest_of_string(trgs_unrank(n)); }

CloneSignature clone_of(std::uint64_t n, int k) {
    if (k < tight_half_length(n))
        throw std::invalid_argument("clone_of: weight below the tight weight");
    return clone_of_nest(blow_to(nest_of(n), k));
}

std::string render_clone(const CloneSignature& sigma) {
    bool contiguous = true;
    for (int v : sigma)
        if (v > 9) contiguous = false;
    std::string out;
    for (std::size_t i = sigma.size(); i-- > 0;) {
        if (!contiguous && out.size() > 0) out.push_back(',');
        if (contiguous)
            out.push_back(static_cast<char>('0' + sigma[i]));
        else
            out += std::to_string(sigma[i]);
    }
    return out;
}

DyckNest clone_decode(const CloneSignature& sigma, int k) {
    if (k < 1 || sigma.size() != static_cast<std::size_t>(k) - 1)
        throw std::invalid_argument("clone_decode: signature size does not match weight");
    const std::size_t size = 2 * static_cast<std::size_t>(k);
    DyckNest nest(size, 0);
    std::vector<std::size_t> first(static_cast<std::size_t>(k), 0);
    for (int i = 1; i < k; ++i) {
        const int s = sigma[static_cast<std::size_t>(i - 1)];
        if (s < 0) throw std::invalid_argument("clone_decode: negative entry");
        // Continuation: rightmost empty cell strictly left of the first
        // occurrence of the previous label; restart: rightmost empty.
        std::size_t limit = size;
        if (i > 1) limit = first[static_cast<std::size_t>(i - 1)];
        std::size_t pos2 = size;
        for (std::size_t c = limit; c-- > 0;)
            if (nest[c] == 0) {
                pos2 = c;
                break;
            }
        if (pos2 == size && i > 1) {
            for (std::size_t c = size; c-- > 0;)
                if (nest[c] == 0) {
                    pos2 = c;
                    break;
                }
        }
        if (pos2 == size) throw std::invalid_argument("clone_decode: no free cell");
        const std::ptrdiff_t pos1 =
            static_cast<std::ptrdiff_t>(pos2) - (2 * static_cast<std::ptrdiff_t>(s) + 1);
        if (pos1 < 0 || nest[static_cast<std::size_t>(pos1)] != 0)
            throw std::invalid_argument("clone_decode: signature not realisable");
        nest[static_cast<std::size_t>(pos1)] = i;
        nest[pos2] = i;
        first[static_cast<std::size_t>(i)] = static_cast<std::size_t>(pos1);
    }
    std::size_t e1 = size, e2 = size;
    for (std::size_t c = 0; c < size; ++c)
        if (nest[c] == 0) {
            if (e1 == size)
                e1 = c;
            else
                e2 = c;
        }
    if (e2 != e1 + 1)
        throw std::invalid_argument("clone_decode: maximal pair cells not adjacent");
    nest[e1] = k;
    nest[e2] = k;
    return nest;
}

CloneSignature clone_update(const CloneSignature& parent_sigma, std::uint64_t n) {
    const int k = static_cast<int>(parent_sigma.size()) + 1;
    const std::string b = trgs_unrank(n);
    if (tight_half_length(n) > k)
        throw std::invalid_argument("clone_update: weight below the child's tight weight");
    const DyckNest parent_tight = reduce_tight(clone_decode(parent_sigma, k));
    const DyckNest child = blow_to(castle_step(parent_tight, b), k);
    const CloneSignature sigma = clone_of_nest(child);
    const std::size_t g = static_cast<std::size_t>(gamma_of(b)) - 1;
    for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(k); ++j)
        if (j != g && sigma[j] != parent_sigma[j])
            throw std::logic_error("clone_update: signatures differ outside the gamma entry");
    return sigma;
}

CastleFlavor flavor_of(std::string_view b, const DyckNest& parent_nest) {
    return step_class(b, parent_nest).flavor;
}

CastleFlavor flavor_of(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("flavor_of: undefined at the root");
    const std::string b = trgs_unrank(n);
    return flavor_of(b, tight_nest_of_string(rho_of(b)));
}

int h_of(std::string_view b, const DyckNest& parent_nest) {
    return step_class(b, parent_nest).h;
}

int h_of(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("h_of: undefined at the root");
    const std::string b = trgs_unrank(n);
    return h_of(b, tight_nest_of_string(rho_of(b)));
}

FlipKind classify_flip(std::uint64_t n, std::uint64_t r) {
    const CastleFlavor fn = flavor_of(n);
    const CastleFlavor fr = flavor_of(r);
    if (fn == fr) return FlipKind::preserved;
    return fn == CastleFlavor::X ? FlipKind::supplementary_x_to_y
                                 : FlipKind::supplementary_y_to_x;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("NESTCAST_CACHE_DIR"); env && *env) return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::string(home) + "/.cache/nestcast";
    return ".nestcast_cache";
}

namespace {

std::string cache_header(int k) {
    std::ostringstream os;
    os << "nestcast nest_table v1 k=" << k << " count=" << catalan(k);
    return os.str();
}

bool read_cached_table(const std::filesystem::path& file, int k, NestTable& out) {
    std::ifstream in(file);
    if (!in) return false;
    std::string line;
    if (!std::getline(in, line) || line != cache_header(k)) return false;
    const std::uint64_t total = catalan(k);
    NestTable t;
    t.k = k;
    t.nests.reserve(total);
    for (std::uint64_t n = 0; n < total; ++n) {
        if (!std::getline(in, line)) return false;
        DyckNest nest;
        try {
            nest = parse_nest(line);
        } catch (const std::invalid_argument&) {
            return false;
        }
        if (nest.empty() || !validate_nest(nest)) return false;
        t.nests.push_back(std::move(nest));
    }
    out = std::move(t);
    return true;
}

} // namespace

NestTable load_or_generate_table(int k, const std::string& cache_dir) {
    const std::filesystem::path dir =
        cache_dir.empty() ? std::filesystem::path(default_cache_dir())
                          : std::filesystem::path(cache_dir);
    const std::filesystem::path file =
        dir / ("nest_table_v1_k" + std::to_string(k) + ".txt");
    NestTable t;
    if (read_cached_table(file, k, t)) return t;
    t = generate_table(k);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!ec) {
        const std::filesystem::path tmp = file.string() + ".tmp";
        std::ofstream out(tmp, std::ios::trunc);
        if (out) {
            out << cache_header(k) << '\n';
            for (const DyckNest& nest : t.nests) out << render_nest(nest) << '\n';
            out.close();
            if (out) std::filesystem::rename(tmp, file, ec);
            if (ec) std::filesystem::remove(tmp, ec);
        }
    }
    return t;
}

} // namespace nestcast
