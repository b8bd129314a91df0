#include "nestcast/trgs.hpp"

#include "nestcast/catalan.hpp"

#include <algorithm>
#include <stdexcept>

namespace nestcast {

namespace {

bool all_digits(std::string_view b) {
    if (b.empty()) return false;
    for (char c : b)
        if (c < '0' || c > '9') return false;
    return true;
}

int digit(std::string_view b, std::size_t i) { return b[i] - '0'; }

} // namespace

bool is_trgs(std::string_view b) {
    if (!all_digits(b)) return false;
    if (b.size() == 1) return b == "0" || b == "1";
    if (digit(b, 0) != 1) return false;
    for (std::size_t i = 1; i < b.size(); ++i)
        if (digit(b, i) > digit(b, i - 1) + 1) return false;
    return true;
}

std::uint64_t trgs_rank(std::string_view b) {
    if (!is_trgs(b)) throw std::invalid_argument("trgs_rank: not a valid string");
    if (b == "0") return 0;
    if (b == "1") return 1;
    const int len = static_cast<int>(b.size());
    std::uint64_t r = catalan(len);
    // First digit is forced to 1; later digits d < a_i each contribute
    // the count of completions ballot_count(remaining, d).
    for (int i = 1; i < len; ++i) {
        const int m = len - 1 - i;
        for (int d = 0; d < digit(b, static_cast<std::size_t>(i)); ++d)
            r += ballot_count(m, d);
    }
    return r;
}

std::string trgs_unrank(std::uint64_t n) {
    if (n >= catalan(catalan_max_k))
        throw std::out_of_range("trgs_unrank: rank too large");
    if (n == 0) return "0";
    if (n == 1) return "1";
    int len = 1;
    while (catalan(len + 1) <= n) ++len;
    std::uint64_t r = n - catalan(len);
    std::string b = "1";
    int prev = 1;
    for (int i = 1; i < len; ++i) {
        const int m = len - 1 - i;
        for (int d = 0;; ++d) {
            if (d > prev + 1)
                throw std::logic_error("trgs_unrank: rank residue out of range");
            if (d > 9)
                throw std::out_of_range("trgs_unrank: string needs a digit above 9");
            const std::uint64_t c = ballot_count(m, d);
            if (r < c) {
                b.push_back(static_cast<char>('0' + d));
                prev = d;
                break;
            }
            r -= c;
        }
    }
    return b;
}

int tight_half_length(std::uint64_t n) {
    if (n == 0) return 1;
    return static_cast<int>(trgs_unrank(n).size()) + 1;
}

int gamma_of(std::string_view b) {
    if (!is_trgs(b)) throw std::invalid_argument("gamma_of: not a valid string");
    if (b == "0") throw std::invalid_argument("gamma_of: undefined at the root");
    for (std::size_t i = b.size(); i-- > 0;)
        if (b[i] != '0') return static_cast<int>(b.size() - i);
    throw std::logic_error("gamma_of: unreachable");
}

int gamma_of(std::uint64_t n) { return gamma_of(trgs_unrank(n)); }

std::string rho_of(std::string_view b) {
    const int g = gamma_of(b); // validates b and rejects the root
    std::string r(b);
    const std::size_t i = r.size() - static_cast<std::size_t>(g);
    --r[i];
    if (r.find_first_not_of('0') == std::string::npos) return "0";
    return r;
}

std::uint64_t parent_of(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("parent_of: the root has no parent");
    return trgs_rank(rho_of(trgs_unrank(n)));
}

std::vector<std::uint64_t> children_of(std::uint64_t n, int k) {
    if (k < 1) throw std::invalid_argument("children_of: k must be positive");
    std::vector<std::uint64_t> out;
    if (n == 0) {
        for (int len = 1; len < k; ++len) out.push_back(catalan(len));
        return out;
    }
    const std::string b = trgs_unrank(n);
    if (static_cast<int>(b.size()) >= k) return out;
    const int g = gamma_of(b);
    for (int p = 1; p <= g; ++p) {
        if (p == g) {
            // Incrementing the gamma digit needs a left neighbour at
            // least as large; the leading digit can never grow.
            const std::size_t i = b.size() - static_cast<std::size_t>(g);
            if (i == 0) continue;
            if (digit(b, i) > digit(b, i - 1)) continue;
        }
        std::string c(b);
        char& slot = c[c.size() - static_cast<std::size_t>(p)];
        if (slot == '9')
            throw std::out_of_range("children_of: child needs a digit above 9");
        ++slot;
        out.push_back(trgs_rank(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string trgs_successor(std::string_view b) {
    if (!is_trgs(b)) throw std::invalid_argument("trgs_successor: not a valid string");
    if (b == "0") return "1";
    const std::size_t len = b.size();
    for (std::size_t p = 1; p < len; ++p) {
        const std::size_t i = len - p; // 0-based index of position p
        if (digit(b, i) <= digit(b, i - 1)) {
            std::string s(b);
            if (s[i] == '9')
                throw std::out_of_range("trgs_successor: string needs a digit above 9");
            ++s[i];
            std::fill(s.begin() + static_cast<std::ptrdiff_t>(i) + 1, s.end(), '0');
            return s;
        }
    }
    // Maximal staircase 1 2 ... len: move to the first string one digit
    // longer.
    return "1" + std::string(len, '0');
}

std::vector<Thread> thread_partition(int k) {
    if (k < 1) throw std::invalid_argument("thread_partition: k must be positive");
    const std::uint64_t total = catalan(k);
    std::vector<Thread> threads;
    std::string b = "0";
    std::string prev;
    for (std::uint64_t n = 0; n < total; ++n) {
        const bool continues = n > 0 && rho_of(b) == prev;
        if (continues) {
            ++threads.back().edge_count;
        } else {
            Thread t;
            t.head = n;
            t.edge_count = 0;
            t.head_gamma = n == 0 ? 0 : gamma_of(b);
            threads.push_back(t);
        }
        prev = b;
        b = trgs_successor(b);
    }
    return threads;
}

} // namespace nestcast
