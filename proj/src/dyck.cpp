#include "nestcast/dyck.hpp"

#include <algorithm>
#include <stdexcept>

namespace nestcast {

bool validate_word(std::string_view f) {
    if (f.empty() || f.size() % 2 != 0) return false;
    int height = 0;
    for (char c : f) {
        if (c == '0')
            ++height;
        else if (c == '1')
            --height;
        else
            return false;
        if (height < 0) return false;
    }
    return height == 0;
}

DyckNest word_to_nest(std::string_view f) {
    if (!validate_word(f)) throw std::invalid_argument("word_to_nest: not a valid word");
    const std::size_t n = f.size();
    const int k = static_cast<int>(n / 2);
    DyckNest nest(n, 0);
    // Bucket step indices by layer: an up-step at height y -> y+1 and a
    // down-step at height y+1 -> y both belong to layer y.
    std::vector<std::vector<std::size_t>> layers(static_cast<std::size_t>(k));
    int height = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (f[i] == '0') {
            layers[static_cast<std::size_t>(height)].push_back(i);
            ++height;
        } else {
            --height;
            layers[static_cast<std::size_t>(height)].push_back(i);
        }
    }
    // Within a layer the steps alternate up, down; consecutive entries
    // pair up.  Pairs are numbered right to left per layer, continuing
    // across layers bottom-up.
    int label = 0;
    for (const auto& layer : layers) {
        const std::size_t pairs = layer.size() / 2;
        for (std::size_t p = pairs; p-- > 0;) {
            ++label;
            nest[layer[2 * p]] = label;
            nest[layer[2 * p + 1]] = label;
        }
    }
    return nest;
}

std::string nest_to_word(const DyckNest& nest) {
    std::string f(nest.size(), '0');
    std::vector<bool> seen(nest.size() / 2 + 1, false);
    for (std::size_t i = 0; i < nest.size(); ++i) {
        const int v = nest[i];
        if (v < 1 || static_cast<std::size_t>(v) >= seen.size())
            throw std::invalid_argument("nest_to_word: label out of range");
        f[i] = seen[static_cast<std::size_t>(v)] ? '1' : '0';
        seen[static_cast<std::size_t>(v)] = true;
    }
    return f;
}

bool validate_nest(const DyckNest& nest) {
    if (nest.empty() || nest.size() % 2 != 0) return false;
    const int k = static_cast<int>(nest.size() / 2);
    std::vector<int> count(static_cast<std::size_t>(k) + 1, 0);
    for (int v : nest) {
        if (v < 1 || v > k) return false;
        ++count[static_cast<std::size_t>(v)];
    }
    for (int v = 1; v <= k; ++v)
        if (count[static_cast<std::size_t>(v)] != 2) return false;
    std::string f;
    try {
        f = nest_to_word(nest);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return validate_word(f) && word_to_nest(f) == nest;
}

DyckNest blow_nest(const DyckNest& nest) {
    const int k = static_cast<int>(nest.size() / 2);
    DyckNest out;
    out.reserve(nest.size() + 2);
    bool done = false;
    for (std::size_t i = 0; i < nest.size(); ++i) {
        out.push_back(nest[i]);
        if (!done && i + 1 < nest.size() && nest[i] == k && nest[i + 1] == k) {
            out.push_back(k + 1);
            out.push_back(k + 1);
            done = true;
        }
    }
    if (!done) throw std::invalid_argument("blow_nest: no adjacent maximal pair");
    return out;
}

bool reduce_step(DyckNest& nest) {
    if (nest.size() < 4) return false;
    const int k = static_cast<int>(nest.size() / 2);
    for (std::size_t i = 1; i + 2 < nest.size(); ++i) {
        if (nest[i] == k && nest[i + 1] == k && nest[i - 1] == k - 1 &&
            nest[i + 2] == k - 1) {
            nest.erase(nest.begin() + static_cast<std::ptrdiff_t>(i),
                       nest.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            return true;
        }
    }
    return false;
}

DyckNest reduce_tight(DyckNest nest) {
    while (reduce_step(nest)) {
    }
    return nest;
}

std::string reversed_complement(std::string_view f) {
    std::string out(f.rbegin(), f.rend());
    for (char& c : out) c = c == '0' ? '1' : '0';
    return out;
}

std::string render_nest(const DyckNest& nest, bool with_anchor) {
    const bool contiguous =
        std::all_of(nest.begin(), nest.end(), [](int v) { return v <= 9; });
    std::string out;
    if (contiguous) {
        if (with_anchor) out.push_back('0');
        for (int v : nest) out.push_back(static_cast<char>('0' + v));
    } else {
        if (with_anchor) out += "0";
        for (std::size_t i = 0; i < nest.size(); ++i) {
            if (with_anchor || i > 0) out.push_back(',');
            out += std::to_string(nest[i]);
        }
    }
    return out;
}

DyckNest parse_nest(std::string_view text) {
    DyckNest nest;
    if (text.find(',') == std::string_view::npos) {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("parse_nest: bad character");
            nest.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            if (comma == std::string_view::npos) comma = text.size();
            if (comma == pos) throw std::invalid_argument("parse_nest: empty field");
            int v = 0;
            for (std::size_t i = pos; i < comma; ++i) {
                if (text[i] < '0' || text[i] > '9')
                    throw std::invalid_argument("parse_nest: bad character");
                v = v * 10 + (text[i] - '0');
            }
            nest.push_back(v);
            if (comma == text.size()) break;
            pos = comma + 1;
        }
    }
    // A leading anchor entry 0 is allowed and stripped.
    if (!nest.empty() && nest.front() == 0) nest.erase(nest.begin());
    if (std::find(nest.begin(), nest.end(), 0) != nest.end())
        throw std::invalid_argument("parse_nest: zero entry outside anchor position");
    return nest;
}

} // namespace nestcast
