#include "relhyp/racg.hpp"

namespace relhyp::racg {

namespace {

// Removes v...v pairs whose intermediate letters all commute with v, until
// none remain.
void reduce(const Graph& g, Word& w) {
    bool again = true;
    while (again) {
        again = false;
        for (std::size_t i = 0; i < w.size() && !again; ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                if (w[j] == w[i]) {
                    w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
                    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
                    again = true;
                    break;
                }
                if (!g.adjacent(w[i], w[j])) {
                    break;
                }
            }
        }
    }
}

// Lexicographically least word in the commutation class of a reduced word:
// repeatedly emit the smallest letter that commutes past everything before it.
Word least_representative(const Graph& g, Word w) {
    Word out;
    out.reserve(w.size());
    while (!w.empty()) {
        std::size_t best = w.size();
        for (std::size_t p = 0; p < w.size(); ++p) {
            if (best != w.size() && w[p] >= w[best]) {
                continue;
            }
            bool free = true;
            for (std::size_t q = 0; q < p && free; ++q) {
                free = g.adjacent(w[q], w[p]);
            }
            if (free) {
                best = p;
            }
        }
        out.push_back(w[best]);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

}  // namespace

Word canonical_word(const Graph& g, const Word& w) {
    for (auto letter : w) {
        if (letter >= g.size()) {
            throw InputError("letter out of range");
        }
    }
    Word r = w;
    reduce(g, r);
    return least_representative(g, std::move(r));
}

Word canonical_word(const Graph& g, const std::vector<std::string>& letters) {
    Word w;
    w.reserve(letters.size());
    for (const auto& name : letters) {
        w.push_back(static_cast<std::uint8_t>(g.require(name)));
    }
    return canonical_word(g, w);
}

Word multiply(const Graph& g, const Word& element, std::uint8_t s) {
    Word w = element;
    // s cancels against its last occurrence if everything after it commutes.
    for (std::size_t q = w.size(); q-- > 0;) {
        if (w[q] == s) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(q));
            return least_representative(g, std::move(w));
        }
        if (!g.adjacent(w[q], s)) {
            break;
        }
    }
    w.push_back(s);
    return least_representative(g, std::move(w));
}

Word inverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

std::string format_word(const Graph& g, const Word& w) {
    if (w.empty()) {
        return "1";
    }
    std::string out;
    for (auto letter : w) {
        if (!out.empty()) {
            out += '.';
        }
        out += g.name(letter);
    }
    return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto letter : w) {
        h ^= letter;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ w.size());
}

}  // namespace relhyp::racg
