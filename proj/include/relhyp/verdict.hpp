#pragma once

#include <optional>
#include <string_view>

namespace relhyp {

enum class Verdict { hyperbolic, relatively_hyperbolic, not_relatively_hyperbolic, inconclusive };

constexpr std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::hyperbolic:
            return "hyperbolic";
        case Verdict::relatively_hyperbolic:
            return "relatively_hyperbolic";
        case Verdict::not_relatively_hyperbolic:
            return "not_relatively_hyperbolic";
        case Verdict::inconclusive:
            break;
    }
    return "inconclusive";
}

inline std::optional<Verdict> parse_verdict(std::string_view s) {
    for (Verdict v : {Verdict::hyperbolic, Verdict::relatively_hyperbolic,
                      Verdict::not_relatively_hyperbolic, Verdict::inconclusive}) {
        if (to_string(v) == s) {
            return v;
        }
    }
    return std::nullopt;
}

}  // namespace relhyp
