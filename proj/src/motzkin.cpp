#include "partred/motzkin.hpp"

#include <algorithm>

#include "partred/reduction.hpp"

namespace partred {

int TwoMotzkinPath::rise_or_level_count() const {
    return static_cast<int>(std::count_if(steps_.begin(), steps_.end(), [](Step s) {
        return s == Step::Up || s == Step::Level;
    }));
}

bool validate_path(const TwoMotzkinPath& p) {
    int open = 0;
    for (Step s : p.steps()) {
        if (s == Step::Up) ++open;
        if (s == Step::Down && --open < 0) return false;
    }
    return open == 0;
}

TwoMotzkinPath parse_path(const std::string& text) {
    std::vector<Step> steps;
    steps.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'U': case 'u': steps.push_back(Step::Up); break;
            case 'D': case 'd': steps.push_back(Step::Down); break;
            case 'L': case 'l': steps.push_back(Step::Level); break;
            case 'W': case 'w': steps.push_back(Step::Wavy); break;
            default:
                throw ParseError(std::string("unknown step symbol '") + c + "'");
        }
    }
    return TwoMotzkinPath(std::move(steps));
}

std::string format_path(const TwoMotzkinPath& p) {
    std::string out;
    out.reserve(p.steps().size());
    for (Step s : p.steps()) out.push_back(static_cast<char>(s));
    return out;
}

TwoMotzkinPath diagram_to_path(const ArcDiagram& d) {
    if (!is_independent(d)) throw InvalidDiagram("arcs are not pairwise vertex-disjoint");
    if (has_crossing(d)) throw InvalidDiagram("diagram has crossing arcs");

    std::vector<Step> steps(static_cast<size_t>(d.n()), Step::Wavy);
    for (const auto& [i, j] : d.arcs()) {
        if (i == j) {
            steps[static_cast<size_t>(i - 1)] = Step::Level;
        } else {
            steps[static_cast<size_t>(i - 1)] = Step::Up;
            steps[static_cast<size_t>(j - 1)] = Step::Down;
        }
    }
    return TwoMotzkinPath(std::move(steps));
}

ArcDiagram path_to_diagram(const TwoMotzkinPath& p) {
    if (!validate_path(p)) throw InvalidPath("step sequence leaves the lattice-path region");
    std::vector<Arc> arcs;
    std::vector<int> open;
    int v = 0;
    for (Step s : p.steps()) {
        ++v;
        switch (s) {
            case Step::Up: open.push_back(v); break;
            case Step::Down:
                arcs.emplace_back(open.back(), v); // innermost open arc closes first
                open.pop_back();
                break;
            case Step::Level: arcs.emplace_back(v, v); break;
            case Step::Wavy: break;
        }
    }
    return ArcDiagram(p.size(), std::move(arcs));
}

TwoMotzkinPath partition_to_path(const SetPartition& p) {
    return diagram_to_path(reduce_noncrossing(p));
}

SetPartition path_to_partition(const TwoMotzkinPath& path) {
    return expand_independent(path_to_diagram(path));
}

} // namespace partred
