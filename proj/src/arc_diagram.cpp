#include "partred/arc_diagram.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace partred {

ArcDiagram::ArcDiagram(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0) throw InvalidDiagram("negative vertex count");
    std::sort(arcs_.begin(), arcs_.end());

    std::vector<int> in(static_cast<size_t>(n_) + 1, 0);
    std::vector<int> out(static_cast<size_t>(n_) + 1, 0);
    std::vector<bool> looped(static_cast<size_t>(n_) + 1, false);
    for (size_t idx = 0; idx < arcs_.size(); ++idx) {
        const auto& [i, j] = arcs_[idx];
        if (i < 1 || j > n_) throw InvalidDiagram("arc endpoint out of range");
        if (i > j) throw InvalidDiagram("arc must run left to right");
        if (idx > 0 && arcs_[idx] == arcs_[idx - 1]) throw InvalidDiagram("duplicate arc");
        if (i == j) {
            looped[static_cast<size_t>(i)] = true;
        } else {
            ++out[static_cast<size_t>(i)];
            ++in[static_cast<size_t>(j)];
        }
    }
    for (int v = 1; v <= n_; ++v) {
        size_t s = static_cast<size_t>(v);
        if (in[s] > 1 || out[s] > 1)
            throw InvalidDiagram("vertex " + std::to_string(v) + " has degree above one");
        if (looped[s] && (in[s] > 0 || out[s] > 0))
            throw InvalidDiagram("looped vertex " + std::to_string(v) + " carries another arc");
    }
}

bool ArcDiagram::has_loops() const {
    return std::any_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.first == a.second; });
}

int ArcDiagram::loop_count() const {
    return static_cast<int>(
        std::count_if(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.first == a.second; }));
}

int ArcDiagram::component_count() const {
    // non-loop arcs chain vertices into paths; everything else is isolated
    int non_loop = 0;
    for (const Arc& a : arcs_)
        if (a.first != a.second) ++non_loop;
    return n_ - non_loop;
}

ArcDiagram from_partition(const SetPartition& p) {
    std::vector<Arc> arcs;
    for (const auto& block : p.blocks())
        for (size_t i = 1; i < block.size(); ++i) arcs.emplace_back(block[i - 1], block[i]);
    return ArcDiagram(p.n(), std::move(arcs));
}

SetPartition to_partition(const ArcDiagram& d) {
    std::vector<int> next(static_cast<size_t>(d.n()) + 1, 0);
    std::vector<bool> has_in(static_cast<size_t>(d.n()) + 1, false);
    for (const auto& [i, j] : d.arcs()) {
        if (i == j) throw InvalidDiagram("loop has no partition reading");
        next[static_cast<size_t>(i)] = j;
        has_in[static_cast<size_t>(j)] = true;
    }
    std::vector<std::vector<int>> blocks;
    for (int v = 1; v <= d.n(); ++v) {
        if (has_in[static_cast<size_t>(v)]) continue; // not a path start
        std::vector<int> block{v};
        for (int w = next[static_cast<size_t>(v)]; w != 0; w = next[static_cast<size_t>(w)])
            block.push_back(w);
        blocks.push_back(std::move(block));
    }
    return SetPartition(std::move(blocks));
}

bool has_crossing(const ArcDiagram& d) {
    const auto& arcs = d.arcs();
    for (size_t a = 0; a < arcs.size(); ++a) {
        if (arcs[a].first == arcs[a].second) continue;
        for (size_t b = a + 1; b < arcs.size(); ++b) {
            if (arcs[b].first == arcs[b].second) continue;
            const auto& [i, j] = arcs[a];
            const auto& [u, v] = arcs[b];
            if ((i < u && u < j && j < v) || (u < i && i < v && v < j)) return true;
        }
    }
    return false;
}

bool is_independent(const ArcDiagram& d) {
    std::vector<int> touched(static_cast<size_t>(d.n()) + 1, 0);
    for (const auto& [i, j] : d.arcs()) {
        if (++touched[static_cast<size_t>(i)] > 1) return false;
        if (i != j && ++touched[static_cast<size_t>(j)] > 1) return false;
    }
    return true;
}

std::string render_ascii(const ArcDiagram& d) {
    if (d.n() == 0) return "";
    int width = 1 + static_cast<int>(std::to_string(d.n()).size());
    auto column = [&](int v) { return static_cast<size_t>((v - 1) * width); };

    // rows above the baseline: loops sit at height 1, an arc one above
    // whatever it contains; shortest spans first so inner heights are final
    const auto& arcs = d.arcs();
    std::vector<int> height(arcs.size(), 1);
    std::vector<size_t> order(arcs.size());
    for (size_t a = 0; a < arcs.size(); ++a) order[a] = a;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return arcs[a].second - arcs[a].first < arcs[b].second - arcs[b].first;
    });
    for (size_t a : order) {
        if (arcs[a].first == arcs[a].second) continue;
        for (size_t b = 0; b < arcs.size(); ++b) {
            if (a == b) continue;
            if (arcs[a].first <= arcs[b].first && arcs[b].second <= arcs[a].second)
                height[a] = std::max(height[a], height[b] + 1);
        }
    }
    int max_height = 0;
    for (size_t a = 0; a < arcs.size(); ++a) max_height = std::max(max_height, height[a]);

    size_t line_width = column(d.n()) + std::to_string(d.n()).size();
    std::vector<std::string> rows(static_cast<size_t>(max_height), std::string(line_width, ' '));
    auto& put = rows; // rows[h-1] is height h
    for (size_t a = 0; a < arcs.size(); ++a) {
        std::string& row = put[static_cast<size_t>(height[a] - 1)];
        const auto& [i, j] = arcs[a];
        if (i == j) {
            row[column(i)] = 'o';
        } else {
            for (size_t c = column(i) + 1; c < column(j); ++c)
                if (row[c] == ' ') row[c] = '_';
            row[column(i)] = '/';
            row[column(j)] = '\\';
        }
    }

    std::string baseline(line_width, ' ');
    for (int v = 1; v <= d.n(); ++v) {
        std::string label = std::to_string(v);
        baseline.replace(column(v), label.size(), label);
    }

    std::ostringstream out;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        std::string row = *it;
        row.erase(row.find_last_not_of(' ') + 1);
        out << row << '\n';
    }
    out << baseline;
    return out.str();
}

std::string diagram_to_json(const ArcDiagram& d) {
    nlohmann::ordered_json j;
    j["n"] = d.n();
    j["arcs"] = nlohmann::json::array();
    for (const auto& [i, k] : d.arcs()) j["arcs"].push_back({i, k});
    return j.dump();
}

ArcDiagram diagram_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("arcs") ||
        !j["n"].is_number_integer() || !j["arcs"].is_array())
        throw ParseError("expected {\"n\":<int>,\"arcs\":[[i,j],...]}");
    std::vector<Arc> arcs;
    for (const auto& a : j["arcs"]) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
            !a[1].is_number_integer())
            throw ParseError("each arc must be a pair of integers");
        arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return ArcDiagram(j["n"].get<int>(), std::move(arcs));
}

} // namespace partred
