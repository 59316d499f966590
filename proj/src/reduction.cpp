#include "partred/reduction.hpp"

namespace partred {

ArcDiagram reduce_arcs(const ArcDiagram& d) {
    if (d.n() < 1) throw DomainError("cannot reduce an empty diagram");
    if (d.has_loops()) throw InvalidDiagram("input diagram must be loop-free");

    std::vector<Arc> reduced;
    reduced.reserve(d.arcs().size());
    bool last_vertex_isolated = true;
    for (const auto& [i, j] : d.arcs()) {
        if (i == d.n()) last_vertex_isolated = false;
        reduced.emplace_back(i, j - 1);
    }
    if (!last_vertex_isolated)
        throw NotReducible("vertex " + std::to_string(d.n()) + " still carries an arc");
    try {
        return ArcDiagram(d.n() - 1, std::move(reduced));
    } catch (const InvalidDiagram& e) {
        throw NotReducible(std::string("reduced arcs are not a valid diagram: ") + e.what());
    }
}

ArcDiagram expand_arcs(const ArcDiagram& d) {
    std::vector<Arc> expanded;
    expanded.reserve(d.arcs().size());
    for (const auto& [i, j] : d.arcs()) expanded.emplace_back(i, j + 1);
    try {
        return ArcDiagram(d.n() + 1, std::move(expanded));
    } catch (const InvalidDiagram& e) {
        throw InvalidDiagram(std::string("expanded arcs collide: ") + e.what());
    }
}

SetPartition reduce_partition(const SetPartition& p) {
    if (p.n() < 1) throw DomainError("cannot reduce the empty partition");
    if (!regularity(p).at_least(2))
        throw NotTwoRegular("reduction of a partition requires regularity >= 2");
    return to_partition(reduce_arcs(from_partition(p)));
}

SetPartition expand_partition(const SetPartition& q) {
    return to_partition(expand_arcs(from_partition(q)));
}

ArcDiagram reduce_noncrossing(const SetPartition& p) {
    if (p.n() < 1) throw DomainError("cannot reduce the empty partition");
    if (!is_noncrossing(p)) throw NotNoncrossing("partition has crossing blocks");
    return reduce_arcs(from_partition(p));
}

SetPartition expand_independent(const ArcDiagram& d) {
    if (!is_independent(d)) throw InvalidDiagram("arcs are not pairwise vertex-disjoint");
    if (has_crossing(d)) throw InvalidDiagram("diagram has crossing arcs");
    return to_partition(expand_arcs(d));
}

} // namespace partred
