#ifndef PARTRED_ARC_DIAGRAM_HPP
#define PARTRED_ARC_DIAGRAM_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "partred/errors.hpp"
#include "partred/partition.hpp"

namespace partred {

/// An arc on vertices of [n]: tail <= head, with tail == head encoding a loop.
using Arc = std::pair<int, int>;

/// A digraph on [n] drawn on a line: non-loop arcs run left to right, every
/// vertex has at most one incoming and one outgoing non-loop arc, and a
/// looped vertex carries no other arc. Loop-free instances are exactly the
/// linear representations of set partitions; loops arise only from reduction.
/// Arcs are kept sorted lexicographically. Immutable value type.
class ArcDiagram {
public:
    ArcDiagram() = default;

    /// Throws InvalidDiagram when the arc set violates the invariants above
    /// or mentions vertices outside [n].
    ArcDiagram(int n, std::vector<Arc> arcs);

    int n() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    bool has_loops() const;
    int loop_count() const;

    /// Number of weakly connected components (isolated vertices included).
    int component_count() const;

    friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;
    friend auto operator<=>(const ArcDiagram&, const ArcDiagram&) = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

/// Linear representation: one directed path per block through its elements in
/// increasing order, i.e. an arc per consecutive pair. Never produces loops.
ArcDiagram from_partition(const SetPartition& p);

/// Components-as-blocks reading; exact inverse of from_partition.
/// Throws InvalidDiagram when the diagram contains a loop.
SetPartition to_partition(const ArcDiagram& d);

/// True iff two non-loop arcs (i,j), (u,v) satisfy i < u < j < v.
/// Loops never cross anything; arcs sharing an endpoint do not cross.
bool has_crossing(const ArcDiagram& d);

/// True iff all arcs, loops included, are pairwise vertex-disjoint.
bool is_independent(const ArcDiagram& d);

/// Deterministic ASCII drawing: numbered vertices on a baseline, each
/// non-loop arc a /___\ bracket on a row given by its nesting depth (inner
/// arcs below outer ones), loops an 'o' above their vertex.
std::string render_ascii(const ArcDiagram& d);

/// Compact JSON {"n":N,"arcs":[[i,j],...]} with arcs sorted lexicographically.
std::string diagram_to_json(const ArcDiagram& d);

/// Accepts the same object with keys in any order. Throws ParseError on
/// malformed JSON, InvalidDiagram on invariant violations.
ArcDiagram diagram_from_json(const std::string& text);

} // namespace partred

#endif
