#ifndef PARTRED_REDUCTION_HPP
#define PARTRED_REDUCTION_HPP

#include "partred/arc_diagram.hpp"
#include "partred/partition.hpp"

namespace partred {

// The reduction algorithm and its inverse. Reduction replaces every arc
// (i,j) by (i,j-1) — turning adjacent arcs (i,i+1) into loops — and deletes
// the then-isolated vertex n. For partitions of regularity >= 2 this maps
// k-block m-regular partitions of [n] onto (k-1)-block (m-1)-regular
// partitions of [n-1], preserving the noncrossing property; for noncrossing
// partitions of any regularity it yields independent noncrossing arcs and
// loops.

/// Arc-level reduction. Requires a loop-free diagram on n >= 1 vertices.
/// Throws InvalidDiagram on loops, DomainError on n = 0, and NotReducible if
/// the shrunken arc set cannot form a valid diagram.
ArcDiagram reduce_arcs(const ArcDiagram& d);

/// Arc-level inverse: every arc or loop (i,j) becomes (i,j+1) and a vertex is
/// appended. Total on valid diagrams; mutually inverse with reduce_arcs.
ArcDiagram expand_arcs(const ArcDiagram& d);

/// Theorem-level reduction on partitions: requires regularity(p) >= 2 and
/// n >= 1. The result has one block less, is (m-1)-regular when p is
/// m-regular, and lives on [n-1]. Throws NotTwoRegular below regularity 2.
SetPartition reduce_partition(const SetPartition& p);

/// Inverse of reduce_partition; defined on every partition. The result lives
/// on [n+1], has one block more, and its regularity exceeds regularity(q) by
/// one (infinite stays infinite).
SetPartition expand_partition(const SetPartition& q);

/// Reduction of a noncrossing partition of any regularity, kept at the arc
/// level because the result may contain loops: an independent noncrossing
/// diagram on [n-1] with exactly n - k arcs-plus-loops.
/// Throws NotNoncrossing when p crosses.
ArcDiagram reduce_noncrossing(const SetPartition& p);

/// Inverse of reduce_noncrossing: the unique noncrossing partition reducing
/// to d. Requires is_independent(d) and no crossing; throws InvalidDiagram
/// otherwise.
SetPartition expand_independent(const ArcDiagram& d);

} // namespace partred

#endif
