#ifndef PARTRED_MOTZKIN_HPP
#define PARTRED_MOTZKIN_HPP

#include <string>
#include <vector>

#include "partred/arc_diagram.hpp"
#include "partred/errors.hpp"
#include "partred/partition.hpp"

namespace partred {

/// Steps of a 2-Motzkin path: up, down, and two colored level steps.
/// Straight level (L) stands for a loop, wavy level (W) for an isolated
/// vertex in the corresponding arc diagram.
enum class Step : char {
    Up = 'U',
    Down = 'D',
    Level = 'L',
    Wavy = 'W',
};

/// A step sequence over {U, D, L, W}. The sequence itself carries no balance
/// guarantee; validate_path checks the lattice-path conditions.
class TwoMotzkinPath {
public:
    TwoMotzkinPath() = default;
    explicit TwoMotzkinPath(std::vector<Step> steps) : steps_(std::move(steps)) {}

    const std::vector<Step>& steps() const { return steps_; }
    int size() const { return static_cast<int>(steps_.size()); }

    /// Number of steps in {L, U}; the partition statistic n - k.
    int rise_or_level_count() const;

    friend bool operator==(const TwoMotzkinPath&, const TwoMotzkinPath&) = default;

private:
    std::vector<Step> steps_;
};

/// True iff every prefix has at least as many U as D and the totals match.
bool validate_path(const TwoMotzkinPath& p);

/// Parses a string over {U,D,L,W}; lowercase accepted and normalized.
/// Throws ParseError on any other character.
TwoMotzkinPath parse_path(const std::string& text);

/// Concatenated step letters; empty string for the empty path.
std::string format_path(const TwoMotzkinPath& p);

/// Vertex-wise encoding of an independent noncrossing diagram: L for a
/// looped vertex, W for an isolated one, U where a non-loop arc opens, D
/// where one closes. Throws InvalidDiagram on dependent or crossing input.
TwoMotzkinPath diagram_to_path(const ArcDiagram& d);

/// Inverse of diagram_to_path: U/D pairs are matched by the unique
/// noncrossing (stack) matching. Throws InvalidPath on invalid paths.
ArcDiagram path_to_diagram(const TwoMotzkinPath& p);

/// Noncrossing partition of [n] -> 2-Motzkin path of length n-1 with exactly
/// n - k steps in {L, U}; the composite of reduce_noncrossing and
/// diagram_to_path. Requires n >= 1; throws NotNoncrossing when p crosses.
TwoMotzkinPath partition_to_path(const SetPartition& p);

/// Inverse of partition_to_path: the unique noncrossing partition of
/// [length + 1] mapping to the path. Throws InvalidPath on invalid paths.
SetPartition path_to_partition(const TwoMotzkinPath& path);

} // namespace partred

#endif
