#ifndef PARTRED_ERRORS_HPP
#define PARTRED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace partred {

// Base for every error this library raises on bad domain input. The CLI
// maps these to exit code 1; anything else escaping is a bug.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text that does not match a documented grammar (block notation, canonical
// sequence, arc JSON, path string).
struct ParseError : DomainError {
    using DomainError::DomainError;
};

// Blocks that are not a partition of [n]: duplicates, gaps, empty blocks.
struct InvalidPartition : DomainError {
    using DomainError::DomainError;
};

// A sequence violating the restricted growth conditions.
struct InvalidCanonical : DomainError {
    using DomainError::DomainError;
};

// Arc sets violating the diagram invariants (degree bounds, loop
// exclusivity, arc direction, vertex range).
struct InvalidDiagram : DomainError {
    using DomainError::DomainError;
};

// A step sequence that is not a valid 2-Motzkin path.
struct InvalidPath : DomainError {
    using DomainError::DomainError;
};

// reduce_partition on input with regularity < 2.
struct NotTwoRegular : DomainError {
    using DomainError::DomainError;
};

// An operation requiring noncrossing input got a crossing partition.
struct NotNoncrossing : DomainError {
    using DomainError::DomainError;
};

// Arc reduction produced a vertex carrying a loop plus another arc.
struct NotReducible : DomainError {
    using DomainError::DomainError;
};

} // namespace partred

#endif
