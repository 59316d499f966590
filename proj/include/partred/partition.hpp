#ifndef PARTRED_PARTITION_HPP
#define PARTRED_PARTITION_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "partred/errors.hpp"

namespace partred {

/// Regularity of a partition: the smallest gap between consecutive elements
/// of a block, or infinite when every block is a singleton. Infinite compares
/// greater than every finite value and survives round-trips as a distinguished
/// state, never as a large integer.
class Regularity {
public:
    static Regularity finite(int m) {
        if (m < 1) throw DomainError("regularity must be >= 1");
        return Regularity(m);
    }
    static Regularity infinity() { return Regularity(); }

    bool is_infinite() const { return !gap_.has_value(); }
    int value() const {
        if (!gap_) throw DomainError("regularity is infinite");
        return *gap_;
    }

    /// True when this regularity admits m-regular membership, i.e. >= m.
    bool at_least(int m) const { return !gap_ || *gap_ >= m; }

    std::string str() const { return gap_ ? std::to_string(*gap_) : "inf"; }

    friend bool operator==(const Regularity&, const Regularity&) = default;
    friend std::strong_ordering operator<=>(const Regularity& a, const Regularity& b) {
        if (a.gap_ && b.gap_) return *a.gap_ <=> *b.gap_;
        if (!a.gap_ && !b.gap_) return std::strong_ordering::equal;
        return a.gap_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    Regularity() = default;
    explicit Regularity(int m) : gap_(m) {}
    std::optional<int> gap_;
};

/// A set partition of [n] in normalized form: blocks are nonempty, disjoint,
/// cover {1,...,n} exactly, are sorted internally, and are ordered by their
/// minimum element. n is inferred from the blocks (maximum element; 0 for the
/// empty partition). Instances are immutable values.
class SetPartition {
public:
    /// Empty partition of [0] with zero blocks.
    SetPartition() = default;

    /// Normalizes the given blocks (sorts within blocks, orders blocks by
    /// minimum) and validates that they partition [max element].
    /// Throws InvalidPartition otherwise.
    explicit SetPartition(std::vector<std::vector<int>> blocks);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition&, const SetPartition&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
};

/// A restricted growth sequence a_1...a_n: a_1 = 1 and each entry exceeds the
/// running maximum by at most one, so block indices appear in first-occurrence
/// order with no gaps. Validated on construction.
class CanonicalSequence {
public:
    CanonicalSequence() = default;

    /// Throws InvalidCanonical when the growth conditions fail.
    explicit CanonicalSequence(std::vector<int> entries);

    const std::vector<int>& entries() const { return entries_; }
    int size() const { return static_cast<int>(entries_.size()); }

    /// Largest entry = number of blocks.
    int max_entry() const;

    friend bool operator==(const CanonicalSequence&, const CanonicalSequence&) = default;

private:
    std::vector<int> entries_;
};

/// Parses block notation such as "(1,4)(2,5,7)(3)(6)": no whitespace, decimal
/// integers without leading zeros, blocks in any order. The result is
/// normalized. Throws ParseError on bad syntax and InvalidPartition when the
/// blocks do not partition [max element].
SetPartition parse_partition(const std::string& text);

/// Block notation with blocks in minimum order and elements ascending;
/// inverse of parse_partition on normalized text.
std::string format_partition(const SetPartition& p);

/// Canonical sequential form: entry i is the index of the block containing i.
CanonicalSequence to_canonical(const SetPartition& p);

/// Inverse of to_canonical.
SetPartition from_canonical(const CanonicalSequence& s);

/// Parses either the compact digit form "1231242" (block indices <= 9) or
/// comma-separated integers "1,2,3,1,2,4,2".
CanonicalSequence parse_canonical(const std::string& text);

/// Digit string when all entries are <= 9, comma-separated otherwise.
std::string format_canonical(const CanonicalSequence& s);

/// Minimum gap |x - y| over consecutive elements x, y sharing a block;
/// infinite when all blocks are singletons (including the empty partition).
Regularity regularity(const SetPartition& p);

/// True iff every two distinct elements of a block differ by at least m.
/// m must be >= 1.
bool is_m_regular(const SetPartition& p, int m);

/// True iff every block has at most two elements.
bool is_poor(const SetPartition& p);

/// True iff no four elements x < u < y < v exist with x, y in one block and
/// u, v in a different block. Agrees with is_abab_free on the canonical form.
bool is_noncrossing(const SetPartition& p);

/// True iff the sequence avoids the pattern a...b...a...b (a != b) as a
/// not-necessarily-consecutive subsequence.
bool is_abab_free(const CanonicalSequence& s);

} // namespace partred

#endif
