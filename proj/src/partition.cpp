#include "partred/partition.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace partred {

SetPartition::SetPartition(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    for (auto& block : blocks_) {
        if (block.empty()) throw InvalidPartition("empty block");
        std::sort(block.begin(), block.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    int max_element = 0;
    for (const auto& block : blocks_) {
        if (block.front() < 1) throw InvalidPartition("element out of range");
        max_element = std::max(max_element, block.back());
    }
    std::vector<bool> seen(static_cast<size_t>(max_element) + 1, false);
    for (const auto& block : blocks_)
        for (int e : block) {
            if (seen[static_cast<size_t>(e)])
                throw InvalidPartition("duplicate element " + std::to_string(e));
            seen[static_cast<size_t>(e)] = true;
        }
    for (int e = 1; e <= max_element; ++e)
        if (!seen[static_cast<size_t>(e)])
            throw InvalidPartition("blocks do not cover element " + std::to_string(e));
    n_ = max_element;
}

CanonicalSequence::CanonicalSequence(std::vector<int> entries) : entries_(std::move(entries)) {
    int max_used = 0;
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 1 || entries_[i] > max_used + 1)
            throw InvalidCanonical("growth condition violated at position " +
                                   std::to_string(i + 1));
        max_used = std::max(max_used, entries_[i]);
    }
}

int CanonicalSequence::max_entry() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

namespace {

// Decimal integer without leading zeros, as the grammar demands.
int read_int(const std::string& text, size_t& pos) {
    size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw ParseError("expected an integer at position " + std::to_string(pos));
    if (text[start] == '0') throw ParseError("leading zero at position " + std::to_string(start));
    long long value = 0;
    for (size_t i = start; i < pos; ++i) {
        value = value * 10 + (text[i] - '0');
        if (value > std::numeric_limits<int>::max()) throw ParseError("element out of range");
    }
    return static_cast<int>(value);
}

} // namespace

SetPartition parse_partition(const std::string& text) {
    if (text.empty()) throw ParseError("empty input");
    std::vector<std::vector<int>> blocks;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw ParseError("expected '(' at position " + std::to_string(pos));
        ++pos;
        std::vector<int> block;
        block.push_back(read_int(text, pos));
        while (pos < text.size() && text[pos] == ',') {
            ++pos;
            block.push_back(read_int(text, pos));
        }
        if (pos >= text.size() || text[pos] != ')')
            throw ParseError("expected ')' at position " + std::to_string(pos));
        ++pos;
        blocks.push_back(std::move(block));
    }
    return SetPartition(std::move(blocks));
}

std::string format_partition(const SetPartition& p) {
    std::ostringstream out;
    for (const auto& block : p.blocks()) {
        out << '(';
        for (size_t i = 0; i < block.size(); ++i) {
            if (i > 0) out << ',';
            out << block[i];
        }
        out << ')';
    }
    return out.str();
}

CanonicalSequence to_canonical(const SetPartition& p) {
    std::vector<int> entries(static_cast<size_t>(p.n()));
    for (int b = 0; b < p.block_count(); ++b)
        for (int e : p.blocks()[static_cast<size_t>(b)])
            entries[static_cast<size_t>(e - 1)] = b + 1;
    return CanonicalSequence(std::move(entries));
}

SetPartition from_canonical(const CanonicalSequence& s) {
    std::vector<std::vector<int>> blocks(static_cast<size_t>(s.max_entry()));
    for (int i = 0; i < s.size(); ++i)
        blocks[static_cast<size_t>(s.entries()[static_cast<size_t>(i)] - 1)].push_back(i + 1);
    return SetPartition(std::move(blocks));
}

CanonicalSequence parse_canonical(const std::string& text) {
    if (text.empty()) throw ParseError("empty input");
    std::vector<int> entries;
    if (text.find(',') != std::string::npos) {
        size_t pos = 0;
        entries.push_back(read_int(text, pos));
        while (pos < text.size()) {
            if (text[pos] != ',')
                throw ParseError("expected ',' at position " + std::to_string(pos));
            ++pos;
            entries.push_back(read_int(text, pos));
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw ParseError(std::string("unexpected character '") + c + "'");
            entries.push_back(c - '0');
        }
    }
    return CanonicalSequence(std::move(entries));
}

std::string format_canonical(const CanonicalSequence& s) {
    std::ostringstream out;
    bool compact = s.max_entry() <= 9;
    for (int i = 0; i < s.size(); ++i) {
        if (!compact && i > 0) out << ',';
        out << s.entries()[static_cast<size_t>(i)];
    }
    return out.str();
}

Regularity regularity(const SetPartition& p) {
    std::optional<int> min_gap;
    for (const auto& block : p.blocks())
        for (size_t i = 1; i < block.size(); ++i) {
            int gap = block[i] - block[i - 1];
            if (!min_gap || gap < *min_gap) min_gap = gap;
        }
    return min_gap ? Regularity::finite(*min_gap) : Regularity::infinity();
}

bool is_m_regular(const SetPartition& p, int m) {
    if (m < 1) throw DomainError("m must be >= 1");
    return regularity(p).at_least(m);
}

bool is_poor(const SetPartition& p) {
    return std::all_of(p.blocks().begin(), p.blocks().end(),
                       [](const auto& block) { return block.size() <= 2; });
}

bool is_noncrossing(const SetPartition& p) {
    // two blocks admit x < u < y < v iff their merged label sequence switches
    // sides at least three times
    const auto& blocks = p.blocks();
    for (size_t a = 0; a < blocks.size(); ++a) {
        for (size_t b = a + 1; b < blocks.size(); ++b) {
            if (blocks[a].size() < 2 || blocks[b].size() < 2) continue;
            size_t ia = 0, ib = 0;
            int switches = 0, side = -1;
            while (ia < blocks[a].size() && ib < blocks[b].size()) {
                int next = blocks[a][ia] < blocks[b][ib] ? 0 : 1;
                if (side != -1 && next != side) ++switches;
                side = next;
                next == 0 ? ++ia : ++ib;
            }
            if (ia < blocks[a].size() && side == 1) ++switches;
            if (ib < blocks[b].size() && side == 0) ++switches;
            if (switches >= 3) return false;
        }
    }
    return true;
}

bool is_abab_free(const CanonicalSequence& s) {
    // scan pairs of positions (u, y): a pattern b..a..b..a completes iff
    // symbol s[y] already occurred before u and s[u] occurs again after y
    const auto& e = s.entries();
    const int n = s.size();
    const int symbols = s.max_entry();
    std::vector<int> first(static_cast<size_t>(symbols) + 1, n);
    std::vector<int> last(static_cast<size_t>(symbols) + 1, -1);
    for (int i = 0; i < n; ++i) {
        size_t v = static_cast<size_t>(e[static_cast<size_t>(i)]);
        first[v] = std::min(first[v], i);
        last[v] = std::max(last[v], i);
    }
    for (int u = 0; u < n; ++u) {
        for (int y = u + 1; y < n; ++y) {
            int b = e[static_cast<size_t>(u)], a = e[static_cast<size_t>(y)];
            if (a == b) continue;
            if (first[static_cast<size_t>(a)] < u && last[static_cast<size_t>(b)] > y)
                return false;
        }
    }
    return true;
}

} // namespace partred
