#include "partred/enumeration.hpp"

#include <algorithm>

namespace partred {

namespace {

// Depth-first search over canonical-sequence prefixes, emitting leaves in
// lexicographic order. Placements are pruned on the regularity gap, on block
// size when the family is poor, and on blocks that the noncrossing state has
// already closed: once a block is closed, any later element would complete an
// abab pattern, and a crossing never goes away.
class Generator {
public:
    Generator(int n, const FamilyFilter& filter,
              const std::function<bool(const std::vector<int>&)>& visit)
        : n_(n), filter_(filter), visit_(visit) {
        seq_.reserve(static_cast<size_t>(std::max(n, 0)));
        last_pos_.assign(static_cast<size_t>(n) + 2, 0);
        block_size_.assign(static_cast<size_t>(n) + 2, 0);
        closed_.assign(static_cast<size_t>(n) + 2, false);
    }

    void run() {
        if (n_ < 0) return;
        descend(1, 0);
    }

private:
    bool block_count_reachable(int blocks, int next_pos) const {
        if (!filter_.k) return true;
        int remaining = n_ - next_pos + 1;
        return *filter_.k >= blocks && *filter_.k <= blocks + remaining;
    }

    void descend(int pos, int blocks) {
        if (stopped_) return;
        if (pos > n_) {
            if (!filter_.k || blocks == *filter_.k)
                if (!visit_(seq_)) stopped_ = true;
            return;
        }
        for (int c = 1; c <= blocks + 1 && !stopped_; ++c) {
            bool is_new = c == blocks + 1;
            if (!is_new) {
                if (filter_.m.is_infinite()) continue;
                if (pos - last_pos_[static_cast<size_t>(c)] < filter_.m.value()) continue;
                if (filter_.poor && block_size_[static_cast<size_t>(c)] >= 2) continue;
                if (filter_.noncrossing && closed_[static_cast<size_t>(c)]) continue;
            }
            int next_blocks = is_new ? blocks + 1 : blocks;
            if (!block_count_reachable(next_blocks, pos + 1)) continue;

            int saved_last = last_pos_[static_cast<size_t>(c)];
            seq_.push_back(c);
            last_pos_[static_cast<size_t>(c)] = pos;
            ++block_size_[static_cast<size_t>(c)];

            std::vector<int> popped;
            if (filter_.noncrossing) {
                if (is_new) {
                    stack_.push_back(c);
                } else {
                    // blocks that opened after c's last element close now
                    while (stack_.back() != c) {
                        popped.push_back(stack_.back());
                        closed_[static_cast<size_t>(stack_.back())] = true;
                        stack_.pop_back();
                    }
                }
            }

            descend(pos + 1, next_blocks);

            if (filter_.noncrossing) {
                if (is_new) {
                    stack_.pop_back();
                } else {
                    for (auto it = popped.rbegin(); it != popped.rend(); ++it) {
                        closed_[static_cast<size_t>(*it)] = false;
                        stack_.push_back(*it);
                    }
                }
            }
            --block_size_[static_cast<size_t>(c)];
            last_pos_[static_cast<size_t>(c)] = saved_last;
            seq_.pop_back();
        }
    }

    int n_;
    const FamilyFilter& filter_;
    const std::function<bool(const std::vector<int>&)>& visit_;
    std::vector<int> seq_;
    std::vector<int> last_pos_;
    std::vector<int> block_size_;
    std::vector<int> stack_;
    std::vector<bool> closed_;
    bool stopped_ = false;
};

} // namespace

void for_each_partition(int n, const FamilyFilter& filter,
                        const std::function<bool(const SetPartition&)>& visit) {
    Generator gen(n, filter, [&](const std::vector<int>& seq) {
        return visit(from_canonical(CanonicalSequence(seq)));
    });
    gen.run();
}

std::vector<SetPartition> generate_partitions(int n, const FamilyFilter& filter) {
    std::vector<SetPartition> out;
    for_each_partition(n, filter, [&](const SetPartition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

BigCount count_family(int n, const FamilyFilter& filter) {
    BigCount count = 0;
    Generator gen(n, filter, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    gen.run();
    return count;
}

std::vector<BigCount> count_by_block_count(int n, FamilyFilter filter) {
    filter.k.reset();
    std::vector<BigCount> buckets(static_cast<size_t>(std::max(n, 0)) + 1, 0);
    Generator gen(n, filter, [&](const std::vector<int>& seq) {
        int k = seq.empty() ? 0 : *std::max_element(seq.begin(), seq.end());
        ++buckets[static_cast<size_t>(k)];
        return true;
    });
    gen.run();
    return buckets;
}

BigCount binomial(long long n, long long r) {
    if (n < 0 || r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    BigCount result = 1;
    for (long long i = 0; i < r; ++i) {
        result *= n - i;
        result /= i + 1; // exact: result is binomial(n, i+1)
    }
    return result;
}

BigCount catalan(int n) {
    if (n < 0) return 0;
    return binomial(2LL * n, n) / (n + 1); // exact division
}

BigCount catalan_recurrence(int n) {
    if (n < 0) return 0;
    std::vector<BigCount> c(static_cast<size_t>(n) + 1);
    c[0] = 1;
    for (int i = 1; i <= n; ++i) {
        BigCount sum = 0;
        for (int j = 0; j < i; ++j) sum += c[static_cast<size_t>(j)] * c[static_cast<size_t>(i - 1 - j)];
        c[static_cast<size_t>(i)] = sum;
    }
    return c[static_cast<size_t>(n)];
}

BigCount narayana(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw DomainError("narayana requires 1 <= k <= n");
    return binomial(n, k) * binomial(n, k - 1) / n; // exact division
}

BigCount poor_noncrossing_closed(long long N, long long K) {
    if (N < 0 || K < 0 || K > N) return 0;
    long long pairs = N - K;
    return binomial(N, 2 * pairs) * catalan(static_cast<int>(pairs));
}

BigCount stirling2(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    std::vector<BigCount> row(static_cast<size_t>(k) + 1, 0);
    row[0] = 1; // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[static_cast<size_t>(j)] = BigCount(j) * row[static_cast<size_t>(j)] +
                                          row[static_cast<size_t>(j - 1)];
        row[0] = 0; // S(i, 0) = 0 for i >= 1
    }
    return row[static_cast<size_t>(k)];
}

} // namespace partred
