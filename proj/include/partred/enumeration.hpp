#ifndef PARTRED_ENUMERATION_HPP
#define PARTRED_ENUMERATION_HPP

#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "partred/partition.hpp"

namespace partred {

/// Exact arbitrary-precision count. All counting in this library is integer
/// arithmetic; divisions in the closed forms below are exact.
using BigCount = boost::multiprecision::cpp_int;

/// Selects a partition family: block count k (all k when absent), regularity
/// lower bound m (infinite means all-singleton partitions only), and the
/// noncrossing / poor restrictions.
struct FamilyFilter {
    std::optional<int> k;
    Regularity m = Regularity::finite(1);
    bool noncrossing = false;
    bool poor = false;
};

/// Visits every partition of [n] satisfying the filter exactly once, in
/// lexicographic order of canonical sequences. The callback may return false
/// to stop early. Generation prunes on the growth condition, on m-regularity
/// (an element closer than m to its block's last element is never placed),
/// on poorness, and on the noncrossing property via incremental open/closed
/// block state (a crossing once created never disappears).
void for_each_partition(int n, const FamilyFilter& filter,
                        const std::function<bool(const SetPartition&)>& visit);

/// Materialized generator output, same order.
std::vector<SetPartition> generate_partitions(int n, const FamilyFilter& filter);

/// Number of partitions the generator would yield: p(n,k,m) and friends.
BigCount count_family(int n, const FamilyFilter& filter);

/// One pass of the generator bucketed by block count: entry [k] counts the
/// partitions with k blocks satisfying the remaining filter fields (the
/// filter's own k is ignored). The vector has n+1 entries.
std::vector<BigCount> count_by_block_count(int n, FamilyFilter filter);

/// Binomial coefficient; 0 outside 0 <= r <= n, including all n < 0.
BigCount binomial(long long n, long long r);

/// Catalan number C_n = binomial(2n, n) / (n + 1), computed exactly.
BigCount catalan(int n);

/// C_n by the convolution recurrence C_{n+1} = sum C_i C_{n-i}; an oracle
/// independent of the closed form.
BigCount catalan_recurrence(int n);

/// Narayana number N(n,k) = binomial(n,k) * binomial(n,k-1) / n for
/// 1 <= k <= n; counts noncrossing partitions of [n] with k blocks.
/// Throws DomainError when k is out of range.
BigCount narayana(int n, int k);

/// Closed form for poor noncrossing partitions of [N] with K blocks:
/// binomial(N, 2(N-K)) * C_{N-K}; 0 when K > N or 2(N-K) > N.
BigCount poor_noncrossing_closed(long long N, long long K);

/// Stirling number of the second kind via the recurrence
/// S(n,k) = k S(n-1,k) + S(n-1,k-1); an oracle independent of the generator.
BigCount stirling2(int n, int k);

} // namespace partred

#endif
