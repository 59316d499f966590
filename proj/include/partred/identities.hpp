#ifndef PARTRED_IDENTITIES_HPP
#define PARTRED_IDENTITIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "partred/enumeration.hpp"

namespace partred {

// Exhaustive verification of the identities the reduction algorithm
// explains, one machine-readable verdict per parameter cell. Failures are
// reported, never thrown. Cells are independent; with jobs > 1 they are
// checked concurrently and merged back into the same deterministic order.

/// Verdict for one identity instance. A cell passes when the two counts
/// agree and every member-level check (round-trips, preserved predicates,
/// census decompositions) holds; cells where both families are empty pass
/// vacuously and are flagged for audit.
struct VerificationReport {
    std::string identity;
    int n = 0;
    std::optional<int> k;
    std::optional<int> m;
    BigCount lhs;
    BigCount rhs;
    bool roundtrip_ok = true;
    bool empty = false;

    bool pass() const { return lhs == rhs && roundtrip_ok; }
};

/// One-line JSON: {"identity":...,"n":...,"k":...,"m":...,"lhs":"...",
/// "rhs":"...","roundtrip":...,"status":"pass"|"fail"} with k, m present
/// only when the cell has them and "empty":true on vacuous cells.
std::string report_to_json_line(const VerificationReport& r);

/// p(n,k,m) = p(n-1,k-1,m-1): counts on both sides for every
/// 2 <= n <= n_max, 1 <= k <= n, 2 <= m <= n, plus both round-trips on
/// every member of both families.
std::vector<VerificationReport> verify_eq2(int n_max, int jobs = 1);

/// The noncrossing refinement p(abab;n,k,m) = p2(abab;n-1,k-1,m-1) over the
/// same cell range, additionally asserting every reduced image is poor and
/// noncrossing and every expanded image is noncrossing.
std::vector<VerificationReport> verify_eq3(int n_max, int jobs = 1);

/// Narayana-Catalan identity:
/// N(n,k) = sum_i binomial(n-1,2i) binomial(n-2i-1,n-i-k) C_i, exactly for
/// n <= n_max; for n <= brute_max the Narayana side is additionally checked
/// against the enumerated noncrossing count.
std::vector<VerificationReport> verify_narayana(int n_max, int brute_max, int jobs = 1);

/// Loop-census identity:
/// N(n,k) = sum_i binomial(n-1,i) p2(abab;n-i-1,k-1,1), exactly for
/// n <= n_max; for n <= 10 the summands are additionally reproduced by
/// classifying noncrossing partitions by the loop count of their reduction.
std::vector<VerificationReport> verify_eq5(int n_max, int jobs = 1);

/// Round-trips every noncrossing partition of [n] through its 2-Motzkin
/// path for n <= n_max, checks the n-k step census on each, and compares
/// the total against the recurrence-computed Catalan number.
std::vector<VerificationReport> verify_motzkin(int n_max, int jobs = 1);

/// RNA secondary structures of length n by number of base pairs k:
/// entry k = p2(abab; n, n-k, 2), for k = 0..floor(n/2).
std::map<int, BigCount> rna_table(int n);

} // namespace partred

#endif
