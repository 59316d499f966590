#include "partred/identities.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include <json.hpp>

#include "partred/motzkin.hpp"
#include "partred/reduction.hpp"

namespace partred {

namespace {

using Unit = std::function<std::vector<VerificationReport>()>;

// Units are independent; run them across `jobs` workers and concatenate in
// unit order, so the merged output never depends on scheduling.
std::vector<VerificationReport> run_units(const std::vector<Unit>& units, int jobs) {
    std::vector<std::vector<VerificationReport>> results(units.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < units.size(); ++i) results[i] = units[i]();
    } else {
        std::atomic<size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (size_t i = next++; i < units.size(); i = next++) {
                try {
                    results[i] = units[i]();
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        size_t count = std::min<size_t>(static_cast<size_t>(jobs), std::max<size_t>(units.size(), 1));
        for (size_t i = 0; i < count; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }
    std::vector<VerificationReport> merged;
    for (auto& part : results) merged.insert(merged.end(), part.begin(), part.end());
    return merged;
}

void finalize(VerificationReport& r) { r.empty = r.lhs == 0 && r.rhs == 0; }

// Shared sweep for the two reduction identities. For each cell (n,k,m) it
// counts both families, reduces every member of the left one and expands
// every member of the right one, requiring membership on the far side and
// an exact round-trip. `noncrossing` switches to the abab-free refinement,
// which also demands poor noncrossing images.
std::vector<VerificationReport> reduction_sweep_unit(const std::string& identity, int n,
                                                     bool noncrossing) {
    // [k][m] -> per-cell state
    std::vector<std::vector<BigCount>> lhs(static_cast<size_t>(n) + 1,
                                           std::vector<BigCount>(static_cast<size_t>(n) + 1, 0));
    auto rhs = lhs;
    std::vector<std::vector<char>> ok(static_cast<size_t>(n) + 1,
                                      std::vector<char>(static_cast<size_t>(n) + 1, 1));

    for (int m = 2; m <= n; ++m) {
        FamilyFilter left;
        left.m = Regularity::finite(m);
        left.noncrossing = noncrossing;
        for_each_partition(n, left, [&](const SetPartition& p) {
            size_t k = static_cast<size_t>(p.block_count());
            ++lhs[k][static_cast<size_t>(m)];
            char& cell_ok = ok[k][static_cast<size_t>(m)];
            SetPartition q = reduce_partition(p);
            if (q.n() != n - 1 || q.block_count() != p.block_count() - 1 ||
                !is_m_regular(q, m - 1) || expand_partition(q) != p)
                cell_ok = 0;
            if (noncrossing && (!is_poor(q) || !is_noncrossing(q))) cell_ok = 0;
            return true;
        });

        FamilyFilter right;
        right.m = Regularity::finite(m - 1);
        right.noncrossing = noncrossing;
        right.poor = noncrossing;
        for_each_partition(n - 1, right, [&](const SetPartition& q) {
            size_t k = static_cast<size_t>(q.block_count() + 1);
            if (k > static_cast<size_t>(n)) return true;
            ++rhs[k][static_cast<size_t>(m)];
            char& cell_ok = ok[k][static_cast<size_t>(m)];
            SetPartition p = expand_partition(q);
            if (p.n() != n || p.block_count() != q.block_count() + 1 || !is_m_regular(p, m) ||
                reduce_partition(p) != q)
                cell_ok = 0;
            if (noncrossing && !is_noncrossing(p)) cell_ok = 0;
            return true;
        });
    }

    std::vector<VerificationReport> reports;
    for (int k = 1; k <= n; ++k) {
        for (int m = 2; m <= n; ++m) {
            VerificationReport r;
            r.identity = identity;
            r.n = n;
            r.k = k;
            r.m = m;
            r.lhs = lhs[static_cast<size_t>(k)][static_cast<size_t>(m)];
            r.rhs = rhs[static_cast<size_t>(k)][static_cast<size_t>(m)];
            r.roundtrip_ok = ok[static_cast<size_t>(k)][static_cast<size_t>(m)] != 0;
            finalize(r);
            reports.push_back(std::move(r));
        }
    }
    return reports;
}

} // namespace

std::string report_to_json_line(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["identity"] = r.identity;
    j["n"] = r.n;
    if (r.k) j["k"] = *r.k;
    if (r.m) j["m"] = *r.m;
    j["lhs"] = r.lhs.str();
    j["rhs"] = r.rhs.str();
    j["roundtrip"] = r.roundtrip_ok;
    j["status"] = r.pass() ? "pass" : "fail";
    if (r.empty) j["empty"] = true;
    return j.dump();
}

std::vector<VerificationReport> verify_eq2(int n_max, int jobs) {
    std::vector<Unit> units;
    for (int n = 2; n <= n_max; ++n)
        units.push_back([n] { return reduction_sweep_unit("eq2", n, false); });
    return run_units(units, jobs);
}

std::vector<VerificationReport> verify_eq3(int n_max, int jobs) {
    std::vector<Unit> units;
    for (int n = 2; n <= n_max; ++n)
        units.push_back([n] { return reduction_sweep_unit("eq3", n, true); });
    return run_units(units, jobs);
}

std::vector<VerificationReport> verify_narayana(int n_max, int brute_max, int jobs) {
    std::vector<Unit> units;
    for (int n = 1; n <= n_max; ++n) {
        units.push_back([n, brute_max] {
            std::vector<BigCount> brute;
            if (n <= brute_max) {
                FamilyFilter nc;
                nc.noncrossing = true;
                brute = count_by_block_count(n, nc);
            }
            std::vector<VerificationReport> reports;
            for (int k = 1; k <= n; ++k) {
                VerificationReport r;
                r.identity = "narayana";
                r.n = n;
                r.k = k;
                r.lhs = narayana(n, k);
                BigCount sum = 0;
                for (int i = 0; i <= n - k; ++i)
                    sum += binomial(n - 1, 2 * i) * binomial(n - 2 * i - 1, n - i - k) * catalan(i);
                r.rhs = sum;
                if (n <= brute_max) r.roundtrip_ok = brute[static_cast<size_t>(k)] == r.lhs;
                finalize(r);
                reports.push_back(std::move(r));
            }
            return reports;
        });
    }
    return run_units(units, jobs);
}

std::vector<VerificationReport> verify_eq5(int n_max, int jobs) {
    constexpr int census_max = 10;
    std::vector<Unit> units;
    for (int n = 1; n <= n_max; ++n) {
        units.push_back([n] {
            // census[k][i]: noncrossing partitions with k blocks whose
            // reduction carries exactly i loops
            std::vector<std::vector<BigCount>> census;
            if (n <= census_max) {
                census.assign(static_cast<size_t>(n) + 1,
                              std::vector<BigCount>(static_cast<size_t>(n) + 1, 0));
                FamilyFilter nc;
                nc.noncrossing = true;
                for_each_partition(n, nc, [&](const SetPartition& p) {
                    int loops = reduce_noncrossing(p).loop_count();
                    ++census[static_cast<size_t>(p.block_count())][static_cast<size_t>(loops)];
                    return true;
                });
            }
            std::vector<VerificationReport> reports;
            for (int k = 1; k <= n; ++k) {
                VerificationReport r;
                r.identity = "eq5";
                r.n = n;
                r.k = k;
                r.lhs = narayana(n, k);
                BigCount sum = 0;
                for (int i = 0; i <= n - k; ++i) {
                    BigCount term = binomial(n - 1, i) * poor_noncrossing_closed(n - i - 1, k - 1);
                    sum += term;
                    if (n <= census_max &&
                        census[static_cast<size_t>(k)][static_cast<size_t>(i)] != term)
                        r.roundtrip_ok = false;
                }
                if (n <= census_max) {
                    for (int i = n - k + 1; i <= n; ++i)
                        if (census[static_cast<size_t>(k)][static_cast<size_t>(i)] != 0)
                            r.roundtrip_ok = false;
                }
                r.rhs = sum;
                finalize(r);
                reports.push_back(std::move(r));
            }
            return reports;
        });
    }
    return run_units(units, jobs);
}

std::vector<VerificationReport> verify_motzkin(int n_max, int jobs) {
    std::vector<Unit> units;
    for (int n = 1; n <= n_max; ++n) {
        units.push_back([n] {
            VerificationReport r;
            r.identity = "motzkin";
            r.n = n;
            std::set<std::string> paths;
            BigCount total = 0;
            FamilyFilter nc;
            nc.noncrossing = true;
            for_each_partition(n, nc, [&](const SetPartition& p) {
                ++total;
                TwoMotzkinPath path = partition_to_path(p);
                if (!validate_path(path) || path.size() != n - 1 ||
                    path.rise_or_level_count() != n - p.block_count() ||
                    path_to_partition(path) != p || !paths.insert(format_path(path)).second)
                    r.roundtrip_ok = false;
                return true;
            });
            r.lhs = total;
            r.rhs = catalan_recurrence(n);
            finalize(r);
            return std::vector<VerificationReport>{std::move(r)};
        });
    }
    return run_units(units, jobs);
}

std::map<int, BigCount> rna_table(int n) {
    if (n < 1) throw DomainError("RNA length must be >= 1");
    std::map<int, BigCount> table;
    for (int k = 0; 2 * k <= n; ++k) {
        FamilyFilter f;
        f.k = n - k;
        f.m = Regularity::finite(2);
        f.noncrossing = true;
        f.poor = true;
        table[k] = count_family(n, f);
    }
    return table;
}

} // namespace partred
