#include "pet/odd_girth.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pet {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

bool is_bipartite_params(GPParams params) { return params.n % 2 == 0 && params.k % 2 == 1; }

}  // namespace

std::optional<IpOptimum> ip_enumerate(GPParams params) {
    long long n = params.n, k = params.k;
    // Scan objectives s = u + |v| in increasing odd order; Lemma 2.2(c)
    // caps the optimum at n, so s <= n suffices for completeness.
    for (long long s = 1; s <= n; s += 2) {
        std::vector<IpSolution> optima;
        for (long long u = 0; u <= s; ++u) {
            long long w = s - u;
            for (int sign = 0; sign < 2; ++sign) {
                if (sign == 1 && w == 0) break;  // v = 0 only once
                long long v = sign == 0 ? w : -w;
                long long lhs = u + k * v;
                if (lhs % n != 0) continue;
                optima.push_back(IpSolution{u, v, lhs / n});
            }
        }
        if (optima.empty()) continue;
        // Ties: smaller u, then smaller |v|, then smaller |t| preferring
        // the positive orientation.
        std::sort(optima.begin(), optima.end(), [](const IpSolution& a, const IpSolution& b) {
            long long av = a.v < 0 ? -a.v : a.v;
            long long bv = b.v < 0 ? -b.v : b.v;
            long long at = a.t < 0 ? -a.t : a.t;
            long long bt = b.t < 0 ? -b.t : b.t;
            if (a.u != b.u) return a.u < b.u;
            if (av != bv) return av < bv;
            if (at != bt) return at < bt;
            return a.t > b.t;
        });
        bool any_trivial = std::any_of(optima.begin(), optima.end(),
                                       [](const IpSolution& s_) { return s_.trivial(); });
        return IpOptimum{optima.front(), std::move(optima), any_trivial};
    }
    return std::nullopt;
}

IpCandidate unique_solution_for_t(GPParams params, long long t) {
    if (t == 0) throw std::invalid_argument("unique_solution_for_t: t must be nonzero");
    long long n = params.n, k = params.k;
    if (t > 0) {
        long long q = floor_div(t * n, k);
        return IpCandidate{t * n - k * q, q, t};
    }
    long long q = ceil_div(-t * n, k);
    return IpCandidate{k * q + t * n, -q, t};
}

std::vector<long long> ind_set(GPParams params) {
    if (is_bipartite_params(params))
        throw std::domain_error("ind_set: Pet" + params.str() + " is bipartite");
    long long n = params.n, k = params.k;
    long long g = std::gcd(n, k);
    long long sq = ((k - 1) * (k - 1)) / n;  // floor((k-1)^2 / n)
    std::vector<long long> out;
    if (k % 2 == 1) {  // n odd too, else bipartite
        long long hi = std::min(2 * k / g, sq + 1);
        for (long long t = 1; t <= hi; t += 2) out.push_back(t);
    } else if ((n / g) % 2 == 1) {
        long long hi = std::min(2 * k / g, sq);
        for (long long t = 1; t <= hi; ++t) out.push_back(t);
    } else {
        long long hi = std::min(k / g, sq);
        for (long long t = 1; t <= hi; ++t) out.push_back(t);
    }
    return out;
}

std::vector<long long> candidate_g_set(GPParams params) {
    long long n = params.n, k = params.k;
    std::vector<long long> out;
    for (long long t : ind_set(params)) {
        long long fl = floor_div(t * n, k);
        long long cl = ceil_div(t * n, k);
        out.push_back(t * n + (1 - k) * fl + 2);
        out.push_back((1 + k) * cl - t * n + 2);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<int> odd_girth_formula_traced(GPParams params, FormulaTrace& trace) {
    trace = FormulaTrace{};
    trace.par_k = params.k % 2;
    if (is_bipartite_params(params)) return std::nullopt;
    long long n = params.n, k = params.k;
    long long g = std::gcd(n, k);
    trace.ind = ind_set(params);
    trace.g_set = candidate_g_set(params);
    trace.trivial_candidates = {n / g, k + 3};
    long long best = -1;
    auto consider = [&](long long c) {
        if (c % 2 != 1) return;
        if (best < 0 || c < best) best = c;
    };
    for (long long c : trace.trivial_candidates) consider(c);
    for (long long c : trace.g_set) consider(c);
    if (best < 0) return std::nullopt;  // cannot happen for non-bipartite input
    trace.chosen = best;
    return static_cast<int>(best);
}

std::optional<int> odd_girth_formula(GPParams params) {
    FormulaTrace trace;
    return odd_girth_formula_traced(params, trace);
}

std::optional<int> odd_girth_from_ip(GPParams params) {
    auto opt = ip_enumerate(params);
    if (!opt) return std::nullopt;
    long long obj = opt->best.objective();
    return static_cast<int>(opt->trivial_attains_optimum ? obj : obj + 2);
}

OddGirthBounds girth_bounds(GPParams params) {
    if (is_bipartite_params(params))
        throw std::domain_error("girth_bounds: Pet" + params.str() + " is bipartite");
    long long n = params.n, k = params.k;
    Rational lower = rat_max(Rational(n, k),
                             Rational(std::min(std::gcd(n, k - 1), std::gcd(n, k + 1)) + 2));
    Rational upper = k % 2 == 1 ? Rational(n, k) + Rational(k + 1) : Rational(k + 1);
    auto g_odd = odd_girth_formula(params);
    bool exempt = g_odd && *g_odd == params.k + 3;
    return OddGirthBounds{lower, upper, exempt};
}

namespace {

ScanRow scan_pair(GPParams params) {
    ScanRow row;
    row.n = params.n;
    row.k = params.k;
    row.formula = odd_girth_formula_traced(params, row.trace);
    row.ip = odd_girth_from_ip(params);
    row.bfs = odd_girth_bfs(build_petersen(params));
    row.match = row.formula == row.ip && row.ip == row.bfs;
    row.bounds_ok = true;
    if (row.bfs && *row.bfs != params.k + 3) {
        auto bounds = girth_bounds(params);
        Rational g(*row.bfs);
        row.bounds_ok = bounds.lower <= g && g <= bounds.upper;
    }
    return row;
}

}  // namespace

ScanReport cross_validate(int n_max, int threads) {
    std::vector<GPParams> grid;
    for (int n = 4; n <= n_max; ++n)
        for (int k = 2; 2 * k <= n; ++k) grid.emplace_back(n, k);

    ScanReport report;
    report.rows.resize(grid.size());
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min<int>(threads, 16));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) break;
            report.rows[i] = scan_pair(grid[i]);
        }
    };
    if (threads == 1 || grid.size() < 32) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& row : report.rows)
        if (!row.match || !row.bounds_ok) ++report.mismatches;
    return report;
}

namespace {

std::string cell(const std::optional<int>& value) {
    return value ? std::to_string(*value) : "-";
}

}  // namespace

std::string scan_tsv(const ScanReport& report) {
    std::ostringstream out;
    out << "n\tk\tformula\tip\tbfs\tmatch\n";
    for (const auto& row : report.rows)
        out << row.n << '\t' << row.k << '\t' << cell(row.formula) << '\t' << cell(row.ip)
            << '\t' << cell(row.bfs) << '\t' << (row.match && row.bounds_ok ? "yes" : "NO")
            << '\n';
    return out.str();
}

std::string scan_json(const ScanReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json j;
        j["n"] = row.n;
        j["k"] = row.k;
        auto put = [&j](const char* key, const std::optional<int>& value) {
            if (value)
                j[key] = *value;
            else
                j[key] = nullptr;
        };
        put("formula", row.formula);
        put("ip", row.ip);
        put("bfs", row.bfs);
        j["match"] = row.match && row.bounds_ok;
        if (row.formula) {
            j["trace"] = {{"ind_set", row.trace.ind},
                          {"g_set", row.trace.g_set},
                          {"trivial_candidates", row.trace.trivial_candidates},
                          {"chosen", row.trace.chosen},
                          {"par_k", row.trace.par_k}};
        } else {
            j["trace"] = nullptr;
        }
        rows.push_back(std::move(j));
    }
    nlohmann::json doc;
    doc["rows"] = std::move(rows);
    doc["mismatches"] = report.mismatches;
    return doc.dump(2) + "\n";
}

}  // namespace pet
