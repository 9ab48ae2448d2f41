#include "pet/bounds.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace pet {

std::optional<Rational> lower_compk_a(GPParams params) {
    if (params.n % 2 == 0 || params.k % 2 == 0) return std::nullopt;
    auto opt = ip_enumerate(params);
    if (!opt || opt->trivial_attains_optimum) return std::nullopt;
    BigInt r = opt->best.r();
    return Rational(2) + Rational(4 * r, 4 * r * r + 2 * r + 1);
}

Rational lower_compk_b_value(GPParams params) {
    if (params.k % 2 != 0)
        throw std::domain_error("lower_compk_b_value: requires an even inner step");
    BigInt n = params.n, k = params.k;
    BigInt floor_term = (2 * n) / (2 * k + 2);
    return Rational(2 * n * (k + 1), k * n + floor_term);
}

std::optional<Rational> lower_compk_b(GPParams params) {
    if (params.k % 2 != 0) return std::nullopt;
    auto g_odd = odd_girth_formula(params);
    if (!g_odd || *g_odd != params.k + 3) return std::nullopt;
    return lower_compk_b_value(params);
}

Rational lower_ghebleh(GPParams params) {
    if (params.k % 2 != 0) throw std::domain_error("lower_ghebleh: requires an even inner step");
    return Rational(2) + Rational(2, params.k + 1);
}

bool proposition_condition(GPParams params) {
    if (params.k % 2 != 0)
        throw std::domain_error("proposition_condition: requires an even inner step");
    long long n = params.n, k = params.k;
    long long y = n % (k + 2);
    if (y == 0) return false;
    return Rational(y) <= Rational(k + 1) - Rational(n, k + 2);
}

std::optional<Rational> upper_even(GPParams params) {
    long long n = params.n, k = params.k;
    if (k % 2 != 0 || n % 2 != 1 || k < 4) return std::nullopt;
    if ((n - 2) % (k - 1) != 0 && (n + 2) % (k - 1) != 0) return std::nullopt;
    return Rational(BigInt(2 * n * (k - 1)), BigInt((n - 4) * (k - 2)));
}

std::optional<Rational> upper_odd(GPParams params) {
    long long n = params.n, k = params.k;
    if (n % 2 != 1 || k % 2 != 1 || n <= 2 * k + 1) return std::nullopt;
    return Rational(2 * n, n - k);
}

Rational chi_c_subdivision_formula(const Rational& chi, long long s) {
    if (s < 0) throw std::invalid_argument("chi_c_subdivision_formula: s must be >= 0");
    if (!(Rational(2) < chi))
        throw std::domain_error("chi_c_subdivision_formula: requires chi > 2");
    return (Rational(2 * s + 1) * chi) / (Rational(s) * chi + Rational(1));
}

Rational chi_c_complement_circular(int p, int q) {
    if (q < 2) throw std::domain_error("chi_c_complement_circular: q >= 2 (q = 1 is edgeless)");
    if (p < 2 * q) throw std::domain_error("chi_c_complement_circular: requires p/q >= 2");
    return Rational(p, p / q);
}

BoundReport bound_report(GPParams params) {
    if (params.n % 2 == 0 && params.k % 2 == 1)
        throw std::domain_error("bound_report: Pet" + params.str() + " is bipartite");
    BoundReport report;
    report.n = params.n;
    report.k = params.k;
    report.odd_girth = *odd_girth_formula(params);

    auto add = [&report](std::string name, bool is_lower, std::optional<Rational> value,
                         std::string reason) {
        report.entries.push_back(
            {std::move(name), is_lower, value, value.has_value(), std::move(reason)});
    };

    bool k_even = params.k % 2 == 0;
    bool both_odd = params.n % 2 == 1 && params.k % 2 == 1;

    auto compk_a = lower_compk_a(params);
    add("compk_a", true, compk_a,
        compk_a ? "n,k odd and no trivial optimum"
                : (both_odd ? "a trivial solution attains the optimum" : "needs n and k odd"));

    auto compk_b = lower_compk_b(params);
    add("compk_b", true, compk_b,
        compk_b ? "k even and odd girth = k+3"
                : (k_even ? "odd girth differs from k+3" : "needs k even"));

    add("ghebleh", true, k_even ? std::optional<Rational>(lower_ghebleh(params)) : std::nullopt,
        k_even ? "k even" : "needs k even");

    auto up_even = upper_even(params);
    add("upper_even", false, up_even,
        up_even ? "k even >= 4, n odd, n = +-2 (mod k-1)"
                : "needs k even >= 4, n odd, n = +-2 (mod k-1)");

    auto up_odd = upper_odd(params);
    add("upper_odd", false, up_odd, up_odd ? "n,k odd, n > 2k+1" : "needs n,k odd with n > 2k+1");

    add("three_chromatic", false, Rational(3), "non-bipartite generalized Petersen graphs");

    for (const auto& entry : report.entries) {
        if (!entry.value) continue;
        if (entry.is_lower) {
            if (!report.best_lower || *report.best_lower < *entry.value)
                report.best_lower = entry.value;
        } else {
            if (!report.best_upper || *entry.value < *report.best_upper)
                report.best_upper = entry.value;
        }
    }
    return report;
}

namespace {

nlohmann::json rational_json(const Rational& r) {
    return {{"num", r.num().str()}, {"den", r.den().str()}};
}

}  // namespace

std::string bound_report_json(const BoundReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["k"] = report.k;
    j["odd_girth"] = report.odd_girth;
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& entry : report.entries) {
        nlohmann::json e;
        e["name"] = entry.name;
        e["kind"] = entry.is_lower ? "lower" : "upper";
        e["value"] = entry.value ? rational_json(*entry.value) : nlohmann::json(nullptr);
        e["applicable"] = entry.applicable;
        e["reason"] = entry.reason;
        bounds.push_back(std::move(e));
    }
    j["bounds"] = std::move(bounds);
    j["best_lower"] = report.best_lower ? rational_json(*report.best_lower) : nlohmann::json(nullptr);
    j["best_upper"] = report.best_upper ? rational_json(*report.best_upper) : nlohmann::json(nullptr);
    j["c5_colorable"] = report.best_upper && !(Rational(5, 2) < *report.best_upper);
    return j.dump(2) + "\n";
}

std::string bound_report_table(const BoundReport& report, bool decimal) {
    std::ostringstream out;
    out << "Pet(" << report.n << "," << report.k << ")  odd girth " << report.odd_girth << "\n";
    for (const auto& entry : report.entries) {
        out << "  " << (entry.is_lower ? "lower" : "upper") << "  " << entry.name << ": ";
        if (entry.value) {
            // Lower bounds read best in mixed form (2+8/21); uppers as ratios.
            out << (entry.is_lower ? entry.value->mixed_str() : entry.value->str());
            if (decimal) out << " (" << entry.value->to_double() << ")";
        } else {
            out << "n/a";
        }
        out << "  [" << entry.reason << "]\n";
    }
    out << "best_lower: " << (report.best_lower ? report.best_lower->mixed_str() : "n/a");
    if (decimal && report.best_lower) out << " (" << report.best_lower->to_double() << ")";
    out << "\nbest_upper: " << (report.best_upper ? report.best_upper->str() : "n/a");
    if (decimal && report.best_upper) out << " (" << report.best_upper->to_double() << ")";
    out << "\nC5-colorable: "
        << (report.best_upper && !(Rational(5, 2) < *report.best_upper) ? "yes" : "unknown")
        << "\n";
    return out.str();
}

}  // namespace pet
