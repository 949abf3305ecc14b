// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "skein/verify.hpp"

using namespace skein::verify;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<std::vector<CheckJob>()> jobs;
    // Extra coverage condition over the reports; returns an explanation on failure.
    std::function<std::string(const std::vector<VerificationReport>&)> coverage;
};

int count(const std::vector<VerificationReport>& reports, const std::string& check, Status status) {
    int c = 0;
    for (const auto& r : reports) c += r.check == check && r.status == status;
    return c;
}

std::string expect_count(const std::vector<VerificationReport>& reports, const std::string& check, int wanted) {
    const int got = count(reports, check, Status::pass);
    return got == wanted ? "" : check + ": " + std::to_string(got) + " passing of " + std::to_string(wanted) + " required";
}

std::vector<CheckJob> concat(std::vector<std::vector<CheckJob>> parts) {
    std::vector<CheckJob> out;
    for (auto& p : parts)
        for (auto& j : p) out.push_back(std::move(j));
    return out;
}

} // namespace

int main() {
    constexpr std::uint64_t seed = 20240601;
    constexpr int trials = 100;
    const std::vector<Criterion> criteria = {
        {1, "[m] P_m = Pi_m for m = 1..8", 60, [] { return braidsum_jobs(8); },
         [](const auto& r) { return expect_count(r, "braidsum", 8); }},
        {2, "A(t) Abar(t) = 1 mod t^9", 10, [] { return mirror_jobs(8); },
         [](const auto& r) { return expect_count(r, "mirror_inverse", 1); }},
        {3, "A_{i,j-1} - A_{i-1,j} = z A_i Abar_j, i + j <= 8, with endpoints", 30, [] { return adiff_jobs(8); },
         [](const auto& r) {
             auto e = expect_count(r, "adiff", 28);
             return e.empty() ? expect_count(r, "adiff_endpoint", 8) : e;
         }},
        {4, "psi_n(P_m) - <P_m> Id = (s^m - s^-m) v^-m sum T(j)^m, n + m <= 7", 600, [] { return murphy_jobs(7); },
         [](const auto& r) { return expect_count(r, "murphy", 21); }},
        {5, "threaded closed braids equal threaded h-polynomials, n + m <= 6", 600, [] { return ah_jobs(6); },
         [](const auto& r) {
             auto e = expect_count(r, "ah", 21);
             return e.empty() ? expect_count(r, "ah_mixed", 21) : e;
         }},
        {6, "psi_n(P_m), psi_n(h_i), e_k(T) are central, n <= 5", 60, [] { return centrality_jobs(6); },
         [](const auto& r) {
             std::set<std::int64_t> ns;
             for (const auto& x : r) ns.insert(x.params.front().second);
             return ns.size() == 5 ? "" : std::string("expected n = 1..5");
         }},
        {7, "structural property suites, >= 100 seeded instances each", 120, [] { return property_jobs(seed, trials); },
         [](const auto& r) {
             const char* required[] = {"prop_braid_relations", "prop_associativity", "prop_trace_symmetry", "prop_markov_conjugation",
                                       "prop_markov_stabilization", "prop_threading_homomorphism", "prop_mirror", "prop_bar"};
             for (const char* name : required) {
                 if (count(r, name, Status::pass) != 1) return std::string(name) + " missing or failing";
             }
             for (const auto& x : r)
                 if (x.params.front().second < 100) return x.check + " ran fewer than 100 instances";
             return std::string();
         }},
        {8, "alpha_i (i <= 4), <P_m> (m <= 6), affine span of T^(n) (n <= 5)", 60,
         [] { return concat({alpha_jobs(4), pm_value_jobs(6), affine_jobs(5)}); },
         [](const auto& r) {
             auto e = expect_count(r, "alpha", 4);
             if (e.empty()) e = expect_count(r, "pm_value", 6);
             if (e.empty()) e = expect_count(r, "affine", 5);
             return e;
         }},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto reports = run_jobs(c.jobs());
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string why;
        for (const auto& r : reports)
            if (r.status == Status::fail) {
                why = r.check + " failed";
                for (const auto& [k, v] : r.params) why += " " + k + "=" + std::to_string(v);
                if (!r.note.empty()) why += " (" + r.note + ")";
                break;
            }
        if (why.empty()) why = c.coverage(reports);
        if (why.empty() && secs > c.budget_s) why = "over the time budget";
        const bool ok = why.empty();
        failures += !ok;
        std::printf("%s criterion %d: %s [%zu checks, %.2fs]%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), reports.size(), secs,
                    ok ? "" : " -- ", why.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
