#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace skein::verify {

enum class Status { pass, fail, skipped };

std::string to_string(Status s);

/// Outcome of one identity check. On pass/fail, lhs and rhs hold the
/// canonical renderings of both sides.
struct Outcome {
    Status status = Status::fail;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct VerificationReport {
    std::string check;
    std::vector<std::pair<std::string, std::int64_t>> params;
    Status status = Status::fail;
    double elapsed_ms = 0;
    std::string lhs;
    std::string rhs;
    std::string note;
    std::string version;

    /// One JSON object, no trailing newline.
    std::string to_json_line(bool include_timing = true) const;
};

struct CheckJob {
    std::string check;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::function<Outcome()> run;
};

/// Run jobs on a bounded pool of `workers` threads. Reports come back in job
/// order regardless of scheduling; an exception inside a job is a failure.
std::vector<VerificationReport> run_jobs(const std::vector<CheckJob>& jobs, int workers = 1);

/// [m] P_m = Pi_m for m = 1..m_max, plus the logarithmic-derivative identity
/// z sum Pi_m t^(m-1) = d/dt ln A(t) and ln A(t) = sum (s^m - s^-m) P_m/m t^m.
std::vector<CheckJob> braidsum_jobs(int m_max);
/// psi_n(P_m) - <P_m> = (s^m - s^-m) v^-m sum_j T(j)^m for n + m <= bound,
/// via the h-polynomial P_m and via the m closed braids of Pi_m / [m].
/// Cases with n = 0 or m = 0 are reported as skipped.
std::vector<CheckJob> murphy_jobs(int bound);
/// A(t) Abar(t) = 1 mod t^(degree+1), and mirror(P_m) = P_m.
std::vector<CheckJob> mirror_jobs(int degree);
/// A_{i,j-1} - A_{i-1,j} = z A_{i-1,0} A_{0,j-1} = z A_i Abar_j for
/// i, j >= 1, i + j <= degree, and the recursion endpoints A_{m-1,0} = A_m.
std::vector<CheckJob> adiff_jobs(int degree);
/// psi_n(closure of sigma_{m-1}...sigma_1) = psi_n(A_m in h's), and the same
/// for every A_{i,j}, for n >= 0, m >= 1, n + m <= bound.
std::vector<CheckJob> ah_jobs(int bound);
/// psi_n(P_m), psi_n(h_m) and e_k(T(1..n)) commute with every sigma_i, for
/// 1 <= n <= min(5, bound - 1), n + m <= bound.
std::vector<CheckJob> centrality_jobs(int bound);
/// T^(n) = a sum_j T(j) + b Id, solved over the basis coefficients.
std::vector<CheckJob> affine_jobs(int n_max);
/// alpha_i = s^(i(i-1)/2) [i]!, with a_i^2 = alpha_i a_i by full squaring.
std::vector<CheckJob> alpha_jobs(int i_max);
/// <P_m> = (v^-m - v^m) / (s^m - s^-m), via h-values and via the Markov
/// trace of the m braids of Pi_m divided by [m].
std::vector<CheckJob> pm_value_jobs(int m_max);
/// Seeded random structural properties, `trials` instances each.
std::vector<CheckJob> property_jobs(std::uint64_t seed, int trials);

std::vector<VerificationReport> check_braidsum(int m_max);
std::vector<VerificationReport> check_murphy(int bound);
std::vector<VerificationReport> check_mirror_inverse(int degree);
std::vector<VerificationReport> check_adiff(int degree);
std::vector<VerificationReport> check_ah_crosscheck(int bound);
std::vector<VerificationReport> check_centrality(int bound);
VerificationReport affine_relation(int n);

/// Fixed-width table: check, params, status, time; one row per report.
std::string summary_table(const std::vector<VerificationReport>& reports);

} // namespace skein::verify
