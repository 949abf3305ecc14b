#include "skein/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <optional>
#include <cstdio>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "skein/closure.hpp"
#include "skein/power_sums.hpp"
#include "skein/threading.hpp"

#ifndef SKEIN_VERSION
#define SKEIN_VERSION "dev"
#endif

namespace skein::verify {

std::string to_string(Status s) {
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    }
    return "fail";
}

std::string VerificationReport::to_json_line(bool include_timing) const {
    nlohmann::ordered_json j;
    j["check"] = check;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    j["status"] = to_string(status);
    if (include_timing) j["elapsed_ms"] = elapsed_ms;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    if (!note.empty()) j["note"] = note;
    j["version"] = version;
    return j.dump();
}

std::vector<VerificationReport> run_jobs(const std::vector<CheckJob>& jobs, int workers) {
    std::vector<VerificationReport> reports(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            const auto& job = jobs[k];
            auto& rep = reports[k];
            rep.check = job.check;
            rep.params = job.params;
            rep.version = SKEIN_VERSION;
            const auto t0 = std::chrono::steady_clock::now();
            try {
                Outcome o = job.run();
                rep.status = o.status;
                rep.lhs = std::move(o.lhs);
                rep.rhs = std::move(o.rhs);
                rep.note = std::move(o.note);
            } catch (const std::exception& e) {
                rep.status = Status::fail;
                rep.note = std::string("exception: ") + e.what();
            }
            rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        }
    };
    const int n = std::clamp(workers, 1, static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
    std::vector<std::thread> pool;
    for (int k = 1; k < n; ++k) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return reports;
}

namespace {

template <class T>
Outcome compare(const T& lhs, const T& rhs, std::string note = {}) {
    return {lhs == rhs ? Status::pass : Status::fail, lhs.to_string(), rhs.to_string(), std::move(note)};
}

Outcome skipped(std::string why) { return {Status::skipped, "", "", std::move(why)}; }

Scalar v_pow(int e) { return Scalar::monomial(1, e, 0); }

// Murphy power-sum right-hand side (s^m - s^-m) v^-m sum_j T(j)^m.
HeckeElem murphy_rhs(int n, int m) {
    return murphy_power_sum(m, n) * (Scalar(LaurentPoly::s_diff(m)) * v_pow(-m));
}

// A_{m} as a braid word: sigma_{m-1} ... sigma_1.
BraidWord positive_cycle(int m) { return mixed_braid_word(m - 1, 0); }

} // namespace

std::vector<CheckJob> braidsum_jobs(int m_max) {
    std::vector<CheckJob> jobs;
    for (int m = 1; m <= m_max; ++m)
        jobs.push_back({"braidsum", {{"m", m}}, [m] {
                            const AnnulusElem lhs = power_sum(m) * qint(m);
                            return compare(lhs, pi_sum(m));
                        }});
    if (m_max >= 1) {
        jobs.push_back({"logderiv", {{"M", m_max}}, [m_max] {
                            const int deg = m_max;
                            const Series a = series_A(deg);
                            const Series log_a = a.log();
                            const auto p = power_sums(deg);
                            std::vector<AnnulusElem> expected(deg + 1);
                            for (int m = 1; m <= deg; ++m)
                                expected[m] = exact_div(p[m] * Scalar(LaurentPoly::s_diff(m)), Scalar(m));
                            if (!(log_a == Series(expected)))
                                return Outcome{Status::fail, log_a.to_string(), Series(expected).to_string(),
                                               "ln A(t) differs from sum (s^m - s^-m) P_m/m t^m"};
                            const Series d_log = log_a.derivative();
                            const Series via_mirror = a.derivative() * series_A_bar(deg);
                            std::vector<AnnulusElem> pis(deg);
                            for (int m = 1; m <= deg; ++m) pis[m - 1] = pi_sum(m) * Scalar::z();
                            const Series pi_series(pis);
                            Outcome o = compare(d_log, pi_series, "d/dt ln A(t) vs z sum Pi_m t^(m-1)");
                            if (o.status == Status::pass && !(via_mirror == pi_series)) {
                                o.status = Status::fail;
                                o.note = "A'(t) Abar(t) differs from z sum Pi_m t^(m-1)";
                            }
                            return o;
                        }});
    }
    return jobs;
}

std::vector<CheckJob> murphy_jobs(int bound) {
    std::vector<CheckJob> jobs;
    for (int n = 0; n <= bound; ++n)
        for (int m = 0; n + m <= bound; ++m) {
            if (n == 0 || m == 0) {
                if (n + m == 0) continue;
                jobs.push_back({"murphy", {{"n", n}, {"m", m}}, [n, m] {
                                    return skipped(n == 0 ? "n = 0: H_0 has no Murphy operators" : "m = 0: P_0 is not defined");
                                }});
                continue;
            }
            jobs.push_back({"murphy", {{"n", n}, {"m", m}}, [n, m] {
                                const AnnulusElem p = power_sum(m);
                                const Scalar pm_value = evaluate(p);
                                const HeckeElem id = HeckeElem::identity(n);
                                Threader threader(n);
                                const HeckeElem via_h = threader.element(p) - id * pm_value;
                                HeckeAccumulator braids(n);
                                for (int i = 0; i < m; ++i) braids.add(thread_braid(mixed_braid_word(i, m - 1 - i), n));
                                const HeckeElem via_braids = braids.finish() * (Scalar(1) / qint(m)) - id * pm_value;
                                const HeckeElem rhs = murphy_rhs(n, m);
                                Outcome o = compare(via_h, rhs);
                                if (!(via_braids == rhs)) {
                                    o.status = Status::fail;
                                    o.note = "braid route differs: " + via_braids.to_string();
                                }
                                return o;
                            }});
        }
    return jobs;
}

std::vector<CheckJob> mirror_jobs(int degree) {
    std::vector<CheckJob> jobs;
    jobs.push_back({"mirror_inverse", {{"M", degree}}, [degree] {
                        const Series prod = series_A(degree) * series_A_bar(degree);
                        return compare(prod, Series(degree));
                    }});
    for (int m = 1; m <= degree; ++m)
        jobs.push_back({"mirror_pm", {{"m", m}}, [m] {
                            const AnnulusElem p = power_sum(m);
                            return compare(mirror(p), p);
                        }});
    return jobs;
}

std::vector<CheckJob> adiff_jobs(int degree) {
    std::vector<CheckJob> jobs;
    for (int m = 1; m <= degree; ++m)
        jobs.push_back({"adiff_endpoint", {{"m", m}}, [m] {
                            // mixed_braids throws if the recursion endpoint misses A_m
                            const auto chain = mixed_braids(m);
                            return compare(chain.back(), braid_A(m));
                        }});
    for (int i = 1; i <= degree; ++i)
        for (int j = 1; i + j <= degree; ++j)
            jobs.push_back({"adiff", {{"i", i}, {"j", j}}, [i, j] {
                                const AnnulusElem lhs = a_ij(i, j - 1) - a_ij(i - 1, j);
                                const Scalar z = Scalar::z();
                                const AnnulusElem rhs = a_ij(i - 1, 0) * a_ij(0, j - 1) * z;
                                const AnnulusElem rhs_series = braid_A(i) * mirror(braid_A(j)) * z;
                                Outcome o = compare(lhs, rhs);
                                if (!(rhs == rhs_series)) {
                                    o.status = Status::fail;
                                    o.note = "A_{i-1,0} A_{0,j-1} differs from A_i Abar_j";
                                }
                                return o;
                            }});
    return jobs;
}

std::vector<CheckJob> ah_jobs(int bound) {
    std::vector<CheckJob> jobs;
    for (int n = 0; n < bound; ++n)
        for (int m = 1; n + m <= bound; ++m) {
            jobs.push_back({"ah", {{"n", n}, {"m", m}}, [n, m] {
                                const HeckeElem by_braid = thread_braid(positive_cycle(m), n);
                                const HeckeElem by_series = thread(braid_A(m), n);
                                return compare(by_braid, by_series);
                            }});
            jobs.push_back({"ah_mixed", {{"n", n}, {"m", m}}, [n, m] {
                                const auto chain = mixed_braids(m);
                                Threader threader(n);
                                for (int i = 0; i < m; ++i) {
                                    const HeckeElem by_braid = thread_braid(mixed_braid_word(i, m - 1 - i), n);
                                    const HeckeElem by_series = threader.element(chain[i]);
                                    if (!(by_braid == by_series))
                                        return Outcome{Status::fail, by_braid.to_string(), by_series.to_string(),
                                                       "A_{" + std::to_string(i) + "," + std::to_string(m - 1 - i) + "}"};
                                }
                                return Outcome{Status::pass, "all " + std::to_string(m) + " mixed braids agree",
                                               "all " + std::to_string(m) + " mixed braids agree", ""};
                            }});
        }
    return jobs;
}

namespace {

Outcome commutes_with_generators(const HeckeElem& x) {
    for (int i = 1; i < x.strands(); ++i) {
        const HeckeElem left = x.generator_mul(i);
        const HeckeElem right = x.mul_by_generator(i);
        if (!(left == right)) return {Status::fail, left.to_string(), right.to_string(), "sigma_" + std::to_string(i)};
    }
    return {Status::pass, "x sigma_i", "sigma_i x", "all generators"};
}

} // namespace

std::vector<CheckJob> centrality_jobs(int bound) {
    std::vector<CheckJob> jobs;
    const int n_max = std::min(5, bound - 1);
    for (int n = 1; n <= n_max; ++n) {
        for (int m = 1; n + m <= bound; ++m) {
            jobs.push_back({"central_pm", {{"n", n}, {"m", m}}, [n, m] { return commutes_with_generators(thread(power_sum(m), n)); }});
            jobs.push_back({"central_h", {{"n", n}, {"i", m}}, [n, m] { return commutes_with_generators(thread_h({m}, n)); }});
        }
        for (int k = 0; k <= n; ++k)
            jobs.push_back({"central_elementary", {{"n", n}, {"k", k}},
                            [n, k] { return commutes_with_generators(elementary_symmetric_murphy(k, n)); }});
    }
    return jobs;
}

VerificationReport affine_relation(int n) {
    const std::vector<CheckJob> jobs = affine_jobs(n);
    return run_jobs({jobs.back()}).front();
}

std::vector<CheckJob> affine_jobs(int n_max) {
    std::vector<CheckJob> jobs;
    for (int n = 1; n <= n_max; ++n)
        jobs.push_back({"affine", {{"n", n}}, [n] {
                            const HeckeElem t = thread_braid(BraidWord(1, {}), n);
                            const HeckeElem sum = murphy_power_sum(1, n);
                            const HeckeElem id = HeckeElem::identity(n);
                            const Permutation e = Permutation::identity(n);
                            Scalar a, b;
                            // Solve on a non-identity basis coefficient, then on the identity.
                            auto pivot = std::find_if(sum.terms().begin(), sum.terms().end(), [](const auto& term) { return term.rank != 0; });
                            if (pivot != sum.terms().end()) a = t.coefficient(sum.permutation(pivot->rank)) / pivot->coef;
                            b = t.coefficient(e) - a * sum.coefficient(e);
                            const HeckeElem fit = sum * a + id * b;
                            Outcome o = compare(t, fit, "a = " + a.to_string() + "; b = " + b.to_string());
                            if (pivot == sum.terms().end()) o.note += " (sum T(j) is a multiple of Id; a set to 0)";
                            if (o.status == Status::fail) o.note = "no affine solution; " + o.note;
                            return o;
                        }});
    return jobs;
}

std::vector<CheckJob> alpha_jobs(int i_max) {
    std::vector<CheckJob> jobs;
    for (int i = 1; i <= i_max; ++i)
        jobs.push_back({"alpha", {{"i", i}}, [i] {
                            const HeckeElem a = symmetrizer(i);
                            const Scalar computed = alpha(i);
                            const Scalar expected = Scalar::monomial(1, 0, i * (i - 1) / 2) * qfactorial(i);
                            Outcome o = compare(computed, expected);
                            if (!(a * a == a * computed)) {
                                o.status = Status::fail;
                                o.note = "a_i^2 != alpha_i a_i by full squaring";
                            }
                            return o;
                        }});
    return jobs;
}

std::vector<CheckJob> pm_value_jobs(int m_max) {
    std::vector<CheckJob> jobs;
    for (int m = 1; m <= m_max; ++m)
        jobs.push_back({"pm_value", {{"m", m}}, [m] {
                            const Scalar expected = Scalar(LaurentPoly::monomial(1, -m, 0) - LaurentPoly::monomial(1, m, 0),
                                                           LaurentPoly::s_diff(m));
                            const Scalar via_h = evaluate(power_sum(m));
                            Scalar via_braids;
                            for (int i = 0; i < m; ++i) via_braids += markov_trace(eval_word(mixed_braid_word(i, m - 1 - i)));
                            via_braids /= qint(m);
                            Outcome o = compare(via_h, expected);
                            if (!(via_braids == expected)) {
                                o.status = Status::fail;
                                o.note = "trace of the Pi_m braids / [m] = " + via_braids.to_string();
                            }
                            return o;
                        }});
    return jobs;
}

// ---------------------------------------------------------------------------
// Seeded structural properties.

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

LaurentPoly random_poly(Rng& rng) {
    std::vector<LaurentPoly::Term> t;
    const int k = uniform(rng, 1, 3);
    for (int i = 0; i < k; ++i) {
        int c = uniform(rng, -3, 3);
        if (c == 0) c = 1;
        t.push_back({uniform(rng, -2, 2), uniform(rng, -2, 2), c});
    }
    auto p = LaurentPoly::from_terms(std::move(t));
    return p.is_zero() ? LaurentPoly(1) : p;
}

Scalar random_scalar(Rng& rng) {
    const LaurentPoly num = random_poly(rng);
    switch (uniform(rng, 0, 4)) {
    case 0: return Scalar(num, LaurentPoly::z());
    case 1: return Scalar(num, LaurentPoly::s_diff(2));
    case 2: return Scalar(num, LaurentPoly(3));
    default: return Scalar(num);
    }
}

HeckeElem random_hecke(Rng& rng, int n) {
    const auto& g = SymmetricGroup::get(n);
    HeckeAccumulator acc(n);
    const int k = uniform(rng, 1, 3);
    for (int i = 0; i < k; ++i) acc.add(static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(g.order()) - 1)), Scalar(random_poly(rng)));
    HeckeElem x = acc.finish();
    return x.is_zero() ? HeckeElem::identity(n) : x;
}

BraidWord random_word(Rng& rng, int n, int max_len) {
    std::vector<int> w;
    if (n >= 2) {
        const int len = uniform(rng, 0, max_len);
        for (int k = 0; k < len; ++k) {
            const int i = uniform(rng, 1, n - 1);
            w.push_back(uniform(rng, 0, 1) ? i : -i);
        }
    }
    return BraidWord(n, std::move(w));
}

Monomial random_monomial(Rng& rng, int max_degree) {
    Monomial m;
    int left = uniform(rng, 1, max_degree);
    while (left > 0) {
        const int i = uniform(rng, 1, left);
        m.push_back(i);
        left -= i;
    }
    std::sort(m.begin(), m.end(), std::greater<>());
    return m;
}

AnnulusElem random_annulus(Rng& rng) {
    AnnulusElem x;
    const int k = uniform(rng, 1, 3);
    for (int i = 0; i < k; ++i) x += AnnulusElem(random_monomial(rng, 3), random_scalar(rng));
    return x;
}

// Pattern in H_deg whose closure is the h-monomial m.
HeckeElem monomial_pattern(const Monomial& m) {
    HeckeElem p = HeckeElem::identity(0);
    Scalar norm(1);
    for (int i : m) {
        p = tensor(p, symmetrizer(i));
        norm *= alpha(i);
    }
    return p * (Scalar(1) / norm);
}

// Runs `trial` `trials` times; the first failing instance becomes the witness.
CheckJob property(std::string name, std::uint64_t seed, int trials, std::function<std::optional<Outcome>(Rng&)> trial) {
    const std::uint64_t mixed = seed ^ std::hash<std::string>{}(name);
    return {std::move(name), {{"trials", trials}, {"seed", static_cast<std::int64_t>(seed)}}, [mixed, trials, trial] {
                Rng rng(mixed);
                for (int k = 0; k < trials; ++k) {
                    if (auto failure = trial(rng)) {
                        failure->status = Status::fail;
                        failure->note = "instance " + std::to_string(k) + (failure->note.empty() ? "" : ": " + failure->note);
                        return *failure;
                    }
                }
                return Outcome{Status::pass, std::to_string(trials) + " instances", std::to_string(trials) + " instances", ""};
            }};
}

template <class T>
std::optional<Outcome> differ(const T& a, const T& b, std::string what) {
    if (a == b) return std::nullopt;
    return Outcome{Status::fail, a.to_string(), b.to_string(), std::move(what)};
}

} // namespace

std::vector<CheckJob> property_jobs(std::uint64_t seed, int trials) {
    std::vector<CheckJob> jobs;

    jobs.push_back(property("prop_scalar_ring", seed, trials, [](Rng& rng) -> std::optional<Outcome> {
        const Scalar x = random_scalar(rng), y = random_scalar(rng), w = random_scalar(rng);
        if (auto f = differ((x * y) * w, x * (y * w), "associativity")) return f;
        if (auto f = differ(x * (y + w), x * y + x * w, "distributivity")) return f;
        if (auto f = differ(x * y, y * x, "commutativity")) return f;
        if (auto f = differ((x + y) - y, x, "additive inverse")) return f;
        return differ((x / y) * y, x, "division");
    }));

    jobs.push_back(property("prop_bar", seed, trials, [](Rng& rng) -> std::optional<Outcome> {
        const Scalar x = random_scalar(rng), y = random_scalar(rng);
        if (auto f = differ(x.bar().bar(), x, "involution")) return f;
        if (auto f = differ((x * y).bar(), x.bar() * y.bar(), "multiplicative")) return f;
        return differ((x + y).bar(), x.bar() + y.bar(), "additive");
    }));

    jobs.push_back(property("prop_braid_relations", seed, trials, [](Rng& rng) -> std::optional<Outcome> {
        const int n = uniform(rng, 3, 5);
        const BraidWord w = random_word(rng, n, 4);
        const int i = uniform(rng, 1, n - 2);
        const HeckeElem x = eval_word(w);
        if (auto f = differ(x.mul_word({i, i + 1, i}), x.mul_word({i + 1, i, i + 1}), "braid relation")) return f;
        const int a = uniform(rng, 1, n - 1), b = uniform(rng, 1, n - 1);
        if (std::abs(a - b) >= 2)
            if (auto f = differ(x.mul_word({a, b}), x.mul_word({b, a}), "far commutation")) return f;
        return differ(x.mul_word({i, -i}), x, "inverse");
    }));

    jobs.push_back(property("prop_associativity", seed, trials, [](Rng& rng) -> std::optional<Outcome> {
        const int n = uniform(rng, 1, 5);
        const HeckeElem x = random_hecke(rng, n), y = random_hecke(rng, n), w = random_hecke(rng, n);
        return differ((x * y) * w, x * (y * w), "associativity");
    }));

    jobs.push_back(property("prop_reduced_words", seed, trials, [](Rng& rng) -> std::optional<Outcome> {
        const int n = uniform(rng, 1, 6);
        const auto& g = SymmetricGroup::get(n);
        const Permutation pi = g.element(static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(g.order()) - 1)));
        // A reduced word built from random (not smallest) right descents.
        std::vector<int> word;
        Permutation p = pi;
        while (!p.is_identity()) {
            std::vector<int> descents;
            for (int i = 1; i < n; ++i)
                if (p[i] > p[i + 1]) descents.push_back(i);
            const int d = descents[uniform(rng, 0, static_cast<int>(descents.size()) - 1)];
            word.insert(word.begin(), d);
            p = p.times_generator(d);
        }
        const HeckeElem basis = HeckeElem::basis(pi);
        if (auto f = differ(eval_word(BraidWord(n, pi.reduced_word())), basis, "canonical reduced word")) return f;
        return differ(eval_word(BraidWord(n, word)), basis, "random reduced word");
    }));

    jobs.push_back(property("prop_length_bound", seed, trials, [](Rng& rng) -> std::optional<Outcome> {
        const int n = uniform(rng, 2, 5);
        const auto& g = SymmetricGroup::get(n);
        const auto r1 = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(g.order()) - 1));
        const auto r2 = static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(g.order()) - 1));
        const HeckeElem prod = HeckeElem::basis(g.element(r1)) * HeckeElem::basis(g.element(r2));
        for (const auto& t : prod.terms())
            if (g.length(t.rank) > g.length(r1) + g.length(r2))
                return Outcome{Status::fail, prod.to_string(), "", "support exceeds length bound"};
        return std::nullopt;
    }));

    jobs.push_back(property("prop_trace_symmetry", seed, trials, [](Rng& rng) -> std::optional<Outcome> {
        const int n = uniform(rng, 1, 5);
        const HeckeElem x = random_hecke(rng, n), y = random_hecke(rng, n);
        return differ(markov_trace(x * y), markov_trace(y * x), "tr(xy) = tr(yx)");
    }));

    jobs.push_back(property("prop_markov_conjugation", seed, trials, [](Rng& rng) -> std::optional<Outcome> {
        const int n = uniform(rng, 2, 5);
        const BraidWord w = random_word(rng, n, 5);
        const BraidWord a = random_word(rng, n, 3);
        return differ(markov_trace(eval_word(a * w * a.inverse())), markov_trace(eval_word(w)), "conjugation");
    }));

    jobs.push_back(property("prop_markov_stabilization", seed, trials, [](Rng& rng) -> std::optional<Outcome> {
        const int n = uniform(rng, 1, 5);
        const BraidWord w = random_word(rng, n, 5);
        const int sign = uniform(rng, 0, 1) ? 1 : -1;
        const BraidWord embedded(n + 1, w.letters);
        const BraidWord stabilized = embedded * BraidWord(n + 1, {sign * n});
        return differ(markov_trace(eval_word(stabilized)), markov_trace(eval_word(w)) * v_pow(-sign), "stabilization factor v^-sign");
    }));

    jobs.push_back(property("prop_closure_rules", seed, trials, [](Rng& rng) -> std::optional<Outcome> {
        const int n = uniform(rng, 1, 4);
        const HeckeElem x = random_hecke(rng, n), y = random_hecke(rng, n);
        const HeckeElem one = HeckeElem::identity(1);
        const HeckeElem big = (tensor(x, one).mul_by_generator(n)) * tensor(y, one);
        if (auto f = differ(partial_close(big), (x * y) * Scalar::v_inv(), "x sigma_n y -> v^-1 x y")) return f;
        return differ(partial_close(tensor(x, one)), x * delta(), "x (x) 1 -> delta x");
    }));

    jobs.push_back(property("prop_threading_homomorphism", seed, trials, [](Rng& rng) -> std::optional<Outcome> {
        const int n = uniform(rng, 0, 3);
        const int room = 6 - n;
        const Monomial x = random_monomial(rng, std::max(1, room / 2));
        const Monomial y = random_monomial(rng, std::max(1, room - degree(x)));
        if (n + degree(x) + degree(y) > 6) return std::nullopt;
        // Closure of the juxtaposed pattern versus the product of the two images.
        const HeckeElem together = thread_element(tensor(monomial_pattern(x), monomial_pattern(y)), n);
        const HeckeElem product = thread_element(monomial_pattern(x), n) * thread_element(monomial_pattern(y), n);
        if (auto f = differ(together, product, "psi(XY) = psi(X) psi(Y)")) return f;
        return differ(thread_h(monomial_product(x, y), n), product, "thread_h");
    }));

    jobs.push_back(property("prop_threading_order", seed, trials, [](Rng& rng) -> std::optional<Outcome> {
        const int n = uniform(rng, 1, 3);
        const int m = uniform(rng, 1, 3);
        const BraidWord beta = random_word(rng, m, 4);
        HeckeElem other = eval_word(threading_braid(n, m)) * tensor(HeckeElem::identity(n), eval_word(beta));
        for (int k = 0; k < m; ++k) other = partial_close(other);
        return differ(thread_braid(beta, n), other, "gamma before beta");
    }));

    jobs.push_back(property("prop_threading_conjugation", seed, trials, [](Rng& rng) -> std::optional<Outcome> {
        const int n = uniform(rng, 1, 3);
        const int m = uniform(rng, 1, 3);
        const BraidWord beta = random_word(rng, m, 4);
        const BraidWord a = random_word(rng, m, 2);
        // Only conjugation: a stabilization changes the winding number around the annulus.
        return differ(thread_braid(a * beta * a.inverse(), n), thread_braid(beta, n), "conjugation");
    }));

    jobs.push_back(property("prop_mirror", seed, trials, [](Rng& rng) -> std::optional<Outcome> {
        const AnnulusElem x = random_annulus(rng), y = random_annulus(rng);
        if (auto f = differ(mirror(mirror(x)), x, "involution")) return f;
        return differ(mirror(x * y), mirror(x) * mirror(y), "multiplicative");
    }));

    return jobs;
}

std::vector<VerificationReport> check_braidsum(int m_max) { return run_jobs(braidsum_jobs(m_max)); }
std::vector<VerificationReport> check_murphy(int bound) { return run_jobs(murphy_jobs(bound)); }
std::vector<VerificationReport> check_mirror_inverse(int degree) { return run_jobs(mirror_jobs(degree)); }
std::vector<VerificationReport> check_adiff(int degree) { return run_jobs(adiff_jobs(degree)); }
std::vector<VerificationReport> check_ah_crosscheck(int bound) { return run_jobs(ah_jobs(bound)); }
std::vector<VerificationReport> check_centrality(int bound) { return run_jobs(centrality_jobs(bound)); }

std::string summary_table(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%-28s %-22s %-8s %10s\n", "check", "params", "status", "ms");
    os << line;
    int pass = 0, fail = 0, skip = 0;
    for (const auto& r : reports) {
        std::string params;
        for (const auto& [k, v] : r.params) params += (params.empty() ? "" : " ") + k + "=" + std::to_string(v);
        std::snprintf(line, sizeof line, "%-28s %-22s %-8s %10.1f\n", r.check.c_str(), params.c_str(), to_string(r.status).c_str(),
                      r.elapsed_ms);
        os << line;
        pass += r.status == Status::pass;
        fail += r.status == Status::fail;
        skip += r.status == Status::skipped;
    }
    os << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
    return os.str();
}

} // namespace skein::verify
