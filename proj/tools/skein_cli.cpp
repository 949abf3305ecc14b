#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "skein/closure.hpp"
#include "skein/power_sums.hpp"
#include "skein/threading.hpp"
#include "skein/verify.hpp"

namespace {

using namespace skein;
namespace sv = skein::verify;

struct Options {
    std::string report;
    int jobs = 1;
    std::uint64_t seed = 20240601;
    bool no_timing = false;
    int trials = 100;
};

BraidWord parse_braid(const std::string& text, int strands) {
    std::vector<int> letters;
    std::stringstream ss(text);
    std::string item;
    int widest = 1;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        const int l = std::stoi(item, &used);
        letters.push_back(l);
        widest = std::max(widest, std::abs(l) + 1);
    }
    return BraidWord(strands > 0 ? strands : widest, std::move(letters));
}

int finish(const std::vector<sv::VerificationReport>& reports, const Options& opt) {
    std::cout << sv::summary_table(reports);
    if (!opt.report.empty()) {
        std::ofstream out(opt.report);
        if (!out) {
            std::cerr << "cannot open report file " << opt.report << "\n";
            return 2;
        }
        for (const auto& r : reports) out << r.to_json_line(!opt.no_timing) << "\n";
    }
    for (const auto& r : reports) {
        if (r.status != sv::Status::fail) continue;
        std::cerr << "FAILED " << r.check;
        for (const auto& [k, v] : r.params) std::cerr << " " << k << "=" << v;
        std::cerr << "\n  lhs: " << r.lhs << "\n  rhs: " << r.rhs;
        if (!r.note.empty()) std::cerr << "\n  note: " << r.note;
        std::cerr << "\n";
    }
    for (const auto& r : reports)
        if (r.status == sv::Status::fail) return 1;
    return 0;
}

void append(std::vector<sv::CheckJob>& all, std::vector<sv::CheckJob> more) {
    for (auto& j : more) all.push_back(std::move(j));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hecke algebra and annulus skein computations"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--report", opt.report, "Write one JSON record per check to this file");
    app.add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", opt.seed, "Seed for randomized property checks");
    app.add_flag("--no-timing", opt.no_timing, "Omit elapsed_ms from report records");
    app.set_version_flag("--version", SKEIN_VERSION);

    auto* verify = app.add_subcommand("verify", "Run identity checks");
    verify->require_subcommand(1);
    verify->fallthrough();
    std::vector<sv::CheckJob> jobs;

    int m_max = 8, murphy_bound = 7, degree = 8, ah_bound = 6, central_bound = 6, affine_n = 5, alpha_i = 4, pm_m = 6;
    auto* braidsum = verify->add_subcommand("braidsum", "[m] P_m equals the sum of the m closed braids");
    braidsum->add_option("--m-max", m_max)->check(CLI::Range(1, 30));
    braidsum->callback([&] { append(jobs, sv::braidsum_jobs(m_max)); });

    auto* murphy = verify->add_subcommand("murphy", "Threaded P_m against Murphy operator power sums");
    murphy->add_option("--bound", murphy_bound, "Largest n + m")->check(CLI::Range(1, kMaxStrands));
    murphy->callback([&] { append(jobs, sv::murphy_jobs(murphy_bound)); });

    auto* mirror_cmd = verify->add_subcommand("mirror", "A(t) times its mirror is 1; P_m is mirror-invariant");
    mirror_cmd->add_option("--degree", degree)->check(CLI::Range(1, 30));
    mirror_cmd->callback([&] { append(jobs, sv::mirror_jobs(degree)); });

    int adiff_degree = 8;
    auto* adiff = verify->add_subcommand("adiff", "Differences of the mixed closed braids");
    adiff->add_option("--degree", adiff_degree)->check(CLI::Range(1, 30));
    adiff->callback([&] { append(jobs, sv::adiff_jobs(adiff_degree)); });

    auto* ah = verify->add_subcommand("ah", "Threaded braids against threaded h-polynomials");
    ah->add_option("--bound", ah_bound, "Largest n + m")->check(CLI::Range(1, kMaxStrands));
    ah->callback([&] { append(jobs, sv::ah_jobs(ah_bound)); });

    auto* central = verify->add_subcommand("centrality", "Threaded elements and e_k(T) commute with every generator");
    central->add_option("--bound", central_bound, "Largest n + m")->check(CLI::Range(2, kMaxStrands));
    central->callback([&] { append(jobs, sv::centrality_jobs(central_bound)); });

    auto* derived = verify->add_subcommand("derived", "alpha_i, <P_m> and the affine relation for T^(n)");
    derived->add_option("--alpha", alpha_i)->check(CLI::Range(1, 7));
    derived->add_option("--pm", pm_m)->check(CLI::Range(1, 8));
    derived->add_option("--affine", affine_n)->check(CLI::Range(1, 8));
    derived->callback([&] {
        append(jobs, sv::alpha_jobs(alpha_i));
        append(jobs, sv::pm_value_jobs(pm_m));
        append(jobs, sv::affine_jobs(affine_n));
    });

    auto* props = verify->add_subcommand("properties", "Seeded random structural properties");
    props->add_option("--trials", opt.trials)->check(CLI::PositiveNumber);
    props->callback([&] { append(jobs, sv::property_jobs(opt.seed, opt.trials)); });

    auto* all = verify->add_subcommand("all", "Every check at default scale");
    all->callback([&] {
        append(jobs, sv::braidsum_jobs(8));
        append(jobs, sv::mirror_jobs(8));
        append(jobs, sv::adiff_jobs(8));
        append(jobs, sv::murphy_jobs(7));
        append(jobs, sv::ah_jobs(6));
        append(jobs, sv::centrality_jobs(6));
        append(jobs, sv::alpha_jobs(4));
        append(jobs, sv::pm_value_jobs(6));
        append(jobs, sv::affine_jobs(5));
        append(jobs, sv::property_jobs(opt.seed, opt.trials));
    });

    auto* compute = app.add_subcommand("compute", "Print a single computed value");
    compute->require_subcommand(1);
    compute->fallthrough();
    int pm_index = 1;
    auto* pm = compute->add_subcommand("pm", "P_m in h-coordinates");
    pm->add_option("--m", pm_index)->required()->check(CLI::Range(1, 30));

    std::string braid_text;
    int thread_n = 1, pattern_strands = 0;
    auto* thread_cmd = compute->add_subcommand("thread", "psi_n of a closed braid, in the positive permutation braid basis of H_n");
    thread_cmd->add_option("--braid", braid_text, "Comma-separated signed generator indices")->required();
    thread_cmd->add_option("--n", thread_n)->required()->check(CLI::Range(0, kMaxStrands));
    thread_cmd->add_option("--strands", pattern_strands, "Strands of the braid (default: widest letter + 1)");

    int trace_strands = 0;
    auto* trace = compute->add_subcommand("trace", "Framed Homfly invariant of a braid closure");
    trace->add_option("--braid", braid_text, "Comma-separated signed generator indices")->required();
    trace->add_option("--strands", trace_strands)->required()->check(CLI::Range(1, kMaxStrands));

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return finish(sv::run_jobs(jobs, opt.jobs), opt);
        if (pm->parsed()) {
            std::cout << power_sum(pm_index).to_string() << "\n";
        } else if (thread_cmd->parsed()) {
            const BraidWord beta = parse_braid(braid_text, pattern_strands);
            if (thread_n + beta.n > kMaxStrands) throw std::invalid_argument("n + braid strands exceeds " + std::to_string(kMaxStrands));
            std::cout << thread_braid(beta, thread_n).to_string() << "\n";
        } else if (trace->parsed()) {
            const BraidWord beta = parse_braid(braid_text, trace_strands);
            const Scalar framed = markov_trace(eval_word(beta));
            int writhe = 0;
            for (int l : beta.letters) writhe += l > 0 ? 1 : -1;
            std::cout << "framed: " << framed.to_string() << "\n";
            std::cout << "writhe: " << writhe << "\n";
            std::cout << "writhe-normalized: " << (framed * Scalar::monomial(1, writhe, 0)).to_string() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
