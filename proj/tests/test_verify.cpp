#include "doctest.h"

#include <stdexcept>

#include "json.hpp"

#include "skein/verify.hpp"

using namespace skein::verify;

TEST_CASE("jobs report in submission order") {
    std::vector<CheckJob> jobs;
    for (int k = 0; k < 12; ++k)
        jobs.push_back({"dummy", {{"k", k}}, [k] {
                            return Outcome{k == 5 ? Status::fail : Status::pass, std::to_string(k), std::to_string(k), ""};
                        }});
    jobs.push_back({"throws", {}, []() -> Outcome { throw std::runtime_error("boom"); }});
    const auto reports = run_jobs(jobs, 3);
    REQUIRE(reports.size() == 13);
    for (int k = 0; k < 12; ++k) {
        CHECK(reports[k].params.at(0).second == k);
        CHECK(reports[k].lhs == std::to_string(k));
    }
    CHECK(reports[5].status == Status::fail);
    CHECK(reports[12].status == Status::fail);
    CHECK(reports[12].note.find("boom") != std::string::npos);
}

TEST_CASE("report lines are JSON records") {
    const auto reports = check_braidsum(2);
    REQUIRE(reports.size() == 3);
    const auto j = nlohmann::json::parse(reports[1].to_json_line());
    CHECK(j["check"] == "braidsum");
    CHECK(j["params"]["m"] == 2);
    CHECK(j["status"] == "pass");
    CHECK(j["lhs"] == j["rhs"]);
    CHECK(j.contains("elapsed_ms"));
    CHECK(j.contains("version"));
    CHECK_FALSE(nlohmann::json::parse(reports[1].to_json_line(false)).contains("elapsed_ms"));
}

TEST_CASE("braidsum witness for m = 1") {
    const auto r = check_braidsum(1).front();
    CHECK(r.status == Status::pass);
    CHECK(r.lhs == "1*h1");
}

TEST_CASE("murphy degenerate cases are skipped") {
    const auto reports = check_murphy(2);
    int skipped = 0, passed = 0;
    for (const auto& r : reports) {
        skipped += r.status == Status::skipped;
        passed += r.status == Status::pass;
    }
    CHECK(skipped == 4); // (0,1), (0,2), (1,0), (2,0)
    CHECK(passed == 1);
}

TEST_CASE("adiff first case has witness z h1^2") {
    const auto reports = check_adiff(2);
    bool found = false;
    for (const auto& r : reports)
        if (r.check == "adiff") {
            found = true;
            CHECK(r.status == Status::pass);
            CHECK(r.lhs.find("h1^2") != std::string::npos);
        }
    CHECK(found);
}

TEST_CASE("affine relation for small n") {
    for (int n = 1; n <= 3; ++n) {
        const auto r = affine_relation(n);
        CAPTURE(n);
        CHECK(r.status == Status::pass);
        CHECK(r.note.find("a = ") != std::string::npos);
    }
}

TEST_CASE("property reports are reproducible") {
    auto render = [](std::uint64_t seed) {
        std::string out;
        for (const auto& r : run_jobs(property_jobs(seed, 5))) out += r.to_json_line(false) + "\n";
        return out;
    };
    CHECK(render(7) == render(7));
    CHECK(render(7) != render(8));
}

TEST_CASE("summary table counts") {
    const auto table = summary_table(check_mirror_inverse(3));
    CHECK(table.find("4 passed, 0 failed, 0 skipped") != std::string::npos);
}
