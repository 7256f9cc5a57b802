#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "framekit/verify.hpp"

using namespace framekit;

TEST_CASE("the property suite passes on random instances") {
    VerifyOptions opts;
    opts.seed = 7;
    opts.trials = 3;
    const VerifyReport report = run_verification(opts);
    CHECK(report.all_pass());
    CHECK(report.failed == 0);
    CHECK(report.passed == report.results.size());
    CHECK(report.results.size() > 20); // every check contributes instances
}

TEST_CASE("fixed seed gives a byte-identical machine report") {
    VerifyOptions opts;
    opts.seed = 12345;
    opts.trials = 2;
    const std::string a = render_machine(run_verification(opts));
    const std::string b = render_machine(run_verification(opts));
    CHECK(a == b);

    opts.seed = 54321;
    const std::string c = render_machine(run_verification(opts));
    CHECK(a != c); // the seed actually steers the instances
}

TEST_CASE("results arrive sorted by check name then instance index") {
    VerifyOptions opts;
    opts.seed = 3;
    opts.trials = 2;
    const VerifyReport report = run_verification(opts);
    for (std::size_t i = 1; i < report.results.size(); ++i) {
        const CheckResult& prev = report.results[i - 1];
        const CheckResult& cur = report.results[i];
        const bool ordered = prev.check < cur.check ||
                             (prev.check == cur.check && prev.instance_index <= cur.instance_index);
        CHECK(ordered);
    }
}

TEST_CASE("user frames join the run as extra instances") {
    VerifyOptions base;
    base.seed = 9;
    base.trials = 1;
    const std::size_t without = run_verification(base).results.size();

    VerifyOptions with = base;
    with.user_frames.push_back(
        Frame(2, {CVector::unit(2, 0), CVector::unit(2, 1), CVector::unit(2, 1)}));
    const VerifyReport report = run_verification(with);
    CHECK(report.results.size() > without);
    CHECK(report.all_pass());

    // user instances are flagged in the instance description
    const bool has_user = std::any_of(report.results.begin(), report.results.end(),
                                      [](const CheckResult& r) {
                                          return r.instance.find("user") != std::string::npos;
                                      });
    CHECK(has_user);
}

TEST_CASE("a user family that is not a frame produces recorded failures") {
    VerifyOptions opts;
    opts.seed = 9;
    opts.trials = 1;
    opts.user_frames.push_back(Frame(2, {CVector::unit(2, 0)})); // spans only one axis
    const VerifyReport report = run_verification(opts);
    CHECK_FALSE(report.all_pass());
    CHECK(report.failed > 0);
    // the dual checks cannot run on a non-frame; the error is recorded, not thrown
    bool dual_failed = false;
    for (const CheckResult& r : report.results)
        if (!r.pass && r.check == "dual_bounds_reciprocal" &&
            r.instance.find("user") != std::string::npos)
            dual_failed = true;
    CHECK(dual_failed);
    // and the rendered table flags the run as failing
    CHECK(render_text(report).find("-> FAIL") != std::string::npos);
}

TEST_CASE("zero trials with no user input is refused") {
    VerifyOptions opts;
    opts.trials = 0;
    CHECK_THROWS_AS(run_verification(opts), Error);

    // but zero trials with a user frame is a valid audit of just that frame
    opts.user_frames.push_back(
        Frame(2, {CVector::unit(2, 0), CVector::unit(2, 1)}));
    const VerifyReport report = run_verification(opts);
    CHECK(report.results.size() > 0);
    CHECK(report.all_pass());
}

TEST_CASE("text and machine renderings carry the verdict") {
    VerifyOptions opts;
    opts.seed = 11;
    opts.trials = 1;
    const VerifyReport report = run_verification(opts);
    const std::string text = render_text(report);
    CHECK(text.find("-> PASS") != std::string::npos);

    const std::string machine = render_machine(report);
    CHECK(machine.find("\"failed\": 0") != std::string::npos);
    CHECK(machine.find("\"schema_version\": 1") != std::string::npos);

    // every distinct check name appears in the text table
    std::set<std::string> names;
    for (const CheckResult& r : report.results)
        names.insert(r.check);
    for (const std::string& name : names)
        CHECK(text.find(name) != std::string::npos);
}
