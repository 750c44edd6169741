#include <algorithm>

#include "doctest.h"
#include "output.hpp"
#include "siegel/error.hpp"
#include "siegel/suites.hpp"

using namespace siegel;

namespace {

SuiteReport run(const std::string& suite, int q, int n_max = -1, uint64_t seed = 0) {
    SuiteConfig cfg;
    cfg.q = q;
    cfg.n_max = n_max;
    cfg.seed = seed;
    return run_suite(suite, cfg);
}

const TableRow* find_row(const TableResult& t, const std::string& cls, int ext, int n) {
    for (const auto& r : t.rows)
        if (r.sigma_class == cls && r.ext_sign == ext && r.n == n) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("suite names and defaults") {
    CHECK(suite_names().size() == 10);
    CHECK(default_n_max("counts") == 60);
    CHECK(default_n_max("rg") == 6);
    CHECK(run("counts", 2, 4).config.n_max == 4);
    CHECK(run("theorem51", 2).config.n_max == 20);
}

TEST_CASE("argument and size errors") {
    CHECK_THROWS_AS(run("nope", 2), BadArgument);
    CHECK_THROWS_AS(run("counts", 6), BadArgument);
    CHECK_THROWS_AS(run("counts", 32), BadArgument);
    CHECK_THROWS_AS(run("oracle", 7), UnsupportedSize);
    CHECK_THROWS_AS(run("lemma33", 8), UnsupportedSize);
    CHECK_THROWS_AS(list_support(2, -1), BadArgument);
}

TEST_CASE("small suites pass") {
    for (const char* s : {"lemma31", "lemma32", "counts", "theorem51", "theorem62", "coherence"})
        for (int q : {2, 3, 4}) {
            const auto r = run(s, q, 8);
            INFO(s, " q=", q);
            CHECK(r.passed());
        }
    CHECK(run("lemma31", 7).passed());
}

TEST_CASE("constituent torus checks cover both halves at q odd") {
    for (int q : {3, 5, 7}) {
        const auto r = run("lemma31", q);
        const auto b = std::count_if(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.name == "b: Torus"; });
        CHECK(b > 0);
        CHECK(b % 2 == 0);
    }
}

TEST_CASE("type II subgroup at q = 4 is reported, not hidden") {
    const auto r = run("rg", 4, 4);
    CHECK_FALSE(r.passed());
    for (const auto& c : r.checks)
        if (!c.pass) CHECK(c.subject.find("X(") != std::string::npos);
    REQUIRE_FALSE(r.notes.empty());
    CHECK(r.notes.front().find("type II") != std::string::npos);
}

TEST_CASE("rg at q = 2 passes, including the off-support panel") {
    const auto r = run("rg", 2, 4);
    CHECK(r.passed());
    const auto off = std::count_if(r.checks.begin(), r.checks.end(),
                                   [](const CheckResult& c) { return c.name.rfind("off-support", 0) == 0; });
    CHECK(off == 20);
}

TEST_CASE("seeded suites are reproducible") {
    for (const char* s : {"coherence", "rg"}) {
        const auto a = run(s, 2, 3, 11), b = run(s, 2, 3, 11);
        REQUIRE(a.checks.size() == b.checks.size());
        for (size_t k = 0; k < a.checks.size(); ++k) CHECK(a.checks[k].actual == b.checks[k].actual);
    }
}

TEST_CASE("table examples") {
    const auto t2 = build_table(2, 8, false);
    const int64_t seq[] = {0, 0, 0, 1, 3, 7, 13, 23, 35};
    const std::string cls = t2.rows.front().sigma_class;
    for (int n = 0; n <= 8; ++n) {
        const auto* r = find_row(t2, cls, 1, n);
        REQUIRE(r);
        CHECK(r->dim == seq[n]);
        CHECK(r->match);
    }
    CHECK(find_row(t2, cls, 1, 6)->al == 3);

    const auto t3 = build_table(3, 5, false);
    const auto* c = find_row(t3, "self-twisted/constituent/w(-1)=+1", 1, 5);
    REQUIRE(c);
    CHECK(c->dim == 4);
    CHECK(c->sigmas.size() == 2);
    for (const auto& r : t3.rows) CHECK(r.match);

    const auto raw = build_table(3, 5, true);
    CHECK(raw.rows.size() > t3.rows.size());
    for (const auto& r : raw.rows) CHECK(r.sigmas.size() == 1);
}

TEST_CASE("support listing examples") {
    const auto a = list_support(2, 4);
    REQUIRE(a.rows.size() == 3);
    CHECK(std::count_if(a.rows.begin(), a.rows.end(), [](const SupportRow& r) { return r.type == "I"; }) == 2);
    const auto ii = std::find_if(a.rows.begin(), a.rows.end(), [](const SupportRow& r) { return r.type == "II"; });
    REQUIRE(ii != a.rows.end());
    CHECK(ii->self_paired);

    const auto b = list_support(3, 3);
    REQUIRE(b.rows.size() == 1);
    CHECK(b.rows[0].i == 0);
    CHECK(b.rows[0].j == 1);
    CHECK(b.rows[0].self_paired);

    const auto c = list_support(2, 7);
    std::vector<SupportRow> iiib;
    std::copy_if(c.rows.begin(), c.rows.end(), std::back_inserter(iiib), [](const SupportRow& r) { return r.type == "IIIb"; });
    REQUIRE(iiib.size() == 2);
    for (const auto& r : iiib) CHECK(r.self_paired);
}

TEST_CASE("JSON output round-trips byte for byte") {
    cli::TableRequest req{3, 6, false};
    const auto t = build_table(3, 6, false);
    const std::string once = cli::table_json(req, t).dump(2);
    CHECK(cli::Json::parse(once).dump(2) == once);

    const std::string v = cli::verify_json(run("lemma31", 5)).dump(2);
    CHECK(cli::Json::parse(v).dump(2) == v);
    const auto j = cli::Json::parse(v);
    for (const char* key : {"config", "rows", "checks", "seed", "version"}) CHECK(j.contains(key));

    const std::string s = cli::support_json(list_support(2, 7)).dump(2);
    CHECK(cli::Json::parse(s).dump(2) == s);
}

TEST_CASE("CSV uses LF endings and quotes labels with commas") {
    const std::string csv = cli::table_csv(build_table(2, 4, false));
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.rfind("class,sigmas,ext_sign,n,dim", 0) == 0);
    CHECK(csv.back() == '\n');
    CHECK(csv.find("\"(1,1)\"") != std::string::npos);
    CHECK(cli::csv_field("a\"b") == "\"a\"\"b\"");
    CHECK(cli::csv_field("plain") == "plain");
}
