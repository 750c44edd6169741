// One PASS/FAIL line per acceptance criterion. All comparisons are exact integer equality
// (tolerance 0); each criterion also has a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "siegel/error.hpp"
#include "siegel/identities.hpp"
#include "siegel/suites.hpp"

using namespace siegel;

namespace {

struct Tally {
    int64_t checks = 0, failures = 0;
    std::vector<std::string> detail;

    void add(const SuiteReport& r) {
        checks += static_cast<int64_t>(r.checks.size());
        for (const auto& c : r.checks)
            if (!c.pass) {
                ++failures;
                if (detail.size() < 3)
                    detail.push_back("q=" + std::to_string(r.config.q) + " " + c.name + " [" + c.subject + "] expected " +
                                     c.expected + ", got " + c.actual);
            }
    }
    void need(bool ok, const std::string& what) {
        ++checks;
        if (!ok) {
            ++failures;
            detail.push_back(what);
        }
    }
};

SuiteReport run(const std::string& suite, int q, int n_max = -1, int samples = 500) {
    SuiteConfig cfg;
    cfg.q = q;
    cfg.n_max = n_max;
    cfg.samples = samples;
    return run_suite(suite, cfg);
}

int64_t count_named(const SuiteReport& r, const std::string& prefix) {
    int64_t k = 0;
    for (const auto& c : r.checks) k += c.name.rfind(prefix, 0) == 0;
    return k;
}

struct Criterion {
    int id;
    std::string title;
    double limit_s;
    std::function<void(Tally&)> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "fixed dimensions on standard subgroups, q in {2,3,4,5,7}", 30,
         [](Tally& t) {
             for (int q : {2, 3, 4, 5, 7}) {
                 const auto r = run("lemma31", q);
                 t.add(r);
                 if (q % 2 == 1) t.need(count_named(r, "b: Torus") > 0, "no constituent checks at q=" + std::to_string(q));
             }
         }},
        {2, "explicit models agree with character averages, q in {2,3,4,5}", 300,
         [](Tally& t) {
             for (int q : {2, 3, 4, 5}) t.add(run("oracle", q));
         }},
        {3, "twisted traces of swap and (w,w), q in {2,3,4,5}", 60,
         [](Tally& t) {
             for (int q : {2, 3, 4, 5}) {
                 const auto r = run("lemma32", q);
                 t.add(r);
                 t.need(!r.checks.empty(), "no eligible sigma at q=" + std::to_string(q));
             }
         }},
        {4, "twisted traces vanish for non-self-twisted sigma, q in {3,4}", 60,
         [](Tally& t) {
             for (int q : {3, 4}) t.add(run("lemma33", q));
             t.need(count_named(run("lemma33", 4), "model twisted") > 0, "no non-self-twisted sigma at q=4");
         }},
        {5, "support counts, q in {2,3,4,5,8}, n <= 60", 10,
         [](Tally& t) {
             for (int q : {2, 3, 4, 5, 8}) t.add(run("counts", q, 60));
         }},
        {6, "assembled dimensions, q in {2,3,4,5}, n <= 20", 120,
         [](Tally& t) {
             for (int q : {2, 3, 4, 5}) {
                 const auto r = run("theorem51", q, 20);
                 t.add(r);
                 if (q == 2) t.need(count_named(r, "q=2 sequence") == 9, "q=2 sequence missing");
             }
         }},
        {7, "matrix identities, p in {2,3}, i <= 3, j <= 5, n <= 10, 100 draws", 120,
         [](Tally& t) {
             IdentitySuiteOptions opt;
             for (const auto& row : run_identity_suite(opt))
                 t.need(row.failures == 0 && row.checks >= opt.draws,
                        to_string(row.tag) + " p=" + std::to_string(row.p) + ": " + std::to_string(row.failures) +
                            " failures" + (row.messages.empty() ? "" : " (" + row.messages.front() + ")"));
         }},
        {8, "R_g conjugacy at q = 2, n <= 6, and the off-support panel", 300,
         [](Tally& t) {
             const auto r = run("rg", 2, 6);
             t.add(r);
             t.need(count_named(r, "off-support") == 20, "off-support panel incomplete");
         }},
        {9, "Atkin-Lehner signatures, q in {2,3,4}, 3 <= n <= 12, both signs", 120,
         [](Tally& t) {
             for (int q : {2, 3, 4}) {
                 const auto r = run("theorem62", q, 12);
                 t.add(r);
                 t.need(count_named(r, "model traces") > 0, "no model path at q=" + std::to_string(q));
             }
         }},
        {10, "reduce_K intertwines u_1-conjugation with u_action, 500 samples", 60,
         [](Tally& t) {
             for (int q : {2, 3}) t.add(run("coherence", q, -1, 500));
         }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        Tally t;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(t);
        } catch (const std::exception& e) {
            t.need(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        t.need(secs < c.limit_s, "over time limit");
        const bool ok = t.failures == 0;
        failed += !ok;
        std::printf("%s  criterion %2d: %s | checks=%lld failures=%lld tolerance=0 time=%.2fs limit=%.0fs\n",
                    ok ? "PASS" : "FAIL", c.id, c.title.c_str(), static_cast<long long>(t.checks),
                    static_cast<long long>(t.failures), secs, c.limit_s);
        for (const auto& d : t.detail) std::printf("      %s\n", d.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
