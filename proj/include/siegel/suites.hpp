#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace siegel {

struct CheckResult {
    std::string name;
    std::string subject;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct SuiteConfig {
    int q = 2;
    int n_max = -1;     // negative: the suite's own default
    uint64_t seed = 0;
    int precision = 0;  // p-adic working precision; 0 picks a per-case default
    int draws = 100;    // identity suite draws per grid point
    int samples = 500;  // coherence suite
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;  // with n_max resolved
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    int64_t failures() const;
    bool passed() const { return failures() == 0; }
};

/// lemma31, lemma32, lemma33, identities, counts, rg, theorem51, theorem62, oracle, coherence.
const std::vector<std::string>& suite_names();
int default_n_max(const std::string& suite);

/// Runs one suite at cfg.q. Throws BadArgument for an unknown suite or an unusable q, and
/// UnsupportedSize where explicit models are required beyond their size limit.
SuiteReport run_suite(const std::string& suite, const SuiteConfig& cfg);

/// One row of the dimension / Atkin-Lehner table.
struct TableRow {
    std::string sigma_class;
    std::vector<std::string> sigmas;  // labels in the class (one per row with raw output)
    int ext_sign = 0;                 // 0 when tau is induced (sigma not self-twisted)
    int n = 0;
    int64_t dim = 0, dim_closed = 0;
    int64_t al = 0, al_closed = 0;
    int al_relative_sign = 1;
    bool match = false;
};

struct TableResult {
    std::vector<TableRow> rows;
    std::vector<std::string> notes;
};

/// Rows for every sigma class at q over 0..n_max, assembled and closed-form side by side.
/// raw = true gives one row per sigma label instead of per class.
TableResult build_table(int q, int n_max, bool raw);

/// One support coset with its subgroup, fixed dimension per sigma class, and u_n image.
struct SupportRow {
    std::string coset;
    std::string type;
    int i = 0, j = 0, r = 0, k = 0, uclass = 0;
    std::string r_label;
    std::vector<int64_t> dims;  // aligned with SupportListing::classes
    std::string partner;
    bool self_paired = false;
};

struct SupportListing {
    int q = 0, n = 0;
    std::vector<std::string> classes;
    std::vector<SupportRow> rows;
    std::vector<std::string> notes;
};

SupportListing list_support(int q, int n);

}  // namespace siegel
