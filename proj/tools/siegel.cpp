#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "output.hpp"
#include "siegel/error.hpp"

using namespace siegel;
using namespace siegel::cli;

namespace {

int exit_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Limit: return kExitLimit;
        case ErrorKind::BadArgument: return kExitBadArgs;
        default: return kExitMismatch;
    }
}

void emit(Format f, const Json& j, const std::string& csv, const std::string& text) {
    if (f == Format::Json) std::cout << j.dump(2) << '\n';
    else if (f == Format::Csv) std::cout << csv;
    else std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Siegel fixed vectors of depth zero supercuspidals of GSp(4)"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    TableRequest treq;
    std::string format = "text";
    auto* table = app.add_subcommand("table", "dimension and Atkin-Lehner table per sigma class");
    table->add_option("--q", treq.q, "residue field size")->required();
    table->add_option("--n-max", treq.n_max, "largest level")->required()->check(CLI::NonNegativeNumber);
    table->add_flag("--raw", treq.raw, "one row per sigma label");
    table->add_option("--format", format, "json, csv or text");

    SuiteConfig vcfg;
    std::string suite;
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name")->required();
    verify->add_option("--q", vcfg.q, "residue field size")->required();
    verify->add_option("--n-max", vcfg.n_max, "largest level (suite default when omitted)");
    verify->add_option("--seed", vcfg.seed, "master seed");
    verify->add_option("--precision", vcfg.precision, "p-adic working precision");
    verify->add_option("--format", format, "json, csv or text");

    int sq = 2, sn = 0;
    auto* support = app.add_subcommand("support", "list support cosets at level n");
    support->add_option("--q", sq, "residue field size")->required();
    support->add_option("--n", sn, "level")->required()->check(CLI::NonNegativeNumber);
    support->add_option("--format", format, "json, csv or text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadArgs;
    }

    try {
        const Format f = parse_format(format);
        if (*table) {
            const auto t = build_table(treq.q, treq.n_max, treq.raw);
            emit(f, table_json(treq, t), table_csv(t), table_text(treq, t));
            for (const auto& r : t.rows)
                if (!r.match) return kExitMismatch;
            return kExitPass;
        }
        if (*verify) {
            const auto r = run_suite(suite, vcfg);
            emit(f, verify_json(r), verify_csv(r), verify_text(r));
            return r.passed() ? kExitPass : kExitMismatch;
        }
        const auto s = list_support(sq, sn);
        emit(f, support_json(s), support_csv(s), support_text(s));
        return kExitPass;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_for(e);
    }
}
