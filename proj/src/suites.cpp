#include "siegel/suites.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <tuple>

#include "siegel/chars.hpp"
#include "siegel/identities.hpp"
#include "siegel/models.hpp"
#include "siegel/padic.hpp"
#include "siegel/rg.hpp"
#include "siegel/support.hpp"

namespace siegel {

int64_t SuiteReport::failures() const {
    return std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.pass; });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lemma31",   "lemma32",   "lemma33", "identities", "counts",
                                                "rg",        "theorem51", "theorem62", "oracle",   "coherence"};
    return names;
}

int default_n_max(const std::string& suite) {
    if (suite == "counts") return 60;
    if (suite == "rg") return 6;
    if (suite == "theorem51") return 20;
    if (suite == "theorem62") return 12;
    if (suite == "identities") return 10;
    return 0;
}

namespace {

std::pair<int, int> prime_power(int q) {
    if (q < 2 || q > FqCtx::kMaxQ) throw BadArgument("q must be a prime power in [2, " + std::to_string(FqCtx::kMaxQ) + "]");
    int p = 2;
    while (q % p != 0) ++p;
    int f = 0, m = q;
    while (m % p == 0) {
        m /= p;
        ++f;
    }
    if (m != 1) throw BadArgument("q = " + std::to_string(q) + " is not a prime power");
    return {p, f};
}

std::string str(int64_t v) { return std::to_string(v); }

class Collector {
public:
    explicit Collector(SuiteReport& r) : r_(r) {}
    void eq(const std::string& name, const std::string& subject, int64_t expected, int64_t actual) {
        r_.checks.push_back({name, subject, str(expected), str(actual), expected == actual});
    }
    void truth(const std::string& name, const std::string& subject, const std::string& expected,
               const std::string& actual, bool pass) {
        r_.checks.push_back({name, subject, expected, actual, pass});
    }
    void note(const std::string& s) { r_.notes.push_back(s); }

private:
    SuiteReport& r_;
};

std::vector<SubgroupKind> standard_kinds(const FqCtx& F, bool with_u) {
    std::vector<SubgroupKind> k{SubgroupKind::Torus, SubgroupKind::Unip};
    if (!F.odd()) k.push_back(SubgroupKind::ArtinUnip);
    if (with_u) {
        k.push_back(SubgroupKind::U1);
        k.push_back(SubgroupKind::U2);
    }
    return k;
}

std::unique_ptr<ModelOracle> oracle_if_small(const FqCtx& F) {
    if (F.q() > kMaxModelQ) return nullptr;
    return std::make_unique<ModelOracle>(F);
}

void require_models(const FqCtx& F, const std::string& suite) {
    if (F.q() > kMaxModelQ)
        throw UnsupportedSize(suite + " needs explicit models, available for q <= " + std::to_string(kMaxModelQ));
}

/// Closed-form fixed dimension of a standard subgroup, when one applies.
std::optional<int64_t> closed_fixed_dim(const FqCtx& F, const SigmaLabel& s, SubgroupKind k) {
    const int w = omega_minus_one(F, s.theta1);
    const bool full = s.constituent == Constituent::Full;
    switch (k) {
        case SubgroupKind::Torus: return full ? lemma31_closed('a', F.q(), w) : lemma31_closed('b', F.q(), w);
        case SubgroupKind::Unip:
            if (full) return lemma31_closed('c', F.q(), w);
            return std::nullopt;
        case SubgroupKind::ArtinUnip: return lemma31_closed('d', F.q(), w);
        case SubgroupKind::U1:
        case SubgroupKind::U2: return 0;
        default: return std::nullopt;
    }
}

void suite_lemma31(const FqCtx& F, Collector& out) {
    const DiagonalConstituentChars diag(F);
    const auto oracle = oracle_if_small(F);
    const int q = F.q();
    int split = 0;
    for (const auto& s : sigma_labels(F, false)) {
        const std::string sub = to_string(s);
        const int w = omega_minus_one(F, s.theta1);
        out.eq("a: Torus", sub, lemma31_closed('a', q, w), fixed_dim(F, s, subgroup_R(SubgroupKind::Torus, F)));
        out.eq("c: Unip", sub, lemma31_closed('c', q, w), fixed_dim(F, s, subgroup_R(SubgroupKind::Unip, F)));
        if (!F.odd())
            out.eq("d: ArtinUnip", sub, lemma31_closed('d', q, w), fixed_dim(F, s, subgroup_R(SubgroupKind::ArtinUnip, F)));
        if (!F.odd() || !is_valid_sigma(F, {s.theta1, s.theta2, Constituent::Plus})) continue;
        ++split;
        for (Constituent c : {Constituent::Plus, Constituent::Minus}) {
            const SigmaLabel t{s.theta1, s.theta2, c};
            const auto R = subgroup_R(SubgroupKind::Torus, F);
            out.eq("b: Torus", to_string(t), lemma31_closed('b', q, w), fixed_dim(F, t, R, &diag));
            if (oracle) out.eq("b: Torus (model characters)", to_string(t), lemma31_closed('b', q, w), fixed_dim(F, t, R, oracle.get()));
        }
    }
    if (F.odd()) out.note("split pairs (case b): " + std::to_string(split));
    if (F.odd() && !oracle) out.note("case b uses half the full character on the torus; no models at this q");
}

void suite_oracle(const FqCtx& F, Collector& out) {
    require_models(F, "oracle");
    const ModelOracle oracle(F);
    for (const auto& s : sigma_labels(F, true)) {
        const Rep22 rep = oracle.sigma_rep(s);
        for (SubgroupKind k : standard_kinds(F, true)) {
            const auto R = subgroup_R(k, F);
            const std::string sub = to_string(s) + " " + to_string(k);
            const int64_t rank = fixed_rank(rep, R);
            out.eq("fixed_rank = fixed_dim", sub, fixed_dim(F, s, R, &oracle), rank);
            if (const auto c = closed_fixed_dim(F, s, k)) out.eq("fixed_rank = closed form", sub, *c, rank);
        }
    }
}

void suite_lemma32(const FqCtx& F, Collector& out) {
    require_models(F, "lemma32");
    const ModelOracle oracle(F);
    const GL2Elem w = gl2_w(F);
    int used = 0;
    for (const auto& s : sigma_labels(F, false)) {
        if (!lambda_omega_exponent(F, s) || omega_minus_one(F, s.theta2) != 1) continue;
        const int q = F.q();
        const bool split = F.odd() && split_restriction(F, s.theta2);
        // split rho: lambda rho = alpha lambda rho, so lambda omega is only defined up to alpha; use the trivial branch
        const int lw = split ? 0 : *lambda_omega_exponent(F, s);
        if ((2 * lw) % (q - 1) != 0) continue;
        ++used;
        const Rep22 rep = oracle.sigma_rep(s);
        const CMat S = rep.swap_operator();
        const CMat W = rep(GL22Elem{w, w});
        const std::string sub = to_string(s);
        if (!F.odd()) {
            for (SubgroupKind k : standard_kinds(F, false)) {
                const auto R = subgroup_R(k, F);
                const int64_t d = fixed_rank(rep, R);
                out.eq("swap trace = dim", sub + " " + to_string(k), d, twisted_trace(rep, S, R));
                out.eq("swap closed form", sub + " " + to_string(k), d, twisted_trace_closed(F, s, TwistOperator::Swap, k));
            }
            const auto T = subgroup_R(SubgroupKind::Torus, F);
            const int64_t d = fixed_rank(rep, T);
            out.eq("(w,w) trace = dim", sub + " Torus", d, twisted_trace(rep, W, T));
            out.eq("(w,w) closed form", sub + " Torus", d, twisted_trace_closed(F, s, TwistOperator::WW, SubgroupKind::Torus));
            out.eq("swap(w,w) trace = dim", sub + " Torus", d, twisted_trace(rep, W * S, T));
            continue;
        }
        const auto T = subgroup_R(SubgroupKind::Torus, F);
        const int64_t ww = lw == 0 ? 2 : 2 * (((q - 3) / 2) % 2 == 0 ? 1 : -1);
        const int64_t sw = lw == 0 ? 2 : 0;
        const std::string tag = sub + (lw == 0 ? " lw=1" : " lw=alpha") + (split ? " (reducible)" : "");
        out.eq("(w,w) trace", tag, ww, twisted_trace(rep, W, T));
        out.eq("swap trace", tag, sw, twisted_trace(rep, S, T));
        if (split) continue;
        out.eq("(w,w) closed form", tag, ww, twisted_trace_closed(F, s, TwistOperator::WW, SubgroupKind::Torus));
        out.eq("swap closed form", tag, sw, twisted_trace_closed(F, s, TwistOperator::Swap, SubgroupKind::Torus));
    }
    out.note("sigma of the form [lambda rho x rho] with omega_rho(-1) = 1: " + std::to_string(used));
}

void suite_lemma33(const FqCtx& F, Collector& out) {
    require_models(F, "lemma33");
    const ModelOracle oracle(F);
    const auto group = enumerate_gl22(F);
    int seen = 0;
    for (const auto& s : sigma_labels(F, true)) {
        if (is_self_twisted(F, s, &oracle)) continue;
        ++seen;
        const InducedRep tau(oracle.sigma_rep(s));
        for (SubgroupKind k : standard_kinds(F, false)) {
            const auto R = subgroup_R(k, F);
            int64_t tried = 0, nonzero = 0, closed_nonzero = 0;
            for (const auto& m : group) {
                const ExtElem e{m, true};
                if (!ext_normalizes(F, e, R)) continue;
                ++tried;
                nonzero += induced_twisted_trace(tau, e, R) != 0;
                closed_nonzero += induced_trace_zero(F, s, e, R) != 0;
            }
            const std::string sub = to_string(s) + " " + to_string(k) + " (" + std::to_string(tried) + " elements)";
            out.eq("model twisted traces nonzero", sub, 0, nonzero);
            out.eq("closed twisted traces nonzero", sub, 0, closed_nonzero);
            out.truth("some u-coset element normalizes R", sub, ">0", str(tried), tried > 0);
        }
    }
    if (seen == 0) out.note("no sigma at this q is not self-twisted; nothing to check");
}

void suite_counts(const FqCtx& F, int n_max, Collector& out) {
    const int q = F.q();
    constexpr CosetType types[] = {CosetType::I, CosetType::II, CosetType::IIIa, CosetType::IIIb, CosetType::IV};
    for (int n = 0; n <= n_max; ++n) {
        const auto s = enumerate_support(q, n);
        for (CosetType t : types)
            out.eq("support count", "n=" + str(n) + " " + to_string(t), closed_count(t, q, n), count_type(s, t));
        if (n <= 20) {
            int64_t bad = 0;
            for (const auto& c : s) {
                const CosetParam d = al_partner(c, n);
                bad += al_partner(d, n) != c || std::find(s.begin(), s.end(), d) == s.end();
            }
            out.eq("AL partner involution failures", "n=" + str(n), 0, bad);
            const auto fixed = al_fixed_cosets(q, n);
            for (CosetType t : types) {
                const int64_t k = std::count_if(fixed.begin(), fixed.end(), [&](const ALFixedCoset& x) { return x.coset.type == t; });
                out.eq("AL fixed count", "n=" + str(n) + " " + to_string(t), al_fixed_closed_count(t, q, n), k);
            }
        }
        if (!F.odd() && n >= 4) {
            int64_t weighted = 0;
            // each coset weighted by dim sigma^{R_g} of a generic sigma: q-1 on Unip, 1 elsewhere
            for (CosetType t : types) weighted += (t == CosetType::IIIa ? q - 1 : 1) * count_type(s, t);
            out.eq("weighted counts = F(n,q)", "n=" + str(n), F_even(n, q), weighted);
        }
    }
}

void suite_rg(const FqCtx& F, const SuiteConfig& cfg, int n_max, Collector& out) {
    RgOptions opt;
    opt.seed = cfg.seed;
    int64_t type_II_off = 0;
    for (int n = 0; n <= n_max; ++n)
        for (const auto& c : enumerate_support(F.q(), n)) {
            const int N = cfg.precision > 0 ? cfg.precision : default_precision(n, c.i, c.j);
            const PadicCtx C(F.p(), F.f(), N);
            const RgResult r = compute_Rg(C, c, n, opt);
            const SubgroupKind kind = coset_R_type(c);
            const auto table = subgroup_R(kind, F);
            const bool conj = r.group.size() == table.size() && conjugate_subgroups(F, r.group, table).has_value();
            const std::string sub = "n=" + str(n) + " " + to_string(c);
            std::string actual = "order " + str(r.group.size());
            if (!conj && c.type == CosetType::II && r.group == diag_swap_subgroup(F)) {
                actual += ", {(diag(a,b), diag(b,a))}";
                ++type_II_off;
            }
            out.truth("R_g conjugate to the table subgroup", sub, to_string(kind) + " order " + str(table.size()), actual, conj);
            out.truth("witness lifts verified", sub, "0 failures",
                      str(r.failures.size()) + (r.failures.empty() ? "" : " (" + r.failures.front() + ")"), r.failures.empty());
        }
    if (type_II_off > 0)
        out.note("type II: computed R_g is {(diag(a,b), diag(b,a))} of order (q-1)^2, not the torus; " + str(type_II_off) +
                 " cosets affected");
    const auto U1 = subgroup_R(SubgroupKind::U1, F), U2 = subgroup_R(SubgroupKind::U2, F);
    for (const auto& t : off_support_panel()) {
        const PadicCtx C(F.p(), F.f(), cfg.precision > 0 ? cfg.precision : off_support_precision(t));
        const RgResult r = compute_Rg_sample(C, off_support_representative(C, t), t.n, opt);
        const bool u1 = U1.subset_of(r.group);
        const bool u2 = !u1 && contains_conjugate(F, r.group, U2);
        out.truth("off-support R_g contains U1 or a conjugate of U2", to_string(t), "yes",
                  u1 ? "U1" : u2 ? "conjugate of U2" : "neither (order " + str(r.group.size()) + ")", u1 || u2);
    }
}

void suite_theorem51(const FqCtx& F, int n_max, Collector& out) {
    const auto oracle = oracle_if_small(F);
    for (const auto& s : irreducible_sigmas(F)) {
        if (s.constituent != Constituent::Full && !oracle) {
            out.note("skipped constituent " + to_string(s) + ": no models at this q");
            continue;
        }
        const SigmaClass cls = classify_sigma(F, s, oracle.get());
        for (int n = 0; n <= n_max; ++n) {
            const auto r = assemble_dim(F, {s, 1}, n, oracle.get());
            out.truth("assembled dim = closed form", to_string(s) + " " + class_key(cls) + " n=" + str(n), str(r.closed),
                      str(r.assembled), r.match);
        }
    }
    if (F.q() == 2) {
        const int64_t seq[] = {0, 0, 0, 1, 3, 7, 13, 23, 35};
        const auto s = irreducible_sigmas(F).front();
        for (int n = 0; n <= std::min(n_max, 8); ++n) out.eq("q=2 sequence", "n=" + str(n), seq[n], assemble_dim(F, {s, 1}, n).assembled);
    }
}

void suite_theorem62(const FqCtx& F, int n_max, Collector& out) {
    const auto oracle = oracle_if_small(F);
    if (!oracle) out.note("models path skipped: no models at this q");
    for (const auto& s : irreducible_sigmas(F)) {
        if (s.constituent != Constituent::Full && !oracle) {
            out.note("skipped constituent " + to_string(s) + ": no models at this q");
            continue;
        }
        const SigmaClass cls = classify_sigma(F, s, oracle.get());
        for (int e : {1, -1})
            for (int n = 3; n <= n_max; ++n) {
                const std::string sub = to_string(s) + " " + class_key(cls) + " sign=" + (e > 0 ? "+" : "-") + " n=" + str(n);
                const auto c = assemble_al(F, {s, e}, n, oracle.get());
                out.truth("closed-form contributions = closed form", sub, str(c.closed), str(c.assembled), c.match);
                if (!oracle) continue;
                const auto m = assemble_al(F, {s, e}, n, oracle.get(), ALPath::Models);
                std::string actual = str(m.assembled);
                if (m.relative_sign == -1 && m.match) actual += " (opposite extension label, constituent)";
                out.truth("model traces = closed form", sub, str(m.closed), actual, m.match);
            }
    }
    if (F.q() == 2) {
        const auto s = irreducible_sigmas(F).front();
        for (int n = 3; n <= n_max; ++n) {
            const int64_t want = n == 3 ? 1 : n % 2 == 0 ? n - 3 : 2 * n - 7;
            out.eq("q=2 signature, tau(u_1) = +T", "n=" + str(n), want, assemble_al(F, {s, 1}, n).assembled);
        }
    }
}

void suite_identities(const FqCtx& F, const SuiteConfig& cfg, int n_max, Collector& out) {
    IdentitySuiteOptions opt;
    opt.primes = {F.p()};
    opt.f = F.f();
    opt.n_max = n_max;
    opt.draws = cfg.draws;
    opt.seed = cfg.seed;
    for (const auto& r : run_identity_suite(opt)) {
        std::string actual = str(r.failures) + " of " + str(r.checks);
        if (!r.messages.empty()) actual += " (" + r.messages.front() + ")";
        out.truth("identity holds", to_string(r.tag) + " p=" + str(r.p), "0 failures", actual, r.failures == 0);
    }
    if (cfg.precision > 0) out.note("precision override ignored: each identity family sets its own precision");
}

void suite_coherence(const FqCtx& F, const SuiteConfig& cfg, Collector& out) {
    const PadicCtx C(F.p(), F.f(), cfg.precision > 0 ? cfg.precision : 20);
    std::mt19937_64 rng(cfg.seed);
    int64_t bad = 0, skipped = 0;
    std::string first;
    const GSp4Elem u1 = u_n(C, 1);
    for (int k = 0; k < cfg.samples; ++k) {
        try {
            const GSp4Elem g = random_K(C, rng);
            const GSp4Elem x = gsp4_conj(u1, g);
            const bool ok = in_K(x) && reduce_K(x) == u_action(F, reduce_K(g));
            if (!ok && bad++ == 0) first = "sample " + str(k);
        } catch (const PrecisionExhausted&) {
            ++skipped;
        }
    }
    out.eq("reduce(u_1 k u_1^-1) = u_action(reduce k) failures", str(cfg.samples) + " samples", 0, bad + skipped);
    if (!first.empty()) out.note("first failure: " + first);
}

}  // namespace

SuiteReport run_suite(const std::string& suite, const SuiteConfig& cfg) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw BadArgument("unknown suite '" + suite + "'");
    const auto [p, f] = prime_power(cfg.q);
    const FqCtx F(p, f);
    SuiteReport rep;
    rep.suite = suite;
    rep.config = cfg;
    rep.config.n_max = cfg.n_max >= 0 ? cfg.n_max : default_n_max(suite);
    const int n_max = rep.config.n_max;
    Collector out(rep);
    if (suite == "lemma31") suite_lemma31(F, out);
    else if (suite == "lemma32") suite_lemma32(F, out);
    else if (suite == "lemma33") suite_lemma33(F, out);
    else if (suite == "oracle") suite_oracle(F, out);
    else if (suite == "counts") suite_counts(F, n_max, out);
    else if (suite == "rg") suite_rg(F, cfg, n_max, out);
    else if (suite == "theorem51") suite_theorem51(F, n_max, out);
    else if (suite == "theorem62") suite_theorem62(F, n_max, out);
    else if (suite == "identities") suite_identities(F, cfg, n_max, out);
    else suite_coherence(F, cfg, out);
    return rep;
}

TableResult build_table(int q, int n_max, bool raw) {
    const auto [p, f] = prime_power(q);
    const FqCtx F(p, f);
    const auto oracle = oracle_if_small(F);
    TableResult res;
    // (class, sign order, n, sigma index when raw) -> row
    std::map<std::tuple<std::string, int, int, int>, TableRow> rows;
    int idx = 0;
    for (const auto& s : irreducible_sigmas(F)) {
        ++idx;
        if (s.constituent != Constituent::Full && !oracle) {
            res.notes.push_back("skipped constituent " + to_string(s) + ": no models at this q");
            continue;
        }
        const SigmaClass cls = classify_sigma(F, s, oracle.get());
        const std::string key = class_key(cls);
        const std::vector<int> signs = cls.self_twisted ? std::vector<int>{1, -1} : std::vector<int>{0};
        for (int e : signs)
            for (int n = 0; n <= n_max; ++n) {
                const auto d = assemble_dim(F, {s, 1}, n, oracle.get());
                const auto a = assemble_al(F, {s, e == 0 ? 1 : e}, n, oracle.get());
                const int order = e == 1 ? 0 : e == -1 ? 1 : 2;
                auto [it, fresh] = rows.try_emplace({key, order, n, raw ? idx : 0});
                TableRow& r = it->second;
                if (fresh) {
                    r = TableRow{key, {}, e, n, d.assembled, d.closed, a.assembled, a.closed, a.relative_sign, d.match && a.match};
                } else if (r.dim != d.assembled || r.al != a.assembled) {
                    r.match = false;
                } else {
                    r.match = r.match && d.match && a.match;
                }
                r.sigmas.push_back(to_string(s));
            }
    }
    for (auto& [k, r] : rows) res.rows.push_back(std::move(r));
    return res;
}

SupportListing list_support(int q, int n) {
    if (n < 0) throw BadArgument("n must be non-negative");
    const auto [p, f] = prime_power(q);
    const FqCtx F(p, f);
    const auto oracle = oracle_if_small(F);
    SupportListing out;
    out.q = q;
    out.n = n;
    std::vector<SigmaLabel> reps;
    for (const auto& s : irreducible_sigmas(F)) {
        if (s.constituent != Constituent::Full && !oracle) {
            out.notes.push_back("constituent classes omitted: no models at this q");
            break;
        }
        const std::string key = class_key(classify_sigma(F, s, oracle.get()));
        if (std::find(out.classes.begin(), out.classes.end(), key) != out.classes.end()) continue;
        out.classes.push_back(key);
        reps.push_back(s);
    }
    for (const auto& c : enumerate_support(q, n)) {
        SupportRow row;
        row.coset = to_string(c);
        row.type = to_string(c.type);
        row.i = c.i;
        row.j = c.j;
        row.r = c.r;
        row.k = c.k;
        row.uclass = c.uclass;
        row.r_label = to_string(coset_R_type(c));
        const auto R = coset_R_group(F, c);
        for (const auto& s : reps) row.dims.push_back(fixed_dim(F, s, R, oracle.get()));
        const CosetParam d = al_partner(c, n);
        row.partner = to_string(d);
        row.self_paired = d == c;
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace siegel
