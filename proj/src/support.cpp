#include "siegel/support.hpp"


namespace siegel {

namespace {

bool even_q(int q) { return q % 2 == 0; }

int64_t floor_sq4(int64_t m) { return m * m / 4; }

}  // namespace

std::vector<CosetParam> enumerate_support(int q, int n) {
    std::vector<CosetParam> out;
    for (int i = 0; 2 * i + 3 <= n; ++i)
        for (int j = 1; j <= n - 2 - 2 * i; ++j) {
            out.push_back({CosetType::I, i, j});
            if (!even_q(q)) continue;
            if (j >= 2) out.push_back({CosetType::II, i, j, 0, i + j});
            if (j >= 3) out.push_back({CosetType::IIIa, i, j, j - 1});
            if (j >= 5)
                for (int u = 0; u < q; ++u) out.push_back({CosetType::IIIb, i, j, j - 2, 0, u});
            if (j >= 4)
                for (int u = 1; u < q; ++u) out.push_back({CosetType::IV, i, j, j - 1, i + j - 1, u});
        }
    return out;
}

int64_t closed_count(CosetType t, int q, int n) {
    if (t == CosetType::I) return n >= 1 ? floor_sq4(n - 1) : 0;
    if (!even_q(q) || n <= 3) return 0;
    switch (t) {
        case CosetType::II: return floor_sq4(n - 2);
        case CosetType::IIIa: return floor_sq4(n - 3);
        case CosetType::IIIb: return int64_t(q) * floor_sq4(n - 5);
        case CosetType::IV: return int64_t(q - 1) * floor_sq4(n - 4);
        default: return 0;
    }
}

int64_t count_type(const std::vector<CosetParam>& cs, CosetType t) {
    int64_t k = 0;
    for (const auto& c : cs) k += c.type == t;
    return k;
}

SubgroupKind coset_R_type(const CosetParam& c) {
    switch (c.type) {
        case CosetType::I:
        case CosetType::II: return SubgroupKind::Torus;
        case CosetType::IIIa: return SubgroupKind::Unip;
        case CosetType::IIIb:
        case CosetType::IV: return SubgroupKind::ArtinUnip;
    }
    return SubgroupKind::Custom;
}

SubgroupR diag_swap_subgroup(const FqCtx& F) {
    std::vector<GL22Elem> e;
    for (Fq a : F.units())
        for (Fq b : F.units()) e.push_back({gl2_diag(F, a, b), gl2_diag(F, b, a)});
    return make_subgroup(std::move(e), SubgroupKind::Custom);
}

std::string to_string(RgSource s) { return s == RgSource::Table ? "table" : "computed"; }

SubgroupR coset_R_group(const FqCtx& F, const CosetParam& c, RgSource src) {
    if (src == RgSource::Computed && c.type == CosetType::II) return diag_swap_subgroup(F);
    return subgroup_R(coset_R_type(c), F);
}

CosetParam al_partner(const CosetParam& c, int n) {
    CosetParam d = c;
    switch (c.type) {
        case CosetType::I: d.j = n - 2 * c.i - c.j - 1; break;
        case CosetType::II:
            d.j = n - 2 * c.i - c.j;
            d.k = n - c.i - c.j;
            break;
        case CosetType::IIIa:
            d.j = n - 2 * c.i - c.j + 1;
            d.r = d.j - 1;
            break;
        case CosetType::IIIb:
            d.j = n - 2 * c.i - c.j + 3;
            d.r = d.j - 2;
            break;
        case CosetType::IV:
            d.j = n - 2 * c.i - c.j + 2;
            d.r = d.j - 1;
            d.k = c.i + d.j - 1;
            break;
    }
    return d;
}

std::string to_string(ALKind k) { return k == ALKind::Plain ? "plain" : "twisted"; }

std::vector<ALFixedCoset> al_fixed_cosets(int q, int n) {
    std::vector<ALFixedCoset> out;
    for (const auto& c : enumerate_support(q, n)) {
        if (!(al_partner(c, n) == c)) continue;
        const bool plain = c.type == CosetType::II || c.type == CosetType::IV;
        out.push_back({c, plain ? ALKind::Plain : ALKind::Twisted});
    }
    return out;
}

int64_t al_fixed_closed_count(CosetType t, int q, int n) {
    const bool odd_n = n % 2 == 1;
    if (t == CosetType::I) return odd_n && n >= 3 ? (n - 1) / 2 : 0;
    if (!even_q(q)) return 0;
    switch (t) {
        case CosetType::II: return !odd_n && n >= 4 ? (n - 2) / 2 : 0;
        case CosetType::IIIa: return odd_n && n >= 3 ? (n - 3) / 2 : 0;
        case CosetType::IIIb: return odd_n && n >= 5 ? int64_t(q) * (n - 5) / 2 : 0;
        case CosetType::IV: return !odd_n && n >= 4 ? int64_t(q - 1) * (n - 4) / 2 : 0;
        default: return 0;
    }
}

int64_t F_even(int n, int q) {
    if (n <= 2) return 0;
    if (n == 3) return 1;
    const int64_t N = n;
    return 2 * N - 5 + int64_t(q) * ((3 * N * N + 1) / 4 - 6 * N + 12);
}

std::vector<SigmaLabel> irreducible_sigmas(const FqCtx& F) {
    std::vector<SigmaLabel> out;
    for (const auto& s : sigma_labels(F, true)) {
        if (s.constituent == Constituent::Full && is_valid_sigma(F, {s.theta1, s.theta2, Constituent::Plus}))
            continue;
        out.push_back(s);
    }
    return out;
}

SigmaClass classify_sigma(const FqCtx& F, const SigmaLabel& s, const ConstituentOracle* oracle) {
    SigmaClass c;
    c.central_trivial = central_character_trivial(F, s);
    c.self_twisted = is_self_twisted(F, s, oracle);
    c.constituent = s.constituent != Constituent::Full;
    c.omega_minus1 = omega_minus_one(F, s.theta2);
    if (!c.constituent && c.self_twisted && F.odd()) {
        const auto lw = lambda_omega_exponent(F, s);
        if (lw) c.lambda_omega_trivial = *lw == 0;
    }
    return c;
}

std::string class_key(const SigmaClass& c) {
    std::string k = c.self_twisted ? "self-twisted" : "not-self-twisted";
    k += c.constituent ? "/constituent" : "/full";
    if (c.lambda_omega_trivial) k += *c.lambda_omega_trivial ? "/lw=1" : "/lw=alpha";
    k += c.omega_minus1 == 1 ? "/w(-1)=+1" : "/w(-1)=-1";
    if (!c.central_trivial) k += "/central-nontrivial";
    return k;
}

int64_t dim_formula(const SigmaClass& c, int q, int n) {
    if (!c.central_trivial) return 0;
    if (even_q(q)) return F_even(n, q) * (c.self_twisted ? 1 : 2);
    const int64_t base = n >= 1 ? floor_sq4(n - 1) : 0;
    if (c.constituent) return base;
    return base * (c.self_twisted ? 2 : 4);
}

namespace {

SubgroupR u_image(const FqCtx& F, const SubgroupR& R) {
    std::vector<GL22Elem> e;
    for (const auto& x : R.elements) e.push_back(u_action(F, x));
    return make_subgroup(std::move(e), SubgroupKind::Custom);
}

/// dim tau^R under the multiplicity rule.
int64_t tau_fixed_dim(const FqCtx& F, const SigmaLabel& s, bool self_twisted, const SubgroupR& R,
                      const ConstituentOracle* oracle) {
    const int64_t d = fixed_dim(F, s, R, oracle);
    return self_twisted ? d : d + fixed_dim(F, s, u_image(F, R), oracle);
}

}  // namespace

DimReport assemble_dim(const FqCtx& F, const TauSpec& tau, int n, const ConstituentOracle* oracle, RgSource src) {
    const SigmaClass cls = classify_sigma(F, tau.sigma, oracle);
    const auto support = enumerate_support(F.q(), n);
    DimReport rep;
    for (const auto& c : support) {
        ++rep.counts[c.type];
        auto it = rep.dim_per_coset.find(c.type);
        if (it == rep.dim_per_coset.end())
            it = rep.dim_per_coset
                     .emplace(c.type, tau_fixed_dim(F, tau.sigma, cls.self_twisted, coset_R_group(F, c, src), oracle))
                     .first;
        rep.assembled += it->second;
    }
    rep.closed = dim_formula(cls, F.q(), n);
    rep.match = rep.assembled == rep.closed;
    return rep;
}

int64_t al_formula(const SigmaClass& c, int q, int n, int ext_sign) {
    if (n < 3 || !c.central_trivial) return 0;
    const int64_t N = n;
    if (n % 2 == 0) {
        if (!even_q(q)) return 0;
        return (1 + int64_t(q) * (N - 4) / 2) * (c.self_twisted ? 1 : 2);
    }
    if (!c.self_twisted) return 0;
    if (even_q(q)) return ext_sign * (n == 3 ? 1 : 1 + int64_t(q) * (N - 4));
    const int64_t half = (N - 1) / 2;
    if (c.constituent) return ext_sign * half;
    return c.lambda_omega_trivial.value_or(false) ? ext_sign * 2 * half : 0;
}

GL22Elem type_III_factor(const FqCtx& F, Fq u) {
    return {gl2_make(F, F.zero(), u, F.one(), F.zero()), gl2_make(F, F.zero(), F.one(), u, F.zero())};
}

namespace {

/// Residue of the unit attached to a type III coset; u = 1 + p c reduces to 1.
Fq type_III_unit(const FqCtx& F, const CosetParam&) { return F.one(); }

ExtElem twisted_element(const FqCtx& F, const CosetParam& c) {
    if (c.type == CosetType::I) return {gl22_identity(F), true};
    return {u_action(F, type_III_factor(F, type_III_unit(F, c))), true};
}

int64_t closed_contribution(const FqCtx& F, const TauSpec& tau, const SigmaClass& cls, const ALFixedCoset& fc,
                            const SubgroupR& R, const ConstituentOracle* oracle) {
    if (fc.kind == ALKind::Plain) return tau_fixed_dim(F, tau.sigma, cls.self_twisted, R, oracle);
    if (!cls.self_twisted) return induced_trace_zero(F, tau.sigma, twisted_element(F, fc.coset), R);
    const int64_t d = fixed_dim(F, tau.sigma, R, oracle);
    if (d == 0) return 0;
    if (!F.odd() || cls.constituent) return tau.ext_sign * d;
    return tau.ext_sign * twisted_trace_closed(F, tau.sigma, TwistOperator::SwapWW, coset_R_type(fc.coset));
}

CMat plus_extension(const Rep22& rep, const SigmaLabel& s) {
    if (s.constituent != Constituent::Full) return u_intertwiner(rep);
    const FqCtx& F = rep.field();
    const GL2Elem w = gl2_w(F);
    return rep(GL22Elem{w, w}) * rep.swap_operator();
}

}  // namespace

ALReport assemble_al(const FqCtx& F, const TauSpec& tau, int n, const ModelOracle* oracle, ALPath path,
                     RgSource src) {
    if (path == ALPath::Models && !oracle) throw OracleRequired("assemble_al: the models path needs the oracle");
    const bool models = path == ALPath::Models;
    const SigmaClass cls = classify_sigma(F, tau.sigma, oracle);
    ALReport rep;
    std::optional<Rep22> model;
    std::optional<CMat> T;
    std::optional<InducedRep> induced;
    if (models) {
        model = oracle->sigma_rep(tau.sigma);
        if (cls.self_twisted)
            T = double(tau.ext_sign) * plus_extension(*model, tau.sigma);
        else
            induced.emplace(*model);
    }
    for (const auto& fc : al_fixed_cosets(F.q(), n)) {
        const SubgroupR R = coset_R_group(F, fc.coset, src);
        int64_t v = 0;
        if (!models) {
            v = closed_contribution(F, tau, cls, fc, R, oracle);
        } else if (fc.kind == ALKind::Plain) {
            v = cls.self_twisted ? fixed_rank(*model, R) : certify_integer(induced->fixed_projector(R).trace());
        } else if (!cls.self_twisted) {
            v = induced_twisted_trace(*induced, twisted_element(F, fc.coset), R);
        } else {
            CMat O = *T;
            if (fc.coset.type != CosetType::I) O = O * (*model)(type_III_factor(F, type_III_unit(F, fc.coset)));
            v = twisted_trace(*model, O, R);
        }
        rep.contributions.push_back({fc.coset, fc.kind, v});
        rep.assembled += v;
    }
    rep.closed = al_formula(cls, F.q(), n, tau.ext_sign);
    if (rep.assembled == rep.closed)
        rep.relative_sign = 1;
    else if (rep.assembled == -rep.closed)
        rep.relative_sign = -1;
    rep.match = rep.relative_sign == 1 || (rep.relative_sign == -1 && cls.constituent);
    return rep;
}

}  // namespace siegel
