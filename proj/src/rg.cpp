#include "siegel/rg.hpp"

#include <sstream>

namespace siegel {

std::string to_string(CosetType t) {
    switch (t) {
        case CosetType::I: return "I";
        case CosetType::II: return "II";
        case CosetType::IIIa: return "IIIa";
        case CosetType::IIIb: return "IIIb";
        case CosetType::IV: return "IV";
    }
    return "?";
}

std::string to_string(const CosetParam& c) {
    std::ostringstream os;
    switch (c.type) {
        case CosetType::I: os << "t(" << c.i << "," << c.j << ")"; break;
        case CosetType::II: os << "t(" << c.i << "," << c.j << ")X(" << c.k << ")"; break;
        case CosetType::IIIa:
        case CosetType::IIIb: os << "Y(" << c.i << "," << c.j << "," << c.r << ";u" << c.uclass << ")"; break;
        case CosetType::IV: os << "Z(" << c.i << "," << c.j << ";u" << c.uclass << ")"; break;
    }
    return os.str();
}

int default_precision(int n, int i, int j) { return n + 2 * (2 * i + j) + 10; }

namespace {

using P = PadicScalar;

void require_even(const PadicCtx& C, const CosetParam& c) {
    if (c.type != CosetType::I && C.p() != 2) throw BadArgument("coset type " + to_string(c.type) + " needs q even");
}

P coset_unit(const PadicCtx& C, const CosetParam& c) {
    const FqCtx& F = C.residue_field();
    switch (c.type) {
        case CosetType::IIIb: return P::from_int(C, 1) + P::pi_pow(C, 1) * P::lift(C, F.from_index(c.uclass));
        case CosetType::IV:
            if (c.uclass == 0) throw BadArgument("type IV needs a unit class");
            return P::lift(C, F.from_index(c.uclass));
        default: return P::from_int(C, 1);
    }
}

/// One predicted element with the Levi data that should reduce to it.
struct Lift {
    GL22Elem expect;
    P a1, a2, a3, a4, lambda;
};

std::vector<Lift> lifts(const PadicCtx& C, const CosetParam& c) {
    const FqCtx& F = C.residue_field();
    require_even(C, c);
    std::vector<Lift> out;
    const P zero = P::zero(C), pi = P::pi_pow(C, 1);
    auto L = [&](Fq a) { return P::lift(C, a); };
    switch (c.type) {
        case CosetType::I:
        case CosetType::II:
            for (Fq a : F.units())
                for (Fq b : F.units())
                    for (Fq d : F.units()) {
                        GL22Elem e{gl2_diag(F, a, b), gl2_diag(F, d, F.div(F.mul(a, b), d))};
                        out.push_back({e, L(a), zero, zero, L(d), L(b) / L(d)});
                    }
            break;
        case CosetType::IIIa:
            // y = p^{j-1}: a4 = a1 + v p^j / y.
            for (Fq a : F.units())
                for (Fq v : F.elements()) {
                    GL22Elem e{gl2_lower(F, a, v), gl2_lower(F, a, v)};
                    out.push_back({e, L(a), zero, zero, L(a) + L(v) * pi, P::from_int(C, 1)});
                }
            break;
        case CosetType::IIIb: {
            const P u = coset_unit(C, c);
            for (Fq a : F.units())
                for (Fq v : F.elements())
                    for (Fq b : F.elements()) {
                        const Fq low = F.add(v, F.mul(a, F.add(F.mul(b, b), b)));
                        GL22Elem e{gl2_lower(F, a, low), gl2_lower(F, a, v)};
                        const P lam = P::from_int(C, 1) + P::from_int(C, 2) * L(b);
                        out.push_back({e, L(a), zero, zero, lam * L(a) + L(v) * pi * pi / u, lam});
                    }
            break;
        }
        case CosetType::IV: {
            const Fq cu = F.from_index(c.uclass);
            const P u = coset_unit(C, c);
            for (Fq a : F.units())
                for (Fq v : F.elements())
                    for (Fq b : F.elements()) {
                        const Fq low = F.div(F.add(v, F.mul(a, F.add(F.mul(b, b), b))), cu);
                        GL22Elem e{gl2_lower(F, a, low), gl2_lower(F, a, v)};
                        const P lam = P::from_int(C, 1) + pi * L(b);
                        const P a3 = P::pi_pow(C, c.i + 1) * L(a) * L(b) / u;
                        const P a4 = lam * L(a) + pi * L(v) / u;
                        out.push_back({e, L(a), zero, a3, a4, lam});
                    }
            break;
        }
    }
    return out;
}

}  // namespace

GSp4Elem coset_representative(const PadicCtx& C, const CosetParam& c) {
    require_even(C, c);
    switch (c.type) {
        case CosetType::I: return t_ij(C, c.i, c.j);
        case CosetType::II: return gsp4_mul(t_ij(C, c.i, c.j), X_k(C, c.k));
        case CosetType::IIIa:
        case CosetType::IIIb: return Y_ijr(C, c.i, c.j, c.r, coset_unit(C, c));
        case CosetType::IV: return Z_ij(C, c.i, c.j, coset_unit(C, c));
    }
    throw BadArgument("coset_representative: unknown type");
}

SubgroupR predicted_Rg(const FqCtx& F, const CosetParam& c) {
    if (c.type != CosetType::I && F.odd()) throw BadArgument("coset type " + to_string(c.type) + " needs q even");
    if (c.type == CosetType::I || c.type == CosetType::II) return subgroup_R(SubgroupKind::Torus, F);
    // Reuse the lift table through a throwaway context of minimal precision.
    const PadicCtx C(F.p(), F.f(), 4);
    std::vector<GL22Elem> e;
    for (const Lift& l : lifts(C, c)) e.push_back(l.expect);
    return make_subgroup(std::move(e), SubgroupKind::Custom);
}

RgResult compute_Rg_witness(const PadicCtx& C, const CosetParam& c, int n) {
    const FqCtx& F = C.residue_field();
    const GSp4Elem g = coset_representative(C, c);
    const GSp4Elem ginv = gsp4_inv(g);
    RgResult res;
    std::vector<GL22Elem> found;
    for (const Lift& l : lifts(C, c)) {
        ++res.attempts;
        const GSp4Elem s = levi(l.a1, l.a2, l.a3, l.a4, l.lambda);
        std::ostringstream tag;
        tag << "a1=" << l.a1.str() << " a3=" << l.a3.str() << " a4=" << l.a4.str() << " lambda=" << l.lambda.str();
        try {
            if (!in_Si(s, n)) {
                res.failures.push_back("lift not in Si(n): " + tag.str());
                continue;
            }
            const GSp4Elem x = gsp4_mul(gsp4_mul(g, s), ginv);
            if (!in_K(x)) {
                res.failures.push_back("conjugate not in K: " + tag.str());
                continue;
            }
            const GL22Elem r = reduce_K(x);
            ++res.accepted;
            found.push_back(r);
            if (r != l.expect) res.failures.push_back("reduction differs from prediction: " + tag.str());
        } catch (const PrecisionExhausted&) {
            ++res.precision_skips;
            res.failures.push_back("precision exhausted: " + tag.str());
        }
    }
    res.group = subgroup_closure(F, found);
    return res;
}

namespace {

class Proposer {
public:
    Proposer(const PadicCtx& C, int n, int kmax, uint64_t seed) : C_(C), n_(n), kmax_(kmax), rng_(seed) {}

    GSp4Elem next() {
        const P zero = P::zero(C_), one = P::from_int(C_, 1);
        std::array<P, 3> c{zero, zero, zero}, b{zero, zero, zero};
        if (coin(0.5))
            for (auto& x : c) x = coord(0.5, 0);
        if (coin(0.5))
            for (auto& x : b) x = coord(0.5, 0);
        std::array<P, 4> a{one, zero, zero, one};
        P lam = one;
        if (coin(0.25)) {
            // Unipotent-only Levi part.
            do {
                a[1] = coord(0.5, 0);
                a[2] = coord(0.5, 0);
            } while (!(one - a[1] * a[2]).is_unit());
        } else if (!coin(1.0 / 3)) {
            for (;;) {
                a[0] = random_unit(C_, rng_);
                a[1] = coord(0.5, 0);
                a[2] = coord(0.5, 0);
                switch (pick(3)) {
                    case 0: lam = one + coord(0.3, 1); break;
                    case 1: lam = -one + coord(0.3, 1); break;
                    default: lam = random_unit(C_, rng_);
                }
                switch (pick(4)) {
                    case 0: a[3] = lam * a[0] + coord(0.3, 1); break;
                    case 1: a[3] = a[0] + coord(0.3, 1); break;
                    case 2: a[3] = a[0] / lam + coord(0.3, 1); break;
                    default: a[3] = random_unit(C_, rng_);
                }
                if (lam.is_unit() && (a[0] * a[3] - a[1] * a[2]).is_unit()) break;
            }
        }
        return siegel_element(n_, c, a, lam, b);
    }

private:
    bool coin(double pr) { return std::bernoulli_distribution(pr)(rng_); }
    int pick(int m) { return std::uniform_int_distribution<int>(0, m - 1)(rng_); }
    /// Zero with probability pzero, else p^k * unit with k uniform in [kmin, kmax].
    P coord(double pzero, int kmin) {
        if (coin(pzero)) return P::zero(C_);
        const int k = std::uniform_int_distribution<int>(kmin, kmax_)(rng_);
        return P::pi_pow(C_, k) * random_unit(C_, rng_);
    }

    const PadicCtx& C_;
    int n_, kmax_;
    std::mt19937_64 rng_;
};

}  // namespace

RgResult compute_Rg_sample(const PadicCtx& C, const GSp4Elem& g, int n, const RgOptions& opt) {
    const FqCtx& F = C.residue_field();
    const GSp4Elem ginv = gsp4_inv(g);
    Proposer prop(C, n, opt.kmax >= 0 ? opt.kmax : 2 * n + 4, opt.seed);
    RgResult res;
    res.group = make_subgroup({gl22_identity(F)}, SubgroupKind::Custom);
    std::vector<GL22Elem> gens;
    int quiet = 0;
    while (quiet < opt.window) {
        if (res.attempts >= opt.max_attempts)
            throw StabilizationFailure("R_g sampling did not stabilize after " + std::to_string(res.attempts) +
                                       " proposals (" + std::to_string(res.accepted) + " accepted)");
        ++res.attempts;
        try {
            const GSp4Elem x = gsp4_mul(gsp4_mul(g, prop.next()), ginv);
            if (!in_K(x)) continue;
            const GL22Elem r = reduce_K(x);
            ++res.accepted;
            if (res.group.contains(r)) {
                ++quiet;
                continue;
            }
            gens.push_back(r);
            res.group = subgroup_closure(F, gens);
            quiet = 0;
        } catch (const PrecisionExhausted&) {
            ++res.precision_skips;
        }
    }
    return res;
}

RgResult compute_Rg(const PadicCtx& C, const CosetParam& c, int n, const RgOptions& opt) {
    RgResult w = compute_Rg_witness(C, c, n);
    RgResult s = compute_Rg_sample(C, coset_representative(C, c), n, opt);
    std::vector<GL22Elem> gens = w.group.elements;
    gens.insert(gens.end(), s.group.elements.begin(), s.group.elements.end());
    RgResult out;
    out.group = subgroup_closure(C.residue_field(), gens);
    out.attempts = w.attempts + s.attempts;
    out.accepted = w.accepted + s.accepted;
    out.precision_skips = w.precision_skips + s.precision_skips;
    out.failures = std::move(w.failures);
    return out;
}

const std::vector<OffSupportTuple>& off_support_panel() {
    static const std::vector<OffSupportTuple> panel{
        {3, 0, 2, -1, -1, -1}, {4, 0, 3, -1, -1, -1}, {4, 1, 1, -1, -1, -1}, {5, 1, 2, -1, -1, -1},
        {6, 2, 1, -1, -1, -1}, {6, 0, 5, -1, 2, 3},   {5, 0, 4, 2, -1, -1},   {4, 0, 0, -1, -1, -1},
        {5, 1, 0, -1, -1, -1}, {5, 1, 0, 1, -1, -1},  {6, 2, -1, -1, -1, -1}, {5, 0, 2, 1, -1, -1},
        {6, 1, 2, 2, -1, -1},  {6, 0, 3, -1, 1, 2},   {6, 0, 2, 1, 1, -1},    {6, 0, 3, -1, 2, 2},
        {6, 0, 3, -1, -1, 2},  {6, 1, 1, -1, -1, 1},  {6, 0, 4, -1, 3, 2},    {5, 0, 3, -1, 2, 1}};
    return panel;
}

GSp4Elem off_support_representative(const PadicCtx& C, const OffSupportTuple& t) {
    auto coord = [&](int v) { return v < 0 ? P::zero(C) : P::pi_pow(C, v); };
    return gsp4_mul(t_ij(C, t.i, t.j), S_xyz(coord(t.vx), coord(t.vy), coord(t.vz)));
}

int off_support_precision(const OffSupportTuple& t) { return default_precision(t.n, t.i, std::max(t.j, 0)) + 4; }

std::string to_string(const OffSupportTuple& t) {
    std::ostringstream os;
    auto v = [](int e) { return e < 0 ? std::string("0") : "p^" + std::to_string(e); };
    os << "n=" << t.n << " t(" << t.i << "," << t.j << ")S(" << v(t.vx) << "," << v(t.vy) << "," << v(t.vz) << ")";
    return os.str();
}

}  // namespace siegel
