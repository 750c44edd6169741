#include "siegel/gl22.hpp"

#include <algorithm>
#include <unordered_set>

#include "siegel/error.hpp"

namespace siegel {

GL2Elem gl2_identity(const FqCtx& F) { return {F.one(), F.zero(), F.zero(), F.one()}; }
GL2Elem gl2_make(const FqCtx&, Fq a, Fq b, Fq c, Fq d) { return {a, b, c, d}; }
GL2Elem gl2_diag(const FqCtx& F, Fq a, Fq d) { return {a, F.zero(), F.zero(), d}; }
GL2Elem gl2_lower(const FqCtx& F, Fq a, Fq u) { return {a, F.zero(), u, a}; }
GL2Elem gl2_w(const FqCtx& F) { return {F.zero(), F.one(), F.neg(F.one()), F.zero()}; }

Fq gl2_det(const FqCtx& F, const GL2Elem& g) { return F.sub(F.mul(g.a, g.d), F.mul(g.b, g.c)); }
Fq gl2_trace(const FqCtx& F, const GL2Elem& g) { return F.add(g.a, g.d); }

GL2Elem gl2_mul(const FqCtx& F, const GL2Elem& x, const GL2Elem& y) {
    return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
            F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

GL2Elem gl2_inv(const FqCtx& F, const GL2Elem& g) {
    const Fq di = F.inv(gl2_det(F, g));
    return {F.mul(g.d, di), F.neg(F.mul(g.b, di)), F.neg(F.mul(g.c, di)), F.mul(g.a, di)};
}

bool gl2_is_scalar(const GL2Elem& g) { return g.b.is_zero() && g.c.is_zero() && g.a == g.d; }

std::vector<GL2Elem> enumerate_gl2(const FqCtx& F) {
    std::vector<GL2Elem> out;
    const auto el = F.elements();
    for (Fq a : el)
        for (Fq b : el)
            for (Fq c : el)
                for (Fq d : el) {
                    GL2Elem g{a, b, c, d};
                    if (!gl2_det(F, g).is_zero()) out.push_back(g);
                }
    return out;
}

int64_t gl2_order(int q) { return int64_t(q * q - 1) * (q * q - q); }

GL2Index::GL2Index(const FqCtx& F) : q_(F.q()), elems_(enumerate_gl2(F)), table_(q_ * q_ * q_ * q_, -1) {
    for (int i = 0; i < size(); ++i) table_[code(elems_[i])] = i;
}

GL22Elem gl22_identity(const FqCtx& F) { return {gl2_identity(F), gl2_identity(F)}; }

GL22Elem gl22_mul(const FqCtx& F, const GL22Elem& x, const GL22Elem& y) {
    return {gl2_mul(F, x.first, y.first), gl2_mul(F, x.second, y.second)};
}

GL22Elem gl22_inv(const FqCtx& F, const GL22Elem& x) { return {gl2_inv(F, x.first), gl2_inv(F, x.second)}; }

GL22Elem gl22_conj(const FqCtx& F, const GL22Elem& by, const GL22Elem& x) {
    return gl22_mul(F, gl22_mul(F, by, x), gl22_inv(F, by));
}

bool gl22_valid(const FqCtx& F, const GL22Elem& x) {
    const Fq d = gl2_det(F, x.first);
    return !d.is_zero() && d == gl2_det(F, x.second);
}

uint32_t gl22_key(const GL22Elem& x) {
    const Fq v[8] = {x.first.a, x.first.b, x.first.c, x.first.d,
                     x.second.a, x.second.b, x.second.c, x.second.d};
    uint32_t k = 0;
    for (Fq e : v) k = (k << 4) | e.v;
    return k;
}

std::vector<GL22Elem> enumerate_gl22(const FqCtx& F) {
    if (F.q() > 9) throw UnsupportedSize("enumerate_gl22: q must be <= 9");
    const auto g = enumerate_gl2(F);
    std::vector<std::vector<const GL2Elem*>> by_det(F.q());
    for (const auto& x : g) by_det[gl2_det(F, x).v].push_back(&x);
    std::vector<GL22Elem> out;
    out.reserve(gl22_order(F.q()));
    for (const auto& x : g)
        for (const GL2Elem* y : by_det[gl2_det(F, x).v]) out.push_back({x, *y});
    return out;
}

int64_t gl22_order(int q) { return gl2_order(q) * gl2_order(q) / (q - 1); }

GL22Elem u_action(const FqCtx& F, const GL22Elem& x) {
    const GL2Elem w = gl2_w(F);
    const GL2Elem wi = gl2_inv(F, w);
    return {gl2_mul(F, gl2_mul(F, w, x.second), wi), gl2_mul(F, gl2_mul(F, w, x.first), wi)};
}

ExtElem ext_mul(const FqCtx& F, const ExtElem& x, const ExtElem& y) {
    const GL22Elem moved = x.eps ? u_action(F, y.base) : y.base;
    return {gl22_mul(F, x.base, moved), x.eps != y.eps};
}

ExtElem ext_inv(const FqCtx& F, const ExtElem& x) {
    // (b u^e)^-1 = u^-e b^-1 = u^e(b^-1) u^e, with u^2 = 1.
    const GL22Elem bi = gl22_inv(F, x.base);
    return {x.eps ? u_action(F, bi) : bi, x.eps};
}

std::string to_string(SubgroupKind k) {
    switch (k) {
        case SubgroupKind::Torus: return "Torus";
        case SubgroupKind::Unip: return "Unip";
        case SubgroupKind::ArtinUnip: return "ArtinUnip";
        case SubgroupKind::U1: return "U1";
        case SubgroupKind::U2: return "U2";
        case SubgroupKind::Custom: return "Custom";
    }
    return "Custom";
}

bool SubgroupR::contains(const GL22Elem& x) const { return std::binary_search(elements.begin(), elements.end(), x); }

bool SubgroupR::subset_of(const SubgroupR& other) const {
    return std::includes(other.elements.begin(), other.elements.end(), elements.begin(), elements.end());
}

SubgroupR make_subgroup(std::vector<GL22Elem> elems, SubgroupKind label) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return SubgroupR{std::move(elems), label};
}

SubgroupR subgroup_R(SubgroupKind kind, const FqCtx& F) {
    std::vector<GL22Elem> e;
    const GL2Elem I = gl2_identity(F);
    switch (kind) {
        case SubgroupKind::Torus:
            for (Fq a : F.units())
                for (Fq b : F.units())
                    for (Fq c : F.units())
                        e.push_back({gl2_diag(F, a, b), gl2_diag(F, c, F.div(F.mul(a, b), c))});
            break;
        case SubgroupKind::Unip:
            for (Fq a : F.units())
                for (Fq u : F.elements()) e.push_back({gl2_lower(F, a, u), gl2_lower(F, a, u)});
            break;
        case SubgroupKind::ArtinUnip:
            if (F.odd()) throw BadArgument("subgroup_R: ArtinUnip requires q even");
            for (Fq a : F.units())
                for (Fq b : F.elements())
                    for (Fq u : F.elements()) {
                        const Fq shift = F.mul(a, F.add(F.mul(b, b), b));
                        e.push_back({gl2_lower(F, a, F.add(u, shift)), gl2_lower(F, a, u)});
                    }
            break;
        case SubgroupKind::U1:
            for (Fq u : F.elements()) e.push_back({gl2_lower(F, F.one(), u), I});
            break;
        case SubgroupKind::U2:
            for (Fq u : F.elements()) e.push_back({I, gl2_lower(F, F.one(), u)});
            break;
        case SubgroupKind::Custom:
            throw BadArgument("subgroup_R: Custom is not a standard subgroup");
    }
    return make_subgroup(std::move(e), kind);
}

SubgroupR subgroup_closure(const FqCtx& F, std::span<const GL22Elem> gens, SubgroupKind label) {
    std::unordered_set<uint32_t> seen;
    std::vector<GL22Elem> elems{gl22_identity(F)};
    seen.insert(gl22_key(elems[0]));
    // Breadth-first: right-multiply every element by every generator.
    for (size_t i = 0; i < elems.size(); ++i)
        for (const auto& g : gens) {
            const GL22Elem y = gl22_mul(F, elems[i], g);
            if (seen.insert(gl22_key(y)).second) elems.push_back(y);
        }
    return make_subgroup(std::move(elems), label);
}

bool is_subgroup(const FqCtx& F, const SubgroupR& R) {
    if (!R.contains(gl22_identity(F))) return false;
    for (const auto& x : R.elements) {
        if (!R.contains(gl22_inv(F, x))) return false;
        for (const auto& y : R.elements)
            if (!R.contains(gl22_mul(F, x, y))) return false;
    }
    return true;
}

SubgroupR conjugate_subgroup(const FqCtx& F, const GL22Elem& x, const SubgroupR& R) {
    std::vector<GL22Elem> e;
    e.reserve(R.size());
    const GL22Elem xi = gl22_inv(F, x);
    for (const auto& r : R.elements) e.push_back(gl22_mul(F, gl22_mul(F, x, r), xi));
    return make_subgroup(std::move(e), SubgroupKind::Custom);
}

namespace {

template <class Accept>
std::optional<GL22Elem> search_conjugator(const FqCtx& F, const SubgroupR& A, Accept accept) {
    for (const auto& x : enumerate_gl22(F)) {
        const GL22Elem xi = gl22_inv(F, x);
        bool ok = true;
        for (const auto& a : A.elements)
            if (!accept(gl22_mul(F, gl22_mul(F, x, a), xi))) {
                ok = false;
                break;
            }
        if (ok) return x;
    }
    return std::nullopt;
}

}  // namespace

std::optional<GL22Elem> conjugate_subgroups(const FqCtx& F, const SubgroupR& A, const SubgroupR& B) {
    if (A.size() != B.size()) return std::nullopt;
    if (A == B) return gl22_identity(F);
    return search_conjugator(F, A, [&](const GL22Elem& y) { return B.contains(y); });
}

bool contains_conjugate(const FqCtx& F, const SubgroupR& R, const SubgroupR& S) {
    if (S.size() > R.size() || R.size() % S.size() != 0) return false;
    return search_conjugator(F, S, [&](const GL22Elem& y) { return R.contains(y); }).has_value();
}

std::vector<GL22Elem> gl22_generators(const FqCtx& F) {
    const GL2Elem I = gl2_identity(F);
    const GL2Elem up{F.one(), F.one(), F.zero(), F.one()};
    const GL2Elem lo{F.one(), F.zero(), F.one(), F.one()};
    const GL2Elem d = gl2_diag(F, F.gen(), F.one());
    return {{up, I}, {lo, I}, {I, up}, {I, lo}, {d, d}};
}

}  // namespace siegel
