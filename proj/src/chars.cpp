#include "siegel/chars.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "siegel/error.hpp"

namespace siegel {

namespace {

int floor_mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}

int order2(const FqCtx& F) { return F.q2() - 1; }

bool values_equal(const CharValue& a, const CharValue& b) { return std::abs(a.value() - b.value()) < 1e-9; }

}  // namespace

std::string to_string(const SigmaLabel& s) {
    std::string out = "(" + std::to_string(s.theta1.k) + "," + std::to_string(s.theta2.k) + ")";
    if (s.constituent == Constituent::Plus) out += "+";
    if (s.constituent == Constituent::Minus) out += "-";
    return out;
}

std::string to_string(Constituent c) {
    switch (c) {
        case Constituent::Full: return "Full";
        case Constituent::Plus: return "Plus";
        case Constituent::Minus: return "Minus";
    }
    return "Full";
}

std::string to_string(TwistOperator op) {
    switch (op) {
        case TwistOperator::Swap: return "swap";
        case TwistOperator::WW: return "ww";
        case TwistOperator::SwapWW: return "swap_ww";
    }
    return "swap";
}

ClassType class_type(const FqCtx& F, const GL2Elem& g) {
    const auto r = F.roots(gl2_trace(F, g), gl2_det(F, g));
    if (r.size() == 2) return ClassType::Split;
    if (r.empty()) return ClassType::Elliptic;
    return gl2_is_scalar(g) ? ClassType::Scalar : ClassType::NonSemisimple;
}

std::vector<GL2Class> gl2_classes(const FqCtx& F) {
    const int64_t q = F.q();
    std::vector<GL2Class> out;
    for (Fq a : F.units()) {
        out.push_back({ClassType::Scalar, gl2_diag(F, a, a), 1});
        out.push_back({ClassType::NonSemisimple, gl2_lower(F, a, F.one()), q * q - 1});
    }
    for (Fq a : F.units())
        for (Fq b : F.units())
            if (a.v < b.v) out.push_back({ClassType::Split, gl2_diag(F, a, b), q * (q + 1)});
    for (Fq t : F.elements())
        for (Fq d : F.units())
            if (F.roots(t, d).empty())
                out.push_back({ClassType::Elliptic, GL2Elem{F.zero(), F.neg(d), F.one(), t}, q * q - q});
    return out;
}

bool is_cuspidal(const FqCtx& F, CuspidalLabel t) { return floor_mod(t.k, F.q() + 1) != 0; }

CuspidalLabel frobenius(const FqCtx& F, CuspidalLabel t) { return {floor_mod(int64_t(t.k) * F.q(), order2(F))}; }

CuspidalLabel canonical(const FqCtx& F, CuspidalLabel t) {
    const CuspidalLabel a{floor_mod(t.k, order2(F))};
    return std::min(a, frobenius(F, a));
}

std::vector<CuspidalLabel> cuspidal_classes(const FqCtx& F) {
    std::vector<CuspidalLabel> out;
    for (int k = 0; k < order2(F); ++k) {
        const CuspidalLabel t{k};
        if (is_cuspidal(F, t) && canonical(F, t) == t) out.push_back(t);
    }
    return out;
}

CuspidalLabel twist_by_lambda(const FqCtx& F, CuspidalLabel t, int l) {
    return {floor_mod(int64_t(t.k) + int64_t(l) * (F.q() + 1), order2(F))};
}

CharValue theta_value(const FqCtx& F, CuspidalLabel t, Fq2 x) {
    if (x.is_zero()) throw BadArgument("theta_value: zero argument");
    return CharValue::root_of_unity(order2(F), int64_t(t.k) * x.log());
}

CharValue central_char(const FqCtx& F, CuspidalLabel t, Fq a) { return theta_value(F, t, F.embed(a)); }

int omega_exponent(const FqCtx& F, CuspidalLabel t) { return floor_mod(t.k, F.q() - 1); }

int omega_minus_one(const FqCtx& F, CuspidalLabel t) {
    return certify_integer(central_char(F, t, F.neg(F.one()))) > 0 ? 1 : -1;
}

CharValue cuspidal_char(const FqCtx& F, CuspidalLabel t, const GL2Elem& g) {
    const Fq tr = gl2_trace(F, g), det = gl2_det(F, g);
    if (det.is_zero()) throw BadArgument("cuspidal_char: singular matrix");
    const auto r = F.roots(tr, det);
    if (r.size() == 2) return CharValue(0.0);
    if (r.size() == 1) {
        const CharValue w = central_char(F, t, r[0]);
        return gl2_is_scalar(g) ? w * double(F.q() - 1) : -w;
    }
    const int L = F.elliptic_root_log(tr, det);
    const CharValue a = CharValue::root_of_unity(order2(F), int64_t(t.k) * L);
    const CharValue b = CharValue::root_of_unity(order2(F), int64_t(t.k) * L * F.q());
    return -(a + b);
}

bool split_restriction(const FqCtx& F, CuspidalLabel t) {
    if (!F.odd()) return false;
    for (int j = 0; j < order2(F); ++j) {
        const Fq2 x = F.from_log2(j);
        const CharValue lhs = CharValue::root_of_unity(order2(F), int64_t(t.k) * (F.q() - 1) * j);
        const double alpha = F.is_square(F.norm(x)) ? 1.0 : -1.0;
        if (!values_equal(lhs, CharValue(alpha))) return false;
    }
    return true;
}

bool is_valid_sigma(const FqCtx& F, const SigmaLabel& s) {
    if (!is_cuspidal(F, s.theta1) || !is_cuspidal(F, s.theta2)) return false;
    if (floor_mod(int64_t(s.theta1.k) + s.theta2.k, F.q() - 1) != 0) return false;
    if (s.constituent != Constituent::Full)
        return F.odd() && split_restriction(F, s.theta1) && split_restriction(F, s.theta2);
    return true;
}

SigmaLabel canonical_sigma(const FqCtx& F, const SigmaLabel& s) {
    SigmaLabel best = s;
    bool first = true;
    for (int l = 0; l < F.q() - 1; ++l) {
        const SigmaLabel cand{canonical(F, twist_by_lambda(F, s.theta1, l)),
                              canonical(F, twist_by_lambda(F, s.theta2, -l)), s.constituent};
        if (first || std::tie(cand.theta1, cand.theta2) < std::tie(best.theta1, best.theta2)) best = cand;
        first = false;
    }
    return best;
}

std::vector<SigmaLabel> sigma_labels(const FqCtx& F, bool include_constituents) {
    std::vector<SigmaLabel> out;
    const auto cls = cuspidal_classes(F);
    for (auto t1 : cls)
        for (auto t2 : cls) {
            const SigmaLabel s{t1, t2, Constituent::Full};
            if (!is_valid_sigma(F, s) || !(canonical_sigma(F, s) == s)) continue;
            out.push_back(s);
            if (include_constituents && F.odd() && is_valid_sigma(F, SigmaLabel{t1, t2, Constituent::Plus})) {
                out.push_back({t1, t2, Constituent::Plus});
                out.push_back({t1, t2, Constituent::Minus});
            }
        }
    return out;
}

bool central_character_trivial(const FqCtx& F, const SigmaLabel& s) {
    for (Fq a : F.units())
        for (Fq b : F.units()) {
            if (F.mul(a, a) != F.mul(b, b)) continue;
            const CharValue v = central_char(F, s.theta1, a) * central_char(F, s.theta2, b);
            if (!values_equal(v, CharValue(1.0))) return false;
        }
    return true;
}

int64_t sigma_dim(const FqCtx& F, const SigmaLabel& s) {
    const int64_t d = int64_t(F.q() - 1) * (F.q() - 1);
    return s.constituent == Constituent::Full ? d : d / 2;
}

CharValue sigma_char(const FqCtx& F, const SigmaLabel& s, const GL22Elem& x, const ConstituentOracle* oracle) {
    if (s.constituent == Constituent::Full)
        return cuspidal_char(F, s.theta1, x.first) * cuspidal_char(F, s.theta2, x.second);
    if (oracle == nullptr) throw OracleRequired("sigma_char: Plus/Minus constituents need the model oracle");
    return oracle->constituent_char(s, x);
}

int64_t fixed_dim(const FqCtx& F, const SigmaLabel& s, const SubgroupR& R, const ConstituentOracle* oracle) {
    CharValue sum(0.0);
    for (const auto& r : R.elements) sum += sigma_char(F, s, r, oracle);
    const int64_t d = certify_integer(sum * (1.0 / double(R.size())));
    if (d < 0) throw NotAnInteger("fixed_dim: negative dimension");
    return d;
}

CharValue DiagonalConstituentChars::constituent_char(const SigmaLabel& sigma, const GL22Elem& x) const {
    if (!x.first.b.is_zero() || !x.first.c.is_zero())
        throw OracleRequired("constituent character off the diagonal needs the model oracle");
    const SigmaLabel full{sigma.theta1, sigma.theta2, Constituent::Full};
    return sigma_char(*F_, full, x) * 0.5;
}

bool DiagonalConstituentChars::constituent_self_twisted(const SigmaLabel&) const {
    throw OracleRequired("self-twist of a constituent needs the model oracle");
}

int64_t lemma31_closed(char which, int q, int omega_minus1) {
    const bool odd = q % 2 == 1;
    switch (which) {
        case 'a': return odd ? 1 + omega_minus1 : 1;
        case 'b':
            if (!odd) throw BadArgument("lemma31_closed: case b needs q odd");
            return q % 4 == 3 ? 1 : 0;
        case 'c': return q - 1;
        case 'd':
            if (odd) throw BadArgument("lemma31_closed: case d needs q even");
            return 1;
        default: throw BadArgument("lemma31_closed: case must be a, b, c or d");
    }
}

bool same_full_character(const FqCtx& F, const SigmaLabel& a, const SigmaLabel& b) {
    const auto cls = gl2_classes(F);
    for (const auto& c1 : cls)
        for (const auto& c2 : cls) {
            if (gl2_det(F, c1.rep) != gl2_det(F, c2.rep)) continue;
            const GL22Elem x{c1.rep, c2.rep};
            if (!values_equal(sigma_char(F, a, x), sigma_char(F, b, x))) return false;
        }
    return true;
}

SigmaLabel u1_twist(const FqCtx& F, const SigmaLabel& s, const ConstituentOracle* oracle) {
    if (s.constituent == Constituent::Full) return {s.theta2, s.theta1, Constituent::Full};
    // sigma^u is a constituent of [rho2 x rho1]; the oracle decides which one.
    if (oracle == nullptr) throw OracleRequired("u1_twist: constituents need the model oracle");
    const SigmaLabel swapped{s.theta2, s.theta1, s.constituent};
    const auto all = enumerate_gl22(F);
    for (Constituent c : {Constituent::Plus, Constituent::Minus}) {
        const SigmaLabel cand{s.theta2, s.theta1, c};
        bool same = true;
        for (size_t i = 0; i < all.size() && same; i += 7)
            same = values_equal(oracle->constituent_char(s, u_action(F, all[i])), oracle->constituent_char(cand, all[i]));
        if (same) return cand;
    }
    return swapped;
}

bool is_self_twisted(const FqCtx& F, const SigmaLabel& s, const ConstituentOracle* oracle) {
    if (s.constituent == Constituent::Full) return same_full_character(F, s, u1_twist(F, s));
    if (oracle == nullptr) throw OracleRequired("is_self_twisted: constituents need the model oracle");
    return oracle->constituent_self_twisted(s);
}

std::optional<int> lambda_omega_exponent(const FqCtx& F, const SigmaLabel& s) {
    if (s.constituent != Constituent::Full) return std::nullopt;
    for (int l = 0; l < F.q() - 1; ++l) {
        const SigmaLabel cand{twist_by_lambda(F, s.theta2, l), s.theta2, Constituent::Full};
        if (same_full_character(F, s, cand)) return floor_mod(l + omega_exponent(F, s.theta2), F.q() - 1);
    }
    return std::nullopt;
}

int64_t twisted_trace_closed(const FqCtx& F, const SigmaLabel& s, TwistOperator op, SubgroupKind R) {
    const auto lw = lambda_omega_exponent(F, s);
    if (!lw) throw HypothesisViolated("twisted_trace_closed: sigma is not of the form [lambda rho x rho]");
    if (omega_minus_one(F, s.theta2) != 1) throw HypothesisViolated("twisted_trace_closed: omega_rho(-1) != 1");
    const int q = F.q();
    if (F.odd() && split_restriction(F, s.theta2))
        throw HypothesisViolated("twisted_trace_closed: full sigma is reducible; use its constituents");
    if ((2 * *lw) % (q - 1) != 0) throw HypothesisViolated("twisted_trace_closed: (lambda omega_rho)^2 != 1");
    if (!F.odd()) {
        if (op != TwistOperator::Swap && R != SubgroupKind::Torus)
            throw HypothesisViolated("twisted_trace_closed: (w,w) only normalizes the torus");
        switch (R) {
            case SubgroupKind::Torus: return lemma31_closed('a', q, 1);
            case SubgroupKind::Unip: return lemma31_closed('c', q, 1);
            case SubgroupKind::ArtinUnip: return lemma31_closed('d', q, 1);
            default: throw HypothesisViolated("twisted_trace_closed: unsupported subgroup");
        }
    }
    if (R != SubgroupKind::Torus) throw HypothesisViolated("twisted_trace_closed: q odd needs the torus");
    if (*lw == 0) return 2;
    switch (op) {
        case TwistOperator::WW: return 2 * (((q - 3) / 2) % 2 == 0 ? 1 : -1);
        case TwistOperator::Swap:
        case TwistOperator::SwapWW: return 0;
    }
    return 0;
}

bool ext_normalizes(const FqCtx& F, const ExtElem& elem, const SubgroupR& R) {
    const ExtElem inv = ext_inv(F, elem);
    for (const auto& r : R.elements) {
        const ExtElem c = ext_mul(F, ext_mul(F, elem, ExtElem{r, false}), inv);
        if (c.eps || !R.contains(c.base)) return false;
    }
    return true;
}

int64_t induced_trace_zero(const FqCtx& F, const SigmaLabel& s, const ExtElem& elem, const SubgroupR& R) {
    if (s.constituent == Constituent::Full && is_self_twisted(F, s))
        throw HypothesisViolated("induced_trace_zero: sigma is self-twisted");
    if (!elem.eps) throw HypothesisViolated("induced_trace_zero: element is not in the u-coset");
    if (!ext_normalizes(F, elem, R)) throw HypothesisViolated("induced_trace_zero: element does not normalize R");
    return 0;
}

}  // namespace siegel
