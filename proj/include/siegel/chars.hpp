#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "siegel/error.hpp"
#include "siegel/gl22.hpp"
#include "siegel/numerics.hpp"

namespace siegel {

/// theta(g2^j) = zeta_{q^2-1}^{k j}; labels k and kq give the same cuspidal rho_theta.
struct CuspidalLabel {
    int k = 0;
    friend bool operator==(CuspidalLabel, CuspidalLabel) = default;
    friend auto operator<=>(CuspidalLabel, CuspidalLabel) = default;
};

enum class Constituent { Full, Plus, Minus };
std::string to_string(Constituent c);

/// An irreducible constituent of [rho_theta1 x rho_theta2] restricted to GL_{2,2}(q).
struct SigmaLabel {
    CuspidalLabel theta1, theta2;
    Constituent constituent = Constituent::Full;
    friend bool operator==(const SigmaLabel&, const SigmaLabel&) = default;
};

/// "(k1,k2)" with a trailing + or - for constituents.
std::string to_string(const SigmaLabel& s);

struct OracleRequired : Error {
    explicit OracleRequired(const std::string& w) : Error(ErrorKind::BadArgument, w) {}
};

/// Character access for the Plus/Minus constituents, which have no closed form here.
/// Implemented by the explicit-model oracle.
class ConstituentOracle {
public:
    virtual ~ConstituentOracle() = default;
    virtual CharValue constituent_char(const SigmaLabel& sigma, const GL22Elem& x) const = 0;
    virtual bool constituent_self_twisted(const SigmaLabel& sigma) const = 0;
};

/// Constituent characters on elements (x1, x2) with x1 diagonal. (diag(e,1), 1) swaps the two
/// constituents and commutes with such elements, so each takes half the Full character there.
/// Anything else throws OracleRequired. Works for every q, unlike the model oracle.
class DiagonalConstituentChars : public ConstituentOracle {
public:
    explicit DiagonalConstituentChars(const FqCtx& F) : F_(&F) {}
    CharValue constituent_char(const SigmaLabel& sigma, const GL22Elem& x) const override;
    bool constituent_self_twisted(const SigmaLabel& sigma) const override;

private:
    const FqCtx* F_;
};

/// GL_2(q) conjugacy classes by type.
enum class ClassType { Scalar, NonSemisimple, Split, Elliptic };
struct GL2Class {
    ClassType type;
    GL2Elem rep;
    int64_t size;
};
ClassType class_type(const FqCtx& F, const GL2Elem& g);
std::vector<GL2Class> gl2_classes(const FqCtx& F);

bool is_cuspidal(const FqCtx& F, CuspidalLabel t);
CuspidalLabel frobenius(const FqCtx& F, CuspidalLabel t);  // theta^q
/// One label per cuspidal representation (the smaller of k, kq).
std::vector<CuspidalLabel> cuspidal_classes(const FqCtx& F);
CuspidalLabel canonical(const FqCtx& F, CuspidalLabel t);
/// theta * (lambda o N) with lambda(g^m) = zeta_{q-1}^{l m}.
CuspidalLabel twist_by_lambda(const FqCtx& F, CuspidalLabel t, int l);

CharValue theta_value(const FqCtx& F, CuspidalLabel t, Fq2 x);
CharValue central_char(const FqCtx& F, CuspidalLabel t, Fq a);  // omega_theta(a) = theta(a)
/// omega_theta(-1) as +-1.
int omega_minus_one(const FqCtx& F, CuspidalLabel t);
/// Exponent e with omega_theta(g^m) = zeta_{q-1}^{e m}.
int omega_exponent(const FqCtx& F, CuspidalLabel t);

CharValue cuspidal_char(const FqCtx& F, CuspidalLabel t, const GL2Elem& g);

/// theta^{q-1} == alpha o N as functions on F_{q^2}^x (alpha the quadratic character). False for q even.
bool split_restriction(const FqCtx& F, CuspidalLabel t);

/// omega_1 omega_2 = 1, plus the constituent rules.
bool is_valid_sigma(const FqCtx& F, const SigmaLabel& s);
/// Representative of the label up to [lambda rho1 x lambda^-1 rho2] = [rho1 x rho2] and Frobenius.
SigmaLabel canonical_sigma(const FqCtx& F, const SigmaLabel& s);
/// All valid Full labels with theta1, theta2 from cuspidal_classes, plus Plus/Minus where allowed.
std::vector<SigmaLabel> sigma_labels(const FqCtx& F, bool include_constituents);
/// omega_sigma trivial on the whole center {(aI, bI) : a^2 = b^2}.
bool central_character_trivial(const FqCtx& F, const SigmaLabel& s);

CharValue sigma_char(const FqCtx& F, const SigmaLabel& s, const GL22Elem& x,
                     const ConstituentOracle* oracle = nullptr);
int64_t sigma_dim(const FqCtx& F, const SigmaLabel& s);

/// dim sigma^R = |R|^-1 sum_{r in R} chi_sigma(r), certified.
int64_t fixed_dim(const FqCtx& F, const SigmaLabel& s, const SubgroupR& R,
                  const ConstituentOracle* oracle = nullptr);

/// Closed forms of the four fixed-dimension cases ('a'..'d').
int64_t lemma31_closed(char which, int q, int omega_minus1);

/// Full characters agree on all of GL_{2,2}(q) (checked on pairs of classes with equal determinant).
bool same_full_character(const FqCtx& F, const SigmaLabel& a, const SigmaLabel& b);

SigmaLabel u1_twist(const FqCtx& F, const SigmaLabel& s, const ConstituentOracle* oracle = nullptr);
bool is_self_twisted(const FqCtx& F, const SigmaLabel& s, const ConstituentOracle* oracle = nullptr);

/// For a Full sigma equal to [lambda rho x rho] (rho = rho_theta2): the exponent of lambda*omega_rho,
/// or nullopt when sigma has no such form.
std::optional<int> lambda_omega_exponent(const FqCtx& F, const SigmaLabel& s);

enum class TwistOperator { Swap, WW, SwapWW };
std::string to_string(TwistOperator op);

/// Closed-form trace of swap, sigma(w,w) or their composite on sigma^R for sigma = [lambda rho x rho].
int64_t twisted_trace_closed(const FqCtx& F, const SigmaLabel& s, TwistOperator op, SubgroupKind R);

/// Trace of tau(s) on tau^R for sigma not self-twisted and s in the u-coset normalizing R: always 0.
int64_t induced_trace_zero(const FqCtx& F, const SigmaLabel& s, const ExtElem& elem, const SubgroupR& R);

/// Does the u-coset element normalize R?
bool ext_normalizes(const FqCtx& F, const ExtElem& elem, const SubgroupR& R);

}  // namespace siegel
