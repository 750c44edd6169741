#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "siegel/chars.hpp"
#include "siegel/coset.hpp"
#include "siegel/gl22.hpp"
#include "siegel/models.hpp"

namespace siegel {

/// Support double cosets at level n; q odd gives type I only.
std::vector<CosetParam> enumerate_support(int q, int n);
/// Closed-form number of support cosets of one type.
int64_t closed_count(CosetType t, int q, int n);
int64_t count_type(const std::vector<CosetParam>& cs, CosetType t);

/// Table label: Torus for I and II, Unip for IIIa, ArtinUnip for IIIb and IV.
SubgroupKind coset_R_type(const CosetParam& c);

/// {(diag(a,b), diag(b,a))}: the group the reduction actually produces for type II.
SubgroupR diag_swap_subgroup(const FqCtx& F);

enum class RgSource { Table, Computed };
std::string to_string(RgSource s);
/// The subgroup used for a coset. Computed differs from Table only for type II (diag_swap_subgroup).
SubgroupR coset_R_group(const FqCtx& F, const CosetParam& c, RgSource src = RgSource::Table);

/// Image of a support coset under right multiplication by u_n.
CosetParam al_partner(const CosetParam& c, int n);

enum class ALKind { Plain, Twisted };
std::string to_string(ALKind k);
struct ALFixedCoset {
    CosetParam coset;
    ALKind kind;
};
std::vector<ALFixedCoset> al_fixed_cosets(int q, int n);
/// Closed-form number of u_n-fixed cosets of one type.
int64_t al_fixed_closed_count(CosetType t, int q, int n);

/// The q-even polynomial F(n, q).
int64_t F_even(int n, int q);

/// Irreducible sigma at q: Full labels that stay irreducible plus Plus/Minus constituents.
std::vector<SigmaLabel> irreducible_sigmas(const FqCtx& F);

/// What the closed forms depend on.
struct SigmaClass {
    bool central_trivial = true;
    bool self_twisted = false;
    bool constituent = false;
    int omega_minus1 = 1;                      // omega_rho2(-1)
    std::optional<bool> lambda_omega_trivial;  // Full self-twisted, q odd
};
SigmaClass classify_sigma(const FqCtx& F, const SigmaLabel& s, const ConstituentOracle* oracle = nullptr);
/// Short class name used in tables, e.g. "self-twisted/full/lw=1".
std::string class_key(const SigmaClass& c);

struct TauSpec {
    SigmaLabel sigma;
    int ext_sign = 1;  // tau(u_1) = ext_sign * T_+ on a self-twisted sigma
};

struct DimReport {
    std::map<CosetType, int64_t> counts;
    std::map<CosetType, int64_t> dim_per_coset;
    int64_t assembled = 0;
    int64_t closed = 0;
    bool match = false;
};

int64_t dim_formula(const SigmaClass& c, int q, int n);
DimReport assemble_dim(const FqCtx& F, const TauSpec& tau, int n, const ConstituentOracle* oracle = nullptr,
                       RgSource src = RgSource::Table);

struct ALContribution {
    CosetParam coset;
    ALKind kind;
    int64_t value;
};

struct ALReport {
    std::vector<ALContribution> contributions;
    int64_t assembled = 0;
    int64_t closed = 0;
    /// +1 if assembled == closed, -1 if assembled == -closed != 0 (an extension labelling
    /// difference, accepted only for constituents), 0 otherwise.
    int relative_sign = 0;
    bool match = false;
};

int64_t al_formula(const SigmaClass& c, int q, int n, int ext_sign);

/// ClosedForm: contributions from fixed dims and closed-form traces (the oracle, if given, only
/// supplies constituent characters). Models: traces of explicit operators; requires the oracle.
enum class ALPath { ClosedForm, Models };
ALReport assemble_al(const FqCtx& F, const TauSpec& tau, int n, const ModelOracle* oracle = nullptr,
                     ALPath path = ALPath::ClosedForm, RgSource src = RgSource::Table);

/// The finite-group factor ((0 u; 1 0), (0 1; u 0)) that accompanies u_1 on type III cosets.
GL22Elem type_III_factor(const FqCtx& F, Fq u);

}  // namespace siegel
