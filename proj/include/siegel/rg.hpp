#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "siegel/coset.hpp"
#include "siegel/gl22.hpp"
#include "siegel/padic.hpp"

namespace siegel {

struct StabilizationFailure : Error {
    explicit StabilizationFailure(const std::string& w) : Error(ErrorKind::Limit, w) {}
};

/// The representative of a support coset; q even is required for types II-IV.
GSp4Elem coset_representative(const PadicCtx& C, const CosetParam& c);

/// R_g as read off the Levi computation for the representative (not conjugated to the
/// standard form). Types I and II give the torus.
SubgroupR predicted_Rg(const FqCtx& F, const CosetParam& c);

struct RgOptions {
    uint64_t seed = 0;
    int window = 200;           // consecutive accepted samples without growth
    int max_attempts = 400000;  // proposals before giving up
    int kmax = -1;              // largest proposal valuation; default 2n + 4
};

struct RgResult {
    SubgroupR group;
    int attempts = 0;
    int accepted = 0;
    int precision_skips = 0;
    std::vector<std::string> failures;  // witness elements that did not lift as predicted
};

/// Draw s in Si(n) with biased valuations, keep g s g^-1 in K, reduce and close up.
RgResult compute_Rg_sample(const PadicCtx& C, const GSp4Elem& g, int n, const RgOptions& opt = {});

/// Explicit Levi lifts of every element of predicted_Rg; the group is the closure of the
/// reductions that were verified.
RgResult compute_Rg_witness(const PadicCtx& C, const CosetParam& c, int n);

/// Closure of the sampled and the witnessed groups. Witness failures are kept in the result.
RgResult compute_Rg(const PadicCtx& C, const CosetParam& c, int n, const RgOptions& opt = {});

/// Default working precision for a coset computation.
int default_precision(int n, int i, int j);

/// t_ij S(p^vx, p^vy, p^vz) with a coordinate set to 0 when its exponent is -1.
struct OffSupportTuple {
    int n, i, j, vx, vy, vz;
};
/// Twenty tuples that break one of the support bounds (j outside 1..n-2-2i, x or y too large,
/// or val z != 2i + 1 + val y); each R_g should contain U1 or a conjugate of U2.
const std::vector<OffSupportTuple>& off_support_panel();
GSp4Elem off_support_representative(const PadicCtx& C, const OffSupportTuple& t);
int off_support_precision(const OffSupportTuple& t);
std::string to_string(const OffSupportTuple& t);

}  // namespace siegel
