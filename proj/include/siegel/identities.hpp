#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "siegel/padic.hpp"

namespace siegel {

/// Matrix identities used to locate the support and the Atkin-Lehner images.
enum class IdentityTag {
    LowerShift,        // A^-1 S(x,y,z) A = S(x+cy, y, z+2cx+c^2 y), t A t^-1 in K, c in p^{i+1}
    CornerUnipotent,   // g (1 + p^n c e41) g^-1 = 1 + p^{n-2i-j} c e41
    MixedUnipotent,    // g M(xb, b) g^-1 for j <= 0; third row carries 1 + yb and -p^-j y^2 b
    UpperUnipotent,    // g (1 + b e23) g^-1; third row and the (4,2) entry carry the signs of S E S^-1
    DiagonalA,         // g diag(1,a,1,a) g^-1
    XUnipotent,        // t S(x,0,0) lower unipotent conjugate
    LeviX,             // levi conjugate by t S(x,0,0)
    TorusY,            // t S(0,y,z) diag(1,a,a^-1,1) conjugate and its (3,2) entry = v mod p
    LeviY,             // levi conjugate by t S(0,y,z)
    LeviXYZ,           // levi conjugate by t S(x,y,z) with m1..m4, the S/R rewriting, and the reduction
    AlphaFamily,       // the one-parameter Levi family in the x y z != 0 case
    ALDiagonal,        // t_ij u_n = p^{i+j} u_1 t_{i,n-2i-j-1}
    ALTypeII,          // t_ij X_k u_n = p^k M t_{i,j+n-2k} X_{n-k}
    ALTypeIII,         // t_ij S(0,y,z) u_n = p^i y u_1 h S(0, p^n/z, p^n/y) diag(1,1,-1,-1), plus the u-scaling
    ALTypeIV,          // t_ij S(x,y,z) u_n = x P B h S(p^n/x, p^n y/x^2, p^n z/x^2) diag(1,1,lambda,lambda)
    UnSquare,          // u_n^2 = p^n
    U1NormalizesK,     // u_1 K u_1^-1 = K, compatible with u_action on the reduction
};

std::string to_string(IdentityTag t);
const std::vector<IdentityTag>& all_identity_tags();

struct IdentityOutcome {
    bool holds = true;
    std::string detail;  // first failing comparison
};

/// Draws the free parameters of one identity with their prescribed valuations and checks it.
/// i, j, n index the family (j may be <= 0 where the identity allows it). PrecisionExhausted
/// propagates when a comparison lands inside the guard band.
IdentityOutcome verify_identity(const PadicCtx& C, IdentityTag tag, int i, int j, int n, std::mt19937_64& rng);

struct IdentitySuiteOptions {
    std::vector<int> primes{2, 3};
    int f = 1;
    int i_max = 3;
    int j_max = 5;
    int n_max = 10;
    int draws = 100;
    uint64_t seed = 0;
};

struct IdentitySuiteRow {
    IdentityTag tag;
    int p = 0;
    int64_t checks = 0;
    int64_t failures = 0;
    int64_t precision_failures = 0;
    std::vector<std::string> messages;  // capped
};

/// Precision used for a family: n + 2 i + |j| + 8 plus slack for the drawn valuations, capped
/// where p^N stops fitting in 62 bits.
int identity_precision(int p, int i, int j, int n);

std::vector<IdentitySuiteRow> run_identity_suite(const IdentitySuiteOptions& opt);

}  // namespace siegel
