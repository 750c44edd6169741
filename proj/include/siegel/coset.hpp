#pragma once

#include <string>

namespace siegel {

enum class CosetType { I, II, IIIa, IIIb, IV };
std::string to_string(CosetType t);

/// A support double coset: t_ij (I), t_ij X_k (II), Y_{i,j,r}(u) (IIIa, IIIb) or Z_{i,j}(u) (IV).
/// uclass is the raw code of an F_q element: for IIIb the class c of u = 1 + p*lift(c),
/// for IV the residue of u (nonzero); unused otherwise.
struct CosetParam {
    CosetType type = CosetType::I;
    int i = 0, j = 1, r = 0, k = 0;
    int uclass = 0;
    friend bool operator==(const CosetParam&, const CosetParam&) = default;
    friend auto operator<=>(const CosetParam&, const CosetParam&) = default;
};

std::string to_string(const CosetParam& c);

}  // namespace siegel
