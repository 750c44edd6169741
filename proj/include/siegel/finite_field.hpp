#pragma once

#include <cstdint>
#include <vector>

#include "siegel/numerics.hpp"

namespace siegel {

/// Element of F_q stored by discrete log: v = 0 is zero, otherwise v - 1 is the
/// log to the base g = N(g2), a generator of F_q^x.
struct Fq {
    uint8_t v = 0;
    bool is_zero() const { return v == 0; }
    int log() const { return int(v) - 1; }
    friend bool operator==(Fq, Fq) = default;
    friend auto operator<=>(Fq, Fq) = default;
};

/// Element of F_{q^2}, same convention with base g2.
struct Fq2 {
    uint16_t v = 0;
    bool is_zero() const { return v == 0; }
    int log() const { return int(v) - 1; }
    friend bool operator==(Fq2, Fq2) = default;
};

/// F_q and F_{q^2} for q = p^f <= 16, built as F_p[x]/(P) with P primitive of degree 2f.
/// Addition goes through Zech logarithm tables. Immutable after construction.
class FqCtx {
public:
    static constexpr int kMaxQ = 16;

    FqCtx(int p, int f);

    int p() const { return p_; }
    int f() const { return f_; }
    int q() const { return q_; }
    bool odd() const { return p_ != 2; }

    // F_q
    Fq zero() const { return {}; }
    Fq one() const { return Fq{1}; }
    Fq gen() const { return Fq{static_cast<uint8_t>(q_ > 2 ? 2 : 1)}; }
    Fq from_log(int64_t k) const;
    Fq from_int(int64_t c) const;  // image of the integer c
    Fq from_index(int i) const { return Fq{static_cast<uint8_t>(i)}; }
    Fq add(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq mul(Fq a, Fq b) const;
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, int64_t e) const;
    bool is_square(Fq a) const;
    std::vector<Fq> elements() const;  // zero first, then g^0, g^1, ...
    std::vector<Fq> units() const;

    /// Exponent e with psi(a) = zeta_p^e; psi(a) = zeta_p^{Tr(a)}.
    int psi_exponent(Fq a) const { return psi_exp_[a.v]; }
    CharValue psi(Fq a) const { return CharValue::root_of_unity(p_, psi_exponent(a)); }
    /// Additive F_p-coordinate decomposition: the integer c in [0, p) with a = c, if a lies in F_p.
    int prime_field_value(Fq a) const;

    // F_{q^2}
    int q2() const { return q_ * q_; }
    Fq2 gen2() const { return Fq2{static_cast<uint16_t>(q2() > 2 ? 2 : 1)}; }
    Fq2 from_log2(int64_t k) const;
    Fq2 add2(Fq2 a, Fq2 b) const;
    Fq2 mul2(Fq2 a, Fq2 b) const;
    Fq2 pow2(Fq2 a, int64_t e) const;
    Fq2 embed(Fq a) const;        // F_q -> F_{q^2}
    bool in_base(Fq2 a) const;    // a^q == a
    Fq to_base(Fq2 a) const;      // inverse of embed; requires in_base
    Fq norm(Fq2 a) const;         // a^{q+1}
    Fq trace(Fq2 a) const;        // a + a^q

    /// Roots of x^2 - t x + d in F_q (0, 1 with multiplicity or 2 entries).
    std::vector<Fq> roots(Fq t, Fq d) const;
    /// A root in F_{q^2} \ F_q of an irreducible x^2 - t x + d (log to base g2).
    int elliptic_root_log(Fq t, Fq d) const;

private:
    int p_, f_, q_;
    // F_{q^2} polynomial codes (base p digits) <-> logs
    std::vector<int> exp2_;    // log -> poly code, size q^2-1
    std::vector<int> log2_;    // poly code -> log, -1 for zero
    std::vector<int> zech2_;   // k -> log(1 + g2^k), -1 when zero
    std::vector<int> zechq_;   // k -> log_g(1 + g^k), -1 when zero
    std::vector<int> psi_exp_;
    std::vector<int> elliptic_;  // (t.v * q + d.v) -> log, -1 if reducible

    int poly_add(int a, int b) const;
};

}  // namespace siegel
