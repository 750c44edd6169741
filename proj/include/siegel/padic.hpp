#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "siegel/error.hpp"
#include "siegel/finite_field.hpp"
#include "siegel/gl22.hpp"

namespace siegel {

struct NotSymplectic : Error {
    explicit NotSymplectic(const std::string& w) : Error(ErrorKind::Mismatch, w) {}
};
struct NotInK : Error {
    explicit NotInK(const std::string& w) : Error(ErrorKind::BadArgument, w) {}
};

/// Digits of agreement demanded beyond the leading valuation before an equality is accepted.
constexpr int kGuard = 4;

/// o / p^N for o the unramified extension of Z_p of degree f, as (Z/p^N)[x]/(m(x)).
class PadicCtx {
public:
    PadicCtx(int p, int f, int N);

    int p() const { return p_; }
    int f() const { return f_; }
    int q() const { return residue_->q(); }
    int N() const { return N_; }
    /// val(2): 1 when p = 2, else 0.
    int e() const { return p_ == 2 ? 1 : 0; }
    int64_t pN() const { return pow_[N_]; }
    int64_t ppow(int k) const { return pow_.at(k); }
    const std::vector<int64_t>& modulus() const { return m_; }
    const FqCtx& residue_field() const { return *residue_; }

    using Poly = std::array<int64_t, 4>;
    Poly poly_mul(const Poly& a, const Poly& b) const;
    Poly poly_add(const Poly& a, const Poly& b) const;
    Poly poly_scale(const Poly& a, int64_t s) const;
    /// Inverse modulo p^N of a polynomial that is a unit mod p.
    Poly poly_inv(const Poly& a) const;
    Fq residue_of(const Poly& a) const;
    /// Lift with coefficients in [0, p).
    Poly lift_of(Fq a) const { return lift_.at(a.v); }
    int64_t mod(__int128 v) const;

private:
    int p_, f_, N_;
    std::vector<int64_t> pow_;
    std::vector<int64_t> m_;  // monic modulus, coefficients m_0..m_{f-1}
    std::shared_ptr<FqCtx> residue_;
    Fq root_;  // image of x in F_q
    std::vector<Poly> lift_;
};

/// Capped relative precision element p^val * unit with unit known mod p^prec.
/// prec == 0 means zero known to absolute precision val; exact zeros have val = kExactZero.
class PadicScalar {
public:
    static constexpr int kExactZero = 1 << 28;

    PadicScalar() = default;
    static PadicScalar zero(const PadicCtx& C) { return PadicScalar(&C, kExactZero, 0, {}); }
    static PadicScalar from_int(const PadicCtx& C, int64_t v);
    static PadicScalar from_poly(const PadicCtx& C, PadicCtx::Poly c, int val = 0);
    /// varpi^k (varpi = p).
    static PadicScalar pi_pow(const PadicCtx& C, int k);
    static PadicScalar lift(const PadicCtx& C, Fq a);

    const PadicCtx* ctx() const { return C_; }
    bool is_exact_zero() const { return val_ == kExactZero; }
    /// Zero at the available precision.
    bool is_zero() const { return prec_ == 0; }
    int val() const { return val_; }
    int prec() const { return prec_; }
    int abs_prec() const { return is_exact_zero() ? kExactZero : val_ + prec_; }
    const PadicCtx::Poly& unit() const { return u_; }

    /// val >= k, or PrecisionExhausted when the answer is hidden below the known digits.
    bool val_at_least(int k) const;
    /// Exact valuation; PrecisionExhausted for a zero.
    int valuation() const;
    bool is_unit() const { return val_at_least(0) && !val_at_least(1); }
    Fq residue() const;

    PadicScalar operator-() const;
    friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
    friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) { return a + (-b); }
    friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
    friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);

    std::string str() const;

private:
    PadicScalar(const PadicCtx* C, int val, int prec, PadicCtx::Poly u) : C_(C), val_(val), prec_(prec), u_(u) {}
    static PadicScalar normalize(const PadicCtx* C, int v0, int abs, PadicCtx::Poly c);

    const PadicCtx* C_ = nullptr;
    int val_ = kExactZero;
    int prec_ = 0;
    PadicCtx::Poly u_{};
};

/// a == b with at least kGuard digits of agreement past the smaller valuation.
bool padic_equal(const PadicScalar& a, const PadicScalar& b);

using Mat4 = std::array<PadicScalar, 16>;

Mat4 mat4_zero(const PadicCtx& C);
Mat4 mat4_identity(const PadicCtx& C);
Mat4 mat4_diag(const PadicCtx& C, const std::array<PadicScalar, 4>& d);
inline PadicScalar& at(Mat4& m, int r, int c) { return m[4 * r + c]; }
inline const PadicScalar& at(const Mat4& m, int r, int c) { return m[4 * r + c]; }
Mat4 mat4_mul(const Mat4& a, const Mat4& b);
Mat4 mat4_transpose(const Mat4& a);
Mat4 mat4_scale(const PadicScalar& s, const Mat4& a);
bool mat4_equal(const Mat4& a, const Mat4& b);
std::string mat4_str(const Mat4& a);

/// The form antidiag(1, 1, -1, -1).
Mat4 mat4_J(const PadicCtx& C);

/// mu with tM J M = mu J, or NotSymplectic.
PadicScalar similitude(const Mat4& m);

struct GSp4Elem {
    Mat4 mat;
    PadicScalar mu;
};

GSp4Elem gsp4(const Mat4& m);
GSp4Elem gsp4_mul(const GSp4Elem& a, const GSp4Elem& b);
/// mu^-1 J^-1 tg J.
GSp4Elem gsp4_inv(const GSp4Elem& g);
GSp4Elem gsp4_conj(const GSp4Elem& g, const GSp4Elem& x);  // g x g^-1
bool gsp4_equal(const GSp4Elem& a, const GSp4Elem& b);

bool in_G0(const GSp4Elem& g);
bool in_K(const GSp4Elem& g);
bool in_Kplus(const GSp4Elem& g);
bool in_I(const GSp4Elem& g);
bool in_Si(const GSp4Elem& g, int n);

/// K -> GL_{2,2}(q): ((g11, p g14; p^-1 g41, g44), (g22, g23; g32, g33)) mod p.
GL22Elem reduce_K(const GSp4Elem& g);

// Named elements.
GSp4Elem t_ij(const PadicCtx& C, int i, int j);
/// Lower unipotent with lower-left block (x y; z x).
GSp4Elem S_xyz(const PadicScalar& x, const PadicScalar& y, const PadicScalar& z);
/// Upper unipotent with upper-right block (b1 b2; b3 b1).
GSp4Elem upper_B(const PadicScalar& b1, const PadicScalar& b2, const PadicScalar& b3);
GSp4Elem X_k(const PadicCtx& C, int k);
GSp4Elem Y_ijr(const PadicCtx& C, int i, int j, int r, const PadicScalar& u);
GSp4Elem Z_ij(const PadicCtx& C, int i, int j, const PadicScalar& u);
GSp4Elem s1(const PadicCtx& C);
GSp4Elem s2(const PadicCtx& C);
GSp4Elem u_n(const PadicCtx& C, int n);
/// diag(A, lambda A') with A = (a1 a2; a3 a4), A' = (a1 -a2; -a3 a4).
GSp4Elem levi(const PadicScalar& a1, const PadicScalar& a2, const PadicScalar& a3, const PadicScalar& a4,
              const PadicScalar& lambda);
/// (I 0; p^n C I) * levi(A, lambda) * (I B; 0 I) with C = (c1 c2; c3 c1), B = (b1 b2; b3 b1).
GSp4Elem siegel_element(int n, const std::array<PadicScalar, 3>& c, const std::array<PadicScalar, 4>& a,
                        const PadicScalar& lambda, const std::array<PadicScalar, 3>& b);

struct SiegelCoords {
    std::array<PadicScalar, 3> c;
    std::array<PadicScalar, 4> a;
    PadicScalar lambda;
    std::array<PadicScalar, 3> b;
};
/// Recover the factorization coordinates of s in Si(n).
SiegelCoords siegel_coords(const GSp4Elem& s, int n);

/// The affine reflection e1 -> p e4, e4 -> -p^-1 e1 in K.
GSp4Elem affine_reflection(const PadicCtx& C);

// Random elements.
PadicScalar random_element(const PadicCtx& C, std::mt19937_64& rng, int min_val = 0);
PadicScalar random_unit(const PadicCtx& C, std::mt19937_64& rng);
GSp4Elem random_iwahori(const PadicCtx& C, std::mt19937_64& rng);
GSp4Elem random_K(const PadicCtx& C, std::mt19937_64& rng);
GSp4Elem random_Si(const PadicCtx& C, int n, std::mt19937_64& rng);

}  // namespace siegel
