#include "siegel/padic.hpp"

#include <algorithm>
#include <sstream>

namespace siegel {

namespace {

int vp(int64_t v, int p, int cap) {
    if (v == 0) return cap;
    int k = 0;
    while (v % p == 0 && k < cap) {
        v /= p;
        ++k;
    }
    return k;
}

// Evaluate an integer polynomial (coefficients low to high) at r in F_q.
Fq eval_at(const FqCtx& F, const std::vector<int64_t>& c, Fq r) {
    Fq acc = F.zero();
    for (size_t i = c.size(); i-- > 0;) acc = F.add(F.mul(acc, r), F.from_int(c[i]));
    return acc;
}

// r generates F_q over F_p.
bool generates(const FqCtx& F, Fq r) {
    for (int d = 1; d < F.f(); ++d) {
        int64_t pd = 1;
        for (int k = 0; k < d; ++k) pd *= F.p();
        if (F.f() % d == 0 && F.pow(r, pd) == r) return false;
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------- PadicCtx

PadicCtx::PadicCtx(int p, int f, int N) : p_(p), f_(f), N_(N) {
    residue_ = std::make_shared<FqCtx>(p, f);  // validates p prime and q <= 16
    if (N < 1) throw BadArgument("PadicCtx: precision must be positive");
    pow_.push_back(1);
    for (int k = 1; k <= N; ++k) {
        if (pow_.back() > (int64_t(1) << 62) / p) throw UnsupportedSize("PadicCtx: p^N exceeds 62 bits");
        pow_.push_back(pow_.back() * p);
    }
    const FqCtx& F = *residue_;
    if (f == 1) {
        m_ = {0};
        root_ = F.zero();
    } else {
        // Smallest monic m of degree f with a root generating F_q; then m mod p is irreducible.
        std::vector<int64_t> c(f, 0);
        bool found = false;
        int64_t total = 1;
        for (int k = 0; k < f; ++k) total *= p;
        for (int64_t code = 0; code < total && !found; ++code) {
            int64_t t = code;
            for (int k = 0; k < f; ++k) {
                c[k] = t % p;
                t /= p;
            }
            std::vector<int64_t> full = c;
            full.push_back(1);
            for (Fq r : F.elements())
                if (eval_at(F, full, r).is_zero() && generates(F, r)) {
                    m_ = c;
                    root_ = r;
                    found = true;
                    break;
                }
        }
        if (!found) throw Error(ErrorKind::Mismatch, "PadicCtx: no irreducible modulus found");
    }
    lift_.assign(F.q(), Poly{});
    int64_t total = 1;
    for (int k = 0; k < f; ++k) total *= p;
    for (int64_t code = 0; code < total; ++code) {
        Poly a{};
        int64_t t = code;
        for (int k = 0; k < f; ++k) {
            a[k] = t % p;
            t /= p;
        }
        lift_[residue_of(a).v] = a;
    }
}

int64_t PadicCtx::mod(__int128 v) const {
    const __int128 m = pN();
    v %= m;
    if (v < 0) v += m;
    return int64_t(v);
}

PadicCtx::Poly PadicCtx::poly_add(const Poly& a, const Poly& b) const {
    Poly r{};
    for (int k = 0; k < f_; ++k) r[k] = mod(__int128(a[k]) + b[k]);
    return r;
}

PadicCtx::Poly PadicCtx::poly_scale(const Poly& a, int64_t s) const {
    Poly r{};
    for (int k = 0; k < f_; ++k) r[k] = mod(__int128(a[k]) * mod(s));
    return r;
}

PadicCtx::Poly PadicCtx::poly_mul(const Poly& a, const Poly& b) const {
    std::array<__int128, 8> t{};
    for (int i = 0; i < f_; ++i)
        for (int j = 0; j < f_; ++j) t[i + j] = mod(t[i + j] + __int128(a[i]) * b[j]);
    for (int d = 2 * f_ - 2; d >= f_; --d) {
        const __int128 c = t[d];
        t[d] = 0;
        for (int k = 0; k < f_; ++k) t[d - f_ + k] = mod(t[d - f_ + k] - c * m_[k]);
    }
    Poly r{};
    for (int k = 0; k < f_; ++k) r[k] = mod(t[k]);
    return r;
}

PadicCtx::Poly PadicCtx::poly_inv(const Poly& a) const {
    const Fq ra = residue_of(a);
    if (ra.is_zero()) throw BadArgument("poly_inv: not a unit");
    Poly b = lift_of(residue_->inv(ra));
    Poly two{};
    two[0] = 2;
    for (int known = 1; known < N_; known *= 2) {
        const Poly ab = poly_mul(a, b);
        Poly corr{};
        for (int k = 0; k < f_; ++k) corr[k] = mod(__int128(two[k]) - ab[k]);
        b = poly_mul(b, corr);
    }
    return b;
}

Fq PadicCtx::residue_of(const Poly& a) const {
    const FqCtx& F = *residue_;
    std::vector<int64_t> c(a.begin(), a.begin() + f_);
    for (auto& x : c) x %= p_;
    return eval_at(F, c, root_);
}

// ---------------------------------------------------------------- PadicScalar

PadicScalar PadicScalar::normalize(const PadicCtx* C, int v0, int abs, PadicCtx::Poly c) {
    abs = std::min(abs, v0 + C->N());
    const int rel = abs - v0;
    if (rel <= 0) return PadicScalar(C, abs, 0, {});
    const int64_t mrel = C->ppow(rel);
    int w = rel;
    for (int k = 0; k < C->f(); ++k) {
        c[k] %= mrel;
        w = std::min(w, vp(c[k], C->p(), rel));
    }
    if (w >= rel) return PadicScalar(C, abs, 0, {});
    const int64_t pw = C->ppow(w);
    const int prec = rel - w;
    const int64_t mp = C->ppow(prec);
    PadicCtx::Poly u{};
    for (int k = 0; k < C->f(); ++k) u[k] = (c[k] / pw) % mp;
    return PadicScalar(C, v0 + w, prec, u);
}

PadicScalar PadicScalar::from_int(const PadicCtx& C, int64_t v) {
    if (v == 0) return zero(C);
    PadicCtx::Poly c{};
    c[0] = C.mod(v);
    const int w = vp(v < 0 ? -v : v, C.p(), 1 << 20);
    // The integer is exact; keep N relative digits.
    return normalize(&C, 0, w + C.N(), c);
}

PadicScalar PadicScalar::from_poly(const PadicCtx& C, PadicCtx::Poly c, int val) {
    for (int k = 0; k < C.f(); ++k) c[k] = C.mod(c[k]);
    bool all_zero = true;
    for (int k = 0; k < C.f(); ++k) all_zero = all_zero && c[k] == 0;
    if (all_zero) return zero(C);
    int w = C.N();
    for (int k = 0; k < C.f(); ++k) w = std::min(w, vp(c[k], C.p(), C.N()));
    return normalize(&C, val, val + w + C.N(), c);
}

PadicScalar PadicScalar::pi_pow(const PadicCtx& C, int k) {
    PadicCtx::Poly u{};
    u[0] = 1;
    return PadicScalar(&C, k, C.N(), u);
}

PadicScalar PadicScalar::lift(const PadicCtx& C, Fq a) {
    if (a.is_zero()) return zero(C);
    return from_poly(C, C.lift_of(a));
}

bool PadicScalar::val_at_least(int k) const {
    if (is_exact_zero()) return true;
    if (prec_ > 0) return val_ >= k;
    if (val_ >= k) return true;
    throw PrecisionExhausted("valuation undetermined: zero known only to absolute precision " +
                             std::to_string(val_) + " but bound " + std::to_string(k) + " requested");
}

int PadicScalar::valuation() const {
    if (prec_ == 0) throw PrecisionExhausted("valuation of an element indistinguishable from zero");
    return val_;
}

Fq PadicScalar::residue() const {
    if (!val_at_least(0)) throw BadArgument("residue of a non-integral element");
    if (is_exact_zero() || val_ >= 1) return C_ ? C_->residue_field().zero() : Fq{};
    if (prec_ == 0) throw PrecisionExhausted("residue undetermined");
    return C_->residue_of(u_);
}

PadicScalar PadicScalar::operator-() const {
    if (is_zero()) return *this;
    PadicCtx::Poly u{};
    const int64_t mp = C_->ppow(prec_);
    for (int k = 0; k < C_->f(); ++k) u[k] = (mp - u_[k]) % mp;
    return PadicScalar(C_, val_, prec_, u);
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
    if (a.is_exact_zero()) return b;
    if (b.is_exact_zero()) return a;
    const PadicCtx* C = a.C_;
    const int abs = std::min(a.abs_prec(), b.abs_prec());
    const int v0 = std::min(a.val_, b.val_);
    PadicCtx::Poly c{};
    auto accumulate = [&](const PadicScalar& x) {
        if (x.is_zero()) return;
        const int shift = x.val_ - v0;
        if (shift >= C->N()) return;
        const int64_t s = C->ppow(shift);
        for (int k = 0; k < C->f(); ++k) c[k] = C->mod(__int128(c[k]) + __int128(x.u_[k]) * s);
    };
    accumulate(a);
    accumulate(b);
    return PadicScalar::normalize(C, v0, abs, c);
}

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
    if (a.is_exact_zero()) return b.C_ ? PadicScalar::zero(*b.C_) : a;
    if (b.is_exact_zero()) return PadicScalar::zero(*a.C_);
    const PadicCtx* C = a.C_;
    if (a.is_zero() || b.is_zero()) {
        const int abs = std::min(a.abs_prec() + b.val_, b.abs_prec() + a.val_);
        return PadicScalar(C, abs, 0, {});
    }
    const int prec = std::min(a.prec_, b.prec_);
    PadicCtx::Poly u = C->poly_mul(a.u_, b.u_);
    const int64_t mp = C->ppow(prec);
    for (int k = 0; k < C->f(); ++k) u[k] %= mp;
    return PadicScalar(C, a.val_ + b.val_, prec, u);
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) {
    if (b.is_exact_zero()) throw BadArgument("division by zero");
    if (b.is_zero()) throw PrecisionExhausted("division by an element indistinguishable from zero");
    const PadicCtx* C = b.C_;
    if (a.is_exact_zero()) return PadicScalar::zero(*C);
    if (a.is_zero()) return PadicScalar(C, a.val_ - b.val_, 0, {});
    const int prec = std::min(a.prec_, b.prec_);
    PadicCtx::Poly u = C->poly_mul(a.u_, C->poly_inv(b.u_));
    const int64_t mp = C->ppow(prec);
    for (int k = 0; k < C->f(); ++k) u[k] %= mp;
    return PadicScalar(C, a.val_ - b.val_, prec, u);
}

std::string PadicScalar::str() const {
    if (is_exact_zero()) return "0";
    std::ostringstream os;
    if (prec_ == 0) {
        os << "O(p^" << val_ << ")";
        return os.str();
    }
    os << "p^" << val_ << "*(";
    for (int k = 0; k < C_->f(); ++k) os << (k ? "," : "") << u_[k];
    os << ")+O(p^" << val_ + prec_ << ")";
    return os.str();
}

bool padic_equal(const PadicScalar& a, const PadicScalar& b) {
    const PadicScalar d = a - b;
    if (d.is_exact_zero()) return true;
    if (!d.is_zero()) return false;
    int lead = PadicScalar::kExactZero;
    if (!a.is_zero()) lead = std::min(lead, a.val());
    if (!b.is_zero()) lead = std::min(lead, b.val());
    if (lead == PadicScalar::kExactZero) return true;  // both zero to their precision
    if (d.abs_prec() >= lead + kGuard) return true;
    throw PrecisionExhausted("equality undetermined within the guard band");
}

// ---------------------------------------------------------------- matrices

Mat4 mat4_zero(const PadicCtx& C) {
    Mat4 m;
    m.fill(PadicScalar::zero(C));
    return m;
}

Mat4 mat4_identity(const PadicCtx& C) {
    Mat4 m = mat4_zero(C);
    for (int i = 0; i < 4; ++i) at(m, i, i) = PadicScalar::from_int(C, 1);
    return m;
}

Mat4 mat4_diag(const PadicCtx& C, const std::array<PadicScalar, 4>& d) {
    Mat4 m = mat4_zero(C);
    for (int i = 0; i < 4; ++i) at(m, i, i) = d[i];
    return m;
}

Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            PadicScalar s = at(a, i, 0) * at(b, 0, j);
            for (int k = 1; k < 4; ++k) s = s + at(a, i, k) * at(b, k, j);
            at(r, i, j) = s;
        }
    return r;
}

Mat4 mat4_transpose(const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) at(r, i, j) = at(a, j, i);
    return r;
}

Mat4 mat4_scale(const PadicScalar& s, const Mat4& a) {
    Mat4 r;
    for (int k = 0; k < 16; ++k) r[k] = s * a[k];
    return r;
}

bool mat4_equal(const Mat4& a, const Mat4& b) {
    for (int k = 0; k < 16; ++k)
        if (!padic_equal(a[k], b[k])) return false;
    return true;
}

std::string mat4_str(const Mat4& a) {
    std::ostringstream os;
    for (int i = 0; i < 4; ++i) {
        os << "[";
        for (int j = 0; j < 4; ++j) os << (j ? ", " : "") << at(a, i, j).str();
        os << "]\n";
    }
    return os.str();
}

Mat4 mat4_J(const PadicCtx& C) {
    Mat4 m = mat4_zero(C);
    at(m, 0, 3) = PadicScalar::from_int(C, 1);
    at(m, 1, 2) = PadicScalar::from_int(C, 1);
    at(m, 2, 1) = PadicScalar::from_int(C, -1);
    at(m, 3, 0) = PadicScalar::from_int(C, -1);
    return m;
}

namespace {

const PadicCtx& ctx_of(const Mat4& m) {
    for (const auto& x : m)
        if (x.ctx()) return *x.ctx();
    throw BadArgument("matrix without a p-adic context");
}

}  // namespace

PadicScalar similitude(const Mat4& m) {
    const PadicCtx& C = ctx_of(m);
    const Mat4 J = mat4_J(C);
    const Mat4 P = mat4_mul(mat4_transpose(m), mat4_mul(J, m));
    const PadicScalar mu = at(P, 0, 3);
    if (mu.is_zero()) throw NotSymplectic("similitude: degenerate matrix");
    if (!mat4_equal(P, mat4_scale(mu, J))) throw NotSymplectic("similitude: tM J M is not a multiple of J");
    return mu;
}

GSp4Elem gsp4(const Mat4& m) { return GSp4Elem{m, similitude(m)}; }

GSp4Elem gsp4_mul(const GSp4Elem& a, const GSp4Elem& b) { return GSp4Elem{mat4_mul(a.mat, b.mat), a.mu * b.mu}; }

GSp4Elem gsp4_inv(const GSp4Elem& g) {
    const PadicCtx& C = ctx_of(g.mat);
    const Mat4 J = mat4_J(C);
    const Mat4 Jinv = mat4_scale(PadicScalar::from_int(C, -1), J);
    const PadicScalar one = PadicScalar::from_int(C, 1);
    const Mat4 m = mat4_scale(one / g.mu, mat4_mul(Jinv, mat4_mul(mat4_transpose(g.mat), J)));
    return GSp4Elem{m, one / g.mu};
}

GSp4Elem gsp4_conj(const GSp4Elem& g, const GSp4Elem& x) { return gsp4_mul(gsp4_mul(g, x), gsp4_inv(g)); }

bool gsp4_equal(const GSp4Elem& a, const GSp4Elem& b) { return mat4_equal(a.mat, b.mat); }

// ---------------------------------------------------------------- subgroups

namespace {

bool pattern(const GSp4Elem& g, const std::array<int, 16>& lo) {
    for (int k = 0; k < 16; ++k)
        if (!g.mat[k].val_at_least(lo[k])) return false;
    return true;
}

GL2Elem residue_pair(const PadicScalar& a, const PadicScalar& b, const PadicScalar& c, const PadicScalar& d) {
    return GL2Elem{a.residue(), b.residue(), c.residue(), d.residue()};
}

GL22Elem reduce_unchecked(const GSp4Elem& g) {
    const PadicCtx& C = *g.mu.ctx();
    const PadicScalar pi = PadicScalar::pi_pow(C, 1), pinv = PadicScalar::pi_pow(C, -1);
    const auto& m = g.mat;
    return GL22Elem{residue_pair(at(m, 0, 0), pi * at(m, 0, 3), pinv * at(m, 3, 0), at(m, 3, 3)),
                    residue_pair(at(m, 1, 1), at(m, 1, 2), at(m, 2, 1), at(m, 2, 2))};
}

}  // namespace

bool in_G0(const GSp4Elem& g) { return g.mu.is_unit(); }

bool in_K(const GSp4Elem& g) {
    static constexpr std::array<int, 16> lo{0, 0, 0, -1, 1, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0};
    if (!in_G0(g) || !pattern(g, lo)) return false;
    const FqCtx& F = g.mu.ctx()->residue_field();
    const GL22Elem r = reduce_unchecked(g);
    return !gl2_det(F, r.first).is_zero() && !gl2_det(F, r.second).is_zero();
}

bool in_Kplus(const GSp4Elem& g) {
    return in_K(g) && reduce_unchecked(g) == gl22_identity(g.mu.ctx()->residue_field());
}

bool in_I(const GSp4Elem& g) {
    static constexpr std::array<int, 16> lo{0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0};
    if (!in_G0(g) || !pattern(g, lo)) return false;
    for (int i = 0; i < 4; ++i)
        if (!at(g.mat, i, i).is_unit()) return false;
    return true;
}

bool in_Si(const GSp4Elem& g, int n) {
    const std::array<int, 16> lo{0, 0, 0, 0, 0, 0, 0, 0, n, n, 0, 0, n, n, 0, 0};
    return in_G0(g) && pattern(g, lo);
}

GL22Elem reduce_K(const GSp4Elem& g) {
    if (!in_K(g)) throw NotInK("reduce_K: element is not in K");
    return reduce_unchecked(g);
}

// ---------------------------------------------------------------- named elements

GSp4Elem t_ij(const PadicCtx& C, int i, int j) {
    using P = PadicScalar;
    return gsp4(mat4_diag(C, {P::pi_pow(C, 2 * i + j), P::pi_pow(C, i + j), P::pi_pow(C, i), P::pi_pow(C, 0)}));
}

GSp4Elem S_xyz(const PadicScalar& x, const PadicScalar& y, const PadicScalar& z) {
    const PadicCtx* C = x.ctx() ? x.ctx() : y.ctx() ? y.ctx() : z.ctx();
    if (!C) throw BadArgument("S_xyz: no context");
    Mat4 m = mat4_identity(*C);
    at(m, 2, 0) = x;
    at(m, 2, 1) = y;
    at(m, 3, 0) = z;
    at(m, 3, 1) = x;
    return GSp4Elem{m, PadicScalar::from_int(*C, 1)};
}

GSp4Elem upper_B(const PadicScalar& b1, const PadicScalar& b2, const PadicScalar& b3) {
    const PadicCtx* C = b1.ctx() ? b1.ctx() : b2.ctx() ? b2.ctx() : b3.ctx();
    if (!C) throw BadArgument("upper_B: no context");
    Mat4 m = mat4_identity(*C);
    at(m, 0, 2) = b1;
    at(m, 0, 3) = b2;
    at(m, 1, 2) = b3;
    at(m, 1, 3) = b1;
    return GSp4Elem{m, PadicScalar::from_int(*C, 1)};
}

GSp4Elem X_k(const PadicCtx& C, int k) {
    const auto z = PadicScalar::zero(C);
    return S_xyz(PadicScalar::pi_pow(C, k), z, z);
}

GSp4Elem Y_ijr(const PadicCtx& C, int i, int j, int r, const PadicScalar& u) {
    return gsp4_mul(t_ij(C, i, j),
                    S_xyz(PadicScalar::zero(C), PadicScalar::pi_pow(C, r) * u, PadicScalar::pi_pow(C, 2 * i + 1 + r)));
}

GSp4Elem Z_ij(const PadicCtx& C, int i, int j, const PadicScalar& u) {
    return gsp4_mul(t_ij(C, i, j), S_xyz(PadicScalar::pi_pow(C, i + j - 1), PadicScalar::pi_pow(C, j - 1) * u,
                                         PadicScalar::pi_pow(C, 2 * i + j)));
}

namespace {

GSp4Elem from_entries(const PadicCtx& C, std::initializer_list<std::tuple<int, int, PadicScalar>> e) {
    Mat4 m = mat4_zero(C);
    for (const auto& [r, c, v] : e) at(m, r, c) = v;
    return gsp4(m);
}

}  // namespace

GSp4Elem s1(const PadicCtx& C) {
    const auto one = PadicScalar::from_int(C, 1);
    return from_entries(C, {{0, 1, one}, {1, 0, one}, {2, 3, one}, {3, 2, one}});
}

GSp4Elem s2(const PadicCtx& C) {
    const auto one = PadicScalar::from_int(C, 1);
    return from_entries(C, {{0, 0, one}, {1, 2, one}, {2, 1, -one}, {3, 3, one}});
}

GSp4Elem u_n(const PadicCtx& C, int n) {
    const auto one = PadicScalar::from_int(C, 1);
    const auto pn = PadicScalar::pi_pow(C, n);
    return from_entries(C, {{0, 2, one}, {1, 3, -one}, {2, 0, pn}, {3, 1, -pn}});
}

GSp4Elem affine_reflection(const PadicCtx& C) {
    const auto one = PadicScalar::from_int(C, 1);
    return from_entries(C, {{0, 3, -PadicScalar::pi_pow(C, -1)}, {1, 1, one}, {2, 2, one}, {3, 0, PadicScalar::pi_pow(C, 1)}});
}

GSp4Elem levi(const PadicScalar& a1, const PadicScalar& a2, const PadicScalar& a3, const PadicScalar& a4,
              const PadicScalar& lambda) {
    const PadicCtx& C = *lambda.ctx();
    Mat4 m = mat4_zero(C);
    at(m, 0, 0) = a1;
    at(m, 0, 1) = a2;
    at(m, 1, 0) = a3;
    at(m, 1, 1) = a4;
    at(m, 2, 2) = lambda * a1;
    at(m, 2, 3) = -(lambda * a2);
    at(m, 3, 2) = -(lambda * a3);
    at(m, 3, 3) = lambda * a4;
    return GSp4Elem{m, lambda * (a1 * a4 - a2 * a3)};
}

GSp4Elem siegel_element(int n, const std::array<PadicScalar, 3>& c, const std::array<PadicScalar, 4>& a,
                        const PadicScalar& lambda, const std::array<PadicScalar, 3>& b) {
    const PadicCtx& C = *lambda.ctx();
    const auto pn = PadicScalar::pi_pow(C, n);
    const GSp4Elem L = S_xyz(pn * c[0], pn * c[1], pn * c[2]);
    return gsp4_mul(gsp4_mul(L, levi(a[0], a[1], a[2], a[3], lambda)), upper_B(b[0], b[1], b[2]));
}

SiegelCoords siegel_coords(const GSp4Elem& s, int n) {
    const PadicCtx& C = *s.mu.ctx();
    const auto& m = s.mat;
    const PadicScalar a1 = at(m, 0, 0), a2 = at(m, 0, 1), a3 = at(m, 1, 0), a4 = at(m, 1, 1);
    const PadicScalar det = a1 * a4 - a2 * a3;
    // A^-1 = det^-1 (a4 -a2; -a3 a1)
    const PadicScalar i1 = a4 / det, i2 = -a2 / det, i3 = -a3 / det, i4 = a1 / det;
    // B = A^-1 * (top-right block)
    const PadicScalar t1 = at(m, 0, 2), t2 = at(m, 0, 3), t3 = at(m, 1, 2);
    const PadicScalar b1 = i1 * t1 + i2 * t3, b2 = i1 * t2 + i2 * at(m, 1, 3), b3 = i3 * t1 + i4 * t3;
    // p^n C = (bottom-left block) * A^-1
    const PadicScalar pinv = PadicScalar::pi_pow(C, -n);
    const PadicScalar c1 = pinv * (at(m, 2, 0) * i1 + at(m, 2, 1) * i3);
    const PadicScalar c2 = pinv * (at(m, 2, 0) * i2 + at(m, 2, 1) * i4);
    const PadicScalar c3 = pinv * (at(m, 3, 0) * i1 + at(m, 3, 1) * i3);
    return SiegelCoords{{c1, c2, c3}, {a1, a2, a3, a4}, s.mu / det, {b1, b2, b3}};
}

// ---------------------------------------------------------------- random elements

PadicScalar random_element(const PadicCtx& C, std::mt19937_64& rng, int min_val) {
    std::uniform_int_distribution<int64_t> U(0, C.pN() - 1);
    PadicCtx::Poly c{};
    for (int k = 0; k < C.f(); ++k) c[k] = U(rng);
    return PadicScalar::from_poly(C, c, min_val);
}

PadicScalar random_unit(const PadicCtx& C, std::mt19937_64& rng) {
    for (;;) {
        PadicScalar x = random_element(C, rng, 0);
        if (!x.is_zero() && x.val() == 0) return x;
    }
}

GSp4Elem random_iwahori(const PadicCtx& C, std::mt19937_64& rng) {
    const auto one = PadicScalar::from_int(C, 1);
    const auto zero = PadicScalar::zero(C);
    GSp4Elem g = levi(one, zero, random_element(C, rng, 1), one, one);
    g = gsp4_mul(g, S_xyz(random_element(C, rng, 1), random_element(C, rng, 1), random_element(C, rng, 1)));
    g = gsp4_mul(g, levi(random_unit(C, rng), zero, zero, random_unit(C, rng), random_unit(C, rng)));
    g = gsp4_mul(g, levi(one, random_element(C, rng), zero, one, one));
    g = gsp4_mul(g, upper_B(random_element(C, rng), random_element(C, rng), random_element(C, rng)));
    return g;
}

GSp4Elem random_K(const PadicCtx& C, std::mt19937_64& rng) {
    const GSp4Elem w[] = {gsp4(mat4_identity(C)), s2(C), affine_reflection(C),
                          gsp4_mul(s2(C), affine_reflection(C)), gsp4_mul(affine_reflection(C), s2(C))};
    std::uniform_int_distribution<int> pick(0, 4);
    GSp4Elem g = random_iwahori(C, rng);
    for (int k = 0; k < 2; ++k) g = gsp4_mul(gsp4_mul(g, w[pick(rng)]), random_iwahori(C, rng));
    return g;
}

GSp4Elem random_Si(const PadicCtx& C, int n, std::mt19937_64& rng) {
    std::array<PadicScalar, 4> a;
    for (;;) {
        for (auto& x : a) x = random_element(C, rng);
        if ((a[0] * a[3] - a[1] * a[2]).is_unit()) break;
    }
    return siegel_element(n, {random_element(C, rng), random_element(C, rng), random_element(C, rng)}, a,
                          random_unit(C, rng), {random_element(C, rng), random_element(C, rng), random_element(C, rng)});
}

}  // namespace siegel
