#include "siegel/identities.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <tuple>

#include "siegel/gl22.hpp"

namespace siegel {

std::string to_string(IdentityTag t) {
    switch (t) {
        case IdentityTag::LowerShift: return "lower-shift";
        case IdentityTag::CornerUnipotent: return "corner-unipotent";
        case IdentityTag::MixedUnipotent: return "mixed-unipotent";
        case IdentityTag::UpperUnipotent: return "upper-unipotent";
        case IdentityTag::DiagonalA: return "diagonal-a";
        case IdentityTag::XUnipotent: return "x-unipotent";
        case IdentityTag::LeviX: return "levi-x";
        case IdentityTag::TorusY: return "torus-y";
        case IdentityTag::LeviY: return "levi-y";
        case IdentityTag::LeviXYZ: return "levi-xyz";
        case IdentityTag::AlphaFamily: return "alpha-family";
        case IdentityTag::ALDiagonal: return "al-diagonal";
        case IdentityTag::ALTypeII: return "al-type-II";
        case IdentityTag::ALTypeIII: return "al-type-III";
        case IdentityTag::ALTypeIV: return "al-type-IV";
        case IdentityTag::UnSquare: return "un-square";
        case IdentityTag::U1NormalizesK: return "u1-normalizes-K";
    }
    return "?";
}

const std::vector<IdentityTag>& all_identity_tags() {
    static const std::vector<IdentityTag> tags{
        IdentityTag::LowerShift,  IdentityTag::CornerUnipotent, IdentityTag::MixedUnipotent, IdentityTag::UpperUnipotent,
        IdentityTag::DiagonalA,   IdentityTag::XUnipotent,      IdentityTag::LeviX,          IdentityTag::TorusY,
        IdentityTag::LeviY,       IdentityTag::LeviXYZ,         IdentityTag::AlphaFamily,    IdentityTag::ALDiagonal,
        IdentityTag::ALTypeII,    IdentityTag::ALTypeIII,       IdentityTag::ALTypeIV,       IdentityTag::UnSquare,
        IdentityTag::U1NormalizesK};
    return tags;
}

int identity_precision(int p, int i, int j, int n) {
    const int cap = p == 2 ? 61 : p == 3 ? 38 : 20;
    return std::min(cap, n + 2 * i + std::abs(j) + 8 + 24);
}

namespace {

using P = PadicScalar;
using Entries = std::initializer_list<std::tuple<int, int, P>>;

Mat4 from_identity(const PadicCtx& C, Entries e) {
    Mat4 m = mat4_identity(C);
    for (const auto& [r, c, v] : e) at(m, r, c) = v;
    return m;
}

Mat4 from_zero(const PadicCtx& C, Entries e) {
    Mat4 m = mat4_zero(C);
    for (const auto& [r, c, v] : e) at(m, r, c) = v;
    return m;
}

Mat4 mul(std::initializer_list<Mat4> ms) {
    auto it = ms.begin();
    Mat4 r = *it++;
    for (; it != ms.end(); ++it) r = mat4_mul(r, *it);
    return r;
}

class Checker {
public:
    explicit Checker(IdentityOutcome& out) : out_(out) {}

    void mat(const std::string& what, const Mat4& lhs, const Mat4& rhs) {
        if (!out_.holds) return;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                if (!padic_equal(at(lhs, r, c), at(rhs, r, c))) {
                    std::ostringstream os;
                    os << what << ": entry (" << r + 1 << "," << c + 1 << ") " << at(lhs, r, c).str()
                       << " != " << at(rhs, r, c).str();
                    fail(os.str());
                    return;
                }
    }
    void scalar(const std::string& what, const P& lhs, const P& rhs) {
        if (!out_.holds) return;
        if (!padic_equal(lhs, rhs)) fail(what + ": " + lhs.str() + " != " + rhs.str());
    }
    void truth(const std::string& what, bool ok) {
        if (out_.holds && !ok) fail(what);
    }

private:
    void fail(const std::string& d) {
        out_.holds = false;
        out_.detail = d;
    }
    IdentityOutcome& out_;
};

struct Draw {
    const PadicCtx& C;
    std::mt19937_64& rng;

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
    P unit() { return random_unit(C, rng); }
    /// Nonzero with valuation exactly v.
    P exact(int v) { return P::pi_pow(C, v) * unit(); }
    /// Nonzero with valuation uniform in [lo, hi].
    P val_in(int lo, int hi) { return exact(uniform(lo, std::max(lo, hi))); }
    /// Element of p^k, possibly zero.
    P ideal(int k) { return random_element(C, rng, k); }
    std::array<P, 4> gl2_o() {
        std::array<P, 4> a;
        for (;;) {
            for (auto& x : a) x = ideal(0);
            if ((a[0] * a[3] - a[1] * a[2]).is_unit()) return a;
        }
    }
};

Mat4 conj(const GSp4Elem& g, const Mat4& x) { return mul({g.mat, x, gsp4_inv(g).mat}); }

GSp4Elem tS(const PadicCtx& C, int i, int j, const P& x, const P& y, const P& z) {
    return gsp4_mul(t_ij(C, i, j), S_xyz(x, y, z));
}

}  // namespace

IdentityOutcome verify_identity(const PadicCtx& C, IdentityTag tag, int i, int j, int n, std::mt19937_64& rng) {
    IdentityOutcome out;
    Checker chk(out);
    Draw d{C, rng};
    const P zero = P::zero(C), one = P::from_int(C, 1), two = P::from_int(C, 2);
    auto pi = [&](int k) { return P::pi_pow(C, k); };
    const int e = C.e();
    const int vmax = 2 * i + std::abs(j) + 3;

    switch (tag) {
        case IdentityTag::LowerShift: {
            const P x = d.ideal(1), y = d.ideal(1), z = d.ideal(1), c = d.ideal(i + 1);
            const GSp4Elem A = levi(one, zero, c, one, one);
            chk.mat("A^-1 S A", mul({gsp4_inv(A).mat, S_xyz(x, y, z).mat, A.mat}),
                    S_xyz(x + c * y, y, z + two * c * x + c * c * y).mat);
            chk.truth("t A t^-1 in K", in_K(gsp4_conj(t_ij(C, i, j), A)));
            break;
        }
        case IdentityTag::CornerUnipotent: {
            const P c = d.ideal(std::max(0, 2 * i + j + 1 - n));
            const GSp4Elem g = tS(C, i, j, d.ideal(1), d.ideal(1), d.ideal(1));
            const Mat4 E = from_identity(C, {{3, 0, pi(n) * c}});
            const Mat4 rhs = from_identity(C, {{3, 0, pi(n - 2 * i - j) * c}});
            chk.mat("g E g^-1", conj(g, E), rhs);
            if (2 * i + j >= n - 1) chk.truth("conjugate in K", in_K(gsp4(rhs)));
            break;
        }
        case IdentityTag::MixedUnipotent: {
            const P x = d.ideal(1), y = d.ideal(1), z = d.ideal(1), b = d.ideal(0);
            const GSp4Elem g = tS(C, i, j, x, y, z);
            const Mat4 E = from_identity(C, {{1, 0, x * b}, {1, 2, b}, {3, 2, -(x * b)}});
            const Mat4 rhs = from_identity(C, {{1, 1, one - y * b},
                                               {1, 2, pi(j) * b},
                                               {2, 1, -(pi(-j) * y * y * b)},
                                               {2, 2, one + y * b},
                                               {3, 0, pi(-2 * i - j) * x * x * b}});
            chk.mat("g M g^-1", conj(g, E), rhs);
            break;
        }
        case IdentityTag::UpperUnipotent: {
            const P x = d.ideal(1), y = d.ideal(1), z = d.ideal(1), b = d.ideal(0);
            const GSp4Elem g = tS(C, i, j, x, y, z);
            const Mat4 E = from_identity(C, {{1, 2, b}});
            const P xb = x * b, xyb = x * y * b;
            const Mat4 rhs = from_identity(C, {{1, 0, -(pi(-i) * xb)},
                                               {1, 1, one - y * b},
                                               {1, 2, pi(j) * b},
                                               {2, 0, -(pi(-i - j) * xyb)},
                                               {2, 1, -(pi(-j) * y * y * b)},
                                               {2, 2, one + y * b},
                                               {3, 0, -(pi(-2 * i - j) * x * xb)},
                                               {3, 1, -(pi(-i - j) * xyb)},
                                               {3, 2, pi(-i) * xb}});
            chk.mat("g (1 + b e23) g^-1", conj(g, E), rhs);
            break;
        }
        case IdentityTag::DiagonalA: {
            const P x = d.ideal(1), y = d.ideal(1), z = d.ideal(1), a = one + d.ideal(1);
            const GSp4Elem g = tS(C, i, j, x, y, z);
            const Mat4 E = mat4_diag(C, {one, a, one, a});
            const Mat4 rhs = from_zero(C, {{0, 0, one},
                                           {1, 1, a},
                                           {2, 1, pi(-j) * y * (a - one)},
                                           {2, 2, one},
                                           {3, 0, pi(-2 * i - j) * z * (one - a)},
                                           {3, 3, a}});
            chk.mat("g diag(1,a,1,a) g^-1", conj(g, E), rhs);
            break;
        }
        case IdentityTag::XUnipotent: {
            const P x = d.ideal(1), a = d.ideal(1);
            const GSp4Elem g = tS(C, i, j, x, zero, zero);
            const Mat4 E = from_identity(C, {{1, 0, pi(i) * a}, {3, 2, -(pi(i) * a)}});
            const Mat4 rhs = from_identity(C, {{1, 0, a}, {3, 0, two * x * pi(-i - j) * a}, {3, 2, -a}});
            chk.mat("g E g^-1", conj(g, E), rhs);
            break;
        }
        case IdentityTag::LeviX: {
            const P x = d.ideal(1), lam = d.unit();
            const auto A = d.gl2_o();
            const GSp4Elem g = tS(C, i, j, x, zero, zero);
            const Mat4 rhs = from_zero(C, {{0, 0, A[0]},
                                           {0, 1, pi(i) * A[1]},
                                           {1, 0, pi(-i) * A[2]},
                                           {1, 1, A[3]},
                                           {2, 0, pi(-i - j) * x * A[0] * (one - lam)},
                                           {2, 1, pi(-j) * x * A[1] * (one + lam)},
                                           {2, 2, lam * A[0]},
                                           {2, 3, -(pi(i) * lam * A[1])},
                                           {3, 0, pi(-2 * i - j) * x * A[2] * (one + lam)},
                                           {3, 1, pi(-i - j) * x * A[3] * (one - lam)},
                                           {3, 2, -(pi(-i) * lam * A[2])},
                                           {3, 3, lam * A[3]}});
            chk.mat("g levi g^-1", conj(g, levi(A[0], A[1], A[2], A[3], lam).mat), rhs);
            break;
        }
        case IdentityTag::TorusY: {
            // a = 1 + v p^j / 2y must be a unit: val(y) <= j - 2e - 1.
            if (j - 2 * e - 1 < 1) throw BadArgument("torus-y needs j >= 2e + 2");
            const P y = d.val_in(1, j - 2 * e - 1), z = d.ideal(1), v = d.ideal(0);
            const P a = one + v * pi(j) / (two * y);
            const GSp4Elem g = tS(C, i, j, zero, y, z);
            const Mat4 E = mat4_diag(C, {one, a, one / a, one});
            const P entry = pi(-j) * y * (a - one / a);
            const Mat4 rhs = from_zero(C, {{0, 0, one}, {1, 1, a}, {2, 1, entry}, {2, 2, one / a}, {3, 3, one}});
            chk.mat("g diag(1,a,1/a,1) g^-1", conj(g, E), rhs);
            chk.scalar("(3,2) entry", entry, v / a * (one + v * pi(j) / (P::from_int(C, 4) * y)));
            chk.truth("(3,2) entry = v mod p", (entry - v).val_at_least(1));
            break;
        }
        case IdentityTag::LeviY:
        case IdentityTag::LeviXYZ: {
            const bool with_x = tag == IdentityTag::LeviXYZ;
            const P x = with_x ? d.val_in(1, vmax) : zero;
            const P y = d.val_in(1, vmax), z = d.val_in(1, vmax), lam = d.unit();
            const auto A = d.gl2_o();
            const P &a1 = A[0], &a2 = A[1], &a3 = A[2], &a4 = A[3];
            const P m1 = x * a1 * (one - lam) + y * a3 + z * lam * a2;
            const P m2 = x * a2 * (one + lam) + y * (a4 - lam * a1);
            const P m3 = x * a3 * (one + lam) + z * (a1 - lam * a4);
            const P m4 = x * a4 * (one - lam) + lam * y * a3 + z * a2;
            const GSp4Elem g = tS(C, i, j, x, y, z);
            const Mat4 lhs = conj(g, levi(a1, a2, a3, a4, lam).mat);
            const Mat4 rhs = from_zero(C, {{0, 0, a1},
                                           {0, 1, pi(i) * a2},
                                           {1, 0, pi(-i) * a3},
                                           {1, 1, a4},
                                           {2, 0, pi(-i - j) * m1},
                                           {2, 1, pi(-j) * m2},
                                           {2, 2, lam * a1},
                                           {2, 3, -(pi(i) * lam * a2)},
                                           {3, 0, pi(-2 * i - j) * m3},
                                           {3, 1, pi(-i - j) * m4},
                                           {3, 2, -(pi(-i) * lam * a3)},
                                           {3, 3, lam * a4}});
            chk.mat("g levi g^-1", lhs, rhs);
            if (!with_x) break;
            // Rewriting of the K-membership conditions.
            const P t = pi(i) * y / x, u = z / (y * pi(2 * i + 1));
            const P a3p = pi(-i - 1) * a3, a2p = pi(i) * a2, pt = pi(1) * t;
            const P S1 = m1 / (pi(1) * x * t), R1 = m2 / y, R2 = m3 / (pi(i + 1) * x * t), S2 = m4 / (pi(1) * x * t);
            chk.scalar("S1", S1, a1 * ((one - lam) / pt) + a3p + u * lam * a2p);
            chk.scalar("R1", R1, a2p * ((one + lam) / t) + a4 - lam * a1);
            chk.scalar("R2", R2, a3p * ((one + lam) / t) + u * (a1 - lam * a4));
            chk.scalar("S2", S2, a4 * ((one - lam) / pt) + lam * a3p + u * a2p);
            const P k = (lam * lam - one) / (pt * t), c1 = one - u * pi(1) * t * t;
            chk.scalar("S2 substituted", S2, a2p * k * c1 + R1 * ((one - lam) / pt) + lam * S1);
            chk.scalar("R2 substituted", R2, a1 * k * c1 - lam * u * R1 + ((one + lam) / t) * S1);
            chk.scalar("lambda R2", lam * R2,
                       k * c1 * (a1 * lam - a2p * ((one + lam) / t) + R1) - u * R1 + ((lam + one) / t) * S2);
            const GSp4Elem conjugate = gsp4(lhs);
            if (in_K(conjugate)) {
                const FqCtx& F = C.residue_field();
                const GL22Elem want{GL2Elem{a1.residue(), F.zero(), (pi(-2 * i - j - 1) * m3).residue(), (lam * a4).residue()},
                                    GL2Elem{a4.residue(), F.zero(), (pi(-j) * m2).residue(), (lam * a1).residue()}};
                chk.truth("reduction of the Levi conjugate", reduce_K(conjugate) == want);
            }
            break;
        }
        case IdentityTag::AlphaFamily: {
            const P x = d.val_in(1, vmax), y = d.val_in(1, vmax), z = d.val_in(1, vmax), al = d.ideal(1);
            const P t = pi(i) * y / x, opa = one + al;
            const GSp4Elem g = tS(C, i, j, x, y, z);
            const P m = al * x * x / (pi(2 * i + j) * y) * (two + al) * (one - z * y / (x * x));
            const Mat4 rhs =
                from_identity(C, {{1, 0, al / t}, {1, 1, opa}, {2, 2, opa}, {3, 0, m}, {3, 2, -(opa * al / t)}, {3, 3, opa * opa}});
            chk.mat("g E(alpha) g^-1", conj(g, levi(one, zero, al * x / y, opa, opa).mat), rhs);
            break;
        }
        case IdentityTag::ALDiagonal: {
            const Mat4 lhs = mat4_mul(t_ij(C, i, j).mat, u_n(C, n).mat);
            const Mat4 rhs = mat4_scale(pi(i + j), mat4_mul(u_n(C, 1).mat, t_ij(C, i, n - 2 * i - j - 1).mat));
            chk.mat("t u_n", lhs, rhs);
            break;
        }
        case IdentityTag::ALTypeII: {
            const int k = d.uniform(0, n);
            const Mat4 lhs = mul({t_ij(C, i, j).mat, X_k(C, k).mat, u_n(C, n).mat});
            const P s = pi(i + j - k);
            const Mat4 M = from_zero(C, {{0, 0, -one}, {0, 2, s}, {1, 1, one}, {1, 3, -s}, {2, 2, one}, {3, 3, -one}});
            const Mat4 rhs = mat4_scale(pi(k), mul({M, t_ij(C, i, j + n - 2 * k).mat, X_k(C, n - k).mat}));
            chk.mat("t X_k u_n", lhs, rhs);
            break;
        }
        case IdentityTag::ALTypeIII: {
            const P y = d.val_in(1, vmax), z = d.val_in(1, vmax);
            const Mat4 h1 = from_zero(C, {{0, 3, pi(-1)},
                                          {1, 2, one},
                                          {2, 1, one},
                                          {2, 2, -(pi(2 * i + j + 1) / z)},
                                          {3, 0, pi(1)},
                                          {3, 3, -(pi(j) / y)}});
            const Mat4 h2 = mat4_diag(C, {pi(n + j - 1) / (y * y), pi(n + i + j) / (y * z), z / (y * pi(i + 1)), one});
            const Mat4 sign = mat4_diag(C, {one, one, -one, -one});
            const Mat4 lhs = mul({t_ij(C, i, j).mat, S_xyz(zero, y, z).mat, u_n(C, n).mat});
            const Mat4 rhs = mat4_scale(pi(i) * y, mul({u_n(C, 1).mat, h1, h2, S_xyz(zero, pi(n) / z, pi(n) / y).mat, sign}));
            chk.mat("t S(0,y,z) u_n", lhs, rhs);
            // y = u p^r, z = p^{2i+1+r}.
            const int r = d.uniform(1, std::max(1, j));
            const P u = d.unit(), yr = u * pi(r), zr = pi(2 * i + 1 + r);
            const Mat4 du = mat4_diag(C, {one, one, u, u}), dui = mat4_diag(C, {one, one, one / u, one / u});
            chk.mat("u-scaling", S_xyz(zero, pi(n) / zr, pi(n) / yr).mat,
                    mul({dui, S_xyz(zero, u * pi(n - 2 * i - 1 - r), pi(n - r)).mat, du}));
            break;
        }
        case IdentityTag::ALTypeIV: {
            const int r = d.uniform(1, std::max(1, j));
            const P y = d.exact(r), x = d.exact(i + r), z = d.exact(2 * i + 1 + r);
            const P lam = one - y * z / (x * x);
            chk.truth("lambda is a unit", lam.is_unit());
            const P x2 = x * x;
            const Mat4 h = mat4_diag(C, {pi(2 * i + j + n) / x2, pi(i + j + n) / (x2 * lam), lam * pi(i), one});
            const Mat4 B = from_zero(C, {{0, 0, one},
                                         {1, 0, -(z / (lam * pi(i) * x))},
                                         {1, 1, -one},
                                         {2, 2, one / lam},
                                         {3, 2, z / (lam * lam * pi(i) * x)},
                                         {3, 3, -(one / lam)}});
            const Mat4 Pm = from_identity(C, {{0, 0, -one},
                                              {0, 1, pi(i) * y / x},
                                              {0, 2, pi(i + j) / (x * lam)},
                                              {1, 1, -one},
                                              {1, 2, -(pi(j) * z / (x2 * lam))},
                                              {1, 3, pi(i + j) / x},
                                              {2, 3, pi(i) * y / x}});
            const Mat4 lhs = mul({t_ij(C, i, j).mat, S_xyz(x, y, z).mat, u_n(C, n).mat});
            const Mat4 rhs = mat4_scale(
                x, mul({Pm, B, h, S_xyz(pi(n) / x, pi(n) * y / x2, pi(n) * z / x2).mat, mat4_diag(C, {one, one, lam, lam})}));
            chk.mat("t S(x,y,z) u_n", lhs, rhs);
            break;
        }
        case IdentityTag::UnSquare: {
            const Mat4 u = u_n(C, n).mat;
            chk.mat("u_n^2", mat4_mul(u, u), mat4_scale(pi(n), mat4_identity(C)));
            break;
        }
        case IdentityTag::U1NormalizesK: {
            const GSp4Elem k = random_K(C, rng);
            const GSp4Elem x = gsp4_conj(u_n(C, 1), k);
            chk.truth("u_1 k u_1^-1 in K", in_K(x));
            if (out.holds) {
                const FqCtx& F = C.residue_field();
                chk.truth("reduction intertwines u_action", reduce_K(x) == u_action(F, reduce_K(k)));
            }
            break;
        }
    }
    return out;
}

namespace {

struct Family {
    int i, j, n;
};

/// The (i, j, n) grid each identity is drawn over.
std::vector<Family> families(IdentityTag tag, int p, const IdentitySuiteOptions& o) {
    const int e = p == 2 ? 1 : 0;
    std::vector<Family> out;
    switch (tag) {
        case IdentityTag::UnSquare:
            for (int n = 0; n <= o.n_max; ++n) out.push_back({0, 0, n});
            break;
        case IdentityTag::U1NormalizesK: out.push_back({0, 0, 0}); break;
        case IdentityTag::CornerUnipotent:
        case IdentityTag::ALDiagonal:
        case IdentityTag::ALTypeII:
        case IdentityTag::ALTypeIII:
        case IdentityTag::ALTypeIV:
            for (int i = 0; i <= o.i_max; ++i)
                for (int j = 1; j <= o.j_max; ++j)
                    for (int n = 1; n <= o.n_max; ++n) out.push_back({i, j, n});
            break;
        case IdentityTag::MixedUnipotent:
            for (int i = 0; i <= o.i_max; ++i)
                for (int j = -o.j_max; j <= 0; ++j) out.push_back({i, j, 0});
            break;
        case IdentityTag::TorusY:
            for (int i = 0; i <= o.i_max; ++i)
                for (int j = 2 * e + 2; j <= o.j_max; ++j) out.push_back({i, j, 0});
            break;
        default:
            for (int i = 0; i <= o.i_max; ++i)
                for (int j = 1; j <= o.j_max; ++j) out.push_back({i, j, 0});
    }
    return out;
}

}  // namespace

std::vector<IdentitySuiteRow> run_identity_suite(const IdentitySuiteOptions& opt) {
    std::vector<IdentitySuiteRow> rows;
    constexpr size_t kMaxMessages = 5;
    for (int p : opt.primes)
        for (IdentityTag tag : all_identity_tags()) {
            IdentitySuiteRow row;
            row.tag = tag;
            row.p = p;
            std::mt19937_64 rng(opt.seed ^ (uint64_t(p) << 40) ^ (uint64_t(tag) << 48));
            for (const Family& fam : families(tag, p, opt)) {
                const PadicCtx C(p, opt.f, identity_precision(p, fam.i, fam.j, fam.n));
                for (int k = 0; k < opt.draws; ++k) {
                    ++row.checks;
                    std::string msg;
                    try {
                        const IdentityOutcome r = verify_identity(C, tag, fam.i, fam.j, fam.n, rng);
                        if (r.holds) continue;
                        ++row.failures;
                        msg = r.detail;
                    } catch (const PrecisionExhausted& ex) {
                        ++row.failures;
                        ++row.precision_failures;
                        msg = std::string("precision: ") + ex.what();
                    }
                    if (row.messages.size() < kMaxMessages) {
                        std::ostringstream os;
                        os << "i=" << fam.i << " j=" << fam.j << " n=" << fam.n << ": " << msg;
                        row.messages.push_back(os.str());
                    }
                }
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

}  // namespace siegel
