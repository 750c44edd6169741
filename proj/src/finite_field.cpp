#include "siegel/finite_field.hpp"

#include <string>

#include "siegel/error.hpp"

namespace siegel {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

int64_t floor_mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

int FqCtx::poly_add(int a, int b) const {
    int out = 0, scale = 1;
    for (int i = 0; i < 2 * f_; ++i) {
        out += ((a % p_ + b % p_) % p_) * scale;
        a /= p_;
        b /= p_;
        scale *= p_;
    }
    return out;
}

FqCtx::FqCtx(int p, int f) : p_(p), f_(f), q_(1) {
    if (!is_prime(p) || f < 1) throw BadArgument("build_field: p must be prime and f >= 1");
    for (int i = 0; i < f; ++i) {
        q_ *= p;
        if (q_ > kMaxQ) throw UnsupportedSize("build_field: q = p^f exceeds " + std::to_string(kMaxQ));
    }
    const int deg = 2 * f;
    const int size = q_ * q_;
    const int order = size - 1;

    // Search monic primitive polynomials x^deg + c_{deg-1} x^{deg-1} + ... + c_0.
    std::vector<int> digits(deg);
    auto times_x = [&](const std::vector<int>& a, const std::vector<int>& poly) {
        std::vector<int> r(deg, 0);
        const int top = a[deg - 1];
        for (int i = deg - 1; i > 0; --i) r[i] = a[i - 1];
        r[0] = 0;
        for (int i = 0; i < deg; ++i) r[i] = floor_mod(r[i] - top * poly[i], p_);
        return r;
    };
    auto code_of = [&](const std::vector<int>& a) {
        int c = 0;
        for (int i = deg - 1; i >= 0; --i) c = c * p_ + a[i];
        return c;
    };

    bool found = false;
    for (int c = 0; c < size && !found; ++c) {
        std::vector<int> poly(deg);
        int t = c;
        for (int i = 0; i < deg; ++i) {
            poly[i] = t % p_;
            t /= p_;
        }
        if (poly[0] == 0) continue;
        std::vector<int> cur(deg, 0);
        cur[0] = 1;
        std::vector<int> seq;
        seq.reserve(order);
        bool ok = true;
        for (int k = 0; k < order; ++k) {
            const int code = code_of(cur);
            if (k > 0 && code == 1) {
                ok = false;
                break;
            }
            seq.push_back(code);
            cur = times_x(cur, poly);
        }
        if (ok && code_of(cur) == 1) {
            exp2_ = std::move(seq);
            found = true;
        }
    }
    if (!found) throw Error(ErrorKind::Arithmetic, "build_field: no primitive polynomial found");

    log2_.assign(size, -1);
    for (int k = 0; k < order; ++k) log2_[exp2_[k]] = k;
    zech2_.assign(order, -1);
    for (int k = 0; k < order; ++k) zech2_[k] = log2_[poly_add(1, exp2_[k])];
    zechq_.assign(q_ - 1, -1);
    for (int m = 0; m < q_ - 1; ++m) {
        const int z = zech2_[(m * (q_ + 1)) % order];
        if (z >= 0) {
            if (z % (q_ + 1) != 0) throw Error(ErrorKind::Arithmetic, "build_field: subfield not closed");
            zechq_[m] = z / (q_ + 1);
        }
    }

    psi_exp_.assign(q_, 0);
    for (Fq a : elements()) {
        Fq tr = zero();
        int64_t e = 1;
        for (int i = 0; i < f_; ++i) {
            tr = add(tr, pow(a, e));
            e *= p_;
        }
        const int v = prime_field_value(tr);
        if (v < 0) throw Error(ErrorKind::Arithmetic, "build_field: trace not in prime field");
        psi_exp_[a.v] = v;
    }

    elliptic_.assign(q_ * q_, -1);
    for (Fq t : elements())
        for (Fq d : units()) {
            if (!roots(t, d).empty()) continue;
            for (int k = 0; k < order; ++k) {
                const Fq2 x = from_log2(k);
                const Fq2 val = add2(add2(mul2(x, x), mul2(embed(neg(t)), x)), embed(d));
                if (val.is_zero()) {
                    elliptic_[t.v * q_ + d.v] = k;
                    break;
                }
            }
        }
}

Fq FqCtx::from_log(int64_t k) const { return Fq{static_cast<uint8_t>(1 + floor_mod(k, q_ - 1))}; }

Fq FqCtx::from_int(int64_t c) const {
    const int r = static_cast<int>(floor_mod(c, p_));
    if (r == 0) return zero();
    const int l = log2_[r];
    return from_log(l / (q_ + 1));
}

int FqCtx::prime_field_value(Fq a) const {
    if (a.is_zero()) return 0;
    const int code = exp2_[floor_mod(int64_t(a.log()) * (q_ + 1), q2() - 1)];
    return code < p_ ? code : -1;
}

Fq FqCtx::add(Fq a, Fq b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int d = static_cast<int>(floor_mod(b.log() - a.log(), q_ - 1));
    const int z = zechq_[d];
    if (z < 0) return zero();
    return from_log(a.log() + z);
}

Fq FqCtx::neg(Fq a) const {
    if (a.is_zero() || p_ == 2) return a;
    return from_log(a.log() + (q_ - 1) / 2);
}

Fq FqCtx::mul(Fq a, Fq b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return from_log(a.log() + b.log());
}

Fq FqCtx::inv(Fq a) const {
    if (a.is_zero()) throw BadArgument("F_q: inverse of zero");
    return from_log(-a.log());
}

Fq FqCtx::pow(Fq a, int64_t e) const {
    if (a.is_zero()) {
        if (e < 0) throw BadArgument("F_q: negative power of zero");
        return e == 0 ? one() : zero();
    }
    return from_log(int64_t(a.log()) * e);
}

bool FqCtx::is_square(Fq a) const { return a.is_zero() || p_ == 2 || a.log() % 2 == 0; }

std::vector<Fq> FqCtx::elements() const {
    std::vector<Fq> out;
    for (int i = 0; i < q_; ++i) out.push_back(Fq{static_cast<uint8_t>(i)});
    return out;
}

std::vector<Fq> FqCtx::units() const {
    std::vector<Fq> out;
    for (int i = 1; i < q_; ++i) out.push_back(Fq{static_cast<uint8_t>(i)});
    return out;
}

Fq2 FqCtx::from_log2(int64_t k) const { return Fq2{static_cast<uint16_t>(1 + floor_mod(k, q2() - 1))}; }

Fq2 FqCtx::add2(Fq2 a, Fq2 b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int d = static_cast<int>(floor_mod(b.log() - a.log(), q2() - 1));
    const int z = zech2_[d];
    if (z < 0) return Fq2{};
    return from_log2(a.log() + z);
}

Fq2 FqCtx::mul2(Fq2 a, Fq2 b) const {
    if (a.is_zero() || b.is_zero()) return Fq2{};
    return from_log2(a.log() + b.log());
}

Fq2 FqCtx::pow2(Fq2 a, int64_t e) const {
    if (a.is_zero()) return e == 0 ? from_log2(0) : Fq2{};
    return from_log2(int64_t(a.log()) * e);
}

Fq2 FqCtx::embed(Fq a) const {
    if (a.is_zero()) return Fq2{};
    return from_log2(int64_t(a.log()) * (q_ + 1));
}

bool FqCtx::in_base(Fq2 a) const { return a.is_zero() || a.log() % (q_ + 1) == 0; }

Fq FqCtx::to_base(Fq2 a) const {
    if (!in_base(a)) throw BadArgument("F_q^2 element is not in F_q");
    if (a.is_zero()) return zero();
    return from_log(a.log() / (q_ + 1));
}

Fq FqCtx::norm(Fq2 a) const {
    if (a.is_zero()) return zero();
    return from_log(a.log());
}

Fq FqCtx::trace(Fq2 a) const { return to_base(add2(a, pow2(a, q_))); }

std::vector<Fq> FqCtx::roots(Fq t, Fq d) const {
    std::vector<Fq> out;
    for (Fq x : elements())
        if (add(sub(mul(x, x), mul(t, x)), d).is_zero()) out.push_back(x);
    return out;
}

int FqCtx::elliptic_root_log(Fq t, Fq d) const {
    const int k = elliptic_[t.v * q_ + d.v];
    if (k < 0) throw BadArgument("elliptic_root_log: polynomial splits over F_q");
    return k;
}

}  // namespace siegel
