#include "siegel/numerics.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <numeric>
#include <sstream>

#include "siegel/error.hpp"

namespace siegel {

namespace {

int64_t floor_mod(int64_t a, int64_t m) {
    int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::map<int64_t, int64_t> rescale(const std::map<int64_t, int64_t>& v, int64_t from, int64_t to) {
    std::map<int64_t, int64_t> out;
    const int64_t factor = to / from;
    for (auto [k, c] : v) out[k * factor] += c;
    return out;
}

void prune(std::map<int64_t, int64_t>& v) {
    std::erase_if(v, [](const auto& kv) { return kv.second == 0; });
}

}  // namespace

CharValue::CharValue(double re) : z_(re, 0.0) {
    if (std::round(re) == re) {
        m_ = 1;
        exact_ = std::map<int64_t, int64_t>{};
        if (re != 0.0) (*exact_)[0] = static_cast<int64_t>(re);
    }
}

CharValue CharValue::root_of_unity(int64_t m, int64_t k) {
    if (m < 1) throw BadArgument("root_of_unity: m must be positive");
    const int64_t r = floor_mod(k, m);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
    CharValue v(std::complex<double>(std::cos(angle), std::sin(angle)));
    v.m_ = m;
    v.exact_ = std::map<int64_t, int64_t>{{r, 1}};
    return v;
}

std::optional<int64_t> CharValue::l1_bound() const {
    if (!exact_) return std::nullopt;
    int64_t s = 0;
    for (auto [k, c] : *exact_) s += std::llabs(c);
    return s;
}

CharValue CharValue::conj() const {
    CharValue v(std::conj(z_));
    if (exact_) {
        v.m_ = m_;
        v.exact_ = std::map<int64_t, int64_t>{};
        for (auto [k, c] : *exact_) (*v.exact_)[floor_mod(-k, m_)] += c;
    }
    return v;
}

void CharValue::merge_exact(const CharValue& o, int64_t sign) {
    if (!exact_ || !o.exact_) {
        drop_exact();
        return;
    }
    const int64_t l = std::lcm(m_, o.m_);
    auto mine = rescale(*exact_, m_, l);
    for (auto [k, c] : rescale(*o.exact_, o.m_, l)) mine[k] += sign * c;
    prune(mine);
    m_ = l;
    exact_ = std::move(mine);
}

CharValue& CharValue::operator+=(const CharValue& o) {
    z_ += o.z_;
    merge_exact(o, 1);
    return *this;
}

CharValue& CharValue::operator-=(const CharValue& o) {
    z_ -= o.z_;
    merge_exact(o, -1);
    return *this;
}

CharValue& CharValue::operator*=(const CharValue& o) {
    z_ *= o.z_;
    if (!exact_ || !o.exact_) {
        drop_exact();
        return *this;
    }
    const int64_t l = std::lcm(m_, o.m_);
    const auto a = rescale(*exact_, m_, l);
    const auto b = rescale(*o.exact_, o.m_, l);
    std::map<int64_t, int64_t> out;
    for (auto [ka, ca] : a)
        for (auto [kb, cb] : b) out[floor_mod(ka + kb, l)] += ca * cb;
    prune(out);
    m_ = l;
    exact_ = std::move(out);
    return *this;
}

CharValue& CharValue::operator*=(double s) {
    z_ *= s;
    const double r = std::round(s);
    if (exact_ && r == s) {
        for (auto& [k, c] : *exact_) c *= static_cast<int64_t>(r);
        prune(*exact_);
    } else {
        drop_exact();
    }
    return *this;
}

int64_t certify_integer(std::complex<double> v, double tol) {
    if (!(tol > 0)) throw BadArgument("certify_integer: tolerance must be positive");
    const double r = std::round(v.real());
    if (std::abs(v - std::complex<double>(r, 0.0)) >= tol || std::abs(v.imag()) >= tol) {
        std::ostringstream os;
        os.precision(17);
        os << "value " << v.real() << " + " << v.imag() << "i is not an integer within " << tol;
        throw NotAnInteger(os.str());
    }
    return static_cast<int64_t>(r);
}

int64_t certify_integer(const CharValue& v, double tol) { return certify_integer(v.value(), tol); }

}  // namespace siegel
