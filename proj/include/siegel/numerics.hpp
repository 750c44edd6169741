#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>

namespace siegel {

/// A character value: a complex number, optionally carrying the exact
/// exponent multiplicities sum_k c_k zeta_m^k it was built from.
class CharValue {
public:
    CharValue() = default;
    CharValue(double re);  // NOLINT(google-explicit-constructor)
    explicit CharValue(std::complex<double> z) : z_(z) {}

    static CharValue root_of_unity(int64_t m, int64_t k);

    std::complex<double> value() const { return z_; }
    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }

    /// Exact multiplicities, present only while every operation preserved them.
    const std::optional<std::map<int64_t, int64_t>>& exact() const { return exact_; }
    int64_t modulus() const { return m_; }

    /// Sum of |c_k|; bounds |value| when the exact vector is present.
    std::optional<int64_t> l1_bound() const;

    CharValue conj() const;

    CharValue& operator+=(const CharValue& o);
    CharValue& operator-=(const CharValue& o);
    CharValue& operator*=(const CharValue& o);
    CharValue& operator*=(double s);

    friend CharValue operator+(CharValue a, const CharValue& b) { return a += b; }
    friend CharValue operator-(CharValue a, const CharValue& b) { return a -= b; }
    friend CharValue operator*(CharValue a, const CharValue& b) { return a *= b; }
    friend CharValue operator*(CharValue a, double s) { return a *= s; }
    friend CharValue operator-(CharValue a) { return a *= -1.0; }

private:
    std::complex<double> z_{0.0, 0.0};
    int64_t m_ = 0;
    std::optional<std::map<int64_t, int64_t>> exact_;

    void drop_exact() { exact_.reset(); }
    void merge_exact(const CharValue& o, int64_t sign);
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Rounds v to the nearest integer; throws NotAnInteger when the residual or the
/// imaginary part reaches tol.
int64_t certify_integer(const CharValue& v, double tol = kDefaultTolerance);
int64_t certify_integer(std::complex<double> v, double tol = kDefaultTolerance);

}  // namespace siegel
