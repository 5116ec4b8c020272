#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>

namespace eulerwaves {

inline constexpr int kMaxDim = 3;
inline constexpr double kPi = 3.14159265358979323846;

/// Chart coordinates of a point. Unused trailing slots stay zero.
struct Point {
    std::array<double, kMaxDim> x{};

    Point() = default;
    Point(double a, double b, double c = 0.0) : x{a, b, c} {}

    double& operator[](int i) { return x[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
};

/// Contravariant components of a tangent vector in the chart frame.
struct Vector {
    std::array<double, kMaxDim> c{};

    Vector() = default;
    Vector(double a, double b, double d = 0.0) : c{a, b, d} {}

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    Vector& operator+=(const Vector& o) {
        for (int i = 0; i < kMaxDim; ++i) (*this)[i] += o[i];
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        for (int i = 0; i < kMaxDim; ++i) (*this)[i] -= o[i];
        return *this;
    }
    Vector& operator*=(double s) {
        for (auto& v : c) v *= s;
        return *this;
    }
};

inline Vector operator+(Vector a, const Vector& b) { return a += b; }
inline Vector operator-(Vector a, const Vector& b) { return a -= b; }
inline Vector operator*(double s, Vector a) { return a *= s; }
inline Vector operator*(Vector a, double s) { return a *= s; }
inline Vector operator-(Vector a) { return a *= -1.0; }

/// Symmetric matrix storage; only the leading dim x dim block is meaningful.
using Matrix = std::array<std::array<double, kMaxDim>, kMaxDim>;

/// Exact rational used to report spectral data when it is known in closed form.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
    bool is_zero() const { return num == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return {a.num * b.num, a.den * b.den};
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        return {a.num * b.den, a.den * b.num};
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

}  // namespace eulerwaves
