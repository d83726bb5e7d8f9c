#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "nkz/errors.hpp"

namespace nkz {

/// Exact rational scalar. Always stored in lowest terms with positive
/// denominator (canonical form is maintained by every operation), so
/// equality is plain value comparison and hashing is well defined.
class Rational {
public:
    static constexpr unsigned characteristic = 0;

    Rational() : v_(0) {}
    Rational(long num) : v_(num) {} // NOLINT: implicit on purpose
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw InvalidInput("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p", or "p/q" with arbitrary-precision integers.
    static Rational parse(const std::string& text);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InvalidInput("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        if (is_zero()) throw InvalidInput("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }

    std::string str() const { return v_.get_str(); }
    double to_double() const { return v_.get_d(); }

    /// Cheap structural hash (residues of numerator and denominator).
    std::uint64_t hash() const {
        const std::uint64_t hn = mpz_fdiv_ui(v_.get_num_mpz_t(), 0xffffffffffc5ULL);
        const std::uint64_t hd = mpz_fdiv_ui(v_.get_den_mpz_t(), 0xffffffffffc5ULL);
        return hn * 0x9e3779b97f4a7c15ULL + hd;
    }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Prime-field scalar, the optional variant of the exact linear algebra layer.
/// Operations requiring characteristic zero are instantiated for Rational only.
template <unsigned P>
class Fp {
    static_assert(P >= 2 && P < (1u << 31), "prime modulus out of range");

public:
    static constexpr unsigned characteristic = P;

    Fp() : v_(0) {}
    Fp(long n) { // NOLINT: implicit on purpose
        long r = n % static_cast<long>(P);
        if (r < 0) r += P;
        v_ = static_cast<std::uint32_t>(r);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return from_raw(v_ == 0 ? 0 : P - v_); }
    Fp& operator+=(Fp o) { v_ += o.v_; if (v_ >= P) v_ -= P; return *this; }
    Fp& operator-=(Fp o) { v_ += P - o.v_; if (v_ >= P) v_ -= P; return *this; }
    Fp& operator*=(Fp o) {
        v_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) * o.v_) % P);
        return *this;
    }
    Fp& operator/=(Fp o) { return *this *= o.inverse(); }

    friend Fp operator+(Fp a, Fp b) { return a += b; }
    friend Fp operator-(Fp a, Fp b) { return a -= b; }
    friend Fp operator*(Fp a, Fp b) { return a *= b; }
    friend Fp operator/(Fp a, Fp b) { return a /= b; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inverse() const {
        if (v_ == 0) throw InvalidInput("inverse of zero");
        // Fermat: P is required to be prime.
        std::uint64_t base = v_, acc = 1, e = P - 2;
        while (e) {
            if (e & 1) acc = acc * base % P;
            base = base * base % P;
            e >>= 1;
        }
        return from_raw(static_cast<std::uint32_t>(acc));
    }

    std::string str() const { return std::to_string(v_); }
    std::uint64_t hash() const { return v_ * 0x9e3779b97f4a7c15ULL; }

private:
    static Fp from_raw(std::uint32_t v) {
        Fp f;
        f.v_ = v;
        return f;
    }
    std::uint32_t v_;
};

} // namespace nkz
