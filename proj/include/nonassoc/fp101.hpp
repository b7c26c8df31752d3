#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "nonassoc/rational.hpp"

namespace nonassoc {

// Element of the prime field F_101. The modulus is fixed at compile time;
// 101 is the customary prime in the polynomial-identities literature and
// keeps every intermediate product inside a 32-bit word.
struct Fp101 {
    static constexpr uint32_t P = 101;
    uint32_t v = 0;

    Fp101() = default;
    explicit constexpr Fp101(uint32_t raw) : v(raw % P) {}

    static Fp101 from_int(long long n) {
        long long r = n % static_cast<long long>(P);
        if (r < 0) r += P;
        Fp101 x;
        x.v = static_cast<uint32_t>(r);
        return x;
    }

    friend Fp101 operator+(Fp101 a, Fp101 b) {
        Fp101 r;
        r.v = a.v + b.v;
        if (r.v >= P) r.v -= P;
        return r;
    }
    friend Fp101 operator-(Fp101 a, Fp101 b) {
        Fp101 r;
        r.v = a.v + P - b.v;
        if (r.v >= P) r.v -= P;
        return r;
    }
    friend Fp101 operator*(Fp101 a, Fp101 b) {
        Fp101 r;
        r.v = (a.v * b.v) % P;
        return r;
    }
    Fp101 operator-() const {
        Fp101 r;
        r.v = v == 0 ? 0 : P - v;
        return r;
    }
    Fp101& operator+=(Fp101 b) { return *this = *this + b; }
    Fp101& operator-=(Fp101 b) { return *this = *this - b; }
    Fp101& operator*=(Fp101 b) { return *this = *this * b; }

    friend bool operator==(Fp101 a, Fp101 b) { return a.v == b.v; }
    friend bool operator!=(Fp101 a, Fp101 b) { return a.v != b.v; }
};

inline Fp101 fp_pow(Fp101 a, uint32_t e) {
    Fp101 r = Fp101(1);
    while (e) {
        if (e & 1) r *= a;
        a *= a;
        e >>= 1;
    }
    return r;
}

inline Fp101 fp_inv(Fp101 a) {
    if (a.v == 0) throw std::domain_error("Fp101: division by zero");
    return fp_pow(a, Fp101::P - 2);
}

// ---- uniform field interface used by the generic linear algebra ----

template <class F>
struct FieldOps;

template <>
struct FieldOps<Fp101> {
    static Fp101 zero() { return Fp101(0); }
    static Fp101 one() { return Fp101(1); }
    static bool is_zero(Fp101 a) { return a.v == 0; }
    static Fp101 inv(Fp101 a) { return fp_inv(a); }
    static Fp101 from_rat(const Rat& q) {
        Fp101 num = Fp101::from_int(mpz_fdiv_ui(q.get_num().get_mpz_t(), Fp101::P));
        Fp101 den = Fp101::from_int(mpz_fdiv_ui(q.get_den().get_mpz_t(), Fp101::P));
        if (den.v == 0)
            throw std::domain_error("Fp101: denominator divisible by 101");
        return num * fp_inv(den);
    }
    // Symmetric lift back to Q, for presenting mod-p results as polynomials.
    static Rat to_rat(Fp101 a) {
        long long v = a.v;
        if (v > static_cast<long long>(Fp101::P / 2)) v -= Fp101::P;
        return Rat(static_cast<long>(v));
    }
    static std::string str(Fp101 a) { return std::to_string(a.v); }
    static constexpr const char* name() { return "F101"; }
};

template <>
struct FieldOps<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& a) { return sgn(a) == 0; }
    static Rat inv(const Rat& a) {
        if (sgn(a) == 0) throw std::domain_error("Rat: division by zero");
        return Rat(1) / a;
    }
    static Rat from_rat(const Rat& q) { return q; }
    static Rat to_rat(const Rat& a) { return a; }
    static std::string str(const Rat& a) { return to_string(a); }
    static constexpr const char* name() { return "Q"; }
};

}  // namespace nonassoc
