#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "ruled/errors.hpp"

namespace ruled {

// Exact rational scalar.  Thin wrapper over GMP's mpq_class; values are kept
// canonical (reduced, positive denominator) at all times.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) {
        if (d == 0) throw math_error("rational with zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw document_error("bad rational literal: " + s);
        if (q.get_den() == 0) throw document_error("zero denominator: " + s);
        q.canonicalize();
        return Rational(q);
    }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_one() const { return q_ == 1; }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw math_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }

    [[nodiscard]] Rational inv() const {
        if (is_zero()) throw math_error("inverse of zero");
        return Rational(mpq_class(1) / q_);
    }

    [[nodiscard]] std::string str() const { return q_.get_str(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }
    [[nodiscard]] mpz_class num() const { return q_.get_num(); }
    [[nodiscard]] mpz_class den() const { return q_.get_den(); }

  private:
    mpq_class q_;
};

// Prime-field scalar with the modulus carried per element.  A modulus of 0
// marks an unbound integer literal (e.g. a K(1) written in generic template
// code); it binds to the first concrete modulus it meets.  Elements bound to
// different moduli never mix.  p must be an odd prime below 2^31: several
// constructions (apolarity weights, quadric normal forms, the diagonal
// conventions) divide by 2, and residue products must fit in 64 bits.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(long n) : v_(n), p_(0) {}
    Fp(std::int64_t n, std::uint64_t p) : p_(p) {
        check_modulus(p);
        v_ = reduce(n, p);
    }

    static void check_modulus(std::uint64_t p) {
        if (p < 3 || p >= (1ull << 31)) throw math_error("modulus out of range (odd prime < 2^31 required)");
        if (p % 2 == 0) throw math_error("even modulus not supported");
        for (std::uint64_t q = 3; q * q <= p; q += 2)
            if (p % q == 0) throw math_error("modulus is not prime");
    }

    [[nodiscard]] bool bound() const { return p_ != 0; }
    [[nodiscard]] std::uint64_t modulus() const { return p_; }
    [[nodiscard]] bool is_zero() const { return v_ == 0; }
    [[nodiscard]] bool is_one() const { return bound() ? v_ == 1 : v_ == 1; }

    Fp operator-() const {
        if (!bound()) return Fp(-v_);
        return from_residue(v_ == 0 ? 0 : p_ - static_cast<std::uint64_t>(v_), p_);
    }
    friend Fp operator+(const Fp& a, const Fp& b) {
        auto [x, y, p] = align(a, b);
        if (p == 0) return Fp(x + y);
        return from_residue((static_cast<std::uint64_t>(x) + static_cast<std::uint64_t>(y)) % p, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }
    friend Fp operator*(const Fp& a, const Fp& b) {
        auto [x, y, p] = align(a, b);
        if (p == 0) return Fp(x * y);
        return from_residue((static_cast<std::uint64_t>(x) * static_cast<std::uint64_t>(y)) % p, p);
    }
    friend Fp operator/(const Fp& a, const Fp& b) {
        if (!b.bound() && a.bound()) return a * Fp(b.v_, a.p_).inv();
        return a * b.inv();
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        auto [x, y, p] = align(a, b);
        return x == y;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    [[nodiscard]] Fp inv() const {
        if (!bound()) {
            if (v_ == 1 || v_ == -1) return *this;
            throw math_error("inverse of unbound prime-field literal");
        }
        if (v_ == 0) throw math_error("inverse of zero");
        // extended Euclid
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), nr = v_;
        while (nr != 0) {
            std::int64_t q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        if (r != 1) throw math_error("non-invertible residue");
        return Fp(t, p_);
    }

    [[nodiscard]] std::string str() const { return std::to_string(v_); }
    [[nodiscard]] std::int64_t residue() const { return v_; }

    static Fp from_residue(std::uint64_t r, std::uint64_t p) {
        Fp e;
        e.v_ = static_cast<std::int64_t>(r);
        e.p_ = p;
        return e;
    }

  private:
    static std::int64_t reduce(std::int64_t n, std::uint64_t p) {
        std::int64_t m = n % static_cast<std::int64_t>(p);
        return m < 0 ? m + static_cast<std::int64_t>(p) : m;
    }
    struct Aligned { std::int64_t x, y; std::uint64_t p; };
    static Aligned align(const Fp& a, const Fp& b) {
        if (a.p_ != 0 && b.p_ != 0) {
            if (a.p_ != b.p_) throw math_error("mixed prime-field moduli");
            return {a.v_, b.v_, a.p_};
        }
        if (a.p_ != 0) return {a.v_, reduce(b.v_, a.p_), a.p_};
        if (b.p_ != 0) return {reduce(a.v_, b.p_), b.v_, b.p_};
        return {a.v_, b.v_, 0};
    }

    std::int64_t v_;
    std::uint64_t p_;
};

template <class K>
inline constexpr bool is_rational_field_v = false;
template <>
inline constexpr bool is_rational_field_v<Rational> = true;

// Field descriptors: the runtime context a document or generator works in.
struct QField {
    using Element = Rational;
    static Element make(long n) { return Rational(n); }
    static Element parse(const std::string& s) { return Rational::from_string(s); }
    static std::string str(const Element& e) { return e.str(); }
    // small signed literals keep intermediate sizes readable in tests
    static Element random(std::mt19937_64& rng) {
        return Rational(static_cast<long>(rng() % 19) - 9);
    }
    static Element random_nonzero(std::mt19937_64& rng) {
        Element e = random(rng);
        while (e.is_zero()) e = random(rng);
        return e;
    }
};

struct FpField {
    std::uint64_t p;
    using Element = Fp;
    explicit FpField(std::uint64_t prime) : p(prime) { Fp::check_modulus(p); }
    Element make(long n) const { return Fp(n, p); }
    Element parse(const std::string& s) const {
        try {
            mpz_class z(s, 10);
            mpz_class r = z % static_cast<unsigned long>(p);
            if (r < 0) r += static_cast<unsigned long>(p);
            return Fp::from_residue(r.get_ui(), p);
        } catch (const std::invalid_argument&) {
            throw document_error("bad prime-field literal: " + s);
        }
    }
    static std::string str(const Element& e) { return e.str(); }
    Element random(std::mt19937_64& rng) const { return Fp::from_residue(rng() % p, p); }
    Element random_nonzero(std::mt19937_64& rng) const {
        return Fp::from_residue(1 + rng() % (p - 1), p);
    }
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ splitmix64(b));
}

}  // namespace ruled
