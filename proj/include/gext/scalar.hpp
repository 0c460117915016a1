#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <gmpxx.h>

namespace gext {

// Exact rational scalar backed by GMP. Never rounds.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }

    // Parses "a" or "a/b" with optional sign.
    static Rat parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rat: bad literal '" + s + "'");
        q.canonicalize();
        return Rat(q);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

    Rat inv() const {
        if (is_zero()) throw std::domain_error("Rat: inverse of zero");
        return Rat(mpq_class(1) / v_);
    }

    std::string str() const { return v_.get_str(); }

    static constexpr bool is_prime_field = false;

private:
    mpq_class v_;
};

// Prime field F_p with a process-wide modulus fixed at engine configuration.
class Fp {
public:
    Fp() : v_(0) {}
    Fp(long n) { v_ = norm(n % p()); }

    static void set_modulus(int64_t p) {
        if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
        for (int64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("Fp: modulus must be prime");
        modulus_ = p;
    }
    static int64_t modulus() { return p(); }

    static Fp zero() { return Fp(0); }
    static Fp one() { return Fp(1); }

    static Fp parse(const std::string& s) {
        // Accept "a" or "a/b" so fixtures stay field-agnostic.
        auto slash = s.find('/');
        if (slash == std::string::npos) return Fp(std::stol(s));
        Fp num(std::stol(s.substr(0, slash)));
        Fp den(std::stol(s.substr(slash + 1)));
        return num / den;
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Fp operator-() const { return make(v_ == 0 ? 0 : p() - v_); }
    Fp& operator+=(const Fp& o) { v_ += o.v_; if (v_ >= p()) v_ -= p(); return *this; }
    Fp& operator-=(const Fp& o) { v_ -= o.v_; if (v_ < 0) v_ += p(); return *this; }
    Fp& operator*=(const Fp& o) { v_ = mulmod(v_, o.v_); return *this; }
    Fp& operator/=(const Fp& o) { return *this *= o.inv(); }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v_ != b.v_; }

    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        int64_t a = v_, b = p(), x0 = 1, x1 = 0;
        while (b != 0) {
            int64_t q = a / b;
            int64_t t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return make(norm(x0 % p()));
    }

    std::string str() const { return std::to_string(v_); }

    static constexpr bool is_prime_field = true;

private:
    static int64_t p() {
        if (modulus_ == 0) throw std::logic_error("Fp: modulus not configured");
        return modulus_;
    }
    static int64_t norm(int64_t x) { return x < 0 ? x + modulus_ : x; }
    static int64_t mulmod(int64_t a, int64_t b) {
        return static_cast<int64_t>((__int128)a * b % modulus_);
    }
    static Fp make(int64_t v) { Fp r; r.v_ = v; return r; }

    int64_t v_;
    inline static int64_t modulus_ = 0;
};

} // namespace gext
