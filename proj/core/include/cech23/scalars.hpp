#pragma once

// Coefficient scalars: arbitrary-precision integers and rationals (GMP) and a
// word-sized prime field. The domain tag travels with matrices/polynomials so
// mixed-domain operations can be rejected at run time.

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace cech23 {

using Int = mpz_class;
using Rat = mpq_class;

struct CoeffDomain {
    enum class Kind { integer, rational, prime_field };
    Kind kind = Kind::integer;
    std::uint64_t p = 0;

    static CoeffDomain integers() { return {Kind::integer, 0}; }
    static CoeffDomain rationals() { return {Kind::rational, 0}; }
    static CoeffDomain prime_field(std::uint64_t p) { return {Kind::prime_field, p}; }

    bool is_field() const { return kind != Kind::integer; }
    bool operator==(const CoeffDomain&) const = default;

    std::string label() const {
        switch (kind) {
        case Kind::integer: return "z";
        case Kind::rational: return "q";
        default: return "f" + std::to_string(p);
        }
    }
};

// trial division is plenty for moduli below 2^31
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

inline constexpr std::uint64_t fp_max_modulus = 0x7fffffffu;  // products stay in 64 bits

// Prime field element. A default-constructed value is a "neutral zero" with
// modulus 0: it acts as 0 in any field and picks up the modulus of the other
// operand. This keeps zero-filled containers usable before the modulus is
// known.
class Fp {
  public:
    Fp() = default;
    Fp(long long x, std::uint64_t p) : p_(p) {
        assert(p >= 2 && p <= fp_max_modulus);
        long long r = x % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        v_ = static_cast<std::uint64_t>(r);
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        std::uint64_t p = join(a.p_, b.p_);
        if (!p) return Fp();
        std::uint64_t s = a.v_ + b.v_;
        if (s >= p) s -= p;
        return raw(s, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        std::uint64_t p = join(a.p_, b.p_);
        if (!p) return Fp();
        std::uint64_t s = a.v_ + p - b.v_;
        if (s >= p) s -= p;
        return raw(s, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        std::uint64_t p = join(a.p_, b.p_);
        if (!p) return Fp();
        return raw((a.v_ * b.v_) % p, p);
    }
    Fp operator-() const {
        if (!p_ || !v_) return *this;
        return raw(p_ - v_, p_);
    }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inv() const {
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        // extended euclid on (v, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(v_);
        while (newr != 0) {
            std::int64_t q = r / newr;
            t -= q * newt; std::swap(t, newt);
            r -= q * newr; std::swap(r, newr);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return raw(static_cast<std::uint64_t>(t), p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    bool operator==(const Fp& o) const { return v_ == o.v_; }  // values are canonical
    bool operator!=(const Fp& o) const { return v_ != o.v_; }

  private:
    static std::uint64_t join(std::uint64_t a, std::uint64_t b) {
        if (a == 0) return b;
        if (b == 0) return a;
        assert(a == b && "Fp: mixed moduli");
        return a;
    }
    static Fp raw(std::uint64_t v, std::uint64_t p) {
        Fp x;
        x.v_ = v;
        x.p_ = p;
        return x;
    }

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const Fp& x) { return x.is_zero(); }

inline Rat field_inv(const Rat& x) {
    if (is_zero(x)) throw std::domain_error("Rat: inverse of zero");
    return 1 / x;
}
inline Fp field_inv(const Fp& x) { return x.inv(); }

template <class T>
T scalar_from(const CoeffDomain& dom, long v);

template <>
inline Int scalar_from<Int>(const CoeffDomain&, long v) { return Int(v); }
template <>
inline Rat scalar_from<Rat>(const CoeffDomain&, long v) { return Rat(v); }
template <>
inline Fp scalar_from<Fp>(const CoeffDomain& dom, long v) {
    assert(dom.kind == CoeffDomain::Kind::prime_field);
    return Fp(v, dom.p);
}

inline Fp reduce_mod_p(const Int& x, std::uint64_t p) {
    unsigned long r = mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p));
    return Fp(static_cast<long long>(r), p);
}

inline std::string scalar_str(const Int& x) { return x.get_str(); }
inline std::string scalar_str(const Rat& x) { return x.get_str(); }
inline std::string scalar_str(const Fp& x) { return std::to_string(x.value()); }

}  // namespace cech23
