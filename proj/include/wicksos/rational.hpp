#ifndef WICKSOS_RATIONAL_HPP
#define WICKSOS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wicksos {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. All arithmetic is exact.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    Rat(long n, long d);
    Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& n, const mpz_class& d);
    explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rat parse(const std::string& s);
    std::string str() const;

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    /// Largest integer <= *this.
    mpz_class floor() const;

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

Rat abs(const Rat& a);
Rat pow(const Rat& a, unsigned e);

/// Exact Gaussian rational a + b*i; the coefficient field for everything.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long n) : re_(n) {}
    GaussRat(const Rat& re) : re_(re) {}
    GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }
    /// i^m for any integer m (negative allowed).
    static GaussRat i_pow(long m);

    /// Parses the canonical form produced by str():
    /// "p/q", "p/q*i", "p/q+r/s*i", "p/q-r/s*i", "i", "-i".
    static GaussRat parse(const std::string& s);
    std::string str() const;

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    /// |z|^2 = z * conj(z); always a nonnegative rational.
    Rat norm2() const { return re_ * re_ + im_ * im_; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

private:
    Rat re_, im_;
};

GaussRat pow(const GaussRat& a, unsigned e);

/// k! as an exact integer-valued rational. Values are cached; arguments up to
/// a few hundred are expected.
Rat factorial(unsigned k);

/// Falling factorial x*(x-1)*...*(x-k+1); empty product for k = 0.
Rat falling(const Rat& x, unsigned k);
GaussRat falling(const GaussRat& x, unsigned k);

/// Binomial coefficient, 0 when b > a.
Rat binom(unsigned long a, unsigned long b);

}  // namespace wicksos

#endif
