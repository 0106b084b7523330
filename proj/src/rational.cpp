#include "wicksos/rational.hpp"

#include <mutex>
#include <vector>

namespace wicksos {

namespace {

bool valid_int_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rat::Rat(long n, long d) : v_(n, d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
}

Rat::Rat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
    if (d == 0) throw std::invalid_argument("Rat: zero denominator");
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::invalid_argument("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int_token(s)) throw std::invalid_argument("bad rational: '" + s + "'");
        return Rat(mpz_class(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int_token(num) || !valid_int_token(den) || den[0] == '-')
        throw std::invalid_argument("bad rational: '" + s + "'");
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("bad rational (zero denominator): '" + s + "'");
    return Rat(mpz_class(num), d);
}

std::string Rat::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

mpz_class Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

Rat abs(const Rat& a) { return a.sign() < 0 ? -a : a; }

Rat pow(const Rat& a, unsigned e) {
    Rat r(1);
    for (unsigned j = 0; j < e; ++j) r *= a;
    return r;
}

GaussRat GaussRat::i_pow(long m) {
    long r = ((m % 4) + 4) % 4;
    switch (r) {
        case 0: return GaussRat(1);
        case 1: return i();
        case 2: return GaussRat(-1);
        default: return -i();
    }
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    Rat r = re_ * o.re_ - im_ * o.im_;
    Rat i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
    Rat n2 = o.norm2();
    if (n2.is_zero()) throw std::invalid_argument("GaussRat: division by zero");
    *this *= o.conj();
    re_ /= n2;
    im_ /= n2;
    return *this;
}

std::string GaussRat::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag;
    Rat ai = wicksos::abs(im_);
    if (ai == Rat(1))
        imag = "i";
    else
        imag = ai.str() + "*i";
    if (re_.is_zero()) return (im_.sign() < 0 ? "-" : "") + imag;
    return re_.str() + (im_.sign() < 0 ? "-" : "+") + imag;
}

GaussRat GaussRat::parse(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("bad gaussian rational: empty");
    // Split at the last '+' or '-' that is not the leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if (s[i] == '+' || s[i] == '-') {
            split = i;
            break;
        }
    }
    auto parse_imag = [](std::string t) -> Rat {
        // forms: "i", "-i", "r/s*i", "-r/s*i"
        if (t == "i") return Rat(1);
        if (t == "-i") return Rat(-1);
        auto star = t.rfind("*i");
        if (star == std::string::npos || star + 2 != t.size())
            throw std::invalid_argument("bad imaginary part: '" + t + "'");
        return Rat::parse(t.substr(0, star));
    };
    if (s.back() != 'i') return GaussRat(Rat::parse(s));
    if (split == std::string::npos || s.find('i') < split)
        return GaussRat(Rat(0), parse_imag(s));
    std::string rep = s.substr(0, split);
    std::string imp = s.substr(split);  // keeps sign
    return GaussRat(Rat::parse(rep), parse_imag(imp));
}

GaussRat pow(const GaussRat& a, unsigned e) {
    GaussRat r(1);
    for (unsigned j = 0; j < e; ++j) r *= a;
    return r;
}

Rat factorial(unsigned k) {
    static std::vector<mpz_class> cache{1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() <= k) {
        mpz_class next = cache.back() * (unsigned long)cache.size();
        cache.push_back(next);
    }
    return Rat(cache[k]);
}

Rat falling(const Rat& x, unsigned k) {
    Rat r(1);
    for (unsigned j = 0; j < k; ++j) r *= x - Rat((long)j);
    return r;
}

GaussRat falling(const GaussRat& x, unsigned k) {
    GaussRat r(1);
    for (unsigned j = 0; j < k; ++j) r *= x - GaussRat((long)j);
    return r;
}

Rat binom(unsigned long a, unsigned long b) {
    if (b > a) return Rat(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), a, b);
    return Rat(r);
}

}  // namespace wicksos
