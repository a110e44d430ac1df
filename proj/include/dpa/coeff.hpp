#pragma once
#include "dpa/error.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace dpa {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact scalar in Q (chr == 0) or F_p (chr == p prime).
// Characteristic rides on the value; mixing characteristics is a hard error.
class Coeff {
public:
  Coeff() : chr_(0), q_(0) {}
  Coeff(int chr, BigRat q) : chr_(chr), q_(std::move(q)) { reduce(); }

  static Coeff zero(int chr) { return Coeff(chr, 0); }
  static Coeff one(int chr) { return Coeff(chr, 1); }
  static Coeff integer(int chr, const BigInt &n) { return Coeff(chr, BigRat(n)); }

  int chr() const { return chr_; }
  const BigRat &rat() const { return q_; }
  bool is_zero() const { return q_ == 0; }
  bool is_one() const { return q_ == 1; }

  friend Coeff operator+(const Coeff &a, const Coeff &b) {
    a.check(b);
    return Coeff(a.chr_, a.q_ + b.q_);
  }
  friend Coeff operator-(const Coeff &a, const Coeff &b) {
    a.check(b);
    return Coeff(a.chr_, a.q_ - b.q_);
  }
  friend Coeff operator*(const Coeff &a, const Coeff &b) {
    a.check(b);
    return Coeff(a.chr_, a.q_ * b.q_);
  }
  Coeff operator-() const { return Coeff(chr_, -q_); }
  Coeff &operator+=(const Coeff &b) { return *this = *this + b; }
  Coeff &operator-=(const Coeff &b) { return *this = *this - b; }
  Coeff &operator*=(const Coeff &b) { return *this = *this * b; }

  Coeff inv() const {
    require(!is_zero(), "division by zero");
    if (chr_ == 0) return Coeff(0, 1 / q_);
    // extended Euclid on the residue
    BigInt a = boost::multiprecision::numerator(q_) % chr_, m = chr_;
    BigInt x = 0, u = 1;
    BigInt b = m;
    while (a != 0) {
      BigInt qq = b / a;
      x -= qq * u;
      std::swap(x, u);
      b -= qq * a;
      std::swap(b, a);
    }
    require(b == 1, "non-invertible residue");
    return Coeff(chr_, BigRat(x));
  }
  friend Coeff operator/(const Coeff &a, const Coeff &b) { return a * b.inv(); }

  Coeff pow(long long e) const {
    require(e >= 0 || !is_zero(), "zero to negative power");
    Coeff base = e < 0 ? inv() : *this;
    unsigned long long k = e < 0 ? -(unsigned long long)e : (unsigned long long)e;
    Coeff r = one(chr_);
    while (k) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  bool operator==(const Coeff &b) const { return chr_ == b.chr_ && q_ == b.q_; }
  bool operator!=(const Coeff &b) const { return !(*this == b); }
  bool operator<(const Coeff &b) const {
    if (chr_ != b.chr_) return chr_ < b.chr_;
    return q_ < b.q_;
  }

  std::string str() const {
    std::ostringstream os;
    if (chr_ == 0) {
      os << q_; // prints "a/b", or just "a" when the denominator is 1
    } else {
      os << boost::multiprecision::numerator(q_) << " mod " << chr_;
    }
    return os.str();
  }

private:
  void check(const Coeff &b) const {
    require(chr_ == b.chr_, "mixed characteristics: " + std::to_string(chr_) + " vs " +
                                std::to_string(b.chr_));
  }
  void reduce() {
    if (chr_ != 0) {
      BigInt num = boost::multiprecision::numerator(q_);
      BigInt den = boost::multiprecision::denominator(q_);
      BigInt dr = den % chr_;
      require(dr != 0, "non-invertible denominator mod " + std::to_string(chr_));
      // num/den mod p
      BigInt a = dr, m = chr_, x = 0, u = 1, b = m;
      while (a != 0) {
        BigInt qq = b / a;
        x -= qq * u;
        std::swap(x, u);
        b -= qq * a;
        std::swap(b, a);
      }
      BigInt r = (num % chr_) * (x % chr_) % chr_;
      if (r < 0) r += chr_;
      q_ = BigRat(r);
    }
  }

  int chr_;
  BigRat q_;
};

inline BigInt factorial_int(long long n) {
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

// j! / prod(q_i!) in the given characteristic; parts must sum to j.
inline Coeff multinomial(int chr, long long j, const std::vector<long long> &q) {
  long long s = 0;
  for (long long qi : q) {
    require(qi >= 0, "negative part");
    s += qi;
  }
  require(s == j, "parts do not sum to j");
  BigInt num = factorial_int(j);
  BigInt den = 1;
  for (long long qi : q) den *= factorial_int(qi);
  BigInt v = num / den; // always exact
  return Coeff(chr, BigRat(v));
}

// 1 / prod(r_i!); in char p requires every r_i < p.
inline Coeff divided_coefficient(int chr, const std::vector<long long> &r) {
  BigInt den = 1;
  for (long long ri : r) {
    require(ri >= 0, "negative part");
    if (chr != 0 && ri >= chr)
      fail("non-invertible factorial: part " + std::to_string(ri) + "! vanishes mod " +
           std::to_string(chr));
    den *= factorial_int(ri);
  }
  return Coeff(chr, BigRat(1, den));
}

namespace detail {
inline void tuples_summing_to(long long n, int m, std::vector<long long> &cur,
                              std::vector<std::vector<long long>> &out) {
  if (m == 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (long long v = 0; v <= n; ++v) {
    cur.push_back(v);
    tuples_summing_to(n - v, m - 1, cur, out);
    cur.pop_back();
  }
}
} // namespace detail

// All length-m compositions (zero parts allowed) of n, lexicographic.
inline std::vector<std::vector<long long>> compositions_of(long long n, int m) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur;
  detail::tuples_summing_to(n, m, cur, out);
  return out;
}

// For every q in Comp_m(j+k): sum over splittings q = q' + q'' of
// multinomial(j,q')*multinomial(k,q'') equals multinomial(j+k,q), over Z.
inline bool vandermonde_check(long long j, long long k, int m) {
  for (const auto &q : compositions_of(j + k, m)) {
    Coeff lhs = Coeff::zero(0);
    for (const auto &qp : compositions_of(j, m)) {
      std::vector<long long> qpp(q.size());
      bool ok = true;
      for (size_t i = 0; i < q.size(); ++i) {
        qpp[i] = q[i] - qp[i];
        if (qpp[i] < 0) ok = false;
      }
      if (!ok) continue;
      lhs += multinomial(0, j, qp) * multinomial(0, k, qpp);
    }
    if (lhs != multinomial(0, j + k, q)) return false;
  }
  return true;
}

} // namespace dpa
