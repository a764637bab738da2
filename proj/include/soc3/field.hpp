#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "soc3/error.hpp"

namespace soc3 {

// Exact rational scalar.  Thin wrapper over GMP's mpq_class; always kept in
// canonical form.
class Rat {
 public:
  Rat() : v_(0) {}
  explicit Rat(long n) : v_(n) {}
  explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  static Rat of_fraction(long num, long den) {
    if (den == 0) fail(ErrorKind::Parse, "zero denominator");
    Rat r;
    r.v_ = mpq_class(num, den);
    r.v_.canonicalize();
    return r;
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool operator==(const Rat& o) const { return v_ == o.v_; }
  bool operator!=(const Rat& o) const { return v_ != o.v_; }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
  Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
  Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
  Rat operator/(const Rat& o) const {
    if (o.is_zero()) fail(ErrorKind::Singular, "division by zero");
    return Rat(mpq_class(v_ / o.v_));
  }
  Rat& operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
  }
  Rat& operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
  }
  Rat& operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
  }

  Rat inv() const {
    if (is_zero()) fail(ErrorKind::Singular, "inverse of zero");
    return Rat(mpq_class(1 / v_));
  }

  std::string str() const { return v_.get_str(); }
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                     23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

inline uint64_t invmod_u64(uint64_t a, uint64_t p) {
  // extended Euclid on signed 128-bit intermediates
  __int128 t = 0, newt = 1;
  __int128 r = p, newr = a % p;
  while (newr != 0) {
    __int128 q = r / newr;
    __int128 tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) fail(ErrorKind::Singular, "element not invertible mod p");
  if (t < 0) t += p;
  return static_cast<uint64_t>(t);
}

}  // namespace detail

// Element of a prime field F_p.  Each element carries its modulus, so values
// stay self-describing and immutable; a default-constructed element is the
// neutral zero that combines with any modulus.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  Fp(uint64_t v, uint64_t p) : v_(v % p), p_(p) {}

  uint64_t value() const { return v_; }
  uint64_t modulus() const { return p_; }

  bool is_zero() const { return v_ == 0; }
  bool operator==(const Fp& o) const {
    return v_ == o.v_ && (p_ == o.p_ || p_ == 0 || o.p_ == 0);
  }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  Fp operator-() const { return Fp(p_ == 0 ? 0 : (p_ - v_) % p_, p_); }
  Fp operator+(const Fp& o) const {
    uint64_t p = join(o);
    if (p == 0) return Fp();
    return Fp((v_ + o.v_) % p, p);
  }
  Fp operator-(const Fp& o) const {
    uint64_t p = join(o);
    if (p == 0) return Fp();
    return Fp((v_ + p - o.v_) % p, p);
  }
  Fp operator*(const Fp& o) const {
    uint64_t p = join(o);
    if (p == 0) return Fp();
    return Fp(detail::mulmod_u64(v_, o.v_, p), p);
  }
  Fp operator/(const Fp& o) const { return *this * o.inv(); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }

  Fp inv() const {
    if (v_ == 0 || p_ == 0) fail(ErrorKind::Singular, "inverse of zero");
    return Fp(detail::invmod_u64(v_, p_), p_);
  }

  std::string str() const { return std::to_string(v_); }

 private:
  uint64_t join(const Fp& o) const {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
      fail(ErrorKind::Field, "mixed moduli");
    return p_ != 0 ? p_ : o.p_;
  }
  uint64_t v_;
  uint64_t p_;
};

// Field contexts used as the `F` template parameter throughout the library.
struct QQ {
  using Elt = Rat;
  uint64_t characteristic() const { return 0; }
  Rat zero() const { return Rat(); }
  Rat one() const { return Rat(1); }
  Rat of_int(long n) const { return Rat(n); }
  bool operator==(const QQ&) const { return true; }
};

struct GF {
  uint64_t p = 0;
  using Elt = Fp;

  GF() = default;
  explicit GF(uint64_t p_) : p(p_) {
    if (!detail::is_prime_u64(p))
      fail(ErrorKind::Field, "characteristic must be 0 or prime");
  }
  uint64_t characteristic() const { return p; }
  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp of_int(long n) const {
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += p;
    return Fp(static_cast<uint64_t>(r), p);
  }
  bool operator==(const GF& o) const { return p == o.p; }
};

// Parses an exact scalar from "n", "a/b", or a terminating decimal.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) fail(ErrorKind::Parse, "empty coefficient");
  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      mpz_class num(s.substr(0, slash));
      mpz_class den(s.substr(slash + 1));
      if (den == 0) fail(ErrorKind::Parse, "zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return Rat(q);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(mpq_class(mpz_class(s)));
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (head == "-" || head == "+" || head.empty()) head += "0";
    mpz_class ip(head);
    mpz_class frac = tail.empty() ? mpz_class(0) : mpz_class(tail);
    mpz_class scale = 1;
    for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
    mpz_class num = ip * scale + (neg ? -frac : frac);
    mpq_class q(num, scale);
    q.canonicalize();
    return Rat(q);
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::Parse, "bad coefficient: " + s);
  }
}

template <class F>
typename F::Elt parse_scalar(const F& field, const std::string& s);

template <>
inline Rat parse_scalar<QQ>(const QQ&, const std::string& s) {
  return parse_rational(s);
}

template <>
inline Fp parse_scalar<GF>(const GF& field, const std::string& s) {
  Rat q = parse_rational(s);
  mpz_class num = q.raw().get_num(), den = q.raw().get_den();
  mpz_class p(static_cast<unsigned long>(field.p));
  mpz_class nm = num % p, dm = den % p;
  if (nm < 0) nm += p;
  if (dm < 0) dm += p;
  Fp n(nm.get_ui(), field.p), d(dm.get_ui(), field.p);
  if (d.is_zero()) fail(ErrorKind::Parse, "denominator vanishes mod p");
  return n / d;
}

}  // namespace soc3
