#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "soc3/error.hpp"

namespace soc3 {

// The ring P = k[x,y,z,w] uses the fixed variable order (x,y,z,w); x is
// always the designated Lefschetz slot.
inline constexpr int kNumVars = 4;
inline const std::array<std::string, 4> kVarNames = {"x", "y", "z", "w"};

// Exponent vector of a monomial in the four variables.
struct Mono {
  std::array<int, 4> e{0, 0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }

  bool divides(const Mono& o) const {
    for (int i = 0; i < 4; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  Mono operator+(const Mono& o) const {
    Mono r;
    for (int i = 0; i < 4; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }

  // Exponentwise difference; caller must check divides() first.
  Mono operator-(const Mono& o) const {
    Mono r;
    for (int i = 0; i < 4; ++i) r.e[i] = e[i] - o.e[i];
    return r;
  }

  bool operator==(const Mono& o) const { return e == o.e; }
  bool operator!=(const Mono& o) const { return e != o.e; }

  static Mono var(int i) {
    Mono m;
    m.e[i] = 1;
    return m;
  }
  static Mono unit() { return Mono{}; }

  std::string str() const {
    if (degree() == 0) return "1";
    std::string s;
    for (int i = 0; i < 4; ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += kVarNames[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }
};

// Descending lexicographic order on exponent vectors: x^2 before x*y before
// y^2, matching the basis tables used throughout.
struct MonoDescLex {
  bool operator()(const Mono& a, const Mono& b) const { return a.e > b.e; }
};

// All degree-d monomials in the variables selected by `mask` (bit i selects
// variable i), listed in descending lexicographic order.  For ({y,z,w}, 2)
// this yields y^2, yz, yw, z^2, zw, w^2.
inline std::vector<Mono> monomials(unsigned mask, int d) {
  if (d < 0) fail(ErrorKind::Degree, "negative degree");
  std::vector<Mono> out;
  Mono cur;
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == 3) {
      if (rem > 0 && !(mask & (1u << 3))) return;
      cur.e[3] = rem;
      out.push_back(cur);
      cur.e[3] = 0;
      return;
    }
    int hi = (mask & (1u << pos)) ? rem : 0;
    for (int e = hi; e >= 0; --e) {
      cur.e[pos] = e;
      self(self, pos + 1, rem - e);
    }
    cur.e[pos] = 0;
  };
  rec(rec, 0, d);
  return out;
}

inline constexpr unsigned kAllVars = 0b1111;
inline constexpr unsigned kU0Vars = 0b1110;  // y, z, w

inline int dim_poly_degree(int d) {
  // dim Sym_d of a 4-dimensional space
  return (d + 1) * (d + 2) * (d + 3) / 6;
}

}  // namespace soc3
