#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soc3/error.hpp"
#include "soc3/field.hpp"
#include "soc3/linalg.hpp"
#include "soc3/monomial.hpp"

namespace soc3 {

namespace detail {

// Shared sparse term map; no zero coefficients are ever stored.  Iteration
// follows the canonical descending-lex monomial order.
template <class F>
struct TermMap {
  using K = typename F::Elt;
  std::map<Mono, K, MonoDescLex> t;

  void add(const Mono& m, const K& c) {
    if (c.is_zero()) return;
    auto it = t.find(m);
    if (it == t.end()) {
      t.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t.erase(it);
    }
  }

  K coeff(const Mono& m, const F& f) const {
    auto it = t.find(m);
    return it == t.end() ? f.zero() : it->second;
  }

  std::optional<int> homogeneous_degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : t) {
      if (!d)
        d = m.degree();
      else if (*d != m.degree())
        return std::nullopt;
    }
    return d;
  }

  bool operator==(const TermMap& o) const {
    if (t.size() != o.t.size()) return false;
    auto a = t.begin();
    auto b = o.t.begin();
    for (; a != t.end(); ++a, ++b)
      if (a->first != b->first || !(a->second == b->second)) return false;
    return true;
  }

  std::string str() const {
    if (t.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : t) {
      std::string cs = c.str();
      bool neg = !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      s += s.empty() ? (neg ? "-" : "") : (neg ? "-" : "+");
      if (m.degree() == 0)
        s += cs;
      else if (cs == "1")
        s += m.str();
      else
        s += cs + "*" + m.str();
    }
    return s;
  }
};

}  // namespace detail

// Element of P = Sym_.(U), a polynomial in x,y,z,w with exact coefficients.
template <class F>
class SymPoly {
 public:
  using K = typename F::Elt;

  SymPoly() = default;
  explicit SymPoly(const F& f) : f_(f) {}
  SymPoly(const F& f, const Mono& m, const K& c) : f_(f) { d_.add(m, c); }

  static SymPoly variable(const F& f, int i) {
    return SymPoly(f, Mono::var(i), f.one());
  }
  static SymPoly constant(const F& f, const K& c) {
    return SymPoly(f, Mono::unit(), c);
  }

  const F& field() const { return f_; }
  bool is_zero() const { return d_.t.empty(); }
  size_t term_count() const { return d_.t.size(); }
  K coeff(const Mono& m) const { return d_.coeff(m, f_); }
  std::optional<int> homogeneous_degree() const {
    return d_.homogeneous_degree();
  }
  const std::map<Mono, K, MonoDescLex>& terms() const { return d_.t; }

  void add_term(const Mono& m, const K& c) { d_.add(m, c); }

  SymPoly operator+(const SymPoly& o) const {
    SymPoly r = *this;
    for (const auto& [m, c] : o.d_.t) r.d_.add(m, c);
    return r;
  }
  SymPoly operator-() const {
    SymPoly r(f_);
    for (const auto& [m, c] : d_.t) r.d_.add(m, -c);
    return r;
  }
  SymPoly operator-(const SymPoly& o) const { return *this + (-o); }
  SymPoly operator*(const SymPoly& o) const {
    SymPoly r(f_);
    for (const auto& [m, c] : d_.t)
      for (const auto& [m2, c2] : o.d_.t) r.d_.add(m + m2, c * c2);
    return r;
  }
  SymPoly scaled(const K& c) const {
    SymPoly r(f_);
    for (const auto& [m, cc] : d_.t) r.d_.add(m, cc * c);
    return r;
  }
  bool operator==(const SymPoly& o) const { return d_ == o.d_; }
  bool operator!=(const SymPoly& o) const { return !(d_ == o.d_); }

  // Image under x -> 0.
  SymPoly drop_x() const {
    SymPoly r(f_);
    for (const auto& [m, c] : d_.t)
      if (m.e[0] == 0) r.d_.add(m, c);
    return r;
  }

  bool involves(int var) const {
    for (const auto& [m, c] : d_.t)
      if (m.e[var] > 0) return true;
    return false;
  }

  std::string str() const { return d_.str(); }

 private:
  F f_;
  detail::TermMap<F> d_;
};

// Element of the divided power algebra D_.(U*), stored as coefficients on the
// divided-power monomial basis x^{*(e0)} y^{*(e1)} z^{*(e2)} w^{*(e3)}.  The
// monomial key (e0,e1,e2,e3) names that basis element; matching monomials of
// SymPoly and DivPow pair to 1.
template <class F>
class DivPow {
 public:
  using K = typename F::Elt;

  DivPow() = default;
  explicit DivPow(const F& f) : f_(f) {}
  DivPow(const F& f, const Mono& m, const K& c) : f_(f) { d_.add(m, c); }

  const F& field() const { return f_; }
  bool is_zero() const { return d_.t.empty(); }
  K coeff(const Mono& m) const { return d_.coeff(m, f_); }
  std::optional<int> homogeneous_degree() const {
    return d_.homogeneous_degree();
  }
  const std::map<Mono, K, MonoDescLex>& terms() const { return d_.t; }

  void add_term(const Mono& m, const K& c) { d_.add(m, c); }

  DivPow operator+(const DivPow& o) const {
    DivPow r = *this;
    for (const auto& [m, c] : o.d_.t) r.d_.add(m, c);
    return r;
  }
  DivPow operator-() const {
    DivPow r(f_);
    for (const auto& [m, c] : d_.t) r.d_.add(m, -c);
    return r;
  }
  DivPow operator-(const DivPow& o) const { return *this + (-o); }
  DivPow scaled(const K& c) const {
    DivPow r(f_);
    for (const auto& [m, cc] : d_.t) r.d_.add(m, cc * c);
    return r;
  }
  bool operator==(const DivPow& o) const { return d_ == o.d_; }
  bool operator!=(const DivPow& o) const { return !(d_ == o.d_); }

  std::string str() const { return d_.str(); }

 private:
  F f_;
  detail::TermMap<F> d_;
};

// Contraction u(nu): the module action of Sym on the divided powers.  On
// monomials it is exponentwise subtraction when every exponent of u is
// bounded by nu's, and zero otherwise; extended bilinearly.
template <class F>
DivPow<F> contract(const SymPoly<F>& u, const DivPow<F>& nu) {
  auto du = u.homogeneous_degree();
  auto dn = nu.homogeneous_degree();
  if (du && dn && *du > *dn)
    fail(ErrorKind::Degree, "contraction degree exceeds target");
  DivPow<F> out(u.field());
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mn, cn] : nu.terms())
      if (mu.divides(mn)) out.add_term(mn - mu, cu * cn);
  return out;
}

// The perfect pairing D_n(U*) x Sym_n(U) -> k.
template <class F>
typename F::Elt pair_eval(const DivPow<F>& nu, const SymPoly<F>& u) {
  auto dn = nu.homogeneous_degree();
  auto du = u.homogeneous_degree();
  if (dn && du && *dn != *du)
    fail(ErrorKind::Degree, "pairing degree mismatch");
  typename F::Elt s = nu.field().zero();
  for (const auto& [m, cu] : u.terms()) s += nu.coeff(m) * cu;
  return s;
}

// Rewrites Phi on the dual basis attached to the new variables
// [X Y Z W] = [x y z w] M.  Coefficient of a new dual monomial m'^* is
// Phi evaluated on m' expanded in the old variables, so no factorial ever
// appears and the operation is characteristic-free.
template <class F>
DivPow<F> substitute_dual(const DivPow<F>& phi, const ScalarMat<F>& m) {
  const F& f = phi.field();
  if (m.rows() != 4 || m.cols() != 4)
    fail(ErrorKind::Shape, "change of variables must be 4x4");
  if (det(m).is_zero()) fail(ErrorKind::Singular, "change of variables is singular");
  auto deg = phi.homogeneous_degree();
  if (!deg) return DivPow<F>(f);
  std::vector<SymPoly<F>> newvar;
  for (int i = 0; i < 4; ++i) {
    SymPoly<F> L(f);
    for (int r = 0; r < 4; ++r) L.add_term(Mono::var(r), m.at(r, i));
    newvar.push_back(L);
  }
  DivPow<F> out(f);
  for (const Mono& mp : monomials(kAllVars, *deg)) {
    SymPoly<F> expand = SymPoly<F>::constant(f, f.one());
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < mp.e[i]; ++k) expand = expand * newvar[i];
    out.add_term(mp, pair_eval(phi, expand));
  }
  return out;
}

// Parses a polynomial string in the multiplicative convention, e.g.
// "x^2*y+z^3-1/2*x*z*w".  Used both for Sym elements and for divided-power
// elements written multiplicatively.
template <class F>
std::vector<std::pair<Mono, typename F::Elt>> parse_terms(
    const F& f, const std::string& text,
    const std::array<std::string, 4>& names = kVarNames) {
  std::vector<std::pair<Mono, typename F::Elt>> out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail(ErrorKind::Parse, "expected '+' or '-' in polynomial");
    }
    first = false;
    Mono mono;
    std::string coeff_str;
    bool any = false;
    while (true) {
      skip_ws();
      if (i >= text.size()) break;
      char c = text[i];
      if (c == '+' || c == '-') break;
      if (c == '*') {
        ++i;
        continue;
      }
      if (isdigit(static_cast<unsigned char>(c)) || c == '.') {
        size_t j = i;
        while (j < text.size() &&
               (isdigit(static_cast<unsigned char>(text[j])) ||
                text[j] == '.' || text[j] == '/'))
          ++j;
        if (!coeff_str.empty()) fail(ErrorKind::Parse, "two coefficients in a term");
        coeff_str = text.substr(i, j - i);
        i = j;
        any = true;
        continue;
      }
      // variable name (longest match)
      int var = -1;
      for (int v = 0; v < 4; ++v) {
        const std::string& n = names[v];
        if (text.compare(i, n.size(), n) == 0 &&
            (var < 0 || n.size() > names[var].size()))
          var = v;
      }
      if (var < 0) fail(ErrorKind::Parse, std::string("unexpected character '") + c + "'");
      i += names[var].size();
      int exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        size_t j = i;
        while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == i) fail(ErrorKind::Parse, "missing exponent");
        exp = std::stoi(text.substr(i, j - i));
        i = j;
      }
      mono.e[var] += exp;
      any = true;
    }
    if (!any) fail(ErrorKind::Parse, "empty term");
    typename F::Elt c =
        coeff_str.empty() ? f.one() : parse_scalar(f, coeff_str);
    if (sign < 0) c = -c;
    out.emplace_back(mono, c);
    skip_ws();
  }
  return out;
}

template <class F>
SymPoly<F> parse_sympoly(const F& f, const std::string& text) {
  SymPoly<F> p(f);
  for (const auto& [m, c] : parse_terms(f, text)) p.add_term(m, c);
  return p;
}

template <class F>
DivPow<F> parse_divpow(const F& f, const std::string& text) {
  DivPow<F> p(f);
  for (const auto& [m, c] : parse_terms(f, text)) p.add_term(m, c);
  return p;
}

}  // namespace soc3
