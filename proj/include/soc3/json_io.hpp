#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "soc3/pipeline.hpp"

namespace soc3 {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// serialization

template <class F>
json poly_to_json(const SymPoly<F>& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    t["coeff"] = c.str();
    t["exps"] = {m.e[0], m.e[1], m.e[2], m.e[3]};
    terms.push_back(t);
  }
  return terms;
}

template <class F>
json divpow_to_json(const DivPow<F>& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) {
    json t;
    t["coeff"] = c.str();
    t["exps"] = {m.e[0], m.e[1], m.e[2], m.e[3]};
    terms.push_back(t);
  }
  return terms;
}

template <class F>
json graded_to_json(const GradedMatrix<F>& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["row_degrees"] = m.row_degrees();
  j["col_degrees"] = m.col_degrees();
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int jj = 0; jj < m.cols(); ++jj) row.push_back(poly_to_json(m.at(i, jj)));
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

template <class F>
json scalar_to_json(const ScalarMat<F>& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int jj = 0; jj < m.cols(); ++jj) row.push_back(m.at(i, jj).str());
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

inline json report_to_json(const VerificationReport& r) {
  json j;
  j["degree_bound"] = r.degree_bound;
  j["all_pass"] = r.all_pass();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    if (c.first_fail_degree >= 0) cj["first_fail_degree"] = c.first_fail_degree;
    checks.push_back(cj);
  }
  j["checks"] = checks;
  return j;
}

template <class F>
json complex_to_json(const GradedComplex<F>& c) {
  json j;
  j["label"] = c.label;
  json diffs = json::array();
  for (const auto& d : c.diff) diffs.push_back(graded_to_json(d));
  j["differentials"] = diffs;
  json betti = json::array();
  for (auto& [key, count] : betti_table(c))
    betti.push_back({key.first, key.second, count});
  j["betti"] = betti;
  j["betti_totals"] = betti_totals(c);
  return j;
}

// ---------------------------------------------------------------------------
// parsing

template <class F>
DivPow<F> phi_from_json(const F& f, const json& doc) {
  DivPow<F> phi(f);
  if (doc.contains("phi") && doc["phi"].is_string()) {
    phi = parse_divpow(f, doc["phi"].get<std::string>());
  } else if (doc.contains("terms")) {
    for (const auto& t : doc["terms"]) {
      if (!t.contains("exps") || t["exps"].size() != 4)
        fail(ErrorKind::Validation, "term needs 4 exponents");
      Mono m;
      for (int i = 0; i < 4; ++i) m.e[i] = t["exps"][i].get<int>();
      for (int i = 0; i < 4; ++i)
        if (m.e[i] < 0) fail(ErrorKind::Validation, "negative exponent");
      std::string cs;
      if (t.contains("coeff")) {
        if (t["coeff"].is_string())
          cs = t["coeff"].get<std::string>();
        else if (t["coeff"].is_number_integer())
          cs = std::to_string(t["coeff"].get<long long>());
        else
          fail(ErrorKind::Validation, "coefficient must be an exact string");
      } else {
        cs = "1";
      }
      phi.add_term(m, parse_scalar(f, cs));
    }
  } else {
    fail(ErrorKind::Validation, "document needs \"terms\" or \"phi\"");
  }
  return phi;
}

// Parses and fully validates (homogeneous, degree 3, embedding dimension 4).
template <class F>
InverseSystem<F> parse_phi(const F& f, const json& doc) {
  InverseSystem<F> sys = make_inverse_system(f, phi_from_json(f, doc));
  validate_embedding_dim(sys);
  return sys;
}

template <class F>
GradedMatrix<F> graded_from_json(const F& f, const json& j) {
  std::vector<int> rdeg = j.at("row_degrees").get<std::vector<int>>();
  std::vector<int> cdeg = j.at("col_degrees").get<std::vector<int>>();
  GradedMatrix<F> m(f, rdeg, cdeg);
  const json& entries = j.at("entries");
  for (int i = 0; i < m.rows(); ++i)
    for (int jj = 0; jj < m.cols(); ++jj) {
      SymPoly<F> p(f);
      for (const auto& t : entries.at(i).at(jj)) {
        Mono mo;
        for (int k = 0; k < 4; ++k) mo.e[k] = t.at("exps").at(k).get<int>();
        p.add_term(mo, parse_scalar(f, t.at("coeff").get<std::string>()));
      }
      m.set(i, jj, p);
    }
  return m;
}

template <class F>
GradedComplex<F> complex_from_json(const F& f, const json& j) {
  GradedComplex<F> c;
  c.label = j.value("label", "user");
  for (const auto& dj : j.at("differentials"))
    c.diff.push_back(graded_from_json(f, dj));
  c.validate_chain();
  return c;
}

// ---------------------------------------------------------------------------
// text rendering (loose mirror of the interactive session layout)

template <class F>
std::string scalar_matrix_text(const ScalarMat<F>& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    os << "|";
    for (int j = 0; j < m.cols(); ++j) os << " " << m.at(i, j).str();
    os << " |\n";
  }
  return os.str();
}

template <class F>
std::string graded_matrix_text(const GradedMatrix<F>& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    os << "|";
    for (int j = 0; j < m.cols(); ++j) os << " " << m.at(i, j).str();
    os << " |\n";
  }
  return os.str();
}

}  // namespace soc3
