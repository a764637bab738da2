#pragma once

#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "soc3/json_io.hpp"

namespace soc3 {

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Degree: return "DegreeError";
    case ErrorKind::Shape: return "ShapeError";
    case ErrorKind::Singular: return "SingularMatrix";
    case ErrorKind::Rank: return "RankError";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::EmbeddingDim: return "EmbeddingDimError";
    case ErrorKind::Field: return "FieldError";
    case ErrorKind::Validation: return "ValidationError";
    case ErrorKind::Precondition: return "PreconditionError";
    case ErrorKind::Invariant: return "InvariantViolation";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Search: return "SearchExhausted";
  }
  return "Error";
}

inline int error_exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Validation:
    case ErrorKind::Parse:
    case ErrorKind::Degree:
    case ErrorKind::EmbeddingDim:
      return 2;
    case ErrorKind::Precondition:
    case ErrorKind::Rank:
    case ErrorKind::Singular:
    case ErrorKind::Field:
    case ErrorKind::Search:
      return 3;
    default:
      return 1;
  }
}

struct CliConfig {
  std::string field;  // "", "q", or a prime
  int degree_bound = 10;
  uint64_t seed = 0;
  std::string format = "json";
  bool no_verify = false;
  std::string input_path;
};

namespace cli_detail {

inline json read_document(const CliConfig& cfg, std::istream& in,
                          bool required) {
  std::string text;
  if (!cfg.input_path.empty()) {
    std::ifstream f(cfg.input_path);
    if (!f) fail(ErrorKind::Validation, "cannot open " + cfg.input_path);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    if (!required) return json::object();
    fail(ErrorKind::Validation, "empty input document");
  }
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) {
    // fall back to a bare polynomial string
    json j;
    j["phi"] = text.substr(0, text.find_last_not_of(" \t\r\n") + 1);
    return j;
  }
  return doc;
}

template <class F>
void emit_checks_text(const VerificationReport& r, std::ostream& out) {
  for (const auto& c : r.checks)
    out << (c.pass ? "ok   " : "FAIL ") << c.name
        << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
}

template <class F>
int finish(const F&, json& out_doc, const VerificationReport* report,
           const CliConfig& cfg, std::ostream& out) {
  if (report) out_doc["verification"] = report_to_json(*report);
  if (cfg.format == "json") {
    out << out_doc.dump(2) << "\n";
  } else {
    if (out_doc.contains("case"))
      out << "case: " << out_doc["case"].get<std::string>() << "\n";
    if (out_doc.contains("text")) out << out_doc["text"].get<std::string>();
    if (report) emit_checks_text<F>(*report, out);
  }
  if (report && !report->all_pass()) return 4;
  return 0;
}

template <class F>
json ns_to_json(const NormalizedSystem<F>& ns) {
  json j;
  j["case"] = case_name(ns.tag);
  j["applied_change"] = scalar_to_json(ns.applied_change);
  j["phi_normalized"] = divpow_to_json(ns.phi);
  if (ns.tag != CaseTag::Exceptional) {
    j["p"] = scalar_to_json(ns.p);
    j["sm"] = scalar_to_json(ns.sm);
    j["sm_rank"] = ns.sm_rank;
    if (ns.alpha) j["alpha"] = ns.alpha->str();
  }
  if (ns.exceptional_change)
    j["exceptional_change"] = scalar_to_json(*ns.exceptional_change);
  return j;
}

template <class F>
int run_typed(const F& f, const std::string& sub, const CliConfig& cfg,
              std::istream& in, std::ostream& out) {
  json out_doc;
  out_doc["field"] = {{"characteristic", f.characteristic()}};

  if (sub == "exceptional") {
    LinkedPair<F> lp = exceptional_resolution(f);
    out_doc["matrices"] = {{"K1", graded_to_json(lp.bottom1)},
                           {"K2", graded_to_json(lp.bottom2)},
                           {"K3", graded_to_json(lp.bottom3)},
                           {"L0", graded_to_json(lp.L0)},
                           {"L1", graded_to_json(lp.L1)}};
    out_doc["cone"] = complex_to_json(mapping_cone(lp.map));
    VerificationReport r;
    r.degree_bound = cfg.degree_bound;
    if (!cfg.no_verify) {
      check_mapping_cone(lp.map, {1, 4, 4, 1}, cfg.degree_bound, "exceptional",
                         r);
      GradedComplex<F> cone = mapping_cone(lp.map);
      r.add("cone ideal = (xy,xz,xw,y^2,z^2,w^2,x^3+yzw)",
            ideal_equal(f, row_entries(cone.diff[0]), exceptional_ideal(f)));
    }
    return finish(f, out_doc, cfg.no_verify ? nullptr : &r, cfg, out);
  }

  json doc = read_document(cfg, in, true);

  if (sub == "verify") {
    GradedComplex<F> c = complex_from_json(f, doc);
    VerificationReport r;
    r.degree_bound = cfg.degree_bound;
    bool zero = check_zero_compositions(c);
    r.add("compositions zero", zero);
    std::vector<int> hf = doc.contains("hf")
                              ? doc["hf"].get<std::vector<int>>()
                              : euler_hf(c, cfg.degree_bound);
    if (zero)
      r.add(check_graded_exactness(c, hf, cfg.degree_bound, "exactness"));
    out_doc["betti_totals"] = betti_totals(c);
    return finish(f, out_doc, &r, cfg, out);
  }

  InverseSystem<F> sys = parse_phi(f, doc);

  if (sub == "oracle") {
    AnnihilatorOracle<F> o = annihilator_oracle(sys);
    out_doc["hf"] = o.hf;
    json gens;
    for (int d = 1; d <= o.socle_degree; ++d) {
      json list = json::array();
      for (const auto& g : o.ann_basis[d]) {
        json gj;
        gj["str"] = g.str();
        gj["terms"] = poly_to_json(g);
        list.push_back(gj);
      }
      gens[std::to_string(d)] = list;
    }
    out_doc["annihilator_generators"] = gens;
    out_doc["minimal_generator_count"] = minimal_generator_count(o);
    return finish(f, out_doc, nullptr, cfg, out);
  }

  NormalizedSystem<F> ns = prepare(sys, cfg.seed);
  out_doc.update(ns_to_json(ns));
  VerificationReport r;
  r.degree_bound = cfg.degree_bound;

  if (sub == "basic") {
    CoreMatrices<F> cm = basic_soc_deg3(ns);
    out_doc["matrices"] = {
        {"f11", graded_to_json(cm.f11)}, {"f12", graded_to_json(cm.f12)},
        {"A", graded_to_json(cm.A)},     {"B", scalar_to_json(cm.B)},
        {"C", scalar_to_json(cm.C)},     {"D", graded_to_json(cm.D)},
        {"SM", scalar_to_json(cm.sm)}};
    if (cfg.format == "text")
      out_doc["text"] = "SM =\n" + scalar_matrix_text(cm.sm);
    if (!cfg.no_verify) {
      AnnihilatorOracle<F> o = annihilator_oracle(f, ns.phi);
      verify_core_identities(ns, cm, o, r);
      verify_assemblies(ns, cm, o, cfg.degree_bound, r);
    }
    return finish(f, out_doc, cfg.no_verify ? nullptr : &r, cfg, out);
  }

  if (sub == "minres7") {
    SevenResolution<F> e = minres7(ns);
    out_doc["matrices"] = {
        {"E1", graded_to_json(e.E1)}, {"E2", graded_to_json(e.E2)},
        {"E3", graded_to_json(e.E3)}, {"E4", graded_to_json(e.E4)}};
    GradedComplex<F> ec = e.complex();
    out_doc["betti_totals"] = betti_totals(ec);
    if (!cfg.no_verify) {
      AnnihilatorOracle<F> o = annihilator_oracle(f, ns.phi);
      r.add("minres7 compositions zero", check_zero_compositions(ec));
      r.add(check_graded_exactness(ec, o.hf_padded(cfg.degree_bound),
                                   cfg.degree_bound, "minres7 exactness"));
      r.add("ideal(E1) = ann(Phi)",
            ideal_equal(f, row_entries(ec.diff[0]), o.generators()));
      r.add("Betti totals (1,7,12,7,1)",
            betti_totals(ec) == std::vector<int>({1, 7, 12, 7, 1}));
    }
    return finish(f, out_doc, cfg.no_verify ? nullptr : &r, cfg, out);
  }

  if (sub == "linked7" || sub == "linked9") {
    LinkedPair<F> lp = sub == "linked7" ? linked7(ns) : linked9(ns);
    const char* n1 = sub == "linked7" ? "B1" : "K1";
    const char* n2 = sub == "linked7" ? "B2" : "K2";
    const char* n3 = sub == "linked7" ? "B3" : "K3";
    out_doc["matrices"] = {{n1, graded_to_json(lp.bottom1)},
                           {n2, graded_to_json(lp.bottom2)},
                           {n3, graded_to_json(lp.bottom3)},
                           {"L0", graded_to_json(lp.L0)},
                           {"L1", graded_to_json(lp.L1)}};
    if (!cfg.no_verify) {
      AnnihilatorOracle<F> o = annihilator_oracle(f, ns.phi);
      check_mapping_cone(lp.map, o.hf_padded(cfg.degree_bound),
                         cfg.degree_bound, sub, r);
      if (sub == "linked7" && lp.brown) {
        auto brown = brown_complex(f, *lp.brown);
        r.add("bottom row is the Brown complex with z2 = 0",
              detail::grid_equals_graded(f, brown[0], lp.bottom1) &&
                  detail::grid_equals_graded(f, brown[1], lp.bottom2) &&
                  detail::grid_equals_graded(f, brown[2], lp.bottom3));
      }
      if (sub == "linked9") {
        CoreMatrices<F> cm = basic_soc_deg3(ns);
        r.add("cone equals (F,ftilde) entrywise",
              linked9_cone_matches_tilde(lp, assemble_tilde(cm)));
      }
    }
    return finish(f, out_doc, cfg.no_verify ? nullptr : &r, cfg, out);
  }

  if (sub == "minres6") {
    SixResult<F> six = minres6(ns);
    out_doc["matrices"] = {{"d1", graded_to_json(six.d1)},
                           {"X", graded_to_json(six.X)},
                           {"L", graded_to_json(six.L)},
                           {"delta", scalar_to_json(six.delta)}};
    out_doc["f"] = poly_to_json(six.f6);
    out_doc["f_str"] = six.f6.str();
    if (!cfg.no_verify) {
      CaseResult<F> res;
      res.ns = ns;
      res.tag = ns.tag;
      res.six = six;
      res.minimal = mapping_cone(six.hypersurface_map());
      AnnihilatorOracle<F> o = annihilator_oracle(f, ns.phi);
      verify_six(res, o, cfg.degree_bound);
      r = res.report;
      r.degree_bound = cfg.degree_bound;
    }
    return finish(f, out_doc, cfg.no_verify ? nullptr : &r, cfg, out);
  }

  if (sub == "resolve") {
    ResolveOptions<F> opts;
    opts.verify = !cfg.no_verify;
    opts.degree_bound = cfg.degree_bound;
    CaseResult<F> res = resolve(ns, opts);
    out_doc["generator_count"] = res.generator_count;
    if (res.minimal) out_doc["minimal_resolution"] = complex_to_json(*res.minimal);
    if (res.core) {
      out_doc["matrices"] = {
          {"f11", graded_to_json(res.core->f11)},
          {"f12", graded_to_json(res.core->f12)},
          {"A", graded_to_json(res.core->A)},
          {"B", scalar_to_json(res.core->B)},
          {"C", scalar_to_json(res.core->C)},
          {"D", graded_to_json(res.core->D)},
          {"SM", scalar_to_json(res.core->sm)}};
      if (cfg.format == "text")
        out_doc["text"] = "SM =\n" + scalar_matrix_text(res.core->sm);
    }
    res.report.degree_bound = cfg.degree_bound;
    return finish(f, out_doc, cfg.no_verify ? nullptr : &res.report, cfg, out);
  }

  fail(ErrorKind::Validation, "unknown subcommand " + sub);
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  CLI::App app{
      "soc3: classification and minimal free resolutions of Artinian "
      "Gorenstein algebras of embedding dimension four and socle degree "
      "three, from a degree-3 inverse system"};
  app.require_subcommand(1);
  CliConfig cfg;
  app.add_option("--field", cfg.field, "q (rationals) or a prime p");
  app.add_option("--degree-bound", cfg.degree_bound,
                 "degree bound for exactness checks (default 10)");
  app.add_option("--seed", cfg.seed, "seed for the Lefschetz search");
  app.add_option("--format", cfg.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-verify", cfg.no_verify, "skip verification checks");
  app.add_option("--input,-i", cfg.input_path, "input file (default stdin)");
  for (const char* sub :
       {"basic", "minres7", "linked7", "linked9", "minres6", "exceptional",
        "resolve", "verify", "oracle"})
    app.add_subcommand(sub)->fallthrough();

  std::vector<std::string> argv = args;
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  std::string sub = app.get_subcommands().front()->get_name();

  try {
    // determine the field: flag first, then document, else Q
    json doc;
    std::string field_spec = cfg.field;
    json predoc;
    bool have_doc = false;
    if (field_spec.empty() && sub != "exceptional") {
      predoc = cli_detail::read_document(cfg, in, sub != "exceptional");
      have_doc = true;
      if (predoc.contains("field") && predoc["field"].contains("characteristic")) {
        uint64_t ch = predoc["field"]["characteristic"].get<uint64_t>();
        field_spec = ch == 0 ? "q" : std::to_string(ch);
      } else {
        field_spec = "q";
      }
    } else if (field_spec.empty()) {
      field_spec = "q";
    }
    std::istringstream redirected(have_doc ? predoc.dump() : std::string());
    std::istream& input = have_doc ? redirected : in;

    if (field_spec == "q" || field_spec == "Q" || field_spec == "0") {
      QQ f;
      return cli_detail::run_typed(f, sub, cfg, input, out);
    }
    uint64_t p = 0;
    try {
      p = std::stoull(field_spec);
    } catch (...) {
      fail(ErrorKind::Validation, "bad field: " + field_spec);
    }
    GF f;
    try {
      f = GF(p);
    } catch (const Error&) {
      fail(ErrorKind::Validation, "characteristic must be 0 or prime");
    }
    return cli_detail::run_typed(f, sub, cfg, input, out);
  } catch (const Error& e) {
    json ej;
    ej["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
    out << ej.dump(2) << "\n";
    err << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return error_exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace soc3
