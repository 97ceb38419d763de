#include "cuspk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cuspk/bigwitt.hpp"
#include "cuspk/cuspcomb.hpp"
#include "cuspk/error.hpp"
#include "cuspk/kformula.hpp"
#include "cuspk/polyunits.hpp"
#include "cuspk/ring.hpp"
#include "cuspk/tower.hpp"
#include "cuspk/witt.hpp"

namespace cuspk {

using Json = nlohmann::ordered_json;

namespace {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams:
    case ErrorKind::ShapeMismatch:
    case ErrorKind::MixedRings:
    case ErrorKind::QuotientMode:
    case ErrorKind::RegimeViolation:
    case ErrorKind::SymbolicFactor:
      return kExitInvalidParams;
    case ErrorKind::UnsupportedRing:
    case ErrorKind::NotPLocal:
      return kExitUnsupportedRing;
    case ErrorKind::BudgetExceeded:
      return kExitBudget;
    case ErrorKind::InexactDivision:
      return kExitFailure;
  }
  return kExitFailure;
}

Json strings(const std::vector<Integer>& values) {
  Json arr = Json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr;
}

Json factor_json(const Factor& f) {
  Json j;
  j["label"] = f.label;
  j["kind"] = std::string(to_string(f.kind));
  j["n"] = f.n;
  j["k"] = f.k ? Json(*f.k) : Json(nullptr);
  return j;
}

Json factors_json(const GroupDescriptor& d) {
  Json arr = Json::array();
  for (const auto& f : d.factors) arr.push_back(factor_json(f));
  return arr;
}

std::string route_name(QuotientRoute r) {
  switch (r) {
    case QuotientRoute::Auto: return "auto";
    case QuotientRoute::Closure: return "closure";
    case QuotientRoute::Reduction: return "reduction";
  }
  return "?";
}

Ring parse_ring(const RunConfig& c) {
  if (c.ring.empty()) throw Error(ErrorKind::UnsupportedRing, "--ring is required");
  return Ring::parse(c.ring, c.modulus);
}

std::vector<std::int64_t> sorted_r(const RunConfig& c) {
  std::set<std::int64_t> rs(c.r_values.begin(), c.r_values.end());
  if (rs.empty()) throw Error(ErrorKind::InvalidParams, "--r or --r-range is required");
  return {rs.begin(), rs.end()};
}

Integer factor_order(const Factor& f, const Ring& ring) {
  GroupDescriptor d;
  d.factors.push_back(f);
  return descriptor_order(d, ring);
}

// CSV: a,b,p,r,ring,form,factor_label,factor_kind,n,k,order
struct CsvRow {
  std::string label, kind, n, k, order;
};

void csv_rows(std::ostream& os, const Json& doc, const std::vector<CsvRow>& rows) {
  const auto prefix = std::to_string(doc["a"].get<std::int64_t>()) + "," + std::to_string(doc["b"].get<std::int64_t>()) +
                      "," + std::to_string(doc["p"].get<std::int64_t>()) + "," +
                      (doc["r"].is_null() ? std::string() : std::to_string(doc["r"].get<std::int64_t>())) + "," +
                      doc["ring"].get<std::string>() + "," + doc["form"].get<std::string>() + ",";
  if (rows.empty()) {
    os << prefix << ",,,,1\n";
    return;
  }
  for (const auto& r : rows) os << prefix << r.label << "," << r.kind << "," << r.n << "," << r.k << "," << r.order << "\n";
}

std::vector<CsvRow> descriptor_rows(const GroupDescriptor& d, const std::optional<Ring>& ring) {
  std::vector<CsvRow> rows;
  for (const auto& f : d.factors) {
    rows.push_back({f.label, std::string(to_string(f.kind)), std::to_string(f.n), f.k ? std::to_string(*f.k) : "",
                    ring ? factor_order(f, *ring).get_str() : ""});
  }
  return rows;
}

std::vector<CsvRow> cyclic_rows(const FiniteAbelianGroup& g) {
  std::vector<CsvRow> rows;
  for (std::size_t i = 0; i < g.invariant_factors().size(); ++i) {
    rows.push_back({"d" + std::to_string(i + 1), "Cyclic", "", "", g.invariant_factors()[i].get_str()});
  }
  return rows;
}

struct Emitted {
  Json doc;
  std::vector<CsvRow> rows;
};

Emitted kgroup_point(const RunConfig& c, const CuspParams& params, const Ring& ring, std::int64_t r, bool odd,
                     std::optional<std::int64_t> degree) {
  if (c.form != "product" && c.form != "quotient" && c.form != "both") {
    throw Error(ErrorKind::InvalidParams, "--form must be product, quotient or both");
  }
  Emitted e;
  Json& doc = e.doc;
  doc["a"] = params.a;
  doc["b"] = params.b;
  doc["p"] = params.p;
  doc["r"] = r;
  doc["ring"] = ring.name();
  doc["form"] = c.form;

  const auto product = odd ? k_odd(params, r) : k_even_product_form(params, r);
  const bool want_product = c.form != "quotient";
  const bool want_quotient = c.form != "product";
  FiniteAbelianGroup product_group;
  if (want_product) product_group = realize_descriptor(product, ring, c.budget);
  std::optional<QuotientResult> quotient;
  if (want_quotient) {
    if (odd) {
      quotient = QuotientResult{};
    } else {
      QuotientOptions opts;
      opts.budget = c.budget;
      quotient = k_even_quotient_form(params, r, ring, opts);
    }
  }
  const auto& main_group = want_product ? product_group : quotient->group;
  doc["factors"] = want_product ? factors_json(product) : Json::array();
  doc["invariant_factors"] = strings(main_group.invariant_factors());
  doc["order"] = main_group.order().get_str();
  doc["tail_truncated_at"] = nullptr;
  doc["degree"] = degree ? *degree : 2 * r;
  doc["normalized"] = params.normalized;
  doc["base"] = ring.is_perfect_fp_algebra(params.p) ? "perfect" : "exploratory";
  if (want_quotient) {
    Json q;
    q["truncation_set"] = quotient->truncation_set;
    q["route"] = odd || quotient->truncation_set.empty() ? "none" : route_name(quotient->route);
    q["states"] = quotient->states;
    q["invariant_factors"] = strings(quotient->group.invariant_factors());
    q["order"] = quotient->group.order().get_str();
    doc["quotient"] = q;
  }
  if (want_product && want_quotient) doc["forms_agree"] = compare(product_group, quotient->group);
  e.rows = want_product ? descriptor_rows(product, ring) : cyclic_rows(main_group);
  return e;
}

std::vector<Emitted> run_kgroup(const RunConfig& c) {
  const auto params = make_cusp_params(c.a, c.b, c.p);
  const auto ring = parse_ring(c);
  std::vector<Emitted> out;
  if (c.degree) {
    if (!c.r_values.empty()) throw Error(ErrorKind::InvalidParams, "--degree and --r are exclusive");
    const auto d = *c.degree;
    const bool odd = (d % 2) != 0;
    const std::int64_t r = odd ? (d - 1) / 2 : d / 2;
    out.push_back(kgroup_point(c, params, ring, r, odd, d));
    return out;
  }
  for (auto r : sorted_r(c)) out.push_back(kgroup_point(c, params, ring, r, false, std::nullopt));
  return out;
}

Emitted table_point(const RunConfig& c, bool tcminus, std::int64_t r) {
  const auto params = make_cusp_params(c.a, c.b, c.p);
  if (c.truncate < 1) throw Error(ErrorKind::InvalidParams, "--truncate M must be >= 1");
  std::optional<Ring> ring;
  if (!c.ring.empty()) ring = parse_ring(c);
  const auto d = tcminus ? tc_minus_table(params, r, c.truncate) : tp_table(params, c.truncate);
  Emitted e;
  Json& doc = e.doc;
  doc["a"] = params.a;
  doc["b"] = params.b;
  doc["p"] = params.p;
  doc["r"] = tcminus ? Json(r) : Json(nullptr);
  doc["ring"] = ring ? ring->name() : "";
  doc["form"] = tcminus ? "tcminus" : "tp";
  doc["factors"] = factors_json(d);
  if (ring) {
    const auto g = realize_descriptor(d, *ring, c.budget);
    doc["invariant_factors"] = strings(g.invariant_factors());
    doc["order"] = g.order().get_str();
  } else {
    doc["invariant_factors"] = nullptr;
    doc["order"] = nullptr;
  }
  doc["tail_truncated_at"] = c.truncate;
  doc["trivial_omitted"] = d.trivial_omitted;
  doc["normalized"] = params.normalized;
  e.rows = descriptor_rows(d, ring);
  return e;
}

std::vector<Emitted> run_table(const RunConfig& c, bool tcminus) {
  std::vector<Emitted> out;
  if (!tcminus) {
    out.push_back(table_point(c, false, 0));
    return out;
  }
  for (auto r : sorted_r(c)) out.push_back(table_point(c, true, r));
  return out;
}

Json run_tower(const RunConfig& c) {
  const auto ring = parse_ring(c);
  const auto params = make_cusp_params(c.a, c.b, c.p);
  if (c.r_values.size() != 1) throw Error(ErrorKind::InvalidParams, "tower takes exactly one --r");
  if (c.truncate < 0) throw Error(ErrorKind::InvalidParams, "--truncate N must be >= 0");
  const auto r = c.r_values.front();
  const int n = static_cast<int>(c.truncate);
  if (c.tower_case != 1 && c.tower_case != 2) throw Error(ErrorKind::InvalidParams, "--case must be 1 or 2");
  const auto spec = c.tower_case == 1 ? instantiate_case1(params.a, params.b, r, params.p, c.m_prime, ring, n)
                                      : instantiate_case2(params.a, params.b, r, params.p, c.m_prime, ring, n);
  const int s = spec.regime();
  const auto kernel = realize_witt(s, ring, params.p, c.budget);
  Json doc;
  doc["a"] = params.a;
  doc["b"] = params.b;
  doc["p"] = params.p;
  doc["r"] = r;
  doc["mprime"] = c.m_prime;
  doc["ring"] = ring.name();
  doc["case"] = c.tower_case;
  doc["s"] = s;
  doc["truncation"] = n;
  doc["kernel_invariant_factors"] = strings(kernel.invariant_factors());
  doc["kernel_order"] = kernel.order().get_str();
  // |coker| = |codomain| |ker| / |domain|.
  const auto q = static_cast<std::int64_t>(ring.cardinality());
  const auto coker_exp = static_cast<std::int64_t>(codomain_exponent(spec)) + s - static_cast<std::int64_t>(domain_exponent(spec));
  doc["cokernel_order"] = coker_exp >= 0 ? pow_integer(q, static_cast<unsigned>(coker_exp)).get_str() : "0";
  doc["normalized"] = params.normalized;
  if (c.oracle) {
    const auto brute = brute_force_kernel(spec, c.budget);
    std::set<std::vector<std::uint64_t>> brute_set;
    for (const auto& x : brute) {
      std::vector<std::uint64_t> flat;
      for (const auto& v : x) flat.insert(flat.end(), v.codes().begin(), v.codes().end());
      brute_set.insert(std::move(flat));
    }
    std::set<std::vector<std::uint64_t>> embed_set;
    const auto ws = static_cast<std::uint64_t>(kernel.order().get_ui());
    for (std::uint64_t idx = 0; idx < ws; ++idx) {
      const auto x = kernel_embed(spec, WittVector::from_index(ring, params.p, static_cast<std::size_t>(s), idx));
      std::vector<std::uint64_t> flat;
      for (const auto& v : x) flat.insert(flat.end(), v.codes().begin(), v.codes().end());
      embed_set.insert(std::move(flat));
    }
    Json o;
    o["kernel_size"] = brute.size();
    o["kernel_matches_embed"] = brute_set == embed_set;
    doc["oracle"] = o;
  } else {
    doc["oracle"] = nullptr;
  }
  return doc;
}

Json run_units(const RunConfig& c) {
  // The torsion check runs over Z and takes no ring.
  const bool over_z = c.check == "torsion";
  const auto ring = over_z ? Ring::zmod(2) : parse_ring(c);
  Json doc;
  doc["ring"] = over_z ? std::string("Z") : ring.name();
  doc["p"] = c.p;
  doc["trunc"] = c.truncate;
  doc["check"] = c.check;
  doc["target"] = c.target.empty() ? Json(nullptr) : Json(c.target);
  if (c.check == "unit") {
    if (c.target.empty()) throw Error(ErrorKind::InvalidParams, "--target is required");
    const auto f = TruncatedPoly::parse(ring, c.target);
    doc["result"] = poly_is_unit(f);
  } else if (c.check == "pth-root") {
    if (c.target.empty()) throw Error(ErrorKind::InvalidParams, "--target is required");
    if (c.truncate < 1) throw Error(ErrorKind::InvalidParams, "--trunc N must be >= 1");
    const auto u = TruncatedPoly::parse(ring, c.target, static_cast<std::size_t>(c.truncate));
    const auto res = has_pth_root(u, c.p, c.budget);
    doc["result"] = res.exists;
    doc["witness"] = res.witness ? Json(res.witness->to_string()) : Json(nullptr);
    doc["obstruction"] = res.exists ? Json(nullptr) : Json(res.obstruction);
    doc["searched"] = res.searched;
  } else if (c.check == "group") {
    if (c.truncate < 1) throw Error(ErrorKind::InvalidParams, "--trunc N must be >= 1");
    const auto g = one_plus_nil_group(ring, static_cast<std::size_t>(c.truncate), c.budget);
    bool closed = true;
    for (const auto& f : g.elements) {
      if (!g.contains(g.inverse(f)) || !(g.multiply(f, g.inverse(f)).is_one())) closed = false;
    }
    doc["result"] = closed;
    doc["order"] = std::to_string(g.elements.size());
  } else if (c.check == "torsion") {
    if (c.truncate < 1) throw Error(ErrorKind::InvalidParams, "--trunc N must be >= 1");
    if (c.power < 0) throw Error(ErrorKind::InvalidParams, "--power must be >= 0");
    const auto trace = torsion_free_check(c.p, static_cast<std::size_t>(c.truncate), static_cast<unsigned>(c.power));
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
      Json j;
      j["index"] = s.index;
      j["multiplier"] = s.multiplier.get_str();
      j["equation"] = s.equation;
      j["conclusion"] = s.conclusion;
      steps.push_back(j);
    }
    doc["result"] = trace.concludes_identity;
    doc["power"] = c.power;
    doc["steps"] = steps;
  } else {
    throw Error(ErrorKind::InvalidParams, "--check must be pth-root, unit, group or torsion");
  }
  return doc;
}

Json run_selfcheck(bool& all_pass) {
  Json checks = Json::array();
  all_pass = true;
  const auto add = [&](const std::string& name, bool pass) {
    Json j;
    j["name"] = name;
    j["pass"] = pass;
    checks.push_back(j);
    all_pass = all_pass && pass;
  };
  const auto f3 = Ring::parse("F3");
  const auto f2 = Ring::parse("F2");
  const auto f5 = Ring::parse("F5");
  const auto one3 = WittVector::one(f3, 3, 2);
  add("witt W2(F3) 1+1", (one3 + one3) == WittVector(f3, 3, {2, 1}));
  const auto one2 = WittVector::one(f2, 2, 2);
  add("witt W2(F2) 1+1", (one2 + one2) == WittVector(f2, 2, {0, 1}));
  const auto z4 = Ring::zmod(4);
  const BigWittVector bw(z4, TruncationSet({1, 2}), {1, 0});
  add("bigwitt W{1,2}(Z4) 1+1", (bw + bw) == BigWittVector(z4, TruncationSet({1, 2}), {2, 3}));
  add("l(2,3,25)", l_count(2, 3, 25) == 4);
  add("S(2,3,0)", S_set(2, 3, 0) == std::vector<std::int64_t>{1, 2, 3, 4, 6});
  add("h(4,3,2,2,1)", h_func(4, 3, 2, 2, 1) == 2);
  const auto params = make_cusp_params(2, 3, 5);
  const auto prod = realize_descriptor(k_even_product_form(params, 0), f5);
  const auto quot = k_even_quotient_form(params, 0, f5).group;
  add("cusp (2,3,5,0) over F5", prod.order() == 5 && compare(prod, quot));
  const auto spec = TowerSpec::standard(f2, 2, 2, 5);
  add("tower s=2 kernel", brute_force_kernel(spec).size() == 4);
  const auto u = TruncatedPoly::parse(Ring::zmod(8), "1+2t", 3);
  add("no square root of 1+2t over Z8", !has_pth_root(u, 2).exists);
  return checks;
}

void write_csv_header(std::ostream& os) { os << "a,b,p,r,ring,form,factor_label,factor_kind,n,k,order\n"; }

void emit(const RunConfig& c, const std::vector<Emitted>& items, std::ostream& os) {
  if (c.format == "csv") {
    write_csv_header(os);
    for (const auto& e : items) csv_rows(os, e.doc, e.rows);
    return;
  }
  if (items.size() == 1) {
    os << items.front().doc.dump(2) << "\n";
    return;
  }
  Json arr = Json::array();
  for (const auto& e : items) arr.push_back(e.doc);
  os << arr.dump(2) << "\n";
}

void emit_json(const RunConfig& c, const Json& doc, std::ostream& os) {
  if (c.format == "csv") throw Error(ErrorKind::InvalidParams, "CSV output is available for kgroup, tcminus and tp");
  os << doc.dump(2) << "\n";
}

int dispatch(const RunConfig& c, std::ostream& os) {
  if (c.format != "json" && c.format != "csv") throw Error(ErrorKind::InvalidParams, "--format must be json or csv");
  if (c.budget == 0) throw Error(ErrorKind::InvalidParams, "--budget must be positive");
  if (c.subcommand == "kgroup") {
    emit(c, run_kgroup(c), os);
  } else if (c.subcommand == "tcminus") {
    emit(c, run_table(c, true), os);
  } else if (c.subcommand == "tp") {
    emit(c, run_table(c, false), os);
  } else if (c.subcommand == "tower") {
    emit_json(c, run_tower(c), os);
  } else if (c.subcommand == "units") {
    emit_json(c, run_units(c), os);
  } else if (c.subcommand == "selfcheck") {
    bool all_pass = false;
    Json doc;
    doc["checks"] = run_selfcheck(all_pass);
    doc["all_pass"] = all_pass;
    emit_json(c, doc, os);
    return all_pass ? kExitOk : kExitFailure;
  } else {
    throw Error(ErrorKind::InvalidParams, "unknown subcommand '" + c.subcommand + "'");
  }
  return kExitOk;
}

std::vector<std::int64_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::InvalidParams, "--r-range expects lo:hi");
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  try {
    lo = std::stoll(text.substr(0, colon));
    hi = std::stoll(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidParams, "--r-range expects lo:hi");
  }
  if (hi < lo) throw Error(ErrorKind::InvalidParams, "--r-range is empty");
  std::vector<std::int64_t> out;
  for (auto r = lo; r <= hi; ++r) out.push_back(r);
  return out;
}

}  // namespace

std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                                      std::ostream& err) {
  CLI::App app{"Exact K-group, TC tower and Witt vector computations for cusps y^a = x^b", "cuspk"};
  app.require_subcommand(1);

  std::optional<std::int64_t> r;
  std::string r_range;
  std::string modulus;
  std::string budget_text;

  const auto common = [&](CLI::App* sub, bool needs_ab) {
    if (needs_ab) {
      sub->add_option("--a", config.a, "Exponent a >= 2")->required();
      sub->add_option("--b", config.b, "Exponent b >= 2, coprime to a")->required();
    }
    sub->add_option("--p", config.p, "Prime p")->required();
    sub->add_option("--ring", config.ring, "Ring spec: Z<n>, F<p>, F<p>^<d>, products joined by x");
    sub->add_option("--modulus", modulus, "Field modulus c0,c1,...,1");
    sub->add_option("--format", config.format, "json or csv");
    sub->add_option("--budget", budget_text, "Enumeration budget (states)");
    sub->add_option("--out", config.out, "Write output to this path");
  };

  auto* kgroup = app.add_subcommand("kgroup", "Even/odd relative K-groups of the cusp");
  common(kgroup, true);
  kgroup->add_option("--r", r, "Degree 2r");
  kgroup->add_option("--r-range", r_range, "Range lo:hi of r");
  kgroup->add_option("--degree", config.degree, "Query K_degree (odd degrees vanish)");
  kgroup->add_option("--form", config.form, "product, quotient or both");

  auto* tcminus = app.add_subcommand("tcminus", "TC^- factor table up to weight M");
  common(tcminus, true);
  tcminus->add_option("--r", r, "Degree 2r");
  tcminus->add_option("--r-range", r_range, "Range lo:hi of r");
  tcminus->add_option("--truncate", config.truncate, "Weight bound M")->required();

  auto* tp = app.add_subcommand("tp", "TP factor table up to weight M");
  common(tp, true);
  tp->add_option("--truncate", config.truncate, "Weight bound M")->required();

  auto* tower = app.add_subcommand("tower", "(phi - can) tower kernel");
  common(tower, true);
  tower->add_option("--r", r, "Degree 2r")->required();
  tower->add_option("--mprime", config.m_prime, "m' prime to p")->required();
  tower->add_option("--truncate", config.truncate, "Truncation N")->required();
  tower->add_option("--case", config.tower_case, "1 (a' does not divide m') or 2 (a' divides m')");
  tower->add_flag("--oracle", config.oracle, "Cross-check against the brute-force kernel");

  auto* units = app.add_subcommand("units", "Units of R[t] and R[t]/t^N");
  common(units, false);
  units->add_option("--trunc", config.truncate, "Truncation N (t^N = 0)");
  units->add_option("--check", config.check, "pth-root, unit, group or torsion");
  units->add_option("--target", config.target, "Polynomial such as 1+2t");
  units->add_option("--power", config.power, "k in x^{p^k} (torsion check)");

  app.add_subcommand("selfcheck", "Run built-in consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInvalidParams;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  try {
    if (r) config.r_values.push_back(*r);
    if (!r_range.empty()) {
      if (r) throw Error(ErrorKind::InvalidParams, "--r and --r-range are exclusive");
      config.r_values = parse_range(r_range);
    }
    if (!modulus.empty()) {
      std::vector<std::int64_t> coeffs;
      std::stringstream ss(modulus);
      std::string item;
      while (std::getline(ss, item, ',')) coeffs.push_back(std::stoll(item));
      config.modulus = coeffs;
    }
    if (!budget_text.empty()) config.budget = std::stoull(budget_text);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitInvalidParams;
  } catch (const std::exception& e) {
    err << "InvalidParams: " << e.what() << "\n";
    return kExitInvalidParams;
  }
  return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.out) {
      std::ostringstream buffer;
      const int code = dispatch(config, buffer);
      std::ofstream file(*config.out, std::ios::binary);
      if (!file) {
        err << "cannot open " << *config.out << "\n";
        return kExitFailure;
      }
      file << buffer.str();
      return code;
    }
    return dispatch(config, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
}

int cli_main(int argc, const char* const* argv) {
  RunConfig config;
  if (auto code = parse_command_line(argc, argv, config, std::cout, std::cerr)) return *code;
  return run(config, std::cout, std::cerr);
}

}  // namespace cuspk
