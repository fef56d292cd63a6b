#include "rlext/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "rlext/util.hpp"

namespace rlext {
namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    const auto from = tok.find_first_not_of(" \t");
    const auto to = tok.find_last_not_of(" \t");
    if (from == std::string::npos)
      throw std::invalid_argument("empty entry in list '" + text + "'");
    out.push_back(tok.substr(from, to - from + 1));
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& tok : split_list(text)) out.push_back(std::stoi(tok));
  return out;
}

std::vector<Elem> parse_elements(const Field& f, const std::string& text) {
  std::vector<Elem> out;
  for (const std::string& tok : split_list(text)) out.push_back(parse_element(f, tok));
  return out;
}

std::string list_display(const Field& f, std::span<const Elem> v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += element_repr(f, v[i]);
  }
  return s;
}

Json elements_to_json(const Field& f, std::span<const Elem> v) {
  Json values = Json::array();
  Json display = Json::array();
  for (Elem e : v) {
    values.push_back(e);
    display.push_back(element_repr(f, e));
  }
  return Json{{"values", std::move(values)}, {"display", std::move(display)}};
}

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// All options of every subcommand; only the parsed subcommand reads it.
struct Opts {
  RunConfig rc;
  std::string modulus_text;
  std::string alpha_text;
  std::string v_text;
  std::string delta_text = "0";
  std::string tau_text = "0";
  std::string pi_text = "0";
  int k = 3;
  int sweep_n = 0;
  bool json = false;
  bool sweep = false;
  std::string family;
  std::string target = "all";
  std::string emit_path;
  std::string input_path;
  std::string out_path = "fixtures.json";
};

FieldPtr prepare_field(Opts& o) {
  if (!o.modulus_text.empty()) o.rc.modulus = parse_int_list(o.modulus_text);
  o.rc.format = o.json ? "json" : "human";
  std::optional<std::vector<int>> mod;
  if (!o.rc.modulus.empty()) mod = o.rc.modulus;
  return make_field(o.rc.p, o.rc.m, mod);
}

ConstructionParams params_from(const Opts& o, const FieldPtr& f) {
  ConstructionParams p;
  p.field = f;
  p.alpha = parse_elements(*f, o.alpha_text);
  p.k = o.k;
  p.delta = parse_element(*f, o.delta_text);
  p.tau = parse_element(*f, o.tau_text);
  p.pi = parse_element(*f, o.pi_text);
  return p;
}

std::vector<std::string> param_warnings(const ConstructionParams& p) {
  std::vector<std::string> w;
  if (!p.within_stated_range())
    w.push_back(
        "parameters lie outside the window 4 <= k+1 <= n <= q; the "
        "construction still applies but the covering-radius statement is "
        "only asserted inside the window");
  return w;
}

void print_warnings(std::ostream& out, const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) out << "warning: " << w << "\n";
}

void print_matrix(std::ostream& out, const Matrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    out << " ";
    for (int c = 0; c < m.cols(); ++c) out << " " << m(r, c);
    out << "\n";
  }
}

void print_conditions(std::ostream& out, const Field& f,
                      std::span<const Elem> alpha, const std::string& title,
                      const ConditionReport& r) {
  out << title << ": " << (r.overall ? "yes" : "no") << "\n";
  for (const NamedCondition& leaf : r.leaves) {
    out << "  " << leaf.name << ": " << (leaf.holds ? "holds" : "fails");
    if (leaf.witness) {
      std::vector<Elem> elems;
      for (int i : *leaf.witness) elems.push_back(alpha[i]);
      out << "  (subset {" << list_display(f, elems) << "})";
    }
    out << "\n";
  }
}

Json params_to_json(const ConstructionParams& p) {
  const Field& f = *p.field;
  Json j;
  j["field"] = field_to_json(f);
  j["alpha"] = elements_to_json(f, p.alpha);
  j["n"] = p.n();
  j["k"] = p.k;
  j["delta"] = element_to_json(f, p.delta);
  j["tau"] = element_to_json(f, p.tau);
  j["pi"] = element_to_json(f, p.pi);
  return j;
}

// ---- field ----------------------------------------------------------------

int handle_field(Opts& o, std::ostream& out) {
  FieldPtr f = prepare_field(o);
  const std::vector<Elem> prim = f->primitive_elements();
  if (o.json) {
    Json j = field_to_json(*f);
    j["primitive_elements"] = elements_to_json(*f, prim);
    j["config"] = run_config_to_json(o.rc);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "GF(" << f->q() << ") = GF(" << f->p() << "^" << f->m() << ")\n";
  out << "modulus: " << modulus_repr(*f) << "\n";
  out << "primitive: " << element_repr(*f, f->primitive()) << "\n";
  out << "primitive elements: " << list_display(*f, prim) << "\n";
  return kExitOk;
}

// ---- build ----------------------------------------------------------------

int handle_build(Opts& o, std::ostream& out) {
  FieldPtr f = prepare_field(o);
  std::vector<std::string> warnings;
  Json extra;

  LinearCode code = [&]() -> LinearCode {
    if (o.family == "grs") {
      const std::vector<Elem> alpha = parse_elements(*f, o.alpha_text);
      std::vector<Elem> v(alpha.size(), 1);
      if (!o.v_text.empty()) v = parse_elements(*f, o.v_text);
      extra["alpha"] = elements_to_json(*f, alpha);
      extra["v"] = elements_to_json(*f, v);
      extra["k"] = o.k;
      return grs(f, alpha, v, o.k);
    }
    if (o.family == "rl") {
      const std::vector<Elem> alpha = parse_elements(*f, o.alpha_text);
      const Elem delta = parse_element(*f, o.delta_text);
      ConstructionParams p;
      p.field = f;
      p.alpha = alpha;
      p.k = o.k;
      p.delta = delta;
      warnings = param_warnings(p);
      extra["alpha"] = elements_to_json(*f, alpha);
      extra["delta"] = element_to_json(*f, delta);
      extra["k"] = o.k;
      return roth_lempel(f, alpha, delta, o.k);
    }
    if (o.family == "c2") {
      const ConstructionParams p = params_from(o, f);
      warnings = param_warnings(p);
      extra = params_to_json(p);
      extra.erase("field");
      return c2_code(p);
    }
    throw std::invalid_argument("unknown family '" + o.family + "'");
  }();

  if (o.json) {
    Json j = code_to_json(code);
    j["family"] = o.family;
    j["params"] = std::move(extra);
    j["warnings"] = warnings;
    j["config"] = run_config_to_json(o.rc);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "[" << code.length() << "," << code.dimension() << "] code over GF("
      << f->q() << "), family " << o.family << "\n";
  out << "generator:\n";
  print_matrix(out, code.generator());
  print_warnings(out, warnings);
  return kExitOk;
}

// ---- classify ---------------------------------------------------------------

int handle_classify(Opts& o, std::ostream& out) {
  Json doc;
  if (o.input_path == "-") {
    doc = Json::parse(std::cin);
  } else {
    std::ifstream in(o.input_path);
    if (!in) throw std::invalid_argument("cannot open " + o.input_path);
    doc = Json::parse(in);
  }
  const LinearCode code = code_from_json(doc);
  const Classification cls = classify(code, o.rc.budget);
  o.rc.format = o.json ? "json" : "human";
  if (o.json) {
    Json j = classification_to_json(cls);
    j["field"] = field_to_json(code.field());
    j["config"] = run_config_to_json(o.rc);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "[" << cls.n << "," << cls.k << "," << cls.d << "] over GF("
      << code.field().q() << ")  d_dual=" << cls.d_dual << "  verdict="
      << to_string(cls.verdict) << "  singleton defect=" << cls.singleton_defect
      << "\n";
  return kExitOk;
}

// ---- classify-c2 ------------------------------------------------------------

int handle_classify_c2(Opts& o, std::ostream& out) {
  FieldPtr f = prepare_field(o);
  const ConstructionParams p = params_from(o, f);
  const std::vector<std::string> warnings = param_warnings(p);
  const LinearCode code = c2_code(p);
  const Classification cls = classify(code, o.rc.budget);
  const ConditionReport mds = mds_conditions(p);
  const ConditionReport dual_amds = dual_amds_conditions(p);
  const ConditionReport primal_amds = c2_amds_conditions(p);
  const bool nmds_applicable = mds.leaf("cond1") && mds.leaf("cond2");
  std::optional<ConditionReport> nmds;
  if (nmds_applicable) nmds = nmds_conditions(p);

  if (o.json) {
    Json j;
    j["schema"] = "rlext/classify-c2/v1";
    j["version"] = kToolVersion;
    j["params"] = params_to_json(p);
    j["classification"] = classification_to_json(cls);
    Json conds;
    conds["mds"] = condition_report_to_json(mds);
    conds["dual_amds"] = condition_report_to_json(dual_amds);
    conds["c2_amds"] = condition_report_to_json(primal_amds);
    conds["nmds"] = nmds ? condition_report_to_json(*nmds) : Json(nullptr);
    j["conditions"] = std::move(conds);
    j["nmds_applicable"] = nmds_applicable;
    j["warnings"] = warnings;
    j["config"] = run_config_to_json(o.rc);
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "alpha: " << list_display(*f, p.alpha) << "  k=" << p.k
      << "  (delta,tau,pi)=(" << element_repr(*f, p.delta) << ","
      << element_repr(*f, p.tau) << "," << element_repr(*f, p.pi) << ")\n";
  out << "[" << cls.n << "," << cls.k << "," << cls.d << "] over GF(" << f->q()
      << ")  d_dual=" << cls.d_dual << "  verdict=" << to_string(cls.verdict)
      << "\n";
  print_conditions(out, *f, p.alpha, "mds conditions", mds);
  print_conditions(out, *f, p.alpha, "dual-amds conditions", dual_amds);
  print_conditions(out, *f, p.alpha, "c2-amds conditions", primal_amds);
  if (nmds)
    print_conditions(out, *f, p.alpha, "nmds conditions", *nmds);
  else
    out << "nmds conditions: not applicable (hypothesis fails)\n";
  print_warnings(out, warnings);
  return kExitOk;
}

// ---- search -----------------------------------------------------------------

struct TripleRow {
  Elem delta = 0, tau = 0, pi = 0;
  bool cond[4] = {false, false, false, false};
  int d = 0;
  int d_dual = 0;
  Verdict verdict = Verdict::kOther;
  bool c2_amds = false;
  bool dual_amds = false;
  int nmds = -1;  // -1: hypothesis fails, else 0/1
};

enum class Target { kAll, kMds, kAmds, kDualAmds, kNmds };

Target parse_target(const std::string& t) {
  if (t == "all") return Target::kAll;
  if (t == "mds") return Target::kMds;
  if (t == "amds") return Target::kAmds;
  if (t == "dual-amds") return Target::kDualAmds;
  if (t == "nmds") return Target::kNmds;
  throw std::invalid_argument("unknown target '" + t + "'");
}

bool matches_target(const TripleRow& r, Target t, int n, int k) {
  switch (t) {
    case Target::kAll: return true;
    case Target::kMds: return r.verdict == Verdict::kMds;
    case Target::kAmds: return r.d == n + 3 - k;
    case Target::kDualAmds: return r.d_dual == k;
    case Target::kNmds: return r.verdict == Verdict::kNmds;
  }
  return false;
}

Json row_to_json(const Field& f, const TripleRow& r) {
  Json j;
  j["triple"] = {r.delta, r.tau, r.pi};
  j["triple_display"] = {element_repr(f, r.delta), element_repr(f, r.tau),
                         element_repr(f, r.pi)};
  j["cond1"] = r.cond[0];
  j["cond2"] = r.cond[1];
  j["cond3"] = r.cond[2];
  j["cond4"] = r.cond[3];
  j["d"] = r.d;
  j["d_dual"] = r.d_dual;
  j["verdict"] = to_string(r.verdict);
  j["c2_amds"] = r.c2_amds;
  j["dual_amds"] = r.dual_amds;
  j["nmds"] = r.nmds < 0 ? Json(nullptr) : Json(r.nmds == 1);
  return j;
}

std::vector<TripleRow> sweep_triples(const FieldPtr& field,
                                     std::span<const Elem> alpha, int k,
                                     int jobs, std::int64_t budget) {
  const std::int64_t q = field->q();
  ConstructionParams base;
  base.field = field;
  base.alpha.assign(alpha.begin(), alpha.end());
  base.k = k;
  base.validate();

  std::vector<TripleRow> rows(static_cast<size_t>(q * q * q));
  parallel_for_index(q * q * q, jobs, [&](std::int64_t i) {
    ConstructionParams p = base;
    p.pi = static_cast<Elem>(i % q);
    p.tau = static_cast<Elem>((i / q) % q);
    p.delta = static_cast<Elem>(i / (q * q));
    TripleRow& r = rows[static_cast<size_t>(i)];
    r.delta = p.delta;
    r.tau = p.tau;
    r.pi = p.pi;
    const ConditionReport mds = mds_conditions(p);
    for (int c = 0; c < 4; ++c) r.cond[c] = mds.leaves[c].holds;
    const Classification cls = classify(c2_code(p), budget);
    r.d = cls.d;
    r.d_dual = cls.d_dual;
    r.verdict = cls.verdict;
    r.c2_amds = c2_amds_conditions(p).overall;
    r.dual_amds = dual_amds_conditions(p).overall;
    if (r.cond[0] && r.cond[1]) r.nmds = nmds_conditions(p).overall ? 1 : 0;
  });
  return rows;
}

void write_csv(std::ostream& out, const std::vector<TripleRow>& rows) {
  out << "# schema: rlext/sweep-csv/v1\n";
  out << "delta,tau,pi,cond1,cond2,cond3,cond4,verdict,d,d_dual\n";
  for (const TripleRow& r : rows) {
    out << r.delta << "," << r.tau << "," << r.pi;
    for (bool c : r.cond) out << "," << (c ? 1 : 0);
    out << "," << to_string(r.verdict) << "," << r.d << "," << r.d_dual << "\n";
  }
}

int handle_search(Opts& o, std::ostream& out) {
  const auto started = std::chrono::steady_clock::now();
  FieldPtr f = prepare_field(o);
  const Target target = parse_target(o.target);
  const std::vector<Elem> alpha = parse_elements(*f, o.alpha_text);
  ConstructionParams base;
  base.field = f;
  base.alpha = alpha;
  base.k = o.k;
  const std::vector<std::string> warnings = param_warnings(base);

  const std::vector<TripleRow> rows =
      sweep_triples(f, alpha, o.k, resolve_jobs(o.rc.jobs), o.rc.budget);
  const int n = static_cast<int>(alpha.size());

  std::int64_t counts[4] = {0, 0, 0, 0};
  for (const TripleRow& r : rows) ++counts[static_cast<int>(r.verdict)];
  std::vector<const TripleRow*> matches;
  for (const TripleRow& r : rows)
    if (matches_target(r, target, n, o.k)) matches.push_back(&r);

  if (!o.emit_path.empty()) {
    std::ofstream csv(o.emit_path);
    if (!csv) throw std::invalid_argument("cannot open " + o.emit_path);
    write_csv(csv, rows);
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();

  if (o.json) {
    Json j;
    j["schema"] = "rlext/search/v1";
    j["version"] = kToolVersion;
    j["config"] = run_config_to_json(o.rc);
    j["field"] = field_to_json(*f);
    j["alpha"] = elements_to_json(*f, alpha);
    j["n"] = n;
    j["k"] = o.k;
    j["target"] = o.target;
    j["counts"] = Json{{"MDS", counts[0]},
                       {"NMDS", counts[1]},
                       {"AMDS", counts[2]},
                       {"other", counts[3]},
                       {"total", static_cast<std::int64_t>(rows.size())}};
    Json match_list = Json::array();
    for (const TripleRow* r : matches)
      match_list.push_back(Json{{"triple", {r->delta, r->tau, r->pi}},
                                {"verdict", to_string(r->verdict)}});
    j["matches"] = std::move(match_list);
    Json row_list = Json::array();
    for (const TripleRow& r : rows) row_list.push_back(row_to_json(*f, r));
    j["rows"] = std::move(row_list);
    j["warnings"] = warnings;
    j["elapsed_ms"] = elapsed;
    out << j.dump(2) << "\n";
    return kExitOk;
  }

  out << "alpha: " << list_display(*f, alpha) << " over GF(" << f->q()
      << "), k=" << o.k << "\n";
  out << "triples: " << rows.size() << " total | MDS " << counts[0]
      << " | NMDS " << counts[1] << " | AMDS " << counts[2] << " | other "
      << counts[3] << "\n";
  out << "target " << o.target << ": " << matches.size() << " match"
      << (matches.size() == 1 ? "" : "es") << "\n";
  for (const TripleRow* r : matches) {
    out << "  (" << element_repr(*f, r->delta) << ", "
        << element_repr(*f, r->tau) << ", " << element_repr(*f, r->pi)
        << ")  d=" << r->d << " d_dual=" << r->d_dual << " verdict="
        << to_string(r->verdict) << "\n";
  }
  print_warnings(out, warnings);
  return kExitOk;
}

// ---- covering ---------------------------------------------------------------

Json covering_sweep_to_json(const Field& f, const std::vector<CoveringReport>& reports) {
  const int q = f.q();
  Json list = Json::array();
  for (const CoveringReport& r : reports) list.push_back(covering_report_to_json(f, r));
  Json rho_by_delta = Json::array();
  std::int64_t mds_count = 0;
  std::int64_t deep_count = 0;
  for (const CoveringReport& r : reports) {
    mds_count += r.mds_criteria_hold;
    deep_count += r.deep_hole;
  }
  for (int d = 0; d < q; ++d) {
    const CoveringReport& first = reports[static_cast<size_t>(d) * q * q];
    rho_by_delta.push_back(Json{{"delta", d}, {"rho", first.rho}});
  }
  return Json{{"reports", std::move(list)},
              {"rho_by_delta", std::move(rho_by_delta)},
              {"mds_triples", mds_count},
              {"deep_hole_triples", deep_count}};
}

int handle_covering(Opts& o, std::ostream& out) {
  FieldPtr f = prepare_field(o);
  const ConstructionParams p = params_from(o, f);
  const std::vector<std::string> warnings = param_warnings(p);

  if (!o.sweep) {
    const CoveringReport r = verify_covering(p, o.rc.budget);
    if (o.json) {
      Json j = covering_report_to_json(*f, r);
      j["schema"] = "rlext/covering/v1";
      j["params"] = params_to_json(p);
      j["warnings"] = warnings;
      j["config"] = run_config_to_json(o.rc);
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    out << "alpha: " << list_display(*f, p.alpha) << "  k=" << p.k
        << "  (delta,tau,pi)=(" << element_repr(*f, p.delta) << ","
        << element_repr(*f, p.tau) << "," << element_repr(*f, p.pi) << ")\n";
    out << "rho(dual of the two-column extension) = " << r.rho
        << "  u distance = " << r.u_distance << "  deep hole = "
        << (r.deep_hole ? "yes" : "no") << "\n";
    out << "mds criteria hold: " << (r.mds_criteria_hold ? "yes" : "no")
        << " (predicted rho = " << r.predicted_rho << " when they hold)\n";
    print_warnings(out, warnings);
    return kExitOk;
  }

  const std::vector<CoveringReport> reports = sweep_covering(
      f, p.alpha, p.k, resolve_jobs(o.rc.jobs), o.rc.budget);
  if (o.json) {
    Json j = covering_sweep_to_json(*f, reports);
    j["schema"] = "rlext/covering-sweep/v1";
    j["version"] = kToolVersion;
    j["params"] = params_to_json(p);
    j["warnings"] = warnings;
    j["config"] = run_config_to_json(o.rc);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  std::int64_t mds_count = 0;
  for (const CoveringReport& r : reports) mds_count += r.mds_criteria_hold;
  out << "alpha: " << list_display(*f, p.alpha) << "  k=" << p.k << "  sweep over "
      << reports.size() << " triples\n";
  out << "rho by delta:";
  const int q = f->q();
  for (int d = 0; d < q; ++d)
    out << " " << d << "->" << reports[static_cast<size_t>(d) * q * q].rho;
  out << "\n";
  out << "triples passing the mds criteria: " << mds_count << "\n";
  print_warnings(out, warnings);
  return kExitOk;
}

// ---- extendable -------------------------------------------------------------

int handle_extendable(Opts& o, std::ostream& out) {
  FieldPtr f = prepare_field(o);

  if (o.sweep_n == 0) {
    const std::vector<Elem> alpha = parse_elements(*f, o.alpha_text);
    const ExtendabilityReport r = extendability_verdict(f, alpha);
    if (o.json) {
      Json j = extendability_report_to_json(r);
      j["alpha"] = elements_to_json(*f, alpha);
      j["field"] = field_to_json(*f);
      j["config"] = run_config_to_json(o.rc);
      out << j.dump(2) << "\n";
      return kExitOk;
    }
    out << "alpha: " << list_display(*f, alpha) << "\n";
    out << "verdict: " << to_string(r.verdict) << "  predicted d_dual="
        << r.predicted_dual_distance << "  measured d_dual="
        << r.measured_dual_distance << "\n";
    out << "all nonzero: " << (r.all_nonzero ? "yes" : "no")
        << "  no zero pair sum: " << (r.no_zero_pair_sum ? "yes" : "no") << "\n";
    return kExitOk;
  }

  // Sweep over every sweep_n-subset of the nonzero elements.
  const int q = f->q();
  if (o.sweep_n < 4 || o.sweep_n > q - 1)
    throw std::invalid_argument("sweep size must satisfy 4 <= n <= q-1");
  std::int64_t counts[3] = {0, 0, 0};
  std::int64_t mismatches = 0;
  Json rows = Json::array();
  for_each_combination(q - 1, o.sweep_n, [&](std::span<const int> idx) {
    std::vector<Elem> alpha;
    for (int i : idx) alpha.push_back(static_cast<Elem>(i + 1));
    const ExtendabilityReport r = extendability_verdict(f, alpha);
    ++counts[static_cast<int>(r.verdict)];
    const bool match = r.predicted_dual_distance == r.measured_dual_distance;
    mismatches += !match;
    if (o.json) {
      Json row = extendability_report_to_json(r);
      row["alpha"] = elements_to_json(*f, alpha);
      row["match"] = match;
      rows.push_back(std::move(row));
    }
    return true;
  });

  if (o.json) {
    Json j;
    j["schema"] = "rlext/extendable-sweep/v1";
    j["version"] = kToolVersion;
    j["field"] = field_to_json(*f);
    j["n"] = o.sweep_n;
    j["counts"] = Json{{"optimal", counts[0]},
                       {"almost", counts[1]},
                       {"neither", counts[2]}};
    j["mismatches"] = mismatches;
    j["rows"] = std::move(rows);
    j["config"] = run_config_to_json(o.rc);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "GF(" << q << "), all " << o.sweep_n
      << "-subsets of the nonzero elements\n";
  out << "optimal " << counts[0] << " | almost " << counts[1] << " | neither "
      << counts[2] << "\n";
  out << "prediction mismatches: " << mismatches << "\n";
  return kExitOk;
}

// ---- fixtures ---------------------------------------------------------------

Json gf4_search_fixture() {
  FieldPtr f = make_field(2, 2);
  Json out = Json::array();
  for_each_combination(4, 3, [&](std::span<const int> idx) {
    std::vector<Elem> alpha;
    for (int i : idx) alpha.push_back(static_cast<Elem>(i));
    const auto rows = sweep_triples(f, alpha, 3, 1, kDefaultBudget);
    Json triples = Json::array();
    Json parameters;
    for (const TripleRow& r : rows)
      if (r.verdict == Verdict::kMds) {
        triples.push_back({r.delta, r.tau, r.pi});
        parameters = Json::array({6, 3, r.d});
      }
    out.push_back(Json{{"alpha", alpha},
                       {"mds_triples", std::move(triples)},
                       {"parameters", std::move(parameters)}});
    return true;
  });
  return out;
}

Json small_prime_fixtures() {
  Json out;
  {
    FieldPtr f5 = make_field(5, 1);
    ConstructionParams p;
    p.field = f5;
    p.alpha = {1, 2, 3};
    p.k = 3;
    p.delta = 2;
    p.tau = 0;
    p.pi = 1;
    const Classification cls = classify(c2_code(p));
    out["gf5"] = Json{{"alpha", p.alpha},
                      {"triple", {p.delta, p.tau, p.pi}},
                      {"verdict", to_string(cls.verdict)},
                      {"parameters", {cls.n, cls.k, cls.d}}};
  }
  {
    FieldPtr f7 = make_field(7, 1);
    const std::vector<Elem> alpha = {2, 3, 5};
    const auto rows = sweep_triples(f7, alpha, 3, 1, kDefaultBudget);
    Json triples = Json::array();
    bool uniform_6_3_4 = true;
    for (const TripleRow& r : rows)
      if (r.verdict == Verdict::kMds) {
        triples.push_back({r.delta, r.tau, r.pi});
        uniform_6_3_4 &= (r.d == 4 && r.d_dual == 4);
      }
    out["gf7"] = Json{{"alpha", alpha},
                      {"mds_count", triples.size()},
                      {"mds_triples", std::move(triples)},
                      {"all_are_6_3_4", uniform_6_3_4}};
  }
  return out;
}

Json gf8_config_fixture() {
  FieldPtr f = make_field(2, 3);
  struct Config {
    int k;
    std::vector<int> alpha_powers;  // -1 encodes the zero element
    int delta_pow, tau_pow, pi_pow; // -2 encodes zero for the triple
  };
  // alpha entries: 0, 1 = g^0, then powers of the chosen primitive.
  const std::vector<Config> configs = {
      {3, {-1, 0, 1, 3}, 6, 5, 2},
      {4, {-1, 0, 1, 3}, 6, 6, -2},
      {3, {-1, 0, 1, 2, 3}, -2, 4, 1},
  };
  Json out = Json::array();
  for (const Config& cfg : configs) {
    Json prim_list = Json::array();
    Json parameters;
    for (Elem g : f->primitive_elements()) {
      ConstructionParams p;
      p.field = f;
      for (int pw : cfg.alpha_powers)
        p.alpha.push_back(pw < 0 ? 0 : f->pow(g, pw));
      p.k = cfg.k;
      p.delta = cfg.delta_pow == -2 ? 0 : f->pow(g, cfg.delta_pow);
      p.tau = cfg.tau_pow == -2 ? 0 : f->pow(g, cfg.tau_pow);
      p.pi = cfg.pi_pow == -2 ? 0 : f->pow(g, cfg.pi_pow);
      const Classification cls = classify(c2_code(p));
      if (cls.verdict == Verdict::kMds) {
        prim_list.push_back(g);
        parameters = Json::array({cls.n, cls.k, cls.d});
      }
    }
    out.push_back(Json{{"k", cfg.k},
                       {"n", cfg.alpha_powers.size()},
                       {"primitives_with_mds", std::move(prim_list)},
                       {"parameters", std::move(parameters)}});
  }
  return out;
}

Json covering_fixtures() {
  Json out;
  {
    FieldPtr f5 = make_field(5, 1);
    const std::vector<Elem> alpha = {1, 2, 3, 4};
    const auto reports = sweep_covering(f5, alpha, 3, 1);
    Json rho_by_delta = Json::array();
    std::int64_t mds_count = 0;
    for (const CoveringReport& r : reports) mds_count += r.mds_criteria_hold;
    for (int d = 0; d < 5; ++d)
      rho_by_delta.push_back(reports[static_cast<size_t>(d) * 25].rho);
    out["gf5"] = Json{{"alpha", alpha},
                      {"rho_by_delta", std::move(rho_by_delta)},
                      {"mds_triples", mds_count}};
  }
  const auto power_case = [](int p, int m, int dpow, int tpow, int ppow) {
    FieldPtr f = make_field(p, m);
    Json prim_list = Json::array();
    for (Elem g : f->primitive_elements()) {
      ConstructionParams prm;
      prm.field = f;
      prm.alpha = {0, 1, g, f->mul(g, g)};
      prm.k = 3;
      prm.delta = f->pow(g, dpow);
      prm.tau = f->pow(g, tpow);
      prm.pi = f->pow(g, ppow);
      const CoveringReport r = verify_covering(prm);
      if (r.mds_criteria_hold && r.rho == 3 && r.deep_hole)
        prim_list.push_back(g);
    }
    return prim_list;
  };
  out["gf8"] = Json{{"alpha_shape", "0,1,g,g^2"},
                    {"triple_powers", {2, 2, 5}},
                    {"primitives_confirming", power_case(2, 3, 2, 2, 5)}};
  out["gf9"] = Json{{"alpha_shape", "0,1,g,g^2"},
                    {"triple_powers", {6, 5, 0}},
                    {"primitives_confirming", power_case(3, 2, 6, 5, 0)}};
  return out;
}

Json extendable_fixtures() {
  Json out = Json::array();
  for (int q : {8, 9}) {
    const auto [p, m] = *factor_prime_power(q);
    FieldPtr f = make_field(p, m);
    std::int64_t counts[3] = {0, 0, 0};
    std::int64_t mismatches = 0;
    for_each_combination(q - 1, 4, [&](std::span<const int> idx) {
      std::vector<Elem> alpha;
      for (int i : idx) alpha.push_back(static_cast<Elem>(i + 1));
      const ExtendabilityReport r = extendability_verdict(f, alpha);
      ++counts[static_cast<int>(r.verdict)];
      mismatches += r.predicted_dual_distance != r.measured_dual_distance;
      return true;
    });
    out.push_back(Json{{"q", q},
                       {"n", 4},
                       {"optimal", counts[0]},
                       {"almost", counts[1]},
                       {"neither", counts[2]},
                       {"mismatches", mismatches}});
  }
  return out;
}

int handle_fixtures(Opts& o, std::ostream& out) {
  Json j;
  j["schema"] = "rlext/fixtures/v1";
  j["version"] = kToolVersion;
  j["gf4_searches"] = gf4_search_fixture();
  j["prime_field_checks"] = small_prime_fixtures();
  j["gf8_configs"] = gf8_config_fixture();
  j["covering"] = covering_fixtures();
  j["extendable"] = extendable_fixtures();
  std::ofstream file(o.out_path);
  if (!file) throw std::invalid_argument("cannot open " + o.out_path);
  file << j.dump(2) << "\n";
  out << "wrote " << o.out_path << "\n";
  return kExitOk;
}

void add_field_options(CLI::App* cmd, Opts& o) {
  cmd->add_option("--p", o.rc.p, "field characteristic (prime)")->required();
  cmd->add_option("--m", o.rc.m, "extension degree (default 1)");
  cmd->add_option("--modulus", o.modulus_text,
                  "modulus coefficients c0,c1,...,cm (ascending degree)");
}

}  // namespace

Json run_config_to_json(const RunConfig& c) {
  Json j;
  j["schema"] = "rlext/config/v1";
  j["p"] = c.p;
  j["m"] = c.m;
  j["modulus"] = c.modulus;
  j["format"] = c.format;
  j["jobs"] = c.jobs;
  j["budget"] = c.budget;
  return j;
}

RunConfig run_config_from_json(const Json& j) {
  if (j.value("schema", "") != "rlext/config/v1")
    throw std::invalid_argument("expected schema rlext/config/v1");
  RunConfig c;
  c.p = j.at("p").get<int>();
  c.m = j.at("m").get<int>();
  c.modulus = j.at("modulus").get<std::vector<int>>();
  c.format = j.at("format").get<std::string>();
  c.jobs = j.at("jobs").get<int>();
  c.budget = j.at("budget").get<std::int64_t>();
  if (c.budget <= 0) throw std::invalid_argument("budget must be positive");
  return c;
}

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for Roth-Lempel extension codes over small fields",
               "rlext"};
  app.require_subcommand(1);
  Opts o;
  int rc = kExitOk;

  CLI::App* field_cmd = app.add_subcommand("field", "Describe a finite field");
  add_field_options(field_cmd, o);
  field_cmd->add_flag("--json", o.json, "emit JSON");
  field_cmd->callback([&] { rc = handle_field(o, out); });

  CLI::App* build = app.add_subcommand("build", "Build a code and print its generator");
  add_field_options(build, o);
  build->add_option("--family", o.family, "grs | rl | c2")->required();
  build->add_option("--alpha", o.alpha_text, "evaluation points a1,a2,...")->required();
  build->add_option("--k", o.k, "dimension")->required();
  build->add_option("--v", o.v_text, "grs column multipliers (default all ones)");
  build->add_option("--delta", o.delta_text, "tail entry delta");
  build->add_option("--tau", o.tau_text, "tail entry tau");
  build->add_option("--pi", o.pi_text, "tail entry pi");
  build->add_flag("--json", o.json, "emit JSON");
  build->callback([&] { rc = handle_build(o, out); });

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "Classify a serialized code");
  classify_cmd->add_option("--input", o.input_path, "code JSON file, or - for stdin")
      ->required();
  classify_cmd->add_option("--budget", o.rc.budget, "enumeration threshold");
  classify_cmd->add_flag("--json", o.json, "emit JSON");
  classify_cmd->callback([&] { rc = handle_classify(o, out); });

  CLI::App* cc2 = app.add_subcommand(
      "classify-c2", "Classify the three-column extension for one triple");
  add_field_options(cc2, o);
  cc2->add_option("--alpha", o.alpha_text, "evaluation points")->required();
  cc2->add_option("--k", o.k, "dimension")->required();
  cc2->add_option("--delta", o.delta_text, "tail entry delta");
  cc2->add_option("--tau", o.tau_text, "tail entry tau");
  cc2->add_option("--pi", o.pi_text, "tail entry pi");
  cc2->add_option("--budget", o.rc.budget, "enumeration threshold");
  cc2->add_flag("--json", o.json, "emit JSON");
  cc2->callback([&] { rc = handle_classify_c2(o, out); });

  CLI::App* search = app.add_subcommand(
      "search", "Sweep all (delta,tau,pi) triples for one point set");
  add_field_options(search, o);
  search->add_option("--alpha", o.alpha_text, "evaluation points")->required();
  search->add_option("--k", o.k, "dimension")->required();
  search->add_option("--target", o.target, "all | mds | amds | dual-amds | nmds")
      ->check(CLI::IsMember({"all", "mds", "amds", "dual-amds", "nmds"}));
  search->add_option("--emit", o.emit_path, "write the full sweep as CSV");
  search->add_option("--jobs", o.rc.jobs, "worker threads (0 = auto)");
  search->add_option("--budget", o.rc.budget, "enumeration threshold");
  search->add_flag("--json", o.json, "emit JSON");
  search->callback([&] { rc = handle_search(o, out); });

  CLI::App* covering = app.add_subcommand(
      "covering", "Covering radius of the dual Roth-Lempel code");
  add_field_options(covering, o);
  covering->add_option("--alpha", o.alpha_text, "evaluation points")->required();
  covering->add_option("--k", o.k, "dimension")->required();
  covering->add_option("--delta", o.delta_text, "tail entry delta");
  covering->add_option("--tau", o.tau_text, "tail entry tau");
  covering->add_option("--pi", o.pi_text, "tail entry pi");
  covering->add_flag("--sweep", o.sweep, "sweep all triples");
  covering->add_option("--jobs", o.rc.jobs, "worker threads (0 = auto)");
  covering->add_option("--budget", o.rc.budget, "work cap for exhaustive scans");
  covering->add_flag("--json", o.json, "emit JSON");
  covering->callback([&] { rc = handle_covering(o, out); });

  CLI::App* extendable = app.add_subcommand(
      "extendable", "Identity-augmentation verdict for dimension-3 codes");
  add_field_options(extendable, o);
  extendable->add_option("--alpha", o.alpha_text, "evaluation points");
  extendable->add_option("--sweep-n", o.sweep_n,
                         "sweep all n-subsets of the nonzero elements");
  extendable->add_flag("--json", o.json, "emit JSON");
  extendable->callback([&] {
    if (o.sweep_n == 0 && o.alpha_text.empty())
      throw CLI::RequiredError("--alpha or --sweep-n");
    rc = handle_extendable(o, out);
  });

  CLI::App* fixtures = app.add_subcommand(
      "fixtures", "Regenerate the reference-run fixture file");
  fixtures->add_option("--out", o.out_path, "output path (default fixtures.json)");
  fixtures->callback([&] { rc = handle_fixtures(o, out); });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "budget refused: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitError;
  }
  return rc;
}

}  // namespace rlext
