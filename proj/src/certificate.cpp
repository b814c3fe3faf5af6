#include "artifact/certificate.hpp"

#include <algorithm>
#include <sstream>

namespace artifact {

using nlohmann::ordered_json;

bool CaseReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

const CheckResult* CaseReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return &c;
  return nullptr;
}

ordered_json rational_json(const Rational& q) {
  return ordered_json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const ordered_json& j) {
  Rational q(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
  q.canonicalize();
  return q;
}

namespace {

ordered_json rationals(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& q : v) a.push_back(rational_json(q));
  return a;
}

std::vector<std::vector<int>> sorted_coeffs(const RootSystem& sys, const std::vector<int>& ids) {
  std::vector<std::vector<int>> out;
  for (int id : ids) out.push_back(sys.root(id).coeffs);
  std::sort(out.begin(), out.end());
  return out;
}

ordered_json roots_json(const RootSystem& sys, const std::vector<int>& ids) {
  ordered_json a = ordered_json::array();
  for (const auto& c : sorted_coeffs(sys, ids)) a.push_back(c);
  return a;
}

bool variant_extended(Variant v) { return v == Variant::DExtremal || v == Variant::E7; }

template <class F>
bool guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

CaseReport run_candidate(Candidate c, const RunOptions& opt) {
  CaseReport r;
  r.candidate = std::move(c);
  const Candidate& cand = r.candidate;
  const RootSystem& sys = *cand.system;
  const auto& p = cand.parabolic;
  r.extended = variant_extended(cand.variant);
  StructureTable table(sys);
  auto add = [&](std::string name, bool ok, ordered_json detail = ordered_json::object()) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  guarded([&] { r.basis = check_basis_restriction(cand); return r.basis.ok; });
  add("basis_det", r.basis.ok, {{"determinant", rational_json(r.basis.determinant)}});

  guarded([&] { r.heisenberg = check_heisenberg(cand); return true; });
  {
    ordered_json d{{"size", r.heisenberg.size_ok},         {"pairing", r.heisenberg.pairing_ok},
                   {"contained", r.heisenberg.contained_ok}, {"disjoint", r.heisenberg.disjoint_ok},
                   {"partition", r.heisenberg.partition_ok}, {"issues", r.heisenberg.issues}};
    add("heisenberg_ok", r.heisenberg.ok(), d);
  }

  r.t_matches_list = guarded([&] { return check_T_against_paper(cand); });
  add("T_matches_list", r.t_matches_list);

  const bool orbits_ok = guarded([&] {
    r.orbits = orbit_structure(cand);
    return r.orbits.ok;
  });
  bool cls_ok = false;
  if (orbits_ok) cls_ok = guarded([&] {
      r.classification = classify_roots(cand, r.orbits, r.extended);
      return r.classification.ok();
    });
  {
    ordered_json counts = ordered_json::object();
    if (orbits_ok)
      for (const auto& tr : r.classification.traces) {
        const auto k = root_class_name(tr.classification);
        counts[k] = counts.value(k, 0) + 1;
      }
    add("classification_ok", cls_ok,
        {{"mode", r.extended ? "extended" : "standard"},
         {"theta_involution", orbits_ok},
         {"plus", r.classification.plus_ok},
         {"minus", r.classification.minus_ok},
         {"mixed", r.classification.mixed_ok},
         {"classes", counts}});
  }

  bool nd_ok = false;
  if (orbits_ok) nd_ok = guarded([&] {
      r.nondegeneracy = check_nondegeneracy(cand, r.orbits, table, opt.full_polynomial_limit);
      return r.nondegeneracy.ok;
    });
  add("nondegeneracy_det", nd_ok,
      {{"size", r.nondegeneracy.size}, {"determinant", rational_json(r.nondegeneracy.determinant)}});
  {
    const auto& nd = r.nondegeneracy;
    const bool ok = nd_ok && nd.graded_ok && (!nd.polynomial_computed || nd.monomial);
    ordered_json d{{"degree", nd.expected_degree},
                   {"sample_points", nd.sample_points},
                   {"polynomial_computed", nd.polynomial_computed}};
    if (nd.polynomial_computed) d["monomial"] = nd.monomial;
    add("graded_monomial", ok, d);
  }

  guarded([&] { r.regularity = check_regularity(cand, table); return true; });
  add("regularity_rank", r.regularity.ok,
      {{"dim_p", r.regularity.dim_p},
       {"rank", r.regularity.rank},
       {"T_size", r.regularity.t_size},
       {"complement", r.regularity.complement_ok},
       {"T_star", r.regularity.t_star_ok}});

  add("T_size_vs_index", static_cast<int>(cand.T.size()) == p.index,
      {{"T_size", cand.T.size()}, {"index", p.index}});

  guarded([&] {
    r.pair = solve_h(cand);
    r.eigenvalues = eigenvalue_report(r.pair, cand);
    return true;
  });
  add("h_solution", r.pair.ok);
  add("eigenvalues_closed_form", r.eigenvalues.ok,
      {{"computed", rationals(r.eigenvalues.computed)}, {"expected", rationals(r.eigenvalues.expected)}});

  bool bounds_ok = guarded([&] {
    r.lower = lower_bound(p);
    for (int g : cand.T) r.t_values.push_back(t_of_gamma(cand, g));
    r.improved = {};
    for (const auto& t : r.t_values) r.improved.entries.push_back(t.weight);
    bool ok = std::all_of(r.t_values.begin(), r.t_values.end(), [](const TOfGamma& t) { return t.ok; });
    for (const auto& e : r.lower.entries) ok = ok && e.on_ray;
    return ok;
  });
  const bool closed = bounds_ok && r.lower.multiples() == expected_lower_bound(cand.variant, cand.n, cand.model_s);
  add("bounds_closed_form", closed, {{"lower", rationals(r.lower.multiples())},
                                     {"expected", rationals(expected_lower_bound(cand.variant, cand.n, cand.model_s))}});
  const bool coincide = bounds_ok && r.lower.entries.size() == cand.T.size() &&
                        static_cast<int>(r.lower.entries.size()) == p.index &&
                        certify_coincidence(r.lower, r.improved);
  add("bounds_coincide", coincide, {{"improved", rationals(r.improved.multiples())}});
  return r;
}

CaseReport run_case(Family family, int n, int s, const RunOptions& opt) {
  return run_candidate(build_case(family, n, s), opt);
}

std::string root_label(const RootSystem& sys, const std::vector<int>& coeffs) {
  std::ostringstream os;
  if (sys.family() == Family::B || sys.family() == Family::D) {
    QVec q(coeffs.begin(), coeffs.end());
    const QVec e = sys.coords_of(q);
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (e[i] < 0) os << "-";
      else if (!first) os << "+";
      if (abs(e[i]) != 1) os << abs(e[i]);
      os << "e" << i + 1;
      first = false;
    }
    return os.str();
  }
  os << "(";
  for (std::size_t i = 0; i < coeffs.size(); ++i) os << (i ? "," : "") << coeffs[i];
  os << ")";
  return os.str();
}

std::string coroot_combination(const std::vector<Rational>& h) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] == 0) continue;
    if (h[k] < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    const Rational a = abs(h[k]);
    if (a != 1) os << a.get_str() << " ";
    os << "a" << k + 1 << "^v";
    first = false;
  }
  return first ? "0" : os.str();
}

ordered_json certificate_json(const CaseReport& r) {
  const Candidate& c = r.candidate;
  const RootSystem& sys = *c.system;
  ordered_json j;
  j["schema"] = 1;
  j["case"] = {{"family", family_name(c.family)},
               {"rank", c.n},
               {"s", c.s},
               {"variant", variant_name(c.variant)},
               {"mirrored", c.mirrored}};
  j["S"] = {{"plus", roots_json(sys, c.S_plus)},
            {"minus", roots_json(sys, c.S_minus)},
            {"mixed", roots_json(sys, c.S_mixed)}};
  std::vector<std::pair<std::vector<int>, ordered_json>> gs;
  for (const auto& g : c.gamma_sets) {
    if (g.centre < 0 || g.centre >= sys.num_roots()) continue;
    gs.emplace_back(sys.root(g.centre).coeffs,
                    ordered_json{{"centre", sys.root(g.centre).coeffs}, {"roots", roots_json(sys, g.roots)}});
  }
  std::sort(gs.begin(), gs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  j["gamma_sets"] = ordered_json::array();
  for (auto& [k, v] : gs) j["gamma_sets"].push_back(v);
  j["T"] = roots_json(sys, c.T);
  j["T_star"] = roots_json(sys, c.T_star);
  j["h"] = rationals(r.pair.h);
  j["eigenvalues"] = rationals(r.pair.eigenvalues);
  j["degrees"] = rationals(r.pair.degrees);
  j["lower_bound"] = rationals(r.lower.multiples());
  j["improved_bound"] = rationals(r.improved.multiples());
  j["checks"] = ordered_json::array();
  for (const auto& ch : r.checks) j["checks"].push_back({{"name", ch.name}, {"ok", ch.ok}, {"detail", ch.detail}});
  j["verdict"] = r.passed() ? "pass" : "fail";
  const auto* f = r.first_failure();
  j["first_failure"] = f ? ordered_json(f->name) : ordered_json(nullptr);
  return j;
}

namespace {

std::string rational_text(const ordered_json& q) { return rational_from_json(q).get_str(); }

std::string rational_list(const ordered_json& a) {
  std::string s;
  for (const auto& q : a) s += (s.empty() ? "" : ", ") + rational_text(q);
  return "{" + s + "}";
}

std::string bound_text(const ordered_json& a) {
  std::string s;
  for (const auto& q : a) s += (s.empty() ? "" : ", ") + rational_text(q) + "w";
  return "{" + s + "}";
}

}  // namespace

std::string render_report(const ordered_json& cert, bool md) {
  if (!cert.is_object() || cert.value("schema", 0) != 1) throw std::invalid_argument("not a schema 1 certificate");
  const auto& cs = cert.at("case");
  const Family fam = parse_family(cs.at("family").get<std::string>());
  const int n = cs.at("rank").get<int>(), s = cs.at("s").get<int>();
  const RootSystem sys(fam, n);
  auto label = [&](const ordered_json& coeffs) { return root_label(sys, coeffs.get<std::vector<int>>()); };
  auto labels = [&](const ordered_json& a) {
    std::string out;
    for (const auto& x : a) out += (out.empty() ? "" : ", ") + label(x);
    return out.empty() ? std::string("-") : out;
  };
  std::ostringstream os;
  const auto variant = cs.at("variant").get<std::string>();
  std::string title = sys.name() + ", s = " + std::to_string(s);
  if (variant == "D-extremal") title += " (" + variant + ")";
  if (md) os << "# " << title << "\n\n";
  else os << title << "\n" << std::string(title.size(), '=') << "\n\n";
  const bool pass = cert.at("verdict") == "pass";
  os << (md ? "**Verdict:** " : "Verdict: ") << (pass ? "pass" : "fail");
  if (!pass) os << " (first failing check: " << cert.at("first_failure").get<std::string>() << ")";
  os << "\n\n";

  os << (md ? "## S\n\n" : "S\n-\n");
  const std::pair<const char*, const char*> parts[] = {{"plus", "S^+"}, {"minus", "S^-"}, {"mixed", "S^m"}};
  for (const auto& [key, name] : parts)
    os << (md ? "- " : "  ") << name << ": " << labels(cert.at("S").at(key)) << "\n";
  os << "\n" << (md ? "## Heisenberg sets\n\n| centre | size | roots |\n|---|---|---|\n" : "Heisenberg sets\n---------------\n");
  for (const auto& g : cert.at("gamma_sets")) {
    if (md)
      os << "| " << label(g.at("centre")) << " | " << g.at("roots").size() << " | " << labels(g.at("roots")) << " |\n";
    else
      os << "  " << label(g.at("centre")) << " [" << g.at("roots").size() << "]: " << labels(g.at("roots")) << "\n";
  }
  os << "\n" << (md ? "## T\n\n" : "T\n-\n") << (md ? "" : "  ") << labels(cert.at("T")) << "\n";
  if (!cert.at("T_star").empty()) os << "\n" << "T*: " << labels(cert.at("T_star")) << "\n";

  std::vector<Rational> h;
  for (const auto& q : cert.at("h")) h.push_back(rational_from_json(q));
  os << "\n" << (md ? "## Adapted pair\n\n" : "Adapted pair\n------------\n");
  os << (md ? "- " : "  ") << "h = " << coroot_combination(h) << "\n";
  os << (md ? "- " : "  ") << "eigenvalues of ad h on g_T: " << rational_list(cert.at("eigenvalues")) << "\n";
  os << (md ? "- " : "  ") << "generator degrees: " << rational_list(cert.at("degrees")) << "\n";
  const std::string bounds = "Bounds (w = fundamental weight " + std::to_string(s) + ")";
  os << "\n" << (md ? "## " + bounds + "\n\n" : bounds + "\n" + std::string(bounds.size(), '-') + "\n");
  os << (md ? "- " : "  ") << "lower: " << bound_text(cert.at("lower_bound")) << "\n";
  os << (md ? "- " : "  ") << "improved: " << bound_text(cert.at("improved_bound")) << "\n";

  os << "\n" << (md ? "## Checks\n\n| check | result |\n|---|---|\n" : "Checks\n------\n");
  for (const auto& ch : cert.at("checks")) {
    const std::string res = ch.at("ok").get<bool>() ? "ok" : "FAIL";
    if (md) os << "| " << ch.at("name").get<std::string>() << " | " << res << " |\n";
    else os << "  " << ch.at("name").get<std::string>() << ": " << res << "\n";
  }
  return os.str();
}

}  // namespace artifact
