#include "gpid/io.hpp"

#include <cstdlib>
#include <sstream>

namespace gpid {

namespace {

int field_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw FormatError(std::string("labeling JSON needs an integer \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

const Json& field_values(const Json& j) {
  if (!j.contains("values") || !j.at("values").is_array()) {
    throw FormatError("labeling JSON needs a \"values\" array");
  }
  return j.at("values");
}

}  // namespace

Json to_json(const Labeling& f) {
  Json values = Json::array();
  for (auto v : f.values()) values.push_back(static_cast<int>(v));
  return Json{{"n", f.n()}, {"k", f.k()}, {"values", std::move(values)}};
}

Json to_json(const RainbowLabeling& f) {
  Json values = Json::array();
  for (auto m : f.masks()) values.push_back(rainbow_label_string(m));
  return Json{{"n", f.n()}, {"k", f.k()}, {"values", std::move(values)}};
}

Labeling labeling_from_json(const Json& j) {
  const int n = field_int(j, "n");
  const int k = field_int(j, "k");
  std::vector<std::uint8_t> values;
  for (const auto& v : field_values(j)) {
    if (!v.is_number_integer() || v.get<int>() < 0 || v.get<int>() > 2) {
      throw FormatError("labeling values must be integers 0..2");
    }
    values.push_back(static_cast<std::uint8_t>(v.get<int>()));
  }
  try {
    return Labeling(n, k, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

RainbowLabeling rainbow_from_json(const Json& j) {
  const int n = field_int(j, "n");
  const int k = field_int(j, "k");
  std::vector<std::uint8_t> masks;
  for (const auto& v : field_values(j)) {
    if (!v.is_string()) throw FormatError("rainbow values must be strings \"0\", \"1\", \"2\", \"12\"");
    masks.push_back(parse_rainbow_label(v.get<std::string>()));
  }
  try {
    return RainbowLabeling(n, k, std::move(masks));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Json graph_descriptor(const PetersenGraph& g) {
  return Json{{"n", g.n()}, {"k", g.k()}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
}

Json to_json(const ValidationReport& r) {
  Json out = Json::array();
  for (const auto& v : r.violations) out.push_back(Json{{"vertex", v.vertex}, {"neighborhood", v.neighborhood}});
  return out;
}

Json to_json(const ConstructionResult& c) {
  Json violations = Json::array();
  for (const auto& v : c.violations) violations.push_back(Json{{"vertex", v.vertex}, {"neighborhood", v.neighborhood}});
  return Json{{"n", c.labeling.n()},
              {"k", c.labeling.k()},
              {"case", c.case_name},
              {"claimed_weight", rational_string(c.claimed_weight)},
              {"actual_weight", c.actual_weight},
              {"valid", c.valid},
              {"violations", std::move(violations)},
              {"labeling", to_json(c.labeling)}};
}

Json witness_json(Invariant kind, int n, int k, const Witness& w) {
  const PetersenGraph g(n, k);
  switch (kind) {
    case Invariant::italian: return to_json(witness_as_labeling(g, w));
    case Invariant::rainbow2: return to_json(witness_as_rainbow(g, w));
    case Invariant::domination: {
      Json values = Json::array();
      for (auto v : w) values.push_back(static_cast<int>(v));
      return Json{{"n", n}, {"k", k}, {"values", std::move(values)}, {"set", witness_as_set(w)}};
    }
  }
  return {};
}

Json to_json(const SolveResult& r) {
  return Json{{"invariant", to_string(r.kind)},
              {"n", r.n},
              {"k", r.k},
              {"optimum", r.optimum},
              {"method", to_string(r.method)},
              {"explored", r.explored},
              {"witness", witness_json(r.kind, r.n, r.k, r.witness)}};
}

Json to_json(const BoundsOnly& b, Invariant kind, int n, int k) {
  return Json{{"invariant", to_string(kind)},
              {"n", n},
              {"k", k},
              {"lo", b.lo},
              {"hi", b.hi},
              {"explored", b.explored},
              {"incumbent", witness_json(kind, n, k, b.incumbent)}};
}

Json to_json(const FormulaResult& f) {
  Json out{{"kind", to_string(f.kind)}};
  if (f.kind == FormulaResult::Kind::exact) {
    out["value"] = f.value;
  } else if (f.kind == FormulaResult::Kind::bounds) {
    out["lo"] = f.lo;
    out["hi"] = f.hi;
  }
  out["theorem"] = f.source;
  out["exact_rational"] = f.exact_rational ? Json(rational_string(*f.exact_rational)) : Json();
  return out;
}

Json to_json(const BagCertificate& c) {
  Json bags = Json::array();
  for (const auto& b : c.bags) bags.push_back(b);
  Json conflicts = Json::array();
  for (const auto& x : c.conflicts) conflicts.push_back(Json{{"step", x.step}, {"column", x.column}});
  Json marks = Json::array();
  for (auto m : c.marks) marks.push_back(static_cast<int>(m));
  return Json{{"n", c.n},
              {"weight", c.weight},
              {"m", c.m},
              {"bags", std::move(bags)},
              {"marks", std::move(marks)},
              {"column_count", c.column_count()},
              {"weighted_bound", c.weighted_bound()},
              {"implied_bound", c.implied_bound()},
              {"conflicts", std::move(conflicts)},
              {"unbagged_zero_columns", c.unbagged_zero_columns},
              {"lemma_failures", c.lemma_failures},
              {"consistent", c.consistent()}};
}

Json to_json(const DischargeLedger& d) {
  return Json{{"n", d.n},
              {"weight", d.weight},
              {"g_tenths", d.g_tenths},
              {"r_tenths", d.r_tenths},
              {"g_total", tenths_string(d.g_total_tenths)},
              {"r_total", tenths_string(d.r_total_tenths)},
              {"identity_holds", d.identity_holds()},
              {"min_g", tenths_string(d.min_g_tenths())}};
}

Json to_json(const FindingsReport& f) {
  Json rows = Json::array();
  for (const auto& s : f.findings) {
    rows.push_back(Json{{"finding", s.id},
                        {"hypothesis", s.hypothesis},
                        {"conclusion", s.conclusion},
                        {"threshold", tenths_string(s.threshold_tenths)},
                        {"violated", s.violated()}});
  }
  return Json{{"r_total", tenths_string(f.r_total_tenths)}, {"findings", std::move(rows)}};
}

Json to_json(const SweepReport& s) {
  Json by_weight = Json::object();
  for (const auto& [w, c] : s.by_weight) by_weight[std::to_string(w)] = c;
  return Json{{"audit", s.audit},
              {"n", s.n},
              {"k", s.k},
              {"min_weight", s.min_weight},
              {"max_weight", s.max_weight},
              {"labelings", s.labelings},
              {"violations", s.violations},
              {"by_weight", std::move(by_weight)},
              {"examples", s.examples}};
}

std::string rational_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string tenths_string(long long tenths) {
  const long long mag = std::llabs(tenths);
  return (tenths < 0 ? "-" : "") + std::to_string(mag / 10) + "." + std::to_string(mag % 10);
}

void write_sweep_csv(std::ostream& os, const SweepReport& s, bool header) {
  if (header) os << "n,weight,r_tenths,findings\n";
  for (const auto& row : s.rows) {
    os << row.n << ',' << row.weight << ',' << row.r_tenths << ',';
    for (std::size_t i = 0; i < row.findings.size(); ++i) os << (i ? ";" : "") << row.findings[i];
    os << '\n';
  }
}

}  // namespace gpid
