#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "gpid/audit.hpp"
#include "gpid/constructions.hpp"
#include "gpid/formulas.hpp"
#include "gpid/solver.hpp"

namespace gpid {

using Json = nlohmann::ordered_json;

Json to_json(const Labeling& f);
Json to_json(const RainbowLabeling& f);
/// Accepts {"n","k","values"}; values may be digits or rainbow strings.
Labeling labeling_from_json(const Json& j);
RainbowLabeling rainbow_from_json(const Json& j);

Json graph_descriptor(const PetersenGraph& g);
Json to_json(const ValidationReport& r);
Json to_json(const ConstructionResult& c);
Json witness_json(Invariant kind, int n, int k, const Witness& w);
Json to_json(const SolveResult& r);
Json to_json(const BoundsOnly& b, Invariant kind, int n, int k);
Json to_json(const FormulaResult& f);
Json to_json(const BagCertificate& c);
Json to_json(const DischargeLedger& d);
Json to_json(const FindingsReport& f);
Json to_json(const SweepReport& s);

std::string rational_string(const Rational& r);
/// Value in tenths rendered as a decimal, e.g. 14 -> "1.4", -48 -> "-4.8".
std::string tenths_string(long long tenths);

/// Header plus one row per labeling: n,weight,r_tenths,findings.
void write_sweep_csv(std::ostream& os, const SweepReport& s, bool header = true);

}  // namespace gpid
