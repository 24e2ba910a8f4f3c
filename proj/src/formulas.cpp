#include "gpid/formulas.hpp"

#include <string>

#include "gpid/errors.hpp"
#include "gpid/graph.hpp"

namespace gpid {

namespace {

void require_admissible(int n, int k) {
  if (!admissible(n, k)) {
    throw InvalidParameters("P(" + std::to_string(n) + "," + std::to_string(k) +
                            ") needs n >= 3, k >= 1 and 2k < n");
  }
}

void require_small_k(int n, int k) {
  require_admissible(n, k);
  if (k > 2) throw InvalidParameters("only k = 1 and k = 2 are covered, got k=" + std::to_string(k));
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

FormulaResult exact(long long v, std::string source, Rational r) {
  FormulaResult out;
  out.kind = FormulaResult::Kind::exact;
  out.value = v;
  out.source = std::move(source);
  out.exact_rational = r;
  return out;
}

FormulaResult unknown(std::string source) {
  FormulaResult out;
  out.kind = FormulaResult::Kind::unknown;
  out.source = std::move(source);
  return out;
}

}  // namespace

std::string to_string(FormulaResult::Kind kind) {
  switch (kind) {
    case FormulaResult::Kind::exact: return "exact";
    case FormulaResult::Kind::bounds: return "bounds";
    case FormulaResult::Kind::external: return "external";
    case FormulaResult::Kind::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::equal: return "equal";
    case Relation::italian_one_less: return "italian_one_less";
    case Relation::unknown: return "unknown";
  }
  return "unknown";
}

FormulaResult italian_value(int n, int k) {
  require_admissible(n, k);
  const long long ceil45 = ceil_div(4LL * n, 5);
  if (k == 1) return exact(n, "gamma_I(P(n,1)) = n", Rational(n));
  if (k == 2) {
    const bool bump = n % 5 == 1 || n % 5 == 2;
    const long long v = ceil45 + (bump ? 1 : 0);
    return exact(v, bump ? "gamma_I(P(n,2)) = ceil(4n/5)+1, n = 1,2 (mod 5)"
                         : "gamma_I(P(n,2)) = ceil(4n/5)",
                 Rational(v));
  }
  if (k == 3) {
    FormulaResult out;
    out.kind = FormulaResult::Kind::external;
    out.source = "gamma_I(P(n,3)) determined in prior work (Gao et al.); not restated";
    return out;
  }
  if ((k % 5 == 2 || k % 5 == 3) && n % 5 == 0) {
    return exact(4LL * n / 5, "gamma_I(P(n,k)) = 4n/5, k = 2,3 (mod 5), n = 0 (mod 5)",
                 Rational(4LL * n, 5));
  }
  FormulaResult out;
  out.kind = FormulaResult::Kind::bounds;
  out.lo = ceil45;
  out.exact_rational = pnk_upper_bound_exact(n, k);
  out.hi = ceil_rational(*out.exact_rational);
  out.source = "ceil(4n/5) <= gamma_I(P(n,k)) <= 4(n-k)/5 (3k+2)/(3k+1) + (4k+6)/3";
  return out;
}

FormulaResult rainbow2_value(int n, int k) {
  require_admissible(n, k);
  if (k == 1) {
    if (n < 5) return unknown("gamma_r2(P(n,1)) = n is stated for n >= 5");
    return exact(n, "gamma_r2(P(n,1)) = n", Rational(n));
  }
  if (k == 2) {
    const int r = n % 10;
    const bool low = r == 0 || r == 3 || r == 4 || r == 9;
    const long long v = ceil_div(4LL * n, 5) + (low ? 0 : 1);
    return exact(v, low ? "gamma_r2(P(n,2)) = ceil(4n/5), n = 0,3,4,9 (mod 10)"
                        : "gamma_r2(P(n,2)) = ceil(4n/5)+1, n = 1,2,5,6,7,8 (mod 10)",
                 Rational(v));
  }
  return unknown("gamma_r2(P(n,k)) not covered for k >= 3");
}

FormulaResult domination_value(int n, int k) {
  require_admissible(n, k);
  if (k == 1) {
    if (n % 4 == 2) return exact(n / 2 + 1, "gamma(P(n,1)) = n/2+1, n = 2 (mod 4)", Rational(n / 2 + 1));
    return exact(ceil_div(n, 2), "gamma(P(n,1)) = ceil(n/2)", Rational(ceil_div(n, 2)));
  }
  if (k == 2) {
    return exact(ceil_div(3LL * n, 5), "gamma(P(n,2)) = ceil(3n/5)", Rational(3LL * n, 5));
  }
  return unknown("gamma(P(n,k)) not covered for k >= 3");
}

ItalianGraphVerdict italian_graph_predicate(int n, int k) {
  require_small_k(n, k);
  ItalianGraphVerdict v;
  v.gamma_i = italian_value(n, k).value;
  v.twice_gamma = 2 * domination_value(n, k).value;
  v.is_italian = v.gamma_i == v.twice_gamma;
  return v;
}

RelationReport relation_report(int n, int k) {
  require_small_k(n, k);
  RelationReport rep;
  const auto r2 = rainbow2_value(n, k);
  if (!r2.is_exact()) return rep;
  rep.gamma_i = italian_value(n, k).value;
  rep.gamma_r2 = r2.value;
  rep.relation = *rep.gamma_i == *rep.gamma_r2 ? Relation::equal : Relation::italian_one_less;
  return rep;
}

}  // namespace gpid
