#include "gpid/constructions.hpp"

#include <string>

namespace gpid {

namespace {

PatternBlock rows(std::string_view top, std::string_view bottom) {
  return PatternBlock::from_rows(top, bottom);
}

Labeling tile(int n, int k, const PatternBlock& block, int prefix_columns,
              const PatternBlock* tail) {
  std::vector<std::uint8_t> values(2 * n);
  for (int i = 0; i < prefix_columns; ++i) {
    const auto& [top, bottom] = block.columns[i % block.length()];
    values[2 * i] = top;
    values[2 * i + 1] = bottom;
  }
  if (tail != nullptr) {
    for (int j = 0; j < tail->length(); ++j) {
      const int i = prefix_columns + j;
      values[2 * i] = tail->columns[j].first;
      values[2 * i + 1] = tail->columns[j].second;
    }
  }
  return Labeling(n, k, std::move(values));
}

ConstructionResult finish(Labeling f, std::string case_name, Rational claimed, bool periodic) {
  const PetersenGraph g(f.n(), f.k());
  auto report = validate_idf(g, f);
  ConstructionResult r{std::move(f), std::move(case_name), claimed, 0, report.valid,
                       std::move(report.violations), periodic};
  r.actual_weight = r.labeling.weight();
  return r;
}

}  // namespace

PatternBlock PatternBlock::from_rows(std::string_view top, std::string_view bottom) {
  if (top.size() != bottom.size() || top.empty()) {
    throw InvalidParameters("pattern rows must be non-empty and of equal length");
  }
  PatternBlock b;
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (top[i] < '0' || top[i] > '2' || bottom[i] < '0' || bottom[i] > '2') {
      throw InvalidParameters("pattern digits must be 0, 1 or 2");
    }
    b.columns.emplace_back(top[i] - '0', bottom[i] - '0');
  }
  return b;
}

int PatternBlock::weight() const {
  int w = 0;
  for (const auto& [t, b] : columns) w += t + b;
  return w;
}

PatternBlock PatternBlock::repeated(int times) const {
  PatternBlock out;
  for (int r = 0; r < times; ++r) out.append(*this);
  return out;
}

PatternBlock& PatternBlock::append(const PatternBlock& other) {
  columns.insert(columns.end(), other.columns.begin(), other.columns.end());
  return *this;
}

long long ceil_rational(const Rational& r) {
  const long long q = r.numerator() / r.denominator();
  return (r.numerator() % r.denominator() > 0) ? q + 1 : q;
}

ConstructionResult construct_pn1(int n) {
  if (n < 3) throw InvalidParameters("construct_pn1 needs n >= 3");
  const auto block = rows("10", "01");
  return finish(tile(n, 1, block, n, nullptr), n % 2 == 0 ? "n even" : "n odd", Rational(n),
                true);
}

std::optional<ConstructionResult> construct_pn2(int n) {
  if (n < 5) throw InvalidParameters("construct_pn2 needs n >= 5");
  const auto block = rows("01001", "00110");
  if (n % 5 == 0) {
    return finish(tile(n, 2, block, n, nullptr), "n%5=0", Rational(4 * n, 5), true);
  }
  if (n % 10 == 8) {
    const auto tail = rows("001", "110");
    return finish(tile(n, 2, block, n - 3, &tail), "n%10=8", Rational((n - 3) / 5 * 4 + 3),
                  false);
  }
  return std::nullopt;
}

PatternBlock tail_h(int k) {
  if (k < 4) throw InvalidParameters("tail_h needs k >= 4");
  PatternBlock out;
  for (int i = 0; i < k; ++i) {
    auto label = [](int offset) -> std::uint8_t {
      const int r = offset % 6;
      return (r == 0 || r == 1 || r == 3 || r == 5) ? 1 : 0;
    };
    out.columns.emplace_back(label(2 * i), label(2 * i + 1));
  }
  return out;
}

PatternBlock pnk_block(int k) {
  if (k < 4) throw InvalidParameters("pnk_block needs k >= 4");
  const auto a = rows("10100", "00011");
  const auto b = rows("01010", "10001");
  const auto c = rows("10010", "01100");
  switch (k % 5) {
    case 0: {
      PatternBlock g = a.repeated(k / 5);
      g.append(rows("1", "0"))
          .append(b.repeated(k / 5))
          .append(c.repeated(k / 5))
          .append(a.repeated(k / 5))
          .append(rows("1", "1"))
          .append(b.repeated((k - 5) / 5))
          .append(rows("010", "100"));
      return g;
    }
    case 1: {
      const auto d = rows("00101", "11000");
      PatternBlock g = a.repeated((k - 1) / 5);
      g.append(rows("1", "0"))
          .append(d.repeated((k - 1) / 5))
          .append(rows("001", "110"))
          .append(d.repeated((k - 1) / 5));
      return g;
    }
    case 2:
    case 3:
      return a;
    default: {
      const auto e = rows("01001", "00110");
      const int m = (k - 4) / 5;
      PatternBlock g = a.repeated((k + 1) / 5);
      g.append(rows("1", "1"))
          .append(b.repeated(m))
          .append(rows("0101", "1000"))
          .append(e.repeated(m))
          .append(rows("010", "001"))
          .append(c.repeated(m))
          .append(rows("1001", "0110"))
          .append(b.repeated(m))
          .append(rows("010", "100"));
      return g;
    }
  }
}

Rational pnk_upper_bound_exact(int n, int k) {
  return Rational(4LL * (n - k), 5) * Rational(3LL * k + 2, 3LL * k + 1) +
         Rational(4LL * k + 6, 3);
}

long long pnk_upper_bound(int n, int k) { return ceil_rational(pnk_upper_bound_exact(n, k)); }

ConstructionResult construct_pnk(int n, int k) {
  if (k < 4 || !admissible(n, k)) {
    throw InvalidParameters("construct_pnk needs k >= 4 and 2k < n");
  }
  const PatternBlock g = pnk_block(k);
  const int period = g.length();
  const int residue = k % 5;
  // Ratio of the block's density to 4/5.
  Rational ratio(1);
  if (residue == 0 || residue == 4) {
    ratio = Rational(4LL * k + 1, 4LL * k);
  } else if (residue == 1) {
    ratio = Rational(3LL * k + 2, 3LL * k + 1);
  }
  const std::string prefix = "k%5=" + std::to_string(residue);
  if (n % period == 0) {
    return finish(tile(n, k, g, n, nullptr), prefix + " periodic", Rational(4LL * n, 5) * ratio,
                  true);
  }
  const PatternBlock h = tail_h(k);
  const Rational claimed = Rational(4LL * (n - k), 5) * ratio + Rational(4LL * k + 6, 3);
  return finish(tile(n, k, g, n - k, &h), prefix + " with tail", claimed, false);
}

}  // namespace gpid
