#include "gpid/audit.hpp"

#include <algorithm>
#include <random>

#include <omp.h>

#include "gpid/enumerate.hpp"
#include "gpid/parallel.hpp"

namespace gpid {

namespace {

void require_k(const PetersenGraph& g, int k, const char* what) {
  if (g.k() != k) {
    throw WrongFamily(std::string(what) + " applies to P(n," + std::to_string(k) +
                      ") only, got k=" + std::to_string(g.k()));
  }
}

int mod(int i, int n) { return ((i % n) + n) % n; }

}  // namespace

// ---- column lemma -----------------------------------------------------------

ColumnLemmaReport check_column_lemma(const PetersenGraph& g, const Labeling& f) {
  require_k(g, 1, "column lemma");
  const int n = g.n();
  const auto w = column_weights(f);
  ColumnLemmaReport report;
  for (int i = 0; i < n; ++i) {
    if (w[i].weight != 0) continue;
    ++report.zero_columns;
    if (w[mod(i - 1, n)].weight + w[mod(i + 1, n)].weight < 4) {
      report.counterexamples.push_back(i);
    }
  }
  return report;
}

// ---- bagging ----------------------------------------------------------------

int BagCertificate::column_count() const {
  return 2 * m[0] + 3 * m[1] + 2 * m[2] + 2 * m[3] + m[4];
}

int BagCertificate::weighted_bound() const {
  return 2 * m[0] + 3 * m[1] + 3 * m[2] + 3 * m[3] + m[4];
}

bool BagCertificate::bags_disjoint() const {
  std::vector<int> seen(n, 0);
  for (const auto& bag : bags) {
    for (int c : bag) {
      if (++seen[c] > 1) return false;
    }
  }
  return true;
}

bool BagCertificate::consistent() const {
  return bags_disjoint() && column_count() == n && unbagged_zero_columns.empty() &&
         lemma_failures.empty() && weighted_bound() <= weight;
}

BagCertificate bagging_certificate(const PetersenGraph& g, const Labeling& f) {
  require_k(g, 1, "bagging certificate");
  const int n = g.n();
  std::vector<int> w(n);
  for (const auto& cw : column_weights(f)) w[cw.index] = cw.weight;
  auto W = [&](int i) { return w[mod(i, n)]; };

  BagCertificate cert;
  cert.n = n;
  cert.weight = f.weight();
  cert.marks.assign(n, 0);
  auto D = [&](int i) { return cert.marks[mod(i, n)]; };

  // Marks `cols` into bag `b` when the anchor column is still free. A step
  // whose anchor is free but another target is taken is recorded as a
  // conflict and skipped.
  auto apply = [&](int step, int b, int anchor, std::initializer_list<int> cols) {
    if (D(anchor)) return;
    for (int c : cols) {
      if (D(c)) {
        cert.conflicts.push_back({step, mod(anchor, n)});
        return;
      }
    }
    for (int c : cols) {
      cert.marks[mod(c, n)] = 1;
      cert.bags[b].push_back(mod(c, n));
    }
    ++cert.m[b];
  };

  for (int i = 0; i < n; ++i) {
    if (W(i) == 0 && W(i + 1) == 2) apply(1, 0, i, {i, i + 1});
  }
  for (int i = 0; i < n; ++i) {
    if (W(i) == 0 && W(i + 1) >= 3 && W(i + 2) == 0 && D(i + 2) == 0) {
      apply(2, 1, i, {i, i + 1, i + 2});
    }
  }
  for (int i = 0; i < n; ++i) {
    if (W(i) == 0 && W(i + 1) >= 3 && (W(i + 2) >= 1 || D(i + 2) == 1)) {
      apply(3, 2, i, {i, i + 1});
    }
  }
  for (int i = 0; i < n; ++i) {
    if (W(i) == 0 && W(i + 1) <= 1 && !D(i)) {
      if (W(i - 1) < 3) cert.lemma_failures.push_back(i);
      apply(4, 3, i, {i - 1, i});
    }
  }
  for (int i = 0; i < n; ++i) {
    if (cert.marks[i]) continue;
    if (w[i] == 0) {
      cert.unbagged_zero_columns.push_back(i);
    } else {
      cert.bags[4].push_back(i);
      ++cert.m[4];
    }
  }
  for (auto& bag : cert.bags) std::sort(bag.begin(), bag.end());
  return cert;
}

// ---- discharging ------------------------------------------------------------

bool DischargeLedger::identity_holds() const {
  return g_total_tenths == 10LL * weight && r_total_tenths == 10LL * weight - 8LL * n;
}

int DischargeLedger::min_g_tenths() const {
  return g_tenths.empty() ? 0 : *std::min_element(g_tenths.begin(), g_tenths.end());
}

DischargeLedger discharge(const PetersenGraph& g, const Labeling& f) {
  require_k(g, 2, "discharging");
  DischargeLedger led;
  led.n = g.n();
  led.weight = f.weight();
  const int size = g.vertex_count();
  led.g_tenths.resize(size);
  led.r_tenths.resize(size);
  static constexpr int base[3] = {0, 4, 5};
  for (Vertex v = 0; v < size; ++v) {
    int ones = 0, twos = 0;
    for (Vertex u : g.neighbors(v)) {
      ones += f[u] == 1;
      twos += f[u] == 2;
    }
    led.g_tenths[v] = base[f[v]] + 2 * ones + 5 * twos;
    led.r_tenths[v] = led.g_tenths[v] - 4;
    led.g_total_tenths += led.g_tenths[v];
    led.r_total_tenths += led.r_tenths[v];
  }
  return led;
}

bool FindingsReport::any_violation() const {
  return std::any_of(findings.begin(), findings.end(),
                     [](const FindingStatus& s) { return s.violated(); });
}

std::vector<int> FindingsReport::triggered() const {
  std::vector<int> out;
  for (const auto& s : findings) {
    if (s.hypothesis) out.push_back(s.id);
  }
  return out;
}

FindingsReport check_findings(const PetersenGraph& g, const Labeling& f) {
  require_k(g, 2, "findings");
  if (!validate_idf(g, f).valid) throw InvalidParameters("findings need a valid IDF");
  const auto led = discharge(g, f);
  const auto classes = edge_classes(g, f);
  FindingsReport rep;
  rep.r_total_tenths = led.r_total_tenths;

  bool zero_with_two_ones = false;
  bool zero_with_three_ones = false;
  bool zero_with_one_one_one_two = false;
  bool zero_with_two_ones_one_two = false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (f[v] != 0) continue;
    int ones = 0, twos = 0;
    for (Vertex u : g.neighbors(v)) {
      ones += f[u] == 1;
      twos += f[u] == 2;
    }
    zero_with_two_ones |= ones == 2;
    zero_with_three_ones |= ones == 3;
    zero_with_one_one_one_two |= ones == 1 && twos == 1;
    zero_with_two_ones_one_two |= ones == 2 && twos == 1;
  }
  const bool has_two = !f.level_set(2).empty();

  auto set = [&](int id, bool hyp, int threshold) {
    rep.findings[id - 1] = {id, hyp, !hyp || rep.r_total_tenths >= threshold, threshold};
  };
  rep.findings[0] = {1, true, led.min_g_tenths() >= 4, 4};
  set(2, zero_with_two_ones, 0);
  set(3, zero_with_three_ones, 2);
  set(4, has_two, 4);
  set(5, !classes.e11.empty(), 4);
  set(6, zero_with_one_one_one_two, 6);
  set(7, zero_with_two_ones_one_two, 8);
  set(8, !classes.e12.empty(), 10);
  return rep;
}

int threshold_check(int n) {
  const int ceil45 = (4 * n + 4) / 5;
  // (ceil(4n/5) - 4n/5) * 10 = 2 * (5 ceil(4n/5) - 4n)
  return 2 * (5 * ceil45 - 4 * n);
}

// ---- sweeps -----------------------------------------------------------------

namespace {

std::string matrix_of(int n, int k, const std::vector<std::uint8_t>& labels) {
  return render_matrix(Labeling(n, k, labels));
}

struct Partial {
  std::uint64_t labelings = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> examples;
  std::map<int, std::uint64_t> by_weight;
  std::vector<SweepRow> rows;
};

// Runs `check(labels, partial)` over every valid IDF in the window, split
// into prefix tasks; partial results are merged in task order.
template <typename Check>
SweepReport run_sweep(std::string name, int n, int k, const SweepOptions& opts, Check check) {
  const PetersenGraph g(n, k);
  const int max_w = opts.max_weight < 0 ? 2 * g.vertex_count() : opts.max_weight;
  constexpr int depth = 4;
  constexpr int tasks = 81;
  std::vector<Partial> parts(tasks);
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
  for (int t = 0; t < tasks; ++t) {
    std::vector<std::uint8_t> prefix(depth);
    int rest = t;
    for (int i = depth - 1; i >= 0; --i) {
      prefix[i] = static_cast<std::uint8_t>(rest % 3);
      rest /= 3;
    }
    Partial& part = parts[t];
    for_each_idf(g, max_w, prefix, [&](const std::vector<std::uint8_t>& labels) {
      int w = 0;
      for (auto l : labels) w += l;
      if (w < opts.min_weight) return;
      ++part.labelings;
      ++part.by_weight[w];
      SweepRow row;
      row.n = n;
      row.weight = w;
      const bool bad = check(labels, row);
      if (bad) {
        ++part.violations;
        if (part.examples.size() < opts.max_examples) part.examples.push_back(matrix_of(n, k, labels));
      }
      if (opts.collect_rows) part.rows.push_back(std::move(row));
    });
  }
  SweepReport rep;
  rep.audit = std::move(name);
  rep.n = n;
  rep.k = k;
  rep.min_weight = opts.min_weight;
  rep.max_weight = max_w;
  for (auto& p : parts) {
    rep.labelings += p.labelings;
    rep.violations += p.violations;
    for (auto& e : p.examples) {
      if (rep.examples.size() < opts.max_examples) rep.examples.push_back(std::move(e));
    }
    for (const auto& [w, c] : p.by_weight) rep.by_weight[w] += c;
    for (auto& r : p.rows) rep.rows.push_back(std::move(r));
  }
  return rep;
}

}  // namespace

SweepReport sweep_discharge(int n, const SweepOptions& opts) {
  const PetersenGraph g(n, 2);
  return run_sweep("discharge", n, 2, opts, [&](const auto& labels, SweepRow& row) {
    const Labeling f(n, 2, labels);
    const auto led = discharge(g, f);
    row.r_tenths = led.r_total_tenths;
    return !led.identity_holds() || led.min_g_tenths() < 4;
  });
}

SweepReport sweep_findings(int n, const SweepOptions& opts) {
  const PetersenGraph g(n, 2);
  return run_sweep("findings", n, 2, opts, [&](const auto& labels, SweepRow& row) {
    const Labeling f(n, 2, labels);
    const auto rep = check_findings(g, f);
    row.r_tenths = rep.r_total_tenths;
    row.findings = rep.triggered();
    return rep.any_violation();
  });
}

SweepReport sweep_bagging(int n, const SweepOptions& opts) {
  const PetersenGraph g(n, 1);
  return run_sweep("bagging", n, 1, opts, [&](const auto& labels, SweepRow& row) {
    const Labeling f(n, 1, labels);
    const auto cert = bagging_certificate(g, f);
    row.r_tenths = 0;
    return !cert.consistent() || cert.implied_bound() != n;
  });
}

SweepReport sweep_column_lemma(int n, const SweepOptions& opts) {
  const PetersenGraph g(n, 1);
  return run_sweep("column-lemma", n, 1, opts, [&](const auto& labels, SweepRow&) {
    return !check_column_lemma(g, Labeling(n, 1, labels)).holds();
  });
}

SweepReport sweep_discharge_random(int n, int samples, std::uint64_t seed) {
  const PetersenGraph g(n, 2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> label(0, 2);
  SweepReport rep;
  rep.audit = "discharge-random";
  rep.n = n;
  rep.k = 2;
  rep.max_weight = 4 * n;
  for (int s = 0; s < samples; ++s) {
    std::vector<std::uint8_t> labels(2 * n);
    for (auto& l : labels) l = static_cast<std::uint8_t>(label(rng));
    const Labeling f(n, 2, labels);
    const auto led = discharge(g, f);
    ++rep.labelings;
    ++rep.by_weight[led.weight];
    if (!led.identity_holds()) {
      ++rep.violations;
      if (rep.examples.size() < 5) rep.examples.push_back(render_matrix(f));
    }
  }
  return rep;
}

}  // namespace gpid
