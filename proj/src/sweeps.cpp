#include "cei/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "cei/error.hpp"
#include "cei/graph_ideals.hpp"
#include "cei/resolutions.hpp"
#include "cei/structure.hpp"

namespace cei {

SweepCounts SweepReport::totals() const {
  SweepCounts t;
  for (const auto& [n, c] : per_n) {
    t.enumerated += c.enumerated;
    t.checked += c.checked;
    t.mismatches += c.mismatches;
    t.guarded += c.guarded;
  }
  return t;
}

std::string SweepReport::summary() const {
  std::ostringstream os;
  for (const auto& [n, c] : per_n) {
    os << suite << " n=" << n << ": " << c.enumerated << " graphs scanned, " << c.checked
       << " checked, " << c.mismatches << " mismatches";
    if (c.guarded != 0) os << ", " << c.guarded << " stopped by resource guards";
    os << "\n";
  }
  const SweepCounts t = totals();
  os << suite << " total (n=" << n_min << ".." << n_max;
  if (kmax > 0) os << ", k<=" << kmax;
  os << ", field " << field << "): " << t.enumerated << " graphs scanned, " << t.checked
     << " checked, " << t.mismatches << " mismatches";
  if (t.guarded != 0) os << ", " << t.guarded << " stopped by resource guards";
  os << "\n";
  for (const auto& c : counterexamples) {
    os << "  counterexample n=" << c.n << " bitmask=" << c.bitmask;
    if (c.k > 0) os << " k=" << c.k;
    os << " field=" << c.field << ": " << c.message << "\n";
  }
  return os.str();
}

std::string SweepReport::csv() const {
  std::ostringstream os;
  os << "n,bitmask,pass";
  for (const auto& c : columns) os << "," << c;
  os << "\n";
  for (const auto& r : rows) {
    os << r.n << "," << r.bitmask << "," << (r.guarded ? "guard" : r.pass ? "1" : "0");
    for (const auto& v : r.values) os << "," << v;
    os << "\n";
  }
  return os.str();
}

namespace {

struct Context {
  int kmax;
  FieldSpec field;
};

struct Outcome {
  bool pass = true;
  std::vector<std::string> values;
  std::vector<std::pair<int, std::string>> failures;  // (k, message)

  void fail(int k, std::string message) {
    pass = false;
    failures.emplace_back(k, std::move(message));
  }
};

using Evaluator = std::function<Outcome(const Graph&, const Context&)>;

struct SuiteDef {
  SuiteInfo info;
  std::vector<std::string> columns;
  bool no_isolated;
  std::size_t min_edges;
  Evaluator evaluate;
};

std::string yes_no(bool b) { return b ? "1" : "0"; }

std::string join(const std::vector<int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? ";" : "") << xs[i];
  return os.str();
}

std::string primes_text(const std::vector<PrimeSupport>& ps) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? " " : "") << to_string(ps[i]);
  return os.str();
}

Outcome check_decomposition(const Graph& g, const Context&) {
  Outcome out;
  const MonomialIdeal ic = comp_edge_ideal(g);
  std::vector<PrimeSupport> closed;
  try {
    closed = primary_decomposition_ic(g).components();
  } catch (const std::logic_error& e) {
    out.fail(0, std::string("closed form rejected: ") + e.what());
    out.values = {"-"};
    return out;
  }
  out.values = {std::to_string(closed.size())};
  if (ic.is_unit()) {
    if (!closed.empty()) out.fail(0, "unit ideal but closed form lists " + primes_text(closed));
    return out;
  }
  const auto oracle = squarefree_minimal_primes(ic);
  if (oracle != closed) {
    out.fail(0, "closed form {" + primes_text(closed) + "} vs minimal primes {" + primes_text(oracle) + "}");
  }
  return out;
}

Outcome check_cover_duality(const Graph& g, const Context&) {
  Outcome out;
  const MonomialIdeal dual = alexander_dual(comp_edge_ideal(g));
  const MonomialIdeal closed = sum(edge_ideal(complement(g)), clique_ideal(g, 3));
  const MonomialIdeal direct = comp_cover_ideal_by_intersection(g);
  out.values = {std::to_string(dual.size())};
  if (!(dual == closed)) out.fail(0, "dual " + to_string(dual) + " vs I(G^c)+K_3(G) " + to_string(closed));
  if (!(dual == direct)) out.fail(0, "dual " + to_string(dual) + " vs intersection " + to_string(direct));
  return out;
}

constexpr std::uint64_t kAbsenceSearchBudget = 200000;

Outcome check_chordal_sequential(const Graph& g, const Context& ctx) {
  Outcome out;
  const bool chordal = is_chordal(g);
  const MonomialIdeal jc = comp_cover_ideal(g);
  const bool cwl = is_componentwise_linear(jc, ctx.field);
  std::string lq;
  if (chordal) {
    const ChordalOrder order = chordal_lq_order(g);
    lq = order.verified ? "verified" : "rejected";
    if (!order.verified) out.fail(0, "constructed order rejected by the verifier");
  } else {
    const auto search = search_linear_quotients_order(jc, kAbsenceSearchBudget);
    switch (search.outcome) {
      case SearchOutcome::Found:
        lq = "found";
        out.fail(0, "non-chordal graph but J_c(G) has linear quotients");
        break;
      case SearchOutcome::Absent:
        lq = "absent";
        break;
      case SearchOutcome::BudgetExhausted:
        lq = "undecided";
        break;
    }
  }
  if (cwl != chordal) {
    out.fail(0, std::string("chordal=") + yes_no(chordal) + " but componentwise linear=" + yes_no(cwl));
  }
  out.values = {yes_no(chordal), yes_no(cwl), lq};
  return out;
}

Outcome check_cohen_macaulay(const Graph& g, const Context& ctx) {
  Outcome out;
  const bool graph_side = is_complete(g) || is_forest(g);
  const MonomialIdeal ic = comp_edge_ideal(g);
  const int dim = dim_ic(g);
  if (ic.is_unit()) {
    out.values = {"unit", std::to_string(dim), yes_no(graph_side)};
    if (!graph_side) out.fail(0, "unit ideal from a graph that is neither complete nor a forest");
    return out;
  }
  const auto primes = squarefree_minimal_primes(ic);
  int min_height = g.order();
  for (const auto& p : primes) min_height = std::min(min_height, p.height());
  if (g.order() - min_height != dim) {
    out.fail(0, "dimension formula " + std::to_string(dim) + " vs n - min height " +
                    std::to_string(g.order() - min_height));
  }
  const int depth = betti_table(ic, ctx.field).depth_quotient();
  const bool cm = depth == dim;
  out.values = {std::to_string(depth), std::to_string(dim), yes_no(graph_side)};
  if (cm != graph_side) {
    out.fail(0, "depth " + std::to_string(depth) + ", dim " + std::to_string(dim) +
                    ", complete-or-forest=" + yes_no(graph_side));
  }
  return out;
}

Outcome check_gorenstein(const Graph& g, const Context& ctx) {
  Outcome out;
  const bool listed = is_gorenstein_graph(g);
  const bool nearly = is_nearly_gorenstein_graph(g);
  const MonomialIdeal ic = comp_edge_ideal(g);
  bool cm = true;
  bool gorenstein = true;  // S/(1) by convention
  std::string type = "unit";
  if (!ic.is_unit()) {
    const BettiTable t = betti_table(ic, ctx.field);
    cm = t.depth_quotient() == dim_ic(g);
    const std::uint64_t last = t.total(t.proj_dim());
    gorenstein = cm && last == 1;
    type = std::to_string(last);
  }
  out.values = {yes_no(cm), type, yes_no(gorenstein), yes_no(listed), yes_no(nearly)};
  if (gorenstein != listed) {
    out.fail(0, std::string("Gorenstein oracle=") + yes_no(gorenstein) + " but list membership=" + yes_no(listed));
  }
  if (gorenstein && !nearly) out.fail(0, "Gorenstein but missing from the nearly Gorenstein list");
  if (nearly && !cm) out.fail(0, "nearly Gorenstein list member that is not Cohen-Macaulay");
  return out;
}

Outcome check_matroidal(const Graph& g, const Context&) {
  Outcome out;
  const bool edge = is_matroidal(edge_ideal(g));
  const bool ic = is_matroidal(comp_edge_ideal(g));
  const bool multipartite = is_complete_multipartite(g);
  out.values = {yes_no(edge), yes_no(ic), yes_no(multipartite)};
  if (edge != ic || ic != multipartite) {
    out.fail(0, std::string("I(G) matroidal=") + yes_no(edge) + ", I_c(G) matroidal=" + yes_no(ic) +
                    ", complete multipartite=" + yes_no(multipartite));
  }
  return out;
}

Outcome check_power_regularity(const Graph& g, const Context& ctx) {
  Outcome out;
  const int c = non_isolated_component_count(g);
  const MonomialIdeal ic = comp_edge_ideal(g);
  std::vector<int> regs, forecasts, depths;
  for (int k = 1; k <= ctx.kmax; ++k) {
    const RegularityForecast f = reg_power_forecast(g, k);
    forecasts.push_back(f.predicted_reg);
    if (ic.is_unit()) continue;
    const BettiTable t = betti_table(power(ic, k), ctx.field);
    regs.push_back(t.regularity());
    depths.push_back(t.depth_quotient());
    if (t.regularity() != f.predicted_reg) {
      out.fail(k, "reg " + std::to_string(t.regularity()) + " vs forecast " + std::to_string(f.predicted_reg));
    }
    if (depths.size() >= 2 && depths.back() > depths[depths.size() - 2]) {
      out.fail(k, "depth increased from " + std::to_string(depths[depths.size() - 2]) + " to " +
                      std::to_string(depths.back()));
    }
  }
  out.values = {std::to_string(c), ic.is_unit() ? "unit" : join(regs), join(forecasts),
                ic.is_unit() ? "unit" : join(depths)};
  return out;
}

constexpr std::uint64_t kPowerSearchBudget = 1000000;

Outcome check_linear_powers(const Graph& g, const Context& ctx) {
  Outcome out;
  const int c = non_isolated_component_count(g);
  const MonomialIdeal ic = comp_edge_ideal(g);
  if (ic.is_unit()) {
    out.values = {std::to_string(c), "unit", "-"};
    return out;
  }
  bool any_linear = false;
  std::vector<int> linear;
  for (int k = 1; k <= ctx.kmax; ++k) {
    const bool lin = has_linear_resolution(power(ic, k), ctx.field);
    linear.push_back(lin ? 1 : 0);
    any_linear = any_linear || lin;
  }
  std::string lq = "-";
  if (c == 1) {
    std::vector<int> found;
    for (int k = 1; k <= std::min(ctx.kmax, 2); ++k) {
      const MonomialIdeal p = power(ic, k);
      const auto search = search_linear_quotients_order(p, kPowerSearchBudget);
      const bool ok = search.outcome == SearchOutcome::Found && verify_linear_quotients_order(p, search.order);
      found.push_back(ok ? 1 : 0);
      if (!ok) out.fail(k, "no verified linear-quotients order for I_c(G)^k with c(G)=1");
    }
    lq = join(found);
  }
  if (any_linear != (c == 1)) {
    out.fail(0, "c(G)=" + std::to_string(c) + " but linear resolution for some k=" + yes_no(any_linear));
  }
  out.values = {std::to_string(c), join(linear), lq};
  return out;
}

Outcome check_cover_regularity(const Graph& g, const Context& ctx) {
  Outcome out;
  const MonomialIdeal jc = comp_cover_ideal(g);
  std::vector<int> ordinary, symbolic, forecasts;
  for (int k = 1; k <= ctx.kmax; ++k) {
    const int f = reg_jc_power_forecast(g, k, false);
    const int r = betti_table(power(jc, k), ctx.field).regularity();
    const int s = betti_table(symbolic_power(jc, k), ctx.field).regularity();
    forecasts.push_back(f);
    ordinary.push_back(r);
    symbolic.push_back(s);
    if (r != f) out.fail(k, "reg J_c(G)^k " + std::to_string(r) + " vs forecast " + std::to_string(f));
    if (s != f) out.fail(k, "reg J_c(G)^(k) " + std::to_string(s) + " vs forecast " + std::to_string(f));
  }
  const int gi = girth(g);
  out.values = {gi == kInfiniteGirth ? "inf" : std::to_string(gi), join(ordinary), join(symbolic),
                join(forecasts)};
  return out;
}

Outcome check_field_independence(const Graph& g, const Context& ctx) {
  Outcome out;
  const MonomialIdeal ic = comp_edge_ideal(g);
  if (ic.is_unit()) {
    out.values = {"unit"};
    return out;
  }
  const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};
  std::vector<int> totals;
  for (int k = 1; k <= ctx.kmax; ++k) {
    const MonomialIdeal p = power(ic, k);
    const BettiTable q = betti_table(p, fields[0]);
    std::uint64_t sum = 0;
    for (const auto& [key, count] : q.entries()) sum += count;
    totals.push_back(static_cast<int>(sum));
    for (std::size_t f = 1; f < 3; ++f) {
      if (!(betti_table(p, fields[f]) == q)) {
        out.fail(k, "Betti table over " + fields[f].to_string() + " differs from the one over Q");
      }
    }
  }
  out.values = {join(totals)};
  return out;
}

const std::vector<SuiteDef>& definitions() {
  static const std::vector<SuiteDef> defs = {
      {{"decomposition", {"thm2.1"}, "closed-form minimal primes of I_c(G) vs the minimal-prime oracle", 2, 6, 0},
       {"primes"}, true, 1, check_decomposition},
      {{"cover-duality", {"cor2.2"}, "Alexander dual of I_c(G) equals I(G^c) + K_3(G)", 3, 6, 0},
       {"generators"}, true, 1, check_cover_duality},
      {{"chordal-sequential", {"thm2.5"},
        "chordal iff J_c(G) componentwise linear; constructed linear-quotients order verified", 3, 6, 0},
       {"chordal", "componentwise_linear", "linear_quotients"}, true, 1, check_chordal_sequential},
      {{"cohen-macaulay", {"thm2.8"}, "depth S/I_c(G) = dim iff G is complete or a forest", 2, 6, 0},
       {"depth", "dim", "complete_or_forest"}, true, 1, check_cohen_macaulay},
      {{"gorenstein", {"thm2.12", "cor2.11"},
        "Gorenstein oracle matches {K2,K3,2K2,P3}; nearly Gorenstein list contains it", 2, 5, 0},
       {"cm", "type", "gorenstein", "gorenstein_list", "nearly_gorenstein_list"}, true, 1, check_gorenstein},
      {{"matroidal", {"thm3.1"}, "I(G) matroidal iff I_c(G) matroidal iff G complete multipartite", 2, 6, 0},
       {"edge_matroidal", "ic_matroidal", "complete_multipartite"}, true, 1, check_matroidal},
      {{"power-regularity", {"thm4.1"}, "reg I_c(G)^k matches the two-regime formula; depth non-increasing",
        2, 5, 3},
       {"c", "reg", "forecast", "depth"}, false, 1, check_power_regularity},
      {{"linear-powers", {"cor4.7", "cor4.6"},
        "I_c(G)^k has a linear resolution iff c(G)=1; linear quotients for c(G)=1, k<=2", 2, 5, 3},
       {"c", "linear", "linear_quotients"}, false, 1, check_linear_powers},
      {{"cover-regularity", {"thm4.8"}, "reg of J_c(G)^k and J_c(G)^(k) match the girth formula", 3, 6, 2},
       {"girth", "reg_power", "reg_symbolic", "forecast"}, true, 2, check_cover_regularity},
      {{"field-independence", {"cor4.5"}, "Betti tables of I_c(G)^k agree over Q, Z/2 and Z/3", 2, 5, 2},
       {"total_betti"}, false, 1, check_field_independence},
  };
  return defs;
}

const SuiteDef* find_definition(const std::string& name) {
  for (const auto& d : definitions()) {
    if (d.info.name == name) return &d;
    for (const auto& a : d.info.aliases) {
      if (a == name) return &d;
    }
  }
  return nullptr;
}

struct ChunkResult {
  std::vector<SweepRow> rows;
  std::vector<Counterexample> counterexamples;
  SweepCounts counts;
};

void evaluate_chunk(const SuiteDef& def, const Context& ctx, int n, std::uint64_t first,
                    std::uint64_t last, ChunkResult& out) {
  for (std::uint64_t mask = first; mask < last; ++mask) {
    ++out.counts.enumerated;
    const Graph g = Graph::from_edge_bitmask(n, mask);
    if (g.size() < def.min_edges || (def.no_isolated && g.has_isolated_vertex())) continue;
    ++out.counts.checked;
    SweepRow row;
    row.n = n;
    row.bitmask = mask;
    try {
      Outcome o = def.evaluate(g, ctx);
      row.pass = o.pass;
      row.values = std::move(o.values);
      for (auto& [k, message] : o.failures) {
        out.counterexamples.push_back({n, mask, k, ctx.field.to_string(), std::move(message)});
      }
    } catch (const ResourceGuard& e) {
      row.guarded = true;
      row.values.assign(def.columns.size(), "-");
      ++out.counts.guarded;
    } catch (const std::exception& e) {
      row.pass = false;
      row.values.assign(def.columns.size(), "-");
      out.counterexamples.push_back({n, mask, 0, ctx.field.to_string(), std::string("error: ") + e.what()});
    }
    if (!row.pass) ++out.counts.mismatches;
    out.rows.push_back(std::move(row));
  }
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> catalog = [] {
    std::vector<SuiteInfo> out;
    for (const auto& d : definitions()) out.push_back(d.info);
    return out;
  }();
  return catalog;
}

const SuiteInfo* find_suite(const std::string& name) {
  const SuiteDef* d = find_definition(name);
  if (!d) return nullptr;
  return &suite_catalog()[static_cast<std::size_t>(d - definitions().data())];
}

SweepReport run_suite(const std::string& name, const SweepOptions& options) {
  const SuiteDef* def = find_definition(name);
  if (!def) throw InvalidInput("unknown verification suite '" + name + "'");
  SweepReport report;
  report.suite = def->info.name;
  report.n_min = std::max(options.n_min.value_or(def->info.default_n_min), def->info.default_n_min);
  report.n_max = options.n_max.value_or(def->info.default_n_max);
  report.kmax = def->info.default_kmax == 0 ? 0 : options.kmax.value_or(def->info.default_kmax);
  report.field = def->info.name == "field-independence" ? "Q,Zp:2,Zp:3" : options.field.to_string();
  report.columns = def->columns;
  if (report.n_max < 1 || report.n_max > GraphEnumeration::kMaxOrder) {
    throw InvalidInput("sweep size n must lie in 1.." + std::to_string(GraphEnumeration::kMaxOrder));
  }
  if (def->info.default_kmax != 0 && report.kmax < 1) throw InvalidInput("kmax must be at least 1");
  const Context ctx{report.kmax, options.field};

  unsigned jobs = options.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.jobs;
  for (int n = report.n_min; n <= report.n_max; ++n) {
    const std::uint64_t total = GraphEnumeration(n, false).mask_count();
    constexpr std::uint64_t kChunk = 256;
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    std::vector<ChunkResult> results(chunks);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
      for (std::uint64_t c = next++; c < chunks; c = next++) {
        evaluate_chunk(*def, ctx, n, c * kChunk, std::min(total, (c + 1) * kChunk), results[c]);
      }
    };
    const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(jobs, chunks));
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    SweepCounts& counts = report.per_n[n];
    for (auto& r : results) {
      counts.enumerated += r.counts.enumerated;
      counts.checked += r.counts.checked;
      counts.mismatches += r.counts.mismatches;
      counts.guarded += r.counts.guarded;
      for (auto& row : r.rows) report.rows.push_back(std::move(row));
      for (auto& c : r.counterexamples) report.counterexamples.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace cei
