// Command-line front end: build ideals of graphs, compute Betti tables and
// classifications, and run the exhaustive verification sweeps.
//
// Exit codes: 0 success, 1 a check found a counterexample, 2 usage or
// input error, 3 a resource guard stopped the computation.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "cei/error.hpp"
#include "cei/graph_ideals.hpp"
#include "cei/io.hpp"
#include "cei/resolutions.hpp"
#include "cei/structure.hpp"
#include "cei/sweeps.hpp"

using namespace cei;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct Options {
  std::string graph;
  std::string ideal_file;
  std::string which = "ic";
  std::string field = "Q";
  int kmax = 3;
  int power = 1;
  unsigned jobs = 1;
  bool json = false;
  std::string csv;
  std::string suite;
  int n = 0;
  int n_min = 0;
  bool list = false;
};

// Counterexample found by a verb that checks a claim.
struct CheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Graph require_graph(const Options& o) {
  if (o.graph.empty()) throw InvalidInput("a graph source (file or family spec) is required");
  return load_graph(o.graph);
}

MonomialIdeal ideal_by_name(const Graph& g, const std::string& which) {
  if (which == "ic") return comp_edge_ideal(g);
  if (which == "jc") return comp_cover_ideal(g);
  if (which == "edge") return edge_ideal(g);
  if (which == "cover") return alexander_dual(edge_ideal(g));
  const auto colon = which.find(':');
  if (colon != std::string::npos) {
    const std::string head = which.substr(0, colon);
    const std::string arg = which.substr(colon + 1);
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos || arg.size() > 3) {
      throw InvalidInput("malformed --which '" + which + "'");
    }
    const int v = std::stoi(arg);
    if (head == "clique") {
      if (v < 1) throw InvalidInput("clique size must be at least 1");
      return clique_ideal(g, v);
    }
    if (head == "veronese") return veronese(g.order(), v);
  }
  throw InvalidInput("unknown --which '" + which + "' (ic, jc, edge, cover, clique:t, veronese:d)");
}

// The ideal a verb works on: --ideal FILE, or --which applied to the graph.
MonomialIdeal selected_ideal(const Options& o) {
  if (!o.ideal_file.empty()) {
    if (!o.graph.empty()) throw InvalidInput("give either a graph or --ideal, not both");
    return read_ideal_file(o.ideal_file);
  }
  return ideal_by_name(require_graph(o), o.which);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_ideal(const Options& o) {
  const MonomialIdeal a = selected_ideal(o);
  if (o.json) {
    emit(ideal_json(a));
  } else {
    std::cout << to_string(a) << "\n";
  }
  return kExitOk;
}

int run_dual(const Options& o) {
  const MonomialIdeal a = o.ideal_file.empty() ? comp_edge_ideal(require_graph(o)) : read_ideal_file(o.ideal_file);
  const MonomialIdeal d = alexander_dual(a);
  if (o.json) {
    emit(ideal_json(d));
  } else {
    std::cout << to_string(d) << "\n";
  }
  return kExitOk;
}

int run_decompose(const Options& o) {
  std::vector<PrimeSupport> primes;
  if (!o.ideal_file.empty()) {
    primes = squarefree_minimal_primes(read_ideal_file(o.ideal_file));
  } else {
    try {
      primes = primary_decomposition_ic(require_graph(o)).components();
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
      throw CheckFailed(e.what());
    }
  }
  if (o.json) {
    emit(decomposition_json(primes));
  } else {
    for (const auto& p : primes) std::cout << to_string(p.ideal()) << "\n";
    if (primes.empty()) std::cout << "(no primes: unit ideal)\n";
  }
  return kExitOk;
}

int run_betti(const Options& o) {
  if (o.power < 1) throw InvalidInput("--power must be at least 1");
  const MonomialIdeal a = power(selected_ideal(o), o.power);
  const BettiTable t = betti_table_general(a, FieldSpec::parse(o.field));
  if (o.json) {
    json j = betti_json(t);
    j["field"] = o.field;
    j["regularity"] = t.regularity();
    j["proj_dim"] = t.proj_dim();
    j["depth_quotient"] = t.depth_quotient();
    emit(j);
  } else {
    std::cout << format_betti_table(t);
    std::cout << "reg " << t.regularity() << ", pd " << t.proj_dim() << ", depth S/I " << t.depth_quotient()
              << " (over " << o.field << ")\n";
  }
  return kExitOk;
}

int run_classify(const Options& o) {
  const ClassificationReport r = classify(require_graph(o), FieldSpec::parse(o.field));
  if (o.json) {
    emit(classification_json(r));
  } else {
    std::cout << format_classification(r);
  }
  return r.consistent() ? kExitOk : kExitCounterexample;
}

int run_reg_table(const Options& o) {
  if (o.kmax < 1) throw InvalidInput("--kmax must be at least 1");
  const Graph g = require_graph(o);
  const FieldSpec field = FieldSpec::parse(o.field);
  const MonomialIdeal ic = comp_edge_ideal(g);
  const bool jc_applicable = !g.has_isolated_vertex() && g.size() >= 2 && g.order() >= 3;
  const MonomialIdeal jc = jc_applicable ? comp_cover_ideal(g) : MonomialIdeal();
  json rows = json::array();
  bool all_match = true;
  std::ostringstream csv;
  csv << "k,reg_ic,forecast_ic,regime,depth_ic,reg_jc,reg_jc_symbolic,forecast_jc\n";
  for (int k = 1; k <= o.kmax; ++k) {
    const RegularityForecast f = reg_power_forecast(g, k);
    json row = {{"k", k},
                {"forecast_ic", f.predicted_reg},
                {"regime", f.regime == RegularityRegime::BelowThreshold ? "below-threshold" : "at-or-above-threshold"},
                {"rstab", f.rstab}};
    std::string reg_text = "unit", depth_text = "unit";
    if (!ic.is_unit()) {
      const BettiTable t = betti_table(power(ic, k), field);
      row["reg_ic"] = t.regularity();
      row["depth_ic"] = t.depth_quotient();
      all_match = all_match && t.regularity() == f.predicted_reg;
      reg_text = std::to_string(t.regularity());
      depth_text = std::to_string(t.depth_quotient());
    }
    std::string jr = "-", js = "-", jf = "-";
    if (jc_applicable) {
      const int forecast = reg_jc_power_forecast(g, k, false);
      const int r = betti_table(power(jc, k), field).regularity();
      const int s = betti_table(symbolic_power(jc, k), field).regularity();
      row["reg_jc"] = r;
      row["reg_jc_symbolic"] = s;
      row["forecast_jc"] = forecast;
      all_match = all_match && r == forecast && s == forecast;
      jr = std::to_string(r);
      js = std::to_string(s);
      jf = std::to_string(forecast);
    }
    rows.push_back(row);
    csv << k << "," << reg_text << "," << f.predicted_reg << "," << row["regime"].get<std::string>() << ","
        << depth_text << "," << jr << "," << js << "," << jf << "\n";
  }
  if (!o.csv.empty()) {
    std::ofstream out(o.csv);
    if (!out) throw InvalidInput("cannot write '" + o.csv + "'");
    out << csv.str();
  }
  if (o.json) {
    emit({{"field", o.field}, {"rows", rows}, {"forecasts_match", all_match}});
  } else {
    std::cout << "   k  reg I_c^k  forecast  regime                 depth   reg J_c^k  reg J_c^(k)  forecast\n";
    for (const auto& row : rows) {
      auto cell = [&](const char* key) {
        return row.contains(key) ? std::to_string(row[key].get<int>()) : std::string("-");
      };
      std::cout << std::setw(4) << row["k"].get<int>() << std::setw(11) << cell("reg_ic") << std::setw(10)
                << cell("forecast_ic") << "  " << std::left << std::setw(23) << row["regime"].get<std::string>()
                << std::right << std::setw(5) << cell("depth_ic") << std::setw(12) << cell("reg_jc")
                << std::setw(13) << cell("reg_jc_symbolic") << std::setw(10) << cell("forecast_jc") << "\n";
    }
    std::cout << (all_match ? "all forecasts match" : "forecast mismatch") << " (over " << o.field << ")\n";
  }
  return all_match ? kExitOk : kExitCounterexample;
}

int run_lq_order(const Options& o) {
  const Graph g = require_graph(o);
  const ChordalOrder c = chordal_lq_order(g);
  if (o.json) {
    std::vector<std::string> gens;
    for (const auto& m : c.gens) gens.push_back(to_string(m));
    emit({{"elimination_order", c.elimination.order}, {"order", gens}, {"verified", c.verified}});
  } else {
    std::cout << "elimination order:";
    for (int v : c.elimination.order) std::cout << " " << v;
    std::cout << "\nlinear quotients order:";
    for (const auto& m : c.gens) std::cout << " " << to_string(m);
    std::cout << "\nverified: " << (c.verified ? "yes" : "no") << "\n";
  }
  return c.verified ? kExitOk : kExitCounterexample;
}

int run_ladder(const Options& o) {
  const LadderReport r = power_splitting_ladder(require_graph(o), o.power, FieldSpec::parse(o.field));
  if (o.json) {
    emit(ladder_json(r));
  } else {
    for (const auto& s : r.steps) {
      std::cout << "step " << s.ell << ": intersection " << (s.intersection_matches ? "matches" : "differs")
                << ", Betti splitting " << (s.is_splitting ? "holds" : "fails") << "\n";
    }
    std::cout << "J_k = I_c(G)^k: " << (r.final_matches ? "yes" : "no") << "\n";
  }
  return r.all_pass() ? kExitOk : kExitCounterexample;
}

int run_verify(const Options& o) {
  if (o.list || o.suite.empty()) {
    for (const auto& s : suite_catalog()) {
      std::cout << s.name;
      for (const auto& a : s.aliases) std::cout << " " << a;
      std::cout << "\n    " << s.description << " (n=" << s.default_n_min << ".." << s.default_n_max;
      if (s.default_kmax) std::cout << ", k<=" << s.default_kmax;
      std::cout << ")\n";
    }
    if (!o.list) throw InvalidInput("verify needs a suite name");
    return kExitOk;
  }
  std::vector<std::string> names;
  if (o.suite == "all") {
    for (const auto& s : suite_catalog()) names.push_back(s.name);
  } else {
    if (!find_suite(o.suite)) throw InvalidInput("unknown suite '" + o.suite + "' (see verify --list)");
    names.push_back(o.suite);
  }
  SweepOptions so;
  if (o.n > 0) so.n_max = o.n;
  if (o.n_min > 0) so.n_min = o.n_min;
  if (o.kmax > 0) so.kmax = o.kmax;
  so.field = FieldSpec::parse(o.field);
  so.jobs = o.jobs;
  bool failed = false, guarded = false;
  json reports = json::array();
  std::ofstream csv;
  if (!o.csv.empty()) {
    csv.open(o.csv);
    if (!csv) throw InvalidInput("cannot write '" + o.csv + "'");
  }
  for (const auto& name : names) {
    const SweepReport r = run_suite(name, so);
    failed = failed || !r.passed();
    guarded = guarded || r.totals().guarded > 0;
    if (csv.is_open()) csv << r.csv();
    if (o.json) {
      const SweepCounts t = r.totals();
      json cex = json::array();
      for (const auto& c : r.counterexamples) {
        cex.push_back({{"n", c.n}, {"bitmask", c.bitmask}, {"k", c.k}, {"field", c.field}, {"message", c.message}});
      }
      reports.push_back({{"suite", r.suite},
                         {"n_min", r.n_min},
                         {"n_max", r.n_max},
                         {"kmax", r.kmax},
                         {"field", r.field},
                         {"scanned", t.enumerated},
                         {"checked", t.checked},
                         {"mismatches", t.mismatches},
                         {"guarded", t.guarded},
                         {"counterexamples", cex}});
    } else {
      std::cout << r.summary() << std::flush;
    }
  }
  if (o.json) emit(reports);
  if (failed) return kExitCounterexample;
  return guarded ? kExitGuard : kExitOk;
}

int run_probe(const Options& o) {
  if (o.kmax < 1) throw InvalidInput("--kmax must be at least 1");
  const auto rows = probe_open_questions(require_graph(o), o.kmax, FieldSpec::parse(o.field));
  auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
  if (o.json) {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"k", r.k},
                     {"jc_power_componentwise_linear", opt(r.jc_power_componentwise_linear)},
                     {"depth_jc_power", r.depth_jc_power},
                     {"depth_jc_symbolic", r.depth_jc_symbolic},
                     {"reg_ic_power", opt(r.reg_ic_power)},
                     {"reg_ic_symbolic", opt(r.reg_ic_symbolic)}});
    }
    emit({{"field", o.field}, {"rows", out}, {"note", "observations only"}});
  } else {
    auto text = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::cout << "   k  J_c^k cwl  depth J_c^k  depth J_c^(k)  reg I_c^k  reg I_c^(k)\n";
    for (const auto& r : rows) {
      const std::string cwl =
          r.jc_power_componentwise_linear ? (*r.jc_power_componentwise_linear ? "yes" : "no") : "-";
      std::cout << std::setw(4) << r.k << std::setw(11) << cwl << std::setw(13) << r.depth_jc_power
                << std::setw(15) << r.depth_jc_symbolic << std::setw(11) << text(r.reg_ic_power) << std::setw(13)
                << text(r.reg_ic_symbolic) << "\n";
    }
    std::cout << "observations only (over " << o.field << ")\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complementary edge and cover ideals of graphs: construction, Betti tables, classification, sweeps"};
  app.require_subcommand(1);
  Options o;

  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", o.graph, "graph file or family spec (path:n, cycle:n, complete:n, empty:n, "
                                      "complete_multipartite:a,b,..., union:spec,spec)");
  };
  auto field_opt = [&](CLI::App* sub) { sub->add_option("--field", o.field, "Q or Zp:<p>")->capture_default_str(); };
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };

  auto* ideal = app.add_subcommand("ideal", "print an ideal of the graph");
  graph_arg(ideal);
  ideal->add_option("--which", o.which, "ic | jc | edge | cover | clique:t | veronese:d")->capture_default_str();
  ideal->add_option("--ideal", o.ideal_file, "read the ideal from a file instead");
  json_flag(ideal);

  auto* dual = app.add_subcommand("dual", "Alexander dual of I_c(G), or of --ideal FILE");
  graph_arg(dual);
  dual->add_option("--ideal", o.ideal_file, "squarefree ideal file");
  json_flag(dual);

  auto* decompose = app.add_subcommand("decompose", "minimal primes of I_c(G), or of --ideal FILE");
  graph_arg(decompose);
  decompose->add_option("--ideal", o.ideal_file, "squarefree ideal file");
  json_flag(decompose);

  auto* betti = app.add_subcommand("betti", "graded Betti table of an ideal (or a power of it)");
  graph_arg(betti);
  betti->add_option("--which", o.which, "ic | jc | edge | cover | clique:t | veronese:d")->capture_default_str();
  betti->add_option("--ideal", o.ideal_file, "ideal file (text or JSON)");
  betti->add_option("--power", o.power, "exponent k")->capture_default_str();
  field_opt(betti);
  json_flag(betti);

  auto* cls = app.add_subcommand("classify", "structural and homological verdicts for S/I_c(G)");
  graph_arg(cls);
  field_opt(cls);
  json_flag(cls);

  auto* reg = app.add_subcommand("reg-table", "regularity and depth of powers next to the forecasts");
  graph_arg(reg);
  reg->add_option("--kmax", o.kmax, "largest power")->capture_default_str();
  reg->add_option("--csv", o.csv, "also write the table as CSV");
  field_opt(reg);
  json_flag(reg);

  auto* lq = app.add_subcommand("lq-order", "linear-quotients order of J_c(G) for a chordal graph");
  graph_arg(lq);
  json_flag(lq);

  auto* ladder = app.add_subcommand("ladder", "Betti-splitting ladder for I_c(G)^k, c(G) >= 2");
  graph_arg(ladder);
  ladder->add_option("--power", o.power, "exponent k")->capture_default_str();
  field_opt(ladder);
  json_flag(ladder);

  auto* verify = app.add_subcommand("verify", "run an exhaustive verification suite");
  verify->add_option("suite", o.suite, "suite name or alias, or 'all'");
  verify->add_flag("--list", o.list, "list the suites");
  verify->add_option("--n", o.n, "largest vertex count (default: per suite)");
  verify->add_option("--n-min", o.n_min, "smallest vertex count (default: per suite)");
  verify->add_option("--kmax", o.kmax, "largest power (default: per suite)");
  verify->add_option("--jobs", o.jobs, "worker threads, 0 = all cores")->capture_default_str();
  verify->add_option("--csv", o.csv, "write one row per graph to this file");
  verify->add_option("--field", o.field, "Q or Zp:<p> (default Zp:2)");
  json_flag(verify);

  auto* probe = app.add_subcommand("probe", "data on open questions (no verdicts)");
  graph_arg(probe);
  probe->add_option("--kmax", o.kmax, "largest power")->capture_default_str();
  field_opt(probe);
  json_flag(probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  // verify uses per-suite powers and Z/2 unless told otherwise.
  if (verify->parsed() && verify->count("--kmax") == 0) o.kmax = 0;
  if (verify->parsed() && verify->count("--field") == 0) o.field = "Zp:2";

  try {
    if (ideal->parsed()) return run_ideal(o);
    if (dual->parsed()) return run_dual(o);
    if (decompose->parsed()) return run_decompose(o);
    if (betti->parsed()) return run_betti(o);
    if (cls->parsed()) return run_classify(o);
    if (reg->parsed()) return run_reg_table(o);
    if (lq->parsed()) return run_lq_order(o);
    if (ladder->parsed()) return run_ladder(o);
    if (verify->parsed()) return run_verify(o);
    if (probe->parsed()) return run_probe(o);
  } catch (const ResourceGuard& e) {
    std::cerr << "resource guard '" << e.guard() << "' tripped: " << e.what() << "\n";
    return kExitGuard;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kExitCounterexample;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCounterexample;
  }
  return kExitUsage;
}
