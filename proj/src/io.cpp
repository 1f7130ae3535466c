#include "cei/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "cei/error.hpp"

namespace cei {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Non-comment, non-blank lines.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t.empty() || t.size() > 9 || t.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidInput("malformed " + what + " '" + text + "'");
  }
  return std::stoi(t);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

const char* const kFamilies[] = {"path", "cycle", "complete", "empty", "complete_multipartite", "union"};

}  // namespace

Graph parse_graph_text(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw InvalidInput("graph file is empty");
  const int n = parse_int(lines[0], "vertex count");
  if (n < 1 || n > Graph::kMaxVertices) {
    throw InvalidInput("vertex count must lie in 1.." + std::to_string(Graph::kMaxVertices));
  }
  Graph g(n);
  for (std::size_t l = 1; l < lines.size(); ++l) {
    std::istringstream is(lines[l]);
    std::string a, b, extra;
    if (!(is >> a >> b) || (is >> extra)) throw InvalidInput("malformed edge line '" + lines[l] + "'");
    g.add_edge(parse_int(a, "vertex"), parse_int(b, "vertex"));
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open graph file '" + path + "'");
  return parse_graph_text(in);
}

std::string format_graph_text(const Graph& g) {
  std::ostringstream os;
  os << g.order() << "\n";
  for (auto [i, j] : g.edges()) os << i << " " << j << "\n";
  return os.str();
}

bool looks_like_family_spec(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  const std::string head = text.substr(0, colon);
  return std::any_of(std::begin(kFamilies), std::end(kFamilies), [&](const char* f) { return head == f; });
}

namespace {

Graph parse_spec_tokens(const std::vector<std::string>& tokens, std::size_t& pos);

Graph parse_single(const std::string& family, const std::vector<std::string>& args) {
  auto one = [&]() {
    if (args.size() != 1) throw InvalidInput(family + " takes exactly one size");
    return parse_int(args[0], family + " size");
  };
  if (family == "path") {
    const int n = one();
    if (n < 1) throw InvalidInput("path needs at least one vertex");
    return path_graph(n);
  }
  if (family == "cycle") return cycle_graph(one());
  if (family == "complete") {
    const int n = one();
    if (n < 1) throw InvalidInput("complete graph needs at least one vertex");
    return complete_graph(n);
  }
  if (family == "empty") {
    const int n = one();
    if (n < 1) throw InvalidInput("empty graph needs at least one vertex");
    return empty_graph(n);
  }
  if (family == "complete_multipartite") {
    if (args.empty()) throw InvalidInput("complete_multipartite needs part sizes");
    std::vector<int> sizes;
    for (const auto& a : args) sizes.push_back(parse_int(a, "part size"));
    return complete_multipartite_graph(sizes);
  }
  throw InvalidInput("unknown graph family '" + family + "'");
}

Graph parse_spec_tokens(const std::vector<std::string>& tokens, std::size_t& pos) {
  const std::string& token = tokens[pos];
  const auto colon = token.find(':');
  if (colon == std::string::npos) throw InvalidInput("malformed family spec '" + token + "'");
  const std::string family = token.substr(0, colon);
  const std::string rest = token.substr(colon + 1);
  if (family == "union") {
    // The first member starts inside this token; the union takes the rest.
    std::vector<std::string> inner = {rest};
    inner.insert(inner.end(), tokens.begin() + static_cast<std::ptrdiff_t>(pos) + 1, tokens.end());
    pos = tokens.size();
    std::size_t ipos = 0;
    Graph g = parse_spec_tokens(inner, ipos);
    while (ipos < inner.size()) g = disjoint_union(g, parse_spec_tokens(inner, ipos));
    return g;
  }
  std::vector<std::string> args = {rest};
  ++pos;
  while (pos < tokens.size() && all_digits(tokens[pos])) args.push_back(tokens[pos++]);
  return parse_single(family, args);
}

}  // namespace

Graph parse_family_spec(const std::string& spec) {
  if (!looks_like_family_spec(spec)) throw InvalidInput("malformed family spec '" + spec + "'");
  const auto tokens = split(spec, ',');
  std::size_t pos = 0;
  Graph g = parse_spec_tokens(tokens, pos);
  if (pos != tokens.size()) throw InvalidInput("trailing text in family spec '" + spec + "'");
  if (g.order() > Graph::kMaxVertices) throw InvalidInput("graph has too many vertices");
  return g;
}

Graph load_graph(const std::string& source) {
  return looks_like_family_spec(source) ? parse_family_spec(source) : read_graph_file(source);
}

namespace {

Monomial parse_monomial(const std::string& text, int n) {
  Monomial m(n);
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '*' && c != '\t') s.push_back(c);
  }
  if (s == "1") return m;
  std::size_t i = 0;
  auto read_number = [&](const std::string& what) {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) throw InvalidInput("malformed monomial '" + text + "': expected " + what);
    return parse_int(s.substr(start, i - start), what);
  };
  if (s.empty()) throw InvalidInput("empty monomial");
  while (i < s.size()) {
    if (s[i] != 'x') throw InvalidInput("malformed monomial '" + text + "'");
    ++i;
    const int v = read_number("variable index");
    int e = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      e = read_number("exponent");
    }
    if (v < 1 || v > n) throw InvalidInput("variable x" + std::to_string(v) + " outside 1.." + std::to_string(n));
    m.set(v - 1, m[v - 1] + e);
  }
  return m;
}

}  // namespace

MonomialIdeal parse_ideal_text(std::istream& in) {
  const auto lines = content_lines(in);
  if (lines.empty()) throw InvalidInput("ideal file is empty");
  const int n = parse_int(lines[0], "variable count");
  if (n < 1 || n > Monomial::kMaxVars) throw InvalidInput("variable count out of range");
  std::vector<Monomial> raw;
  for (std::size_t l = 1; l < lines.size(); ++l) raw.push_back(parse_monomial(lines[l], n));
  return minimalize(n, std::move(raw));
}

MonomialIdeal parse_ideal_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("gens")) {
    throw InvalidInput("ideal JSON needs \"n\" and \"gens\"");
  }
  try {
    const int n = j.at("n").get<int>();
    if (n < 1 || n > Monomial::kMaxVars) throw InvalidInput("variable count out of range");
    std::vector<Monomial> raw;
    for (const auto& g : j.at("gens")) {
      const auto exps = g.get<std::vector<int>>();
      if (exps.size() != static_cast<std::size_t>(n)) throw InvalidInput("exponent vector length differs from n");
      raw.emplace_back(n, std::span<const int>(exps));
    }
    return minimalize(n, std::move(raw));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed ideal JSON: ") + e.what());
  }
}

MonomialIdeal read_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open ideal file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("malformed ideal JSON: ") + e.what());
    }
    return parse_ideal_json(j);
  }
  std::istringstream is(text);
  return parse_ideal_text(is);
}

nlohmann::json ideal_json(const MonomialIdeal& a) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& m : a.gens()) {
    std::vector<int> e;
    for (int i = 0; i < a.ambient(); ++i) e.push_back(m[i]);
    gens.push_back(e);
  }
  return {{"n", a.ambient()}, {"gens", gens}, {"text", to_string(a)}};
}

nlohmann::json decomposition_json(const std::vector<PrimeSupport>& primes) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : primes) {
    std::vector<int> vars;
    for (VarMask r = p.vars; r != 0; r &= r - 1) vars.push_back(std::countr_zero(r) + 1);
    out.push_back(vars);
  }
  return {{"primes", out}};
}

nlohmann::json betti_json(const BettiTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, count] : t.entries()) entries.push_back({key.first, key.second, count});
  return {{"entries", entries}};
}

nlohmann::json classification_json(const ClassificationReport& r) {
  nlohmann::json j;
  j["graph"] = {{"n", r.graph.order()}, {"edges", r.graph.edges()}};
  j["verdicts"] = {{"sequentially_cm", r.sequentially_cm},
                   {"cohen_macaulay", r.cohen_macaulay},
                   {"gorenstein", r.gorenstein},
                   {"nearly_gorenstein", r.nearly_gorenstein},
                   {"unmixed", r.unmixed},
                   {"matroidal_ic", r.matroidal_ic},
                   {"matroidal_edge", r.matroidal_edge}};
  j["complete_multipartite"] = r.complete_multipartite;
  j["dim"] = r.dim;
  nlohmann::json hom = nlohmann::json::object();
  auto put = [&](const char* key, const std::optional<bool>& v) {
    hom[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
  };
  put("sequentially_cm", r.sequentially_cm_homological);
  put("cohen_macaulay", r.cohen_macaulay_homological);
  put("gorenstein", r.gorenstein_homological);
  put("unmixed", r.unmixed_homological);
  j["homological"] = hom;
  nlohmann::json w = nlohmann::json::object();
  for (const auto& [k, v] : r.witnesses) w[k] = v;
  j["witnesses"] = w;
  j["consistent"] = r.consistent();
  return j;
}

nlohmann::json ladder_json(const LadderReport& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"ell", s.ell}, {"intersection_matches", s.intersection_matches},
                     {"is_splitting", s.is_splitting}});
  }
  auto vertices = [](VertexMask m) {
    std::vector<int> v;
    for (; m != 0; m &= m - 1) v.push_back(std::countr_zero(m) + 1);
    return v;
  };
  return {{"k", r.k},
          {"part1", vertices(r.part1)},
          {"part2", vertices(r.part2)},
          {"steps", steps},
          {"final_matches", r.final_matches},
          {"pass", r.all_pass()}};
}

std::string format_betti_table(const BettiTable& t) {
  if (t.entries().empty()) return "(empty)\n";
  const int pd = t.proj_dim();
  int lo = t.entries().begin()->first.second - t.entries().begin()->first.first;
  int hi = lo;
  for (const auto& [key, count] : t.entries()) {
    lo = std::min(lo, key.second - key.first);
    hi = std::max(hi, key.second - key.first);
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  labels.push_back("");
  cells.emplace_back();
  for (int i = 0; i <= pd; ++i) cells.back().push_back(std::to_string(i));
  labels.push_back("total:");
  cells.emplace_back();
  for (int i = 0; i <= pd; ++i) cells.back().push_back(std::to_string(t.total(i)));
  for (int r = lo; r <= hi; ++r) {
    labels.push_back(std::to_string(r) + ":");
    cells.emplace_back();
    for (int i = 0; i <= pd; ++i) {
      const std::uint64_t v = t.at(i, i + r);
      cells.back().push_back(v == 0 ? "." : std::to_string(v));
    }
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths(static_cast<std::size_t>(pd) + 1, 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    os << std::setw(static_cast<int>(label_width)) << labels[r];
    for (std::size_t i = 0; i < cells[r].size(); ++i) {
      os << " " << std::setw(static_cast<int>(widths[i])) << cells[r][i];
    }
    os << "\n";
  }
  return os.str();
}

std::string format_classification(const ClassificationReport& r) {
  std::ostringstream os;
  auto mark = [](bool b) { return b ? "yes" : "no"; };
  auto hmark = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "n/a"; };
  os << "graph: n=" << r.graph.order() << ", " << r.graph.size() << " edges\n";
  os << "dim S/I_c(G): " << r.dim << "\n";
  os << "sequentially CM:   " << mark(r.sequentially_cm) << " (homological " << hmark(r.sequentially_cm_homological)
     << ")\n";
  os << "Cohen-Macaulay:    " << mark(r.cohen_macaulay) << " (homological " << hmark(r.cohen_macaulay_homological)
     << ")\n";
  os << "Gorenstein:        " << mark(r.gorenstein) << " (homological " << hmark(r.gorenstein_homological) << ")\n";
  os << "nearly Gorenstein: " << mark(r.nearly_gorenstein) << " (classification-only)\n";
  os << "unmixed:           " << mark(r.unmixed) << " (homological " << hmark(r.unmixed_homological) << ")\n";
  os << "matroidal I_c(G):  " << mark(r.matroidal_ic) << "\n";
  os << "matroidal I(G):    " << mark(r.matroidal_edge) << "\n";
  for (const auto& [k, v] : r.witnesses) os << "  " << k << ": " << v << "\n";
  os << "consistent: " << mark(r.consistent()) << "\n";
  return os.str();
}

}  // namespace cei
