#include "multicover/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace multicover {

std::string rational_to_string(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt p(s.substr(0, slash));
    BigInt q(s.substr(slash + 1));
    if (q == 0) throw ParseError("rational with zero denominator: " + s);
    return Rational(p, q);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    bool neg = !digits.empty() && digits[0] == '-';
    BigInt p(digits.empty() || digits == "-" ? "0" : digits);
    BigInt q = 1;
    for (std::size_t i = dot + 1; i < s.size(); ++i) q *= 10;
    (void)neg;
    return Rational(p, q);
  }
  return Rational(BigInt(s));
}

namespace {

// Strips comments and blank lines, yields whitespace-token streams per line.
std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::vector<long long> parse_ints(const std::string& line, const char* what) {
  std::istringstream is(line);
  std::vector<long long> vals;
  long long v;
  while (is >> v) vals.push_back(v);
  if (!is.eof()) {
    std::string tok;
    is.clear();
    is >> tok;
    throw ParseError(std::string("bad token '") + tok + "' in " + what);
  }
  return vals;
}

}  // namespace

Hypergraph parse_instance_text(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.empty()) throw ParseError("empty instance file");
  auto header = parse_ints(lines[0], "header");
  if (header.size() != 2) throw ParseError("header must be 'n m'");
  const long long n = header[0], m = header[1];
  if (n < 1 || m < 1) throw ParseError("n and m must be >= 1");
  if (static_cast<long long>(lines.size()) != m + 2)
    throw ParseError("expected " + std::to_string(m + 2) + " content lines, got " +
                     std::to_string(lines.size()));

  auto braw = parse_ints(lines[1], "demand line");
  if (static_cast<long long>(braw.size()) != n)
    throw ParseError("demand line must list n values");
  std::vector<int> demands(braw.begin(), braw.end());

  std::vector<std::vector<int>> edges;
  edges.reserve(m);
  for (long long j = 0; j < m; ++j) {
    auto vs = parse_ints(lines[2 + j], "edge line");
    if (vs.empty()) throw ParseError("edge " + std::to_string(j + 1) + " is empty");
    std::vector<int> e;
    e.reserve(vs.size());
    for (long long v : vs) e.push_back(static_cast<int>(v - 1));  // to 0-based
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(n), std::move(edges), std::move(demands));
}

void write_instance_text(std::ostream& out, const Hypergraph& h) {
  out << h.num_vertices() << " " << h.num_edges() << "\n";
  for (int v = 0; v < h.num_vertices(); ++v)
    out << h.demand(v) << (v + 1 == h.num_vertices() ? "" : " ");
  out << "\n";
  for (const auto& e : h.raw_edges()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      out << e[i] + 1 << (i + 1 == e.size() ? "" : " ");
    out << "\n";
  }
}

Hypergraph parse_instance_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("demands") ||
      !doc.contains("edges"))
    throw ParseError("instance JSON needs keys n, demands, edges");
  const long long n = doc["n"].get<long long>();
  if (n < 1) throw ParseError("n must be >= 1");
  std::vector<int> demands;
  for (const auto& b : doc["demands"]) demands.push_back(b.get<int>());
  if (static_cast<long long>(demands.size()) != n)
    throw ParseError("demands must list n values");
  std::vector<std::vector<int>> edges;
  for (const auto& ej : doc["edges"]) {
    std::vector<int> e;
    for (const auto& v : ej) e.push_back(v.get<int>() - 1);
    edges.push_back(std::move(e));
  }
  if (edges.empty()) throw ParseError("m must be >= 1");
  return Hypergraph(static_cast<int>(n), std::move(edges), std::move(demands));
}

void write_instance_json(std::ostream& out, const Hypergraph& h) {
  nlohmann::json doc;
  doc["n"] = h.num_vertices();
  doc["demands"] = h.demands();
  auto edges = nlohmann::json::array();
  for (const auto& e : h.raw_edges()) {
    auto je = nlohmann::json::array();
    for (int v : e) je.push_back(v + 1);
    edges.push_back(std::move(je));
  }
  doc["edges"] = std::move(edges);
  out << doc.dump(2) << "\n";
}

Hypergraph read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  if (path.extension() == ".json") return parse_instance_json(in);
  return parse_instance_text(in);
}

void write_instance_files(const std::filesystem::path& base, const Hypergraph& h) {
  {
    std::ofstream out(base.string() + ".txt");
    if (!out) throw ParseError("cannot write " + base.string() + ".txt");
    write_instance_text(out, h);
  }
  {
    std::ofstream out(base.string() + ".json");
    if (!out) throw ParseError("cannot write " + base.string() + ".json");
    write_instance_json(out, h);
  }
}

}  // namespace multicover
