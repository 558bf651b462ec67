#include "topotutte/rgfile.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace topotutte {

ParseError::ParseError(int line, int column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
    out.push_back({std::string(line.substr(i, j - i)), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

struct PendingVertex {
  std::string name;
  std::vector<Token> halves;
  int line;
  int column;
};

struct PendingArrow {
  Token spec;
  std::vector<int> directions;
  int line;
};

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch == ':' || ch == '=' || ch == '#') return false;
  return true;
}

}  // namespace

RibbonGraph parse_rg(std::string_view text) {
  std::vector<PendingVertex> vertices;
  std::vector<RibbonGraph::Edge> edges;
  std::vector<std::pair<int, int>> edge_pos;  // line, column of each edge name
  std::unordered_map<std::string, std::pair<int, int>> half_index;  // name -> (half-edge, line)
  std::vector<PendingArrow> arrows;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0].text;
    auto fail = [&](const Token& t, const std::string& msg) -> ParseError { return ParseError(line_no, t.column, msg); };

    if (kw == "vertex" || kw == "edge") {
      if (tokens.size() < 2) throw fail(tokens[0], "missing name after '" + kw + "'");
      std::string name = tokens[1].text;
      std::size_t next = 2;
      if (!name.empty() && name.back() == ':') {
        name.pop_back();
      } else if (tokens.size() > 2 && tokens[2].text == ":") {
        next = 3;
      } else {
        throw fail(tokens[1], "expected ':' after the name");
      }
      if (!valid_name(name)) throw fail(tokens[1], "invalid name '" + name + "'");

      if (kw == "vertex") {
        vertices.push_back({name, {tokens.begin() + next, tokens.end()}, line_no, tokens[1].column});
        continue;
      }

      if (tokens.size() < next + 2) throw fail(tokens.back(), "an edge needs two half-edge names");
      RibbonGraph::Edge e;
      e.name = name;
      const int index = static_cast<int>(edges.size());
      for (int s = 0; s < 2; ++s) {
        const Token& h = tokens[next + s];
        if (!valid_name(h.text)) throw fail(h, "invalid half-edge name '" + h.text + "'");
        if (half_index.count(h.text)) throw fail(h, "duplicate half-edge '" + h.text + "'");
        half_index[h.text] = {2 * index + s, line_no};
        e.half_names[s] = h.text;
      }
      for (std::size_t i = next + 2; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (t.text == "twist") {
          e.twist = true;
        } else if (t.text == "zero") {
          e.attrs.zero = true;
        } else if (t.text == "phantom") {
          e.attrs.phantom = true;
        } else if (t.text == "sign=+") {
          e.attrs.sign = Sign::positive;
        } else if (t.text == "sign=-") {
          e.attrs.sign = Sign::negative;
        } else if (t.text.rfind("x=", 0) == 0 || t.text.rfind("y=", 0) == 0) {
          Poly value;
          try {
            value = Poly::parse(t.text.substr(2));
          } catch (const std::exception& ex) {
            throw fail(t, std::string("malformed weight: ") + ex.what());
          }
          (t.text[0] == 'x' ? e.attrs.weight_x : e.attrs.weight_y) = value;
        } else {
          throw fail(t, "unknown edge attribute '" + t.text + "'");
        }
      }
      edges.push_back(std::move(e));
      edge_pos.emplace_back(line_no, tokens[1].column);
    } else if (kw == "arrow") {
      if (tokens.size() < 3) throw fail(tokens[0], "an arrow needs an arc and at least one direction");
      PendingArrow a{tokens[1], {}, line_no};
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        if (tokens[i].text == "+")
          a.directions.push_back(1);
        else if (tokens[i].text == "-")
          a.directions.push_back(-1);
        else
          throw fail(tokens[i], "arrow direction must be '+' or '-'");
      }
      arrows.push_back(std::move(a));
    } else {
      throw fail(tokens[0], "unknown keyword '" + kw + "'");
    }
  }

  if (vertices.empty()) throw ParseError(line_no, 1, "no vertices");

  std::vector<RibbonGraph::Vertex> built;
  std::vector<int> placed(2 * edges.size(), 0);
  std::unordered_map<std::string, int> vertex_index;
  for (const auto& pv : vertices) {
    if (vertex_index.count(pv.name)) throw ParseError(pv.line, pv.column, "duplicate vertex '" + pv.name + "'");
    vertex_index[pv.name] = static_cast<int>(built.size());
    RibbonGraph::Vertex v{pv.name, {}};
    for (const auto& t : pv.halves) {
      auto it = half_index.find(t.text);
      if (it == half_index.end()) throw ParseError(pv.line, t.column, "unknown half-edge '" + t.text + "'");
      const int h = it->second.first;
      if (placed[h]++) throw ParseError(pv.line, t.column, "half-edge '" + t.text + "' used twice");
      v.rotation.push_back(h);
    }
    built.push_back(std::move(v));
  }
  for (std::size_t h = 0; h < placed.size(); ++h)
    if (!placed[h]) {
      const auto& e = edges[h / 2];
      throw ParseError(edge_pos[h / 2].first, edge_pos[h / 2].second,
                       "dangling half-edge '" + e.half_names[h % 2] + "' of edge '" + e.name + "'");
    }

  std::unordered_map<std::string, int> edge_index;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edge_index.count(edges[i].name))
      throw ParseError(edge_pos[i].first, edge_pos[i].second, "duplicate edge '" + edges[i].name + "'");
    edge_index[edges[i].name] = static_cast<int>(i);
  }

  ArrowStructure structure;
  for (const auto& a : arrows) {
    const std::string& spec = a.spec.text;
    auto first = spec.find(':');
    auto last = spec.rfind(':');
    auto bad = [&](const std::string& msg) { return ParseError(a.line, a.spec.column, msg); };
    if (first == std::string::npos || first == last) throw bad("arc must be v:<vertex>:<gap> or e:<edge>:<side>");
    const std::string kind = spec.substr(0, first);
    const std::string owner = spec.substr(first + 1, last - first - 1);
    int slot;
    try {
      std::size_t used = 0;
      slot = std::stoi(spec.substr(last + 1), &used);
      if (used != spec.size() - last - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw bad("arc slot must be an integer");
    }
    Arc arc;
    if (kind == "v") {
      auto it = vertex_index.find(owner);
      if (it == vertex_index.end()) throw bad("arrow on missing vertex '" + owner + "'");
      arc = {Arc::Kind::vertex_gap, it->second, slot};
      if (slot < 0 || slot >= std::max<int>(1, built[it->second].rotation.size())) throw bad("arrow on missing arc");
    } else if (kind == "e") {
      auto it = edge_index.find(owner);
      if (it == edge_index.end()) throw bad("arrow on missing edge '" + owner + "'");
      if (slot != 0 && slot != 1) throw bad("arrow on missing arc");
      arc = {Arc::Kind::edge_side, it->second, slot};
    } else {
      throw bad("arc kind must be 'v' or 'e'");
    }
    auto& word = structure[arc];
    word.insert(word.end(), a.directions.begin(), a.directions.end());
  }

  try {
    return RibbonGraph(std::move(built), std::move(edges), std::move(structure));
  } catch (const GraphError& e) {
    throw ParseError(line_no, 1, e.what());
  }
}

namespace {

std::string compact(const Poly& p) {
  std::string s = p.to_string();
  std::string out;
  for (char ch : s)
    if (ch != ' ') out.push_back(ch);
  return out;
}

}  // namespace

std::string serialize_rg(const RibbonGraph& g) {
  std::ostringstream os;
  for (const auto& v : g.vertices()) {
    os << "vertex " << v.name << ":";
    for (HalfEdge h : v.rotation) os << ' ' << g.edge(RibbonGraph::edge_of(h)).half_names[h % 2];
    os << '\n';
  }
  for (const auto& e : g.edges()) {
    os << "edge " << e.name << ": " << e.half_names[0] << ' ' << e.half_names[1];
    if (e.twist) os << " twist";
    if (!(e.attrs.weight_x == Poly(1))) os << " x=" << compact(e.attrs.weight_x);
    if (!(e.attrs.weight_y == Poly(1))) os << " y=" << compact(e.attrs.weight_y);
    if (e.attrs.sign) os << " sign=" << (*e.attrs.sign == Sign::positive ? '+' : '-');
    if (e.attrs.zero) os << " zero";
    if (e.attrs.phantom) os << " phantom";
    os << '\n';
  }
  for (const auto& [arc, word] : g.arrows()) {
    if (word.empty()) continue;
    if (arc.kind == Arc::Kind::vertex_gap)
      os << "arrow v:" << g.vertex(arc.owner).name << ':' << arc.slot;
    else
      os << "arrow e:" << g.edge(arc.owner).name << ':' << arc.slot;
    for (int d : word) os << ' ' << (d > 0 ? '+' : '-');
    os << '\n';
  }
  return os.str();
}

RibbonGraph read_rg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_rg(buf.str());
}

}  // namespace topotutte
