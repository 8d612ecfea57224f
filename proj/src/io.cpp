#include "cvn/io.hpp"

#include <fstream>
#include <sstream>

#include "cvn/error.hpp"

namespace cvn {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::string id_of(const Json& j, const char* what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad(std::string(what) + " must be a string or an integer");
}

Rational rational_of(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("lengths must be rational strings such as \"3/10\"");
}

}  // namespace

Word word_from_json(const Json& j, int rank) {
  if (!j.is_array()) bad("a word must be an array of signed integers");
  std::vector<Letter> letters;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad("a word must be an array of signed integers");
    long a = x.get<long>();
    if (a == 0 || a > rank || a < -rank) bad("letter " + std::to_string(a) + " outside rank " + std::to_string(rank));
    letters.push_back(static_cast<Letter>(a));
  }
  return Word(rank, letters);
}

Json word_to_json(const Word& w) {
  Json j = Json::array();
  for (Letter a : w.letters()) j.push_back(a);
  return j;
}

Json word_to_json(const ConjClass& c) { return word_to_json(c.rep()); }

Json words_to_json(const std::vector<ConjClass>& words) {
  Json j = Json::array();
  for (const auto& w : words) j.push_back(word_to_json(w));
  return j;
}

std::vector<ConjClass> classes_from_text(const std::string& text, int rank) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("direction is not JSON: ") + e.what());
  }
  if (!j.is_array()) bad("direction must be an array of words");
  std::vector<ConjClass> out;
  for (const auto& w : j) {
    Word word = word_from_json(w, rank);
    if (cyclic_reduction(word).empty()) throw Error(ErrorCode::TrivialClass, "direction contains a trivial word");
    out.emplace_back(word);
  }
  return out;
}

MarkedGraph graph_from_json(const Json& j) {
  if (!j.is_object()) bad("a marked graph must be a JSON object");
  MarkedGraph g;
  const Json& rank = field(j, "rank");
  if (!rank.is_number_integer() || rank.get<long>() < 1) bad("rank must be a positive integer");
  g.rank = rank.get<int>();
  const Json& vertices = field(j, "vertices");
  if (!vertices.is_array()) bad("vertices must be an array");
  for (const auto& v : vertices) g.vertices.push_back(id_of(v, "vertex id"));
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) bad("edges must be an array");
  for (const auto& e : edges) {
    if (!e.is_object()) bad("each edge must be an object");
    MarkedGraph::Edge edge;
    edge.id = id_of(field(e, "id"), "edge id");
    edge.from = id_of(field(e, "from"), "edge endpoint");
    edge.to = id_of(field(e, "to"), "edge endpoint");
    edge.length = rational_of(field(e, "length"));
    auto label = e.find("label");
    edge.label = label == e.end() || label->is_null() ? Word(g.rank) : word_from_json(*label, g.rank);
    g.edges.push_back(std::move(edge));
  }
  if (auto tree = j.find("tree"); tree != j.end()) {
    if (!tree->is_array()) bad("tree must be an array of edge ids");
    for (const auto& t : *tree) g.tree.push_back(id_of(t, "tree edge id"));
  }
  return g;
}

Json graph_to_json(const MarkedGraph& g) {
  Json j;
  j["rank"] = g.rank;
  j["vertices"] = g.vertices;
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    Json je;
    je["id"] = e.id;
    je["from"] = e.from;
    je["to"] = e.to;
    je["length"] = to_string(e.length);
    je["label"] = word_to_json(e.label);
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  j["tree"] = g.tree;
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path);
  out << text;
  if (!out) bad("write failed for " + path);
}

MarkedGraph read_graph_file(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    bad(path + ": " + e.what());
  }
  try {
    return graph_from_json(j);
  } catch (const Json::exception& e) {
    bad(path + ": " + e.what());
  }
}

SimplexPoint read_point_file(const std::string& path, Rational* scale) {
  return validate_and_normalize(read_graph_file(path), scale);
}

void put_rational(Json& obj, const std::string& key, const Rational& r) {
  obj[key] = to_string(r);
  obj[key + "_decimal"] = to_double(r);
}

Json exact_vector(const RVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json decimal_vector(const RVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_double(x));
  return j;
}

void put_vector(Json& obj, const std::string& key, const RVec& v) {
  obj[key] = exact_vector(v);
  obj[key + "_decimal"] = decimal_vector(v);
}

Json point_to_json(const SimplexPoint& p) {
  Json j;
  Json ids = Json::array();
  for (const auto& e : p.type->edges()) ids.push_back(e.id);
  j["edges"] = std::move(ids);
  put_vector(j, "lengths", p.lengths);
  return j;
}

Json halfspace_to_json(const HalfSpace& h) {
  Json j;
  j["provenance"] = provenance_name(h.provenance);
  if (h.word) j["word"] = word_to_json(*h.word);
  j["coeffs"] = exact_vector(h.coeffs);
  j["offset"] = to_string(h.offset);
  return j;
}

Json polytope_to_json(const Polytope& p) {
  Json j;
  j["dimension"] = p.dimension();
  Json exact = Json::array(), approx = Json::array();
  for (const auto& v : p.vertices()) {
    exact.push_back(exact_vector(v));
    approx.push_back(decimal_vector(v));
  }
  j["vertices"] = std::move(exact);
  j["vertices_decimal"] = std::move(approx);
  return j;
}

}  // namespace cvn
