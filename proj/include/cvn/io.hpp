#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "cvn/free_group.hpp"
#include "cvn/marked_graph.hpp"
#include "cvn/polytope.hpp"
#include "cvn/rational.hpp"

namespace cvn {

using Json = nlohmann::ordered_json;

// Marked graph documents. Lengths are "p/q" strings; labels and words are
// arrays of signed generator indices. Malformed input throws ParseError.
MarkedGraph graph_from_json(const Json& j);
Json graph_to_json(const MarkedGraph& g);
MarkedGraph read_graph_file(const std::string& path);
// Parses and normalizes; `scale` receives the volume that was divided out.
SimplexPoint read_point_file(const std::string& path, Rational* scale = nullptr);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Word word_from_json(const Json& j, int rank);
Json word_to_json(const Word& w);
Json word_to_json(const ConjClass& c);
Json words_to_json(const std::vector<ConjClass>& words);
// "[[1],[1,-2]]" style direction lists.
std::vector<ConjClass> classes_from_text(const std::string& text, int rank);

// Exact string and a double side by side: {key: "p/q", key_decimal: d}.
void put_rational(Json& obj, const std::string& key, const Rational& r);
void put_vector(Json& obj, const std::string& key, const RVec& v);
Json exact_vector(const RVec& v);
Json decimal_vector(const RVec& v);

Json point_to_json(const SimplexPoint& p);
Json halfspace_to_json(const HalfSpace& h);
// Vertices in the polytope's lexicographic order, exact and decimal.
Json polytope_to_json(const Polytope& p);

}  // namespace cvn
