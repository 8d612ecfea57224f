#include "cvn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include "cvn/error.hpp"

namespace cvn {

namespace {

using Pt = std::array<Rational, 2>;
using Frame = std::vector<Pt>;  // lattice corner of each edge of a type

constexpr double kScale = 240.0;
constexpr double kMargin = 30.0;
constexpr double kHeight = 0.86602540378443864676;  // sqrt(3) / 2

Pt add(const Pt& a, const Pt& b) { return {a[0] + b[0], a[1] + b[1]}; }
Pt sub(const Pt& a, const Pt& b) { return {a[0] - b[0], a[1] - b[1]}; }

Pt lattice(const RVec& x, const Frame& frame) {
  Pt p{Rational(0), Rational(0)};
  for (std::size_t e = 0; e < x.size(); ++e) p = add(p, {x[e] * frame[e][0], x[e] * frame[e][1]});
  return p;
}

std::string fixed(const Pt& p) { return to_fixed(p[0], 9) + "," + to_fixed(p[1], 9); }

std::array<double, 2> screen(const Pt& p, double ox, double oy) {
  double u = to_double(p[0]), v = to_double(p[1]);
  return {ox + kScale * (u + v / 2), oy - kScale * kHeight * v};
}

std::string num(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", d);
  return buf;
}

// Coordinates of p in the closed simplex of h, if p lies there.
std::optional<RVec> closed_coords(const TopologicalType& h, const SimplexPoint& p) {
  const std::size_t ne = h.num_edges();
  if (p.type->num_edges() == ne) {
    auto iso = find_isomorphism(h, *p.type);
    if (!iso) return std::nullopt;
    RVec x(ne);
    for (std::size_t e = 0; e < ne; ++e) x[e] = p.lengths[edge_index(iso->edge_map[e])];
    return x;
  }
  if (p.type->num_edges() + 1 != ne) return std::nullopt;
  for (std::size_t k = 0; k < ne; ++k) {
    if (h.edge(k).from == h.edge(k).to) continue;
    FaceMap fm = collapse_forest(h, {static_cast<int>(k)});
    auto iso = find_isomorphism(*fm.face, *p.type);
    if (!iso) continue;
    RVec x(ne, Rational(0));
    for (std::size_t e = 0; e < ne; ++e)
      if (fm.edge_map[e] >= 0) x[e] = p.lengths[edge_index(iso->edge_map[fm.edge_map[e]])];
    return x;
  }
  return std::nullopt;
}

class Layout {
 public:
  // Frame of t: an exact match of a drawn triangle, or a drawn triangle edge
  // for a rose face.
  std::optional<Frame> frame(const TopologicalType& t) const {
    for (const auto& [type, corners] : placed_) {
      if (type->num_edges() == t.num_edges()) {
        if (auto iso = find_isomorphism(t, *type)) {
          Frame f(t.num_edges());
          for (std::size_t e = 0; e < t.num_edges(); ++e) f[e] = corners[edge_index(iso->edge_map[e])];
          return f;
        }
      } else if (type->num_edges() == t.num_edges() + 1) {
        if (auto f = face_frame(*type, corners, t)) return f;
      }
    }
    return std::nullopt;
  }

  Frame place(const TypePtr& t) {
    if (t->rank() != 2) throw Error(ErrorCode::Unsupported, "drawings are rank 2 only");
    if (auto f = frame(*t)) return *f;
    if (t->num_edges() == 3) {
      for (std::size_t i = 0; i < placed_.size(); ++i) {
        if (placed_[i].first->num_edges() != 3) continue;
        for (std::size_t k = 0; k < 3; ++k) {
          if (t->edge(k).from == t->edge(k).to) continue;
          FaceMap fm = collapse_forest(*t, {static_cast<int>(k)});
          auto shared = face_frame(*placed_[i].first, placed_[i].second, *fm.face);
          if (!shared) continue;
          Frame f(3);
          std::vector<Pt> base;
          for (std::size_t e = 0; e < 3; ++e)
            if (fm.edge_map[e] >= 0) {
              f[e] = (*shared)[fm.edge_map[e]];
              base.push_back(f[e]);
            }
          const Pt& far = opposite(placed_[i].second, base);
          f[k] = sub(add(base[0], base[1]), far);
          if (occupied_.insert(signature(f)).second) {
            placed_.emplace_back(t, f);
            return f;
          }
        }
      }
    }
    Frame f = fresh(t->num_edges());
    if (t->num_edges() == 3) occupied_.insert(signature(f));
    placed_.emplace_back(t, f);
    return f;
  }

  const std::vector<std::pair<TypePtr, Frame>>& placed() const { return placed_; }

 private:
  static std::optional<Frame> face_frame(const TopologicalType& host, const Frame& corners, const TopologicalType& t) {
    for (std::size_t k = 0; k < host.num_edges(); ++k) {
      if (host.edge(k).from == host.edge(k).to) continue;
      FaceMap fm = collapse_forest(host, {static_cast<int>(k)});
      auto iso = find_isomorphism(t, *fm.face);
      if (!iso) continue;
      Frame f(t.num_edges());
      for (std::size_t e = 0; e < t.num_edges(); ++e) {
        int fe = edge_index(iso->edge_map[e]);
        for (std::size_t he = 0; he < host.num_edges(); ++he)
          if (fm.edge_map[he] == fe) f[e] = corners[he];
      }
      return f;
    }
    return std::nullopt;
  }

  static const Pt& opposite(const Frame& tri, const std::vector<Pt>& base) {
    for (const auto& c : tri)
      if (c != base[0] && c != base[1]) return c;
    throw Error(ErrorCode::Unsupported, "degenerate triangle in layout");
  }

  static std::vector<Pt> signature(Frame f) {
    std::sort(f.begin(), f.end());
    return f;
  }

  Frame fresh(std::size_t edges) {
    Rational u0 = 0;
    if (!placed_.empty()) {
      Rational right = placed_.front().second.front()[0];
      for (const auto& [type, corners] : placed_)
        for (const auto& c : corners) right = std::max(right, Rational(c[0] + c[1]));
      u0 = right + 1;
    }
    Frame f{{u0, Rational(0)}, {u0 + 1, Rational(0)}};
    if (edges == 3) f.push_back({u0, Rational(1)});
    return f;
  }

  std::vector<std::pair<TypePtr, Frame>> placed_;
  std::set<std::vector<Pt>> occupied_;
};

// Counterclockwise order of a planar convex polygon's vertices in lattice coordinates.
std::vector<std::size_t> cyclic_order(const std::vector<Pt>& pts) {
  std::vector<std::size_t> idx(pts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  if (pts.size() < 3) return idx;
  Pt c{Rational(0), Rational(0)};
  for (const auto& p : pts) c = add(c, p);
  c = {c[0] / static_cast<long>(pts.size()), c[1] / static_cast<long>(pts.size())};
  auto half = [&](const Pt& d) { return d[1] < 0 || (d[1] == 0 && d[0] < 0); };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    Pt da = sub(pts[a], c), db = sub(pts[b], c);
    bool ha = half(da), hb = half(db);
    if (ha != hb) return !ha;
    return da[0] * db[1] - da[1] * db[0] > 0;
  });
  return idx;
}

std::string encode_vertices(const std::vector<RVec>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ';';
    for (std::size_t k = 0; k < vs[i].size(); ++k) s += (k ? " " : "") + to_string(vs[i][k]);
  }
  return s;
}

std::string encode_corners(const Frame& f) {
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? ";" : "") + to_string(f[i][0]) + " " + to_string(f[i][1]);
  return s;
}

class Canvas {
 public:
  explicit Canvas(const Layout& layout) {
    bool first = true;
    for (const auto& [type, corners] : layout.placed())
      for (const auto& c : corners) {
        double x = to_double(c[0]) + to_double(c[1]) / 2, y = to_double(c[1]) * kHeight;
        if (first) {
          min_x_ = max_x_ = x;
          min_y_ = max_y_ = y;
          first = false;
        }
        min_x_ = std::min(min_x_, x);
        max_x_ = std::max(max_x_, x);
        min_y_ = std::min(min_y_, y);
        max_y_ = std::max(max_y_, y);
      }
    ox_ = kMargin - kScale * min_x_;
    oy_ = kMargin + kScale * max_y_;
  }

  std::string open() const {
    double w = kScale * (max_x_ - min_x_) + 2 * kMargin, h = kScale * (max_y_ - min_y_) + 2 * kMargin;
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(w) << "\" height=\"" << num(h)
      << "\" viewBox=\"0 0 " << num(w) << ' ' << num(h) << "\">\n"
      << "<g transform=\"matrix(" << num(kScale) << " 0 " << num(kScale / 2) << ' ' << num(-kScale * kHeight) << ' '
      << num(ox_) << ' ' << num(oy_) << ")\">\n";
    return s.str();
  }

  std::string marker(const Pt& p, const std::string& label) const {
    auto [x, y] = screen(p, ox_, oy_);
    return "<circle class=\"marker\" cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"3\" fill=\"black\"/>\n" +
           "<text x=\"" + num(x + 5) + "\" y=\"" + num(y - 5) + "\" font-size=\"14\">" + label + "</text>\n";
  }

 private:
  double min_x_ = 0, max_x_ = 1, min_y_ = 0, max_y_ = 1, ox_ = 0, oy_ = 0;
};

const char* kStroke = " fill=\"none\" stroke=\"black\" vector-effect=\"non-scaling-stroke\"";

std::string simplex_outline(std::size_t i, const Frame& f) {
  std::string pts;
  for (std::size_t k = 0; k < f.size(); ++k) pts += (k ? " " : "") + fixed(f[k]);
  return std::string(f.size() == 3 ? "<polygon" : "<polyline") + " class=\"simplex\" data-simplex=\"" +
         std::to_string(i) + "\" points=\"" + pts + "\"" + kStroke + "/>\n";
}

void draw_markers(std::ostringstream& s, const Layout& layout, const Canvas& canvas,
                  const std::vector<SvgMarker>& markers) {
  for (const auto& m : markers)
    for (const auto& [type, corners] : layout.placed())
      if (auto x = closed_coords(*type, m.point)) {
        s << canvas.marker(lattice(*x, corners), m.label);
        break;
      }
}

}  // namespace

std::string lattice_point_text(const RVec& x, const std::vector<std::array<Rational, 2>>& corners) {
  return fixed(lattice(x, corners));
}

std::string envelope_svg(const std::vector<SvgSlice>& slices, const std::vector<SvgMarker>& markers) {
  Layout layout;
  for (const auto& s : slices)
    if (s.simplex->num_edges() == 3) layout.place(s.simplex);
  std::vector<Frame> frames;
  for (const auto& s : slices) frames.push_back(layout.place(s.simplex));
  for (const auto& m : markers) layout.place(m.point.type);

  Canvas canvas(layout);
  std::ostringstream out;
  out << canvas.open();
  for (std::size_t i = 0; i < layout.placed().size(); ++i) out << simplex_outline(i, layout.placed()[i].second);
  for (std::size_t i = 0; i < slices.size(); ++i) {
    const Polytope& p = slices[i].polytope;
    if (p.empty()) continue;
    std::vector<Pt> pts;
    for (const auto& v : p.vertices()) pts.push_back(lattice(v, frames[i]));
    std::string drawn;
    if (p.dimension() == 2) {
      for (std::size_t k : cyclic_order(pts)) drawn += (drawn.empty() ? "" : " ") + fixed(pts[k]);
    } else {
      for (const auto& q : pts) drawn += (drawn.empty() ? "" : " ") + fixed(q);
      if (pts.size() == 1) drawn += " " + fixed(pts[0]);
    }
    const bool area = p.dimension() == 2;
    out << (area ? "<polygon" : "<polyline") << " class=\"envelope\" data-simplex=\"" << i << "\" data-dimension=\""
        << p.dimension() << "\" data-corners=\"" << encode_corners(frames[i]) << "\" data-vertices=\""
        << encode_vertices(p.vertices()) << "\" points=\"" << drawn << "\""
        << (area ? " fill=\"#8c9eff\" fill-opacity=\"0.7\" stroke=\"#3949ab\""
                 : " fill=\"none\" stroke=\"#3949ab\" stroke-width=\"4\" stroke-linecap=\"round\"")
        << " vector-effect=\"non-scaling-stroke\"/>\n";
  }
  out << "</g>\n";
  draw_markers(out, layout, canvas, markers);
  out << "</svg>\n";
  return out.str();
}

std::string path_svg(const std::vector<SimplexPoint>& breakpoints, const std::vector<SvgMarker>& markers) {
  Layout layout;
  struct Piece {
    TypePtr host;
    RVec from, to;
  };
  std::vector<Piece> pieces;
  for (std::size_t k = 0; k + 1 < breakpoints.size(); ++k) {
    const auto& p = breakpoints[k];
    const auto& q = breakpoints[k + 1];
    std::vector<TypePtr> hosts{p.type, q.type};
    for (const auto* x : {&p, &q})
      for (const auto& c : maximal_cofaces(*x->type)) hosts.push_back(c.type);
    std::optional<Piece> piece;
    for (const auto& h : hosts) {
      if (h->num_edges() != 3) continue;
      auto a = closed_coords(*h, p), b = closed_coords(*h, q);
      if (a && b) {
        piece = Piece{h, *a, *b};
        break;
      }
    }
    if (!piece) throw Error(ErrorCode::NotAGeodesic, "consecutive breakpoints share no closed simplex");
    layout.place(piece->host);
    pieces.push_back(std::move(*piece));
  }
  for (const auto& p : breakpoints) layout.place(p.type);

  Canvas canvas(layout);
  std::ostringstream out;
  out << canvas.open();
  for (std::size_t i = 0; i < layout.placed().size(); ++i) out << simplex_outline(i, layout.placed()[i].second);
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    Frame f = *layout.frame(*pieces[k].host);
    out << "<polyline class=\"segment\" data-segment=\"" << k << "\" data-corners=\"" << encode_corners(f)
        << "\" data-vertices=\"" << encode_vertices({pieces[k].from, pieces[k].to}) << "\" points=\""
        << fixed(lattice(pieces[k].from, f)) << ' ' << fixed(lattice(pieces[k].to, f))
        << "\" fill=\"none\" stroke=\"#c62828\" stroke-width=\"2\" vector-effect=\"non-scaling-stroke\"/>\n";
  }
  out << "</g>\n";
  std::vector<SvgMarker> all = markers;
  for (std::size_t k = 0; k < breakpoints.size(); ++k) all.push_back({breakpoints[k], ""});
  draw_markers(out, layout, canvas, all);
  out << "</svg>\n";
  return out.str();
}

std::vector<SvgShape> read_svg_shapes(const std::string& svg) {
  static const std::regex element("<(polygon|polyline) class=\"envelope\"[^>]*>");
  auto attr = [](const std::string& el, const std::string& name) {
    std::smatch m;
    if (!std::regex_search(el, m, std::regex(" " + name + "=\"([^\"]*)\"")))
      throw Error(ErrorCode::ParseError, "missing attribute " + name);
    return m[1].str();
  };
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    for (std::string part; std::getline(ss, part, sep);) parts.push_back(part);
    return parts;
  };
  std::vector<SvgShape> shapes;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), element); it != std::sregex_iterator(); ++it) {
    const std::string el = it->str();
    SvgShape s;
    s.simplex = std::stoul(attr(el, "data-simplex"));
    for (const auto& v : split(attr(el, "data-vertices"), ';')) {
      RVec x;
      for (const auto& c : split(v, ' ')) x.push_back(parse_rational(c));
      s.vertices.push_back(std::move(x));
    }
    for (const auto& c : split(attr(el, "data-corners"), ';')) {
      auto uv = split(c, ' ');
      if (uv.size() != 2) throw Error(ErrorCode::ParseError, "bad corner " + c);
      s.corners.push_back({parse_rational(uv[0]), parse_rational(uv[1])});
    }
    s.drawn = split(attr(el, "points"), ' ');
    shapes.push_back(std::move(s));
  }
  return shapes;
}

}  // namespace cvn
