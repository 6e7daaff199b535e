#include "minkarr/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

namespace minkarr::io {

namespace {

void reject_unknown_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; });
    if (!known) throw FormatError(path.empty() ? key : path + "." + key, "unknown key");
  }
}

const json& require(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw FormatError(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw FormatError(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw FormatError(path, "must be finite");
  return x;
}

Point point(const json& v, const std::string& path, std::size_t dim) {
  if (!v.is_array()) throw FormatError(path, "expected an array of coordinates");
  if (v.size() != dim) {
    throw FormatError(path, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
  }
  std::vector<double> c;
  for (std::size_t i = 0; i < v.size(); ++i) c.push_back(number(v[i], path + "[" + std::to_string(i) + "]"));
  return Point(std::move(c));
}

NormBody norm_from_json(const json& v, std::size_t dim) {
  if (!v.is_object()) throw FormatError("norm", "expected an object");
  reject_unknown_keys(v, "norm", {"kind", "vertices"});
  const json& kind = require(v, "norm", "kind");
  if (!kind.is_string()) throw FormatError("norm.kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k != "polygon" && v.contains("vertices")) throw FormatError("norm.vertices", "only allowed for polygon");
  if (k == "euclidean") return NormBody::euclidean(dim);
  if (k == "linf") return NormBody::linf(dim);
  if (k != "polygon") throw FormatError("norm.kind", "unknown norm kind '" + k + "'");
  if (dim != 2) throw FormatError("norm.kind", "polygon norms require dim 2");
  const json& verts = require(v, "norm", "vertices");
  if (!verts.is_array()) throw FormatError("norm.vertices", "expected an array");
  std::vector<Point> vs;
  for (std::size_t i = 0; i < verts.size(); ++i) vs.push_back(point(verts[i], "norm.vertices[" + std::to_string(i) + "]", 2));
  try {
    return NormBody::polygon(std::move(vs));
  } catch (const std::invalid_argument& e) {
    throw FormatError("norm.vertices", e.what());
  }
}

// Fixed 6-decimal rendering with negative zero folded to zero.
std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

json point_to_json(const Point& p) {
  json arr = json::array();
  for (double c : p.coords()) arr.push_back(c);
  return arr;
}

json instance_to_json(const Instance& inst) {
  json norm = {{"kind", to_string(inst.body().kind())}};
  if (inst.body().kind() == NormKind::Polygon) {
    json verts = json::array();
    for (const Point& v : inst.body().vertices()) verts.push_back(point_to_json(v));
    norm["vertices"] = std::move(verts);
  }
  json red = json::array();
  for (const Homothet& h : inst.red()) red.push_back({{"point", point_to_json(h.center())}, {"radius", h.ratio()}});
  json blue = json::array();
  for (const Point& b : inst.blue()) blue.push_back(point_to_json(b));
  return {{"dim", inst.body().dim()}, {"norm", std::move(norm)}, {"red", std::move(red)},
          {"blue", std::move(blue)}, {"lambda", inst.lambda()}};
}

Instance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("<document>", "expected a JSON object");
  reject_unknown_keys(doc, "", {"dim", "norm", "red", "blue", "lambda"});

  const json& dim_v = require(doc, "", "dim");
  if (!dim_v.is_number_integer() || dim_v.get<long long>() < 1) throw FormatError("dim", "expected a positive integer");
  const auto dim = static_cast<std::size_t>(dim_v.get<long long>());

  NormBody body = norm_from_json(require(doc, "", "norm"), dim);

  const json& red_v = require(doc, "", "red");
  if (!red_v.is_array() || red_v.empty()) throw FormatError("red", "expected a nonempty array");
  std::vector<Homothet> red;
  for (std::size_t i = 0; i < red_v.size(); ++i) {
    const std::string path = "red[" + std::to_string(i) + "]";
    const json& entry = red_v[i];
    if (!entry.is_object()) throw FormatError(path, "expected an object");
    reject_unknown_keys(entry, path, {"point", "radius"});
    Point p = point(require(entry, path, "point"), path + ".point", dim);
    const double r = number(require(entry, path, "radius"), path + ".radius");
    if (!(r > 0)) throw FormatError(path + ".radius", "must be positive");
    red.emplace_back(std::move(p), r);
  }

  const json& blue_v = require(doc, "", "blue");
  if (!blue_v.is_array()) throw FormatError("blue", "expected an array");
  std::vector<Point> blue;
  for (std::size_t i = 0; i < blue_v.size(); ++i) blue.push_back(point(blue_v[i], "blue[" + std::to_string(i) + "]", dim));

  const double lambda = number(require(doc, "", "lambda"), "lambda");
  if (!(lambda > 0)) throw FormatError("lambda", "must be positive");

  return Instance(std::move(body), std::move(red), std::move(blue), lambda);
}

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError("<document>", e.what());
  }
  return instance_from_json(doc);
}

std::string serialize_instance(const Instance& inst) { return instance_to_json(inst).dump(2) + "\n"; }

json to_json(const HypothesisReport& report) {
  json members = json::array();
  for (std::size_t i = 0; i < report.per_member.size(); ++i) {
    const MemberHypothesis& m = report.per_member[i];
    members.push_back({{"index", i}, {"red_count", m.red_count}, {"blue_count", m.blue_count}, {"satisfied", m.satisfied}});
  }
  return {{"all_satisfied", report.all_satisfied}, {"members", std::move(members)}};
}

json to_json(const Certificate& cert) {
  json per = json::array();
  for (std::size_t k = 0; k < cert.per_selected.size(); ++k) {
    per.push_back({{"index", cert.selected_indices[k]},
                   {"red_count", cert.per_selected[k].red_count},
                   {"blue_count", cert.per_selected[k].blue_count}});
  }
  return {{"selected", cert.selected_indices},
          {"per_selected", std::move(per)},
          {"depth_bound", cert.depth_bound},
          {"max_blue_depth", cert.max_blue_depth},
          {"chain", {cert.chain.red_sum, cert.chain.blue_sum_over_lambda, cert.chain.depth_bound_total}}};
}

json to_json(const DepthReport& report) {
  return {{"probe", point_to_json(report.probe)},
          {"depth", report.depth},
          {"containing_indices", report.containing_indices}};
}

json to_json(const CoverResult& cover) {
  return {{"selected", cover.selected_indices}, {"covered_by", cover.covered_by}};
}

json witnesses_to_json(const Counterexample& cx) {
  json arr = json::array();
  for (std::size_t i = 0; i < cx.witnesses.size(); ++i) {
    arr.push_back({{"red_index", i}, {"center", point_to_json(cx.witnesses[i].center())}, {"radius", cx.witnesses[i].ratio()}});
  }
  return {{"witnesses", std::move(arr)},
          {"blue_segment", {point_to_json(cx.blue_segment.a), point_to_json(cx.blue_segment.b)}},
          {"red_segment", {point_to_json(cx.red_segment.a), point_to_json(cx.red_segment.b)}},
          {"tangency", point_to_json(cx.tangency)}};
}

std::string render_svg(const Instance& inst, const std::vector<std::size_t>& selected) {
  const NormBody& body = inst.body();
  if (body.dim() != 2) throw std::invalid_argument("render_svg: only planar instances can be drawn");
  constexpr double kScale = 100.0;

  // Half-extent of the unit body along x and y.
  double ext_x = 1.0;
  double ext_y = 1.0;
  if (body.kind() == NormKind::Polygon) {
    ext_x = ext_y = 0.0;
    for (const Point& v : body.vertices()) {
      ext_x = std::max(ext_x, std::abs(v[0]));
      ext_y = std::max(ext_y, std::abs(v[1]));
    }
  }

  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  auto grow = [&](double x0, double y0, double x1, double y1) {
    min_x = std::min(min_x, x0);
    min_y = std::min(min_y, y0);
    max_x = std::max(max_x, x1);
    max_y = std::max(max_y, y1);
  };
  for (const Homothet& h : inst.red()) {
    const Point& c = h.center();
    grow(c[0] - h.ratio() * ext_x, c[1] - h.ratio() * ext_y, c[0] + h.ratio() * ext_x, c[1] + h.ratio() * ext_y);
  }
  for (const Point& b : inst.blue()) grow(b[0], b[1], b[0], b[1]);

  const double pad_x = 0.1 * (max_x - min_x);
  const double pad_y = 0.1 * (max_y - min_y);
  const double left = min_x - pad_x;
  const double top = max_y + pad_y;
  const double width = (max_x - min_x + 2 * pad_x) * kScale;
  const double height = (max_y - min_y + 2 * pad_y) * kScale;
  auto sx = [&](double x) { return fixed6((x - left) * kScale); };
  auto sy = [&](double y) { return fixed6((top - y) * kScale); };

  const std::set<std::size_t> shaded(selected.begin(), selected.end());
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed6(width) + "\" height=\"" +
         fixed6(height) + "\" viewBox=\"0 0 " + fixed6(width) + " " + fixed6(height) + "\">\n";

  for (std::size_t i = 0; i < inst.red().size(); ++i) {
    const Homothet& h = inst.red()[i];
    const std::string style = shaded.count(i)
                                  ? "fill=\"#9ecae1\" fill-opacity=\"0.5\" stroke=\"#3182bd\" stroke-width=\"1.5\""
                                  : "fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"";
    const Point& c = h.center();
    switch (body.kind()) {
      case NormKind::Euclidean:
        out += "  <circle cx=\"" + sx(c[0]) + "\" cy=\"" + sy(c[1]) + "\" r=\"" + fixed6(h.ratio() * kScale) + "\" " +
               style + "/>\n";
        break;
      case NormKind::Linf:
        out += "  <rect x=\"" + sx(c[0] - h.ratio()) + "\" y=\"" + sy(c[1] + h.ratio()) + "\" width=\"" +
               fixed6(2 * h.ratio() * kScale) + "\" height=\"" + fixed6(2 * h.ratio() * kScale) + "\" " + style + "/>\n";
        break;
      case NormKind::Polygon: {
        std::string pts;
        for (const Point& v : body.vertices()) {
          if (!pts.empty()) pts += ' ';
          pts += sx(c[0] + h.ratio() * v[0]) + "," + sy(c[1] + h.ratio() * v[1]);
        }
        out += "  <polygon points=\"" + pts + "\" " + style + "/>\n";
        break;
      }
    }
  }
  for (const Homothet& h : inst.red()) {
    out += "  <circle cx=\"" + sx(h.center()[0]) + "\" cy=\"" + sy(h.center()[1]) +
           "\" r=\"4.000000\" fill=\"white\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
  }
  for (const Point& b : inst.blue()) {
    out += "  <circle cx=\"" + sx(b[0]) + "\" cy=\"" + sy(b[1]) + "\" r=\"3.000000\" fill=\"#1f77b4\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace minkarr::io
