#include "minkarr/io.hpp"

#include <gtest/gtest.h>

#include "minkarr/generators.hpp"

namespace minkarr::io {
namespace {

std::string expect_format_error(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const FormatError& e) {
    return e.key();
  }
  ADD_FAILURE() << "no FormatError for: " << text;
  return {};
}

TEST(InstanceJson, ParsesMinimalDocument) {
  const Instance inst = parse_instance(R"({
    "dim": 2, "norm": {"kind": "euclidean"},
    "red": [{"point": [0, 0], "radius": 1}], "blue": [[0.5, 0]], "lambda": 1})");
  EXPECT_EQ(inst.body().kind(), NormKind::Euclidean);
  EXPECT_EQ(inst.red().size(), 1u);
  EXPECT_EQ(inst.blue().front(), (Point{0.5, 0}));
}

TEST(InstanceJson, PolygonNorm) {
  const Instance inst = parse_instance(R"({
    "dim": 2, "norm": {"kind": "polygon", "vertices": [[1,-1],[1,1],[-1,1],[-1,-1]]},
    "red": [{"point": [0, 0], "radius": 1}], "blue": [], "lambda": 2.5})");
  EXPECT_EQ(inst.body().kind(), NormKind::Polygon);
  EXPECT_EQ(inst.body().vertices().size(), 4u);
  EXPECT_EQ(inst.lambda(), 2.5);
}

TEST(InstanceJson, ErrorsNameTheOffendingKey) {
  EXPECT_EQ(expect_format_error("{not json"), "<document>");
  EXPECT_EQ(expect_format_error("[]"), "<document>");
  EXPECT_EQ(expect_format_error(R"({"dim":2,"norm":{"kind":"euclidean"},"red":[{"point":[0,0],"radius":1}],"blue":[],"lambda":1,"extra":0})"),
            "extra");
  EXPECT_EQ(expect_format_error(R"({"norm":{"kind":"euclidean"},"red":[{"point":[0,0],"radius":1}],"blue":[],"lambda":1})"),
            "dim");
  EXPECT_EQ(expect_format_error(R"({"dim":2.5,"norm":{"kind":"euclidean"},"red":[{"point":[0,0],"radius":1}],"blue":[],"lambda":1})"),
            "dim");
  EXPECT_EQ(expect_format_error(R"({"dim":2,"norm":{"kind":"l1"},"red":[{"point":[0,0],"radius":1}],"blue":[],"lambda":1})"),
            "norm.kind");
  EXPECT_EQ(expect_format_error(R"({"dim":2,"norm":{"kind":"euclidean","vertices":[]},"red":[{"point":[0,0],"radius":1}],"blue":[],"lambda":1})"),
            "norm.vertices");
  EXPECT_EQ(expect_format_error(R"({"dim":2,"norm":{"kind":"polygon","vertices":[[1,1],[1,-1],[-1,-1],[-1,1]]},"red":[{"point":[0,0],"radius":1}],"blue":[],"lambda":1})"),
            "norm.vertices");
  EXPECT_EQ(expect_format_error(R"({"dim":3,"norm":{"kind":"polygon","vertices":[]},"red":[{"point":[0,0,0],"radius":1}],"blue":[],"lambda":1})"),
            "norm.kind");
  EXPECT_EQ(expect_format_error(R"({"dim":2,"norm":{"kind":"euclidean"},"red":[],"blue":[],"lambda":1})"), "red");
  EXPECT_EQ(expect_format_error(R"({"dim":2,"norm":{"kind":"euclidean"},"red":[{"point":[0,0],"radius":1},{"point":[0,0],"radius":-1}],"blue":[],"lambda":1})"),
            "red[1].radius");
  EXPECT_EQ(expect_format_error(R"({"dim":2,"norm":{"kind":"euclidean"},"red":[{"point":[0,0],"radius":1,"color":"r"}],"blue":[],"lambda":1})"),
            "red[0].color");
  EXPECT_EQ(expect_format_error(R"({"dim":2,"norm":{"kind":"euclidean"},"red":[{"point":[0],"radius":1}],"blue":[],"lambda":1})"),
            "red[0].point");
  EXPECT_EQ(expect_format_error(R"({"dim":2,"norm":{"kind":"euclidean"},"red":[{"point":[0,0],"radius":1}],"blue":[[0,"x"]],"lambda":1})"),
            "blue[0][1]");
  EXPECT_EQ(expect_format_error(R"({"dim":2,"norm":{"kind":"euclidean"},"red":[{"point":[0,0],"radius":1}],"blue":[],"lambda":0})"),
            "lambda");
}

TEST(InstanceJson, RoundTripsGeneratorOutputs) {
  std::vector<Instance> all{gen_pentagon_tight(), gen_hypercube_tight(3),
                            gen_counterexample(NormBody::euclidean(2), 3, 0.5, 20).instance};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.n_red = 1 + seed % 17;
    spec.dim = 1 + seed % 3;
    spec.kind = seed % 2 ? NormKind::Linf : NormKind::Euclidean;
    spec.lambda = 1.0 / 3.0 + static_cast<double>(seed);
    all.push_back(gen_random(spec));
  }
  for (const Instance& inst : all) EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
}

TEST(ReportJson, CertificateFields) {
  const Certificate c = make_certificate(gen_pentagon_tight(), 5);
  const json j = to_json(c);
  EXPECT_EQ(j["chain"], json({5.0, 5.0, 5.0}));
  EXPECT_EQ(j["depth_bound"], 5);
  EXPECT_EQ(j["max_blue_depth"], 5);
  EXPECT_EQ(j["selected"].size(), 5u);
}

TEST(Svg, DeterministicAndShaded) {
  const Instance inst = gen_pentagon_tight();
  const std::string a = render_svg(inst, {0, 1, 2, 3, 4});
  EXPECT_EQ(a, render_svg(inst, {0, 1, 2, 3, 4}));
  EXPECT_EQ(a.rfind("<?xml", 0), 0u);
  std::size_t shaded = 0;
  for (std::size_t p = a.find("fill-opacity"); p != std::string::npos; p = a.find("fill-opacity", p + 1)) ++shaded;
  EXPECT_EQ(shaded, 5u);
  // Five hollow red centers and one filled blue point.
  std::size_t hollow = 0;
  for (std::size_t p = a.find("fill=\"white\""); p != std::string::npos; p = a.find("fill=\"white\"", p + 1)) ++hollow;
  EXPECT_EQ(hollow, 5u);
  EXPECT_NE(a.find("fill=\"#1f77b4\""), std::string::npos);
}

TEST(Svg, ScaleAndPadding) {
  // One unit disk at the origin: bbox [-1,1]^2, padded by 0.2 each side.
  const Instance inst(NormBody::euclidean(2), {Homothet(Point{0, 0}, 1)}, {}, 1.0);
  const std::string s = render_svg(inst);
  EXPECT_NE(s.find("width=\"240.000000\" height=\"240.000000\""), std::string::npos);
  EXPECT_NE(s.find("<circle cx=\"120.000000\" cy=\"120.000000\" r=\"100.000000\""), std::string::npos);
}

TEST(Svg, SquaresAndPolygons) {
  EXPECT_NE(render_svg(gen_hypercube_tight(2)).find("<rect"), std::string::npos);
  const Instance poly(NormBody::polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}}), {Homothet(Point{0, 0}, 1)}, {}, 1.0);
  EXPECT_NE(render_svg(poly).find("<polygon"), std::string::npos);
  EXPECT_THROW(render_svg(gen_hypercube_tight(3)), std::invalid_argument);
}

}  // namespace
}  // namespace minkarr::io
