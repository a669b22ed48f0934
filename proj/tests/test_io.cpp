#include <doctest.h>

#include <filesystem>

#include "fixtures.hpp"
#include "test_util.hpp"
#include "measalg/generator.hpp"
#include "measalg/io.hpp"

using namespace measalg;

namespace {

const std::filesystem::path kData = MEASALG_TEST_DATA;

}  // namespace

TEST_CASE("load named fixtures") {
  const auto s1 = io::load_space_file(kData / "s1.json");
  CHECK(*s1.space == *fixtures::s1());
  CHECK_FALSE(s1.metric);
  const auto phi = io::load_map_file(kData / "phi.json");
  CHECK(phi.map.point_fn() == fixtures::phi().point_fn());
  CHECK_FALSE(phi.has_metrics());
  const auto constant = io::load_map_file(kData / "constant_metric.json");
  CHECK(constant.has_metrics());
  CHECK(constant.source_metric->dist(0, 1) == 1);
}

TEST_CASE("space documents serialize in canonical form") {
  const auto doc = io::space_to_json(*fixtures::s1());
  CHECK(doc.dump() ==
        R"({"points":["p1","p2","p3","p4"],"atoms":[["p1","p2"],["p3"],["p4"]],)"
        R"("weights":["1/2","1/3","0"]})");
}

TEST_CASE("load errors carry their kind") {
  CHECK(kind_of([] { io::load_space_file(kData / "overlap.json"); }) ==
        ErrorKind::PartitionOverlap);
  CHECK(kind_of([] { io::load_space_file(kData / "bad_weight.json"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::load_space_file(kData / "malformed.json"); }) == ErrorKind::ParseError);
  CHECK(kind_of([] { io::load_space_file(kData / "missing.json"); }) == ErrorKind::IoError);
  CHECK(kind_of([] { io::load_map_file(kData / "not_measurable.json"); }) ==
        ErrorKind::NotMeasurable);
  CHECK(kind_of([] { io::space_from_json(io::parse_json(R"({"points":["a"]})")); }) ==
        ErrorKind::ParseError);
  CHECK(kind_of([] {
          io::space_from_json(io::parse_json(R"({"points":["a"],"atoms":[["a"]],"weights":[1]})"));
        }) == ErrorKind::ParseError);
}

TEST_CASE("random maps round-trip through JSON") {
  GeneratorConfig config;
  for (std::uint64_t trial = 0; trial < 60; ++trial) {
    InstanceRng rng(909, trial);
    const auto map = random_instance(rng, config);
    const auto doc = io::map_to_json(map);
    const auto text = doc.dump();
    const auto back = io::map_from_json(io::parse_json(text), kData);
    CHECK(*back.map.source() == *map.source());
    CHECK(*back.map.target() == *map.target());
    CHECK(back.map.point_fn() == map.point_fn());
    CHECK(io::map_to_json(back.map).dump() == text);
  }
}

TEST_CASE("metric spaces round-trip through JSON") {
  const auto m = make_discrete_metric_space({"a", "b", "c"}, {fixtures::q(1), fixtures::q(0),
                                            ExtRational::infinity()},
                                            {Rational(1), Rational(3, 2), Rational(1)});
  const auto doc = io::space_to_json(*m);
  const auto back = io::space_from_json(io::parse_json(doc.dump()));
  REQUIRE(back.metric);
  CHECK(back.metric->upper_triangular() == m->upper_triangular());
  CHECK(*back.space == *m->base());
  CHECK(doc["weights"].back() == "inf");
}
