#include <doctest.h>

#include "extfair/gen.hpp"
#include "extfair/io.hpp"
#include "extfair/transform.hpp"

using namespace extfair;

TEST_CASE("two dimensional instances round trip through json") {
  GenSpec spec;
  spec.n = 3;
  spec.m = 4;
  spec.kind = Kind::Mixed;
  spec.seed = 4;
  const Instance2D inst = gen_instance(spec);
  const Json doc = to_json(inst);
  CHECK(doc.at("schema") == kSchema2D);
  const Instance2D back = instance_2d_from_json(doc);
  CHECK(back.n == inst.n);
  CHECK(back.m == inst.m);
  CHECK(back.item_ids == inst.item_ids);
  CHECK(back.v == inst.v);
  CHECK(back.vprime == inst.vprime);
  // numbers are serialized as strings
  CHECK(doc.at("valuations").at(0).at("v").at(0).is_string());
}

TEST_CASE("one dimensional and transform documents round trip") {
  GenSpec spec;
  spec.n = 2;
  spec.m = 3;
  spec.kind = Kind::Chores;
  spec.seed = 13;
  const Instance2D inst = gen_instance(spec);
  const TransformResult tr = transform(inst);
  const Json doc = to_json(tr, inst.item_ids);
  CHECK(doc.at("schema") == kSchema1D);
  CHECK(doc.contains("shift"));
  const Instance1D back = instance_1d_from_json(doc);
  CHECK(back.w == tr.one_d.w);
  for (size_t i = 0; i < tr.shift.size(); ++i)
    CHECK(parse_rational(doc.at("shift").at(i).get<std::string>()) == tr.shift[i]);
}

TEST_CASE("allocations round trip and reject malformed input") {
  const Allocation a({0, 2, 1, 1});
  const Json doc = to_json(a);
  CHECK(doc.at("schema") == kSchemaAlloc);
  CHECK(allocation_from_json(doc) == a);
  Json bad = doc;
  bad["schema"] = "nope";
  CHECK_THROWS_AS(allocation_from_json(bad), Error);
}

TEST_CASE("full externality instances round trip") {
  FullInstance full;
  full.n = 2;
  full.m = 2;
  full.v_full = {Rational(1), Rational(2), Rational(3), Rational(4),
                 Rational(-1), Rational(1, 2), Rational(0), Rational(5)};
  const Json doc = to_json(full);
  CHECK(doc.at("schema") == kSchemaFull);
  const FullInstance back = instance_full_from_json(doc);
  CHECK(back.v_full == full.v_full);
}

TEST_CASE("schema dispatch and exact decimal input") {
  GenSpec spec;
  const Json doc2d = to_json(gen_instance(spec));
  CHECK(std::holds_alternative<Instance2D>(instance_from_json(doc2d)));
  Json decimals = doc2d;
  decimals["valuations"][0]["v"][0] = "0.5";
  CHECK(instance_2d_from_json(decimals).value(0, 0) == Rational(1, 2));
  Json broken = doc2d;
  broken["valuations"][0]["v"][0] = "not-a-number";
  CHECK_THROWS_AS(instance_2d_from_json(broken), Error);
}
