#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfish/hypergroupoid.hpp"
#include "hopfish/json_io.hpp"

using namespace hopfish;

namespace {

// The structural invariants every validated instance must satisfy.
void check_validated_invariants(const Hypergroupoid& h) {
  const StructureTensor& t = h.base;
  const std::size_t n = t.n;
  for (std::size_t g = 0; g < n; ++g) CHECK(t.e[g] <= 1);
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t hh = 0; hh < n; ++hh)
      for (std::size_t k = 0; k < n; ++k)
        if (t.at(g, hh, k) > 0) {
          CHECK(h.l[k] == h.l[g]);
          CHECK(h.r[k] == h.r[hh]);
        }
  for (std::size_t g = 0; g < n; ++g) {
    CHECK(t.at(g, h.sigma[g], h.l[g]) == 1);
    std::uint64_t unit_mass = 0;
    for (std::size_t u : h.units) unit_mass += t.at(g, h.sigma[g], u);
    CHECK(unit_mass == 1);
  }
}

}  // namespace

TEST_CASE("cyclic groups validate as groupoids with one unit") {
  for (std::size_t n : {1u, 2u, 3u, 4u}) {
    ValidationResult r = validate(cyclic_group_tensor(n));
    REQUIRE(r.ok());
    CHECK(is_groupoid(*r.value));
    CHECK(r.value->units.size() == 1);
    CHECK(involution_scan(*r.value));
    check_validated_invariants(*r.value);
    CHECK(to_algebra(*r.value).is_valid());
  }
}

TEST_CASE("discrete groupoids validate with every element a unit") {
  ValidationResult r = validate(discrete_groupoid_tensor(3));
  REQUIRE(r.ok());
  CHECK(is_groupoid(*r.value));
  CHECK(r.value->units.size() == 3);
  check_validated_invariants(*r.value);
}

TEST_CASE("Yang-Lee tensors are hypergroupoids but not groupoids") {
  for (std::uint64_t mult : {1u, 2u, 3u}) {
    ValidationResult r = validate(yang_lee_tensor(mult));
    REQUIRE(r.ok());
    CHECK_FALSE(is_groupoid(*r.value));
    CHECK(r.value->sigma == std::vector<std::size_t>{0, 1});
    check_validated_invariants(*r.value);
    CHECK(to_algebra(*r.value).is_valid());
  }
}

TEST_CASE("associativity failures are reported at stage one") {
  StructureTensor t = cyclic_group_tensor(2);
  t.at(1, 0, 1) = 2;  // (g e) e = 4g but g (e e) = 2g
  AssocCheck ac = check_associativity(t);
  CHECK_FALSE(ac.ok);
  ValidationResult r = validate(t);
  CHECK(r.stage == ValidationStage::not_sesquialgebra);
  REQUIRE(r.failure.has_value());
  CHECK(r.failure->axiom == "associativity");
}

TEST_CASE("the doubled tensor is a sesquialgebra but not hopfish") {
  StructureTensor t = StructureTensor::zeros(2);
  t.e = {1, 0};
  t.at(0, 0, 0) = 1;
  t.at(0, 1, 1) = 1;
  t.at(1, 0, 1) = 1;
  t.at(1, 1, 0) = 2;
  CHECK(check_associativity(t).ok);
  CHECK(check_counit(t));
  ValidationResult r = validate(t);
  CHECK_FALSE(r.ok());
  CHECK(r.stage == ValidationStage::not_hopfish);
  REQUIRE(r.failure.has_value());
  CHECK(r.failure->axiom == "inversion");
}

TEST_CASE("counit failures are reported at stage one") {
  StructureTensor t = cyclic_group_tensor(2);
  t.e = {1, 1};
  ValidationResult r = validate(t);
  CHECK(r.stage == ValidationStage::not_sesquialgebra);
}

TEST_CASE("overflow in the associativity convolution is detected") {
  StructureTensor t = StructureTensor::zeros(1);
  t.e = {1};
  t.at(0, 0, 0) = std::uint64_t(1) << 33;
  CHECK_THROWS_AS(check_associativity(t), std::overflow_error);
}

TEST_CASE("JSON round trip preserves validation verdict and instance") {
  for (const StructureTensor& t :
       {cyclic_group_tensor(3), yang_lee_tensor(2), discrete_groupoid_tensor(2)}) {
    StructureTensor back = structure_from_json(structure_to_json(t));
    CHECK(back == t);
    ValidationResult r1 = validate(t), r2 = validate(back);
    CHECK(r1.ok() == r2.ok());
    if (r1.ok()) {
      CHECK(r1.value->units == r2.value->units);
      CHECK(r1.value->sigma == r2.value->sigma);
      CHECK(r1.value->base == r2.value->base);
    }
  }
}

TEST_CASE("parser rejects malformed structures with positions") {
  CHECK_THROWS_AS(structure_from_json("not json"), ParseError);
  CHECK_THROWS_AS(structure_from_json(R"({"n":1,"e":[-1],"d":[[[0]]]})"),
                  ParseError);
  CHECK_THROWS_AS(
      structure_from_json(R"({"n":2,"e":[1,0],"d":[[[1,0],[0,1]],[[0,1]]]})"),
      ParseError);
  try {
    structure_from_json(R"({"n":1,"e":[0],"d":[[[-3]]]})");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position.find("d[0][0]") == 0);
  }
}
