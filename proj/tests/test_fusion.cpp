#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfish/fusion.hpp"

using namespace hopfish;

namespace {

Hypergroupoid validated(const StructureTensor& t) {
  ValidationResult r = validate(t);
  REQUIRE(r.ok());
  return *r.value;
}

const Rat kWidth = Rat(1) / Rat(1000000000000);

}  // namespace

TEST_CASE("Yang-Lee: golden-ratio dimension and obstruction") {
  FpReport r = fp_dimensions(validated(yang_lee_tensor(1)));
  REQUIRE(r.entries.size() == 2);
  const RootInterval& unit = r.entries[0].dimension;
  REQUIRE(unit.integer_value.has_value());
  CHECK(*unit.integer_value == 1);
  const RootInterval& tau = r.entries[1].dimension;
  CHECK(tau.hi - tau.lo < kWidth);
  CHECK_FALSE(tau.integer_value.has_value());
  CHECK(tau.lo > Rat(1618033988748) / Rat(1000000000000));
  CHECK(tau.hi < Rat(1618033988751) / Rat(1000000000000));
  CHECK(r.obstructed);
  CHECK(r.witnesses == std::vector<std::size_t>{1});
  ObstructionVerdict o = quasi_hopf_obstruction(validated(yang_lee_tensor(1)));
  CHECK(o.obstructed);
}

TEST_CASE("higher Yang-Lee multiplicities have dimension (m+sqrt(m^2+4))/2") {
  // m = 2: 1 + sqrt 2 = 2.41421356...; m = 3: (3 + sqrt 13)/2 = 3.30277...
  FpReport r2 = fp_dimensions(validated(yang_lee_tensor(2)));
  CHECK(r2.entries[1].dimension.lo > Rat(2414213562372) / Rat(1000000000000));
  CHECK(r2.entries[1].dimension.hi < Rat(2414213562374) / Rat(1000000000000));
  CHECK(r2.obstructed);
}

TEST_CASE("groupoids have all dimensions exactly 1 and no obstruction") {
  for (const StructureTensor& t :
       {cyclic_group_tensor(4), discrete_groupoid_tensor(3)}) {
    FpReport r = fp_dimensions(validated(t));
    for (const auto& e : r.entries) {
      REQUIRE(e.dimension.integer_value.has_value());
      CHECK(*e.dimension.integer_value == 1);
    }
    CHECK_FALSE(r.obstructed);
    CHECK_FALSE(quasi_hopf_obstruction(validated(t)).obstructed);
  }
}

TEST_CASE("the representation ring table reproduces the structure tensor") {
  for (const StructureTensor& t :
       {cyclic_group_tensor(3), yang_lee_tensor(1), yang_lee_tensor(3),
        discrete_groupoid_tensor(2)}) {
    Hypergroupoid h = validated(t);
    auto table = representation_ring_table(h);
    REQUIRE(table.size() == t.d.size());
    for (std::size_t i = 0; i < table.size(); ++i) CHECK(table[i] == t.d[i]);
  }
}

TEST_CASE("the dimension vector is a common Perron eigenvector") {
  for (const StructureTensor& t :
       {cyclic_group_tensor(3), yang_lee_tensor(1), yang_lee_tensor(2),
        discrete_groupoid_tensor(3)}) {
    CHECK(fp_eigenvector_consistent(fp_dimensions(validated(t))));
  }
}

TEST_CASE("multiplication matrices and characteristic polynomials") {
  FpReport r = fp_dimensions(validated(yang_lee_tensor(1)));
  // N_1 = [[0,1],[1,1]] in the (k,h) convention.
  CHECK(r.entries[1].mult_matrix == Mat{{0, 1}, {1, 1}});
  CHECK(r.entries[1].charpoly == IntPoly({-1, -1, 1}));
  CHECK(r.entries[0].mult_matrix.is_identity());
}
