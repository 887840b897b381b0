#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "eiscycle/msym.hpp"
#include "eiscycle/serialize.hpp"

using namespace eis;

namespace {

ManinChain<Rat> unit_chain(const LevelContext& ctx, const GroupElem& g) {
  ManinChain<Rat> c;
  c.level = ctx.N();
  c.v.add(ctx.group_index(g), 1);
  return c;
}

bool reduces_to_zero(const RelationBasis& b, const ManinChain<Rat>& c) {
  for (const Rat& q : b.reduce(c, Rat(0)))
    if (q != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("relation quotient dimensions") {
  CHECK(RelationBasis(LevelContext(3)).dim() == 3);
  CHECK(RelationBasis(LevelContext(5)).dim() == 11);
  CHECK(RelationBasis(LevelContext(7)).dim() == 29);
}

TEST_CASE("reduce kills exactly the relations") {
  for (int N : {3, 5, 7}) {
    LevelContext ctx(N);
    RelationBasis basis(ctx);
    for (const GroupElem& g : ctx.group()) {
      ManinChain<Rat> two = unit_chain(ctx, g);
      two.v.add(ctx.group_index(ctx.mul(g, ctx.S())), 1);
      CHECK(reduces_to_zero(basis, two));

      ManinChain<Rat> three = unit_chain(ctx, g);
      GroupElem gU = ctx.mul(g, ctx.U());
      three.v.add(ctx.group_index(gU), 1);
      three.v.add(ctx.group_index(ctx.mul(gU, ctx.U())), 1);
      CHECK(reduces_to_zero(basis, three));
    }
  }
  // a single generator does not die
  LevelContext c3(3);
  RelationBasis b3(c3);
  CHECK_FALSE(reduces_to_zero(b3, unit_chain(c3, c3.canon_mat(1, 0, 0, 1))));
}

TEST_CASE("reduce is linear and idempotent on canonical coordinates") {
  LevelContext ctx(5);
  RelationBasis basis(ctx);
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pick(0, ctx.group_size() - 1);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 10; ++trial) {
    ManinChain<Rat> a, b;
    a.level = b.level = 5;
    for (int i = 0; i < 6; ++i) {
      a.v.add(pick(rng), coef(rng));
      b.v.add(pick(rng), coef(rng));
    }
    auto ra = basis.reduce(a, Rat(0));
    auto rb = basis.reduce(b, Rat(0));
    ManinChain<Rat> sum = a;
    sum.v += b.v;
    auto rs = basis.reduce(sum, Rat(0));
    for (size_t i = 0; i < ra.size(); ++i) CHECK(rs[i] == ra[i] + rb[i]);

    // rebuild a chain from coordinates: reduce must reproduce them
    ManinChain<Rat> canon;
    canon.level = 5;
    for (size_t i = 0; i < ra.size(); ++i)
      if (ra[i] != 0) canon.v.add(basis.basis_columns()[i], ra[i]);
    auto rc = basis.reduce(canon, Rat(0));
    CHECK(rc == ra);
  }
}

TEST_CASE("reduce rejects level mismatch") {
  LevelContext c3(3);
  RelationBasis b3(c3);
  ManinChain<Rat> wrong;
  wrong.level = 5;
  wrong.v.add(0, 1);
  CHECK_THROWS_AS(b3.reduce(wrong, Rat(0)), UsageError);
}

TEST_CASE("boundary of generators") {
  LevelContext ctx(3);
  GroupElem id = ctx.canon_mat(1, 0, 0, 1);
  auto d = boundary(unit_chain(ctx, id), ctx);
  CHECK(d.v.c.size() == 2);
  CHECK(d.v.c.at(ctx.cusp_index(ctx.canon(1, 0))) == 1);
  CHECK(d.v.c.at(ctx.cusp_index(ctx.canon(0, 1))) == -1);

  // relations map to the zero divisor, over the full enumeration
  for (int N : {3, 5, 7}) {
    LevelContext c(N);
    for (const GroupElem& g : c.group()) {
      ManinChain<Rat> two = unit_chain(c, g);
      two.v.add(c.group_index(c.mul(g, c.S())), 1);
      CHECK(boundary(two, c).v.empty());

      ManinChain<Rat> three = unit_chain(c, g);
      GroupElem gU = c.mul(g, c.U());
      three.v.add(c.group_index(gU), 1);
      three.v.add(c.group_index(c.mul(gU, c.U())), 1);
      CHECK(boundary(three, c).v.empty());
    }
  }
}

TEST_CASE("boundary rank and interior dimension") {
  struct Row {
    int N, rank;
  };
  for (Row r : {Row{3, 3}, Row{5, 11}, Row{7, 23}}) {
    LevelContext ctx(r.N);
    RelationBasis basis(ctx);
    CHECK(boundary_rank(ctx, basis) == r.rank);
    CHECK(boundary_rank(ctx, basis) == ctx.cusp_count() - 1);
    // kernel of delta on the quotient has dimension 2g
    CHECK(basis.dim() - boundary_rank(ctx, basis) == 2 * ctx.genus());
  }
}

TEST_CASE("interior dimension at larger levels") {
  for (int N : {9, 11, 13}) {
    LevelContext ctx(N);
    RelationBasis basis(ctx);
    CHECK((long)basis.dim() == ctx.expected_dim());
    CHECK(basis.dim() - boundary_rank(ctx, basis) == 2 * ctx.genus());
  }
}

TEST_CASE("cyclotomic JSON round trip") {
  FieldPtr f = CycloField::of(10);
  CycloElem x = CycloElem::root_of_unity(f, 3) * make_rat(-7, 2) +
                CycloElem::from_rat(f, make_rat(1, 3));
  CHECK(cyclo_from_json(to_json(x)) == x);
  json j = to_json(x);
  CHECK(j["order"] == 10);
  CHECK(j["coeffs"].size() == 4);
  j["coeffs"] = json::array({"1", "2"});
  CHECK_THROWS_AS(cyclo_from_json(j), UsageError);
}

TEST_CASE("relation basis cache round trip") {
  LevelContext ctx(5);
  RelationBasis basis(ctx);
  json j = relation_basis_to_json(basis, kCodeVersion);
  RelationBasis back = relation_basis_from_json(j, 5, kCodeVersion);
  CHECK(back.dim() == basis.dim());
  CHECK(back.basis_columns() == basis.basis_columns());
  for (int g = 0; g < basis.num_generators(); ++g)
    CHECK(back.coords(g) == basis.coords(g));
  CHECK_THROWS_AS(relation_basis_from_json(j, 7, kCodeVersion), UsageError);
  CHECK_THROWS_AS(relation_basis_from_json(j, 5, "other-version"), UsageError);

  auto dir = std::filesystem::temp_directory_path() / "eiscycle-test-cache";
  std::filesystem::remove_all(dir);
  RelationBasis built = load_or_build_basis(ctx, dir.string());
  CHECK(std::filesystem::exists(dir));
  std::string first;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    first.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  RelationBasis cached = load_or_build_basis(ctx, dir.string());
  CHECK(cached.dim() == built.dim());
  std::string second;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ifstream in(entry.path());
    second.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  CHECK(first == second);  // cache content is deterministic
  std::filesystem::remove_all(dir);
}
