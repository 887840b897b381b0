#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <random>

#include "eiscycle/hecke.hpp"

using namespace eis;

namespace {

IntMat2 mat(long a, long b, long c, long d) { return {a, b, c, d}; }

bool has_matrix(const HeckeFamily& fam, const IntMat2& m) {
  IntMat2 k = m.canon_pm();
  for (const auto& [w, M] : fam.terms)
    if (M.canon_pm() == k) return true;
  return false;
}

}  // namespace

TEST_CASE("heilbronn enumeration") {
  HeckeFamily h2 = heilbronn_family(2);
  CHECK(h2.terms.size() == 4);
  for (auto m : {mat(1, 0, 0, 2), mat(2, 0, 0, 1), mat(2, 1, 0, 1), mat(1, 0, 1, 2)})
    CHECK(has_matrix(h2, m));

  HeckeFamily h3 = heilbronn_family(3);
  CHECK(h3.terms.size() == 7);
  CHECK(has_matrix(h3, mat(2, 1, 1, 2)));

  CHECK(heilbronn_family(7).terms.size() == 25);
}

TEST_CASE("coset condition") {
  for (long l : {2L, 3L, 5L, 7L, 11L, 13L, 29L, 31L}) {
    HeckeFamily fam = heilbronn_family(l);
    CmReport rep = verify_Cm(fam);
    CHECK(rep.pass);
    CHECK(rep.num_classes == l + 1);
  }
  CmReport id = verify_Cm(identity_family());
  CHECK(id.pass);
  CHECK(id.num_classes == 1);

  // a family that misses a coset fails with a report
  HeckeFamily broken;
  broken.m = 2;
  broken.terms.push_back({Rat(1), mat(1, 0, 0, 2)});
  CmReport rep = verify_Cm(broken);
  CHECK_FALSE(rep.pass);
  CHECK(!rep.failure.empty());
}

TEST_CASE("c symmetrization") {
  HeckeFamily h3 = heilbronn_family(3);
  CHECK_FALSE(commutes_with_c(h3));
  HeckeFamily s3 = symmetrize_c(h3);
  CHECK(s3.commutes_with_c);
  CHECK(s3.satisfies_Cm);
  // idempotent as a weighted multiset
  HeckeFamily s3s = symmetrize_c(s3);
  auto key = [](const HeckeFamily& f) {
    std::map<std::string, Rat> ms;
    for (const auto& [w, M] : f.terms) ms[M.canon_pm().str()] += w;
    return ms;
  };
  CHECK(key(s3s) == key(s3));
  // total weight is preserved
  CHECK(s3.weight_total() == h3.weight_total());
  for (long l : {5L, 7L}) CHECK(symmetrize_c(heilbronn_family(l)).satisfies_Cm);
}

TEST_CASE("hecke action on chains") {
  LevelContext ctx(3);
  ManinChain<Rat> id_chain;
  id_chain.level = 3;
  id_chain.v.add(ctx.group_index(ctx.canon_mat(1, 0, 0, 1)), 1);

  // m = 1: identity operator
  ManinChain<Rat> same = hecke_act(identity_family(), id_chain, ctx);
  CHECK(same.v == id_chain.v);

  // total weight 25 at l = 7 before any reduction
  HeckeFamily h7 = heilbronn_family(7);
  ManinChain<Rat> t = hecke_act(h7, id_chain, ctx);
  Rat total = 0;
  for (const auto& [g, w] : t.v.c) total += w;
  CHECK(total == 25);

  // determinant precondition names the value
  HeckeFamily h5 = heilbronn_family(5);
  CHECK_THROWS_WITH_AS(hecke_act(h5, id_chain, ctx),
                       doctest::Contains("determinant 5"), UsageError);
}

TEST_CASE("hecke action respects the relation quotient") {
  LevelContext ctx(3);
  RelationBasis basis(ctx);
  HeckeFamily h7 = heilbronn_family(7);
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> pick(0, ctx.group_size() - 1);
  for (int trial = 0; trial < 6; ++trial) {
    ManinChain<Rat> chain;
    chain.level = 3;
    chain.v.add(pick(rng), make_rat(trial + 1, 2));
    chain.v.add(pick(rng), -3);
    auto before = basis.reduce(hecke_act(h7, chain, ctx), Rat(0));
    // add a relation element: reduce of the image must not move
    const GroupElem& g = ctx.group()[(size_t)pick(rng)];
    chain.v.add(ctx.group_index(g), 1);
    chain.v.add(ctx.group_index(ctx.mul(g, ctx.S())), 1);
    auto after = basis.reduce(hecke_act(h7, chain, ctx), Rat(0));
    CHECK(before == after);
  }

  // two C_l families with the same determinant act identically on the
  // quotient: heilbronn vs its c-symmetrization
  HeckeFamily s7 = symmetrize_c(h7);
  for (int gi = 0; gi < ctx.group_size(); ++gi) {
    ManinChain<Rat> chain;
    chain.level = 3;
    chain.v.add(gi, 1);
    CHECK(basis.reduce(hecke_act(h7, chain, ctx), Rat(0)) ==
          basis.reduce(hecke_act(s7, chain, ctx), Rat(0)));
  }
}

TEST_CASE("theta search finds validated families") {
  auto th3 = search_theta_family(3, 3);
  REQUIRE(th3.has_value());
  CHECK(th3->terms.size() == 8);
  ThetaReport rep = check_theta_relations(*th3);
  CHECK(rep.c_commutes);
  CHECK(rep.h_relation);
  CHECK(rep.support_identity_mod2);
  CHECK(rep.pass());

  auto th7 = search_theta_family(7, 7);
  REQUIRE(th7.has_value());
  CHECK(check_theta_relations(*th7).pass());

  // identity family: X = 0, trivially S-invariant, parity holds
  ThetaReport id = check_theta_relations(identity_family());
  CHECK(id.h_relation);
  CHECK(id.support_identity_mod2);

  // symmetrized heilbronn c-commutes but has no H-relation and mixes
  // parity; reported, not fatal
  ThetaReport sh = check_theta_relations(symmetrize_c(heilbronn_family(3)));
  CHECK(sh.c_commutes);
  CHECK_FALSE(sh.h_relation);
  CHECK_FALSE(sh.support_identity_mod2);
}

TEST_CASE("theta F identity") {
  auto th3 = search_theta_family(3, 3);
  auto th7 = search_theta_family(7, 7);
  REQUIRE(th3.has_value());
  REQUIRE(th7.has_value());

  LevelContext c5(5), c3(3);
  CHECK(check_F_identity(*th3, c5).pass);   // l != 1 mod N branch
  CHECK(check_F_identity(*th7, c3).pass);   // l == 1 mod N: (1+l) F(P)
  CHECK(check_F_identity(*th7, c5).pass);

  // P = (0,0) is part of the sweep: F((0,0)) = 0 on both sides
  CHECK(F_closed(PointClass{0, 0}, c5).is_zero());
}

TEST_CASE("function-level identities") {
  auto th3 = search_theta_family(3, 3);
  auto th5 = search_theta_family(5, 5);
  auto th7 = search_theta_family(7, 7);
  REQUIRE((th3 && th5 && th7));

  LevelContext c3(3), c5(5);

  // fhat identity on odd-odd lifts holds for every validated theta
  CHECK(check_function_identity_fhat(*th5, c3).pass);
  CHECK(check_function_identity_fhat(*th7, c3).pass);
  CHECK(check_function_identity_fhat(*th3, c5).pass);

  // pointwise grid identity for f: clean when multiplication by l
  // fixes the grid (l == ±1 mod 2N) ...
  {
    IdentityReport r53 = check_function_identity_f(*th5, c3);  // 5 == -1 mod 6
    CHECK(r53.pass);
    CHECK(r53.failures_on_jump_set.empty());
    CHECK(check_function_identity_f(*th7, c3).pass);  // 7 == +1 mod 6
  }
  // ... and genuinely fails off the jump set otherwise (3 mod 10)
  IdentityReport r35 = check_function_identity_f(*th3, c5);
  CHECK_FALSE(r35.pass);
  CHECK(r35.failures_off_jump_set.size() == 40);
  CHECK(r35.failures_on_jump_set.size() == 24);

  // symmetrized heilbronn: C_l and c-commutation are not enough. At
  // (N,l) = (3,5) the grid failures all sit on the jump set, but the
  // transform identity already breaks; at (5,3) the grid identity
  // breaks off the jump set too.
  IdentityReport sh = check_function_identity_f(symmetrize_c(heilbronn_family(5)), c3);
  CHECK(sh.pass);
  CHECK(sh.failures_on_jump_set.size() == 16);
  IdentityReport shh = check_function_identity_fhat(symmetrize_c(heilbronn_family(5)), c3);
  CHECK_FALSE(shh.pass);
  CHECK(shh.failures_off_jump_set.size() == 4);
  IdentityReport s53 = check_function_identity_f(symmetrize_c(heilbronn_family(3)), c5);
  CHECK_FALSE(s53.pass);
  CHECK(s53.failures_off_jump_set.size() == 24);
}

TEST_CASE("theta family file round trip") {
  auto th3 = search_theta_family(3, 3);
  REQUIRE(th3.has_value());
  auto path = std::filesystem::temp_directory_path() / "theta3_test.txt";
  save_theta_file(*th3, path.string());
  HeckeFamily back = load_theta_file(path.string());
  CHECK(back.m == 3);
  CHECK(back.terms.size() == th3->terms.size());
  CHECK(verify_Cm(back).pass);
  std::filesystem::remove(path);

  // loader rejects mixed determinants
  auto bad = std::filesystem::temp_directory_path() / "theta_bad.txt";
  {
    std::FILE* f = std::fopen(bad.string().c_str(), "w");
    std::fputs("1 1 0 0 3\n1 1 0 0 5\n", f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(load_theta_file(bad.string()), UsageError);
  std::filesystem::remove(bad);
  CHECK_THROWS_AS(load_theta_file("/nonexistent/theta.txt"), UsageError);
}
