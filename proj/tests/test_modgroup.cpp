#include <doctest.h>

#include "eiscycle/modgroup.hpp"

using namespace eis;

TEST_CASE("group enumeration sizes") {
  CHECK(LevelContext(3).group_size() == 12);
  CHECK(LevelContext(5).group_size() == 60);
  CHECK(LevelContext(7).group_size() == 168);
  CHECK_THROWS_AS(LevelContext(4), UsageError);
  CHECK_THROWS_AS(LevelContext(1), UsageError);
}

TEST_CASE("point action") {
  LevelContext ctx(3);
  PointClass p{1, 0};
  CHECK(ctx.act(ctx.canon_mat(1, 0, 0, 1), p) == p);
  CHECK(ctx.act(ctx.S(), p) == ctx.canon(0, 1));
  CHECK(ctx.act(ctx.T(), p) == p);
  CHECK(ctx.mul(ctx.S(), ctx.T()) == ctx.U());

  // composition and inverse round trip over the full enumeration
  for (int N : {3, 5}) {
    LevelContext c(N);
    for (const GroupElem& g : c.group())
      for (const GroupElem& h : c.group())
        for (PointClass q : {c.canon(1, 0), c.canon(1, 2)})
          CHECK(c.act(c.mul(g, h), q) == c.act(g, c.act(h, q)));
    for (const GroupElem& g : c.group())
      for (PointClass q : c.cusps())
        CHECK(c.act(c.inverse(g), c.act(g, q)) == q);
  }
}

TEST_CASE("odd lifts") {
  CHECK(lift0(PointN{1, 0}, 3).u == 1);
  CHECK(lift0(PointN{1, 0}, 3).v == 3);
  CHECK(lift0(PointN{2, 1}, 3).u == 5);
  CHECK(lift0(PointN{2, 1}, 3).v == 1);
  CHECK(lift0(PointN{0, 0}, 5).u == 5);
  CHECK(lift0(PointN{0, 0}, 5).v == 5);
  for (int N : {3, 5, 7}) {
    for (int u = 0; u < N; ++u)
      for (int v = 0; v < N; ++v) {
        Lift0 w = lift0(PointN{u, v}, N);
        CHECK(w.u % 2 == 1);
        CHECK(w.v % 2 == 1);
        CHECK(w.u % N == u);
        CHECK(w.v % N == v);
      }
  }
}

TEST_CASE("cusp enumeration") {
  LevelContext c3(3);
  CHECK(c3.cusp_count() == 4);
  std::vector<PointClass> expect{{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  CHECK(c3.cusps().size() == expect.size());
  for (const auto& p : expect) CHECK(c3.cusp_index(p) >= 0);

  CHECK(LevelContext(5).cusp_count() == 12);
  CHECK(LevelContext(9).cusp_count() == 36);

  // order-N filter: (3,3) has order 3 < 9
  LevelContext c9(9);
  CHECK(c9.point_order(c9.canon(3, 3)) == 3);
  CHECK(c9.cusp_index(c9.canon(3, 3)) == -1);
}

TEST_CASE("columns as cusps") {
  LevelContext ctx(3);
  GroupElem id = ctx.canon_mat(1, 0, 0, 1);
  CHECK(ctx.cusp_of_column(id, Column::first) == ctx.canon(1, 0));
  CHECK(ctx.cusp_of_column(id, Column::second) == ctx.canon(0, 1));
  CHECK(ctx.cusp_of_column(ctx.S(), Column::first) == ctx.canon(0, 1));
  CHECK(ctx.cusp_of_column(ctx.S(), Column::second) == ctx.canon(1, 0));
  for (const GroupElem& g : ctx.group()) {
    GroupElem gS = ctx.mul(g, ctx.S());
    CHECK(ctx.cusp_of_column(g, Column::first) == ctx.cusp_of_column(gS, Column::second));
    CHECK(ctx.cusp_of_column(g, Column::second) == ctx.cusp_of_column(gS, Column::first));
  }
}

TEST_CASE("group closure and inverse totality") {
  for (int N : {3, 5, 7, 9, 11, 13}) {
    LevelContext ctx(N);
    long d = ctx.group_size();
    // size formula N^3 prod (1 - p^-2) / 2
    long expect = N * (long)N * N;
    for (int p = 2; p <= N; ++p)
      if (N % p == 0) {
        bool prime = true;
        for (int q = 2; q * q <= p; ++q)
          if (p % q == 0) prime = false;
        if (prime) expect = expect / ((long)p * p) * ((long)p * p - 1);
      }
    CHECK(d == expect / 2);
    for (const GroupElem& g : ctx.group()) {
      CHECK(ctx.mul(g, ctx.inverse(g)) == ctx.canon_mat(1, 0, 0, 1));
      for (const GroupElem& h : ctx.group()) (void)ctx.group_index(ctx.mul(g, h));
    }
  }
}

TEST_CASE("genus and dimension formulas") {
  LevelContext c3(3), c7(7), c11(11);
  CHECK(c3.genus() == 0);
  CHECK(c3.expected_dim() == 3);
  CHECK(c7.genus() == 3);
  CHECK(c7.expected_dim() == 29);
  CHECK(c11.genus() == 26);
  CHECK(c11.cusp_count() == 60);
  CHECK(c11.expected_dim() == 111);
}
