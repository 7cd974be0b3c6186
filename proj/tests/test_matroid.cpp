#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "matcode/errors.hpp"
#include "matcode/matroid.hpp"
#include "matcode/rng.hpp"
#include "oracles.hpp"

using matcode::Field;
using matcode::FieldPtr;
using matcode::Mat;
using matcode::ReprMatroid;

namespace {

ReprMatroid u24_gf3() {
  FieldPtr f = Field::make(3, 1);
  return ReprMatroid(Mat::from_rows(f, {{1, 0, 1, 1}, {0, 1, 1, 2}}));
}

ReprMatroid hamming_matroid() {
  FieldPtr f = Field::make(2, 1);
  return ReprMatroid(Mat::from_rows(f, {{1, 0, 0, 0, 1, 1, 0},
                                        {0, 1, 0, 0, 1, 0, 1},
                                        {0, 0, 1, 0, 0, 1, 1},
                                        {0, 0, 0, 1, 1, 1, 1}}));
}

ReprMatroid random_matroid(const FieldPtr& f, std::size_t r, std::size_t n, matcode::Rng& rng) {
  return ReprMatroid(Mat::random(f, r, n, rng));
}

}  // namespace

TEST_CASE("rank and restriction ranks agree with the oracle") {
  matcode::Rng rng(29);
  for (auto [p, nn] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
    FieldPtr f = Field::make(p, nn);
    for (int trial = 0; trial < 40; ++trial) {
      ReprMatroid m = random_matroid(f, 1 + rng.below32(3), 2 + rng.below32(6), rng);
      for (int probe = 0; probe < 10; ++probe) {
        std::vector<std::size_t> idx;
        std::vector<std::string> ids;
        for (std::size_t j = 0; j < m.size(); ++j)
          if (rng.below32(2)) {
            idx.push_back(j);
            ids.push_back(m.ground()[j]);
          }
        CHECK(m.rank_of(ids) == oracle::subset_rank(m.gen(), idx));
      }
    }
  }
}

TEST_CASE("dual rank complements and double dual restores the row space") {
  matcode::Rng rng(41);
  FieldPtr f2 = Field::make(2, 1);
  FieldPtr f4 = Field::make(2, 2);
  for (const FieldPtr& f : {f2, f4})
    for (int trial = 0; trial < 40; ++trial) {
      ReprMatroid m = random_matroid(f, 1 + rng.below32(4), 2 + rng.below32(6), rng);
      ReprMatroid d = m.dual();
      CHECK(d.rank() == m.size() - m.rank());
      CHECK(d.ground() == m.ground());
      CHECK(matcode::row_space_equal(d.dual(), m));
    }
}

TEST_CASE("contraction equals the pivot-based oracle") {
  matcode::Rng rng(43);
  for (auto [p, nn] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
    FieldPtr f = Field::make(p, nn);
    for (int trial = 0; trial < 50; ++trial) {
      ReprMatroid m = random_matroid(f, 2 + rng.below32(3), 3 + rng.below32(5), rng);
      std::vector<std::size_t> x;
      std::vector<std::string> x_ids, keep_ids;
      for (std::size_t j = 0; j < m.size(); ++j)
        if (rng.below32(3) == 0) {
          x.push_back(j);
          x_ids.push_back(m.ground()[j]);
        } else {
          keep_ids.push_back(m.ground()[j]);
        }
      if (x_ids.empty() || keep_ids.empty()) continue;
      ReprMatroid got = m.contracted(x_ids);
      CHECK(got.ground() == keep_ids);

      auto rows = oracle::contract_generator(m.gen(), x);
      Mat want = rows.empty() ? Mat(f, 0, keep_ids.size()) : Mat::from_rows(f, rows);
      CHECK(matcode::row_space_equal(got, ReprMatroid(std::move(want), keep_ids)));
      CHECK(got.rank() == m.rank() - m.rank_of(x_ids));
    }
  }
}

TEST_CASE("deletion then contraction commute") {
  matcode::Rng rng(47);
  FieldPtr f = Field::make(3, 1);
  for (int trial = 0; trial < 30; ++trial) {
    ReprMatroid m = random_matroid(f, 3, 7, rng);
    const std::vector<std::string> del{m.ground()[1]};
    const std::vector<std::string> con{m.ground()[4]};
    ReprMatroid a = m.deleted(del).contracted(con);
    ReprMatroid b = m.contracted(con).deleted(del);
    CHECK(matcode::row_space_equal(a, b));
  }
}

TEST_CASE("girth and cogirth of the standard small examples") {
  ReprMatroid u = u24_gf3();
  CHECK(u.girth() == 3);
  CHECK(u.cogirth() == 3);

  ReprMatroid h = hamming_matroid();
  CHECK(h.girth() == 4);   // smallest kernel support
  CHECK(h.cogirth() == 3); // smallest row-space support

  // a free matroid has no circuits, a rank-zero one no cocircuits
  FieldPtr f2 = Field::make(2, 1);
  ReprMatroid free_m(Mat::identity(f2, 4));
  CHECK_FALSE(free_m.girth().has_value());
  CHECK(free_m.cogirth() == 1);
  CHECK_FALSE(free_m.dual().cogirth().has_value());
}

TEST_CASE("girth matches the exhaustive oracle on random matroids") {
  matcode::Rng rng(53);
  for (auto [p, nn] : {std::pair<std::uint32_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
    FieldPtr f = Field::make(p, nn);
    for (int trial = 0; trial < 40; ++trial) {
      ReprMatroid m = random_matroid(f, 1 + rng.below32(4), 2 + rng.below32(6), rng);
      CHECK(m.girth() == oracle::brute_girth(m.gen()));
      CHECK(m.cogirth() == oracle::brute_girth(m.dual().gen()));
    }
  }
}

TEST_CASE("both girth routes give the same answer") {
  matcode::Rng rng(59);
  FieldPtr f = Field::make(2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    // rank 2 over 8 columns: kernel dimension 6 means 4^6 span candidates,
    // above a budget of 2000, which forces the subset scan
    ReprMatroid m = random_matroid(f, 2, 8, rng);
    matcode::EnumBudget small{2000};
    CHECK(m.girth(small) == m.girth());
  }
  // two identity blocks: kernel dimension 10 rules out the span route, and
  // the weight-1 scan alone has 20 candidates
  FieldPtr f2 = Field::make(2, 1);
  Mat two_blocks(f2, 10, 20);
  for (std::size_t i = 0; i < 10; ++i) {
    two_blocks.set(i, i, 1);
    two_blocks.set(i, 10 + i, 1);
  }
  ReprMatroid wide(two_blocks);
  CHECK(wide.girth() == 2);
  CHECK_THROWS_AS(wide.girth(matcode::EnumBudget{10}), matcode::BudgetExceeded);
}

TEST_CASE("projective geometries have the expected shape") {
  FieldPtr f2 = Field::make(2, 1);
  ReprMatroid fano = matcode::projective_geometry(2, f2);
  CHECK(fano.size() == 7);
  CHECK(fano.rank() == 3);
  CHECK(fano.girth() == 3);
  CHECK(fano.cogirth() == 4);  // complement of a line

  FieldPtr f3 = Field::make(3, 1);
  ReprMatroid line = matcode::projective_geometry(1, f3);
  CHECK(line.size() == 4);  // the projective line over GF(3)
  CHECK(line.rank() == 2);
  CHECK(matcode::proj_equivalent(line, u24_gf3()));

  ReprMatroid plane9 = matcode::projective_geometry(2, Field::make(3, 2));
  CHECK(plane9.size() == 91);  // (9^3 - 1) / 8
  CHECK(plane9.rank() == 3);
}

TEST_CASE("projective equivalence accepts rescalings and spots the difference") {
  matcode::Rng rng(61);
  for (auto [p, nn] : {std::pair<std::uint32_t, std::uint32_t>{3, 1}, {2, 2}, {5, 1}}) {
    FieldPtr f = Field::make(p, nn);
    for (int trial = 0; trial < 40; ++trial) {
      ReprMatroid m = random_matroid(f, 2 + rng.below32(3), 3 + rng.below32(5), rng);
      Mat scaled = m.gen();
      for (std::size_t j = 0; j < scaled.cols(); ++j) {
        const std::uint32_t s = 1 + rng.below32(f->q() - 1);
        for (std::size_t i = 0; i < scaled.rows(); ++i)
          scaled.set(i, j, f->mul(s, scaled.at(i, j)));
      }
      CHECK(matcode::proj_equivalent(m, ReprMatroid(scaled, m.ground())));
    }
  }

  // parallel pair versus four points in general position
  FieldPtr f3 = Field::make(3, 1);
  ReprMatroid pair_m(Mat::from_rows(f3, {{1, 0, 1, 1}, {0, 1, 1, 1}}));
  CHECK_FALSE(matcode::proj_equivalent(pair_m, u24_gf3()));
  CHECK(matcode::proj_equivalent(pair_m, pair_m));

  ReprMatroid big(Mat(f3, 1, 13));
  CHECK_THROWS_AS(matcode::proj_equivalent(big, big), matcode::BudgetExceeded);
  CHECK_THROWS_AS(matcode::proj_equivalent(pair_m, ReprMatroid(Mat(Field::make(2, 1), 2, 4))),
                  std::invalid_argument);
}

TEST_CASE("direct sums rename clashing ids and add ranks") {
  ReprMatroid u = u24_gf3();
  ReprMatroid s = matcode::direct_sum(u, u);
  CHECK(s.size() == 8);
  CHECK(s.rank() == 4);
  CHECK(s.ground()[4] == "0'");
  CHECK(s.girth() == 3);
  CHECK(s.rank_of({"0", "1", "2", "3"}) == 2);
  CHECK(s.rank_of({"0'", "1'", "2'", "3'"}) == 2);
}

TEST_CASE("vertical separations: known instances") {
  ReprMatroid u = u24_gf3();
  CHECK(matcode::vertical_connectivity(u, 2));
  CHECK(matcode::vertical_connectivity(u, 3));

  ReprMatroid s = matcode::direct_sum(u, u);
  auto sep = matcode::vertical_separation(s, 2);
  REQUIRE(sep.has_value());
  CHECK(sep->order == 1);
  CHECK(sep->rank_a + sep->rank_b == s.rank());
  // the two sides split the sum back apart
  CHECK(sep->part_a.size() + sep->part_b.size() == s.size());

  FieldPtr f2 = Field::make(2, 1);
  ReprMatroid big(Mat(f2, 2, 20));
  CHECK_THROWS_AS(matcode::vertical_separation(big, 2), matcode::BudgetExceeded);
}

TEST_CASE("vertical 2-connectivity matches circuit components") {
  matcode::Rng rng(67);
  FieldPtr f = Field::make(2, 1);
  int disconnected_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    ReprMatroid m = random_matroid(f, 2 + rng.below32(2), 4 + rng.below32(3), rng);
    const auto comps = oracle::circuit_components(m.gen());
    int positive = 0;
    for (const auto& c : comps) {
      std::vector<std::string> ids;
      for (std::size_t j : c) ids.push_back(m.ground()[j]);
      if (m.rank_of(ids) > 0) ++positive;
    }
    const bool connected2 = matcode::vertical_connectivity(m, 2);
    CHECK(connected2 == (positive < 2));
    disconnected_seen += !connected2;
  }
  CHECK(disconnected_seen > 0);  // the sample hits both outcomes
}

TEST_CASE("separation split recovers the two sides with consistent invariants") {
  ReprMatroid u = u24_gf3();
  ReprMatroid s = matcode::direct_sum(u, u);
  auto sep = matcode::vertical_separation(s, 2);
  REQUIRE(sep.has_value());
  auto rep = matcode::separation_split(s, *sep);
  CHECK(rep.sizes_ok);
  CHECK(rep.ranks_ok);
  CHECK(rep.cogirth_bound_ok);
  CHECK(rep.n1.ground() == sep->part_a);
  CHECK(rep.n2.ground() == sep->part_b);
  CHECK(rep.n1.size() + rep.n2.size() == s.size());
}

TEST_CASE("minor witnesses validate and reject") {
  ReprMatroid fano = matcode::projective_geometry(2, Field::make(2, 1));
  const std::vector<std::string> con{fano.ground()[0]};
  const std::vector<std::string> del{fano.ground()[3]};
  ReprMatroid n = fano.contracted(con).deleted(del);
  CHECK(matcode::minor_witness_check(fano, con, del, n));

  // a wrong target with the same ground ids
  FieldPtr f2 = Field::make(2, 1);
  ReprMatroid wrong(Mat::identity(f2, n.size()), n.ground());
  CHECK_FALSE(matcode::minor_witness_check(fano, con, del, wrong));
  CHECK_THROWS_AS(matcode::minor_witness_check(fano, con, con, n), std::invalid_argument);
}

TEST_CASE("ground ids must be distinct and sized to the matrix") {
  FieldPtr f = Field::make(2, 1);
  CHECK_THROWS_AS(ReprMatroid(Mat(f, 1, 2), {"a", "a"}), std::invalid_argument);
  CHECK_THROWS_AS(ReprMatroid(Mat(f, 1, 2), {"a"}), std::invalid_argument);
  ReprMatroid m(Mat(f, 1, 2), {"x", "y"});
  CHECK_THROWS_AS(m.index_of("z"), std::invalid_argument);
  CHECK(m.has_element("x"));
  CHECK_FALSE(m.has_element("z"));
}
