#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "kschur/kschur.hpp"
#include "reference.hpp"

using namespace kschur;

namespace {

ref::Tableau to_ref(const Filling& f) {
  ref::Tableau t;
  for (const Box& b : f.shape().boxes()) {
    ref::Cell cell;
    for (Entry e : f.at(b).entries()) cell.push_back(ref::Sym{e.letter(), e.is_primed()});
    t[{b.row, b.col}] = cell;
  }
  return t;
}

char fam(Family f) { return f == Family::P ? 'P' : 'Q'; }

std::vector<int> exponents(const Filling& f) {
  auto w = weight(f).counts;
  return std::vector<int>(w.begin(), w.end());
}

}  // namespace

TEST(Entry, CodesAndText) {
  EXPECT_EQ(Entry::unprimed(3).code(), 6);
  EXPECT_EQ(Entry::primed(3).code(), 5);
  EXPECT_EQ(Entry::primed(3).to_string(), "3'");
  EXPECT_EQ(parse_entry("3'"), Entry::primed(3));
  EXPECT_EQ(parse_entry("12"), Entry::unprimed(12));
  EXPECT_LT(Entry::primed(1).code(), Entry::unprimed(1).code());
  EXPECT_LT(Entry::unprimed(1).code(), Entry::primed(2).code());
  EXPECT_THROW(parse_entry("0"), Error);
  EXPECT_THROW(parse_entry("x"), Error);
  EXPECT_THROW(parse_entry("16"), Error);
}

TEST(Validate, PrintedTableauxAreValid) {
  for (const auto& w : fixtures::single_valued_421()) {
    EXPECT_TRUE(validate_single(w.tableau)) << w.name << ": " << validate_single(w.tableau).message;
    EXPECT_EQ(exponents(w.tableau), w.exponents) << w.name;
    EXPECT_EQ(w.tableau.size(), 7);
  }
  for (const auto& s : fixtures::set_valued_421()) {
    EXPECT_TRUE(validate(s.w.tableau)) << s.w.name << ": " << validate(s.w.tableau).message;
    EXPECT_EQ(exponents(s.w.tableau), s.w.exponents) << s.w.name;
    EXPECT_EQ(s.w.tableau.size(), s.size) << s.w.name;
  }
}

TEST(Validate, MonomialOfPrintedTableaux) {
  const auto ts = fixtures::single_valued_421();
  EXPECT_EQ(monomial(ts[0].tableau), LaurentPoly::monomial({3, 3, 1}, 0));
  EXPECT_EQ(monomial(ts[1].tableau), LaurentPoly::monomial({2, 1, 4}, 0));
  const auto sv = fixtures::set_valued_421();
  EXPECT_EQ(monomial(sv[1].w.tableau), LaurentPoly::monomial({1, 4, 3}, 0));
  auto empty = std::make_shared<const SkewShape>(parse_partition("2,1"), parse_partition("2,1"));
  EXPECT_EQ(monomial(Filling(empty, 2, Family::P)), LaurentPoly::one(2));
}

TEST(Validate, WeightOfSingleBox) {
  auto f = fixtures::make("1", 1, Family::P, {{"1"}});
  EXPECT_EQ(exponents(f), (std::vector<int>{1}));
}

TEST(Validate, RejectedDiagrams) {
  auto col = validate(fixtures::rejected_column());
  EXPECT_FALSE(col);
  EXPECT_EQ(col.rule, Rule::column_unprimed);
  EXPECT_EQ(col.where, (Box{3, 3}));

  auto row = validate(fixtures::rejected_row());
  EXPECT_FALSE(row);
  EXPECT_EQ(row.rule, Rule::row_primed);
}

TEST(Validate, DiagonalPrimeRejectedForP) {
  auto f = fixtures::make("4,2,1", 3, Family::P, {{"1'", "1", "1", "1"}, {"2", "2"}, {"3"}});
  auto v = validate(f);
  EXPECT_FALSE(v);
  EXPECT_EQ(v.rule, Rule::diagonal_primed);
  EXPECT_EQ(v.where, (Box{1, 1}));
  auto q = fixtures::make("4,2,1", 3, Family::Q, {{"1'", "1", "1", "1"}, {"2", "2"}, {"3"}});
  EXPECT_TRUE(validate(q));
}

TEST(Validate, OrderAndStructure) {
  auto f = fixtures::make("2", 2, Family::Q, {{"2", "1"}});
  EXPECT_EQ(validate(f).rule, Rule::order);
  auto shape = fixtures::shape("2");
  Filling empty_cell(shape, 2, Family::Q);
  EXPECT_EQ(validate(empty_cell).rule, Rule::structure);
  auto high = fixtures::make("1", 3, Family::Q, {{"3"}});
  EXPECT_EQ(validate(fixtures::make("1", 1, Family::Q, {{"2"}})).rule, Rule::structure);
  EXPECT_TRUE(validate(high));
  auto multi = fixtures::make("1", 2, Family::Q, {{"1,2"}});
  EXPECT_TRUE(validate(multi));
  EXPECT_FALSE(validate_single(multi));
}

TEST(Validate, PictureRendering) {
  const auto sv = fixtures::set_valued_421();
  EXPECT_EQ(to_string(sv[0].w.tableau), "1 1 1 3'\n. 2 {2,3'}\n. . 3\n");
}

// Exhaustive agreement with the reference checker on every single-valued
// and set-valued assignment of every shape with at most 4 boxes, n <= 2.
TEST(ValidateProperties, AgreesWithReferenceExhaustively) {
  std::size_t checked = 0;
  for (const auto& s : shapes_in_range(6, true)) {
    if (s.size() > 4 || s.size() == 0) continue;
    auto sp = std::make_shared<const SkewShape>(s);
    for (int n = 1; n <= 2; ++n) {
      for (Family f : {Family::P, Family::Q}) {
        const int codes = 2 * n;
        std::vector<CellSet> choices;
        for (std::uint32_t m = 1; m < (1u << codes); ++m) choices.emplace_back(m << 1);
        std::vector<std::size_t> digit(s.size(), 0);
        Filling fill(sp, n, f);
        while (true) {
          for (std::size_t k = 0; k < s.size(); ++k) fill.set_cell(k, choices[digit[k]]);
          const bool mine = static_cast<bool>(validate(fill));
          ASSERT_EQ(mine, ref::valid(to_ref(fill), fam(f))) << to_string(fill);
          if (fill.single_valued()) {
            ASSERT_EQ(static_cast<bool>(validate_single(fill)), mine);
          }
          if (mine && f == Family::P) {
            Filling as_q(sp, n, Family::Q, fill.cells());
            EXPECT_TRUE(validate(as_q));
          }
          ++checked;
          std::size_t k = 0;
          while (k < s.size() && ++digit[k] == choices.size()) digit[k++] = 0;
          if (k == s.size()) break;
        }
      }
    }
  }
  EXPECT_GT(checked, 100000u);
}

TEST(ValidateProperties, WeightSumsToSize) {
  for (const auto& s : shapes_in_range(4, true)) {
    for (Family f : {Family::P, Family::Q}) {
      Enumerator(EnumSpec(s, 2, f, Kind::set_valued)).for_each([](const Filling& t) {
        EXPECT_EQ(weight(t).total(), t.size());
      });
    }
  }
}

TEST(ValidateProperties, PrimeToggleNeverThrows) {
  for (const auto& s : shapes_in_range(4, true)) {
    for (Family f : {Family::P, Family::Q}) {
      Enumerator(EnumSpec(s, 2, f, Kind::set_valued)).for_each([](const Filling& t) {
        for (std::size_t k = 0; k < t.box_count(); ++k) {
          for (Entry e : t.cell(k).entries()) {
            Entry flipped(e.is_primed() ? e.code() + 1 : e.code() - 1);
            if (flipped.code() < 1) continue;
            Filling g = t;
            g.set_cell(k, t.cell(k).without(e).with(flipped));
            EXPECT_NO_THROW((void)static_cast<bool>(validate(g)));
          }
        }
      });
    }
  }
}
