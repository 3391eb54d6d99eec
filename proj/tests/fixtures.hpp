#pragma once

// Worked tableaux shared by the unit tests and the acceptance runner.

#include <memory>
#include <string>
#include <vector>

#include "kschur/kschur.hpp"

namespace fixtures {

using Rows = std::vector<std::vector<std::string>>;

inline std::shared_ptr<const kschur::SkewShape> shape(const std::string& text) {
  return std::make_shared<const kschur::SkewShape>(kschur::parse_shape(text));
}

inline kschur::Filling make(const std::string& shape_text, int n, kschur::Family f, const Rows& rows) {
  return kschur::filling_from_rows(shape(shape_text), n, f, rows);
}

/// A tableau with its expected weight monomial, as an exponent vector.
struct Weighted {
  std::string name;
  kschur::Filling tableau;
  std::vector<int> exponents;
};

using kschur::Family;

/// Single-valued tableaux of (4,2,1), n = 3.
inline std::vector<Weighted> single_valued_421() {
  return {
      {"T1", make("4,2,1", 3, Family::P, {{"1", "1", "1", "2"}, {"2", "2"}, {"3"}}), {3, 3, 1}},
      {"T2", make("4,2,1", 3, Family::P, {{"1", "1", "3'", "3"}, {"2", "3'"}, {"3"}}), {2, 1, 4}},
      {"T3", make("4,2,1", 3, Family::Q, {{"1'", "1", "1", "2'"}, {"2", "2"}, {"3"}}), {3, 3, 1}},
      {"T4", make("4,2,1", 3, Family::Q, {{"1'", "2'", "3'", "3"}, {"2'", "3'"}, {"3"}}), {1, 2, 4}},
  };
}

/// Set-valued tableaux of (4,2,1), n = 3, with their sizes |T|.
struct Sized {
  Weighted w;
  int size;
};

inline std::vector<Sized> set_valued_421() {
  return {
      {{"T(1)", make("4,2,1", 3, Family::P, {{"1", "1", "1", "3'"}, {"2", "2,3'"}, {"3"}}), {3, 2, 3}}, 8},
      {{"T(2)", make("4,2,1", 3, Family::P, {{"1", "2'", "2", "2,3'"}, {"2", "3'"}, {"3"}}), {1, 4, 3}}, 8},
      {{"T(3)", make("4,2,1", 3, Family::Q, {{"1'", "1", "1", "1"}, {"2'", "2"}, {"3',3"}}), {4, 2, 2}}, 8},
      {{"T(4)", make("4,2,1", 3, Family::Q, {{"1'", "1", "1", "1,2,3"}, {"2", "2"}, {"3'"}}), {4, 3, 2}}, 9},
  };
}

/// Fillings of (4,2,1) that break a column or row rule.
inline kschur::Filling rejected_column() {
  return make("4,2,1", 3, Family::Q, {{"1'", "1", "2'", "2"}, {"2", "3"}, {"3"}});
}
inline kschur::Filling rejected_row() {
  return make("4,2,1", 3, Family::Q, {{"1", "1", "2'", "3"}, {"2'", "2'"}, {"3"}});
}

/// An involution step: source, expected image, and the box that changes.
struct IotaCase {
  std::string name;
  kschur::Filling source;
  kschur::Filling image;
};

inline std::vector<IotaCase> straight_iota_cases() {
  return {
      {"T(1)", make("4,2,1", 3, Family::P, {{"1", "1", "1", "3'"}, {"2", "2,3'"}, {"3"}}),
       make("4,2,1", 3, Family::P, {{"1", "1", "1", "3'"}, {"2", "3'"}, {"3"}})},
      {"T(2)", make("4,2,1", 3, Family::P, {{"1", "2'", "2", "2,3'"}, {"2", "3'"}, {"3"}}),
       make("4,2,1", 3, Family::P, {{"1", "1,2'", "2", "2,3'"}, {"2", "3'"}, {"3"}})},
      {"T(3)", make("4,2,1", 3, Family::Q, {{"1'", "1", "1", "1"}, {"2'", "2"}, {"3',3"}}),
       make("4,2,1", 3, Family::Q, {{"1'", "1", "1", "1"}, {"2'", "2"}, {"3"}})},
      {"T(4)", make("4,2,1", 3, Family::Q, {{"1'", "1", "1", "1,2,3"}, {"2", "2"}, {"3'"}}),
       make("4,2,1", 3, Family::Q, {{"1'", "1", "1", "1,2,3"}, {"2',2", "2"}, {"3'"}})},
  };
}

inline const char* kSkew = "6,4,3,1/4,2";

/// Skew Q cases on 6,4,3,1/4,2 with n = 5.
inline std::vector<IotaCase> skew_iota_q_cases() {
  return {
      {"T<3>",
       make(kSkew, 5, Family::Q, {{"1'", "1,2,3"}, {"1'", "1"}, {"1'", "1", "2'"}, {"2'"}}),
       make(kSkew, 5, Family::Q, {{"1'", "2,3"}, {"1'", "1"}, {"1'", "1", "2'"}, {"2'"}})},
      {"T<4>",
       make(kSkew, 5, Family::Q, {{"3'", "3,4,5"}, {"1'", "3',4'"}, {"1'", "1", "4',5"}, {"2'"}}),
       make(kSkew, 5, Family::Q, {{"1',3'", "3,4,5"}, {"1'", "3',4'"}, {"1'", "1", "4',5"}, {"2'"}})},
  };
}

/// Skew P cases on 6,4,3,1/4,2 with n = 5.  `image` is the toggle against the
/// least-sum tableau; `printed` is the image as it is commonly drawn, which
/// toggles a different box and is kept to document the mismatch.
struct SkewPCase {
  IotaCase iota;
  kschur::Filling printed;
};

inline std::vector<SkewPCase> skew_iota_p_cases() {
  return {
      {{"T<1>", make(kSkew, 5, Family::P, {{"3,4'", "4,5'"}, {"1'", "4',4"}, {"1", "2',4", "5'"}, {"5"}}),
        make(kSkew, 5, Family::P, {{"3,4'", "4,5'"}, {"1'", "4',4"}, {"1", "1,2',4", "5'"}, {"5"}})},
       make(kSkew, 5, Family::P, {{"3,4'", "4,5'"}, {"1'", "4',4"}, {"1", "4", "5'"}, {"5"}})},
      {{"T<2>", make(kSkew, 5, Family::P, {{"1'", "3',5"}, {"1'", "1"}, {"1", "1", "4"}, {"2"}}),
        make(kSkew, 5, Family::P, {{"1'", "3',5"}, {"1'", "1"}, {"1", "1", "2',4"}, {"2"}})},
       make(kSkew, 5, Family::P, {{"1'", "3',5"}, {"1'", "1"}, {"1", "1", "2,4"}, {"2"}})},
  };
}

/// Least-sum tableaux of skew shapes.
struct MinimalCase {
  std::string shape;
  int n;
  kschur::Family family;
  Rows rows;
};

inline std::vector<MinimalCase> minimal_cases() {
  return {
      {"4,2,1", 3, Family::P, {{"1", "1", "1", "1"}, {"2", "2"}, {"3"}}},
      {"4,2,1", 3, Family::Q, {{"1'", "1", "1", "1"}, {"2'", "2"}, {"3'"}}},
      {kSkew, 5, Family::P, {{"1'", "1"}, {"1'", "1"}, {"1", "1", "2'"}, {"2"}}},
      {kSkew, 5, Family::Q, {{"1'", "1"}, {"1'", "1"}, {"1'", "1", "2'"}, {"2'"}}},
      {"6,4,3/4,2,1", 5, Family::P, {{"1'", "1"}, {"1'", "1"}, {"1'", "2'"}}},
      {"6,4,3/4,2,1", 5, Family::Q, {{"1'", "1"}, {"1'", "1"}, {"1'", "2'"}}},
  };
}

/// Removed-box subsets of (7,5,4,2) joined by pi, as drawn for lambda = (9,8,6,4).
inline std::vector<std::pair<std::vector<kschur::Box>, std::vector<kschur::Box>>> expected_pi_arrows() {
  using kschur::Box;
  return {
      {{}, {Box{4, 5}}},
      {{Box{3, 6}}, {Box{3, 6}, Box{4, 5}}},
      {{Box{1, 7}}, {Box{1, 7}, Box{4, 5}}},
      {{Box{1, 7}, Box{3, 6}}, {Box{1, 7}, Box{3, 6}, Box{4, 5}}},
  };
}

}  // namespace fixtures
