#pragma once

// JSON forms of shapes, tableaux, polynomials and pairing certificates.
//
//   shape       {"outer":[6,4,3,1],"inner":[4,2],"boxes":[[3,3],[2,4],...]}
//               boxes in column-major order
//   tableau     {"shape":<shape>,"n":3,"family":"P","rows":[[["1"],["1","3'"]],...]}
//               each row lists its boxes left to right
//   polynomial  {"terms":[{"x":[3,1,0],"b":-1,"c":"7"},...]}
//   certificate {"lambda":[...],"mu":[...],"n":5,"family":"P","mode":"full",
//                "pairs":[{"tag":"iota","first":<element>,"second":<element>}],
//                "leftover":[<element>...]}
//   element     {"removed":[[i,j],...],"tableau":<tableau>}

#include <nlohmann/json.hpp>

#include <memory>
#include <string>
#include <vector>

#include "kschur/involutions.hpp"
#include "kschur/polyring.hpp"
#include "kschur/shapes.hpp"
#include "kschur/tableaux.hpp"

namespace kschur {

using json = nlohmann::json;

inline json to_json(const Box& b) { return json::array({b.row, b.col}); }

inline Box box_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw Error("box must be [row, col]");
  return Box{j.at(0).get<int>(), j.at(1).get<int>()};
}

inline json to_json(const StrictPartition& p) { return json(p.parts()); }

inline StrictPartition partition_from_json(const json& j) {
  return StrictPartition(j.get<std::vector<int>>());
}

inline json to_json(const SkewShape& s) {
  json boxes = json::array();
  for (const Box& b : boxes_in_order(s)) boxes.push_back(to_json(b));
  return json{{"outer", to_json(s.outer())}, {"inner", to_json(s.inner())}, {"boxes", std::move(boxes)}};
}

inline SkewShape shape_from_json(const json& j) {
  return SkewShape(partition_from_json(j.at("outer")),
                   j.contains("inner") ? partition_from_json(j.at("inner")) : StrictPartition{});
}

inline json to_json(const Filling& f) {
  const SkewShape& s = f.shape();
  json rows = json::array();
  for (int i = 1; i <= s.rows(); ++i) {
    json row = json::array();
    for (int j = s.row_begin(i); j <= s.row_end(i); ++j) {
      json cell = json::array();
      for (Entry e : f.at(Box{i, j}).entries()) cell.push_back(e.to_string());
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  return json{{"shape", to_json(s)}, {"n", f.n()}, {"family", to_string(f.family())}, {"rows", std::move(rows)}};
}

inline Filling filling_from_json(const json& j) {
  auto shape = std::make_shared<const SkewShape>(shape_from_json(j.at("shape")));
  Filling f(shape, j.at("n").get<int>(), parse_family(j.at("family").get<std::string>()));
  const json& rows = j.at("rows");
  if (!rows.is_array() || static_cast<int>(rows.size()) != shape->rows())
    throw Error("tableau rows do not match the shape");
  for (int i = 1; i <= shape->rows(); ++i) {
    const json& row = rows.at(static_cast<std::size_t>(i - 1));
    const int width = std::max(0, shape->row_end(i) - shape->row_begin(i) + 1);
    if (!row.is_array() || static_cast<int>(row.size()) != width)
      throw Error("tableau row " + std::to_string(i) + " has the wrong width");
    for (int k = 0; k < width; ++k) {
      CellSet c;
      for (const auto& e : row.at(static_cast<std::size_t>(k))) c = c.with(parse_entry(e.get<std::string>()));
      f.set(Box{i, shape->row_begin(i) + k}, c);
    }
  }
  return f;
}

inline json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [k, c] : p.terms()) terms.push_back(json{{"x", k.x}, {"b", k.b}, {"c", c.str()}});
  return json{{"terms", std::move(terms)}};
}

inline LaurentPoly poly_from_json(const json& j, std::size_t nvars) {
  LaurentPoly p(nvars);
  for (const auto& t : j.at("terms"))
    p.add_term(MonomialKey{t.at("x").get<std::vector<std::uint32_t>>(), t.at("b").get<std::int64_t>()},
               BigInt(t.at("c").get<std::string>()));
  return p;
}

inline json to_json(const CertElement& e) {
  json removed = json::array();
  for (const Box& b : e.removed) removed.push_back(to_json(b));
  return json{{"removed", std::move(removed)}, {"tableau", to_json(e.tableau)}};
}

inline CertElement element_from_json(const json& j) {
  CertElement e;
  for (const auto& b : j.at("removed")) e.removed.push_back(box_from_json(b));
  e.tableau = filling_from_json(j.at("tableau"));
  return e;
}

inline json to_json(const PairingCertificate& c) {
  json pairs = json::array();
  for (const auto& p : c.pairs)
    pairs.push_back(json{{"tag", to_string(p.tag)}, {"first", to_json(p.first)}, {"second", to_json(p.second)}});
  json leftover = json::array();
  for (const auto& e : c.leftover) leftover.push_back(to_json(e));
  return json{{"lambda", to_json(c.lambda)},
              {"mu", to_json(c.mu)},
              {"n", c.n},
              {"family", to_string(c.family)},
              {"mode", c.minimal_only ? "minimal" : "full"},
              {"pairs", std::move(pairs)},
              {"leftover", std::move(leftover)}};
}

inline PairingCertificate certificate_from_json(const json& j) {
  PairingCertificate c;
  c.lambda = partition_from_json(j.at("lambda"));
  c.mu = partition_from_json(j.at("mu"));
  c.n = j.at("n").get<int>();
  c.family = parse_family(j.at("family").get<std::string>());
  c.minimal_only = j.value("mode", "full") == "minimal";
  for (const auto& p : j.at("pairs")) {
    const auto tag = p.at("tag").get<std::string>();
    if (tag != "iota" && tag != "pi") throw Error("unknown pair tag '" + tag + "'");
    c.pairs.push_back(CertPair{element_from_json(p.at("first")), element_from_json(p.at("second")),
                               tag == "iota" ? PairTag::iota : PairTag::pi});
  }
  for (const auto& e : j.value("leftover", json::array())) c.leftover.push_back(element_from_json(e));
  return c;
}

}  // namespace kschur
