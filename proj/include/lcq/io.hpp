#pragma once

// JSON documents for SpaceData and GroupPresentation.
//
// SpaceData:
//   {"name": str, "h1_rank": int, "h1_torsion_free": bool, "h2_rank": int,
//    "mu": [[int]] | null, "cup": [[int]] | null}
// with exactly one of mu/cup non-null, row-major, mu rows in alt2 order.
// GroupPresentation:
//   {"generators": int, "relators": [[int]]}   (signed 1-based letters)
// Integers that do not fit in 64 bits may be given as decimal strings.

#include "lcq/abelian_group.hpp"
#include "lcq/error.hpp"
#include "lcq/exterior.hpp"
#include "lcq/int_matrix.hpp"
#include "lcq/nilpotent.hpp"
#include "lcq/second_quotient.hpp"

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace lcq::io {

using Json = nlohmann::json;

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(const std::string &text,
                                                    std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline const Json &field(const Json &obj, const char *key,
                         const std::string &ctx) {
  if (!obj.is_object())
    throw ParseError(ctx + ": expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(ctx + ": missing field '" + key + "'");
  return *it;
}

inline std::size_t count_field(const Json &obj, const char *key,
                               const std::string &ctx) {
  const Json &v = field(obj, key, ctx);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ParseError(ctx + ": field '" + key +
                     "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

inline Integer to_integer(const Json &v, const std::string &ctx) {
  if (v.is_number_unsigned())
    return Integer(std::to_string(v.get<unsigned long long>()));
  if (v.is_number_integer())
    return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    Integer z;
    const std::string s = v.get<std::string>();
    if (s.empty() || z.set_str(s, 10) != 0)
      throw ParseError(ctx + ": '" + s + "' is not a decimal integer");
    return z;
  }
  throw ParseError(ctx + ": expected an integer");
}

inline Json from_integer(const Integer &z) {
  if (z.fits_slong_p())
    return z.get_si();
  return z.get_str();
}

inline IntMatrix to_matrix(const Json &v, std::size_t rows, std::size_t cols,
                           const std::string &ctx) {
  if (!v.is_array())
    throw ParseError(ctx + ": expected an array of rows");
  if (v.size() != rows)
    throw ParseError(ctx + ": has " + std::to_string(v.size()) +
                     " rows, expected " + std::to_string(rows));
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Json &row = v[r];
    const std::string rctx = ctx + " row " + std::to_string(r);
    if (!row.is_array())
      throw ParseError(rctx + ": expected an array");
    if (row.size() != cols)
      throw ParseError(rctx + ": has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = to_integer(row[c], rctx + " col " + std::to_string(c));
  }
  return m;
}

inline Json from_matrix(const IntMatrix &m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(from_integer(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace detail

inline Json parse_json(const std::string &text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    const auto [line, col] =
        detail::line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("line " + std::to_string(line) + ", column " +
                         std::to_string(col) + ": " + e.what(),
                     line, col);
  }
}

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline SpaceData space_from_json(const Json &j) {
  const std::string ctx =
      j.is_object() && j.contains("name") && j["name"].is_string()
          ? "space '" + j["name"].get<std::string>() + "'"
          : std::string("space");
  SpaceData s;
  const Json &name = detail::field(j, "name", ctx);
  if (!name.is_string())
    throw ParseError(ctx + ": field 'name' must be a string");
  s.name = name.get<std::string>();
  s.h1_rank = detail::count_field(j, "h1_rank", ctx);
  const Json &tf = detail::field(j, "h1_torsion_free", ctx);
  if (!tf.is_boolean())
    throw ParseError(ctx + ": field 'h1_torsion_free' must be a boolean");
  s.h1_torsion_free = tf.get<bool>();
  s.h2_rank = detail::count_field(j, "h2_rank", ctx);

  const std::size_t alt = choose2(s.h1_rank);
  const Json null;
  const Json &mu = j.contains("mu") ? j["mu"] : null;
  const Json &cup = j.contains("cup") ? j["cup"] : null;
  if (mu.is_null() == cup.is_null())
    throw ParseError(ctx + ": exactly one of 'mu' and 'cup' must be non-null");
  if (!mu.is_null())
    s.mu = detail::to_matrix(mu, alt, s.h2_rank, ctx + " field 'mu'");
  else
    s.cup = detail::to_matrix(cup, s.h2_rank, alt, ctx + " field 'cup'");
  return s;
}

inline Json to_json(const SpaceData &s) {
  Json j;
  j["name"] = s.name;
  j["h1_rank"] = s.h1_rank;
  j["h1_torsion_free"] = s.h1_torsion_free;
  j["h2_rank"] = s.h2_rank;
  j["mu"] = s.mu ? detail::from_matrix(*s.mu) : Json(nullptr);
  j["cup"] = s.cup ? detail::from_matrix(*s.cup) : Json(nullptr);
  return j;
}

inline GroupPresentation presentation_from_json(const Json &j) {
  const std::string ctx = "presentation";
  GroupPresentation p;
  p.generators = detail::count_field(j, "generators", ctx);
  const Json &rels = detail::field(j, "relators", ctx);
  if (!rels.is_array())
    throw ParseError(ctx + ": field 'relators' must be an array");
  for (std::size_t k = 0; k < rels.size(); ++k) {
    const std::string rctx = ctx + " relator " + std::to_string(k);
    if (!rels[k].is_array())
      throw ParseError(rctx + ": expected an array of letters");
    Word w;
    for (std::size_t i = 0; i < rels[k].size(); ++i) {
      const Json &l = rels[k][i];
      if (!l.is_number_integer())
        throw ParseError(rctx + " letter " + std::to_string(i) +
                         ": expected an integer");
      const long long v = l.get<long long>();
      if (v == 0 || static_cast<unsigned long long>(v < 0 ? -v : v) >
                        p.generators)
        throw ParseError(rctx + " letter " + std::to_string(i) + ": " +
                         std::to_string(v) + " is not in +-1.." +
                         std::to_string(p.generators));
      w.push_back(static_cast<int>(v));
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

inline Json to_json(const GroupPresentation &p) {
  Json j;
  j["generators"] = p.generators;
  Json rels = Json::array();
  for (const auto &w : p.relators)
    rels.push_back(w);
  j["relators"] = std::move(rels);
  return j;
}

// Inverse of AbelianGroup::to_string: "0", or "Z^r x Z/d1 x ... x Z/dt".
inline AbelianGroup parse_group(const std::string &text) {
  if (text == "0")
    return AbelianGroup::trivial();
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(" x ", pos);
    if (end == std::string::npos)
      end = text.size();
    const std::string tok = text.substr(pos, end - pos);
    Integer v;
    if (tok == "Z") {
      ++free_rank;
    } else if (tok.rfind("Z^", 0) == 0 && v.set_str(tok.substr(2), 10) == 0 &&
               v >= 0) {
      free_rank += v.get_ui();
    } else if (tok.rfind("Z/", 0) == 0 && v.set_str(tok.substr(2), 10) == 0 &&
               v >= 2) {
      torsion.push_back(v);
    } else {
      throw ParseError("cannot parse group '" + text + "' at '" + tok + "'");
    }
    pos = end + 3;
  }
  try {
    return {free_rank, std::move(torsion)};
  } catch (const InputError &e) {
    throw ParseError("group '" + text + "': " + e.what());
  }
}

inline SpaceData load_space(const std::string &path) {
  return space_from_json(parse_json(read_file(path)));
}

inline GroupPresentation load_presentation(const std::string &path) {
  return presentation_from_json(parse_json(read_file(path)));
}

} // namespace lcq::io
