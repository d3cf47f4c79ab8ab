#include "hopfish/json_io.hpp"

#include <json.hpp>

namespace hopfish {
namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("", e.what());
  }
}

std::uint64_t get_count(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(where, "expected a nonnegative integer");
  return j.get<std::uint64_t>();
}

const json& get_array(const json& j, const std::string& where,
                      std::size_t expected) {
  if (!j.is_array())
    throw ParseError(where, "expected an array");
  if (j.size() != expected)
    throw ParseError(where, "expected " + std::to_string(expected) +
                                " entries, got " + std::to_string(j.size()));
  return j;
}

}  // namespace

StructureTensor structure_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw ParseError("", "expected a JSON object");
  for (const auto& key : {"n", "e", "d"})
    if (!j.contains(key))
      throw ParseError(key, "missing required field");
  std::size_t n = get_count(j["n"], "n");
  if (n == 0) throw ParseError("n", "must be at least 1");
  StructureTensor t = StructureTensor::zeros(n);
  const json& e = get_array(j["e"], "e", n);
  for (std::size_t g = 0; g < n; ++g)
    t.e[g] = get_count(e[g], "e[" + std::to_string(g) + "]");
  const json& d = get_array(j["d"], "d", n);
  for (std::size_t g = 0; g < n; ++g) {
    std::string pg = "d[" + std::to_string(g) + "]";
    const json& row = get_array(d[g], pg, n);
    for (std::size_t h = 0; h < n; ++h) {
      std::string ph = pg + "[" + std::to_string(h) + "]";
      const json& cell = get_array(row[h], ph, n);
      for (std::size_t k = 0; k < n; ++k)
        t.at(g, h, k) =
            get_count(cell[k], ph + "[" + std::to_string(k) + "]");
    }
  }
  return t;
}

std::string structure_to_json(const StructureTensor& t) {
  json j;
  j["n"] = t.n;
  j["e"] = t.e;
  json d = json::array();
  for (std::size_t g = 0; g < t.n; ++g) {
    json row = json::array();
    for (std::size_t h = 0; h < t.n; ++h) {
      json cell = json::array();
      for (std::size_t k = 0; k < t.n; ++k) cell.push_back(t.at(g, h, k));
      row.push_back(std::move(cell));
    }
    d.push_back(std::move(row));
  }
  j["d"] = std::move(d);
  return j.dump();
}

Algebra algebra_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) throw ParseError("", "expected a JSON object");
  for (const auto& key : {"dim", "unit", "mult"})
    if (!j.contains(key))
      throw ParseError(key, "missing required field");
  std::size_t dim = get_count(j["dim"], "dim");
  auto rational_at = [](const json& v, const std::string& where) {
    if (!v.is_string()) throw ParseError(where, "expected a \"p/q\" string");
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(where, e.what());
    }
  };
  std::vector<Rat> unit(dim), mult(dim * dim * dim);
  const json& u = get_array(j["unit"], "unit", dim);
  for (std::size_t i = 0; i < dim; ++i)
    unit[i] = rational_at(u[i], "unit[" + std::to_string(i) + "]");
  const json& m = get_array(j["mult"], "mult", dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::string pi = "mult[" + std::to_string(i) + "]";
    const json& row = get_array(m[i], pi, dim);
    for (std::size_t jj = 0; jj < dim; ++jj) {
      std::string pj = pi + "[" + std::to_string(jj) + "]";
      const json& cell = get_array(row[jj], pj, dim);
      for (std::size_t k = 0; k < dim; ++k)
        mult[(i * dim + jj) * dim + k] =
            rational_at(cell[k], pj + "[" + std::to_string(k) + "]");
    }
  }
  return Algebra(dim, std::move(mult), std::move(unit));
}

std::string algebra_to_json(const Algebra& a) {
  const std::size_t dim = a.dim();
  json j;
  j["dim"] = dim;
  json u = json::array();
  for (std::size_t i = 0; i < dim; ++i)
    u.push_back(rational_to_string(a.unit()[i]));
  j["unit"] = std::move(u);
  json m = json::array();
  for (std::size_t i = 0; i < dim; ++i) {
    json row = json::array();
    for (std::size_t jj = 0; jj < dim; ++jj) {
      json cell = json::array();
      for (std::size_t k = 0; k < dim; ++k)
        cell.push_back(rational_to_string(a.c(i, jj, k)));
      row.push_back(std::move(cell));
    }
    m.push_back(std::move(row));
  }
  j["mult"] = std::move(m);
  return j.dump();
}

}  // namespace hopfish
