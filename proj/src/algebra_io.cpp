#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lieinv/errors.hpp"
#include "lieinv/lie_algebra.hpp"

namespace lieinv {

namespace {

using nlohmann::json;

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
  return obj.at(key);
}

std::uint32_t index_field(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw InputError(where + "." + key + ": expected a positive integer");
  }
  return static_cast<std::uint32_t>(v.get<long long>());
}

Rational rational_field(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const InvalidRational& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": invalid rational, expected a string \"p/q\"");
}

}  // namespace

LieAlgebra parse_algebra_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  const json& dim_field = field(doc, "dim", "algebra");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 1) {
    throw InputError("algebra.dim: expected a positive integer");
  }
  const auto n = static_cast<std::size_t>(dim_field.get<long long>());
  std::vector<std::string> basis;
  if (doc.contains("basis")) {
    const json& b = doc.at("basis");
    if (!b.is_array()) throw InputError("algebra.basis: expected an array of strings");
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!b[i].is_string()) throw InputError("algebra.basis[" + std::to_string(i) + "]: expected a string");
      basis.push_back(b[i].get<std::string>());
    }
  }
  LieAlgebra alg(n, std::move(basis));
  if (doc.contains("name") && doc.at("name").is_string()) alg.set_name(doc.at("name").get<std::string>());

  const json& brackets = doc.contains("brackets") ? doc.at("brackets") : json::array();
  if (!brackets.is_array()) throw InputError("algebra.brackets: expected an array");
  for (std::size_t b = 0; b < brackets.size(); ++b) {
    const std::string where = "brackets[" + std::to_string(b) + "]";
    const json& entry = brackets[b];
    const auto i = index_field(entry, "i", where);
    const auto j = index_field(entry, "j", where);
    if (i >= j) throw InputError(where + ": i < j required");
    if (j > n) throw InputError(where + ".j: index " + std::to_string(j) + " exceeds dim " + std::to_string(n));
    const json& terms = field(entry, "terms", where);
    if (!terms.is_array()) throw InputError(where + ".terms: expected an array");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tw = where + ".terms[" + std::to_string(t) + "]";
      const auto k = index_field(terms[t], "k", tw);
      const Rational c = rational_field(field(terms[t], "c", tw), tw + ".c");
      try {
        alg.add_bracket(i, j, k, c);
      } catch (const IndexOutOfRange& e) {
        throw InputError(tw + ": " + e.what());
      }
    }
  }
  if (doc.contains("generator_order")) {
    std::vector<std::uint32_t> order;
    for (const auto& v : doc.at("generator_order")) {
      if (!v.is_number_integer()) throw InputError("algebra.generator_order: expected integers");
      order.push_back(v.get<std::uint32_t>());
    }
    try {
      alg.set_generator_order(std::move(order));
    } catch (const Error& e) {
      throw InputError(std::string("algebra.generator_order: ") + e.what());
    }
  }
  if (doc.contains("generator_signs")) {
    std::vector<int> signs;
    for (const auto& v : doc.at("generator_signs")) {
      if (!v.is_number_integer()) throw InputError("algebra.generator_signs: expected +1/-1 integers");
      signs.push_back(v.get<int>());
    }
    try {
      alg.set_generator_signs(std::move(signs));
    } catch (const Error& e) {
      throw InputError(std::string("algebra.generator_signs: ") + e.what());
    }
  }
  return alg;
}

LieAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra_json(ss.str());
}

std::string algebra_to_json(const LieAlgebra& alg) {
  json doc;
  if (!alg.name().empty()) doc["name"] = alg.name();
  doc["dim"] = alg.dim();
  doc["basis"] = alg.basis();
  json brackets = json::array();
  for (const auto& [ij, terms] : alg.upper_brackets()) {
    json t = json::array();
    for (const auto& term : terms) t.push_back({{"k", term.k}, {"c", to_string(term.c)}});
    brackets.push_back({{"i", ij.first}, {"j", ij.second}, {"terms", t}});
  }
  doc["brackets"] = brackets;
  if (!alg.generator_order().empty()) doc["generator_order"] = alg.generator_order();
  if (!alg.generator_signs().empty()) doc["generator_signs"] = alg.generator_signs();
  return doc.dump(2) + "\n";
}

}  // namespace lieinv
