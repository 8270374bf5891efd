#include "linrec/io.hpp"

#include <cctype>
#include <optional>

#include "json.hpp"
#include "linrec/error.hpp"

namespace linrec::io {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& why) { throw ParseError("descriptor: " + why); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) schema_error("expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing field '") + key + "'");
  return *it;
}

Integer parse_integer(const json& j) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Integer v;
    const std::string body = !s.empty() && s[0] == '+' ? s.substr(1) : s;
    if (body.empty() || v.set_str(body, 10) != 0) schema_error("'" + s + "' is not a decimal integer");
    return v;
  }
  schema_error("expected a decimal string, got " + j.dump());
}

Value parse_value(const json& j) {
  Value v;
  if (j.is_array()) {
    for (const auto& c : j) v.push_back(parse_integer(c));
  } else {
    v.push_back(parse_integer(j));
  }
  if (v.empty()) schema_error("empty value");
  return v;
}

std::vector<Value> parse_values(const json& j, const char* what) {
  if (!j.is_array()) schema_error(std::string("'") + what + "' must be an array");
  std::vector<Value> out;
  for (const auto& v : j) out.push_back(parse_value(v));
  return out;
}

std::optional<RingSpec> ring_shorthand(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  }
  if (t == "Z") return RingSpec::integers();
  if (t.rfind("Z/", 0) != 0) return std::nullopt;
  Integer m;
  if (t.size() == 2 || m.set_str(t.substr(2), 10) != 0) throw ParseError("bad ring '" + t + "'");
  if (m < 2) throw ParseError("modulus must be at least 2");
  return RingSpec::integers_mod(m);
}

RingSpec ring_from_json(const json& j) {
  if (j.is_string()) {
    if (auto r = ring_shorthand(j.get_ref<const std::string&>())) return *r;
    schema_error("ring must be \"Z\", \"Z/<m>\" or an object");
  }
  const auto& kind = field(j, "kind");
  if (kind == "int") return RingSpec::integers();
  if (kind == "mod") {
    const Integer m = parse_integer(field(j, "modulus"));
    if (m < 2) schema_error("modulus must be at least 2");
    return RingSpec::integers_mod(m);
  }
  schema_error("ring kind must be \"int\" or \"mod\"");
}

Poly poly_from_json(const RingSpec& ring, const json& j) {
  if (j.is_string()) return parse_poly(ring, j.get_ref<const std::string&>());
  const auto& c = field(j, "coeffs");
  if (!c.is_array()) schema_error("'coeffs' must be an array");
  std::vector<Integer> coeffs;
  for (const auto& x : c) coeffs.push_back(parse_integer(x));
  return Poly(ring, std::move(coeffs));
}

json integer_json(const Integer& v) { return v.get_str(); }

json value_json(const Value& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(integer_json(c));
  return a;
}

json values_json(const std::vector<Value>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(value_json(v));
  return a;
}

json ring_json(const RingSpec& r) {
  if (r.is_integers()) return {{"kind", "int"}};
  return {{"kind", "mod"}, {"modulus", r.modulus().get_str()}};
}

json poly_json(const Poly& f) {
  json a = json::array();
  for (const auto& c : f.coeffs()) a.push_back(integer_json(c));
  return {{"coeffs", a}};
}

json with_name(json j, std::string_view name) {
  if (!name.empty()) j["name"] = std::string(name);
  return j;
}

std::size_t declared_dim(const json& j, const std::vector<Value>& values) {
  auto it = j.find("dim");
  if (it == j.end()) return values.empty() ? 1 : values.front().size();
  if (!it->is_number_unsigned() || it->get<std::size_t>() == 0) {
    schema_error("'dim' must be a positive integer");
  }
  const auto dim = it->get<std::size_t>();
  for (const auto& v : values) {
    if (v.size() != dim) schema_error("value of dimension " + std::to_string(v.size()) +
                                      " in a descriptor with dim " + std::to_string(dim));
  }
  return dim;
}

template <class F>
auto validated(F&& build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    schema_error(e.what());
  }
}

}  // namespace

Descriptor parse_descriptor(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) schema_error("expected an object");

  return validated([&]() -> Descriptor {
    std::string name;
    if (auto it = j.find("name"); it != j.end()) {
      if (!it->is_string()) schema_error("'name' must be a string");
      name = it->get<std::string>();
    }
    const RingSpec ring = ring_from_json(field(j, "ring"));

    if (j.contains("elem")) {
      const auto& elem_j = field(j, "elem");
      if (!elem_j.is_array() || elem_j.empty()) schema_error("'elem' must be a non-empty array");
      std::vector<Poly> elem;
      for (const auto& e : elem_j) elem.push_back(poly_from_json(ring, e));
      auto values = parse_values(field(j, "values"), "values");
      declared_dim(j, values);
      return {name, KSeq(std::move(elem), std::move(values))};
    }

    Poly f = poly_from_json(ring, field(j, "charpoly"));
    auto init = parse_values(field(j, "init"), "init");
    const std::size_t dim = declared_dim(j, init);
    std::string indexing = "N";
    if (auto it = j.find("indexing"); it != j.end()) {
      if (!it->is_string() || (*it != "Z" && *it != "N")) schema_error("'indexing' must be \"N\" or \"Z\"");
      indexing = it->get<std::string>();
    }
    if (indexing == "Z") return {name, BiRecSeq(std::move(f), std::move(init), dim)};
    return {name, LinRecSeq(std::move(f), std::move(init))};
  });
}

RingSpec parse_ring(std::string_view text) {
  if (auto r = ring_shorthand(text)) return *r;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) schema_error("ring must be an object");
    return ring_from_json(j);
  } catch (const json::parse_error&) {
    throw ParseError("bad ring '" + std::string(text) + "': expected Z, Z/<m> or JSON");
  }
}

Poly parse_poly_text(const RingSpec& ring, std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first < text.size() && text[first] == '{') {
    try {
      return poly_from_json(ring, json::parse(text));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid polynomial JSON: ") + e.what());
    }
  }
  return parse_poly(ring, text);
}

std::string to_json(const RingSpec& ring) { return ring_json(ring).dump(); }

std::string to_json(const Poly& f) { return poly_json(f).dump(); }

std::string to_json(const LinRecSeq& u, std::string_view name) {
  json j = {{"ring", ring_json(u.ring())},
            {"dim", u.dim()},
            {"charpoly", poly_json(u.charpoly())},
            {"init", values_json(u.init())}};
  return with_name(std::move(j), name).dump();
}

std::string to_json(const BiRecSeq& w, std::string_view name) {
  json j = {{"ring", ring_json(w.ring())},
            {"dim", w.dim()},
            {"charpoly", poly_json(w.charpoly())},
            {"init", values_json(w.init())},
            {"indexing", "Z"}};
  return with_name(std::move(j), name).dump();
}

std::string to_json(const KSeq& w, std::string_view name) {
  json elem = json::array();
  for (const auto& f : w.elem()) elem.push_back(poly_json(f));
  json j = {{"ring", ring_json(w.ring())},
            {"dim", w.dim()},
            {"elem", elem},
            {"values", values_json(w.values())}};
  return with_name(std::move(j), name).dump();
}

std::string to_json(const AnySeq& s, std::string_view name) {
  return std::visit([&](const auto& x) { return to_json(x, name); }, s);
}

}  // namespace linrec::io
