#include "talg/io.hpp"

#include <cstdint>
#include <cstdio>

#include "json.hpp"

namespace talg {

namespace {

using nlohmann::json;

int read_int(const json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ParseError("algebra document: missing field '" + key + "'");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw ParseError("algebra document: field '" + key + "' is not an integer");
  return v.get<int>();
}

std::vector<int> read_unary(const json& v, const std::string& name, int n) {
  if (!v.is_array() || v.size() != static_cast<size_t>(n))
    throw ParseError("algebra document: table '" + name + "' must be an array of length n");
  std::vector<int> out;
  out.reserve(n);
  for (const json& cell : v) {
    if (!cell.is_number_integer())
      throw ParseError("algebra document: table '" + name + "' has a non-integer entry");
    int x = cell.get<int>();
    if (x < 0 || x >= n)
      throw ParseError("algebra document: table '" + name + "' has an index out of range");
    out.push_back(x);
  }
  return out;
}

std::vector<int> read_binary(const json& doc, const std::string& name, int n) {
  if (!doc.contains(name)) throw ParseError("algebra document: missing table '" + name + "'");
  const json& v = doc.at(name);
  if (!v.is_array() || v.size() != static_cast<size_t>(n))
    throw ParseError("algebra document: table '" + name + "' must have n rows");
  std::vector<int> out;
  out.reserve(static_cast<size_t>(n) * n);
  for (const json& row : v) {
    auto r = read_unary(row, name, n);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

void reject_unknown(const json& doc, const std::vector<std::string>& allowed, const char* where) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    bool known = false;
    for (const auto& k : allowed)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known)
      throw ParseError(std::string("algebra document: unknown field '") + it.key() + "' in " + where);
  }
}

// Derive the neutral element of join (zero) or meet (one) when not declared.
int derive_bound(const FiniteLattice& l, bool zero_side) {
  for (int a = 0; a < l.n; ++a) {
    bool neutral = true;
    for (int x = 0; x < l.n && neutral; ++x)
      neutral = zero_side ? (l.join(a, x) == x) : (l.meet(a, x) == x);
    if (neutral) return a;
  }
  throw ParseError(std::string("algebra document: tables have no ") + (zero_side ? "zero" : "one"));
}

json unary_to_json(const std::vector<int>& t) { return json(t); }

json binary_to_json(const std::vector<int>& t, int n) {
  json rows = json::array();
  for (int a = 0; a < n; ++a) {
    json row = json::array();
    for (int b = 0; b < n; ++b) row.push_back(t[a * n + b]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Algebra load_algebra(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("algebra document: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("algebra document: not a JSON object");
  if (!doc.contains("kind") || !doc.at("kind").is_string())
    throw ParseError("algebra document: missing or non-string 'kind'");
  const std::string kind = doc.at("kind").get<std::string>();

  std::vector<std::string> allowed{"kind", "n", "meet", "join", "zero", "one"};
  if (kind == "t")
    allowed.push_back("unary");
  else if (kind == "ht") {
    allowed.push_back("unary");
    allowed.push_back("imp");
    allowed.push_back("neg");
  } else if (kind != "lattice")
    throw ParseError("algebra document: unknown kind '" + kind + "'");
  reject_unknown(doc, allowed, "the top-level object");

  const int n = read_int(doc, "n");
  if (n < 1) throw ParseError("algebra document: n must be >= 1");
  if (n > kLawCheckGuard) throw ParseError("algebra document: n exceeds the supported size");

  FiniteLattice l;
  l.n = n;
  l.meet_table = read_binary(doc, "meet", n);
  l.join_table = read_binary(doc, "join", n);
  l.zero = doc.contains("zero") ? read_int(doc, "zero") : derive_bound(l, true);
  l.one = doc.contains("one") ? read_int(doc, "one") : derive_bound(l, false);
  try {
    validate_structure(l);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("algebra document: ") + e.what());
  }

  if (kind == "lattice") return l;

  if (!doc.contains("unary") || !doc.at("unary").is_object())
    throw ParseError("algebra document: missing 'unary' object");
  const json& unary = doc.at("unary");

  if (kind == "t") {
    reject_unknown(unary, {"c", "s1", "s2"}, "'unary'");
    for (const char* k : {"c", "s1", "s2"})
      if (!unary.contains(k)) throw ParseError(std::string("algebra document: missing unary table '") + k + "'");
    TStructure t;
    t.lattice = std::move(l);
    t.c = read_unary(unary.at("c"), "c", n);
    t.s1 = read_unary(unary.at("s1"), "s1", n);
    t.s2 = read_unary(unary.at("s2"), "s2", n);
    return t;
  }

  reject_unknown(unary, {"s1", "s2"}, "'unary'");
  for (const char* k : {"s1", "s2"})
    if (!unary.contains(k)) throw ParseError(std::string("algebra document: missing unary table '") + k + "'");
  HTAlgebra h;
  h.lattice = std::move(l);
  h.s1 = read_unary(unary.at("s1"), "s1", n);
  h.s2 = read_unary(unary.at("s2"), "s2", n);
  h.imp = read_binary(doc, "imp", n);
  if (!doc.contains("neg")) throw ParseError("algebra document: missing table 'neg'");
  h.neg = read_unary(doc.at("neg"), "neg", n);
  return h;
}

std::string save_algebra(const Algebra& a) {
  const FiniteLattice& l = lattice_of(a);
  json doc;
  doc["kind"] = kind_name(kind_of(a));
  doc["n"] = l.n;
  doc["meet"] = binary_to_json(l.meet_table, l.n);
  doc["join"] = binary_to_json(l.join_table, l.n);
  doc["zero"] = l.zero;
  doc["one"] = l.one;
  if (const auto* t = std::get_if<TStructure>(&a)) {
    doc["unary"] = {{"c", unary_to_json(t->c)},
                    {"s1", unary_to_json(t->s1)},
                    {"s2", unary_to_json(t->s2)}};
  } else if (const auto* h = std::get_if<HTAlgebra>(&a)) {
    doc["unary"] = {{"s1", unary_to_json(h->s1)}, {"s2", unary_to_json(h->s2)}};
    doc["imp"] = binary_to_json(h->imp, l.n);
    doc["neg"] = unary_to_json(h->neg);
  }
  return doc.dump(2) + "\n";
}

std::string content_digest(const std::string& bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace talg
