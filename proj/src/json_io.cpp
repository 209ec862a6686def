#include "ospo/json_io.hpp"

#include <cctype>
#include <stdexcept>

namespace ospo {

namespace {

Json big(const std::string& s, bool fits, std::int64_t v) { return fits ? Json(v) : Json(s); }

Rat scalar_from(const Json& num, const Json& den) {
  auto str = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
  return Rat::from_parts(str(num), str(den));
}

}  // namespace

Json rat_parts(const Rat& r) {
  bool fits = r.fits_int64();
  Json j;
  j["num"] = big(r.num_str(), fits, fits ? r.num_i64() : 0);
  j["den"] = big(r.den_str(), fits, fits ? r.den_i64() : 0);
  return j;
}

Rat rat_from_parts(const Json& j) { return scalar_from(j.at("num"), j.at("den")); }

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a JSON array");
  return Partition(j.get<std::vector<int>>());
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exponents"] = e;
    auto rp = rat_parts(c);
    t["num"] = rp["num"];
    t["den"] = rp["den"];
    out.push_back(t);
  }
  return out;
}

LaurentPoly poly_from_json(const Json& j, std::shared_ptr<const VarNames> vars) {
  LaurentPoly p(vars, Rat(0));
  for (const auto& t : j) {
    auto e = t.at("exponents").get<Exponents>();
    if (e.size() != vars->size()) throw std::invalid_argument("exponent length does not match the variables");
    p.add_term(e, rat_from_parts(t));
  }
  return p;
}

Json to_json(const BrauerDiagram& d) {
  Json out = Json::array();
  for (auto [a, b] : d.edges()) out.push_back({a, b});
  return out;
}

BrauerDiagram diagram_from_json(int k, const Json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return BrauerDiagram::from_edges(k, edges);
}

Json to_json(const OneFactor& f) {
  Json out = Json::array();
  for (auto [a, b] : f) out.push_back({a, b});
  return out;
}

Json to_json(const TensorVector& v, const ModuleData& M) {
  Json out = Json::array();
  for (const auto& [w, c] : v.terms()) {
    Json t;
    Json toks = Json::array();
    for (int x : w) toks.push_back(M.token(x));
    t["word"] = toks;
    auto rp = rat_parts(c);
    t["num"] = rp["num"];
    t["den"] = rp["den"];
    out.push_back(t);
  }
  return out;
}

Json to_json(const StandardTableau& T) { return Json(T.rows()); }

Json to_json(const Filling& T, const Alphabet& A) {
  Json out = Json::array();
  for (const auto& row : T) {
    Json r = Json::array();
    for (int x : row) r.push_back(x == kHole ? Json(nullptr) : Json(A.token(x)));
    out.push_back(r);
  }
  return out;
}

Filling filling_from_json(const Json& j, const Alphabet& A) {
  if (!j.is_array()) throw std::invalid_argument("tableau must be a list of rows");
  Filling T;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("tableau row must be a list");
    std::vector<int> r;
    for (const auto& x : row) {
      if (x.is_null() || (x.is_string() && x.get<std::string>() == "_"))
        r.push_back(kHole);
      else if (x.is_string())
        r.push_back(A.parse(x.get<std::string>()));
      else
        throw std::invalid_argument("tableau entries must be letter tokens");
    }
    T.push_back(r);
  }
  return T;
}

Json to_json(const UpDownChain& chain) {
  Json out = Json::array();
  for (const auto& p : chain) out.push_back(to_json(p));
  return out;
}

UpDownChain chain_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("chain must be a list of partitions");
  UpDownChain c;
  for (const auto& p : j) c.push_back(partition_from_json(p));
  return c;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    parts.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)))
      cur += c;
    else if (c == ',' || c == ' ' || c == '[' || c == ']' || c == '(' || c == ')')
      flush();
    else
      throw std::invalid_argument("bad character in partition: " + std::string(text));
  }
  flush();
  return Partition(parts);
}

UpDownChain parse_chain(std::string_view text) {
  std::string s(text);
  auto j = Json::parse(s, nullptr, false);
  if (!j.is_discarded()) return chain_from_json(j);
  // ((),(1),(2,1)) form
  UpDownChain c;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') {
      if (++depth == 2) cur.clear();
    } else if (ch == ')') {
      if (depth == 2) c.push_back(parse_partition(cur));
      if (--depth < 0) throw std::invalid_argument("unbalanced parentheses in chain");
    } else if (depth == 2) {
      cur += ch;
    } else if (ch != ',' && ch != ' ') {
      throw std::invalid_argument("bad character in chain: " + s);
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced parentheses in chain");
  return c;
}

Filling parse_tableau_arg(std::string_view text, const Alphabet& A) {
  auto j = Json::parse(std::string(text), nullptr, false);
  if (!j.is_discarded()) return filling_from_json(j, A);
  return parse_filling(text, A);
}

}  // namespace ospo
