#include "shfc/module_file.hpp"

#include <optional>

#include "shfc/errors.hpp"

namespace shfc {

namespace {

struct TextPosition {
  int line;
  int column;
};

TextPosition position_of(std::string_view text, std::size_t offset) {
  TextPosition p{1, 1};
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

/// Offsets of the opening quotes of every string inside the value of the
/// top-level "relations" key, in document order.
std::vector<std::size_t> relation_string_offsets(std::string_view text) {
  std::vector<std::size_t> offsets;
  int depth = 0;
  int relations_depth = -1;
  std::optional<std::string> last_key;
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c == '"') {
      std::size_t start = k;
      std::string value;
      for (++k; k < text.size() && text[k] != '"'; ++k) {
        if (text[k] == '\\') ++k;
        if (k < text.size()) value += text[k];
      }
      if (relations_depth >= 0) {
        offsets.push_back(start);
      } else if (depth == 1) {
        last_key = value;
      }
    } else if (c == '{' || c == '[') {
      if (depth == 1 && last_key == "relations" && relations_depth < 0) relations_depth = depth;
      ++depth;
    } else if (c == '}' || c == ']') {
      --depth;
      if (depth == relations_depth) relations_depth = -1;
    } else if (c == ',' && depth == 1) {
      last_key.reset();
    }
  }
  return offsets;
}

template <class K>
Presentation<K> build(const Ring<K>& ring, std::string_view text, const nlohmann::json& doc) {
  std::vector<int> gens = doc.at("generators").get<std::vector<int>>();
  const auto& rels = doc.at("relations");
  if (!rels.is_array()) throw ParseError("\"relations\" must be an array of columns", 0, 0);
  auto offsets = relation_string_offsets(text);

  std::vector<std::vector<Polynomial<K>>> columns;
  GradedFreeModule source;
  std::size_t string_index = 0;
  for (std::size_t c = 0; c < rels.size(); ++c) {
    const auto& col = rels[c];
    if (!col.is_array() || col.size() != gens.size()) {
      throw ParseError("relation column " + std::to_string(c) + " must list one polynomial per generator", 0, 0);
    }
    std::vector<Polynomial<K>> entries;
    std::optional<int> degree;
    for (std::size_t g = 0; g < col.size(); ++g, ++string_index) {
      if (!col[g].is_string()) throw ParseError("relation entries must be strings", 0, 0);
      auto s = col[g].get<std::string>();
      Polynomial<K> p(ring);
      try {
        p = parse_polynomial(ring, s);
      } catch (const ParseError& e) {
        if (string_index < offsets.size()) {
          auto pos = position_of(text, offsets[string_index] + static_cast<std::size_t>(e.column()));
          throw ParseError("in relation column " + std::to_string(c) + ": " + s, pos.line, pos.column);
        }
        throw;
      }
      if (!p.is_zero()) {
        if (!p.is_homogeneous()) throw InhomogeneousError(static_cast<int>(c));
        int d = *p.degree() + gens[g];
        if (degree && *degree != d) throw InhomogeneousError(static_cast<int>(c));
        degree = d;
      }
      entries.push_back(std::move(p));
    }
    source.degrees.push_back(degree.value_or(0));
    columns.push_back(std::move(entries));
  }
  return Presentation<K>(GradedMap<K>(ring, std::move(source), GradedFreeModule{gens}, std::move(columns)));
}

}  // namespace

template <>
Ring<PrimeField> make_ring<PrimeField>(std::uint32_t characteristic, int num_vars) {
  if (characteristic >= (1u << 31) || !is_prime(characteristic)) {
    throw DomainError("characteristic must be 0 or a prime below 2^31");
  }
  return Ring<PrimeField>(PrimeField(characteristic), num_vars);
}

template <>
Ring<RationalField> make_ring<RationalField>(std::uint32_t characteristic, int num_vars) {
  if (characteristic != 0) throw DomainError("rational ring has characteristic 0");
  return Ring<RationalField>(RationalField(), num_vars);
}

AnyPresentation parse_module(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto pos = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string what = e.what();
    if (auto k = what.find("parse error"); k != std::string::npos) {
      if (auto colon = what.find(": ", k); colon != std::string::npos) what = what.substr(colon + 2);
    }
    throw ParseError(what, pos.line, pos.column);
  }
  try {
    const auto& ring = doc.at("ring");
    auto p = ring.at("char").get<std::int64_t>();
    int vars = ring.at("vars").get<int>();
    if (p < 0 || p >= (std::int64_t{1} << 31)) throw ParseError("characteristic out of range", 0, 0);
    if (vars < 2 || vars > 8) throw ParseError("\"vars\" must lie in 2..8", 0, 0);
    if (p == 0) return build(make_ring<RationalField>(0, vars), text, doc);
    if (!is_prime(static_cast<std::uint64_t>(p))) throw ParseError("characteristic must be 0 or prime", 0, 0);
    return build(make_ring<PrimeField>(static_cast<std::uint32_t>(p), vars), text, doc);
  } catch (const nlohmann::json::exception& e) {
    std::string what = e.what();
    if (auto k = what.find("] "); k != std::string::npos) what = what.substr(k + 2);
    throw ParseError("schema: " + what, 0, 0);
  }
}

template <class K>
nlohmann::json module_to_json(const Presentation<K>& m) {
  nlohmann::json rels = nlohmann::json::array();
  const auto& a = m.relations();
  for (int c = 0; c < a.cols(); ++c) {
    nlohmann::json col = nlohmann::json::array();
    for (int r = 0; r < a.rows(); ++r) col.push_back(a.entry(r, c).to_string());
    rels.push_back(col);
  }
  return {{"ring", {{"char", m.ring().characteristic()}, {"vars", m.ring().num_vars()}}},
          {"generators", m.generators().degrees},
          {"relations", rels}};
}

template <class K>
std::string serialize_module(const Presentation<K>& m) {
  return module_to_json(m).dump() + "\n";
}

std::string serialize_module(const AnyPresentation& m) {
  return std::visit([](const auto& p) { return serialize_module(p); }, m);
}

template nlohmann::json module_to_json(const Presentation<PrimeField>&);
template nlohmann::json module_to_json(const Presentation<RationalField>&);
template std::string serialize_module(const Presentation<PrimeField>&);
template std::string serialize_module(const Presentation<RationalField>&);

}  // namespace shfc
