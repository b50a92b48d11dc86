#include <mukai/serialize.hpp>

#include <mukai/catalog.hpp>

#include <utility>

namespace mukai {

namespace {

std::string require_string(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) {
    throw ParseError(std::string("expected string field \"") + key + "\"");
  }
  return j[key].get<std::string>();
}

int require_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ParseError(std::string("expected integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

}  // namespace

nlohmann::json class_to_json(const HodgeClass& x) {
  nlohmann::json out = nlohmann::json::object();
  for (int i = 0; i < x.dim(); ++i) {
    if (x[i] != 0) out[x.owner()->element(i).name] = fraction_string(x[i]);
  }
  return out;
}

HodgeClass class_from_json(const nlohmann::json& j, const AlgebraPtr& ring) {
  if (!j.is_object()) throw ParseError("class literal must be an object of name -> rational");
  std::vector<Rational> coeffs(ring->dim(), Rational(0));
  for (const auto& [name, value] : j.items()) {
    const int index = ring->index_of(name);
    if (index < 0) throw ParseError("unknown basis element: " + name);
    if (!value.is_string()) throw ParseError("coefficients must be \"p/q\" strings");
    coeffs[index] = parse_rational(value.get<std::string>());
  }
  return ring->make_class(std::move(coeffs));
}

SpacePtr space_from_spec(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("space spec must be an object");
  const std::string kind = require_string(j, "kind");
  if (kind == "projective") return projective_space(require_int(j, "n"));
  if (kind == "curve") return curve(require_int(j, "genus"));
  if (kind == "point") return point();
  if (kind == "product") {
    if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].size() < 2) {
      throw ParseError("product spec needs at least two factors");
    }
    SpacePtr acc = space_from_spec(j["factors"][0]);
    for (std::size_t i = 1; i < j["factors"].size(); ++i) {
      acc = product(acc, space_from_spec(j["factors"][i]));
    }
    return acc;
  }
  throw ParseError("unknown space kind: " + kind);
}

SpacePtr space_from_spec_text(const std::string& text) {
  return space_from_spec(parse_json(text));
}

BundleData bundle_from_spec(const nlohmann::json& j, const SpacePtr& x) {
  if (!j.is_object()) throw ParseError("bundle spec must be an object");
  const std::string kind = require_string(j, "kind");
  if (kind == "line") return line_bundle(x, require_int(j, "twist"));
  if (kind == "tangent") return bundle_from_ch(x->tangent_ch);
  if (kind == "sum" || kind == "tensor") {
    if (!j.contains("parts") || !j["parts"].is_array() || j["parts"].empty()) {
      throw ParseError(kind + " spec needs a nonempty parts array");
    }
    std::vector<BundleData> parts;
    for (const auto& p : j["parts"]) parts.push_back(bundle_from_spec(p, x));

    bool all_roots = true;
    for (const auto& p : parts) all_roots = all_roots && !p.chern_roots.empty();

    if (kind == "sum") {
      if (all_roots) {
        BundleData out;
        for (auto& p : parts) {
          out.rank += p.rank;
          for (auto& r : p.chern_roots) out.chern_roots.push_back(std::move(r));
        }
        return out;
      }
      HodgeClass ch = x->ring->zero();
      for (const auto& p : parts) ch += chern_character(p, *x);
      return bundle_from_ch(std::move(ch));
    }

    // tensor
    if (all_roots) {
      BundleData acc = std::move(parts[0]);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        BundleData next;
        next.rank = acc.rank * parts[i].rank;
        for (const auto& r : acc.chern_roots) {
          for (const auto& s : parts[i].chern_roots) next.chern_roots.push_back(r + s);
        }
        acc = std::move(next);
      }
      return acc;
    }
    HodgeClass ch = x->ring->unit();
    for (const auto& p : parts) ch = ch * chern_character(p, *x);
    return bundle_from_ch(std::move(ch));
  }
  throw ParseError("unknown bundle kind: " + kind);
}

Kernel kernel_from_spec(const nlohmann::json& j, const SpacePtr& x, const SpacePtr& y,
                        uint64_t default_seed) {
  if (!j.is_object()) throw ParseError("kernel spec must be an object");
  const std::string kind = require_string(j, "kind");
  if (kind == "identity") {
    if (x != y) throw SpaceMismatch("identity kernel needs matching endpoints");
    return identity_kernel(x);
  }
  if (kind == "rank_one") {
    if (!j.contains("left") || !j.contains("right")) {
      throw ParseError("rank_one spec needs left and right classes");
    }
    return rank_one_kernel(x, y, class_from_json(j["left"], x->ring),
                           class_from_json(j["right"], y->ring));
  }
  if (kind == "line_bundle") {
    return line_bundle_kernel(x, y, require_int(j, "a"), require_int(j, "b"));
  }
  if (kind == "random") {
    uint64_t seed = default_seed;
    if (j.contains("seed")) {
      if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
        throw ParseError("seed must be an integer");
      }
      seed = j["seed"].get<uint64_t>();
    }
    return random_kernel(x, y, seed, 0);
  }
  throw ParseError("unknown kernel kind: " + kind);
}

nlohmann::json matrix_to_json(const RationalMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(fraction_string(v));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string format_matrix(const RationalMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) out += ", ";
      out += pretty_string(m[i][j]);
    }
    out += "]";
  }
  return out + "]";
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
}

}  // namespace mukai
