#include "newform_weyl/exactnum/serialization.hpp"

#include <charconv>

#include "newform_weyl/error.hpp"

namespace nw {

ordered_json to_json(const SymbolicCoefficient& x) {
  ordered_json logs = ordered_json::object();
  for (const auto& [p, c] : x.log_primes().terms()) logs[std::to_string(p)] = c.str();
  ordered_json out;
  out["over_pi"] = x.over_pi();
  out["const"] = x.constant().str();
  out["log_pi"] = x.log_pi().str();
  out["logs"] = std::move(logs);
  return out;
}

std::string to_canonical_json(const SymbolicCoefficient& x) { return to_json(x).dump(); }

namespace {

Rational rational_field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw DomainError(std::string("symbolic coefficient JSON: missing string field '") + key + "'");
  }
  return Rational::parse(j.at(key).get<std::string>());
}

}  // namespace

SymbolicCoefficient symbolic_from_json(const ordered_json& j) {
  if (!j.is_object()) throw DomainError("symbolic coefficient JSON: expected an object");
  if (!j.contains("over_pi") || !j.at("over_pi").is_boolean()) {
    throw DomainError("symbolic coefficient JSON: missing boolean field 'over_pi'");
  }
  LogCombination logs;
  if (j.contains("logs")) {
    const auto& entries = j.at("logs");
    if (!entries.is_object()) throw DomainError("symbolic coefficient JSON: 'logs' must be an object");
    for (const auto& [key, value] : entries.items()) {
      std::uint64_t p = 0;
      const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), p);
      if (ec != std::errc() || ptr != key.data() + key.size() || p < 2) {
        throw DomainError("symbolic coefficient JSON: bad prime key '" + key + "'");
      }
      if (!value.is_string()) throw DomainError("symbolic coefficient JSON: log coefficient must be a string");
      logs.add_term(p, Rational::parse(value.get<std::string>()));
    }
  }
  return SymbolicCoefficient(j.at("over_pi").get<bool>(), rational_field(j, "const"), rational_field(j, "log_pi"),
                             std::move(logs));
}

SymbolicCoefficient symbolic_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("symbolic coefficient JSON: ") + e.what());
  }
  return symbolic_from_json(j);
}

}  // namespace nw
