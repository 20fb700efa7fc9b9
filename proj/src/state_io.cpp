#include "calogero/state_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace calogero {

namespace {

using ordered_json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::vector<double> real_array(const nlohmann::json& doc, const char* key, std::size_t n) {
  const auto& node = doc.at(key);
  if (!node.is_array()) throw ValidationError(std::string("\"") + key + "\" must be an array");
  if (node.size() != n) {
    std::ostringstream msg;
    msg << "\"" << key << "\" has " << node.size() << " entries but n = " << n;
    throw ValidationError(msg.str());
  }
  std::vector<double> out;
  out.reserve(n);
  for (const auto& x : node) {
    if (!x.is_number()) throw ValidationError(std::string("\"") + key + "\" must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

State parse_state(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_and_column(text, e.byte);
    std::ostringstream msg;
    msg << "malformed JSON at line " << line << ", column " << column << ": " << e.what();
    throw MalformedInput(msg.str(), line, column);
  }
  if (!doc.is_object()) throw ValidationError("state must be a JSON object");
  if (!doc.contains("n") || !doc["n"].is_number_integer())
    throw ValidationError("state requires integer field \"n\"");
  if (!doc.contains("g") || !doc["g"].is_number())
    throw ValidationError("state requires numeric field \"g\"");
  const auto n_signed = doc["n"].get<long long>();
  if (n_signed < 1) throw ValidationError("\"n\" must be at least 1");
  const auto n = static_cast<std::size_t>(n_signed);
  const double g = doc["g"].get<double>();

  const bool has_qp = doc.contains("q") || doc.contains("p");
  const bool has_aa = doc.contains("lambda") || doc.contains("phi");
  if (has_qp == has_aa)
    throw ValidationError("state must contain exactly one of (q, p) or (lambda, phi)");
  if (has_qp) {
    if (!doc.contains("q") || !doc.contains("p"))
      throw ValidationError("state needs both \"q\" and \"p\"");
    return PhaseSpacePoint(real_array(doc, "q", n), real_array(doc, "p", n), g);
  }
  if (!doc.contains("lambda") || !doc.contains("phi"))
    throw ValidationError("state needs both \"lambda\" and \"phi\"");
  return ActionAnglePoint(real_array(doc, "lambda", n), real_array(doc, "phi", n), g);
}

std::string dump_state(const State& state) {
  ordered_json out;
  std::visit(
      [&out](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        out["n"] = s.n();
        out["g"] = s.g();
        if constexpr (std::is_same_v<T, PhaseSpacePoint>) {
          out["q"] = std::vector<double>(s.q().begin(), s.q().end());
          out["p"] = std::vector<double>(s.p().begin(), s.p().end());
        } else {
          out["lambda"] = std::vector<double>(s.lambda().begin(), s.lambda().end());
          out["phi"] = std::vector<double>(s.phi().begin(), s.phi().end());
        }
      },
      state);
  return out.dump();
}

}  // namespace calogero
