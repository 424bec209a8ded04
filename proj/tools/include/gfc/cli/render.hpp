#pragma once

#include <string>

#include "json.hpp"

#include "gfc/cli/evaluator.hpp"
#include "gfc/io.hpp"

namespace gfc::cli {

// {"dim":n,"terms":[{"blade":[1,2],"coeff":"-3/4"}, ...]}, blades ascending.
template <Field F>
nlohmann::json to_json(const Multivector<F>& u) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [b, c] : u.terms()) {
    terms.push_back({{"blade", b.indices()}, {"coeff", ScalarTraits<F>::format(c)}});
  }
  return {{"dim", u.dim()}, {"terms", std::move(terms)}};
}

// {"pairs":[{"left":..., "right":...}]}; the coefficient rides on the right leg.
template <Field F>
nlohmann::json to_json(const Tensor2<F>& t) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [left, right] : sweedler_pairs(t)) {
    pairs.push_back({{"left", to_json(left)}, {"right", to_json(right)}});
  }
  return {{"pairs", std::move(pairs)}};
}

// Inverse of to_json(Multivector). Throws DomainError on malformed input.
template <Field F>
Multivector<F> multivector_from_json(const nlohmann::json& j) {
  try {
    Multivector<F> out(j.at("dim").get<int>());
    for (const auto& term : j.at("terms")) {
      const auto idx = term.at("blade").get<std::vector<int>>();
      for (int i : idx) {
        if (i < 1 || i > out.dim()) throw DomainError("blade index " + std::to_string(i) + " out of range");
      }
      out.add_term(Blade::from_indices(idx), ScalarTraits<F>::parse(term.at("coeff").get<std::string>()));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed multivector JSON: ") + e.what());
  }
}

template <Field F>
std::string render(const Value<F>& v, OutputFormat format) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if (format == OutputFormat::text) return to_text(x);
        if constexpr (std::is_same_v<T, F>) {
          return nlohmann::json{{"scalar", ScalarTraits<F>::format(x)}}.dump();
        } else {
          return to_json(x).dump();
        }
      },
      v);
}

}  // namespace gfc::cli
