#include <array>
#include <stdexcept>

#include <openssl/evp.h>

#include "hooklab/multipoly.hpp"

namespace hooklab {

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("k" + std::to_string(i + 1));
  return names;
}

std::string to_string(const MultiPoly& p) {
  return to_string(p, default_variable_names(p.nvars()));
}

std::string to_string(const MultiPoly& p, std::span<const std::string> names) {
  if (names.size() != p.nvars()) {
    throw std::invalid_argument("to_string: need one name per variable");
  }
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t n = p.size(); n-- > 0;) {
    const Rational& c = p.coefficient(n);
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    auto e = p.exponents(n);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[v];
      if (e[v] > 1) mono += '^' + std::to_string(e[v]);
    }
    Rational magnitude = abs(c);
    if (mono.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += to_string(magnitude) + '*' + mono;
    }
  }
  return out;
}

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (std::size_t t = 0; t < p.size(); ++t) {
    auto e = p.exponents(t);
    terms.push_back({{"exp", std::vector<MultiPoly::Exponent>(e.begin(), e.end())},
                     {"num", to_string(Integer(p.coefficient(t).get_num()))},
                     {"den", to_string(Integer(p.coefficient(t).get_den()))}});
  }
  return {{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

MultiPoly multipoly_from_json(const nlohmann::json& j) {
  const auto nvars = j.at("nvars").get<std::size_t>();
  std::vector<std::pair<MultiPoly::ExponentVector, Rational>> terms;
  for (const auto& t : j.at("terms")) {
    terms.emplace_back(t.at("exp").get<MultiPoly::ExponentVector>(),
                       make_rational(Integer(t.at("num").get<std::string>()),
                                     Integer(t.at("den").get<std::string>())));
  }
  return MultiPoly::from_terms(nvars, std::move(terms));
}

std::string sha256_hex(const std::string& text) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

std::string canonical_hash(const MultiPoly& p) {
  // The variable count is part of the identity of the value.
  return sha256_hex(std::to_string(p.nvars()) + ":" + to_string(p));
}

}  // namespace hooklab
