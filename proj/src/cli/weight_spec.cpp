#include "polylat/cli/weight_spec.hpp"

#include <charconv>
#include <cmath>

#include "polylat/errors.hpp"

namespace polylat::cli {

namespace {

double parse_real(std::string_view text, std::size_t offset) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || !std::isfinite(value))
    throw ParseError("expected a real number, got '" + std::string(text) + "'", offset + 1);
  if (ptr != end)
    throw ParseError("unexpected '" + std::string(ptr, end) + "' after number", offset + 1 + (ptr - text.data()));
  return value;
}

}  // namespace

ProductWeights WeightSpec::weights(std::size_t d) const {
  Eigen::VectorXd g(static_cast<Eigen::Index>(d));
  if (kind == Kind::list && values.size() < d)
    throw ParseError("weight list has " + std::to_string(values.size()) + " entries, need " + std::to_string(d),
                     text.size() + 1);
  for (std::size_t j = 0; j < d; ++j) {
    const double jj = static_cast<double>(j + 1);
    g[static_cast<Eigen::Index>(j)] = kind == Kind::poly   ? std::pow(jj, -parameter)
                                      : kind == Kind::geom ? std::pow(parameter, jj)
                                                           : values[j];
  }
  return ProductWeights(g);
}

WeightSpec parse_weight_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("weight spec needs the form kind:value", 1);
  const auto kind = text.substr(0, colon);
  const auto body = text.substr(colon + 1);
  const std::size_t offset = colon + 1;
  WeightSpec spec;
  spec.text = std::string(text);
  if (kind == "poly") {
    spec.kind = WeightSpec::Kind::poly;
    spec.parameter = parse_real(body, offset);
    if (!(spec.parameter > 0.0)) throw ParseError("poly exponent must be positive", offset + 1);
  } else if (kind == "geom") {
    spec.kind = WeightSpec::Kind::geom;
    spec.parameter = parse_real(body, offset);
    if (!(spec.parameter > 0.0 && spec.parameter < 1.0)) throw ParseError("geom ratio must lie in (0, 1)", offset + 1);
  } else if (kind == "list") {
    spec.kind = WeightSpec::Kind::list;
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      const auto item = body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      const double v = parse_real(item, offset + start);
      if (!(v > 0.0)) throw ParseError("weights must be positive", offset + start + 1);
      spec.values.push_back(v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    throw ParseError("unknown weight kind '" + std::string(kind) + "' (poly, geom or list)", 1);
  }
  return spec;
}

ProductWeights parse_weight_spec(std::string_view text, std::size_t d) { return parse_weight_spec(text).weights(d); }

}  // namespace polylat::cli
