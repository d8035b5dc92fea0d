#include "polylat/vector_file.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace polylat {

namespace {

constexpr std::string_view kModulusKey = "modulus=";

std::uint64_t parse_u64(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc{} || ptr != end)
    throw ParseError("expected a non-negative integer, got '" + std::string(token) + "'", line);
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

void write_vector_file(std::ostream& out, const GeneratingVector& g,
                       const std::vector<std::string>& comments, bool always_write_modulus) {
  out << g.b << ' ' << g.m << ' ' << g.dim() << '\n';
  for (auto idx : g.indices()) out << idx << '\n';
  if (always_write_modulus || !g.power_modulus())
    out << "# " << kModulusKey << index_from_poly(g.modulus) << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
}

VectorFile read_vector_file(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    return true;
  };

  if (!next_line()) throw ParseError("empty vector file", 1);
  const auto header = split_ws(line);
  if (header.size() != 3) throw ParseError("header must be 'b m d'", line_no);
  const auto b = parse_u64(header[0], line_no);
  const auto m = parse_u64(header[1], line_no);
  const auto d = parse_u64(header[2], line_no);
  if (!is_prime(static_cast<unsigned>(b)) || b > 1000) throw ParseError("base is not a small prime", line_no);
  if (m < 1 || m > 62) throw ParseError("precision out of range", line_no);
  if (d < 1) throw ParseError("dimension must be positive", line_no);

  VectorFile result;
  std::vector<Poly> comps;
  for (std::uint64_t j = 0; j < d; ++j) {
    if (!next_line()) throw ParseError("expected " + std::to_string(d) + " components", line_no + 1);
    const auto tokens = split_ws(line);
    if (tokens.size() != 1) throw ParseError("expected one integer per component line", line_no);
    Poly g = poly_from_index(parse_u64(tokens[0], line_no), static_cast<unsigned>(b));
    if (g.degree() >= static_cast<int>(m)) throw ParseError("component degree >= m", line_no);
    comps.push_back(std::move(g));
  }

  Poly modulus = Poly(static_cast<unsigned>(b)).with_coeff(static_cast<int>(m), 1);
  while (next_line()) {
    if (split_ws(line).empty()) continue;
    if (line.empty() || line[0] != '#') throw ParseError("trailing lines must be comments", line_no);
    std::string_view body(line);
    body.remove_prefix(1);
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) body.remove_suffix(1);
    if (body.starts_with(kModulusKey)) {
      modulus = poly_from_index(parse_u64(body.substr(kModulusKey.size()), line_no),
                                static_cast<unsigned>(b));
      if (modulus.degree() != static_cast<int>(m)) throw ParseError("modulus degree differs from m", line_no);
    } else {
      result.comments.emplace_back(body);
    }
  }
  result.vector = GeneratingVector(static_cast<unsigned>(b), static_cast<int>(m), std::move(comps),
                                   std::move(modulus));
  return result;
}

}  // namespace polylat
