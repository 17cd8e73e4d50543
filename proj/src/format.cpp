#include "numdup/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace numdup {

namespace {

std::string join(std::vector<Int> const& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string arrow_notation(std::vector<Int> const& prefix) {
  std::string body = join(prefix);
  return "{" + body + (body.empty() ? "" : ",") + "→}";
}

nlohmann::json window_bits(std::vector<std::uint8_t> const& window) {
  nlohmann::json bits = nlohmann::json::array();
  for (std::uint8_t b : window) bits.push_back(b != 0 ? 1 : 0);
  return bits;
}

}  // namespace

std::string notation(NumericalSemigroup const& s) {
  return arrow_notation(s.small_elements());
}

std::string notation(RelativeIdeal const& e) {
  return arrow_notation(e.small_elements());
}

std::string finite_notation(std::vector<Int> const& xs) {
  return "{" + join(xs) + "}";
}

nlohmann::json to_json(NumericalSemigroup const& s) {
  nlohmann::json j;
  j["schema"] = kJsonSchema;
  j["generators"] = s.min_generators();
  j["gaps"] = s.gaps();
  j["multiplicity"] = s.multiplicity();
  j["conductor"] = s.conductor();
  j["frobenius"] = s.frobenius();
  j["genus"] = s.genus();
  return j;
}

nlohmann::json to_json(RelativeIdeal const& e) {
  return {{"min", e.min()},
          {"frobenius", e.frobenius()},
          {"window", window_bits(e.window())},
          {"elements", e.small_elements()}};
}

nlohmann::json to_json(VerificationReport const& r) {
  nlohmann::json inst;
  inst["generators"] = r.instance.generators;
  if (r.instance.ideal) {
    inst["ideal"] = {{"min", r.instance.ideal->min},
                     {"frobenius", r.instance.ideal->frobenius},
                     {"window", window_bits(r.instance.ideal->window)}};
  } else {
    inst["ideal"] = nullptr;
  }
  inst["b"] = r.instance.b;
  inst["n"] = r.instance.n;
  nlohmann::json checks = nlohmann::json::array();
  for (Check const& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"predicted", c.predicted},
                      {"oracle", c.oracle},
                      {"pass", c.pass}});
  }
  nlohmann::json j = {{"schema", kJsonSchema},
                      {"instance", inst},
                      {"checks", checks},
                      {"passed", r.passed()}};
  j["counterexample"] = r.counterexample
                            ? nlohmann::json(*r.counterexample)
                            : nlohmann::json(nullptr);
  return j;
}

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
  };
  skip_space();
  if (i == text.size()) throw ParseError("empty list", i + 1);
  for (;;) {
    skip_space();
    std::size_t const start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    Int value = 0;
    char const* first = text.data() + start;
    if (i > start && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text.data() + i, value);
    if (i == start || ec != std::errc{} || ptr != text.data() + i) {
      throw ParseError("expected an integer", start + 1);
    }
    out.push_back(value);
    skip_space();
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", i + 1);
    ++i;
  }
  return out;
}

SemigroupDescriptor SemigroupDescriptor::parse(DescriptorKind kind,
                                               std::string_view text) {
  SemigroupDescriptor d;
  d.kind = kind;
  d.values = parse_int_list(text);
  std::sort(d.values.begin(), d.values.end());
  d.values.erase(std::unique(d.values.begin(), d.values.end()),
                 d.values.end());
  return d;
}

SemigroupDescriptor SemigroupDescriptor::from_json(nlohmann::json const& doc) {
  SemigroupDescriptor d;
  if (doc.contains("generators")) {
    d.kind = DescriptorKind::Generators;
    d.values = doc.at("generators").get<std::vector<Int>>();
  } else if (doc.contains("gaps")) {
    d.kind = DescriptorKind::Gaps;
    d.values = doc.at("gaps").get<std::vector<Int>>();
  } else {
    throw ParseError("document has neither generators nor gaps", 0);
  }
  std::sort(d.values.begin(), d.values.end());
  d.values.erase(std::unique(d.values.begin(), d.values.end()),
                 d.values.end());
  return d;
}

NumericalSemigroup SemigroupDescriptor::build() const {
  if (kind == DescriptorKind::Generators) {
    return NumericalSemigroup::from_generators(values);
  }
  return NumericalSemigroup::from_gaps(values);
}

}  // namespace numdup
