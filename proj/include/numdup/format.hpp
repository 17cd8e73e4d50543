#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "numdup/ideal.hpp"
#include "numdup/semigroup.hpp"
#include "numdup/verify.hpp"

namespace numdup {

inline constexpr int kJsonSchema = 1;

// Finite prefix then an arrow at the conductor: {0,4,8,→}.
std::string notation(NumericalSemigroup const& s);
std::string notation(RelativeIdeal const& e);
// Plain finite set: {1,2,3}; {} when empty.
std::string finite_notation(std::vector<Int> const& xs);

nlohmann::json to_json(NumericalSemigroup const& s);
nlohmann::json to_json(RelativeIdeal const& e);
nlohmann::json to_json(VerificationReport const& r);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : std::runtime_error("parse error at position " +
                           std::to_string(position) + ": " + what),
        message_(what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }
  // The message without the position prefix.
  std::string const& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

// "5, 8,10" -> {5, 8, 10}. Positions in errors are 1-based character
// offsets. Rejects an empty list.
std::vector<Int> parse_int_list(std::string_view text);

enum class DescriptorKind { Generators, Gaps };

struct SemigroupDescriptor {
  DescriptorKind kind = DescriptorKind::Generators;
  // Sorted, duplicates removed.
  std::vector<Int> values;

  static SemigroupDescriptor parse(DescriptorKind kind, std::string_view text);
  // Reads "generators" (preferred) or "gaps" from an info JSON document.
  static SemigroupDescriptor from_json(nlohmann::json const& doc);

  NumericalSemigroup build() const;
};

}  // namespace numdup
