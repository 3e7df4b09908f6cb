#include "codecalc/index.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "codecalc/errors.hpp"

namespace codecalc {

long long Composition::sum() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Composition::all_nonnegative() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p >= 0; });
}

bool Composition::all_positive() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p > 0; });
}

Partition::Partition(Composition parts) : parts_(std::move(parts)) {
  if (!parts_.all_nonnegative()) {
    throw DomainError("partition parts must be nonnegative: " + render(parts_));
  }
  if (!std::is_sorted(parts_.vec().begin(), parts_.vec().end(), std::greater<>())) {
    throw DomainError("partition parts must be weakly decreasing: " + render(parts_));
  }
}

StrictPartition::StrictPartition(Composition parts) : parts_(std::move(parts)) {
  if (!parts_.all_nonnegative()) {
    throw DomainError("strict partition parts must be nonnegative: " + render(parts_));
  }
  const auto& v = parts_.vec();
  if (std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) != v.end()) {
    throw DomainError("strict partition parts must be strictly decreasing: " +
                      render(parts_));
  }
}

IndexShape classify(const Composition& c) {
  const auto& v = c.vec();
  if (std::adjacent_find(v.begin(), v.end(), std::less_equal<>()) == v.end()) {
    return IndexShape::strict_partition;
  }
  if (std::adjacent_find(v.begin(), v.end(), std::less<>()) == v.end()) {
    return IndexShape::partition;
  }
  return IndexShape::general;
}

std::string_view to_string(IndexShape shape) {
  switch (shape) {
    case IndexShape::partition:
      return "partition";
    case IndexShape::strict_partition:
      return "strict-partition";
    case IndexShape::general:
      return "general";
  }
  return "general";
}

namespace {

Composition parse_integers(std::string_view text, bool allow_negative) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto is_sep = [](char ch) {
    return ch == ',' || std::isspace(static_cast<unsigned char>(ch));
  };
  bool expect_token = false;  // set after a comma: "1,,2" and "1," are errors
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] == ',') {
      if (parts.empty() || expect_token) {
        throw ParseError("empty token in index \"" + std::string(text) + "\"");
      }
      expect_token = true;
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    std::string_view token = text.substr(pos, end - pos);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("malformed integer \"" + std::string(token) + "\"");
    }
    if (value < 0 && !allow_negative) {
      throw DomainError("negative part " + std::to_string(value) +
                        " is not allowed here");
    }
    parts.push_back(value);
    expect_token = false;
    pos = end;
  }
  if (expect_token) {
    throw ParseError("trailing comma in index \"" + std::string(text) + "\"");
  }
  return Composition(std::move(parts));
}

}  // namespace

Composition parse_index(std::string_view text) { return parse_integers(text, false); }

Composition parse_signed_index(std::string_view text) {
  return parse_integers(text, true);
}

std::string render(const Composition& c) {
  std::string out;
  for (std::size_t i = 0; i < c.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

SignedIndex::SignedIndex(int sign, Composition index)
    : sign_(sign), index_(std::move(index)) {
  if (sign != 1 && sign != -1) {
    throw InvariantError("signed index needs sign +1 or -1, got " +
                         std::to_string(sign));
  }
}

SignedIndex negate(const SignedIndex& r) {
  if (r.is_zero()) return r;
  return SignedIndex(-r.sign(), r.index());
}

std::string render(const SignedIndex& r, std::string_view symbol) {
  if (r.is_zero()) return "0";
  std::string out = r.sign() > 0 ? "+1 * " : "-1 * ";
  out += symbol;
  out += '[';
  out += render(r.index());
  out += ']';
  return out;
}

}  // namespace codecalc
