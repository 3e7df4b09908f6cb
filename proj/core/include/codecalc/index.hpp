#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace codecalc {

/// Finite integer sequence indexing an operator product. Zero parts are kept:
/// (2,0) and (2) are different values.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {}
  Composition(std::initializer_list<int> parts) : parts_(parts) {}

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  long long sum() const;
  bool all_nonnegative() const;
  bool all_positive() const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

/// Weakly decreasing, nonnegative parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(Composition parts);
  Partition(std::initializer_list<int> parts) : Partition(Composition(parts)) {}

  const Composition& composition() const { return parts_; }
  std::span<const int> parts() const { return parts_.parts(); }
  std::size_t length() const { return parts_.length(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  long long sum() const { return parts_.sum(); }
  /// Largest part, 0 for the empty partition.
  int first() const { return empty() ? 0 : parts_[0]; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Composition parts_;
};

/// Strictly decreasing parts. Only the last part may be 0, which is how the
/// formal insertion of a zero part is represented.
class StrictPartition {
 public:
  StrictPartition() = default;
  explicit StrictPartition(Composition parts);
  StrictPartition(std::initializer_list<int> parts)
      : StrictPartition(Composition(parts)) {}

  const Composition& composition() const { return parts_; }
  std::span<const int> parts() const { return parts_.parts(); }
  std::size_t length() const { return parts_.length(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  long long sum() const { return parts_.sum(); }
  bool has_zero_part() const { return !empty() && parts_[length() - 1] == 0; }

  friend bool operator==(const StrictPartition&, const StrictPartition&) = default;

 private:
  Composition parts_;
};

enum class IndexShape { partition, strict_partition, general };

/// "strict-partition" wins over "partition" when both hold.
IndexShape classify(const Composition& c);
std::string_view to_string(IndexShape shape);

/// Comma- or whitespace-separated integers. Throws ParseError on a malformed
/// token and DomainError on a negative part.
Composition parse_index(std::string_view text);
/// Same grammar, negative parts allowed (exponent oracle input).
Composition parse_signed_index(std::string_view text);

/// Canonical comma-joined text, e.g. "1,3,1,6,2"; "" for the empty index.
std::string render(const Composition& c);

/// Zero, or a sign in {+1,-1} attached to a partition-like index.
class SignedIndex {
 public:
  static SignedIndex zero() { return SignedIndex(); }
  SignedIndex(int sign, Composition index);

  bool is_zero() const { return sign_ == 0; }
  /// 0 for Zero.
  int sign() const { return sign_; }
  const Composition& index() const { return index_; }

  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;

 private:
  SignedIndex() = default;
  int sign_ = 0;
  Composition index_;
};

SignedIndex negate(const SignedIndex& r);

/// "+1 * B[3,3,3,2,2]" with symbol "B"; "0" for Zero.
std::string render(const SignedIndex& r, std::string_view symbol);

}  // namespace codecalc
