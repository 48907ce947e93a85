#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace edmn::logic {

using ValueIndex = std::uint32_t;

// A finite, interpreted sort. Value order is declaration order; for integer
// interval sorts it is ascending numeric order.
class Sort {
 public:
  Sort(std::string name, std::vector<std::string> values);

  static Sort interval(std::string name, long long lo, long long hi);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::string& value(ValueIndex i) const { return values_.at(i); }

  std::optional<ValueIndex> index_of(std::string_view value) const;

  bool is_integer() const noexcept { return integer_; }
  // Numeric value of an integer sort element.
  long long integer_value(ValueIndex i) const;

  bool operator==(const Sort& other) const {
    return name_ == other.name_ && values_ == other.values_ && integer_ == other.integer_;
  }

 private:
  std::string name_;
  std::vector<std::string> values_;
  bool integer_ = false;
  long long lo_ = 0;
};

}  // namespace edmn::logic
