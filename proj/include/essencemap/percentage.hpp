#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The essencemap Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include <cstdint>
#include <string>

namespace essencemap {

/// Exact percentage 100 * shared / total, kept as a rational so reports never
/// depend on floating point formatting.
class Percentage
{
public:
  constexpr Percentage() = default;

  constexpr Percentage(std::uint64_t shared, std::uint64_t total)
    : shared_(shared)
    , total_(total)
  {}

  constexpr std::uint64_t shared() const noexcept
  {
    return shared_;
  }

  constexpr std::uint64_t total() const noexcept
  {
    return total_;
  }

  constexpr bool is_zero() const noexcept
  {
    return shared_ == 0;
  }

  constexpr bool is_full() const noexcept
  {
    return total_ != 0 && shared_ == total_;
  }

  double value() const noexcept
  {
    return total_ == 0 ? 0.0 : 100.0 * static_cast<double>(shared_) / static_cast<double>(total_);
  }

  /// Tenths of a percent, rounded half up.
  constexpr std::uint64_t tenths() const noexcept
  {
    if (total_ == 0)
    {
      return 0;
    }
    // floor(1000 * s / t + 1/2)
    return (2000 * shared_ + total_) / (2 * total_);
  }

  /// One decimal place, round-half-up: 3/9 -> "33.3".
  std::string str() const
  {
    auto const t = tenths();
    return std::to_string(t / 10) + "." + std::to_string(t % 10);
  }

  friend constexpr bool operator==(Percentage const &a, Percentage const &b) noexcept
  {
    return a.shared_ * b.total_ == b.shared_ * a.total_;
  }

  friend constexpr bool operator<(Percentage const &a, Percentage const &b) noexcept
  {
    return a.shared_ * b.total_ < b.shared_ * a.total_;
  }

  friend constexpr bool operator>(Percentage const &a, Percentage const &b) noexcept
  {
    return b < a;
  }

private:
  std::uint64_t shared_ = 0;
  std::uint64_t total_  = 1;
};

}  // namespace essencemap
