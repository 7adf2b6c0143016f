#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace gn {

/// One named verification check. `detail` carries the computed values on
/// failure (and a short confirmation on success).
struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;

  bool all_pass() const {
    return std::all_of(items.begin(), items.end(),
                       [](const CheckItem& c) { return c.pass; });
  }
  std::size_t passed() const {
    return static_cast<std::size_t>(
        std::count_if(items.begin(), items.end(),
                      [](const CheckItem& c) { return c.pass; }));
  }
  void append(const CheckReport& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
  }
};

}  // namespace gn
