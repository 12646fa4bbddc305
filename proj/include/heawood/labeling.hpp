#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "heawood/error.hpp"

namespace heawood {

/// Bijection between internal 0-based point indices and presentation labels.
class LabelingMap {
 public:
  LabelingMap() = default;

  explicit LabelingMap(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      const auto& l = labels_[i];
      if (l.empty()) throw InputError("empty label at index " + std::to_string(i));
      for (char c : l) {
        if (c == '(' || c == ')' || c == ',' || c == ' ')
          throw InputError("label '" + l + "' contains a reserved character");
      }
      if (!index_.emplace(l, i).second) throw InputError("duplicate label '" + l + "'");
    }
  }

  /// Labels "1".."n" for indices 0..n-1.
  static LabelingMap one_based(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
    return LabelingMap(std::move(labels));
  }

  std::size_t size() const { return labels_.size(); }

  const std::string& label(std::size_t index) const {
    if (index >= labels_.size()) throw InputError("index " + std::to_string(index) + " has no label");
    return labels_[index];
  }

  std::optional<std::size_t> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t index(std::string_view label) const {
    auto i = find(label);
    if (!i) throw InputError("unknown label '" + std::string(label) + "'");
    return *i;
  }

  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const LabelingMap& a, const LabelingMap& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace heawood
