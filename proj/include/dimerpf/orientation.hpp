#pragma once

#include <map>
#include <optional>
#include <utility>

namespace dimerpf {

// Edge directions keyed by the unordered pair; stores the tail ("tail ≻ head").
class Orientation {
 public:
  void direct(int tail, int head) { tail_[key(tail, head)] = tail; }

  bool is_directed(int u, int v) const { return tail_.count(key(u, v)) != 0; }

  // True when the edge is directed from `tail` to `head`.
  bool points(int tail, int head) const {
    auto it = tail_.find(key(tail, head));
    return it != tail_.end() && it->second == tail;
  }

  std::optional<int> tail(int u, int v) const {
    auto it = tail_.find(key(u, v));
    if (it == tail_.end()) return std::nullopt;
    return it->second;
  }

  void erase(int u, int v) { tail_.erase(key(u, v)); }
  std::size_t size() const { return tail_.size(); }
  const std::map<std::pair<int, int>, int>& tails() const { return tail_; }

  bool operator==(const Orientation&) const = default;

  static std::pair<int, int> key(int u, int v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

 private:
  std::map<std::pair<int, int>, int> tail_;
};

}  // namespace dimerpf
