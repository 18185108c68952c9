#pragma once

#include <cstdint>
#include <vector>

namespace sbci::detail {

// Per-point scratch storage for batch models. A slot is either uniform
// (one value for every lane) or holds one value per lane.
template <class T>
class LaneArena {
 public:
  explicit LaneArena(std::size_t lanes) : lanes_(lanes) {}

  std::size_t lanes() const noexcept { return lanes_; }
  void reset() noexcept { used_ = 0; }

  std::uint32_t alloc(bool uniform) {
    if (used_ == slots_.size()) {
      slots_.emplace_back(lanes_);
      uniform_.push_back(uniform);
    }
    uniform_[used_] = uniform;
    return static_cast<std::uint32_t>(used_++);
  }

  T* data(std::uint32_t s) noexcept { return slots_[s].data(); }
  const T* data(std::uint32_t s) const noexcept { return slots_[s].data(); }
  bool uniform(std::uint32_t s) const noexcept { return uniform_[s]; }
  T at(std::uint32_t s, std::size_t lane) const noexcept {
    return uniform_[s] ? slots_[s][0] : slots_[s][lane];
  }

  // Copies a uniform slot's value across every lane of `scratch`.
  const T* spread(std::uint32_t s, std::vector<T>& scratch) const {
    if (!uniform_[s]) return data(s);
    scratch.assign(lanes_, slots_[s][0]);
    return scratch.data();
  }

 private:
  std::size_t lanes_;
  std::size_t used_ = 0;
  std::vector<std::vector<T>> slots_;
  std::vector<bool> uniform_;
};

}  // namespace sbci::detail
