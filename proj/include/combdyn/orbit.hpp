#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace combdyn {

// Orbit of an invertible dynamic, stored in application order from the
// starting element.  The representative is the least element of the orbit.
template <class T>
struct Orbit {
  T representative;
  std::vector<T> elements;

  int size() const { return static_cast<int>(elements.size()); }
};

template <class T, class Step>
Orbit<T> orbit_of(const T& start, Step&& step, std::size_t cap = 1u << 22) {
  std::vector<T> elements{start};
  T current = step(start);
  while (!(current == start)) {
    if (elements.size() >= cap)
      throw std::logic_error("orbit_of: cap exceeded, map does not return");
    elements.push_back(current);
    current = step(current);
  }
  T rep = *std::min_element(elements.begin(), elements.end());
  return Orbit<T>{std::move(rep), std::move(elements)};
}

}  // namespace combdyn
