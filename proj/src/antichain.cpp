#include "combdyn/antichain.hpp"

#include <algorithm>
#include <stdexcept>

namespace combdyn {

namespace {

void check_antichain(const std::vector<Interval>& elements, const char* what) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (elements[i] == elements[j])
        throw std::invalid_argument(std::string(what) + ": repeated element");
      if (elements[i].comparable_with(elements[j]))
        throw std::invalid_argument(std::string(what) +
                                    ": elements are not pairwise incomparable");
    }
  }
}

}  // namespace

AntichainA::AntichainA(int n, std::vector<Interval> elements)
    : n_(n), elements_(std::move(elements)) {
  if (n_ < 1) throw std::invalid_argument("antichain A: n must be positive");
  for (const Interval& e : elements_)
    if (e.a < 1 || e.a > e.b || e.b > n_ - 1)
      throw std::invalid_argument("antichain A: element outside A^(n-1)");
  std::sort(elements_.begin(), elements_.end());
  check_antichain(elements_, "antichain A");
}

bool AntichainA::contains(const Interval& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

AntichainB::AntichainB(int m, std::vector<Interval> elements)
    : m_(m), elements_(std::move(elements)) {
  if (m_ < 1) throw std::invalid_argument("antichain B: m must be positive");
  for (const Interval& e : elements_)
    if (e.a < 1 || e.a > e.b || e.b > 2 * m_ - 1 || e.a + e.b > 2 * m_)
      throw std::invalid_argument("antichain B: element outside B^m");
  std::sort(elements_.begin(), elements_.end());
  check_antichain(elements_, "antichain B");
}

bool AntichainB::contains(const Interval& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

OrderSubset::OrderSubset(int n, SubsetKind kind, std::vector<Interval> members)
    : n_(n), kind_(kind), members_(std::move(members)) {
  if (n_ < 1) throw std::invalid_argument("order subset: n must be positive");
  for (const Interval& e : members_)
    if (e.a < 1 || e.a > e.b || e.b > n_ - 1)
      throw std::invalid_argument("order subset: element outside A^(n-1)");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (const Interval& e : members_) {
    // Closure: an ideal holds everything below a member, a filter everything
    // above.  One covering step in each direction suffices.
    std::vector<Interval> required;
    if (kind_ == SubsetKind::ideal) {
      if (e.rank() > 0) required = {{e.a + 1, e.b}, {e.a, e.b - 1}};
    } else {
      if (e.a > 1) required.push_back({e.a - 1, e.b});
      if (e.b < n_ - 1) required.push_back({e.a, e.b + 1});
    }
    for (const Interval& r : required)
      if (!contains(r))
        throw std::invalid_argument(kind_ == SubsetKind::ideal
                                        ? "order subset: not an ideal"
                                        : "order subset: not a filter");
  }
}

bool OrderSubset::contains(const Interval& e) const {
  return std::binary_search(members_.begin(), members_.end(), e);
}

std::vector<Interval> poset_elements_a(int n) {
  if (n < 1) throw std::invalid_argument("poset A: n must be positive");
  std::vector<Interval> out;
  for (int a = 1; a <= n - 1; ++a)
    for (int b = a; b <= n - 1; ++b) out.push_back({a, b});
  return out;
}

std::vector<Interval> poset_elements_b(int m) {
  if (m < 1) throw std::invalid_argument("poset B: m must be positive");
  std::vector<Interval> out;
  for (int a = 1; a <= 2 * m - 1; ++a)
    for (int b = a; b <= 2 * m - 1 && a + b <= 2 * m; ++b) out.push_back({a, b});
  return out;
}

}  // namespace combdyn
