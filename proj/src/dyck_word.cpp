#include "combdyn/dyck_word.hpp"

#include <stdexcept>

namespace combdyn {

const char* to_string(TunnelClass cls) {
  switch (cls) {
    case TunnelClass::left: return "left";
    case TunnelClass::right: return "right";
    case TunnelClass::centered: return "centered";
    case TunnelClass::left_across: return "left-across";
    case TunnelClass::right_across: return "right-across";
  }
  return "?";
}

DyckWord::DyckWord(std::string steps) : steps_(std::move(steps)) {
  if (steps_.empty() || steps_.size() % 2 != 0)
    throw std::invalid_argument("dyck word: length must be positive and even");
  int h = 0;
  for (char c : steps_) {
    if (c == 'U') ++h;
    else if (c == 'D') --h;
    else throw std::invalid_argument("dyck word: steps must be U or D");
    if (h < 0) throw std::invalid_argument("dyck word: prefix below zero");
  }
  if (h != 0) throw std::invalid_argument("dyck word: not balanced");
}

int DyckWord::height(int x) const {
  int h = 0;
  for (int i = 0; i < x; ++i) h += steps_[i] == 'U' ? 1 : -1;
  return h;
}

std::vector<std::pair<int, int>> DyckWord::valleys() const {
  std::vector<std::pair<int, int>> out;
  int h = 0;
  for (int x = 1; x < length(); ++x) {
    h += steps_[x - 1] == 'U' ? 1 : -1;
    if (steps_[x - 1] == 'D' && steps_[x] == 'U') out.emplace_back(x, h);
  }
  return out;
}

std::vector<std::pair<int, int>> DyckWord::peaks() const {
  std::vector<std::pair<int, int>> out;
  int h = 0;
  for (int x = 1; x < length(); ++x) {
    h += steps_[x - 1] == 'U' ? 1 : -1;
    if (steps_[x - 1] == 'U' && steps_[x] == 'D') out.emplace_back(x, h);
  }
  return out;
}

std::vector<Tunnel> DyckWord::tunnels() const {
  const int n = semilength();
  std::vector<Tunnel> out;
  std::vector<int> open_stack;
  for (int x = 1; x <= length(); ++x) {
    if (steps_[x - 1] == 'U') {
      open_stack.push_back(x);
      continue;
    }
    Tunnel t;
    t.open = open_stack.back();
    open_stack.pop_back();
    t.close = x;
    if (t.close <= n) t.cls = TunnelClass::left;
    else if (t.open >= n + 1) t.cls = TunnelClass::right;
    else if (t.open + t.close == 2 * n + 1) t.cls = TunnelClass::centered;
    else if (t.open + t.close < 2 * n + 1) t.cls = TunnelClass::left_across;
    else t.cls = TunnelClass::right_across;
    out.push_back(t);
  }
  return out;
}

DyckWord DyckWord::reflected() const {
  std::string w(steps_.rbegin(), steps_.rend());
  for (char& c : w) c = c == 'U' ? 'D' : 'U';
  return DyckWord(std::move(w));
}

bool DyckWord::operator<(const DyckWord& o) const {
  auto key = [](char c) { return c == 'U' ? 0 : 1; };
  const std::size_t common = std::min(steps_.size(), o.steps_.size());
  for (std::size_t i = 0; i < common; ++i)
    if (steps_[i] != o.steps_[i]) return key(steps_[i]) < key(o.steps_[i]);
  return steps_.size() < o.steps_.size();
}

}  // namespace combdyn
