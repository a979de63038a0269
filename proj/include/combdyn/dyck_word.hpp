#pragma once

#include <string>
#include <utility>
#include <vector>

namespace combdyn {

// A tunnel of a Dyck word is a matched (open, close) step pair.  The class
// records where the tunnel sits relative to the vertical middle line x = n:
// left (close <= n), right (open >= n+1), and the three kinds that span the
// middle, split by comparing open+close with 2n+1.
enum class TunnelClass { left, right, centered, left_across, right_across };

const char* to_string(TunnelClass cls);

struct Tunnel {
  int open = 0;
  int close = 0;
  TunnelClass cls = TunnelClass::left;

  friend bool operator==(const Tunnel&, const Tunnel&) = default;
};

// Balanced word over {U, D} whose every prefix has at least as many U as D.
// Vertices are indexed by the number of steps taken, so the vertex after
// step x is (x, height(x)), and x + height(x) is always even.
class DyckWord {
 public:
  explicit DyckWord(std::string steps);

  int semilength() const { return static_cast<int>(steps_.size()) / 2; }
  int length() const { return static_cast<int>(steps_.size()); }
  char step(int x) const { return steps_[x - 1]; }
  const std::string& word() const { return steps_; }

  int height(int x) const;
  // Valleys: vertex between a D step at x and a U step at x+1, as (x, h(x)).
  std::vector<std::pair<int, int>> valleys() const;
  // Peaks: vertex between a U step at x and a D step at x+1, as (x, h(x)).
  std::vector<std::pair<int, int>> peaks() const;
  std::vector<Tunnel> tunnels() const;

  // Reverse the word and swap U with D (reflection through x = n).
  DyckWord reflected() const;

  friend bool operator==(const DyckWord&, const DyckWord&) = default;
  // Step order U < D, so U^nD^n is the least word of its semilength.
  bool operator<(const DyckWord& o) const;

 private:
  std::string steps_;
};

}  // namespace combdyn
