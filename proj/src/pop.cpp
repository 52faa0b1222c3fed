#include "qwhit/pop.hpp"

#include <stdexcept>

namespace qwhit {

OverlaidPattern::OverlaidPattern(GTPattern pattern, OverlayMap overlay)
    : pattern_(std::move(pattern)), overlay_(std::move(overlay)) {
  const int n = pattern_.n();
  std::size_t expected = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 1; i <= j; ++i) {
      ++expected;
      auto it = overlay_.find({i, j});
      if (it == overlay_.end())
        throw std::invalid_argument("OverlaidPattern: missing overlay entry");
      if (it->second.rows() != ne_diff(pattern_, i, j) ||
          it->second.cols() != se_diff(pattern_, i, j))
        throw std::invalid_argument(
            "OverlaidPattern: overlay box does not match NE x SE");
    }
  if (overlay_.size() != expected)
    throw std::invalid_argument("OverlaidPattern: unexpected overlay keys");
}

long long OverlaidPattern::overlay_size() const {
  long long total = 0;
  for (const auto& [key, bp] : overlay_) total += bp.size();
  return total;
}

OverlaidPattern bcomp(const OverlaidPattern& p) {
  OverlayMap out;
  for (const auto& [key, bp] : p.overlay()) out.emplace(key, box_complement(bp));
  return OverlaidPattern(p.pattern(), std::move(out));
}

GTPattern pr(const OverlaidPattern& p) { return p.pattern(); }

OverlaidPattern br(const OverlaidPattern& p) {
  const int n = p.pattern().n();
  if (n < 2) throw std::invalid_argument("br: pattern has a single row");
  std::vector<std::vector<int>> rows(p.pattern().rows().begin(),
                                     p.pattern().rows().end() - 1);
  OverlayMap out;
  for (const auto& [key, bp] : p.overlay())
    if (key.second < n - 1) out.emplace(key, bp);
  return OverlaidPattern(GTPattern(n - 1, std::move(rows)), std::move(out));
}

void for_each_overlay(const GTPattern& T,
                      const std::function<void(const OverlayMap&)>& fn) {
  const int n = T.n();
  std::vector<OverlayKey> positions;  // (i, j) iterated in (j, i) order
  for (int j = 1; j < n; ++j)
    for (int i = 1; i <= j; ++i) positions.push_back({i, j});
  std::vector<std::vector<Partition>> choices;
  choices.reserve(positions.size());
  for (auto [i, j] : positions)
    choices.push_back(partitions_in_box(ne_diff(T, i, j), se_diff(T, i, j)));
  OverlayMap current;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == positions.size()) {
      fn(current);
      return;
    }
    auto [i, j] = positions[pos];
    for (const Partition& gamma : choices[pos]) {
      current.insert_or_assign(
          OverlayKey{i, j},
          BoxedPartition(gamma, ne_diff(T, i, j), se_diff(T, i, j)));
      self(self, pos + 1);
    }
    current.erase({i, j});
  };
  rec(rec, 0);
}

}  // namespace qwhit
