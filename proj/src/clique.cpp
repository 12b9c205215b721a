#include "bsroots/clique.hpp"

#include <algorithm>

namespace bsroots {

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const AdjacencyMatrix& adj) : adj_(adj) {}

  std::vector<std::size_t> run() {
    std::vector<std::size_t> all(adj_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    expand(all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  // Greedy coloring of `candidates`; returns them reordered by color with
  // the color count of each prefix, so colors[i] bounds the clique size
  // reachable from candidates[0..i].
  void color_sort(std::vector<std::size_t>& candidates, std::vector<std::size_t>& colors) const {
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t v : candidates) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (std::size_t u : classes[c])
          if (adj_[u][v]) {
            clash = true;
            break;
          }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    candidates.clear();
    colors.clear();
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (std::size_t v : classes[c]) {
        candidates.push_back(v);
        colors.push_back(c + 1);
      }
  }

  void expand(std::vector<std::size_t> candidates) {
    std::vector<std::size_t> colors;
    color_sort(candidates, colors);
    while (!candidates.empty()) {
      if (current_.size() + colors.back() <= best_.size()) return;
      std::size_t v = candidates.back();
      candidates.pop_back();
      colors.pop_back();
      current_.push_back(v);
      std::vector<std::size_t> next;
      for (std::size_t u : candidates)
        if (adj_[v][u]) next.push_back(u);
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.pop_back();
    }
  }

  const AdjacencyMatrix& adj_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::size_t> maximum_clique(const AdjacencyMatrix& adj) {
  return CliqueSearch(adj).run();
}

}  // namespace bsroots
