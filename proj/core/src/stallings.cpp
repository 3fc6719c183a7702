#include "twinlab/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace twinlab {

FoldedGraph::FoldedGraph(AlphabetPtr alphabet, int vertex_count, std::vector<Edge> edges)
    : alphabet_(std::move(alphabet)), vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (!alphabet_) throw std::invalid_argument("folded graph requires an alphabet");
  if (vertex_count_ < 1) throw std::invalid_argument("folded graph needs a base vertex");
  const auto symbols = alphabet_->size();
  out_.assign(static_cast<std::size_t>(vertex_count_), std::vector<int>(symbols, -1));
  in_ = out_;
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    auto& fwd = out_.at(static_cast<std::size_t>(e.from)).at(static_cast<std::size_t>(e.symbol));
    auto& back = in_.at(static_cast<std::size_t>(e.to)).at(static_cast<std::size_t>(e.symbol));
    if (fwd != -1 || back != -1) throw std::invalid_argument("graph is not folded");
    fwd = e.to;
    back = e.from;
  }
}

int FoldedGraph::rank() const { return static_cast<int>(edges_.size()) - vertex_count_ + 1; }

std::optional<int> FoldedGraph::step(int vertex, const FreeLetter& letter) const {
  const auto& table = letter.sign > 0 ? out_ : in_;
  const int next = table[static_cast<std::size_t>(vertex)][static_cast<std::size_t>(letter.symbol)];
  if (next < 0) return std::nullopt;
  return next;
}

bool FoldedGraph::accepts(const FreeWord& w) const {
  if (!(*w.alphabet() == *alphabet_)) throw std::invalid_argument("word and graph use different alphabets");
  int vertex = 0;
  for (const FreeLetter& letter : w.letters()) {
    const auto next = step(vertex, letter);
    if (!next) return false;
    vertex = *next;
  }
  return vertex == 0;
}

std::string FoldedGraph::canonical_form() const {
  std::string out = std::to_string(vertex_count_) + ";";
  for (const Edge& e : edges_) {
    out += std::to_string(e.from) + "-" + alphabet_->name(e.symbol) + "->" + std::to_string(e.to) + ",";
  }
  return out;
}

std::uint64_t FoldedGraph::canonical_hash() const {
  // FNV-1a keeps the value stable across platforms, unlike std::hash.
  std::uint64_t h = 1469598103934665603ULL;
  for (const unsigned char c : canonical_form()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

namespace {

class UnionFind {
 public:
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      auto& p = parent_[static_cast<std::size_t>(v)];
      p = parent_[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  }
  // The smaller root survives so the base vertex 0 is never renamed.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

using Edge = FoldedGraph::Edge;

}  // namespace

FoldedGraph fold(AlphabetPtr alphabet, std::span<const FreeWord> generators) {
  UnionFind vertices;
  const int base = vertices.add();
  std::vector<Edge> edges;

  for (const FreeWord& g : generators) {
    if (!(*g.alphabet() == *alphabet)) throw std::invalid_argument("generator uses a different alphabet");
    if (g.empty()) continue;
    int at = base;
    const auto& letters = g.letters();
    for (std::size_t k = 0; k < letters.size(); ++k) {
      const int next = k + 1 == letters.size() ? base : vertices.add();
      if (letters[k].sign > 0) {
        edges.push_back({at, letters[k].symbol, next});
      } else {
        edges.push_back({next, letters[k].symbol, at});
      }
      at = next;
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    std::map<std::pair<int, int>, int> out;
    std::map<std::pair<int, int>, int> in;
    for (const Edge& e : edges) {
      const int from = vertices.find(e.from);
      const int to = vertices.find(e.to);
      auto [fwd, fresh_out] = out.try_emplace({from, e.symbol}, to);
      if (!fresh_out) changed |= vertices.unite(fwd->second, to);
      auto [back, fresh_in] = in.try_emplace({vertices.find(e.to), e.symbol}, vertices.find(e.from));
      if (!fresh_in) changed |= vertices.unite(back->second, vertices.find(e.from));
    }
  }

  std::set<Edge> merged;
  for (const Edge& e : edges) merged.insert({vertices.find(e.from), e.symbol, vertices.find(e.to)});

  // Trim hanging trees: repeatedly drop non-base vertices of degree one.
  for (bool trimmed = true; trimmed;) {
    trimmed = false;
    std::map<int, int> degree;
    for (const Edge& e : merged) {
      ++degree[e.from];
      ++degree[e.to];
    }
    for (auto it = merged.begin(); it != merged.end();) {
      const bool hanging = (it->from != base && degree[it->from] == 1) || (it->to != base && degree[it->to] == 1);
      if (hanging) {
        it = merged.erase(it);
        trimmed = true;
      } else {
        ++it;
      }
    }
  }

  // Breadth-first renumbering from the base, neighbours ordered by symbol.
  std::map<int, std::vector<std::pair<int, int>>> neighbours;  // (symbol*2 + dir, vertex)
  for (const Edge& e : merged) {
    neighbours[e.from].push_back({e.symbol * 2, e.to});
    neighbours[e.to].push_back({e.symbol * 2 + 1, e.from});
  }
  std::map<int, int> label{{base, 0}};
  std::deque<int> queue{base};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    auto adjacent = neighbours[v];
    std::sort(adjacent.begin(), adjacent.end());
    for (const auto& [key, u] : adjacent) {
      if (label.try_emplace(u, static_cast<int>(label.size())).second) queue.push_back(u);
    }
  }

  std::vector<Edge> renumbered;
  for (const Edge& e : merged) renumbered.push_back({label.at(e.from), e.symbol, label.at(e.to)});
  return FoldedGraph(std::move(alphabet), static_cast<int>(label.size()), std::move(renumbered));
}

int rank(const FoldedGraph& graph) { return graph.rank(); }

bool member(const FreeWord& w, const FoldedGraph& graph) { return graph.accepts(w); }

}  // namespace twinlab
