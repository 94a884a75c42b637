#include "kplex/oracle.hpp"

#include <stdexcept>
#include <string>

#include "kplex/kplex.hpp"

namespace kplex::oracle {

namespace {

/// Plain recursion: every accepted set is re-checked with is_kplex, the only
/// pruning is |chosen| + |remaining| <= best.
class Enumerator {
 public:
  Enumerator(const Graph& g, int k, std::vector<Vertex> pool, Bitset chosen)
      : g_(g), k_(k), pool_(std::move(pool)), chosen_(std::move(chosen)) {
    best_size_ = chosen_.count();
    best_ = chosen_;
  }

  void run() { recurse(0); }

  int best_size() const { return best_size_; }
  const Bitset& best() const { return best_; }

 private:
  void recurse(std::size_t index) {
    const int size = chosen_.count();
    if (size > best_size_) {
      best_size_ = size;
      best_ = chosen_;
    }
    if (index == pool_.size()) return;
    if (size + static_cast<int>(pool_.size() - index) <= best_size_) return;
    const Vertex v = pool_[index];
    chosen_.set(v);
    if (is_kplex(g_, chosen_, k_)) recurse(index + 1);
    chosen_.reset(v);
    recurse(index + 1);
  }

  const Graph& g_;
  int k_;
  std::vector<Vertex> pool_;
  Bitset chosen_;
  int best_size_ = 0;
  Bitset best_;
};

}  // namespace

OracleResult max_kplex_bruteforce(const Graph& g, int k) {
  if (g.n() > kMaxGraphSize)
    throw std::invalid_argument("oracle limited to " + std::to_string(kMaxGraphSize) + " vertices, got " +
                                std::to_string(g.n()));
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::vector<Vertex> all(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
  Enumerator e(g, k, std::move(all), Bitset(g.n()));
  e.run();
  return {e.best_size(), e.best().to_vector()};
}

int max_extension_bruteforce(const Graph& g, int k, std::span<const Vertex> partial, const Bitset& candidates) {
  if (candidates.count() > kMaxExtensionPool)
    throw std::invalid_argument("oracle extension pool limited to " + std::to_string(kMaxExtensionPool) +
                                " vertices");
  const Bitset chosen = Bitset::from_range(g.n(), partial);
  if (chosen.intersects(candidates)) throw std::invalid_argument("partial set and candidates overlap");
  if (!is_kplex(g, chosen, k)) throw std::invalid_argument("partial set is not a k-plex");
  Enumerator e(g, k, candidates.to_vector(), chosen);
  e.run();
  return e.best_size();
}

}  // namespace kplex::oracle
