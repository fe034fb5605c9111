#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "shannon/lattice.hpp"

namespace shannon {

namespace {

using Coloring = std::vector<std::uint32_t>;

// Individualization-refinement search for the lexicographically smallest
// order-matrix encoding. Elements with identical upper and lower covers are
// interchangeable, so only one of them is individualized per cell.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Lattice& l) : l_(l), n_(l.size()) {
    std::map<std::pair<std::vector<Element>, std::vector<Element>>, std::uint32_t> ids;
    twin_.resize(n_);
    for (Element v = 0; v < n_; ++v) {
      auto key = std::make_pair(l.upper_covers(v), l.lower_covers(v));
      auto [it, _] = ids.emplace(std::move(key), static_cast<std::uint32_t>(ids.size()));
      twin_[v] = it->second;
    }
  }

  std::string run() {
    std::vector<std::size_t> depth(n_, 0);
    std::vector<Element> by_height(n_);
    for (Element v = 0; v < n_; ++v) by_height[v] = v;
    std::sort(by_height.begin(), by_height.end(),
              [&](Element a, Element b) { return l_.height(a) > l_.height(b); });
    for (Element v : by_height)
      for (Element u : l_.lower_covers(v)) depth[u] = std::max(depth[u], depth[v] + 1);

    std::vector<std::pair<std::vector<std::uint32_t>, Element>> sig;
    for (Element v = 0; v < n_; ++v) {
      std::uint32_t down = 0, up = 0;
      for (Element u = 0; u < n_; ++u) {
        down += l_.leq(u, v);
        up += l_.leq(v, u);
      }
      sig.push_back({{static_cast<std::uint32_t>(l_.height(v)), static_cast<std::uint32_t>(depth[v]),
                      down, up},
                     v});
    }
    Coloring color = rank(sig);
    refine(color);
    search(color);
    return best_;
  }

 private:
  Coloring rank(std::vector<std::pair<std::vector<std::uint32_t>, Element>>& sig) const {
    std::sort(sig.begin(), sig.end());
    Coloring color(n_);
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < sig.size(); ++i) {
      if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
      color[sig[i].second] = c;
    }
    return color;
  }

  static std::size_t classes(const Coloring& color) {
    return color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  }

  void refine(Coloring& color) const {
    std::size_t count = classes(color);
    while (true) {
      std::vector<std::pair<std::vector<std::uint32_t>, Element>> sig;
      sig.reserve(n_);
      for (Element v = 0; v < n_; ++v) {
        std::vector<std::uint32_t> s{color[v]};
        std::vector<std::uint32_t> up, down;
        for (Element u : l_.upper_covers(v)) up.push_back(color[u]);
        for (Element u : l_.lower_covers(v)) down.push_back(color[u]);
        std::sort(up.begin(), up.end());
        std::sort(down.begin(), down.end());
        s.push_back(static_cast<std::uint32_t>(up.size()));
        s.insert(s.end(), up.begin(), up.end());
        s.push_back(static_cast<std::uint32_t>(down.size()));
        s.insert(s.end(), down.begin(), down.end());
        sig.emplace_back(std::move(s), v);
      }
      Coloring next = rank(sig);
      std::size_t next_count = classes(next);
      color = std::move(next);
      if (next_count == count) return;
      count = next_count;
    }
  }

  std::string encode(const Coloring& color) const {
    std::vector<Element> inv(n_);
    for (Element v = 0; v < n_; ++v) inv[color[v]] = v;
    std::string out;
    out.push_back(static_cast<char>(n_ >> 8 & 0xff));
    out.push_back(static_cast<char>(n_ & 0xff));
    unsigned char acc = 0;
    int bits = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        acc = static_cast<unsigned char>(acc << 1 | (l_.leq(inv[i], inv[j]) ? 1 : 0));
        if (++bits == 8) {
          out.push_back(static_cast<char>(acc));
          acc = 0;
          bits = 0;
        }
      }
    if (bits > 0) out.push_back(static_cast<char>(acc << (8 - bits)));
    return out;
  }

  void search(const Coloring& color) {
    if (classes(color) == n_) {
      std::string e = encode(color);
      if (!have_ || e < best_) {
        best_ = std::move(e);
        have_ = true;
      }
      return;
    }
    std::vector<std::size_t> size(n_, 0);
    for (Element v = 0; v < n_; ++v) ++size[color[v]];
    std::uint32_t cell = 0;
    while (size[cell] < 2) ++cell;
    std::vector<std::uint32_t> tried;
    for (Element v = 0; v < n_; ++v) {
      if (color[v] != cell) continue;
      if (std::find(tried.begin(), tried.end(), twin_[v]) != tried.end()) continue;
      tried.push_back(twin_[v]);
      Coloring next(n_);
      for (Element u = 0; u < n_; ++u) {
        if (color[u] < cell) next[u] = color[u];
        else if (color[u] > cell) next[u] = color[u] + 1;
        else next[u] = u == v ? cell : cell + 1;
      }
      refine(next);
      search(next);
    }
  }

  const Lattice& l_;
  std::size_t n_;
  std::vector<std::uint32_t> twin_;
  std::string best_;
  bool have_ = false;
};

}  // namespace

std::string canonical_form(const Lattice& lattice) { return CanonicalSearch(lattice).run(); }

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string canonical_digest(const Lattice& lattice) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canonical_form(lattice)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::string bytes;
  for (int i = 7; i >= 0; --i) bytes.push_back(static_cast<char>(h >> (8 * i) & 0xff));
  return to_hex(bytes);
}

}  // namespace shannon
