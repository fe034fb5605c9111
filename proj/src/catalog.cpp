#include "shannon/lattice.hpp"

#include <algorithm>
#include <cctype>

#include "shannon/error.hpp"

namespace shannon {

namespace {

constexpr Cover kFreeDistributive3[] = {
    {0, 1},   {0, 2},   {0, 3},   {1, 4},   {1, 5},   {2, 4},   {2, 6},   {3, 5},
    {3, 6},   {4, 7},   {4, 9},   {5, 8},   {5, 9},   {6, 9},   {6, 10},  {7, 11},
    {8, 12},  {9, 11},  {9, 12},  {9, 13},  {10, 13}, {11, 14}, {11, 15}, {12, 14},
    {12, 16}, {13, 15}, {13, 16}, {14, 17}, {15, 17}, {16, 17}};

// Sublattice of FD(3) x M3 generated by (x, a), (y, b), (z, c).
constexpr Cover kFreeModular3[] = {
    {0, 1},   {0, 2},   {0, 3},   {1, 4},   {1, 6},   {2, 4},   {2, 8},   {3, 6},
    {3, 8},   {4, 5},   {4, 12},  {5, 10},  {5, 13},  {6, 7},   {6, 12},  {7, 11},
    {7, 14},  {8, 9},   {8, 12},  {9, 15},  {9, 17},  {10, 18}, {11, 20}, {12, 13},
    {12, 14}, {12, 15}, {13, 16}, {13, 18}, {14, 16}, {14, 20}, {15, 16}, {15, 22},
    {16, 19}, {16, 21}, {16, 23}, {17, 22}, {18, 19}, {19, 24}, {19, 25}, {20, 21},
    {21, 24}, {21, 26}, {22, 23}, {23, 25}, {23, 26}, {24, 27}, {25, 27}, {26, 27}};

int param(std::span<const int> params, std::size_t i, const std::string& name) {
  if (i >= params.size()) throw BadParams(name + ": missing parameter " + std::to_string(i + 1));
  return params[i];
}

Lattice chain(int k) {
  if (k < 1) throw BadParams("chain_k needs k >= 1");
  std::vector<Cover> c;
  for (int i = 0; i + 1 < k; ++i) c.emplace_back(i, i + 1);
  return Lattice::from_covers(static_cast<std::size_t>(k), c);
}

Lattice boolean(int n) {
  if (n < 0 || n > 6) throw BadParams("boolean_n needs 0 <= n <= 6");
  const std::size_t size = std::size_t{1} << n;
  std::vector<Cover> c;
  std::vector<std::string> names(size);
  for (std::size_t s = 0; s < size; ++s) {
    for (int i = 0; i < n; ++i) {
      if (s >> i & 1) {
        names[s] += static_cast<char>('a' + i);
      } else {
        c.emplace_back(static_cast<Element>(s), static_cast<Element>(s | (std::size_t{1} << i)));
      }
    }
    if (names[s].empty()) names[s] = "0";
  }
  return Lattice::from_covers(size, c, std::move(names));
}

Lattice mn(int k) {
  if (k < 3) throw BadParams("m_n needs n >= 3");
  std::vector<Cover> c;
  std::vector<std::string> names{"bot"};
  const Element top = static_cast<Element>(k - 1);
  for (Element m = 1; m < top; ++m) {
    c.emplace_back(0, m);
    c.emplace_back(m, top);
    names.push_back("m" + std::to_string(m));
  }
  names.push_back("top");
  return Lattice::from_covers(static_cast<std::size_t>(k), c, std::move(names));
}

Lattice grid(int m, int n) {
  if (m < 1 || n < 1) throw BadParams("grid_mxn needs m, n >= 1");
  std::vector<Cover> c;
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      Element x = static_cast<Element>(i * n + j);
      if (i + 1 < m) c.emplace_back(x, static_cast<Element>((i + 1) * n + j));
      if (j + 1 < n) c.emplace_back(x, x + 1);
      names.push_back("g" + std::to_string(i) + "_" + std::to_string(j));
    }
  return Lattice::from_covers(static_cast<std::size_t>(m * n), c, std::move(names));
}

Lattice lld11() {
  // bot, atoms q1..q4, coatoms p1..p5, top
  const std::vector<Cover> c = {{0, 1}, {0, 2}, {0, 3}, {0, 4},               //
                                {1, 5}, {1, 6},                               // q1: p1 p2
                                {2, 5}, {2, 7}, {2, 8},                       // q2: p1 p3 p4
                                {3, 6}, {3, 7}, {3, 9},                       // q3: p2 p3 p5
                                {4, 8}, {4, 9},                               // q4: p4 p5
                                {5, 10}, {6, 10}, {7, 10}, {8, 10}, {9, 10}};
  return Lattice::from_covers(11, c,
                              {"bot", "q1", "q2", "q3", "q4", "p1", "p2", "p3", "p4", "p5", "top"});
}

// Splits "chain_5" into ("chain", {5}) and "grid_3x4" into ("grid", {3, 4}).
std::pair<std::string, std::vector<int>> split_name(const std::string& name) {
  static const std::string known[] = {"chain", "boolean", "grid"};
  for (const auto& base : known) {
    if (name.size() <= base.size() + 1 || name.compare(0, base.size() + 1, base + "_") != 0)
      continue;
    std::string rest = name.substr(base.size() + 1);
    std::vector<int> nums;
    std::string cur;
    for (char ch : rest + "x") {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        cur += ch;
      } else if (ch == 'x' && !cur.empty()) {
        nums.push_back(std::stoi(cur));
        cur.clear();
      } else {
        return {name, {}};
      }
    }
    return {base, nums};
  }
  if (name.rfind("m_", 0) == 0 && name.size() > 2 &&
      std::all_of(name.begin() + 2, name.end(), ::isdigit))
    return {"m_n", {std::stoi(name.substr(2))}};
  return {name, {}};
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"chain_k", "boolean_n", "m_n", "n5", "s7", "grid_mxn",
          "lld11", "free_distributive_3", "free_modular_3"};
}

Lattice catalog(const std::string& raw_name, std::span<const int> raw_params) {
  auto [name, embedded] = split_name(raw_name);
  std::vector<int> params = embedded;
  params.insert(params.end(), raw_params.begin(), raw_params.end());

  if (name == "chain" || name == "chain_k") return chain(param(params, 0, name));
  if (name == "boolean" || name == "boolean_n") return boolean(param(params, 0, name));
  if (name == "m_n") return mn(param(params, 0, name));
  if (name == "grid" || name == "grid_mxn")
    return grid(param(params, 0, name), param(params, 1, name));
  if (name == "n5")
    return Lattice::from_covers(5, std::vector<Cover>{{0, 1}, {0, 2}, {2, 3}, {1, 4}, {3, 4}},
                                {"bot", "x", "y", "z", "top"});
  if (name == "s7")
    return Lattice::from_covers(
        7, std::vector<Cover>{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {3, 4}, {2, 5}, {3, 5}, {4, 6}, {5, 6}},
        {"bot", "a", "b", "c", "ac", "bc", "top"});
  if (name == "lld11") return lld11();
  if (name == "free_distributive_3") return Lattice::from_covers(18, kFreeDistributive3);
  if (name == "free_modular_3") return Lattice::from_covers(28, kFreeModular3);
  throw UnknownName("unknown catalog lattice '" + raw_name + "'");
}

}  // namespace shannon
