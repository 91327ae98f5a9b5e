#include "gkmlab/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "gkmlab/error.hpp"
#include "gkmlab/morse.hpp"
#include "gkmlab/serialize.hpp"

namespace gkm {

namespace {

// eps_j - eps_i (1-based i < j) in the simple-root basis.
Vec root(int n, int i, int j) {
  Vec v(n - 1);
  int lo = std::min(i, j), hi = std::max(i, j);
  int sign = i < j ? 1 : -1;
  for (int k = lo; k < hi; ++k) v[k - 1] = sign;
  return v;
}

std::string one_line(const std::vector<int>& perm) {
  std::string s;
  for (int x : perm) s += static_cast<char>('0' + x);
  return s;
}

int inversions(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inv;
  return inv;
}

int parse_int(const std::string& s, const std::string& spec) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw InputError("");
    return v;
  } catch (...) {
    throw InputError("bad graph spec '" + spec + "'");
  }
}

}  // namespace

CatalogGraph cayley_sn(int n) {
  if (n < 2 || n > 9) throw InputError("sn: n must be between 2 and 9");
  CatalogGraph g;
  g.name = "sn:" + std::to_string(n);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::string> ids;
  std::vector<UnorientedEdge> edges;
  std::vector<std::pair<std::string, int>> lengths;
  do {
    std::string id = one_line(perm);
    ids.push_back(id);
    lengths.emplace_back(id, inversions(perm));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::vector<int> other = perm;
        std::swap(other[i - 1], other[j - 1]);
        if (id > one_line(other)) continue;
        // weight eps_j - eps_i when sigma(j) > sigma(i), else its negative
        Vec a = perm[j - 1] > perm[i - 1] ? root(n, i, j) : root(n, j, i);
        edges.push_back({id, one_line(other), a});
      }
  } while (std::next_permutation(perm.begin(), perm.end()));
  g.skeleton = Skeleton::from_unoriented(SpaceCtx::standard(n - 1, "a"), ids, edges);
  g.height.resize(ids.size());
  for (const auto& [id, len] : lengths) g.height[g.skeleton.index_of(id)] = len;
  g.xi_signs.assign(n - 1, 1);
  return g;
}

CatalogGraph johnson(int n, int k) {
  if (n < 2 || n > 9 || k < 1 || k > n - 1) throw InputError("johnson: need 1 <= k <= n-1 and n <= 9");
  CatalogGraph g;
  g.name = "johnson:" + std::to_string(n) + "," + std::to_string(k);
  std::vector<std::vector<int>> subsets;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i + 1);
    subsets.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::vector<std::string> ids;
  for (const auto& s : subsets) ids.push_back(one_line(s));
  std::vector<UnorientedEdge> edges;
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      std::vector<int> only_a, only_b;
      std::set_difference(subsets[a].begin(), subsets[a].end(), subsets[b].begin(), subsets[b].end(),
                          std::back_inserter(only_a));
      std::set_difference(subsets[b].begin(), subsets[b].end(), subsets[a].begin(), subsets[a].end(),
                          std::back_inserter(only_b));
      if (only_a.size() != 1) continue;
      // eps_i - eps_j with i leaving and j entering
      edges.push_back({ids[a], ids[b], root(n, only_b[0], only_a[0])});
    }
  g.skeleton = Skeleton::from_unoriented(SpaceCtx::standard(n - 1, "a"), ids, edges);
  g.height.resize(ids.size());
  for (const auto& s : subsets) {
    int boxes = 0;
    for (int r = 0; r < k; ++r) boxes += s[r] - (r + 1);
    g.height[g.skeleton.index_of(one_line(s))] = boxes;
  }
  g.xi_signs.assign(n - 1, -1);
  return g;
}

CatalogGraph open_graph(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("bad graph spec '" + spec + "' (expected sn:N, johnson:N,K or file:PATH)");
  std::string kind = spec.substr(0, colon);
  std::string arg = spec.substr(colon + 1);
  if (kind == "sn") return cayley_sn(parse_int(arg, spec));
  if (kind == "johnson") {
    auto comma = arg.find(',');
    if (comma == std::string::npos) throw InputError("bad graph spec '" + spec + "'");
    return johnson(parse_int(arg.substr(0, comma), spec), parse_int(arg.substr(comma + 1), spec));
  }
  if (kind == "file") {
    CatalogGraph g;
    g.name = spec;
    g.skeleton = load_skeleton(arg);
    return g;
  }
  throw InputError("unknown graph kind '" + kind + "'");
}

Vec suggested_xi(const CatalogGraph& g, std::uint64_t seed) { return find_xi(g.skeleton, 2000, seed, g.xi_signs); }

Skeleton load_skeleton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  return skeleton_from_json(j);
}

void save_skeleton(const Skeleton& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << skeleton_to_json(s).dump(2) << "\n";
}

}  // namespace gkm
