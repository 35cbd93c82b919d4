#include "agstab/cones.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "agstab/error.hpp"
#include "agstab/matrix.hpp"
#include "agstab/molien.hpp"

namespace agstab {

using Int = std::int64_t;
using Wide = __int128;

namespace {

RationalRow to_rational(const IntVector &v) { return {v.begin(), v.end()}; }

std::vector<RationalRow> vector_rows(const ConeSpec &c) {
  std::vector<RationalRow> rows;
  for (const auto &v : c.generators)
    rows.push_back(to_rational(v));
  return rows;
}

/// Upper triangle of v v^T.
RationalRow form_of(const IntVector &v) {
  RationalRow f;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a; b < v.size(); ++b)
      f.emplace_back(v[a] * v[b]);
  return f;
}

std::vector<RationalRow> form_rows(const ConeSpec &c) {
  std::vector<RationalRow> rows;
  for (const auto &v : c.generators)
    rows.push_back(form_of(v));
  return rows;
}

Int narrow(const BigInt &x) {
  if (!x.fits_slong_p())
    throw InputError("integer coordinate exceeds 64 bits");
  return x.get_si();
}

Int narrow(Wide x) {
  if (x > Wide(INT64_MAX) || x < Wide(INT64_MIN))
    throw InputError("automorphism search: intermediate exceeds 64 bits");
  return static_cast<Int>(x);
}

std::vector<RationalRow> inverse(const std::vector<RationalRow> &m) {
  const std::size_t n = m.size();
  std::vector<RationalRow> a(n, RationalRow(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0)
      ++p;
    if (p == n)
      throw InputError("singular basis matrix");
    std::swap(a[p], a[c]);
    const Rational pivot = a[c][c];
    for (auto &x : a[c])
      x /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0)
        continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j)
        a[i][j] -= f * a[c][j];
    }
  }
  std::vector<RationalRow> inv(n, RationalRow(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv[i][j] = a[i][n + j];
  return inv;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

void ConeSpec::validate() const {
  if (ambient == 0)
    throw InputError(name + ": ambient dimension must be positive");
  if (generators.empty())
    throw InputError(name + ": cone has no generators");
  for (const auto &v : generators) {
    if (v.size() != ambient)
      throw InputError(name + ": generator length differs from ambient " + std::to_string(ambient));
    if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }))
      throw InputError(name + ": zero generator");
  }
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      const auto &v = generators[i];
      const auto &w = generators[j];
      bool proportional = true;
      for (std::size_t a = 0; a < ambient && proportional; ++a)
        for (std::size_t b = a + 1; b < ambient && proportional; ++b)
          if (Wide(v[a]) * w[b] - Wide(v[b]) * w[a] != 0)
            proportional = false;
      if (ambient == 1 || proportional)
        throw InputError(name + ": generators " + std::to_string(i + 1) + " and " +
                         std::to_string(j + 1) + " are proportional");
    }
  if (declared_aut)
    for (const auto &p : *declared_aut)
      if (p.degree() != generators.size())
        throw InputError(name + ": declared permutation has degree " + std::to_string(p.degree()) +
                         ", cone has " + std::to_string(generators.size()) + " generators");
}

ConeSpec cone_from_json(const nlohmann::json &j) {
  try {
    ConeSpec c;
    c.name = j.at("name").get<std::string>();
    c.ambient = j.at("ambient").get<std::size_t>();
    c.generators = j.at("generators").get<std::vector<IntVector>>();
    if (j.contains("aut_generators")) {
      std::vector<Permutation> perms;
      for (const auto &p : j["aut_generators"])
        perms.push_back(permutation_from_json(p));
      c.declared_aut = std::move(perms);
    }
    if (j.contains("tags"))
      c.tags = j["tags"].get<std::vector<std::string>>();
    c.validate();
    return c;
  } catch (const nlohmann::json::exception &e) {
    throw InputError(std::string("cone JSON: ") + e.what());
  }
}

nlohmann::json to_json(const ConeSpec &c) {
  nlohmann::json j{{"name", c.name}, {"ambient", c.ambient}, {"generators", c.generators}};
  if (c.declared_aut) {
    nlohmann::json perms = nlohmann::json::array();
    for (const auto &p : *c.declared_aut)
      perms.push_back(to_json(p));
    j["aut_generators"] = perms;
  }
  j["tags"] = c.tags;
  return j;
}

ConeSpec load_cone_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open cone file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception &e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return cone_from_json(j);
}

ConeSpec direct_sum(const ConeSpec &a, const ConeSpec &b, std::string name) {
  ConeSpec s;
  s.name = name.empty() ? a.name + "+" + b.name : std::move(name);
  s.ambient = a.ambient + b.ambient;
  for (const auto &v : a.generators) {
    IntVector w(s.ambient, 0);
    std::copy(v.begin(), v.end(), w.begin());
    s.generators.push_back(std::move(w));
  }
  for (const auto &v : b.generators) {
    IntVector w(s.ambient, 0);
    std::copy(v.begin(), v.end(), w.begin() + static_cast<std::ptrdiff_t>(a.ambient));
    s.generators.push_back(std::move(w));
  }
  return s;
}

std::size_t cone_dimension(const ConeSpec &c) { return rank_of(form_rows(c)); }

std::size_t cone_rank(const ConeSpec &c) { return rank_of(vector_rows(c)); }

std::vector<std::vector<std::size_t>> cone_components(const ConeSpec &c) {
  // Components of the fundamental-circuit graph with respect to any basis
  // are the matroid components.
  const auto rows = vector_rows(c);
  const auto basis_idx = independent_subset(rows);
  std::vector<RationalRow> basis;
  for (auto b : basis_idx)
    basis.push_back(rows[b]);
  UnionFind uf(rows.size());
  std::set<std::size_t> in_basis(basis_idx.begin(), basis_idx.end());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (in_basis.count(i))
      continue;
    const auto coef = solve_in_span(basis, rows[i]);
    for (std::size_t k = 0; k < basis_idx.size(); ++k)
      if ((*coef)[k] != 0)
        uf.unite(i, basis_idx[k]);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < rows.size(); ++i)
    groups[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto &[root, members] : groups)
    out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> saturated_coordinates(const ConeSpec &c) {
  // Unimodular column operations bring the generator matrix A (n x g) to
  // [H | 0]; then A = H Y where the rows of Y are the first r rows of a
  // unimodular matrix, i.e. a basis of the saturated lattice.
  const std::size_t n = c.size();
  const std::size_t g = c.ambient;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(g));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < g; ++j)
      a[i][j] = c.generators[i][j];

  auto col_axpy = [&](std::size_t dst, std::size_t src, const BigInt &q) {
    for (std::size_t i = 0; i < n; ++i)
      a[i][dst] -= q * a[i][src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < n; ++i)
      std::swap(a[i][x], a[i][y]);
  };

  std::size_t r = 0;
  for (std::size_t i = 0; i < n && r < g; ++i) {
    for (;;) {
      std::size_t best = g;
      std::size_t nonzero = 0;
      for (std::size_t j = r; j < g; ++j) {
        if (a[i][j] == 0)
          continue;
        ++nonzero;
        if (best == g || abs(a[i][j]) < abs(a[i][best]))
          best = j;
      }
      if (nonzero == 0)
        break;
      col_swap(r, best);
      if (nonzero == 1)
        break;
      for (std::size_t j = r + 1; j < g; ++j) {
        if (a[i][j] == 0)
          continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[i][r].get_mpz_t());
        col_axpy(j, r, q);
      }
    }
    if (a[i][r] != 0)
      ++r;
  }
  std::vector<IntVector> coords(n, IntVector(r));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < r; ++k)
      coords[i][k] = narrow(a[i][k]);
  return coords;
}

namespace {

/// Backtracking over images and signs of a fixed basis B of generators.
/// The linear map T is determined by T c_b = e_b c_{p(b)} for b in B; every
/// other generator and the integrality of T are checked as soon as the
/// basis positions they depend on are assigned.
class AutomorphismSearch {
public:
  explicit AutomorphismSearch(const ConeSpec &c);

  /// All realizable permutations (deduplicated, sorted).
  std::vector<Permutation> run(bool parallel, std::size_t node_cap);
  /// Restrict the search to one target permutation.
  bool realizes(const Permutation &p, std::size_t node_cap);

private:
  struct State {
    std::vector<std::size_t> img;
    std::vector<int> sign;
    std::vector<long> perm;
    std::vector<bool> used;
  };

  using VecKey = std::vector<Int>;

  void dfs(State &s, std::size_t k, const Permutation *target, std::vector<Permutation> &found,
           bool stop_at_first);
  bool try_assign(State &s, std::size_t k, std::size_t j, int sgn, const Permutation *target,
                  std::vector<std::size_t> &assigned_nonbasis);
  std::vector<std::size_t> candidates(std::size_t k, const Permutation *target) const;
  State fresh_state() const;
  void count_node();

  std::size_t n_ = 0, r_ = 0;
  std::vector<IntVector> coords_;
  std::vector<std::size_t> basis_;
  std::vector<bool> in_basis_;
  Int det_ = 1;
  Int det_abs_ = 1;
  std::vector<std::vector<Int>> adj_;       // det * B^{-1}
  std::vector<std::vector<Int>> scaled_;    // per generator: c_i * adj (meaningful off-basis)
  std::vector<std::vector<std::size_t>> nonbasis_at_;
  std::vector<std::vector<std::size_t>> rows_at_;
  std::map<VecKey, std::pair<std::size_t, int>> lookup_;
  std::vector<int> signature_;

  std::atomic<std::size_t> nodes_{0};
  std::size_t node_cap_ = 0;
  std::atomic<bool> abort_{false};
};

std::pair<std::vector<Int>, int> normalize(std::vector<Int> v) {
  int sgn = 1;
  for (Int x : v)
    if (x != 0) {
      sgn = x > 0 ? 1 : -1;
      break;
    }
  if (sgn < 0)
    for (auto &x : v)
      x = -x;
  return {std::move(v), sgn};
}

/// Per-generator invariant used to prune candidate images: component size
/// and, for small cones, the number of circuits of each size through it.
std::vector<int> generator_signatures(const ConeSpec &c,
                                      const std::vector<std::vector<std::size_t>> &components) {
  const std::size_t n = c.size();
  std::vector<std::vector<std::size_t>> sig(n);
  for (const auto &comp : components)
    for (auto i : comp)
      sig[i].push_back(comp.size());

  constexpr std::size_t kCircuitLimit = 12;
  if (n <= kCircuitLimit) {
    const auto rows = vector_rows(c);
    const std::size_t subsets = std::size_t{1} << n;
    std::vector<std::size_t> rank(subsets, 0);
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      std::vector<RationalRow> sel;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1)
          sel.push_back(rows[i]);
      rank[mask] = rank_of(sel);
    }
    std::vector<std::vector<std::size_t>> counts(n, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t mask = 1; mask < subsets; ++mask) {
      const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
      if (rank[mask] + 1 != size)
        continue;
      bool minimal = true;
      for (std::size_t i = 0; i < n && minimal; ++i)
        if (mask >> i & 1 && rank[mask & ~(std::size_t{1} << i)] + 1 != size)
          minimal = false;
      if (!minimal)
        continue;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1)
          ++counts[i][size];
    }
    for (std::size_t i = 0; i < n; ++i)
      sig[i].insert(sig[i].end(), counts[i].begin(), counts[i].end());
  }
  std::map<std::vector<std::size_t>, int> ids;
  std::vector<int> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = ids.emplace(sig[i], static_cast<int>(ids.size())).first->second;
  return out;
}

AutomorphismSearch::AutomorphismSearch(const ConeSpec &c) {
  c.validate();
  n_ = c.size();
  coords_ = saturated_coordinates(c);
  r_ = coords_.front().size();

  std::vector<RationalRow> rows;
  for (const auto &v : coords_)
    rows.push_back(to_rational(v));
  basis_ = independent_subset(rows);
  if (basis_.size() != r_)
    throw InputError(c.name + ": lattice coordinates have inconsistent rank");
  in_basis_.assign(n_, false);
  for (auto b : basis_)
    in_basis_[b] = true;

  std::vector<RationalRow> bmat;
  for (auto b : basis_)
    bmat.push_back(rows[b]);
  const Rational det = RationalMatrix(r_, [&] {
                         std::vector<Rational> flat;
                         for (const auto &row : bmat)
                           flat.insert(flat.end(), row.begin(), row.end());
                         return flat;
                       }()).determinant();
  det_ = narrow(det.get_num());
  det_abs_ = det_ < 0 ? -det_ : det_;
  const auto inv = inverse(bmat);
  adj_.assign(r_, std::vector<Int>(r_));
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < r_; ++j) {
      const Rational x = inv[i][j] * det;
      if (!is_integer(x))
        throw InputError("adjugate is not integral");
      adj_[i][j] = narrow(x.get_num());
    }

  scaled_.assign(n_, std::vector<Int>(r_, 0));
  nonbasis_at_.assign(r_, {});
  rows_at_.assign(r_, {});
  for (std::size_t i = 0; i < n_; ++i) {
    if (in_basis_[i])
      continue;
    std::size_t ready = 0;
    for (std::size_t k = 0; k < r_; ++k) {
      Wide acc = 0;
      for (std::size_t m = 0; m < r_; ++m)
        acc += Wide(coords_[i][m]) * adj_[m][k];
      scaled_[i][k] = narrow(acc);
      if (acc != 0)
        ready = k;
    }
    nonbasis_at_[ready].push_back(i);
  }
  if (det_abs_ != 1)
    for (std::size_t row = 0; row < r_; ++row) {
      std::optional<std::size_t> ready;
      for (std::size_t k = 0; k < r_; ++k)
        if (adj_[row][k] % det_abs_ != 0)
          ready = k;
      if (ready)
        rows_at_[*ready].push_back(row);
    }

  for (std::size_t j = 0; j < n_; ++j) {
    auto [key, sgn] = normalize(coords_[j]);
    lookup_.emplace(std::move(key), std::make_pair(j, sgn));
  }
  signature_ = generator_signatures(c, cone_components(c));
}

AutomorphismSearch::State AutomorphismSearch::fresh_state() const {
  return State{std::vector<std::size_t>(r_), std::vector<int>(r_, 1), std::vector<long>(n_, -1),
               std::vector<bool>(n_, false)};
}

void AutomorphismSearch::count_node() {
  if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > node_cap_)
    abort_.store(true, std::memory_order_relaxed);
}

std::vector<std::size_t> AutomorphismSearch::candidates(std::size_t k,
                                                        const Permutation *target) const {
  if (target)
    return {(*target)(basis_[k])};
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < n_; ++j)
    if (signature_[j] == signature_[basis_[k]])
      out.push_back(j);
  return out;
}

bool AutomorphismSearch::try_assign(State &s, std::size_t k, std::size_t j, int sgn,
                                    const Permutation *target,
                                    std::vector<std::size_t> &assigned_nonbasis) {
  s.img[k] = j;
  s.sign[k] = sgn;
  s.perm[basis_[k]] = static_cast<long>(j);
  s.used[j] = true;

  std::vector<Int> w(r_);
  for (std::size_t i : nonbasis_at_[k]) {
    for (std::size_t t = 0; t < r_; ++t) {
      Wide acc = 0;
      for (std::size_t m = 0; m <= k; ++m)
        if (scaled_[i][m] != 0)
          acc += Wide(scaled_[i][m]) * s.sign[m] * coords_[s.img[m]][t];
      if (acc % det_ != 0)
        return false;
      w[t] = narrow(acc / det_);
    }
    auto [key, sgn_w] = normalize(w);
    auto hit = lookup_.find(key);
    if (hit == lookup_.end())
      return false;
    const std::size_t dst = hit->second.first;
    if (s.used[dst] || (target && (*target)(i) != dst))
      return false;
    s.used[dst] = true;
    s.perm[i] = static_cast<long>(dst);
    assigned_nonbasis.push_back(i);
  }
  for (std::size_t row : rows_at_[k])
    for (std::size_t t = 0; t < r_; ++t) {
      Wide acc = 0;
      for (std::size_t m = 0; m <= k; ++m)
        acc += Wide(adj_[row][m]) * s.sign[m] * coords_[s.img[m]][t];
      if (acc % det_abs_ != 0)
        return false;
    }
  return true;
}

void AutomorphismSearch::dfs(State &s, std::size_t k, const Permutation *target,
                             std::vector<Permutation> &found, bool stop_at_first) {
  if (abort_.load(std::memory_order_relaxed) || (stop_at_first && !found.empty()))
    return;
  for (std::size_t j : candidates(k, target)) {
    if (s.used[j])
      continue;
    for (int sgn : {1, -1}) {
      // T and -T induce the same permutation
      if (k == 0 && sgn < 0)
        continue;
      count_node();
      if (abort_.load(std::memory_order_relaxed))
        return;
      std::vector<std::size_t> assigned;
      const bool ok = try_assign(s, k, j, sgn, target, assigned);
      if (ok) {
        if (k + 1 == r_) {
          std::vector<std::uint32_t> im(n_);
          for (std::size_t i = 0; i < n_; ++i)
            im[i] = static_cast<std::uint32_t>(s.perm[i]);
          found.emplace_back(std::move(im));
        } else {
          dfs(s, k + 1, target, found, stop_at_first);
        }
      }
      for (std::size_t i : assigned) {
        s.used[static_cast<std::size_t>(s.perm[i])] = false;
        s.perm[i] = -1;
      }
      s.used[j] = false;
      s.perm[basis_[k]] = -1;
      if (stop_at_first && !found.empty())
        return;
    }
  }
}

std::vector<Permutation> AutomorphismSearch::run(bool parallel, std::size_t node_cap) {
  node_cap_ = node_cap;
  nodes_ = 0;
  abort_ = false;
  const auto top = candidates(0, nullptr);
  std::vector<std::vector<Permutation>> per_branch(top.size());
  const auto branches = static_cast<long>(top.size());

#pragma omp parallel for schedule(dynamic) if (parallel && branches > 1)
  for (long b = 0; b < branches; ++b) {
    State s = fresh_state();
    auto &found = per_branch[static_cast<std::size_t>(b)];
    const std::size_t j = top[static_cast<std::size_t>(b)];
    count_node();
    std::vector<std::size_t> assigned;
    if (!abort_.load() && try_assign(s, 0, j, 1, nullptr, assigned)) {
      if (r_ == 1) {
        std::vector<std::uint32_t> im(n_);
        for (std::size_t i = 0; i < n_; ++i)
          im[i] = static_cast<std::uint32_t>(s.perm[i]);
        found.emplace_back(std::move(im));
      } else {
        dfs(s, 1, nullptr, found, false);
      }
    }
  }
  if (abort_)
    throw SearchBudgetExceeded("automorphism search exceeded " + std::to_string(node_cap) +
                               " nodes");
  std::vector<Permutation> all;
  for (auto &v : per_branch)
    all.insert(all.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

bool AutomorphismSearch::realizes(const Permutation &p, std::size_t node_cap) {
  if (p.degree() != n_)
    throw DegreeMismatch("permutation degree differs from generator count");
  node_cap_ = node_cap;
  nodes_ = 0;
  abort_ = false;
  State s = fresh_state();
  std::vector<Permutation> found;
  dfs(s, 0, &p, found, true);
  if (abort_)
    throw SearchBudgetExceeded("realizability check exceeded node cap");
  return !found.empty();
}

} // namespace

bool is_realizable(const ConeSpec &c, const Permutation &p) {
  AutomorphismSearch search(c);
  return search.realizes(p, AutSearchOptions{}.node_cap);
}

PermGroup cone_automorphisms(const ConeSpec &c, const AutSearchOptions &opts) {
  AutomorphismSearch search(c);
  if (opts.use_declared && c.declared_aut) {
    for (const auto &p : *c.declared_aut)
      if (!search.realizes(p, opts.node_cap))
        throw VerificationFailed(c.name + ": declared permutation " + p.to_cycle_string() +
                                 " is not induced by a lattice automorphism");
    return group_from_generators(c.size(), *c.declared_aut);
  }
  return group_from_elements(c.size(), search.run(opts.parallel, opts.node_cap));
}

TruncatedSeries cone_poincare_series(const ConeSpec &c, const ConeAnalysis &analysis,
                                     std::size_t order) {
  const auto &aut = analysis.aut;
  if (aut.degree() != c.size())
    throw InputError(c.name + ": automorphism group has the wrong degree");
  if (analysis.is_basic(c.size()))
    return molien_series(LinearAction::permutation(aut), order);

  // Express every form in the chosen form basis, then read off the matrix
  // of each permutation on the span.
  const auto forms = form_rows(c);
  std::vector<RationalRow> basis;
  for (auto b : analysis.form_basis)
    basis.push_back(forms[b]);
  std::vector<RationalRow> coords;
  for (const auto &f : forms)
    coords.push_back(*solve_in_span(basis, f));

  const std::size_t dim = basis.size();
  auto rho = [&](const Permutation &p) {
    RationalMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const auto &col = coords[p(analysis.form_basis[k])];
      for (std::size_t i = 0; i < dim; ++i)
        m(i, k) = col[i];
    }
    for (std::size_t j = 0; j < forms.size(); ++j) {
      RationalRow expect(dim);
      for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t i = 0; i < dim; ++i)
          expect[i] += coords[j][k] * m(i, k);
      if (expect != coords[p(j)])
        throw InconsistentAction(c.name + ": permutation " + p.to_cycle_string() +
                                 " does not induce a linear map on the span of the forms");
    }
    return m;
  };
  return molien_series(LinearAction::matrices(aut, dim, rho), order);
}

ConeAnalysis analyze_cone(const ConeSpec &c, std::size_t order, const AutSearchOptions &opts) {
  c.validate();
  ConeAnalysis a;
  a.form_basis = independent_subset(form_rows(c));
  a.dimension = a.form_basis.size();
  a.rank = cone_rank(c);
  a.components = cone_components(c);
  a.aut = cone_automorphisms(c, opts);
  a.aut_from_declaration = opts.use_declared && c.declared_aut.has_value();
  a.poincare = cone_poincare_series(c, a, order);
  return a;
}

nlohmann::json to_json(const ConeAnalysis &a) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto &comp : a.components) {
    nlohmann::json one = nlohmann::json::array();
    for (auto i : comp)
      one.push_back(i + 1);
    comps.push_back(one);
  }
  nlohmann::json gens = nlohmann::json::array();
  for (const auto &g : a.aut.generators())
    gens.push_back(to_json(g));
  nlohmann::json basis = nlohmann::json::array();
  for (auto i : a.form_basis)
    basis.push_back(i + 1);
  return {{"dimension", a.dimension},
          {"rank", a.rank},
          {"components", comps},
          {"aut_order", a.aut.order()},
          {"aut_generators", gens},
          {"aut_from_declaration", a.aut_from_declaration},
          {"form_basis", basis},
          {"poincare", to_json(a.poincare)}};
}

} // namespace agstab
