#include "agstab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "agstab/error.hpp"

namespace agstab {

namespace {

struct PermHash {
  std::size_t operator()(const Permutation &p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p.images())
      h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

} // namespace

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x])
      throw InputError("image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> im(degree);
  for (std::size_t i = 0; i < degree; ++i)
    im[i] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(im);
  return p;
}

Permutation Permutation::from_one_based(const std::vector<long> &images) {
  std::vector<std::uint32_t> im;
  im.reserve(images.size());
  for (long x : images) {
    if (x < 1 || static_cast<std::size_t>(x) > images.size())
      throw InputError("1-based image " + std::to_string(x) + " out of range");
    im.push_back(static_cast<std::uint32_t>(x - 1));
  }
  return Permutation(std::move(im));
}

Permutation Permutation::cycle(std::size_t degree, const std::vector<std::size_t> &points) {
  Permutation p = identity(degree);
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (points[k] >= degree)
      throw InputError("cycle point out of range");
    p.images_[points[k]] = static_cast<std::uint32_t>(points[(k + 1) % points.size()]);
  }
  return Permutation(p.images_);
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
  Permutation result = identity(degree);
  std::size_t pos = 0;
  std::vector<Permutation> cycles;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(')
      throw InputError("cycle notation: expected '(' in '" + std::string(text) + "'");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos)
      throw InputError("cycle notation: unbalanced '('");
    std::istringstream in(std::string(text.substr(pos + 1, close - pos - 1)));
    std::vector<std::size_t> pts;
    std::string tok;
    while (in >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("cycle notation: bad token '" + tok + "'");
      pts.push_back(std::stoul(tok));
    }
    for (auto &x : pts) {
      if (x < 1 || x > degree)
        throw InputError("cycle notation: point out of range");
      --x;
    }
    if (std::set<std::size_t>(pts.begin(), pts.end()).size() != pts.size())
      throw InputError("cycle notation: repeated point");
    cycles.push_back(cycle(degree, pts));
    pos = close + 1;
  }
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it)
    result = *it * result;
  return result;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::vector<long> Permutation::to_one_based() const {
  std::vector<long> out;
  out.reserve(images_.size());
  for (auto x : images_)
    out.push_back(static_cast<long>(x) + 1);
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first)
        out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = images_[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("composing permutations of different degree");
  std::vector<std::uint32_t> im(p.degree());
  for (std::size_t i = 0; i < im.size(); ++i)
    im[i] = p.images()[q.images()[i]];
  return Permutation(std::move(im));
}

std::size_t CycleType::degree() const {
  std::size_t n = 0;
  for (auto x : parts)
    n += x;
  return n;
}

std::string CycleType::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? "," : "") + std::to_string(parts[i]);
  return out + ")";
}

CycleType cycle_type(const Permutation &p) {
  CycleType t;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p(j)) {
      seen[j] = true;
      ++len;
    }
    t.parts.push_back(len);
  }
  std::sort(t.parts.begin(), t.parts.end());
  return t;
}

BigInt factorial(std::size_t n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt cycle_type_count(std::size_t n, const CycleType &type) {
  if (type.degree() != n)
    throw PartitionMismatch("cycle type " + type.to_string() + " does not partition " +
                            std::to_string(n));
  std::map<std::size_t, std::size_t> mult;
  for (auto part : type.parts) {
    if (part == 0)
      throw PartitionMismatch("cycle type has a zero part");
    ++mult[part];
  }
  BigInt denom = 1;
  for (const auto &[part, m] : mult) {
    BigInt pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), part, m);
    denom *= pw * factorial(m);
  }
  return factorial(n) / denom;
}

bool PermGroup::contains(const Permutation &p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermGroup::index_of(const Permutation &p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p)
    throw InputError("permutation " + p.to_cycle_string() + " is not in the group");
  return static_cast<std::size_t>(it - elements_.begin());
}

void PermGroup::finish() {
  std::sort(elements_.begin(), elements_.end());
  classes_ = conjugacy_classes(*this);
}

PermGroup group_from_generators(std::size_t degree, const std::vector<Permutation> &gens,
                                std::size_t cap) {
  for (const auto &g : gens)
    if (g.degree() != degree)
      throw DegreeMismatch("generator " + g.to_cycle_string() + " has degree " +
                           std::to_string(g.degree()) + ", expected " + std::to_string(degree));
  PermGroup grp;
  grp.degree_ = degree;
  grp.elements_.clear();
  for (const auto &g : gens)
    if (!g.is_identity())
      grp.generators_.push_back(g);

  std::unordered_set<Permutation, PermHash> seen;
  std::deque<Permutation> queue;
  const Permutation id = Permutation::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  grp.elements_.push_back(id);
  while (!queue.empty()) {
    Permutation x = std::move(queue.front());
    queue.pop_front();
    for (const auto &g : grp.generators_) {
      Permutation y = g * x;
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw CapExceeded("group closure exceeds cap of " + std::to_string(cap) + " elements");
        grp.elements_.push_back(y);
        queue.push_back(std::move(y));
      }
    }
  }
  grp.finish();
  return grp;
}

PermGroup group_from_elements(std::size_t degree, std::vector<Permutation> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (const auto &e : elements)
    if (e.degree() != degree)
      throw DegreeMismatch("element degree differs from group degree");
  if (elements.empty() || !elements.front().is_identity())
    throw InputError("element list lacks the identity");

  // Greedy generating set: add any element not yet generated. The list is a
  // group iff the closure of those generators has exactly its size.
  std::vector<Permutation> gens;
  std::unordered_set<Permutation, PermHash> span{elements.front()};
  for (const auto &e : elements) {
    if (span.count(e))
      continue;
    gens.push_back(e);
    std::deque<Permutation> queue(span.begin(), span.end());
    while (!queue.empty()) {
      Permutation x = std::move(queue.front());
      queue.pop_front();
      for (const auto &g : gens) {
        Permutation y = g * x;
        if (span.insert(y).second) {
          if (span.size() > elements.size())
            throw InputError("element list is not closed under composition");
          queue.push_back(std::move(y));
        }
      }
    }
  }
  if (span.size() != elements.size())
    throw InputError("element list is not closed under composition");
  for (const auto &x : span)
    if (!std::binary_search(elements.begin(), elements.end(), x))
      throw InputError("element list is not closed under composition");

  PermGroup grp;
  grp.degree_ = degree;
  grp.generators_ = std::move(gens);
  grp.elements_ = std::move(elements);
  grp.classes_ = conjugacy_classes(grp);
  return grp;
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup &g) {
  const auto &elems = g.elements();
  std::vector<bool> assigned(elems.size(), false);
  std::vector<std::pair<Permutation, Permutation>> gens;
  for (const auto &s : g.generators())
    gens.emplace_back(s, s.inverse());

  std::vector<ConjugacyClass> classes;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (assigned[i])
      continue;
    // elements are visited in lex order, so elems[i] is the least member
    std::size_t size = 0;
    std::vector<std::size_t> stack{i};
    assigned[i] = true;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      ++size;
      for (const auto &[s, sinv] : gens) {
        const std::size_t y = g.index_of(s * elems[x] * sinv);
        if (!assigned[y]) {
          assigned[y] = true;
          stack.push_back(y);
        }
      }
    }
    classes.push_back({elems[i], size, cycle_type(elems[i])});
  }
  return classes;
}

PermGroup trivial_group(std::size_t degree) { return group_from_generators(degree, {}); }

PermGroup symmetric_group_on(std::size_t degree, const std::vector<std::size_t> &points) {
  std::vector<Permutation> gens;
  if (points.size() >= 2) {
    gens.push_back(Permutation::cycle(degree, {points[0], points[1]}));
    gens.push_back(Permutation::cycle(degree, points));
  }
  return group_from_generators(degree, gens);
}

PermGroup symmetric_group(std::size_t n) {
  std::vector<std::size_t> pts(n);
  for (std::size_t i = 0; i < n; ++i)
    pts[i] = i;
  return symmetric_group_on(n, pts);
}

namespace {

Permutation embed(const Permutation &p, std::size_t degree, std::size_t offset) {
  std::vector<std::uint32_t> im(degree);
  for (std::size_t i = 0; i < degree; ++i)
    im[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < p.degree(); ++i)
    im[offset + i] = static_cast<std::uint32_t>(offset + p(i));
  return Permutation(std::move(im));
}

void check_cap(const BigInt &order, std::size_t cap, const char *what) {
  if (order > BigInt(static_cast<unsigned long>(cap)))
    throw CapExceeded(std::string(what) + " of order " + order.get_str() + " exceeds cap " +
                      std::to_string(cap));
}

} // namespace

PermGroup direct_product(const PermGroup &a, const PermGroup &b, std::size_t cap) {
  check_cap(BigInt(static_cast<unsigned long>(a.order())) * static_cast<unsigned long>(b.order()),
            cap, "direct product");
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto &g : a.generators())
    gens.push_back(embed(g, degree, 0));
  for (const auto &g : b.generators())
    gens.push_back(embed(g, degree, a.degree()));
  return group_from_generators(degree, gens, cap);
}

PermGroup wreath_product(const PermGroup &g, std::size_t n, std::size_t cap) {
  if (n == 0)
    throw InputError("wreath product needs n >= 1");
  BigInt order;
  mpz_ui_pow_ui(order.get_mpz_t(), g.order(), n);
  order *= factorial(n);
  check_cap(order, cap, "wreath product");

  const std::size_t d = g.degree();
  const std::size_t degree = d * n;
  std::vector<Permutation> gens;
  for (const auto &s : g.generators())
    gens.push_back(embed(s, degree, 0));
  auto block_perm = [&](const std::vector<std::size_t> &block_images) {
    std::vector<std::uint32_t> im(degree);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t i = 0; i < d; ++i)
        im[b * d + i] = static_cast<std::uint32_t>(block_images[b] * d + i);
    return Permutation(std::move(im));
  };
  if (n >= 2 && d >= 1) {
    std::vector<std::size_t> swap(n), rot(n);
    for (std::size_t b = 0; b < n; ++b) {
      swap[b] = b;
      rot[b] = (b + 1) % n;
    }
    std::swap(swap[0], swap[1]);
    gens.push_back(block_perm(swap));
    gens.push_back(block_perm(rot));
  }
  return group_from_generators(degree, gens, cap);
}

nlohmann::json to_json(const Permutation &p) { return p.to_one_based(); }

Permutation permutation_from_json(const nlohmann::json &j) {
  if (!j.is_array())
    throw InputError("permutation must be a 1-based image array");
  std::vector<long> im;
  for (const auto &e : j) {
    if (!e.is_number_integer())
      throw InputError("permutation images must be integers");
    im.push_back(e.get<long>());
  }
  return Permutation::from_one_based(im);
}

} // namespace agstab
