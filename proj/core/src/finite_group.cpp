#include "ekchains/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace ekc {

namespace {

// Groups up to this order get a full Cayley table; above it products go
// through the hash index.
constexpr std::size_t kTableLimit = 2048;

} // namespace

CapExceeded::CapExceeded(std::size_t cap, std::size_t partial)
    : std::runtime_error("group closure exceeded cap of " + std::to_string(cap) +
                         " elements (" + std::to_string(partial) + " enumerated)"),
      cap_(cap),
      partial_(partial) {}

struct FiniteGroup::Impl {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, ElemId> index;
  std::vector<ElemId> inverse;
  std::vector<ElemId> table; // row-major a*b, empty when order > kTableLimit
  ElemId identity = 0;

  ElemId lookup(const Permutation& p) const { return index.at(p); }
  ElemId mul(ElemId a, ElemId b) const {
    if (!table.empty())
      return table[static_cast<std::size_t>(a) * elements.size() + b];
    return lookup(compose(elements[a], elements[b]));
  }
};

FiniteGroup FiniteGroup::closure(std::vector<Permutation> generators, std::size_t cap,
                                 std::size_t degree) {
  if (cap == 0)
    throw std::invalid_argument("closure cap must be positive");
  if (!generators.empty())
    degree = generators.front().degree();
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw DegreeMismatch(degree, g.degree());

  auto impl = std::make_shared<Impl>();
  impl->degree = degree;
  impl->generators = generators;

  std::unordered_map<Permutation, bool> seen;
  std::vector<Permutation> found;
  std::deque<Permutation> frontier;
  Permutation id(degree);
  seen.emplace(id, true);
  found.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation next = compose(g, cur);
      if (seen.emplace(next, true).second) {
        if (found.size() >= cap)
          throw CapExceeded(cap, found.size());
        found.push_back(next);
        frontier.push_back(std::move(next));
      }
    }
  }

  std::sort(found.begin(), found.end());
  impl->elements = std::move(found);
  const std::size_t n = impl->elements.size();
  impl->index.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    impl->index.emplace(impl->elements[i], static_cast<ElemId>(i));
  impl->identity = impl->lookup(id);

  impl->inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    impl->inverse[i] = impl->lookup(inverse(impl->elements[i]));

  if (n <= kTableLimit) {
    impl->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        impl->table[a * n + b] = impl->lookup(compose(impl->elements[a], impl->elements[b]));
  }
  return FiniteGroup(std::move(impl));
}

std::size_t FiniteGroup::degree() const { return impl_->degree; }
std::size_t FiniteGroup::order() const { return impl_->elements.size(); }
const std::vector<Permutation>& FiniteGroup::generators() const { return impl_->generators; }
const std::vector<Permutation>& FiniteGroup::elements() const { return impl_->elements; }
const Permutation& FiniteGroup::element(ElemId id) const { return impl_->elements.at(id); }

std::optional<ElemId> FiniteGroup::find(const Permutation& p) const {
  auto it = impl_->index.find(p);
  if (it == impl_->index.end())
    return std::nullopt;
  return it->second;
}

ElemId FiniteGroup::index_of(const Permutation& p) const {
  if (p.degree() != degree())
    throw DegreeMismatch(degree(), p.degree());
  auto id = find(p);
  if (!id)
    throw NotContained("permutation " + format_cycles(p) + " is not in the group");
  return *id;
}

ElemId FiniteGroup::identity() const { return impl_->identity; }
ElemId FiniteGroup::mul(ElemId a, ElemId b) const { return impl_->mul(a, b); }
ElemId FiniteGroup::inv(ElemId a) const { return impl_->inverse[a]; }

ElemId FiniteGroup::commutator(ElemId a, ElemId b) const {
  return mul(inv(a), mul(inv(b), mul(a, b)));
}

ElemId FiniteGroup::conjugate(ElemId a, ElemId b) const { return mul(inv(b), mul(a, b)); }

Subgroup FiniteGroup::whole() const {
  std::vector<ElemId> all(order());
  for (std::size_t i = 0; i < all.size(); ++i)
    all[i] = static_cast<ElemId>(i);
  return Subgroup::from_members(*this, std::move(all));
}

Subgroup FiniteGroup::trivial() const { return Subgroup::from_members(*this, {identity()}); }

// ---------------------------------------------------------------------------

Subgroup::Subgroup(FiniteGroup parent, std::vector<ElemId> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  mask_.assign(parent_.order(), false);
  for (ElemId m : members_)
    mask_.at(m) = true;
}

Subgroup Subgroup::from_members(const FiniteGroup& parent, std::vector<ElemId> members) {
  return Subgroup(parent, std::move(members));
}

Subgroup Subgroup::generated(const FiniteGroup& parent, std::span<const ElemId> generators) {
  std::vector<bool> seen(parent.order(), false);
  std::vector<ElemId> found{parent.identity()};
  seen[parent.identity()] = true;
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (ElemId g : generators) {
      ElemId next = parent.mul(g, found[i]);
      if (!seen[next]) {
        seen[next] = true;
        found.push_back(next);
      }
    }
  }
  return Subgroup(parent, std::move(found));
}

bool Subgroup::contains(const Permutation& p) const {
  auto id = parent_.find(p);
  return id && contains(*id);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (!parent_.same_as(other.parent_))
    throw std::invalid_argument("subgroups of different groups");
  return std::all_of(members_.begin(), members_.end(),
                     [&](ElemId m) { return other.contains(m); });
}

std::vector<Permutation> Subgroup::permutations() const {
  std::vector<Permutation> out;
  out.reserve(members_.size());
  for (ElemId m : members_)
    out.push_back(parent_.element(m));
  return out;
}

Subgroup subgroup_of(const FiniteGroup& parent, std::span<const Permutation> generators) {
  std::vector<ElemId> ids;
  for (const auto& g : generators)
    ids.push_back(parent.index_of(g));
  return Subgroup::generated(parent, ids);
}

Subgroup centralizer(const Subgroup& within, std::span<const ElemId> set) {
  const auto& g = within.parent();
  std::vector<ElemId> out;
  for (ElemId x : within.members()) {
    bool commutes = std::all_of(set.begin(), set.end(),
                                [&](ElemId s) { return g.mul(x, s) == g.mul(s, x); });
    if (commutes)
      out.push_back(x);
  }
  return Subgroup::from_members(g, std::move(out));
}

Subgroup centralizer(const Subgroup& within, const Subgroup& of) {
  return centralizer(within, std::span<const ElemId>(of.members()));
}

Subgroup centralizer(const FiniteGroup& group, std::span<const Permutation> set) {
  std::vector<ElemId> ids;
  for (const auto& p : set)
    ids.push_back(group.index_of(p));
  return centralizer(group.whole(), std::span<const ElemId>(ids));
}

Subgroup normalizer(const Subgroup& within, const Subgroup& of) {
  const auto& g = within.parent();
  std::vector<ElemId> out;
  for (ElemId x : within.members()) {
    bool normalizes = std::all_of(of.members().begin(), of.members().end(),
                                  [&](ElemId s) { return of.contains(g.conjugate(s, x)); });
    if (normalizes)
      out.push_back(x);
  }
  return Subgroup::from_members(g, std::move(out));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<ElemId> out;
  for (ElemId m : a.members())
    if (b.contains(m))
      out.push_back(m);
  return Subgroup::from_members(a.parent(), std::move(out));
}

bool is_subgroup(const FiniteGroup& parent, std::span<const ElemId> members) {
  std::vector<bool> in(parent.order(), false);
  for (ElemId m : members)
    in[m] = true;
  if (!in[parent.identity()])
    return false;
  for (ElemId a : members) {
    if (!in[parent.inv(a)])
      return false;
    for (ElemId b : members)
      if (!in[parent.mul(a, b)])
        return false;
  }
  return true;
}

bool is_abelian(const Subgroup& s) {
  const auto& g = s.parent();
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (g.mul(m[i], m[j]) != g.mul(m[j], m[i]))
        return false;
  return true;
}

std::vector<Subgroup> upper_central_series(const Subgroup& s) {
  const auto& g = s.parent();
  std::vector<Subgroup> series{g.trivial()};
  while (series.back().order() != s.order()) {
    const Subgroup& prev = series.back();
    std::vector<ElemId> next;
    for (ElemId x : s.members()) {
      bool ok = std::all_of(s.members().begin(), s.members().end(),
                            [&](ElemId y) { return prev.contains(g.commutator(x, y)); });
      if (ok)
        next.push_back(x);
    }
    Subgroup term = Subgroup::from_members(g, std::move(next));
    bool stalled = term == prev;
    series.push_back(std::move(term));
    if (stalled)
      break;
  }
  return series;
}

const Subgroup& upper_central_term(const std::vector<Subgroup>& series, std::size_t k) {
  return series.at(std::min(k, series.size() - 1));
}

std::optional<std::size_t> nilpotency_class(const Subgroup& s) {
  auto series = upper_central_series(s);
  if (series.back().order() != s.order())
    return std::nullopt;
  return series.size() - 1;
}

std::vector<GeneratedSubgroup> small_subgroups(const FiniteGroup& group) {
  std::map<std::vector<ElemId>, GeneratedSubgroup> by_members;
  auto add = [&](std::vector<ElemId> gens) {
    Subgroup s = Subgroup::generated(group, gens);
    by_members.try_emplace(s.members(), GeneratedSubgroup{s, std::move(gens)});
  };
  add({});
  const auto n = static_cast<ElemId>(group.order());
  for (ElemId a = 0; a < n; ++a)
    if (a != group.identity())
      add({a});
  for (ElemId a = 0; a < n; ++a)
    for (ElemId b = a + 1; b < n; ++b)
      if (a != group.identity() && b != group.identity())
        add({a, b});

  std::vector<GeneratedSubgroup> out;
  for (auto& [members, entry] : by_members)
    out.push_back(std::move(entry));
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.subgroup.order() != y.subgroup.order())
      return x.subgroup.order() < y.subgroup.order();
    return x.subgroup.members() < y.subgroup.members();
  });
  return out;
}

} // namespace ekc
