#include "projarr/intersection_poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <omp.h>

namespace projarr {

namespace {
int g_threads = 0;
}

void set_thread_count(int threads) {
  g_threads = threads;
  if (threads > 0) omp_set_num_threads(threads);
}

int thread_count() { return g_threads > 0 ? g_threads : omp_get_max_threads(); }

std::vector<ClosureEntry> intersection_closure_with_witnesses(const Arrangement& arr) {
  std::map<Subspace, std::vector<std::size_t>> found;
  found.emplace(Subspace::full(arr.ambient_dim()), std::vector<std::size_t>{});
  std::vector<Subspace> frontier{Subspace::full(arr.ambient_dim())};
  // Every intersection of a subfamily is reached by intersecting with one member at a time.
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& x : frontier) {
      const auto base = found.at(x);
      for (std::size_t i = 0; i < arr.size(); ++i) {
        Subspace y = subspace_intersection(x, arr[i]);
        if (found.count(y)) continue;
        auto w = base;
        w.push_back(i);
        std::sort(w.begin(), w.end());
        found.emplace(y, std::move(w));
        next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  std::vector<ClosureEntry> out;
  out.reserve(found.size());
  for (auto& [s, w] : found) out.push_back({s, w});
  return out;
}

std::vector<Subspace> intersection_closure(const Arrangement& arr) {
  std::vector<Subspace> out;
  for (auto& e : intersection_closure_with_witnesses(arr)) out.push_back(std::move(e.space));
  return out;
}

std::optional<IntersectionPoset::Id> IntersectionPoset::find(const Subspace& s) const {
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i] == s) return static_cast<Id>(i);
  return std::nullopt;
}

std::vector<IntersectionPoset::Id> IntersectionPoset::interval(int lo, int hi, bool hi_closed) const {
  std::vector<Id> out;
  for (std::size_t i = 0; i < size(); ++i) {
    const int x = d_[i];
    if (x >= lo && (hi_closed ? x <= hi : x < hi)) out.push_back(static_cast<Id>(i));
  }
  return out;
}

std::vector<std::pair<IntersectionPoset::Id, IntersectionPoset::Id>> IntersectionPoset::covers() const {
  std::vector<std::pair<Id, Id>> out;
  const Id count = static_cast<Id>(size());
  for (Id u = 0; u < count; ++u)
    for (Id v = 0; v < count; ++v) {
      if (!less(u, v)) continue;
      bool cover = true;
      for (Id w = 0; w < count && cover; ++w)
        if (less(u, w) && less(w, v)) cover = false;
      if (cover) out.emplace_back(u, v);
    }
  return out;
}

IntersectionPoset build_poset(const Arrangement& arr, ExecutionMode mode) {
  auto closure = intersection_closure_with_witnesses(arr);
  std::sort(closure.begin(), closure.end(), [](const ClosureEntry& a, const ClosureEntry& b) {
    if (a.space.dim() != b.space.dim()) return a.space.dim() > b.space.dim();
    return a.space < b.space;
  });

  IntersectionPoset p;
  p.n_ = arr.n();
  std::map<Subspace, IntersectionPoset::Id> index;
  for (std::size_t i = 0; i < closure.size(); ++i) {
    index.emplace(closure[i].space, static_cast<IntersectionPoset::Id>(i));
    p.d_.push_back(static_cast<int>(closure[i].space.dim()) - 1);
    p.elements_.push_back(closure[i].space);
    p.witness_.push_back(closure[i].witness);
  }
  p.name_.resize(p.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto id = index.at(arr[i]);
    p.member_.push_back(id);
    p.name_[id] = arr.names()[i];
  }

  const std::size_t count = p.size();
  p.meet_.assign(count * count, -1);
  auto fill_row = [&](std::size_t i) {
    p.meet_[i * count + i] = static_cast<IntersectionPoset::Id>(i);
    for (std::size_t j = i + 1; j < count; ++j) {
      const auto id = index.at(subspace_intersection(p.elements_[i], p.elements_[j]));
      p.meet_[i * count + j] = id;
      p.meet_[j * count + i] = id;
    }
  };
  if (mode == ExecutionMode::Parallel) {
    const long rows = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < rows; ++i) fill_row(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) fill_row(i);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Isomorphism

RankedPoset ranked(const IntersectionPoset& p) {
  std::vector<IntersectionPoset::Id> all(p.size());
  std::iota(all.begin(), all.end(), 0);
  return induced(p, all, 0);
}

RankedPoset induced(const IntersectionPoset& p, const std::vector<IntersectionPoset::Id>& ids, int shift) {
  RankedPoset r;
  r.leq.assign(ids.size(), std::vector<bool>(ids.size(), false));
  for (std::size_t a = 0; a < ids.size(); ++a) {
    r.rank.push_back(p.d(ids[a]) + shift);
    for (std::size_t b = 0; b < ids.size(); ++b) r.leq[a][b] = p.leq(ids[a], ids[b]);
  }
  return r;
}

namespace {

struct Profile {
  int rank;
  std::size_t below;
  std::size_t above;
  auto operator<=>(const Profile&) const = default;
};

std::vector<Profile> profiles(const RankedPoset& p) {
  std::vector<Profile> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Profile pr{p.rank[i], 0, 0};
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (i == j) continue;
      if (p.leq[j][i]) ++pr.below;
      if (p.leq[i][j]) ++pr.above;
    }
    out.push_back(pr);
  }
  return out;
}

bool extend(const RankedPoset& p, const RankedPoset& q, const std::vector<Profile>& pp,
            const std::vector<Profile>& qp, std::vector<int>& image, std::vector<bool>& used, std::size_t next) {
  if (next == p.size()) return true;
  for (std::size_t cand = 0; cand < q.size(); ++cand) {
    if (used[cand] || !(pp[next] == qp[cand])) continue;
    bool ok = true;
    for (std::size_t prev = 0; prev < next && ok; ++prev) {
      const auto img = static_cast<std::size_t>(image[prev]);
      ok = p.leq[prev][next] == q.leq[img][cand] && p.leq[next][prev] == q.leq[cand][img];
    }
    if (!ok) continue;
    image[next] = static_cast<int>(cand);
    used[cand] = true;
    if (extend(p, q, pp, qp, image, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool poset_isomorphic(const RankedPoset& p, const RankedPoset& q) {
  if (p.size() != q.size()) return false;
  auto pp = profiles(p);
  auto qp = profiles(q);
  auto sp = pp, sq = qp;
  std::sort(sp.begin(), sp.end());
  std::sort(sq.begin(), sq.end());
  if (sp != sq) return false;
  std::vector<int> image(p.size(), -1);
  std::vector<bool> used(q.size(), false);
  return extend(p, q, pp, qp, image, used, 0);
}

bool poset_isomorphic(const IntersectionPoset& p, const IntersectionPoset& q) {
  return poset_isomorphic(ranked(p), ranked(q));
}

// ---------------------------------------------------------------------------
// Generic hyperplane sections

EtaReport verify_eta(const Arrangement& arr, std::uint64_t seed) {
  return verify_eta_with(arr, generic_hyperplane(arr, seed));
}

EtaReport verify_eta_with(const Arrangement& arr, const Hyperplane& h) {
  EtaReport report;
  report.hyperplane = h;
  const IntersectionPoset q = build_poset(arr, ExecutionMode::Serial);
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q.d(static_cast<int>(i)) >= 0 && h.vanishes_on(q.element(static_cast<int>(i)))) {
      report.message = "precondition failed: hyperplane contains poset element " + std::to_string(i);
      return report;
    }
  const Arrangement sec = hyperplane_section(arr, h);
  const IntersectionPoset qh = build_poset(sec, ExecutionMode::Serial);

  // Explicit map q -> q cap H in the coordinates of H.
  const Subspace hs = h.subspace();
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < hs.dim(); ++r) {
    std::size_t c = 0;
    while (hs.basis()(r, c) == 0) ++c;
    pivots.push_back(c);
  }
  const auto source = q.interval(1, q.n(), true);
  const auto target = qh.interval(0, qh.n(), true);
  std::vector<int> image;
  std::vector<bool> hit(qh.size(), false);
  for (const auto u : source) {
    const Subspace cut = subspace_intersection(q.element(u), hs);
    QMatrix coords(cut.dim(), pivots.size());
    for (std::size_t r = 0; r < cut.dim(); ++r)
      for (std::size_t j = 0; j < pivots.size(); ++j) coords(r, j) = cut.basis()(r, pivots[j]);
    const auto id = qh.find(Subspace(pivots.size(), coords));
    if (!id || qh.d(*id) != q.d(u) - 1) {
      report.message = "element " + std::to_string(u) + " does not map to an element of Q^H with d lowered by one";
      return report;
    }
    if (hit[*id]) {
      report.message = "map is not injective at element " + std::to_string(u);
      return report;
    }
    hit[*id] = true;
    image.push_back(*id);
  }
  for (const auto v : target)
    if (!hit[v]) {
      report.message = "element " + std::to_string(v) + " of Q^H_[0,n-1] has no preimage";
      return report;
    }
  for (std::size_t a = 0; a < source.size(); ++a)
    for (std::size_t b = 0; b < source.size(); ++b)
      if (q.leq(source[a], source[b]) != qh.leq(image[a], image[b])) {
        report.message = "order not preserved between elements " + std::to_string(source[a]) + " and " +
                         std::to_string(source[b]);
        return report;
      }
  if (!poset_isomorphic(induced(q, source, -1), induced(qh, target, 0))) {
    report.message = "ranked subposets are not isomorphic";
    return report;
  }
  report.passed = true;
  report.message = "eta is an isomorphism on " + std::to_string(source.size()) + " elements";
  return report;
}

// ---------------------------------------------------------------------------
// Dependence

int intersection_codim(const Arrangement& arr, const std::vector<std::size_t>& indices) {
  Subspace s = Subspace::full(arr.ambient_dim());
  for (auto i : indices) s = subspace_intersection(s, arr[i]);
  return arr.n() - (static_cast<int>(s.dim()) - 1);
}

namespace {
int defect_of(const Arrangement& arr, const std::vector<std::size_t>& indices) {
  int sum = 0;
  for (auto i : indices) sum += arr.n() - arr.d(i);
  return sum - intersection_codim(arr, indices);
}
}  // namespace

bool is_dependent(const Arrangement& arr, const std::vector<std::size_t>& indices) {
  return defect_of(arr, indices) != 0;
}

std::vector<DependentSet> minimal_dependent_sets(const Arrangement& arr) {
  const std::size_t m = arr.size();
  if (m > 62) throw std::invalid_argument("too many subspaces for subset enumeration");
  std::vector<DependentSet> out;
  std::vector<std::uint64_t> masks;
  for (std::size_t size = 2; size <= m; ++size) {
    // Lexicographic enumeration of size-subsets.
    std::vector<std::size_t> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      std::uint64_t mask = 0;
      for (auto i : idx) mask |= std::uint64_t{1} << i;
      const bool contains_dependent =
          std::any_of(masks.begin(), masks.end(), [&](std::uint64_t d) { return (d & mask) == d; });
      if (!contains_dependent) {
        const int defect = defect_of(arr, idx);
        if (defect != 0) {
          out.push_back({idx, defect, true});
          masks.push_back(mask);
        }
      }
      std::size_t k = size;
      while (k > 0 && idx[k - 1] == m - size + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

bool is_c_arrangement(const Arrangement& arr, int c) {
  if (c <= 0) return false;
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (arr.n() - arr.d(i) != c) return false;
  for (const auto& q : intersection_closure(arr)) {
    const int codim = arr.n() - (static_cast<int>(q.dim()) - 1);
    if (codim % c != 0) return false;
  }
  return true;
}

}  // namespace projarr
