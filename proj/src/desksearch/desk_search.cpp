#include "bmw/desk_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "bmw/errors.hpp"

namespace bmw {

namespace {

Perm12 compose(const Perm12& p, const Perm12& q) {  // x -> p(q(x))
  Perm12 r;
  for (std::size_t x = 0; x < 12; ++x) r[x] = p[q[x]];
  return r;
}

Perm12 invert(const Perm12& p) {
  Perm12 r;
  for (std::size_t x = 0; x < 12; ++x) r[p[x]] = static_cast<std::uint8_t>(x);
  return r;
}

Permutation to_permutation(const Perm12& p) { return Permutation(std::vector<Point>(p.begin(), p.end())); }

}  // namespace

GapSetup::GapSetup() {
  const auto alt4 = PermGroup::alternating(4).elements(12);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < 12; ++i) {
    Perm12 row;
    for (std::size_t j = 0; j < 12; ++j) {
      std::vector<Point> prod(4);
      for (Point x = 0; x < 4; ++x) prod[x] = alt4[i](alt4[j](x));
      const auto it = std::find(alt4.begin(), alt4.end(), Permutation(prod));
      row[j] = static_cast<std::uint8_t>(it - alt4.begin());
    }
    elems_[i] = row;
  }
  for (const auto& e : elems_) gens.push_back(to_permutation(e));
  k_ = PermGroup(12, gens);
  if (k_.order() != 12 || !k_.is_transitive()) throw InvariantViolation("regular Alt(4) setup failed");
}

bool GapSetup::condition2(const Perm12& g) const {
  const Perm12 gi = invert(g);
  int count = 0;
  for (const auto& k : elems_) {
    const std::uint8_t p0 = gi[k[0]];
    const auto& target = elems_[p0];
    bool in = true;
    for (std::size_t x = 1; x < 12 && in; ++x) in = gi[k[g[x]]] == target[x];
    count += in;
  }
  return count == 3;
}

bool GapSetup::condition1(const Perm12& g) const {
  const Perm12 gi = invert(g);
  for (const auto& k : elems_) {
    const std::uint8_t p0 = gi[k[0]];
    const auto& target = elems_[p0];
    bool in = true;
    for (std::size_t x = 1; x < 12 && in; ++x) in = gi[k[gi[x]]] == target[x];
    if (in) return true;
  }
  return false;
}

namespace {

// Representatives of the left cosets k g K, each fixing point 0.
std::vector<Perm12> coset_reps(const std::array<Perm12, 12>& elems, const Perm12& g) {
  std::vector<Perm12> reps;
  for (const auto& k : elems) {
    const Perm12 x = compose(k, g);
    const Perm12 c = compose(x, elems[invert(x)[0]]);
    if (std::find(reps.begin(), reps.end(), c) == reps.end()) reps.push_back(c);
  }
  return reps;
}

}  // namespace

std::size_t GapSetup::double_coset_size(const Perm12& g) const { return 12 * coset_reps(elems_, g).size(); }

bool GapSetup::condition2_by_cosets(const Perm12& g) const { return coset_reps(elems_, g).size() == 4; }

bool GapSetup::condition1_by_cosets(const Perm12& g) const {
  const auto reps = coset_reps(elems_, g);
  const Perm12 gi = invert(g);
  return std::find(reps.begin(), reps.end(), compose(gi, elems_[invert(gi)[0]])) != reps.end();
}

bool GapSetup::condition3(const Perm12& g) const {
  auto gens = k_.generators();
  gens.push_back(to_permutation(g));
  return PermGroup(12, gens).contains_alt();
}

SearchReport gap_replication_11_4(const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const GapSetup setup;
  std::vector<unsigned> parts = options.first_images;
  if (parts.empty()) {
    for (unsigned v = 1; v <= 11; ++v) parts.push_back(v);
  }
  for (unsigned v : parts)
    if (v < 1 || v > 11) throw PreconditionFailed("first image must lie in 1..11");
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());

  struct Partial {
    std::uint64_t total = 0, c1 = 0, c2 = 0, c12 = 0, c123 = 0;
    std::vector<Perm12> survivors;
  };
  std::vector<Partial> partial(parts.size());
  const bool by_cosets = options.method == SearchMethod::CosetCount;

  auto work = [&](std::size_t idx) {
    Partial& out = partial[idx];
    const auto v = static_cast<std::uint8_t>(parts[idx]);
    std::vector<std::uint8_t> rest;
    for (std::uint8_t p = 1; p <= 11; ++p)
      if (p != v) rest.push_back(p);
    Perm12 g;
    g[0] = 0;
    g[1] = v;
    do {
      std::copy(rest.begin(), rest.end(), g.begin() + 2);
      ++out.total;
      const bool a = by_cosets ? setup.condition1_by_cosets(g) : setup.condition1(g);
      const bool b = by_cosets ? setup.condition2_by_cosets(g) : setup.condition2(g);
      out.c1 += a;
      out.c2 += b;
      if (a && b) {
        ++out.c12;
        if (setup.condition3(g)) {
          ++out.c123;
          out.survivors.push_back(g);
        }
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  };

  const unsigned threads = std::max(1u, options.threads);
  std::atomic<std::size_t> next{0};
  auto loop = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < parts.size();) work(i);
  };
  if (threads == 1) {
    loop();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(loop);
    for (auto& t : pool) t.join();
  }

  SearchReport r;
  for (const auto& p : partial) {
    r.total_candidates += p.total;
    r.c1 += p.c1;
    r.c2 += p.c2;
    r.c1_c2 += p.c12;
    r.c1_c2_c3 += p.c123;
    r.per_partition.push_back({p.total, p.c1, p.c2, p.c12, p.c123});
    r.survivors.insert(r.survivors.end(), p.survivors.begin(), p.survivors.end());
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ThompsonReport thompson_check() {
  const auto alt5 = PermGroup::alternating(5);
  const auto elems = alt5.elements(60);
  const Permutation a = Permutation::from_cycles(5, {{0, 1, 2}});
  const Permutation b = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  const PermGroup source(5, {a, b});

  auto order_of = [](const Permutation& p) {
    std::size_t n = 1;
    for (Permutation q = p; !q.is_identity(); q = q * p) ++n;
    return n;
  };
  const std::size_t ab_order = order_of(a * b);

  // Automorphisms as generator images (x, y); each one checked to extend to a
  // bijective homomorphism.
  std::vector<Homomorphism> autos;
  for (const auto& x : elems) {
    if (order_of(x) != 3) continue;
    for (const auto& y : elems) {
      if (order_of(y) != 5 || order_of(x * y) != ab_order) continue;
      try {
        Homomorphism h(source, 5, {x, y});
        if (h.image_group().order() == 60) autos.push_back(std::move(h));
      } catch (const PreconditionFailed&) {
      }
    }
  }

  // Subgroups of Alt(5) x Alt(5) on 10 points, as sorted element lists.
  std::vector<std::vector<Permutation>> subgroups;
  const auto id5 = Permutation::identity(5);
  {
    std::vector<Permutation> left, right;
    for (const auto& e : elems) {
      left.push_back(e.direct_sum(id5));
      right.push_back(id5.direct_sum(e));
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    subgroups.push_back(std::move(left));
    subgroups.push_back(std::move(right));
  }
  std::vector<std::vector<Permutation>> maps;  // maps[i][j] = phi_i(elems[j])
  for (const auto& h : autos) {
    std::vector<Permutation> graph, images;
    for (const auto& e : elems) {
      images.push_back(h.image(e));
      graph.push_back(e.direct_sum(images.back()));
    }
    std::sort(graph.begin(), graph.end());
    subgroups.push_back(std::move(graph));
    maps.push_back(std::move(images));
  }

  ThompsonReport r;
  r.factors = 2;
  r.diagonals = autos.size();
  for (std::size_t i = 0; i < subgroups.size(); ++i) {
    for (std::size_t j = i + 1; j < subgroups.size(); ++j) {
      ++r.pairs_tested;
      std::vector<Permutation> common;
      std::set_intersection(subgroups[i].begin(), subgroups[i].end(), subgroups[j].begin(), subgroups[j].end(),
                            std::back_inserter(common));
      if (i >= 2) {
        // Both diagonals: the intersection is the set where phi_i and phi_j agree.
        std::size_t agree = 0;
        for (std::size_t e = 0; e < elems.size(); ++e) agree += maps[i - 2][e] == maps[j - 2][e];
        if (agree != common.size()) ++r.fixed_point_mismatches;
      }
      if (common.size() != 1) continue;
      ++r.trivial_intersection_pairs;
      if (i >= 2 && !r.counterexample) r.counterexample = std::make_pair(i, j);
    }
  }
  return r;
}

BigInt wreath_order_oracle(unsigned d) {
  if (d < 3 || d > 12) throw PreconditionFailed("wreath oracle needs 3 <= d <= 12");
  const BigInt fd = factorial(d);
  const BigInt fm = factorial(d - 1);
  BigInt result = fd;
  std::uint64_t copies = d;
  for (int k = 0; k <= 4; ++k) {
    result *= power(fm, copies);
    copies *= d - 1;
  }
  return result;
}

}  // namespace bmw
