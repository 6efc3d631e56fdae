#include "hilbrad/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

namespace hilbrad {

namespace {

// Polynomials in t written in the basis C(t-r+j, j), j = 0..n.
using Coeffs = std::vector<std::int64_t>;

constexpr std::int64_t kLimit = std::int64_t{1} << 61;

std::int64_t to_int64(const Integer& v) {
  if (v > kLimit || v < -kLimit)
    throw DomainError("instance too large for the enumeration kernel");
  return static_cast<std::int64_t>(v);
}

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
  return a > kLimit - b ? kLimit : a + b;
}

Integer choose(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  Integer r = 1;
  for (long long i = 0; i < b; ++i) {
    r *= (a - i);
    r /= (i + 1);
  }
  return r;
}

// One degree of the monomial lattice, with the incidences the search needs.
struct Level {
  std::vector<Monomial> monomials;            // descending lex
  std::vector<std::vector<int>> moves;        // same-degree targets of x_j -> x_{j-1}
  std::vector<std::vector<int>> expansion;    // indices one degree up
  std::vector<char> last_free;                // not divisible by xn
  std::vector<int> cone_dim;                  // n - max variable index
  int last_free_count = 0;
};

struct Tables {
  std::size_t n;
  unsigned r;
  std::vector<Level> levels;                  // 0..r
  // cone[e][k]: C(t-e+k, k), the Hilbert function of g * k[x_{n-k}..xn] for
  // deg g = e. With u = r - e >= 1 its coordinates are C(u-1+i, i) on
  // C(t-r+k-i, k-i); with u = 0 it is the basis vector itself.
  std::vector<std::vector<Coeffs>> cone;
  // Sum of the cones of every xn-free monomial of degree > e: an upper
  // bound on what later degrees can still remove.
  std::vector<Coeffs> later_capacity;
  Coeffs initial;                             // HF(S) - P
  Integer target_at_r;                        // P(r)

  Tables(std::size_t n_, const HilbertPolynomial& p, unsigned r_) : n(n_), r(r_) {
    levels.resize(r + 1);
    std::vector<std::unordered_map<Monomial, int>> index(r + 1);
    for (unsigned d = 0; d <= r; ++d) {
      auto& L = levels[d];
      L.monomials = monomials_of_degree(n, d);
      for (std::size_t i = 0; i < L.monomials.size(); ++i)
        index[d].emplace(L.monomials[i], static_cast<int>(i));
    }
    for (unsigned d = 0; d <= r; ++d) {
      auto& L = levels[d];
      const auto size = L.monomials.size();
      L.moves.resize(size);
      L.expansion.resize(size);
      L.last_free.resize(size);
      L.cone_dim.resize(size);
      for (std::size_t i = 0; i < size; ++i) {
        const Monomial& m = L.monomials[i];
        for (std::size_t j = 1; j <= n; ++j)
          if (m[j] > 0) L.moves[i].push_back(index[d].at(elementary_move(m, j)));
        if (d < r)
          for (std::size_t v = 0; v <= n; ++v)
            L.expansion[i].push_back(index[d + 1].at(m.times_variable(v)));
        L.last_free[i] = m[n] == 0;
        L.last_free_count += L.last_free[i];
        L.cone_dim[i] = static_cast<int>(n) - m.max_variable();
      }
    }

    cone.assign(r + 1, std::vector<Coeffs>(n + 1, Coeffs(n + 1, 0)));
    for (unsigned e = 0; e <= r; ++e) {
      const long long u = static_cast<long long>(r - e);
      for (std::size_t k = 0; k <= n; ++k) {
        if (u == 0) {
          cone[e][k][k] = 1;
          continue;
        }
        for (std::size_t i = 0; i <= k; ++i)
          cone[e][k][k - i] = to_int64(choose(u - 1 + static_cast<long long>(i),
                                              static_cast<long long>(i)));
      }
    }

    later_capacity.assign(r + 1, Coeffs(n + 1, 0));
    for (unsigned e = r; e-- > 0;) {
      later_capacity[e] = later_capacity[e + 1];
      const Level& L = levels[e + 1];
      for (std::size_t i = 0; i < L.monomials.size(); ++i)
        if (L.last_free[i])
          for (std::size_t j = 0; j <= n; ++j)
            later_capacity[e][j] =
                saturating_add(later_capacity[e][j], cone[e + 1][L.cone_dim[i]][j]);
    }

    // P in the same basis: forward differences at r give the coordinates in
    // C(t-r, j), and C(t-r+j, j) = sum_i C(j, i) C(t-r, i).
    std::vector<Integer> diffs(n + 1);
    std::vector<Integer> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) values[i] = p.at(static_cast<long long>(r + i));
    target_at_r = values[0];
    for (std::size_t j = 0; j <= n; ++j) {
      Integer d = 0;
      for (std::size_t i = 0; i <= j; ++i) {
        Integer term = choose(static_cast<long long>(j), static_cast<long long>(i)) * values[i];
        d += ((j - i) % 2 == 0) ? term : Integer(-term);
      }
      diffs[j] = d;
    }
    std::vector<Integer> target(n + 1);
    for (std::size_t j = n + 1; j-- > 0;) {
      target[j] = diffs[j];
      for (std::size_t i = 0; i <= j; ++i)
        diffs[i] -= target[j] * choose(static_cast<long long>(j), static_cast<long long>(i));
    }
    initial.assign(n + 1, 0);
    for (std::size_t j = 0; j <= n; ++j)
      initial[j] = to_int64(Integer(cone[0][n][j]) - target[j]);
  }
};

struct Generator {
  unsigned level;
  int index;
};

// The state at the end of a completed degree: slice d is fixed.
struct LevelState {
  unsigned degree;
  std::vector<char> slice;
  Coeffs gap;
  std::vector<Generator> gens;
  long long missing_free;  // xn-free monomials outside the ideal, degrees 0..d
};

// Candidates for new generators in one degree, with suffix sums of their
// cones for the capacity bound.
struct Frame {
  std::vector<int> candidates;
  std::vector<Coeffs> capacity;  // capacity[pos]: cones of candidates[pos..] plus later degrees
};

class Search {
public:
  Search(const Tables& t, std::uint64_t budget, std::atomic<std::uint64_t>& nodes)
      : t_(t), budget_(budget), nodes_(nodes) {}

  ~Search() { nodes_.fetch_add(local_, std::memory_order_relaxed); }

  // Runs every branch below `state`. States at `split_level` are handed to
  // `park` instead of being explored, when it is set.
  void explore(const LevelState& state, unsigned split_level = 0,
               std::vector<LevelState>* park = nullptr) {
    split_level_ = split_level;
    park_ = park;
    next_level(state);
  }

  std::vector<std::vector<Generator>>& found() { return found_; }

private:
  static bool all_zero(const Coeffs& c) {
    return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
  }

  // Every cone still to come has non-negative coordinates, a 1 in position
  // k >= 1, and a zeroth coordinate at most `spread` times its first one,
  // where spread = r - (current degree). So the gap must be non-negative,
  // cannot be a non-zero constant, and needs gap_0 <= spread * gap_1.
  static bool viable(const Coeffs& c, std::int64_t spread) {
    bool higher = false;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] < 0) return false;
      if (j > 0 && c[j] > 0) higher = true;
    }
    if (c.size() > 1 && c[0] > spread * c[1]) return false;
    return higher || c[0] == 0;
  }

  static bool within(const Coeffs& gap, const Coeffs& capacity) {
    for (std::size_t j = 0; j < gap.size(); ++j)
      if (gap[j] > capacity[j]) return false;
    return true;
  }

  void tick() {
    if (++local_ >= 4096) flush();
  }
  void flush() {
    auto total = nodes_.fetch_add(local_, std::memory_order_relaxed) + local_;
    local_ = 0;
    if (total > budget_) throw BudgetExceeded(budget_);
  }

  void next_level(const LevelState& state) {
    const unsigned d = state.degree;
    if (all_zero(state.gap)) {
      found_.push_back(state.gens);
      return;
    }
    if (d >= t_.r || !viable(state.gap, static_cast<std::int64_t>(t_.r - d - 1))) return;
    if (park_ && d == split_level_) {
      park_->push_back(state);
      return;
    }

    const Level& here = t_.levels[d];
    const Level& up = t_.levels[d + 1];
    std::vector<char> slice(up.monomials.size(), 0);
    for (std::size_t i = 0; i < here.monomials.size(); ++i)
      if (state.slice[i])
        for (int target : here.expansion[i]) slice[target] = 1;

    Frame frame;
    for (std::size_t i = 0; i < up.monomials.size(); ++i)
      if (up.last_free[i] && !slice[i]) frame.candidates.push_back(static_cast<int>(i));
    const auto count = frame.candidates.size();
    frame.capacity.assign(count + 1, t_.later_capacity[d + 1]);
    for (std::size_t pos = count; pos-- > 0;) {
      frame.capacity[pos] = frame.capacity[pos + 1];
      const Coeffs& c = t_.cone[d + 1][up.cone_dim[frame.candidates[pos]]];
      for (std::size_t j = 0; j < c.size(); ++j)
        frame.capacity[pos][j] = saturating_add(frame.capacity[pos][j], c[j]);
    }

    LevelState child{d + 1, std::move(slice), state.gap, state.gens, state.missing_free};
    choose_new(child, frame, 0);
  }

  // Decides candidates[pos..] in descending lex order, so every move target
  // of a candidate has been decided before the candidate itself.
  void choose_new(LevelState& s, const Frame& frame, std::size_t pos) {
    tick();
    if (all_zero(s.gap)) {
      found_.push_back(s.gens);
      return;
    }
    if (!within(s.gap, frame.capacity[pos])) return;
    if (pos == frame.candidates.size()) {
      finish_level(s);
      return;
    }
    const Level& L = t_.levels[s.degree];
    const int c = frame.candidates[pos];

    bool closed = std::all_of(L.moves[c].begin(), L.moves[c].end(),
                              [&](int target) { return s.slice[target] != 0; });
    if (closed) {
      const Coeffs& cone = t_.cone[s.degree][L.cone_dim[c]];
      for (std::size_t j = 0; j < cone.size(); ++j) s.gap[j] -= cone[j];
      if (viable(s.gap, static_cast<std::int64_t>(t_.r - s.degree))) {
        s.slice[c] = 1;
        s.gens.push_back({s.degree, c});
        choose_new(s, frame, pos + 1);
        s.gens.pop_back();
        s.slice[c] = 0;
      }
      for (std::size_t j = 0; j < cone.size(); ++j) s.gap[j] += cone[j];
    }
    choose_new(s, frame, pos + 1);
  }

  void finish_level(const LevelState& s) {
    if (s.degree >= t_.r) return;  // gap is non-zero here
    const Level& L = t_.levels[s.degree];
    long long inside_free = 0;
    for (std::size_t i = 0; i < L.monomials.size(); ++i)
      inside_free += (s.slice[i] && L.last_free[i]);
    const long long missing = s.missing_free + (L.last_free_count - inside_free);
    // Even with every xn-free monomial of higher degree thrown in, the
    // complement in degree r would stay too large.
    if (Integer(missing) > t_.target_at_r) return;
    LevelState next{s.degree, s.slice, s.gap, s.gens, missing};
    next_level(next);
  }

  const Tables& t_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& nodes_;
  std::uint64_t local_ = 0;
  unsigned split_level_ = 0;
  std::vector<LevelState>* park_ = nullptr;
  std::vector<std::vector<Generator>> found_;
};

MonomialIdeal build_ideal(const Tables& t, const std::vector<Generator>& gens) {
  std::vector<Monomial> monomials;
  monomials.reserve(gens.size());
  for (const auto& g : gens) monomials.push_back(t.levels[g.level].monomials[g.index]);
  return minimalize(monomials, t.n);
}

bool admissible_result(const MonomialIdeal& ideal, const HilbertPolynomial& p) {
  return !ideal.is_unit() && is_saturated_borel(ideal) && hilbert_polynomial(ideal) == p;
}

}  // namespace

void canonicalize(std::vector<MonomialIdeal>& ideals) {
  std::sort(ideals.begin(), ideals.end(), canonical_less);
  ideals.erase(std::unique(ideals.begin(), ideals.end()), ideals.end());
}

EnumerationResult enumerate_saturated_borel(std::size_t n, const HilbertPolynomial& p,
                                            const EnumerationOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto r = static_cast<unsigned>(gotzmann_number(p));
  const Tables tables(n, p, r);

  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::vector<Generator>> raw;

  LevelState root{0, std::vector<char>(1, 0), tables.initial, {}, 0};
  // Degree 0 contributes the constant 1 to the missing count.
  root.missing_free = 1;

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  if (threads == 0) threads = 1;

  if (threads == 1 || r < 3) {
    Search search(tables, options.node_budget, nodes);
    search.explore(root);
    raw = std::move(search.found());
  } else {
    // Expand sequentially down to a split degree, then fan the parked
    // states out over worker threads.
    const unsigned split = std::min(r - 1, 3u);
    std::vector<LevelState> parked;
    {
      Search search(tables, options.node_budget, nodes);
      search.explore(root, split, &parked);
      raw = std::move(search.found());
    }
    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    std::exception_ptr failure;
    auto worker = [&] {
      std::vector<std::vector<Generator>> local;
      try {
        Search search(tables, options.node_budget, nodes);
        for (std::size_t i; (i = next.fetch_add(1)) < parked.size();) {
          search.explore(parked[i]);
          for (auto& f : search.found()) local.push_back(std::move(f));
          search.found().clear();
        }
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!failure) failure = std::current_exception();
        next = parked.size();
      }
      std::lock_guard lock(mutex);
      for (auto& f : local) raw.push_back(std::move(f));
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  EnumerationResult result;
  for (const auto& gens : raw) {
    auto ideal = build_ideal(tables, gens);
    // Re-checked from scratch so that a pruning bug cannot produce a wrong
    // positive.
    if (admissible_result(ideal, p)) result.ideals.push_back(std::move(ideal));
  }
  canonicalize(result.ideals);
  result.nodes = nodes.load();
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<MonomialIdeal> brute_force_oracle(std::size_t n, const HilbertPolynomial& p,
                                              std::size_t cap) {
  const auto r = static_cast<unsigned>(gotzmann_number(p));
  const auto monomials = monomials_of_degree(n, r);
  if (monomials.size() > cap)
    throw DomainError("brute-force oracle: " + std::to_string(monomials.size()) +
                      " monomials of degree " + std::to_string(r) + " exceed the cap of " +
                      std::to_string(cap));
  const Integer value = p.at(r);
  if (value < 0 || value > Integer(monomials.size())) return {};
  const auto size = monomials.size() - static_cast<std::size_t>(value);

  std::unordered_map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);

  std::vector<char> chosen(monomials.size(), 0);
  std::vector<MonomialIdeal> out;

  // Order ideals of the move poset: descending lex is a linear extension.
  auto rec = [&](auto&& self, std::size_t pos, std::size_t count) -> void {
    if (count == size) {
      std::vector<Monomial> slice;
      for (std::size_t i = 0; i < monomials.size(); ++i)
        if (chosen[i]) slice.push_back(monomials[i]);
      auto ideal = saturate_last(minimalize(slice, n));
      if (admissible_result(ideal, p)) out.push_back(std::move(ideal));
      return;
    }
    if (pos == monomials.size() || count + (monomials.size() - pos) < size) return;
    const Monomial& m = monomials[pos];
    bool closed = true;
    for (std::size_t j = 1; j <= n && closed; ++j)
      if (m[j] > 0) closed = chosen[index.at(elementary_move(m, j))] != 0;
    if (closed) {
      chosen[pos] = 1;
      self(self, pos + 1, count + 1);
      chosen[pos] = 0;
    }
    self(self, pos + 1, count);
  };
  rec(rec, 0, 0);

  canonicalize(out);
  return out;
}

}  // namespace hilbrad
