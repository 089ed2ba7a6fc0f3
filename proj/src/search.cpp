#include "orientable/search.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "orientable/errors.hpp"
#include "orientable/verify.hpp"

namespace orientable {
namespace {

constexpr std::size_t kDenseLimit = 26;

constexpr std::array<std::uint8_t, 256> make_byte_reversal() {
  std::array<std::uint8_t, 256> t{};
  for (unsigned v = 0; v < 256; ++v) {
    unsigned r = 0;
    for (unsigned b = 0; b < 8; ++b) r |= ((v >> b) & 1U) << (7 - b);
    t[v] = static_cast<std::uint8_t>(r);
  }
  return t;
}

constexpr auto kByteReversal = make_byte_reversal();

std::uint64_t reverse_window(std::uint64_t w, std::size_t n) {
  std::uint64_t r = 0;
  for (int k = 0; k < 8; ++k, w >>= 8) r = (r << 8) | kByteReversal[w & 0xFF];
  return r >> (64 - n);
}

// Windows taken so far, stored together with their reversals. Each taken
// forward/reverse pair counts as one used class.
class WindowTable {
 public:
  explicit WindowTable(std::size_t n) : n_(n), dense_(n <= kDenseLimit) {
    if (dense_) bits_.assign(((std::size_t{1} << n) + 63) / 64, 0);
  }

  std::size_t order() const noexcept { return n_; }
  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t reverse(std::uint64_t w) const noexcept { return reverse_window(w, n_); }

  bool free(std::uint64_t w) const {
    const std::uint64_t r = reverse(w);
    return r != w && !contains(w);
  }
  void take(std::uint64_t w) {
    set(w, true);
    set(reverse(w), true);
    ++used_;
  }
  void release(std::uint64_t w) {
    set(w, false);
    set(reverse(w), false);
    --used_;
  }

 private:
  bool contains(std::uint64_t w) const {
    if (dense_) return (bits_[w >> 6] >> (w & 63)) & 1U;
    return sparse_.count(w) != 0;
  }
  void set(std::uint64_t w, bool on) {
    if (dense_) {
      if (on) {
        bits_[w >> 6] |= std::uint64_t{1} << (w & 63);
      } else {
        bits_[w >> 6] &= ~(std::uint64_t{1} << (w & 63));
      }
    } else if (on) {
      sparse_.insert(w);
    } else {
      sparse_.erase(w);
    }
  }

  std::size_t n_;
  bool dense_;
  std::vector<std::uint64_t> bits_;
  std::unordered_set<std::uint64_t> sparse_;
  std::uint64_t used_ = 0;
};

std::uint64_t low_mask(std::size_t k) {
  return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
}

// Number of windows w of length n with w != reverse(w), halved.
std::uint64_t reversal_classes(std::size_t n) {
  return ((std::uint64_t{1} << n) - (std::uint64_t{1} << ((n + 1) / 2))) / 2;
}

std::uint64_t window_at(const std::vector<Bit>& seq, std::size_t start, std::size_t n) {
  const std::size_t m = seq.size();
  std::uint64_t w = 0;
  for (std::size_t k = 0; k < n; ++k) w = (w << 1) | seq[(start + k) % m];
  return w;
}

// Shared expansion counter for one top-level call.
struct Budget {
  std::uint64_t limit;
  std::uint64_t spent = 0;
  bool exhausted = false;
};

// Depth-first appending of bits after a fixed tail window. Every node whose
// path satisfies `accept` is a candidate; the longest one (first found on
// ties, 0 explored before 1) is kept in `best`.
class Extender {
 public:
  Extender(WindowTable& table, Budget& budget, std::uint64_t capacity, std::size_t reserve)
      : table_(table), budget_(budget), capacity_(capacity), reserve_(reserve),
        mask_(low_mask(table.order())) {}

  // Candidates must be longer than `floor` bits.
  template <class Allowed, class Accept>
  bool run(std::uint64_t tail, std::size_t floor, bool first_only, std::uint64_t cap,
           Allowed&& allowed, Accept&& accept) {
    best_.clear();
    found_ = false;
    best_len_ = floor;
    path_.clear();
    const std::uint64_t local_limit =
        cap == 0 ? budget_.limit : std::min(budget_.limit, budget_.spent + cap);

    struct Frame {
      std::uint64_t tail;
      int next;
    };
    std::vector<Frame> stack{{tail, 0}};
    if (!can_improve()) stack.back().next = 2;
    bool stop = false;
    while (!stack.empty() && !stop) {
      Frame& f = stack.back();
      if (f.next == 2) {
        if (stack.size() > 1) {
          table_.release(f.tail);
          path_.pop_back();
        }
        stack.pop_back();
        continue;
      }
      const auto b = static_cast<Bit>(f.next++);
      if (budget_.spent >= local_limit) {
        if (budget_.spent >= budget_.limit) budget_.exhausted = true;
        break;
      }
      ++budget_.spent;
      const std::uint64_t w = ((f.tail << 1) | b) & mask_;
      if (!allowed(w) || !table_.free(w)) continue;
      table_.take(w);
      path_.push_back(b);
      stack.push_back({w, 0});
      if (path_.size() > best_len_ && accept(w, path_)) {
        best_ = path_;
        best_len_ = path_.size();
        found_ = true;
        if (first_only) stop = true;
      }
      if (!can_improve()) stack.back().next = 2;
    }
    while (stack.size() > 1) {
      table_.release(stack.back().tail);
      stack.pop_back();
    }
    path_.clear();
    return found_;
  }

  const std::vector<Bit>& best() const noexcept { return best_; }

 private:
  bool can_improve() const {
    const std::uint64_t free_classes = capacity_ - std::min(capacity_, table_.used());
    const std::uint64_t reach = path_.size() + free_classes;
    return reach >= reserve_ && reach - reserve_ > best_len_;
  }

  WindowTable& table_;
  Budget& budget_;
  std::uint64_t capacity_;
  std::size_t reserve_;
  std::uint64_t mask_;
  std::vector<Bit> path_;
  std::vector<Bit> best_;
  std::size_t best_len_ = 0;
  bool found_ = false;
};

// Tentatively takes the n-1 windows that wrap from the end of s.x back into
// s. `tail` is the last window of s.x and `head` the first window of s.
bool seam_fits(WindowTable& table, std::uint64_t tail, std::uint64_t head) {
  const std::size_t n = table.order();
  std::array<std::uint64_t, kMaxSearchOrder> taken{};
  std::size_t count = 0;
  bool ok = true;
  for (std::size_t k = n - 1; k >= 1; --k) {
    const std::uint64_t w = ((tail & low_mask(k)) << (n - k)) | (head >> k);
    if (!table.free(w)) {
      ok = false;
      break;
    }
    table.take(w);
    taken[count++] = w;
  }
  while (count > 0) table.release(taken[--count]);
  return ok;
}

bool passes_weight_filter(const std::vector<Bit>& seq, std::size_t n) {
  std::size_t weight = 0;
  for (Bit b : seq) weight += b;
  if (weight % 2 == 0) return false;
  if (n <= 4) return true;
  const std::size_t run = n - 4;
  const std::size_t m = seq.size();
  std::size_t hits = 0;
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t k = 0;
    while (k < run && seq[(i + k) % m] == 0) ++k;
    if (k == run && ++hits > 1) return false;
  }
  return true;
}

void require_order(std::size_t n) {
  if (n < 2 || n > kMaxSearchOrder) {
    throw UnsupportedSize("search supports orders 2.." + std::to_string(kMaxSearchOrder));
  }
}

void require_orientable(const CyclicSequence& seq, std::size_t n) {
  if (seq.size() < n || !is_orientable(seq, n)) {
    throw std::invalid_argument("input is not an orientable sequence of order " + std::to_string(n));
  }
}

// Cyclic sequence under extension, with every cyclic window in the table.
class CyclicState {
 public:
  CyclicState(std::vector<Bit> seq, std::size_t n, Budget& budget, const SearchOptions& options)
      : seq_(std::move(seq)), n_(n), table_(n), budget_(budget), options_(options),
        extender_(table_, budget_, reversal_classes(n), n - 1) {
    for (std::size_t i = 0; i < seq_.size(); ++i) table_.take(window_at(seq_, i, n_));
  }

  const std::vector<Bit>& sequence() const noexcept { return seq_; }

  // Searches for an insertion before position `cut`; returns it (empty when
  // none). The table is left unchanged.
  std::vector<Bit> probe(std::size_t cut, bool first_only) {
    const std::size_t m = seq_.size();
    release_spanning(cut);
    const std::uint64_t tail = window_at(seq_, (cut + m - n_) % m, n_);
    const std::uint64_t head = window_at(seq_, cut, n_);
    const auto accept = [&](std::uint64_t last, const std::vector<Bit>& path) {
      if (!seam_fits(table_, last, head)) return false;
      return !options_.odd_weight_filter || passes_weight_filter(spliced(cut, path), n_);
    };
    const bool found =
        extender_.run(tail, 0, first_only, options_.dfs_budget,
                      [](std::uint64_t) { return true; }, accept);
    take_spanning(cut);
    return found ? extender_.best() : std::vector<Bit>{};
  }

  void apply(std::size_t cut, const std::vector<Bit>& insertion) {
    release_spanning(cut);
    const std::size_t m = seq_.size();
    std::uint64_t w = window_at(seq_, (cut + m - n_) % m, n_);
    const std::uint64_t mask = low_mask(n_);
    for (Bit b : insertion) {
      w = ((w << 1) | b) & mask;
      table_.take(w);
    }
    seq_ = spliced(cut, insertion);
    for (std::size_t j = 1; j < n_; ++j) {
      table_.take(window_at(seq_, (cut + insertion.size() + seq_.size() - j) % seq_.size(), n_));
    }
  }

 private:
  // Windows starting at cut-n+1 .. cut-1 contain both seq[cut-1] and seq[cut].
  void release_spanning(std::size_t cut) {
    const std::size_t m = seq_.size();
    for (std::size_t j = 1; j < n_; ++j) table_.release(window_at(seq_, (cut + m - j) % m, n_));
  }
  void take_spanning(std::size_t cut) {
    const std::size_t m = seq_.size();
    for (std::size_t j = 1; j < n_; ++j) table_.take(window_at(seq_, (cut + m - j) % m, n_));
  }

  std::vector<Bit> spliced(std::size_t cut, const std::vector<Bit>& insertion) const {
    std::vector<Bit> out;
    out.reserve(seq_.size() + insertion.size());
    out.insert(out.end(), seq_.begin(), seq_.begin() + static_cast<std::ptrdiff_t>(cut));
    out.insert(out.end(), insertion.begin(), insertion.end());
    out.insert(out.end(), seq_.begin() + static_cast<std::ptrdiff_t>(cut), seq_.end());
    return out;
  }

  std::vector<Bit> seq_;
  std::size_t n_;
  WindowTable table_;
  Budget& budget_;
  const SearchOptions& options_;
  Extender extender_;
};

// Extends an acyclic sequence at its right end as far as possible.
std::vector<Bit> extend_right(std::vector<Bit> seq, std::size_t n, Budget& budget,
                              const SearchOptions& options, bool& grew) {
  WindowTable table(n);
  for (std::size_t i = 0; i + n <= seq.size(); ++i) table.take(window_at(seq, i, n));
  Extender extender(table, budget, reversal_classes(n), 0);
  const std::uint64_t tail = window_at(seq, seq.size() - n, n);
  grew = extender.run(tail, 0, false, options.dfs_budget, [](std::uint64_t) { return true; },
                      [](std::uint64_t, const std::vector<Bit>&) { return true; });
  if (grew) seq.insert(seq.end(), extender.best().begin(), extender.best().end());
  return seq;
}

SearchResult extend_aos_impl(const CyclicSequence& aos, std::size_t n, Budget& budget,
                             const SearchOptions& options) {
  std::vector<Bit> seq(aos.bits().begin(), aos.bits().end());
  SearchResult result{CyclicSequence({}, SequenceMode::acyclic), 0, 0, false};
  // Alternate ends until neither grows; the left end is handled by reversal.
  bool reversed = false;
  int idle = 0;
  while (idle < 2 && !budget.exhausted) {
    bool grew = false;
    seq = extend_right(std::move(seq), n, budget, options, grew);
    if (grew) {
      ++result.extensions;
      idle = 0;
    } else {
      ++idle;
    }
    std::reverse(seq.begin(), seq.end());
    reversed = !reversed;
  }
  if (reversed) std::reverse(seq.begin(), seq.end());
  result.sequence = CyclicSequence(std::move(seq), SequenceMode::acyclic);
  result.budget_exhausted = budget.exhausted;
  return result;
}

}  // namespace

SearchResult extend_cyclic(const CyclicSequence& os, std::size_t n, const SearchOptions& options) {
  require_order(n);
  if (options.budget == 0) throw std::invalid_argument("search budget must be positive");
  if (!os.cyclic()) throw std::invalid_argument("extend_cyclic needs a cyclic sequence");
  require_orientable(os, n);

  Budget budget{options.budget};
  CyclicState state(std::vector<Bit>(os.bits().begin(), os.bits().end()), n, budget, options);
  SearchResult result{os, 0, 0, false};

  if (options.heuristic == Heuristic::b) {
    while (!budget.exhausted) {
      std::size_t best_cut = 0;
      std::vector<Bit> best;
      for (std::size_t cut = 0; cut < state.sequence().size() && !budget.exhausted; ++cut) {
        auto found = state.probe(cut, false);
        if (found.size() > best.size()) {
          best = std::move(found);
          best_cut = cut;
        }
      }
      if (best.empty()) break;
      state.apply(best_cut, best);
      ++result.extensions;
    }
  } else {
    const bool first_only = options.heuristic == Heuristic::c;
    std::size_t cut = 0;
    std::size_t idle = 0;
    while (idle < state.sequence().size() && !budget.exhausted) {
      const auto found = state.probe(cut, first_only);
      if (found.empty()) {
        ++idle;
        cut = (cut + 1) % state.sequence().size();
        continue;
      }
      state.apply(cut, found);
      ++result.extensions;
      idle = 0;
      cut = (cut + found.size() + 1) % state.sequence().size();
    }
  }

  result.sequence = CyclicSequence(state.sequence());
  result.expansions = budget.spent;
  result.budget_exhausted = budget.exhausted;
  return result;
}

CyclicSequence exhaustive_max(std::size_t n) {
  if (n < 2 || n > kMaxExhaustiveOrder) {
    throw UnsupportedSize("exhaustive search supports orders 2.." +
                          std::to_string(kMaxExhaustiveOrder));
  }
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t mask = size - 1;
  // Least member of {w, reverse, complement, reverse complement}.
  std::vector<std::uint64_t> class_min(size);
  for (std::uint64_t w = 0; w < size; ++w) {
    const std::uint64_t r = reverse_window(w, n);
    class_min[w] = std::min({w, r, w ^ mask, r ^ mask});
  }

  std::vector<Bit> best_seq;
  std::size_t best_len = 0;
  Budget budget{~std::uint64_t{0}};
  for (std::uint64_t w0 = 0; w0 < size; ++w0) {
    if (class_min[w0] != w0 || reverse_window(w0, n) == w0) continue;
    std::uint64_t capacity = 0;
    for (std::uint64_t w = 0; w < size; ++w) {
      const std::uint64_t r = reverse_window(w, n);
      if (w < r && class_min[w] >= w0) ++capacity;
    }
    if (capacity <= best_len) break;

    WindowTable table(n);
    table.take(w0);
    if (best_len < n && seam_fits(table, w0, w0)) {
      best_len = n;
      best_seq.clear();
      for (std::size_t k = n; k-- > 0;) best_seq.push_back(static_cast<Bit>((w0 >> k) & 1U));
    }
    Extender extender(table, budget, capacity, n - 1);
    const std::size_t floor = best_len > n ? best_len - n : 0;
    const bool found = extender.run(
        w0, floor, false, 0, [&](std::uint64_t w) { return class_min[w] >= w0; },
        [&](std::uint64_t last, const std::vector<Bit>&) { return seam_fits(table, last, w0); });
    if (found) {
      best_seq.clear();
      for (std::size_t k = n; k-- > 0;) best_seq.push_back(static_cast<Bit>((w0 >> k) & 1U));
      best_seq.insert(best_seq.end(), extender.best().begin(), extender.best().end());
      best_len = best_seq.size();
    }
  }
  return CyclicSequence(std::move(best_seq));
}

CyclicSequence make_aos(const CyclicSequence& os, std::size_t n) {
  if (!os.cyclic()) throw std::invalid_argument("make_aos needs a cyclic sequence");
  if (n < 2) throw std::invalid_argument("order must be at least 2");
  require_orientable(os, n);
  std::vector<Bit> bits(os.bits().begin(), os.bits().end());
  bits.insert(bits.end(), os.bits().begin(), os.bits().begin() + static_cast<std::ptrdiff_t>(n - 1));
  return CyclicSequence(std::move(bits), SequenceMode::acyclic);
}

SearchResult extend_aos(const CyclicSequence& aos, std::size_t n, const SearchOptions& options) {
  require_order(n);
  if (options.budget == 0) throw std::invalid_argument("search budget must be positive");
  if (aos.cyclic()) throw std::invalid_argument("extend_aos needs an acyclic sequence");
  require_orientable(aos, n);
  Budget budget{options.budget};
  auto result = extend_aos_impl(aos, n, budget, options);
  result.expansions = budget.spent;
  return result;
}

SearchResult search_aos(const CyclicSequence& os, std::size_t n, const SearchOptions& options) {
  require_order(n);
  if (options.budget == 0) throw std::invalid_argument("search budget must be positive");
  require_orientable(os, n);
  Budget budget{options.budget};
  const std::vector<Bit> bits(os.bits().begin(), os.bits().end());
  SearchResult best{make_aos(os, n), 0, 0, false};
  for (std::size_t r = 0; r < bits.size() && !budget.exhausted; ++r) {
    std::vector<Bit> rotated(bits.begin() + static_cast<std::ptrdiff_t>(r), bits.end());
    rotated.insert(rotated.end(), bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(r));
    auto candidate =
        extend_aos_impl(CyclicSequence(std::move(rotated), SequenceMode::acyclic), n, budget, options);
    if (candidate.sequence.size() > best.sequence.size()) best = std::move(candidate);
  }
  best.expansions = budget.spent;
  best.budget_exhausted = budget.exhausted;
  return best;
}

}  // namespace orientable
