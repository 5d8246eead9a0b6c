#pragma once

// Sorted sparse term sequences and a geobucket accumulator over them.  Shared by
// polynomials (terms keyed by monomial) and free-module vectors (keyed by
// monomial and component).

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace sing {

/// Merges two sequences sorted descending under `cmp`, adding coefficients of equal keys.
template <class TermT, class Field, class Cmp>
std::vector<TermT> merge_add(const Field& field, const Cmp& cmp, const TermT* a, std::size_t na, const TermT* b,
                             std::size_t nb) {
  std::vector<TermT> out;
  out.reserve(na + nb);
  std::size_t i = 0, j = 0;
  while (i < na && j < nb) {
    const int c = cmp(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      auto s = field.add(a[i].c, b[j].c);
      if (!field.is_zero(s)) {
        out.push_back(a[i]);
        out.back().c = std::move(s);
      }
      ++i;
      ++j;
    }
  }
  for (; i < na; ++i) out.push_back(a[i]);
  for (; j < nb; ++j) out.push_back(b[j]);
  return out;
}

/// Geometric bucket sum: amortised O(n log n) accumulation with cheap access to the
/// largest term.  Terms must carry a coefficient member `c`.
template <class TermT, class Field, class Cmp>
class Geobucket {
 public:
  Geobucket(const Field& field, Cmp cmp) : field_(&field), cmp_(std::move(cmp)) {}

  void add(std::vector<TermT> terms) {
    if (terms.empty()) return;
    std::size_t level = level_for(terms.size());
    ensure(level);
    Bucket incoming{std::move(terms), 0};
    while (true) {
      Bucket& b = buckets_[level];
      if (b.size() == 0) {
        b = std::move(incoming);
      } else {
        b = Bucket{merge_add(*field_, cmp_, b.v.data() + b.pos, b.size(), incoming.v.data() + incoming.pos,
                             incoming.size()),
                   0};
      }
      if (b.size() <= capacity(level)) break;
      incoming = std::move(b);
      b = Bucket{};
      ++level;
      ensure(level);
    }
  }

  /// Removes and returns the largest surviving term, or nullopt when the sum is zero.
  std::optional<TermT> pop_lead() {
    while (true) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].size() == 0) continue;
        if (best < 0 || cmp_(buckets_[i].head(), buckets_[static_cast<std::size_t>(best)].head()) > 0) {
          best = static_cast<int>(i);
        }
      }
      if (best < 0) return std::nullopt;
      Bucket& lead_bucket = buckets_[static_cast<std::size_t>(best)];
      TermT t = lead_bucket.head();
      ++lead_bucket.pos;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (static_cast<int>(i) == best || buckets_[i].size() == 0) continue;
        if (cmp_(buckets_[i].head(), t) == 0) {
          t.c = field_->add(t.c, buckets_[i].head().c);
          ++buckets_[i].pos;
        }
      }
      if (!field_->is_zero(t.c)) return t;
    }
  }

  /// Collapses everything that is left into one sorted sequence.
  std::vector<TermT> flatten() {
    std::vector<TermT> acc;
    for (auto& b : buckets_) {
      if (b.size() == 0) continue;
      acc = merge_add(*field_, cmp_, acc.data(), acc.size(), b.v.data() + b.pos, b.size());
      b = Bucket{};
    }
    return acc;
  }

  bool empty() const {
    for (const auto& b : buckets_) {
      if (b.size() != 0) return false;
    }
    return true;
  }

 private:
  struct Bucket {
    std::vector<TermT> v;
    std::size_t pos = 0;
    std::size_t size() const { return v.size() - pos; }
    const TermT& head() const { return v[pos]; }
  };

  static std::size_t capacity(std::size_t level) { return std::size_t{8} << (2 * level); }
  static std::size_t level_for(std::size_t n) {
    std::size_t level = 0;
    while (capacity(level) < n) ++level;
    return level;
  }
  void ensure(std::size_t level) {
    if (buckets_.size() <= level) buckets_.resize(level + 1);
  }

  const Field* field_;
  Cmp cmp_;
  std::vector<Bucket> buckets_;
};

}  // namespace sing
