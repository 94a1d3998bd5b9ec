#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "caporaso/surface.hpp"
#include "ring/ylaurent.hpp"

namespace refsev {

class CacheStore;

// Evaluation mode for recursion values: symbolic in y, or specialized to
// y = 1 or y = -1 (pure integer arithmetic).
enum class YMode { kSymbolic, kOne, kMinusOne };
std::string to_string(YMode mode);
// Accepts "sym", "1" and "-1".
std::optional<YMode> parse_ymode(const std::string& name);

// Tangency sequence (a_1, a_2, ...); element i-1 holds the count of order i.
using TangencySeq = std::vector<long>;

long seq_size(const TangencySeq& a);     // |a|
long seq_weight(const TangencySeq& a);   // I a
TangencySeq trimmed(TangencySeq a);      // drops trailing zeros

// Memoized refined Caporaso-Harris recursion. Thread-safe; several threads
// may query one table concurrently.
class CHTable {
 public:
  explicit CHTable(CacheStore* store = nullptr);
  ~CHTable();
  CHTable(const CHTable&) = delete;
  CHTable& operator=(const CHTable&) = delete;

  // N^{(S,L),delta}(alpha, beta). Requires I alpha + I beta = HL. In the
  // specialized modes the result is a constant.
  YLaurent relative_degree(const Polygon& p, int delta, const TangencySeq& alpha,
                           const TangencySeq& beta, YMode mode = YMode::kSymbolic);

  // N^{(S,L),delta}(y) = N(0, (HL)).
  YLaurent severi_degree(const SurfaceBundle& s, int delta,
                         YMode mode = YMode::kSymbolic);
  YLaurent severi_degree(const Polygon& p, int delta, YMode mode = YMode::kSymbolic);

  // Integer fast paths.
  Integer severi_number(const Polygon& p, int delta);
  Integer welschinger_number(const Polygon& p, int delta);

  std::size_t memo_size() const;
  void clear_memo();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Process-wide table used by the verification layer.
CHTable& shared_ch_table();

}  // namespace refsev
