#include "caporaso/ch_recursion.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

#include "io/cache_store.hpp"
#include "io/json_io.hpp"
#include "ring/error.hpp"
#include "ring/linalg.hpp"

namespace refsev {

std::string to_string(YMode mode) {
  switch (mode) {
    case YMode::kSymbolic:
      return "sym";
    case YMode::kOne:
      return "1";
    case YMode::kMinusOne:
      return "-1";
  }
  return "?";
}

std::optional<YMode> parse_ymode(const std::string& name) {
  for (YMode m : {YMode::kSymbolic, YMode::kOne, YMode::kMinusOne}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

long seq_size(const TangencySeq& a) {
  long s = 0;
  for (long x : a) s += x;
  return s;
}

long seq_weight(const TangencySeq& a) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(i + 1) * a[i];
  return s;
}

TangencySeq trimmed(TangencySeq a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

namespace {

struct Key {
  long c, m, d;
  int delta;
  TangencySeq alpha, beta;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = 1469598103934665603ULL;
    auto mix = [&h](long v) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    mix(k.c);
    mix(k.m);
    mix(k.d);
    mix(k.delta);
    mix(static_cast<long>(k.alpha.size()));
    for (long x : k.alpha) mix(x);
    mix(-1);
    for (long x : k.beta) mix(x);
    return h;
  }
};

struct SymbolicTraits {
  using Value = YLaurent;
  static Value qnum_pow(long k, long e) { return qnum(static_cast<int>(k)).pow(static_cast<unsigned>(e)); }
  static Value scale(const Value& v, const Integer& n) { return v * Rational(n); }
  static YLaurent to_laurent(const Value& v) { return v; }
};

struct AtOneTraits {
  using Value = Integer;
  static Value qnum_pow(long k, long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(e));
    return r;
  }
  static Value scale(const Value& v, const Integer& n) { return v * n; }
  static YLaurent to_laurent(const Value& v) { return YLaurent(Rational(v)); }
};

struct AtMinusOneTraits {
  using Value = Integer;
  static Value qnum_pow(long k, long e) {
    if (e == 0) return 1;
    const long q = qnum_at_minus_one(static_cast<int>(k));
    if (q == 0) return 0;
    return (q < 0 && e % 2 == 1) ? -1 : 1;
  }
  static Value scale(const Value& v, const Integer& n) { return v * n; }
  static YLaurent to_laurent(const Value& v) { return YLaurent(Rational(v)); }
};

class CoreBase {
 public:
  virtual ~CoreBase() = default;
  virtual YLaurent value(const Key& k) = 0;
  virtual std::size_t size() const = 0;
  virtual void clear() = 0;
};

template <class Tr>
class Core : public CoreBase {
 public:
  using T = typename Tr::Value;

  YLaurent value(const Key& k) override { return Tr::to_laurent(get(k)); }

  std::size_t size() const override {
    std::shared_lock lock(mu_);
    return memo_.size();
  }

  void clear() override {
    std::unique_lock lock(mu_);
    memo_.clear();
  }

  T get(const Key& k) {
    {
      std::shared_lock lock(mu_);
      auto it = memo_.find(k);
      if (it != memo_.end()) return it->second;
    }
    T v = compute(k);
    std::unique_lock lock(mu_);
    memo_.emplace(k, v);
    return v;
  }

 private:
  T compute(const Key& k) {
    const Polygon p{k.c, k.m, k.d};
    const long hl = p.bottom_length();
    const long gamma = p.dim() - hl + seq_size(k.beta) - k.delta;
    if (gamma < 0) return T(0);
    if (gamma == 0) {
      const bool base = k.d == 0 && k.delta == 0 && k.beta.empty() &&
                        k.alpha == trimmed(TangencySeq{k.c});
      return base ? T(1) : T(0);
    }
    T total(0);
    // Move one arbitrary contact of order i into the fixed contacts.
    for (std::size_t i = 0; i < k.beta.size(); ++i) {
      if (k.beta[i] == 0) continue;
      Key child = k;
      if (child.alpha.size() <= i) child.alpha.resize(i + 1, 0);
      ++child.alpha[i];
      --child.beta[i];
      child.beta = trimmed(std::move(child.beta));
      T v = get(child);
      if (v == 0) continue;
      total += Tr::qnum_pow(static_cast<long>(i + 1), 1) * v;
    }
    if (k.d >= 1) total += split_off_h(k, hl);
    return total;
  }

  // Second sum: curves containing H, with L replaced by L - H.
  T split_off_h(const Key& k, long hl) {
    T total(0);
    const long slack0 = k.delta - seq_weight(k.beta);
    if (slack0 < 0) return total;
    TangencySeq alpha_p(k.alpha.size(), 0);
    auto each_alpha = [&](auto&& self, std::size_t i, long weight, const Integer& binom) -> void {
      if (i == k.alpha.size()) {
        const long slack = slack0 - weight;
        const long rest = hl - k.m - weight - seq_weight(k.beta);
        if (rest < 0) return;
        total += enumerate_b(k, alpha_p, binom, slack, rest);
        return;
      }
      for (long a = 0; a <= k.alpha[i] && weight + static_cast<long>(i + 1) * a <= slack0; ++a) {
        alpha_p[i] = a;
        self(self, i + 1, weight + static_cast<long>(i + 1) * a, binom * binomial(k.alpha[i], a));
      }
      alpha_p[i] = 0;
    };
    each_alpha(each_alpha, 0, 0, Integer(1));
    return total;
  }

  // b = beta' - beta with I b = rest and sum (i-1) b_i <= slack.
  T enumerate_b(const Key& k, const TangencySeq& alpha_p, const Integer& binom_alpha,
                long slack, long rest) {
    T total(0);
    const long top = std::min(rest, slack + 1);
    std::vector<long> b(static_cast<std::size_t>(std::max(top, 1L)), 0);
    auto rec = [&](auto&& self, long i, long used_slack, long used_weight) -> void {
      if (i > top || i < 2) {
        // Assign the remaining weight to order-1 contacts.
        b[0] = rest - used_weight;
        Key child{k.c, k.m, k.d - 1, static_cast<int>(slack - used_slack), trimmed(alpha_p), {}};
        TangencySeq beta_p = k.beta;
        if (beta_p.size() < b.size()) beta_p.resize(b.size(), 0);
        Integer coeff = binom_alpha;
        T qfactor(1);
        for (std::size_t j = 0; j < b.size(); ++j) {
          if (b[j] == 0) continue;
          const long old = j < k.beta.size() ? k.beta[j] : 0;
          beta_p[j] += b[j];
          coeff *= binomial(old + b[j], old);
          if (j > 0) qfactor *= Tr::qnum_pow(static_cast<long>(j + 1), b[j]);
        }
        if (qfactor == 0) return;
        child.beta = trimmed(std::move(beta_p));
        T v = get(child);
        if (v == 0) return;
        total += Tr::scale(qfactor * v, coeff);
        return;
      }
      for (long n = 0; used_slack + (i - 1) * n <= slack && used_weight + i * n <= rest; ++n) {
        b[static_cast<std::size_t>(i - 1)] = n;
        self(self, i + 1, used_slack + (i - 1) * n, used_weight + i * n);
      }
      b[static_cast<std::size_t>(i - 1)] = 0;
    };
    if (top < 2) {
      rec(rec, top + 1, 0, 0);
    } else {
      rec(rec, 2, 0, 0);
    }
    return total;
  }

  mutable std::shared_mutex mu_;
  std::unordered_map<Key, T, KeyHash> memo_;
};

std::string cache_key(const Polygon& p, int delta, const TangencySeq& a,
                      const TangencySeq& b, YMode mode) {
  std::ostringstream os;
  os << "y=" << to_string(mode) << ";P=" << p.c << "," << p.m << "," << p.d
     << ";delta=" << delta << ";a=";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ";b=";
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  return os.str();
}

}  // namespace

struct CHTable::Impl {
  CacheStore* store = nullptr;
  Core<SymbolicTraits> symbolic;
  Core<AtOneTraits> at_one;
  Core<AtMinusOneTraits> at_minus_one;

  CoreBase& core(YMode mode) {
    switch (mode) {
      case YMode::kSymbolic:
        return symbolic;
      case YMode::kOne:
        return at_one;
      case YMode::kMinusOne:
        return at_minus_one;
    }
    return symbolic;
  }
};

CHTable::CHTable(CacheStore* store) : impl_(std::make_unique<Impl>()) {
  impl_->store = store;
}

CHTable::~CHTable() = default;

YLaurent CHTable::relative_degree(const Polygon& p, int delta, const TangencySeq& alpha,
                                  const TangencySeq& beta, YMode mode) {
  if (p.c < 0 || p.m < 0 || p.d < 0) {
    fail(ErrorCode::kInvalidArgument, "polygon parameters must be >= 0");
  }
  if (delta < 0) fail(ErrorCode::kInvalidArgument, "delta must be >= 0");
  for (long x : alpha) {
    if (x < 0) fail(ErrorCode::kInvalidArgument, "negative tangency entry");
  }
  for (long x : beta) {
    if (x < 0) fail(ErrorCode::kInvalidArgument, "negative tangency entry");
  }
  if (seq_weight(alpha) + seq_weight(beta) != p.bottom_length()) {
    fail(ErrorCode::kInvalidArgument,
         "I alpha + I beta must equal HL = " + std::to_string(p.bottom_length()));
  }
  Key k{p.c, p.m, p.d, delta, trimmed(alpha), trimmed(beta)};
  std::string skey;
  if (impl_->store != nullptr) {
    skey = cache_key(p, delta, k.alpha, k.beta, mode);
    if (auto hit = impl_->store->get(skey)) return laurent_from_json(*hit);
  }
  YLaurent v = impl_->core(mode).value(k);
  if (impl_->store != nullptr) impl_->store->put(skey, laurent_to_json(v));
  return v;
}

YLaurent CHTable::severi_degree(const SurfaceBundle& s, int delta, YMode mode) {
  return severi_degree(s.polygon(), delta, mode);
}

YLaurent CHTable::severi_degree(const Polygon& p, int delta, YMode mode) {
  TangencySeq beta;
  if (p.bottom_length() > 0) beta.push_back(p.bottom_length());
  return relative_degree(p, delta, {}, beta, mode);
}

Integer CHTable::severi_number(const Polygon& p, int delta) {
  return severi_degree(p, delta, YMode::kOne).coeff(0).get_num();
}

Integer CHTable::welschinger_number(const Polygon& p, int delta) {
  return severi_degree(p, delta, YMode::kMinusOne).coeff(0).get_num();
}

std::size_t CHTable::memo_size() const {
  return impl_->symbolic.size() + impl_->at_one.size() + impl_->at_minus_one.size();
}

void CHTable::clear_memo() {
  impl_->symbolic.clear();
  impl_->at_one.clear();
  impl_->at_minus_one.clear();
}

CHTable& shared_ch_table() {
  static CHTable table;
  return table;
}

}  // namespace refsev
