#include <umbral/sequences.hpp>

#include <mutex>

namespace umbral {

Sequences::Sequences() {
  derangements_.emplace_back(1);
  factorials_.emplace_back(1);
  self_powers_.emplace_back(1);
}

Sequences::Sequences(const Sequences& other) {
  std::shared_lock lock(other.mutex_);
  derangements_ = other.derangements_;
  factorials_ = other.factorials_;
  self_powers_ = other.self_powers_;
  for (const auto& [n, row] : other.rows_) {
    rows_.emplace(n, std::make_unique<const std::vector<Int>>(*row));
  }
  overrides_ = other.overrides_;
}

void Sequences::grow_derangements(unsigned n) const {
  std::unique_lock lock(mutex_);
  while (derangements_.size() <= n) {
    unsigned m = static_cast<unsigned>(derangements_.size());
    Int next = m * derangements_.back();
    if (m % 2 == 0) {
      next += 1;
    } else {
      next -= 1;
    }
    derangements_.push_back(std::move(next));
  }
}

const Int& Sequences::derangement(unsigned n) const {
  if (auto it = overrides_.find(n); it != overrides_.end()) return it->second;
  {
    std::shared_lock lock(mutex_);
    if (n < derangements_.size()) return derangements_[n];
  }
  grow_derangements(n);
  std::shared_lock lock(mutex_);
  return derangements_[n];
}

void Sequences::grow_factorials(unsigned n) const {
  std::unique_lock lock(mutex_);
  while (factorials_.size() <= n) {
    unsigned m = static_cast<unsigned>(factorials_.size());
    factorials_.push_back(m * factorials_.back());
  }
}

const Int& Sequences::factorial(unsigned n) const {
  {
    std::shared_lock lock(mutex_);
    if (n < factorials_.size()) return factorials_[n];
  }
  grow_factorials(n);
  std::shared_lock lock(mutex_);
  return factorials_[n];
}

void Sequences::grow_self_powers(unsigned k) const {
  std::unique_lock lock(mutex_);
  while (self_powers_.size() <= k) {
    unsigned m = static_cast<unsigned>(self_powers_.size());
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), m, m);
    self_powers_.push_back(std::move(p));
  }
}

const Int& Sequences::self_power(unsigned k) const {
  {
    std::shared_lock lock(mutex_);
    if (k < self_powers_.size()) return self_powers_[k];
  }
  grow_self_powers(k);
  std::shared_lock lock(mutex_);
  return self_powers_[k];
}

const std::vector<Int>& Sequences::binomial_row(unsigned n) const {
  {
    std::shared_lock lock(mutex_);
    if (auto it = rows_.find(n); it != rows_.end()) return *it->second;
  }
  // C(n, k+1) = C(n, k) * (n - k) / (k + 1), exact at every step.
  std::vector<Int> row(n + 1);
  row[0] = 1;
  for (unsigned k = 0; k < n; ++k) {
    row[k + 1] = row[k] * (n - k);
    mpz_divexact_ui(row[k + 1].get_mpz_t(), row[k + 1].get_mpz_t(), k + 1);
  }
  std::unique_lock lock(mutex_);
  auto [it, inserted] =
      rows_.try_emplace(n, std::make_unique<const std::vector<Int>>(std::move(row)));
  return *it->second;
}

Int Sequences::binomial(unsigned n, long k) const {
  if (k < 0 || k > static_cast<long>(n)) return 0;
  return binomial_row(n)[static_cast<std::size_t>(k)];
}

Sequences Sequences::fork_with_derangement(unsigned k, Int value) const {
  Sequences copy(*this);
  copy.overrides_[k] = std::move(value);
  return copy;
}

std::size_t Sequences::derangement_cache_size() const {
  std::shared_lock lock(mutex_);
  return derangements_.size();
}

Sequences& global_sequences() {
  static Sequences instance;
  return instance;
}

namespace {
thread_local const Sequences* active = nullptr;
}

const Sequences& active_sequences() { return active ? *active : global_sequences(); }

ScopedSequences::ScopedSequences(const Sequences& seq) : previous_(active) { active = &seq; }

ScopedSequences::~ScopedSequences() { active = previous_; }

}  // namespace umbral
