#pragma once

#include "hsc/dgla.hpp"
#include "hsc/rational.hpp"
#include "hsc/toric.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

namespace hsc {

enum class ConstantsMode { Geometric, AllOnes };

std::string to_string(ConstantsMode m);
ConstantsMode parse_constants_mode(std::string_view s);

// Word in the canonical model: sorted list of q's, standing for A_{q1}⊙...⊙A_{qk}.
using CanWord = std::vector<long>;
using CanElement = std::map<CanWord, Rational>;

std::string to_string(const CanWord& w);
std::string to_string(const CanElement& x);
long can_degree(const CanWord& w);

struct PhiResult {
  Rational coeff;
  long target = 0;  // index of A_target
};

// Transfer maps between V_{a,b} and its canonical model for the ellipsoid E(a, b+δ).
// Not thread-safe: use one instance per worker.
class EllipsoidModel {
 public:
  EllipsoidModel(const Rational& a, const Rational& b, ConstantsMode mode = ConstantsMode::Geometric);

  const ToricDomain& domain() const { return domain_; }
  ConstantsMode mode() const { return mode_; }

  LatticePair argmin(long q);
  bool minimal(long i, long j);
  Rational normalization_constant(long q);

  Element psi1(long q);
  PhiResult phi1(long i, long j);
  // Φ^k on β_{i1,j1}⊙...⊙β_{ik,jk}; inputs must be nonzero β indices.
  PhiResult phi(const std::vector<LatticePair>& inputs);
  // Same value, rewriting a uniformly random non-minimal input at each step and
  // using a private memo table.
  PhiResult phi_random_order(const std::vector<LatticePair>& inputs, std::mt19937_64& rng);

  CanElement phi_hat(const BarElement& x);
  BarElement psi_hat(const CanWord& w);
  Element homotopy_h1(const Element& x);

  using MemoKey = std::u16string;
  using Memo = std::unordered_map<MemoKey, Rational>;
  const Memo& memo() const { return memo_; }
  void memo_insert(const MemoKey& key, const Rational& value) { memo_.emplace(key, value); }
  std::size_t memo_size() const { return memo_.size(); }

  static MemoKey encode(const std::vector<LatticePair>& inputs);
  static std::vector<LatticePair> decode(const MemoKey& key);
  static std::string key_string(const MemoKey& key);
  static MemoKey parse_key(std::string_view s);

 private:
  template <class Choose>
  Rational eval(const MemoKey& key, Memo& memo, Choose& choose);
  void ensure_argmin(long q);

  ToricDomain domain_;
  ConstantsMode mode_;
  std::vector<long> istar_;  // istar_[q] = first coordinate of argmin(q)
  std::vector<Rational> constants_;
  std::vector<Rational> phi1_;  // indexed by packed (i, j)
  Memo memo_;
};

// Homologous representative with only action-minimal factors, for any toric domain.
// Input words must consist of β generators only.
BarElement am_reduce(const ToricDomain& domain, const BarElement& x);

// Key/value persistence of Φ memo tables, one file shared by all domains.
class PhiCache {
 public:
  static constexpr const char* kHeader = "hsc-phi-memo v1";

  explicit PhiCache(std::filesystem::path path) : path_(std::move(path)) {}

  // Loads entries recorded for the model's domain and constants mode; returns how many.
  std::size_t load_into(EllipsoidModel& model) const;
  // Replaces the model's section of the file with its current memo table.
  void store_from(const EllipsoidModel& model) const;
  // Per-section entry counts; an unreadable or mismatched-version file is reported empty.
  std::map<std::string, std::size_t> inspect() const;
  void clear() const;

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace hsc
