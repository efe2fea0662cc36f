#include <map>
#include <mutex>
#include <stdexcept>

#include "hookblock/functor_lab.hpp"

namespace hookblock {

std::shared_ptr<const HookBlockModules> HookBlockModules::get(int p, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const HookBlockModules>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({p, n});
    if (it != cache.end()) return it->second;
  }
  auto made = std::make_shared<const HookBlockModules>(p, n);
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(p, n), made).first->second;
}

HookBlockModules::HookBlockModules(int p, int n) : p_(p), n_(n) {
  require_prime(p);
  if (n < p) throw std::invalid_argument("the hook block needs n >= p");
  const auto up = static_cast<std::size_t>(p);
  for (int i = 0; i <= p; ++i) {
    omega_.push_back(omega_module(p, p, i, n));
    omega_dual_.push_back(canonical_dual(omega_.back()));
  }
  ModulePtr zero = zero_module(p, n, p);
  kappa_.push_back(zero_map(omega_[0], zero));
  kappa_dual_.push_back(zero_map(zero, omega_dual_[0]));
  for (std::size_t i = 1; i <= up; ++i) {
    kappa_.push_back(koszul_map(omega_[i], omega_[i - 1]));
    kappa_dual_.push_back(kuhn_dual(kappa_[i], omega_dual_[i], omega_dual_[i - 1]));
  }
  for (std::size_t i = 0; i < up; ++i) derham_.push_back(derham_map(omega_[i], omega_[i + 1]));
  derham_.push_back(zero_map(omega_[up], zero));
  top_id_ = LinMap{omega_dual_[up], omega_[up], FpMatrix::identity(p, omega_[up]->dim())};
  if (!top_id_.is_equivariant()) throw std::logic_error("(Omega^p)^# is not identified with Omega^p by the identity");

  for (int i = 0; i < p; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const std::string tag = std::to_string(i) + "@k^" + std::to_string(n);
    schur_.push_back(kernel_submodule(kappa_[ui], "S_" + tag));
    auto w = std::make_shared<PFModule>(*kuhn_dual(schur_.back().module));
    w->label = "W_" + tag;
    weyl_.push_back(w);
    register_dual_pair(schur_.back().module, weyl_.back());
    LinMap d_on_s = compose(derham_[ui], schur_.back().inclusion);
    simple_.push_back(kernel_submodule(d_on_s, "F_" + tag));
    simple_in_omega_.push_back(compose(schur_.back().inclusion, simple_.back().inclusion));
  }
}

namespace {

void check_range(int i, int lo, int hi) {
  if (i < lo || i > hi) throw std::out_of_range("index out of range");
}

}  // namespace

const ModulePtr& HookBlockModules::omega(int i) const {
  check_range(i, 0, p_);
  return omega_[static_cast<std::size_t>(i)];
}

const ModulePtr& HookBlockModules::omega_dual(int i) const {
  check_range(i, 0, p_);
  return omega_dual_[static_cast<std::size_t>(i)];
}

const LinMap& HookBlockModules::kappa(int i) const {
  check_range(i, 0, p_);
  return kappa_[static_cast<std::size_t>(i)];
}

const LinMap& HookBlockModules::derham(int i) const {
  check_range(i, 0, p_);
  return derham_[static_cast<std::size_t>(i)];
}

const LinMap& HookBlockModules::kappa_dual(int i) const {
  check_range(i, 0, p_);
  return kappa_dual_[static_cast<std::size_t>(i)];
}

const Embedding& HookBlockModules::schur(int i) const {
  check_range(i, 0, p_ - 1);
  return schur_[static_cast<std::size_t>(i)];
}

const ModulePtr& HookBlockModules::weyl(int i) const {
  check_range(i, 0, p_ - 1);
  return weyl_[static_cast<std::size_t>(i)];
}

const Embedding& HookBlockModules::simple(int i) const {
  check_range(i, 0, p_ - 1);
  return simple_[static_cast<std::size_t>(i)];
}

const LinMap& HookBlockModules::simple_in_omega(int i) const {
  check_range(i, 0, p_ - 1);
  return simple_in_omega_[static_cast<std::size_t>(i)];
}

}  // namespace hookblock
