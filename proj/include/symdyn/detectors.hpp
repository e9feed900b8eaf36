// Uniform detector entry points over the three backends and three levels,
// plus the per-(system, n) caches the harness leans on.

#pragma once

#include <memory>
#include <variant>

#include "detectors_shift.hpp"

namespace symdyn {

using SystemVariant = std::variant<FiniteDynSystem, ShiftSystem>;

inline const std::string& system_name(const SystemVariant& v) {
  if (std::holds_alternative<FiniteDynSystem>(v)) return std::get<FiniteDynSystem>(v).name;
  return std::get<ShiftSystem>(v).name;
}

inline bool system_faithful_compactum(const SystemVariant& v) {
  if (std::holds_alternative<FiniteDynSystem>(v)) return std::get<FiniteDynSystem>(v).faithful_compactum;
  return std::get<ShiftSystem>(v).faithful_compactum;
}

inline Backend system_backend(const SystemVariant& v) {
  if (std::holds_alternative<FiniteDynSystem>(v)) return std::get<FiniteDynSystem>(v).backend;
  return Backend::Shift;
}

struct LevelRef {
  const FiniteUniverse* fin = nullptr;
  std::optional<ShiftLevelContext> shift;
  std::string error; // nonempty when the level could not be built
  bool ok() const { return error.empty() && (fin || shift); }
};

inline Verdict detect(const LevelRef& ref, Property kind, const Budget& b) {
  if (!ref.error.empty()) return Verdict::unknown(ref.error);
  if (ref.fin) return fin::detect_finite(*ref.fin, b, kind);
  return detect_shift(*ref.shift, b, kind);
}

// Owns the enumerated product/suspension structures of one system, per n.
class SystemLevels {
public:
  SystemLevels(const SystemVariant& sys, std::size_t enum_cap) : sys_(&sys), cap_(enum_cap) {}

  LevelRef level(Level l, int n) {
    if (std::holds_alternative<ShiftSystem>(*sys_)) {
      LevelRef r;
      r.shift = ShiftLevelContext{&std::get<ShiftSystem>(*sys_), l, n};
      return r;
    }
    const FiniteDynSystem& fs = std::get<FiniteDynSystem>(*sys_);
    if (l == Level::Base) {
      if (!base_) base_ = std::make_unique<FiniteUniverse>(base_universe(fs));
      LevelRef r;
      r.fin = base_.get();
      return r;
    }
    PerN& p = per_n(fs, n);
    LevelRef r;
    if (!p.error.empty()) {
      r.error = p.error;
      return r;
    }
    if (l == Level::Product) r.fin = p.prod_u.get();
    else r.fin = p.susp_u.get();
    return r;
  }

  const SymmetricProduct* product(int n) {
    if (!std::holds_alternative<FiniteDynSystem>(*sys_)) return nullptr;
    PerN& p = per_n(std::get<FiniteDynSystem>(*sys_), n);
    return p.error.empty() ? p.hp.get() : nullptr;
  }
  const SuspensionSpace* suspension(int n) {
    if (!std::holds_alternative<FiniteDynSystem>(*sys_)) return nullptr;
    PerN& p = per_n(std::get<FiniteDynSystem>(*sys_), n);
    return p.error.empty() ? p.susp.get() : nullptr;
  }

  const SystemVariant& system() const { return *sys_; }

private:
  struct PerN {
    std::unique_ptr<SymmetricProduct> hp;
    std::unique_ptr<SuspensionSpace> susp;
    std::unique_ptr<FiniteUniverse> prod_u, susp_u;
    std::string error;
  };

  PerN& per_n(const FiniteDynSystem& fs, int n) {
    auto it = cache_.find(n);
    if (it != cache_.end()) return it->second;
    PerN p;
    try {
      p.hp = std::make_unique<SymmetricProduct>(fs, n, cap_);
      p.susp = std::make_unique<SuspensionSpace>(*p.hp);
      p.prod_u = std::make_unique<FiniteUniverse>(product_universe(*p.hp));
      p.susp_u = std::make_unique<FiniteUniverse>(suspension_universe(*p.susp));
    } catch (const EnumerationCapExceeded& e) {
      p = PerN{};
      p.error = e.what();
    }
    return cache_.emplace(n, std::move(p)).first->second;
  }

  const SystemVariant* sys_;
  std::size_t cap_;
  std::unique_ptr<FiniteUniverse> base_;
  std::map<int, PerN> cache_;
};

// ---- names -------------------------------------------------------------------

inline const std::vector<std::pair<Property, const char*>>& property_names() {
  static const std::vector<std::pair<Property, const char*>> names = {
      {Property::Sensitive, "sensitive"},
      {Property::CofinitelySensitive, "cofinitely-sensitive"},
      {Property::MultiSensitive, "multi-sensitive"},
      {Property::Transitive, "transitive"},
      {Property::ZTransitive, "z-transitive"},
      {Property::WeaklyMixing, "weakly-mixing"},
      {Property::Mixing, "mixing"},
      {Property::TotallyTransitive, "totally-transitive"},
      {Property::StronglyTransitive, "strongly-transitive"},
      {Property::MultiTransitive, "multi-transitive"},
      {Property::TTPlusPlus, "tt-plus-plus"},
      {Property::Touhey, "touhey"},
      {Property::TwoSided, "two-sided-transitive"},
      {Property::FullyExact, "fully-exact"},
      {Property::DeltaTransitive, "delta-transitive"},
      {Property::DeltaMixing, "delta-mixing"},
      {Property::Accessible, "accessible"},
      {Property::Indecomposable, "indecomposable"},
      {Property::Minimal, "minimal"},
      {Property::FSystem, "f-system"},
      {Property::Martelli, "martelli"},
      {Property::TransDense, "trans-dense"},
      {Property::FullOmega, "full-omega"},
  };
  return names;
}

inline std::string property_name(Property p) {
  for (const auto& [k, n] : property_names())
    if (k == p) return n;
  return "?";
}

inline std::optional<Property> property_from_name(const std::string& s) {
  for (const auto& [k, n] : property_names())
    if (s == n) return k;
  return std::nullopt;
}

inline const std::vector<std::pair<PointClass, const char*>>& point_class_names() {
  static const std::vector<std::pair<PointClass, const char*>> names = {
      {PointClass::Periodic, "periodic"},
      {PointClass::QuasiPeriodic, "quasi-periodic"},
      {PointClass::Recurrent, "recurrent"},
      {PointClass::Nonwandering, "nonwandering"},
      {PointClass::TransitivePoint, "transitive-point"},
  };
  return names;
}

inline std::optional<PointClass> point_class_from_name(const std::string& s) {
  for (const auto& [k, n] : point_class_names())
    if (s == n) return k;
  return std::nullopt;
}

} // namespace symdyn
