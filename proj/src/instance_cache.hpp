#pragma once

#include <memory>
#include <mutex>

#include "nearposet/nearness.hpp"

namespace nearposet::detail {

struct InstanceCache {
  std::once_flag spectrum_once;
  std::unique_ptr<Spectrum> spectrum;
  std::once_flag near_once;
  std::unique_ptr<NearTable> near;
};

}  // namespace nearposet::detail
