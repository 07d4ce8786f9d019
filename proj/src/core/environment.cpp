#include "csev/core/environment.hpp"

#include "csev/nav/env.hpp"
#include "csev/tabletop/env.hpp"

namespace csev::core {

std::unique_ptr<Environment> make_environment(EnvKind kind) {
  if (kind == EnvKind::Tabletop) return std::make_unique<tabletop::TabletopEnv>();
  return std::make_unique<nav::NavEnv>();
}

}  // namespace csev::core
