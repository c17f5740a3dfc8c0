#pragma once

#include <string>

#include "jaclef/engine.hpp"
#include "jaclef/poly.hpp"

inline jaclef::HomogeneousPoly P(const std::string& text, int nvars) { return jaclef::parse_poly(text, nvars); }

inline jaclef::ComputeOptions policy(jaclef::RankPolicy p) {
  jaclef::ComputeOptions opt;
  opt.policy = p;
  return opt;
}
