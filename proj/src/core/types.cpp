#include "csev/core/types.hpp"

#include <stdexcept>

namespace csev::core {

std::string to_string(EnvKind kind) {
  return kind == EnvKind::Tabletop ? "tabletop" : "nav";
}

EnvKind env_kind_from_string(const std::string& s) {
  if (s == "tabletop") return EnvKind::Tabletop;
  if (s == "nav") return EnvKind::Nav;
  throw std::invalid_argument("unknown environment kind: " + s);
}

std::string to_string(const PerturbationTag& tag) {
  std::string base;
  switch (tag.kind) {
    case TagKind::Original: return "original";
    case TagKind::DL: base = "dL"; break;
    case TagKind::DLB: base = "dLB"; break;
    case TagKind::DS: base = "dS"; break;
    case TagKind::DSB: base = "dSB"; break;
  }
  if (tag.variant > 0) base += std::to_string(tag.variant);
  return base;
}

PerturbationTag tag_from_string(const std::string& s) {
  if (s == "original") return {TagKind::Original, 0};
  std::string body = s;
  int variant = 0;
  if (!body.empty() && body.back() >= '0' && body.back() <= '9') {
    variant = body.back() - '0';
    body.pop_back();
  }
  if (body == "dL") return {TagKind::DL, variant};
  if (body == "dLB") return {TagKind::DLB, variant};
  if (body == "dS") return {TagKind::DS, variant};
  if (body == "dSB") return {TagKind::DSB, variant};
  throw std::invalid_argument("unknown perturbation tag: " + s);
}

}  // namespace csev::core
