#include "core/semantics.hpp"

#include <algorithm>
#include <array>

namespace sk {

namespace {

constexpr std::array<std::string_view, kSemCount> kNames = {
    "S",  "CS", "RS", "TS", "2S",  "BS",  "T",  "CT",  "F",   "FT", "R",
    "RT", "IF", "PF", "IFT", "PFT", "IS", "PS", "IST", "PST", "CONF"};

}  // namespace

std::string_view sem_name(Sem s) { return kNames[static_cast<int>(s)]; }

std::optional<Sem> sem_parse(std::string_view text) {
  std::string up(text);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  for (int i = 0; i < kSemCount; ++i)
    if (up == kNames[i]) return static_cast<Sem>(i);
  return std::nullopt;
}

Datum sem_datum(Sem s) {
  switch (s) {
    case Sem::F: case Sem::FT: case Sem::R: case Sem::RT:
      return Datum::Acts;
    case Sem::IF: case Sem::PF: case Sem::IFT: case Sem::PFT:
      return Datum::Traces;
    case Sem::IS: case Sem::PS: case Sem::IST: case Sem::PST:
      return Datum::Classes;
    default:
      return Datum::None;
  }
}

// Every covering "finer -> coarser" edge of the preorder spectrum; the
// transitive closure gives all valid implications preorder(finer) =>
// preorder(coarser).
const std::vector<SemArrow>& spectrum_arrows() {
  static const std::vector<SemArrow> arrows = {
      // branching spine
      {Sem::BS, Sem::TwoS}, {Sem::TwoS, Sem::TS}, {Sem::TS, Sem::RS},
      {Sem::RS, Sem::CS},   {Sem::CS, Sem::S},
      // branching to linear
      {Sem::TwoS, Sem::PST}, {Sem::TS, Sem::PFT}, {Sem::RS, Sem::RT},
      {Sem::CS, Sem::CT},    {Sem::S, Sem::T},
      // possible-worlds layer
      {Sem::PST, Sem::IST}, {Sem::PST, Sem::PS}, {Sem::IST, Sem::IS},
      {Sem::PS, Sem::IS},
      // down to impossible futures
      {Sem::PST, Sem::PFT}, {Sem::IST, Sem::IFT}, {Sem::PS, Sem::PF},
      {Sem::IS, Sem::IF},
      // futures layer
      {Sem::PFT, Sem::IFT}, {Sem::PFT, Sem::PF}, {Sem::IFT, Sem::IF},
      {Sem::PF, Sem::IF},
      // futures to refusals/readies
      {Sem::PFT, Sem::RT}, {Sem::IFT, Sem::FT}, {Sem::PF, Sem::R},
      {Sem::IF, Sem::F},
      // decorated-trace layer
      {Sem::RT, Sem::FT}, {Sem::RT, Sem::R}, {Sem::FT, Sem::F}, {Sem::R, Sem::F},
      // down to (complete) traces
      {Sem::RT, Sem::CT}, {Sem::R, Sem::CT}, {Sem::F, Sem::CT},
      {Sem::FT, Sem::CT}, {Sem::CT, Sem::T},
  };
  return arrows;
}

const std::vector<Sem>& decompose_supported() {
  static const std::vector<Sem> sems = {
      Sem::S,  Sem::CS, Sem::RS, Sem::TS, Sem::TwoS, Sem::BS, Sem::T,
      Sem::CT, Sem::F,  Sem::FT, Sem::R,  Sem::RT,   Sem::PF, Sem::PS};
  return sems;
}

}  // namespace sk
