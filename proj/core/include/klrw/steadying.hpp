#pragma once

#include <functional>
#include <string>
#include <vector>

#include "klrw/cartan.hpp"
#include "klrw/idempotent.hpp"
#include "klrw/pressure.hpp"

namespace klrw {

// True iff some left outside-in prefix has negative pressure or some right
// outside-in prefix has positive pressure.
bool is_generator_zero(const Pressure& chi, const Idem& idem);

enum class Side { Left, Right };

struct RootGenerator {
  Side side;
  RootVec root;
  friend bool operator==(const RootGenerator&, const RootGenerator&) = default;
  friend auto operator<=>(const RootGenerator&, const RootGenerator&) = default;
};

std::string to_string(const RootGenerator& g);

// Positive roots beta <= alpha: Left if chi(beta) < 0, Right if chi(beta) > 0.
// Throws std::invalid_argument when chi vanishes on a real root <= alpha.
std::vector<RootGenerator> root_generators(const CartanDatum& cd, const Pressure& chi, const RootVec& alpha);

// Prefix test restricted to prefixes whose content is one of the given generators.
bool killed_by_root_generators(const std::vector<RootGenerator>& gens, const Idem& idem, int e);

enum class IdemStatus { GeneratorZero, EngineRequired, Survivor, EngineZero };

std::string to_string(IdemStatus s);

struct IdemClass {
  Idem idem;
  IdemStatus status;
  bool survives() const { return status == IdemStatus::Survivor || status == IdemStatus::EngineRequired; }
};

// Returns true when the idempotent lies in the steadying ideal.
using IdealTest = std::function<bool(const Idem&)>;

std::vector<IdemClass> classify_idempotents(const Pressure& chi, const Weight& lambda, const RootVec& alpha,
                                            const IdealTest& in_ideal = {});
std::vector<IdemClass> classify_idempotents(const Pressure& chi, const std::vector<Idem>& idems,
                                            const IdealTest& in_ideal = {});

struct ChartRow {
  std::string label;
  Pressure chi;
  std::vector<bool> marks;
};

struct Chart {
  std::vector<Idem> columns;
  std::vector<ChartRow> rows;
};

// Header "row<TAB>chi<TAB>columns...", entries "✓" or "0".
std::string chart_tsv(const Chart& chart);
Chart parse_chart_tsv(std::string_view text);

}  // namespace klrw
