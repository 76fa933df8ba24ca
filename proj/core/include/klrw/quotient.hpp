#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "klrw/algebra.hpp"
#include "klrw/field.hpp"
#include "klrw/finite_algebra.hpp"
#include "klrw/linalg.hpp"
#include "klrw/pressure.hpp"
#include "klrw/steadying.hpp"

namespace klrw {

using IntRow = std::vector<std::pair<int, std::int64_t>>;

struct AlgebraSpec {
  int e = 2;
  Weight lambda;
  RootVec alpha;
  Pressure chi = standard_pressure(2);
  FieldSpec field;
};

struct QuotientOptions {
  int threads = 1;
  int window = 4;  // trailing zero degrees needed to call a dimension count complete
};

struct GradedDims {
  std::map<int, long long> dims;  // nonzero degrees only
  FieldSpec field;
  int computed_to = 0;
  bool complete = false;

  long long total() const;
  long long at(int d) const;
  std::string status() const { return complete ? "complete (heuristic)" : "truncated"; }
  friend bool operator==(const GradedDims&, const GradedDims&) = default;
};

std::string to_string(const GradedDims& g);

// R_0(Lambda, alpha) modulo the two-sided ideal generated by a set of idempotents.
// Cells (bottom, top, degree) are computed on demand and cached.
template <class F>
class SteadiedQuotient {
 public:
  // One (bottom, top, degree) cell. The quotient is described by a basis of the
  // annihilator of the ideal: coordinate j of a vector v is v . annihilator[j], and
  // annihilator[j][reps[i]] is 1 when i == j and 0 otherwise.
  struct Slice {
    std::vector<Term> basis;
    std::map<Term, int> index;
    int ideal_rank = 0;
    DenseMatrix<F> annihilator;
    std::vector<int> reps;

    int dim() const { return static_cast<int>(basis.size()); }
    int ideal_dim() const { return ideal_rank; }
    int quotient_dim() const { return static_cast<int>(annihilator.size()); }
    std::vector<typename F::value_type> project(const F& f, const SparseVec<F>& v) const;
    bool in_ideal(const F& f, const SparseVec<F>& v) const;
  };

  SteadiedQuotient(KlrwAlgebra& alg, std::vector<Idem> generators, F field, QuotientOptions opts = {});

  KlrwAlgebra& algebra() { return alg_; }
  const F& field() const { return f_; }
  const std::vector<Idem>& generators() const { return gens_; }

  const Slice& slice(const Idem& bottom, const Idem& top, int degree);
  void precompute(const std::vector<std::tuple<Idem, Idem, int>>& cells);

  bool idem_in_ideal(const Idem& idem);
  std::vector<Idem> survivors(const std::vector<Idem>& candidates);

  // Graded dimensions of (sum idems) R (sum idems), degrees from the block minimum up.
  GradedDims graded_dims(const std::vector<Idem>& idems, int max_degree);

  // Structure constants of (sum idems) R (sum idems); requires complete dimensions.
  FiniteAlgebra<F> finite_algebra(const std::vector<Idem>& idems, int max_degree);

  SparseVec<F> coordinates(const Idem& bottom, const Idem& top, int degree, const ZElement& z);

 private:
  using CellKey = std::tuple<Idem, Idem, int>;
  std::unique_ptr<Slice> compute(const Idem& bottom, const Idem& top, int degree);
  DenseMatrix<F> annihilator_of(std::vector<IntRow> kept, const std::vector<IntRow>& rest, int n);

  KlrwAlgebra& alg_;
  std::vector<Idem> gens_;
  std::set<Idem> gen_set_;
  F f_;
  QuotientOptions opts_;
  std::mutex mu_;
  std::map<CellKey, std::unique_ptr<Slice>> cells_;
};

extern template class SteadiedQuotient<RationalField>;
extern template class SteadiedQuotient<PrimeField>;

// Idempotents of the block that satisfy the prefix test.
std::vector<Idem> steadying_generators(const KlrwAlgebra& alg, const Pressure& chi);

bool idem_in_ideal(const AlgebraSpec& spec, const Idem& idem);
std::vector<Idem> survivors(const AlgebraSpec& spec, QuotientOptions opts = {});
GradedDims quotient_graded_dims(const AlgebraSpec& spec, int max_degree, QuotientOptions opts = {});
GradedDims truncation_graded_dims(const AlgebraSpec& spec, const std::vector<Idem>& idems, int max_degree,
                                  QuotientOptions opts = {});
// Simple factors of (sum idems) R (sum idems) over spec.field; all idempotents when idems is empty.
// Throws std::runtime_error when the dimensions are not complete by max_degree.
SimpleCount count_simple_factors(const AlgebraSpec& spec, const std::vector<Idem>& idems, int max_degree,
                                 QuotientOptions opts = {});
SimpleCount count_simple_factors_Q(const Pressure& chi, const Weight& lambda, const RootVec& alpha,
                                   int max_degree = 24, QuotientOptions opts = {});

// Marks survivors after the exact ideal test, one row per pressure.
Chart build_chart(int e, const Weight& lambda, const RootVec& alpha, const std::vector<Idem>& columns,
                  const std::vector<std::pair<std::string, Pressure>>& rows, QuotientOptions opts = {});

}  // namespace klrw
