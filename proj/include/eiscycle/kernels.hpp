#pragma once

#include "eiscycle/eisfun.hpp"
#include "eiscycle/msym.hpp"

namespace eis {

// Data-parallel sweeps: each comes as an OpenMP kernel plus a serial
// reference used by the tests and the benchmark. Results are exact, so
// parallel and serial outputs must agree coefficient-for-coefficient.

// F on canonical point classes, indexed by u*N+v of the class
// representative (non-canonical slots stay zero). The closed form.
std::vector<CycloElem> f_closed_table_serial(const LevelContext& ctx);
std::vector<CycloElem> f_closed_table_parallel(const LevelContext& ctx);

// same table through the (2N)^2-term Fourier sum
std::vector<CycloElem> f_fourier_table_serial(const LevelContext& ctx);
std::vector<CycloElem> f_fourier_table_parallel(const LevelContext& ctx);

// per-level cache of the closed-form table (parallel builder)
const std::vector<CycloElem>& f_closed_class_table(const LevelContext& ctx);

// E_P for every P in C_N, in the 2N field
std::vector<ManinChain<CycloElem>> eisenstein_cycles_serial(const LevelContext& ctx);
std::vector<ManinChain<CycloElem>> eisenstein_cycles_parallel(const LevelContext& ctx);

struct ConsistencySweep {
  bool pass = false;
  int points = 0;
  std::vector<PointClass> fourier_mismatches;   // F_closed != F_fourier
  std::vector<PointClass> symmetry_failures;    // F(P)+F(SP) != 0 or F(P) != F(-P)
};

// F_closed == F_fourier on every class of (Z/NZ)^2, plus the two
// symmetries; the heavy per-point Fourier sums run in parallel
ConsistencySweep f_consistency_sweep(const LevelContext& ctx, bool parallel);

}  // namespace eis
