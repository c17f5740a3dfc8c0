// Serial reference kernels against the OpenMP ones on Jacobian-piece matrices.

#include <benchmark/benchmark.h>

#include <map>

#include "jaclef/corpus.hpp"
#include "jaclef/gradedla.hpp"
#include "jaclef/kernels.hpp"

using namespace jaclef;

namespace {

constexpr std::uint32_t kPrime = 2147483629u;

const GradedMatrix& piece(int degree) {
  static std::map<int, GradedMatrix> cache;
  auto it = cache.find(degree);
  if (it == cache.end()) {
    auto f = fermat(4, 4).poly + segre_cubic().poly * HomogeneousPoly::variable(5, 0);
    it = cache.emplace(degree, assemble_ideal_piece(partials(f), degree)).first;
  }
  return it->second;
}

template <class F>
DenseMatrix<F> dense_rows(const F& f, const GradedMatrix& m) {
  DenseMatrix<F> a(m.num_cols(), std::vector<typename F::Elem>(m.num_rows(), f.zero()));
  for (int c = 0; c < m.num_cols(); ++c)
    for (const auto& [r, x] : m.columns[c]) a[c][r] = f.from(x);
  return a;
}

template <class F>
std::vector<SparseRow<F>> sparse_rows(const F& f, const GradedMatrix& m) {
  std::vector<SparseRow<F>> rows;
  for (const auto& col : m.columns) {
    SparseRow<F> row;
    for (const auto& [r, x] : col) row.emplace_back(r, f.from(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

void BM_dense_serial_modp(benchmark::State& state) {
  ModP f(kPrime);
  const auto& m = piece(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto a = dense_rows(f, m);
    benchmark::DoNotOptimize(dense_rref_serial(f, a, m.num_rows()));
  }
  state.counters["cols"] = m.num_rows();
}

void BM_dense_omp_modp(benchmark::State& state) {
  ModP f(kPrime);
  const auto& m = piece(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto a = dense_rows(f, m);
    benchmark::DoNotOptimize(dense_rref_omp(f, a, m.num_rows()));
  }
  state.counters["cols"] = m.num_rows();
}

void BM_structured_modp(benchmark::State& state) {
  ModP f(kPrime);
  const auto& m = piece(static_cast<int>(state.range(0)));
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(structured_echelon(f, sparse_rows(f, m), m.num_rows(), parallel).rank());
  }
}

void BM_dense_serial_qq(benchmark::State& state) {
  QQ f;
  const auto& m = piece(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto a = dense_rows(f, m);
    benchmark::DoNotOptimize(dense_rref_serial(f, a, m.num_rows()));
  }
}

void BM_dense_omp_qq(benchmark::State& state) {
  QQ f;
  const auto& m = piece(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto a = dense_rows(f, m);
    benchmark::DoNotOptimize(dense_rref_omp(f, a, m.num_rows()));
  }
}

void BM_bareiss(benchmark::State& state) {
  const auto& m = piece(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bareiss_rank(m));
}

}  // namespace

BENCHMARK(BM_dense_serial_modp)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dense_omp_modp)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_structured_modp)->Args({5, 0})->Args({5, 1})->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dense_serial_qq)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_dense_omp_qq)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_bareiss)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
