/* Timing harness for the hot kernels.  Pass bench names to restrict, e.g.
   `bench_kernels matmul symmetrize`.  Not part of the test suite. */

#include "gapcert/ball.hpp"
#include "gapcert/decomp.hpp"
#include "gapcert/quotient.hpp"
#include "gapcert/sos.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>

using namespace gapcert;

namespace {

double now_secs() {
  using clk = std::chrono::steady_clock;
  return std::chrono::duration<double>(clk::now().time_since_epoch()).count();
}

void bench_matmul() {
  GroupContext ctx(Family::SL, 4);
  Presentation p = sl_presentation(4);
  RingMatrix<Rational> j = jacobian(ctx, p);
  RingMatrix<Rational> js = mat_star(ctx, j);
  /* warm the product table once so both paths measure pure arithmetic */
  RingMatrix<Rational> warm = mat_mul_serial(ctx, js, j, nullptr);
  ctx.freeze(true);
  double t0 = now_secs();
  RingMatrix<Rational> a = mat_mul_serial(ctx, js, j, nullptr);
  double t1 = now_secs();
  RingMatrix<Rational> b = mat_mul_omp(ctx, js, j, nullptr);
  double t2 = now_secs();
  ctx.freeze(false);
  std::printf("matmul      J*J rank 4 (96x12): serial %.3fs, omp %.3fs, equal %s\n",
              t1 - t0, t2 - t1, mat_sub(a, b).is_zero() ? "yes" : "NO");
}

void bench_symmetrize() {
  GroupContext ctx(Family::SL, 4);
  Presentation p = sl_presentation(4);
  RingMatrix<Rational> adj = adj_part(ctx, p);
  RingMatrix<Rational> warm = symmetrize_serial(ctx, adj);
  double t0 = now_secs();
  RingMatrix<Rational> a = symmetrize_serial(ctx, adj);
  double t1 = now_secs();
  RingMatrix<Rational> b = symmetrize_omp(ctx, adj);
  double t2 = now_secs();
  std::printf("symmetrize  Adj rank 4 over Sym_4: serial %.3fs, omp %.3fs, equal %s\n",
              t1 - t0, t2 - t1, mat_sub(a, b).is_zero() ? "yes" : "NO");
}

void bench_ball() {
  for (int radius : {2, 3}) {
    GroupContext ctx(Family::SL, 3);
    double t0 = now_secs();
    Ball ball = support_ball(ctx, radius);
    double t1 = now_secs();
    std::printf("ball        radius %d rank 3: %zu elements in %.3fs\n", radius,
                ball.elems.size(), t1 - t0);
  }
}

void bench_eig() {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int dim = 726;
  Eigen::MatrixXd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = gauss(rng);
  Eigen::VectorXd w;
  Eigen::MatrixXd v;
  sym_eig(m, w, v);  // warm
  double t0 = now_secs();
  const int reps = 5;
  for (int k = 0; k < reps; ++k) sym_eig(m, w, v);
  double t1 = now_secs();
  std::printf("sym_eig     dim %d: %.3fs per call\n", dim, (t1 - t0) / reps);
}

void bench_solve() {
  GroupContext ctx(Family::SL, 3);
  Presentation p = sl_presentation(3);
  RingMatrix<Rational> adj = adj_part(ctx, p);
  double t0 = now_secs();
  SOSProblem prob = assemble(ctx, adj, 2, "adjacent");
  double t1 = now_secs();
  SolveOptions opt;
  opt.lambda = 0.13;
  opt.max_iter = 50;
  opt.check_every = 50;
  opt.seed = 1;
  NumericSolution sol = solve_feasible(prob, opt);
  double t2 = now_secs();
  std::printf("assemble    radius 2 rank 3: gram %d, %zu classes in %.1fs\n",
              prob.gram_dim(), prob.classes.size(), t1 - t0);
  std::printf("solve       %d iterations: %.1fs (%.0f ms/iter)\n", sol.stats.iters,
              t2 - t1, (t2 - t1) / sol.stats.iters * 1e3);
}

void bench_quotient() {
  GroupContext ctx(Family::SL, 3);
  Presentation p = sl_presentation(3);
  RingMatrix<Rational> adj = adj_part(ctx, p);
  double t0 = now_secs();
  FiniteQuotient quot = FiniteQuotient::sl_mod(3, 3);
  double t1 = now_secs();
  double val = quotient_min_eig(quot, ctx, adj, false, 100, 1);
  double t2 = now_secs();
  std::printf("quotient    mod 3 (%zu elements): closure %.2fs, 100 Lanczos steps %.2fs "
              "(min %.6f)\n",
              quot.size(), t1 - t0, t2 - t1, val);
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> only;
  for (int i = 1; i < argc; ++i) only.insert(argv[i]);
  auto want = [&](const char* name) { return only.empty() || only.count(name); };

  if (want("matmul")) bench_matmul();
  if (want("symmetrize")) bench_symmetrize();
  if (want("ball")) bench_ball();
  if (want("eig")) bench_eig();
  if (want("solve")) bench_solve();
  if (want("quotient")) bench_quotient();
  return 0;
}
