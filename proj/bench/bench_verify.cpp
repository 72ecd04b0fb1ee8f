// Times the OpenMP tree kernel against its serial run and the naive reference.

#include "cubature/complex_sets.hpp"
#include "cubature/verify_kernel.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <random>

using namespace cub;

namespace {

using Coords = std::vector<std::vector<long double>>;

template <class F>
double seconds(int reps, F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void bench(const std::string& name, const Coords& x, const std::vector<long double>& w, int t, int reps,
           bool with_reference) {
  kernel::PruneSpec none;
  std::vector<kernel::MonomialSum<long double>> par, ser;
  double tp = seconds(reps, [&] { par = kernel::tree_sums(x, w, t, none, true); });
  double ts = seconds(reps, [&] { ser = kernel::tree_sums(x, w, t, none, false); });
  long double diff = 0;
  for (std::size_t i = 0; i < par.size(); ++i) diff = std::max(diff, std::fabs(par[i].sum - ser[i].sum));
  std::cout << std::left << std::setw(22) << name << " t=" << t << " monomials=" << par.size() << std::fixed
            << std::setprecision(4) << "  parallel " << tp << "s  serial " << ts << "s";
  if (with_reference) {
    std::vector<kernel::MonomialSum<long double>> ref;
    double tr = seconds(1, [&] { ref = kernel::reference_sums(x, w, t); });
    for (std::size_t i = 0; i < ref.size(); ++i) diff = std::max(diff, std::fabs(ref[i].sum - par[i].sum));
    std::cout << "  reference " << tr << "s";
  }
  std::cout << std::scientific << std::setprecision(2) << "  max diff " << static_cast<double>(diff) << "\n";
}

void from_formula(const Formula& f, Coords& x, std::vector<long double>& w) {
  x.assign(f.space.dim, std::vector<long double>(f.size()));
  w.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto p = f.normalized_point(i);
    for (int c = 0; c < f.space.dim; ++c) x[c][i] = p[c].to_ld();
    w[i] = f.weights[i].to_ld();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monomial-sum kernel benchmark"};
  int reps = 3;
  std::size_t points = 2000;
  int dim = 8, degree = 8;
  bool reference = true;
  app.add_option("--reps", reps, "Repetitions per timing");
  app.add_option("--points", points, "Random points");
  app.add_option("--dim", dim, "Random dimension");
  app.add_option("--degree", degree, "Random degree");
  app.add_flag("!--no-reference", reference, "Skip the naive reference");
  CLI11_PARSE(app, argc, argv);

  std::cout << "threads: " << omp_get_max_threads() << "\n";
  Coords x;
  std::vector<long double> w;
  from_formula(sphere_formula(e8_roots(E8Position::real)), x, w);
  bench("e8 roots", x, w, 8, reps, reference);
  from_formula(sphere_formula(k12_short_vectors()), x, w);
  bench("k12 short vectors", x, w, 6, reps, reference);

  std::mt19937_64 rng(1);
  std::uniform_real_distribution<long double> u(-1, 1);
  x.assign(dim, std::vector<long double>(points));
  w.assign(points, 1.0L / points);
  for (auto& col : x)
    for (auto& v : col) v = u(rng);
  bench("random", x, w, degree, reps, reference);
}
