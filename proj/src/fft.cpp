#include "hoploc/fft.hpp"

#include <fftw3.h>

#include <cassert>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace hoploc::fft {
namespace {

struct PlanKey {
  std::size_t n;
  int sign;
  bool operator==(const PlanKey&) const = default;
};

struct PlanKeyHash {
  std::size_t operator()(const PlanKey& k) const {
    return std::hash<std::size_t>()(k.n * 2 + (k.sign == FFTW_FORWARD ? 0 : 1));
  }
};

// Plan creation is serialized; fftw_execute_dft on a finished plan is
// thread-safe. FFTW_ESTIMATE keeps plan selection deterministic across runs.
fftw_plan get_plan(std::size_t n, int sign) {
  static std::mutex mtx;
  static std::unordered_map<PlanKey, fftw_plan, PlanKeyHash> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find({n, sign});
  if (it != cache.end()) return it->second;
  std::vector<cplx> a(n), b(n);
  fftw_plan p = fftw_plan_dft_1d(static_cast<int>(n),
                                 reinterpret_cast<fftw_complex*>(a.data()),
                                 reinterpret_cast<fftw_complex*>(b.data()), sign,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!p) throw std::runtime_error("fftw plan creation failed");
  cache.emplace(PlanKey{n, sign}, p);
  return p;
}

void run(std::span<const cplx> in, std::span<cplx> out, int sign) {
  if (in.size() != out.size()) throw std::invalid_argument("fft: size mismatch");
  if (in.empty()) return;
  assert(in.data() != out.data());
  fftw_plan p = get_plan(in.size(), sign);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace

std::size_t next_fast_len(std::size_t n) {
  if (n <= 1) return 1;
  for (std::size_t cand = n;; ++cand) {
    std::size_t m = cand;
    for (std::size_t f : {2, 3, 5})
      while (m % f == 0) m /= f;
    if (m == 1) return cand;
  }
}

void forward(std::span<const cplx> in, std::span<cplx> out) {
  run(in, out, FFTW_FORWARD);
}

void inverse(std::span<const cplx> in, std::span<cplx> out) {
  run(in, out, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(in.size());
  for (auto& v : out) v *= scale;
}

}  // namespace hoploc::fft
