#include "vtl/sampling.hpp"

#include <algorithm>

namespace vtl {

FlatTangle random_flat_tangle(Rng& rng, int n) {
  std::vector<Endpoint> points;
  for (int side = 0; side <= 1; ++side)
    for (int j = 1; j <= n; ++j) points.push_back({side, j});
  std::shuffle(points.begin(), points.end(), rng);
  std::vector<EndpointPair> pairs;
  for (int k = 0; k < n; ++k) pairs.push_back({points[2 * k], points[2 * k + 1]});
  return FlatTangle(n, std::move(pairs));
}

ArrowTangle random_arrow_tangle(Rng& rng, int n, int max_label) {
  const FlatTangle base = random_flat_tangle(rng, n);
  std::uniform_int_distribution<int> dist(-max_label, max_label);
  std::vector<int> labels;
  labels.reserve(base.pairs().size());
  for (const auto& [p, q] : base.pairs()) {
    const bool want_odd = p.side == q.side;
    int label = dist(rng);
    if ((label % 2 != 0) != want_odd) {
      label += label < 0 ? 1 : (label >= max_label ? -1 : 1);
    }
    labels.push_back(label);
  }
  return ArrowTangle(base, std::move(labels));
}

namespace {

LaurentPoly random_laurent(Rng& rng) {
  std::uniform_int_distribution<int> exp_dist(-4, 4);
  std::uniform_int_distribution<int> coeff_dist(-3, 3);
  LaurentPoly p;
  for (int k = 0; k < 2; ++k)
    p += LaurentPoly::monomial(exp_dist(rng), coeff_dist(rng));
  return p;
}

}  // namespace

VTLElement random_vtl_element(Rng& rng, int n, int terms) {
  VTLElement x(n);
  for (int k = 0; k < terms; ++k)
    x.add_term(random_flat_tangle(rng, n), random_laurent(rng));
  return x;
}

ATLElement random_atl_element(Rng& rng, int n, int terms, int max_label) {
  std::uniform_int_distribution<int> zig(0, 2);
  ATLElement x(n);
  for (int k = 0; k < terms; ++k) {
    ArrowPoly coeff(random_laurent(rng));
    if (const int z = zig(rng); z > 0)
      coeff *= ArrowPoly::term(ZigzagMonomial::var(z), LaurentPoly::one());
    x.add_term(random_arrow_tangle(rng, n, max_label), coeff);
  }
  return x;
}

BraidWord random_word(Rng& rng, const WordOptions& options) {
  std::uniform_int_distribution<int> strands(options.min_strands,
                                             options.max_strands);
  const int n = std::max(2, strands(rng));
  std::uniform_int_distribution<int> length(0, options.max_length);
  const int len = length(rng);
  std::uniform_int_distribution<int> index(1, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<BraidLetter> letters;
  int crossings = 0;
  for (int k = 0; k < len; ++k) {
    const bool sigma_ok =
        options.allow_sigma &&
        (options.max_crossings < 0 || crossings < options.max_crossings);
    const bool pick_sigma = sigma_ok && (!options.allow_tau || coin(rng) == 0);
    if (pick_sigma) {
      letters.push_back(sigma(index(rng), coin(rng) == 0 ? 1 : -1));
      ++crossings;
    } else if (options.allow_tau) {
      letters.push_back(tau(index(rng)));
    }
  }
  return BraidWord(n, std::move(letters));
}

}  // namespace vtl
