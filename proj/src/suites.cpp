#include "vtl/suites.hpp"

#include <sstream>

#include "vtl/invariants.hpp"
#include "vtl/oracle.hpp"
#include "vtl/sampling.hpp"

namespace vtl {

std::string SuiteResult::summary() const {
  std::ostringstream os;
  os << name << ": " << (ok() ? "pass" : "FAIL") << " (" << checks
     << " checks";
  if (!ok()) os << ", " << failures.size() << " failures";
  os << ')';
  return os.str();
}

namespace {

template <typename Elem>
void expect_eq(SuiteResult& r, const Elem& lhs, const Elem& rhs,
               const std::string& what) {
  ++r.checks;
  if (lhs == rhs) return;
  r.failures.push_back(what + "\n  lhs = " + lhs.str() +
                       "\n  rhs = " + rhs.str());
}

void expect(SuiteResult& r, bool condition, const std::string& what) {
  ++r.checks;
  if (!condition) r.failures.push_back(what);
}

template <typename Elem>
Elem elem_pow(const Elem& x, int k, const Elem& unit) {
  Elem out = unit;
  for (int c = 0; c < k; ++c) out = out * x;
  return out;
}

std::string at_n(const std::string& what, int n) {
  return what + " (n = " + std::to_string(n) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------

SuiteResult check_presentation_vtl(int max_n) {
  SuiteResult r;
  r.name = "presentation-vtl";
  for (int n = 2; n <= max_n; ++n) {
    const auto E = [n](int i) {
      return VTLElement::basis(FlatTangle::cup_cap(i, n));
    };
    const auto V = [n](int i) {
      return VTLElement::basis(FlatTangle::transposition(i, n));
    };
    const VTLElement one = VTLElement::identity(n);
    const LaurentPoly d = LaurentPoly::d();
    for (int i = 1; i <= n - 1; ++i) {
      expect_eq(r, E(i) * E(i), d * E(i), at_n("E_i^2 = z E_i", n));
      expect_eq(r, V(i) * V(i), one, at_n("v_i^2 = 1", n));
      expect_eq(r, E(i) * V(i), E(i), at_n("E_i v_i = E_i", n));
      expect_eq(r, V(i) * E(i), E(i), at_n("v_i E_i = E_i", n));
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) >= 2) {
          expect_eq(r, E(i) * E(j), E(j) * E(i), at_n("E_i E_j = E_j E_i", n));
          expect_eq(r, V(i) * V(j), V(j) * V(i), at_n("v_i v_j = v_j v_i", n));
          expect_eq(r, V(i) * E(j), E(j) * V(i), at_n("v_i E_j = E_j v_i", n));
        }
        if (std::abs(i - j) == 1) {
          expect_eq(r, E(i) * V(j) * E(i), E(i), at_n("E_i v_j E_i = E_i", n));
          expect_eq(r, V(i) * V(j) * V(i), V(j) * V(i) * V(j),
                    at_n("v_i v_j v_i = v_j v_i v_j", n));
          expect_eq(r, V(i) * V(j) * E(i), E(j) * V(i) * V(j),
                    at_n("v_i v_j E_i = E_j v_i v_j", n));
        }
      }
    }
  }
  return r;
}

SuiteResult check_derived_vtl(int max_n) {
  SuiteResult r;
  r.name = "derived-vtl";
  for (int n = 2; n <= max_n; ++n) {
    const auto E = [n](int i) {
      return VTLElement::basis(FlatTangle::cup_cap(i, n));
    };
    const auto V = [n](int i) {
      return VTLElement::basis(FlatTangle::transposition(i, n));
    };
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) != 1) continue;
        expect_eq(r, E(i) * E(j) * V(i) * V(j), E(i),
                  at_n("E_i E_j v_i v_j = E_i", n));
        expect_eq(r, E(i) * E(j) * E(i), E(i), at_n("E_i E_j E_i = E_i", n));
        expect_eq(r, E(i) * E(j), V(j) * V(i) * E(j),
                  at_n("E_i E_j = v_j v_i E_j", n));
      }
    }
    for (int i = 1; i <= n - 3; ++i) {
      expect_eq(r, V(i + 1) * V(i + 2) * V(i) * V(i + 1) * E(i) * E(i + 2),
                E(i) * E(i + 2),
                at_n("v_{i+1} v_{i+2} v_i v_{i+1} E_i E_{i+2} = E_i E_{i+2}", n));
    }
  }
  return r;
}

SuiteResult check_presentation_atl(int max_n, int m_range) {
  SuiteResult r;
  r.name = "presentation-atl";
  for (int n = 2; n <= max_n; ++n) {
    const auto F = [n](int i) {
      return ATLElement::basis(generator_arrow(ArrowGen::F, i, n));
    };
    const auto W = [n](int i) {
      return ATLElement::basis(generator_arrow(ArrowGen::W, i, n));
    };
    const auto T = [n](int i, int sign = 1) {
      return ATLElement::basis(
          generator_arrow(sign > 0 ? ArrowGen::T : ArrowGen::TInv, i, n));
    };
    const ATLElement one = ATLElement::identity(n);
    const auto T_pow = [&](int i, int m) {
      return elem_pow(T(i, m >= 0 ? 1 : -1), std::abs(m), one);
    };
    for (int i = 1; i <= n; ++i) {
      expect_eq(r, T(i) * T(i, -1), one, at_n("t_i t_i^-1 = 1", n));
      expect_eq(r, T(i, -1) * T(i), one, at_n("t_i^-1 t_i = 1", n));
      for (int j = i + 1; j <= n; ++j)
        expect_eq(r, T(i) * T(j), T(j) * T(i), at_n("t_i t_j = t_j t_i", n));
    }
    for (int i = 1; i <= n - 1; ++i) {
      expect_eq(r, W(i) * W(i), one, at_n("w_i^2 = 1", n));
      expect_eq(r, W(i) * T(i), T(i + 1) * W(i), at_n("w_i t_i = t_{i+1} w_i", n));
      expect_eq(r, W(i) * T(i + 1), T(i) * W(i), at_n("w_i t_{i+1} = t_i w_i", n));
      for (int j = 1; j <= n; ++j)
        if (j != i && j != i + 1)
          expect_eq(r, W(i) * T(j), T(j) * W(i), at_n("w_i t_j = t_j w_i", n));
      for (int m = -m_range; m <= m_range; ++m) {
        expect_eq(r, F(i) * T_pow(i, m) * F(i),
                  zigzag_factor(std::abs(m)) * F(i),
                  at_n("F_i t_i^m F_i = z_|m| F_i, m = " + std::to_string(m), n));
      }
      expect_eq(r, F(i) * W(i), F(i) * T(i), at_n("F_i w_i = F_i t_i", n));
      expect_eq(r, F(i) * T(i), F(i) * T(i + 1, -1),
                at_n("F_i t_i = F_i t_{i+1}^-1", n));
      expect_eq(r, W(i) * F(i), T(i, -1) * F(i), at_n("w_i F_i = t_i^-1 F_i", n));
      expect_eq(r, T(i, -1) * F(i), T(i + 1) * F(i),
                at_n("t_i^-1 F_i = t_{i+1} F_i", n));
      for (int j = 1; j <= n; ++j)
        if (j != i && j != i + 1)
          expect_eq(r, F(i) * T(j), T(j) * F(i), at_n("F_i t_j = t_j F_i", n));
    }
    for (int i = 1; i <= n - 1; ++i) {
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) >= 2) {
          expect_eq(r, W(i) * W(j), W(j) * W(i), at_n("w_i w_j = w_j w_i", n));
          expect_eq(r, F(i) * F(j), F(j) * F(i), at_n("F_i F_j = F_j F_i", n));
          expect_eq(r, F(i) * W(j), W(j) * F(i), at_n("F_i w_j = w_j F_i", n));
        }
        if (std::abs(i - j) == 1) {
          expect_eq(r, W(i) * W(j) * W(i), W(j) * W(i) * W(j),
                    at_n("w_i w_j w_i = w_j w_i w_j", n));
          expect_eq(r, F(i) * W(j) * F(i), F(i), at_n("F_i w_j F_i = F_i", n));
          expect_eq(r, W(i) * W(j) * F(i), F(j) * W(i) * W(j),
                    at_n("w_i w_j F_i = F_j w_i w_j", n));
        }
      }
    }
  }
  return r;
}

SuiteResult check_derived_atl(int max_n) {
  SuiteResult r;
  r.name = "derived-atl";
  for (int n = 2; n <= max_n; ++n) {
    const auto F = [n](int i) {
      return ATLElement::basis(generator_arrow(ArrowGen::F, i, n));
    };
    const auto W = [n](int i) {
      return ATLElement::basis(generator_arrow(ArrowGen::W, i, n));
    };
    const auto T = [n](int i, int sign = 1) {
      return ATLElement::basis(
          generator_arrow(sign > 0 ? ArrowGen::T : ArrowGen::TInv, i, n));
    };
    for (int i = 1; i <= n - 2; ++i) {
      expect_eq(r, F(i) * F(i + 1) * W(i) * W(i + 1), F(i) * T(i + 2, -1),
                at_n("F_i F_{i+1} w_i w_{i+1} = F_i t_{i+2}^-1", n));
      expect_eq(r, F(i) * T(i + 2, -1), T(i + 2, -1) * F(i),
                at_n("F_i t_{i+2}^-1 = t_{i+2}^-1 F_i", n));
      expect_eq(r, W(i + 1) * W(i) * F(i + 1) * F(i), T(i + 2) * F(i),
                at_n("w_{i+1} w_i F_{i+1} F_i = t_{i+2} F_i", n));
      expect_eq(r, T(i + 2) * F(i), F(i) * T(i + 2),
                at_n("t_{i+2} F_i = F_i t_{i+2}", n));
    }
    for (int i = 2; i <= n - 1; ++i) {
      expect_eq(r, F(i) * F(i - 1) * W(i) * W(i - 1), F(i) * T(i - 1),
                at_n("F_i F_{i-1} w_i w_{i-1} = F_i t_{i-1}", n));
      expect_eq(r, F(i) * T(i - 1), T(i - 1) * F(i),
                at_n("F_i t_{i-1} = t_{i-1} F_i", n));
      expect_eq(r, W(i - 1) * W(i) * F(i - 1) * F(i), T(i - 1, -1) * F(i),
                at_n("w_{i-1} w_i F_{i-1} F_i = t_{i-1}^-1 F_i", n));
      expect_eq(r, T(i - 1, -1) * F(i), F(i) * T(i - 1, -1),
                at_n("t_{i-1}^-1 F_i = F_i t_{i-1}^-1", n));
    }
    for (int i = 1; i <= n - 1; ++i)
      for (int j = 1; j <= n - 1; ++j)
        if (std::abs(i - j) == 1)
          expect_eq(r, F(i) * F(j) * F(i), F(i), at_n("F_i F_j F_i = F_i", n));
    for (int i = 1; i <= n - 3; ++i)
      expect_eq(r, W(i + 1) * W(i + 2) * W(i) * W(i + 1) * F(i) * F(i + 2),
                F(i) * F(i + 2),
                at_n("w_{i+1} w_{i+2} w_i w_{i+1} F_i F_{i+2} = F_i F_{i+2}", n));
  }
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult check_markov_f(int max_n, std::uint64_t seed, int random_pairs) {
  SuiteResult r;
  r.name = "markov-f";
  for (int n = 1; n <= max_n; ++n) {
    const auto basis = enumerate_flat(n);
    // (1) trace commutativity, exhaustive over basis pairs.
    for (const auto& e1 : basis) {
      const VTLElement x = VTLElement::basis(e1);
      for (const auto& e2 : basis) {
        const VTLElement y = VTLElement::basis(e2);
        expect_eq(r, trace_f(x * y), trace_f(y * x),
                  "trace(xy) = trace(yx) for " + e1.str() + ", " + e2.str());
      }
    }
    // (2)-(4) stabilization axioms per basis tangle.
    const VTLElement s_up = sigma_image_f(n, n + 1);
    const VTLElement s_up_inv = sigma_image_f(n, n + 1, true);
    const VTLElement v_up = tau_image_f(n, n + 1);
    for (const auto& e : basis) {
      const LaurentPoly t = trace_f(VTLElement::basis(e));
      const VTLElement x = embed(VTLElement::basis(e));
      expect_eq(r, trace_f(x * s_up), t, "trace(x S_n) = trace(x) for " + e.str());
      expect_eq(r, trace_f(x * s_up_inv), t,
                "trace(x S_n^-1) = trace(x) for " + e.str());
      expect_eq(r, trace_f(x * v_up), t, "trace(x v_n) = trace(x) for " + e.str());
      if (n >= 2) {
        const VTLElement v_mid = tau_image_f(n - 1, n + 1);
        expect_eq(r, trace_f(x * s_up_inv * v_mid * s_up), t,
                  "trace(x S_n^-1 v_{n-1} S_n) = trace(x) for " + e.str());
        const VTLElement s_mid = sigma_image_f(n - 1, n + 1);
        const VTLElement s_mid_inv = sigma_image_f(n - 1, n + 1, true);
        expect_eq(r,
                  trace_f(x * v_up * v_mid * s_mid * v_up * s_mid_inv * v_mid *
                          v_up),
                  t, "trace of the two-virtual move word for " + e.str());
      }
    }
  }
  Rng rng(seed);
  std::uniform_int_distribution<int> pick_n(1, max_n);
  for (int k = 0; k < random_pairs; ++k) {
    const int n = pick_n(rng);
    const VTLElement x = random_vtl_element(rng, n);
    const VTLElement y = random_vtl_element(rng, n);
    expect_eq(r, trace_f(x * y), trace_f(y * x),
              "trace(xy) = trace(yx) for random elements, n = " +
                  std::to_string(n));
  }
  return r;
}

SuiteResult check_markov_a(int max_n, std::uint64_t seed, int tangles_per_n,
                           int random_pairs) {
  SuiteResult r;
  r.name = "markov-a";
  Rng rng(seed);
  for (int n = 1; n <= max_n; ++n) {
    const ATLElement s_up = sigma_image_a(n, n + 1);
    const ATLElement s_up_inv = sigma_image_a(n, n + 1, true);
    const ATLElement w_up = tau_image_a(n, n + 1);
    for (int k = 0; k < tangles_per_n; ++k) {
      const ArrowTangle f1 = random_arrow_tangle(rng, n, 5);
      const ArrowTangle f2 = random_arrow_tangle(rng, n, 5);
      const ATLElement x = ATLElement::basis(f1);
      const ATLElement y = ATLElement::basis(f2);
      expect_eq(r, trace_a(x * y), trace_a(y * x),
                "trace(xy) = trace(yx) for " + f1.str() + ", " + f2.str());
      const ArrowPoly t = trace_a(x);
      const ATLElement xe = embed(x);
      expect_eq(r, trace_a(xe * s_up), t, "trace(x S_n) = trace(x) for " + f1.str());
      expect_eq(r, trace_a(xe * s_up_inv), t,
                "trace(x S_n^-1) = trace(x) for " + f1.str());
      expect_eq(r, trace_a(xe * w_up), t, "trace(x w_n) = trace(x) for " + f1.str());
      if (n >= 2) {
        const ATLElement w_mid = tau_image_a(n - 1, n + 1);
        expect_eq(r, trace_a(xe * s_up_inv * w_mid * s_up), t,
                  "trace(x S_n^-1 w_{n-1} S_n) = trace(x) for " + f1.str());
        const ATLElement s_mid = sigma_image_a(n - 1, n + 1);
        const ATLElement s_mid_inv = sigma_image_a(n - 1, n + 1, true);
        expect_eq(r,
                  trace_a(xe * w_up * w_mid * s_mid * w_up * s_mid_inv * w_mid *
                          w_up),
                  t, "trace of the two-virtual move word for " + f1.str());
      }
    }
  }
  std::uniform_int_distribution<int> pick_n(1, max_n);
  for (int k = 0; k < random_pairs; ++k) {
    const int n = pick_n(rng);
    const ATLElement x = random_atl_element(rng, n);
    const ATLElement y = random_atl_element(rng, n);
    expect_eq(r, trace_a(x * y), trace_a(y * x),
              "trace(xy) = trace(yx) for random elements, n = " +
                  std::to_string(n));
  }
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult check_representations(int max_n) {
  SuiteResult r;
  r.name = "representations";
  for (int n = 2; n <= max_n; ++n) {
    std::vector<Relation> relations;
    for (int i = 1; i <= n - 1; ++i) {
      relations.push_back({Relation::Kind::TauSquare, i});
      relations.push_back({Relation::Kind::FreeInverse, i, 0, 1});
      relations.push_back({Relation::Kind::FreeInverse, i, 0, -1});
      for (int j = 1; j <= n - 1; ++j) {
        if (std::abs(i - j) >= 2) {
          relations.push_back({Relation::Kind::CommSigmaSigma, i, j, 1, 1});
          relations.push_back({Relation::Kind::CommTauTau, i, j});
          relations.push_back({Relation::Kind::CommTauSigma, i, j, 1});
        }
        if (std::abs(i - j) == 1) {
          relations.push_back({Relation::Kind::BraidSigma, i, j});
          relations.push_back({Relation::Kind::BraidTau, i, j});
          relations.push_back({Relation::Kind::Mixed, i, j});
        }
      }
    }
    for (const auto& rel : relations) {
      const BraidWord lhs(n, rel.lhs());
      const BraidWord rhs(n, rel.rhs());
      expect_eq(r, rho_f(lhs), rho_f(rhs),
                at_n("flat image of " + rel.str(), n));
      expect_eq(r, rho_a(lhs), rho_a(rhs),
                at_n("labeled image of " + rel.str(), n));
    }
  }
  return r;
}

SuiteResult check_tl_restriction(int max_n, std::uint64_t seed, int words,
                                 int max_len) {
  SuiteResult r;
  r.name = "tl-restriction";
  Rng rng(seed);
  std::uniform_int_distribution<int> pick_n(2, std::max(2, max_n));
  std::uniform_int_distribution<int> pick_len(1, max_len);
  for (int k = 0; k < words; ++k) {
    const int n = pick_n(rng);
    const int len = pick_len(rng);
    std::uniform_int_distribution<int> pick_i(1, n - 1);
    VTLElement x_flat = VTLElement::identity(n);
    ATLElement x_arrow = ATLElement::identity(n);
    std::string word = "E-word:";
    for (int l = 0; l < len; ++l) {
      const int i = pick_i(rng);
      word += " " + std::to_string(i);
      x_flat = x_flat * VTLElement::basis(FlatTangle::cup_cap(i, n));
      x_arrow = x_arrow * ATLElement::basis(generator_arrow(ArrowGen::F, i, n));
    }
    const ArrowPoly ta = trace_a(x_arrow);
    const LaurentPoly tf = trace_f(x_flat);
    expect(r, ta.is_laurent(), word + " labeled trace has a zigzag variable: " +
                                   ta.str());
    expect_eq(r, ta.laurent_part(), tf, word + " traces disagree");
  }
  // Parity-labeling homomorphism, exhaustive on small strand counts.
  for (int n = 1; n <= std::min(max_n, 4); ++n) {
    std::vector<FlatTangle> parity;
    for (const auto& e : enumerate_flat(n))
      if (is_parity_tangle(e)) parity.push_back(e);
    for (const auto& e1 : parity) {
      const ArrowTangle a1 = iota_nu(e1);
      for (const auto& e2 : parity) {
        auto [flat_prod, flat_trace] = multiply_flat(e1, e2);
        auto [arrow_prod, arrow_trace] = multiply_arrow(a1, iota_nu(e2));
        expect(r, is_parity_tangle(flat_prod),
               "product of parity tangles not a parity tangle: " + e1.str() +
                   " * " + e2.str());
        expect_eq(r, arrow_prod, iota_nu(flat_prod),
                  "labels of the product disagree with the parity labeling: " +
                      e1.str() + " * " + e2.str());
        bool all_zero = true;
        for (int z : arrow_trace.cycle_zigzags) all_zero = all_zero && z == 0;
        expect(r,
               all_zero && static_cast<int>(arrow_trace.cycle_zigzags.size()) ==
                               flat_trace.cycle_count,
               "cycles of a parity product must all have zeta = 0: " + e1.str() +
                   " * " + e2.str());
      }
      bool closure_zero = true;
      for (int z : closure_zigzags(a1)) closure_zero = closure_zero && z == 0;
      expect(r, closure_zero,
             "closure of a parity labeling must have zeta = 0: " + e1.str());
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult check_markov_invariance(int words, int moves, std::uint64_t seed,
                                    int max_n) {
  SuiteResult r;
  r.name = "markov-invariance";
  Rng rng(seed);
  WordOptions options;
  options.max_strands = max_n;
  options.max_length = 8;
  for (int k = 0; k < words; ++k) {
    const BraidWord w = random_word(rng, options);
    const EquivalentWord eq = random_equivalent(w, rng(), moves);
    const bool f_same = f_polynomial(w) == f_polynomial(eq.word);
    const bool a_same = arrow_polynomial(w) == arrow_polynomial(eq.word);
    r.checks += 2;
    if (!f_same || !a_same) {
      std::string log = "word " + format_braid(w) + " -> " +
                        format_braid(eq.word) + " via";
      for (const auto& m : eq.move_log) log += "\n    " + m;
      r.failures.push_back(std::string(!f_same ? "f" : "arrow") +
                           " polynomial changed under moves: " + log);
    }
  }
  return r;
}

SuiteResult check_oracle_agreement(int words, std::uint64_t seed,
                                   int max_crossings) {
  SuiteResult r;
  r.name = "oracle-agreement";
  Rng rng(seed);
  for (int k = 0; k < words; ++k) {
    WordOptions options;
    options.max_strands = 4;
    options.max_length = 10;
    options.max_crossings = max_crossings;
    // Cycle through mixed, classical-only and virtual-only words.
    if (k % 3 == 1) options.allow_tau = false;
    if (k % 3 == 2) options.allow_sigma = false;
    const BraidWord w = random_word(rng, options);
    expect_eq(r, f_polynomial(w), f_state_sum(w),
              "flat pipeline vs state sum for " + format_braid(w));
    expect_eq(r, arrow_polynomial(w), arrow_state_sum(w),
              "labeled pipeline vs state sum for " + format_braid(w));
  }
  return r;
}

}  // namespace vtl
