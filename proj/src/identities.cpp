#include "ospo/identities.hpp"

#include <stdexcept>

#include "ospo/brauer.hpp"
#include "ospo/characters.hpp"
#include "ospo/symmetric_group.hpp"

namespace ospo {

namespace {

std::shared_ptr<const VarNames> no_vars() { return LaurentPoly::make_vars({}); }

TruncSeries pair_product(int q, int degree, bool diagonal) {
  TruncSeries f = TruncSeries::one(q, degree, no_vars());
  for (int i = 0; i < q; ++i)
    for (int j = diagonal ? i : i + 1; j < q; ++j) f.mul_one_minus_pair(i, j);
  return f;
}

TruncSeries signed_schur_sum(const std::vector<Partition>& family, int q, int degree, bool signed_) {
  TruncSeries s(q, degree, no_vars());
  for (const auto& p : family) {
    if (p.size() > degree) continue;
    TruncSeries t = schur_series(p, q, degree, no_vars());
    if (signed_ && (p.size() / 2) % 2) t = TruncSeries(q, degree, no_vars()) - t;
    s = s + t;
  }
  return s;
}

IdentityReport compare_series(const std::string& name, const TruncSeries& a, const TruncSeries& b) {
  IdentityReport rep(name);
  for (const auto& m : monomials_up_to(a.q(), a.degree())) {
    ++rep.checked;
    if (!(a.coefficient(m) == b.coefficient(m))) {
      std::string e;
      for (int x : m) e += std::to_string(x) + " ";
      rep.fail("coefficient of y^(" + e + ") " + a.coefficient(m).str() + " vs " + b.coefficient(m).str());
    }
  }
  return rep;
}

}  // namespace

IdentityReport verify_littlewood_rho(int q, int degree) {
  return compare_series("littlewood_rho", pair_product(q, degree, true),
                        signed_schur_sum(enumerate_rho(degree), q, degree, true));
}

IdentityReport verify_littlewood_pi(int q, int degree) {
  return compare_series("littlewood_pi", pair_product(q, degree, false),
                        signed_schur_sum(enumerate_pi(degree), q, degree, true));
}

IdentityReport verify_littlewood_even(int q, int degree) {
  TruncSeries f = TruncSeries::one(q, degree, no_vars());
  for (int i = 0; i < q; ++i)
    for (int j = i; j < q; ++j) {
      std::vector<int> y(q, 0);
      ++y[i];
      ++y[j];
      f = f * TruncSeries::geometric(q, degree, no_vars(), y, LaurentPoly(1));
    }
  return compare_series("littlewood_even", f, signed_schur_sum(enumerate_even(degree), q, degree, false));
}

IdentityReport verify_lr_inverse(int max_size) {
  IdentityReport rep("lr_inverse");
  auto parts = partitions_up_to(max_size);
  auto rhos = enumerate_rho(max_size);
  auto evens = enumerate_even(max_size);
  for (const auto& tau : parts)
    for (const auto& lambda : parts) {
      long long total = 0;
      for (const auto& nu : parts) {
        if (!nu.contains(lambda) || !tau.contains(nu)) continue;
        long long a = 0, b = 0;
        for (const auto& rho : rhos)
          if (rho.size() + nu.size() == tau.size()) {
            long long c = lr_coefficient(nu, rho, tau);
            a += (rho.size() / 2) % 2 ? -c : c;
          }
        for (const auto& th : evens)
          if (th.size() + lambda.size() == nu.size()) b += lr_coefficient(lambda, th, nu);
        total += a * b;
      }
      ++rep.checked;
      long long expect = tau == lambda ? 1 : 0;
      if (total != expect)
        rep.fail("tau=" + tau.str() + " lambda=" + lambda.str() + " gives " + std::to_string(total));
    }
  return rep;
}

IdentityReport verify_cauchy(const ModuleData& M, int q, int degree, bool conjugate) {
  CharacterEngine E(M);
  const auto& V = E.vars();
  TruncSeries lhs(q, degree, V.vars);
  for (const auto& lam : partitions_up_to(degree)) {
    if (lam.length() > q) continue;
    TruncSeries s = schur_series(lam, q, degree, V.vars);
    LaurentPoly c = E.hook(conjugate ? lam.conjugate() : lam);
    TruncSeries scaled(q, degree, V.vars);
    for (const auto& [m, v] : s.coefficients()) scaled.add(m, v * c);
    lhs = lhs + scaled;
  }
  TruncSeries rhs = TruncSeries::one(q, degree, V.vars);
  const auto& plus = conjugate ? V.even : V.odd;
  const auto& geo = conjugate ? V.odd : V.even;
  for (int j = 0; j < q; ++j) {
    for (int b : plus) rhs.mul_one_plus(j, V.z[b]);
    for (int b : geo) rhs.mul_geometric(j, V.z[b]);
  }
  return compare_series(conjugate ? "cauchy_conjugate" : "cauchy", lhs, rhs);
}

IdentityReport verify_weighted_trace_powersums(const ModuleData& M, int max_k) {
  IdentityReport rep("trace_powersums");
  CharacterEngine E(M);
  for (int k = 1; k <= max_k; ++k)
    for (int j = 0; 2 * j <= k; ++j)
      for (const auto& mu : partitions_of(k - 2 * j)) {
        auto d = e_pow_gamma(j, mu);
        LaurentPoly lhs = E.weighted_trace(d);
        LaurentPoly rhs = p_bar(mu, E.vars()) * Rat(M.eta()).pow(j);
        ++rep.checked;
        if (!(lhs == rhs))
          rep.fail("k=" + std::to_string(k) + " j=" + std::to_string(j) + " mu=" + mu.str() + ": " + lhs.str() +
                   " vs " + rhs.str());
      }
  return rep;
}

IdentityReport verify_trace_decomposition(const ModuleData& M, int k) {
  int eta = M.eta();
  if (std::abs(eta) <= k) throw std::invalid_argument("the decomposition needs |n-m| > k");
  IdentityReport rep("trace_decomposition");
  CharacterEngine E(M);
  std::vector<Partition> shapes;
  for (int h = 0; 2 * h <= k; ++h)
    for (const auto& lam : partitions_of(k - 2 * h)) shapes.push_back(lam);
  std::map<Partition, LaurentPoly> sc;
  for (const auto& lam : shapes) sc[lam] = E.sc(lam, ScMethod::LR_a);
  for (int j = 0; 2 * j <= k; ++j)
    for (const auto& mu : partitions_of(k - 2 * j)) {
      LaurentPoly lhs = E.weighted_trace(e_pow_gamma(j, mu));
      LaurentPoly rhs = E.vars().zero();
      for (const auto& lam : shapes) {
        if (lam.size() > mu.size()) continue;
        Rat chi = brauer_character(lam.conjugate(), j, mu, Rat(eta));
        if (!chi.is_zero()) rhs.add_scaled(sc[lam], chi);
      }
      ++rep.checked;
      if (!(lhs == rhs))
        rep.fail("j=" + std::to_string(j) + " mu=" + mu.str() + ": " + lhs.str() + " vs " + rhs.str());
    }
  return rep;
}

IdentityReport verify_character_table(int max_k) {
  IdentityReport rep("mn_characters");
  for (int k = 1; k <= max_k; ++k) {
    for (const auto& mu : partitions_of(k)) {
      // p_mu(y_1..y_k) expanded in Schur polynomials
      TruncSeries p = TruncSeries::one(k, k, no_vars());
      for (int part : mu.parts()) {
        TruncSeries f(k, k, no_vars());
        for (int i = 0; i < k; ++i) {
          std::vector<int> e(k, 0);
          e[i] = part;
          f.add(e, LaurentPoly(1));
        }
        p = p * f;
      }
      for (const auto& lam : partitions_of(k)) {
        ++rep.checked;
        Rat expect = schur_coefficient(p, lam.parts()).constant_term();
        long long got = sym_character(lam, mu);
        if (expect != Rat(got))
          rep.fail("chi^" + lam.str() + "(" + mu.str() + ") = " + std::to_string(got) + " but power sums give " +
                   expect.str());
      }
    }
  }
  return rep;
}

IdentityReport verify_hook_powersums(const ModuleData& M, int max_size) {
  IdentityReport rep("hook_power_sums");
  CharacterEngine E(M);
  for (int k = 1; k <= max_size; ++k)
    for (const auto& lam : partitions_of(k)) {
      LaurentPoly plain = E.vars().zero(), barred = E.vars().zero();
      for (const auto& mu : partitions_of(k)) {
        Rat w(1, z_mu(mu));
        plain.add_scaled(p_hook(mu, E.vars()), w * Rat(sym_character(lam, mu)));
        barred.add_scaled(p_bar(mu, E.vars()), w * Rat(sym_character(lam.conjugate(), mu)));
      }
      LaurentPoly s = E.hook(lam);
      ++rep.checked;
      if (!(s == plain)) rep.fail("plain expansion fails at " + lam.str());
      if (!(s == barred)) rep.fail("barred expansion fails at " + lam.str());
    }
  return rep;
}

}  // namespace ospo
