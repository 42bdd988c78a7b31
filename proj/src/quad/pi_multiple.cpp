#include "polyzeta/quad/pi_multiple.hpp"

#include "polyzeta/errors.hpp"

namespace polyzeta {

PiMultiple sqrt_weight_integral_exact(const EvenPolynomial& p) { return {sqrt_weight_ratio(p.coeffs())}; }

PiMultiple sqrt_weight_integral_exact(const std::vector<Rational>& even_coeffs) {
  return {sqrt_weight_ratio(even_coeffs)};
}

std::vector<Check> pi_ratio_suite(int n_max) {
  if (n_max < 1) throw DomainError("pi_ratio_suite needs n_max >= 1");
  std::vector<Check> out;
  for (Family f : {Family::Xi, Family::Lambda}) {
    std::vector<Rational> ratios;
    for (int n = 1; n <= n_max; ++n) {
      const Rational r = sqrt_weight_integral_exact(build(f, n)).ratio;
      Check c = make_check("pi_ratio_positive", n, r.sign() > 0);
      c.with_family(f).with_exact(r);
      out.push_back(std::move(c));
      ratios.push_back(r);
    }
    int first_bad = 0;
    for (std::size_t i = 1; i < ratios.size(); ++i) {
      if (!(ratios[i] < ratios[i - 1]) && first_bad == 0) first_bad = static_cast<int>(i) + 1;
    }
    Check dec = make_check("pi_ratio_decreasing", std::nullopt, first_bad == 0);
    dec.with_family(f).note = "n = 1.." + std::to_string(n_max) +
                              (first_bad ? ", first increase at n = " + std::to_string(first_bad) : std::string());
    out.push_back(std::move(dec));
  }
  return out;
}

}  // namespace polyzeta
