#include "bezier_ifs/verify.hpp"

#include "bezier_ifs/decasteljau.hpp"
#include "bezier_ifs/errors.hpp"
#include "bezier_ifs/ifs.hpp"
#include "bezier_ifs/orbits.hpp"
#include "bezier_ifs/scaling.hpp"
#include "bezier_ifs/takagi.hpp"

#include <chrono>
#include <optional>
#include <sstream>

namespace bezier_ifs {

Perturb parse_perturb(const std::string& name) {
  if (name.empty() || name == "none") return Perturb::None;
  if (name == "L") return Perturb::L;
  if (name == "R") return Perturb::R;
  if (name == "M0") return Perturb::M0;
  if (name == "M1") return Perturb::M1;
  if (name == "Z") return Perturb::Z;
  throw UsageError("unknown perturbation target '" + name + "' (expected none, L, R, M0, M1 or Z)");
}

std::string to_string(Perturb p) {
  switch (p) {
    case Perturb::None: return "none";
    case Perturb::L: return "L";
    case Perturb::R: return "R";
    case Perturb::M0: return "M0";
    case Perturb::M1: return "M1";
    case Perturb::Z: return "Z";
  }
  return "?";
}

ComplexD random_dyadic_t(std::mt19937_64& rng) {
  const int e = std::uniform_int_distribution<int>(1, 8)(rng);
  std::uniform_int_distribution<std::int64_t> k(-(std::int64_t{1} << (e + 1)), std::int64_t{1} << (e + 1));
  return {Dyadic::ratio(k(rng), static_cast<std::uint32_t>(e)), Dyadic::ratio(k(rng), static_cast<std::uint32_t>(e))};
}

Complex random_complex_t(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(0.0, 1.0);
  std::uniform_real_distribution<double> im(-0.8660254037844386, 0.8660254037844386);
  for (;;) {
    const Complex t(re(rng), im(rng));
    if (is_hyperbolic(t)) return t;
  }
}

namespace {

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <class S>
S perturbation() {
  if constexpr (is_exact_v<S>) {
    return S(Dyadic::pow2(-30));
  } else {
    return S(1e-6);
  }
}

template <class S>
std::string t_string(const S& t) {
  if constexpr (is_exact_v<S>) {
    return t.to_string();
  } else {
    std::ostringstream os;
    os.precision(17);
    os << t;
    return os.str();
  }
}

template <class S>
std::optional<std::string> first_mismatch(const Matrix<S>& a, const Matrix<S>& b, double tol) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!scalar_close(a(i, j), b(i, j), tol)) return "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
  return std::nullopt;
}

CheckResult finish(CheckResult r, const Timer& timer) {
  r.seconds = timer.seconds();
  return r;
}

template <class S>
CheckResult triangular_forms_impl(int n_max, std::span<const S> ts, double tol, Perturb perturb) {
  Timer timer;
  CheckResult r{is_exact_v<S> ? "triangular_forms_exact" : "triangular_forms_double", true, "", 0.0};
  std::size_t cases = 0;
  for (int n = 1; n <= n_max; ++n) {
    const auto c = conjugacy(n);
    const Matrix<S> s = to_scalar<S>(c.S);
    const Matrix<S> sinv = to_scalar<S>(c.Sinv);
    for (const S& t : ts) {
      auto lr = build_LR(n, t);
      if (perturb == Perturb::L) lr.L(n, 0) += perturbation<S>();
      if (perturb == Perturb::R) lr.R(0, n) += perturbation<S>();
      const Matrix<S> d = sinv * lr.L * s;
      const Matrix<S> tt = sinv * lr.R * s;
      if (auto where = first_mismatch(d, closed_form_D(n, t), tol)) {
        r.pass = false;
        r.detail = "Sinv L(t) S = diag(t^i) fails at " + *where + ", n=" + std::to_string(n) + ", t=" + t_string(t);
        return finish(r, timer);
      }
      if (auto where = first_mismatch(tt, closed_form_T(n, t), tol)) {
        r.pass = false;
        r.detail = "Sinv R(t) S = [C(n-i,n-j) t^(j-i) (1-t)^i] fails at " + *where + ", n=" + std::to_string(n) +
                   ", t=" + t_string(t);
        return finish(r, timer);
      }
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
          if (!scalar_close(tt(i, j), double_sum_T(n, i, j, t), tol)) {
            r.pass = false;
            r.detail = "double-sum form of Sinv R(t) S fails at (" + std::to_string(i) + "," + std::to_string(j) +
                       "), n=" + std::to_string(n) + ", t=" + t_string(t);
            return finish(r, timer);
          }
      ++cases;
    }
  }
  r.detail = std::to_string(cases) + " (n, t) cases, n <= " + std::to_string(n_max) +
             (is_exact_v<S> ? ", exact equality" : ", tol " + std::to_string(tol));
  return finish(r, timer);
}

template <class S>
CheckResult t_recurrences_impl(int n_max, std::span<const S> ts, double tol) {
  Timer timer;
  CheckResult r{is_exact_v<S> ? "t_recurrences_exact" : "t_recurrences_double", true, "", 0.0};
  std::size_t cases = 0;
  for (const S& t : ts) {
    Matrix<S> prev = triangular_forms(1, t).T;
    for (int n = 1; n <= n_max; ++n) {
      Matrix<S> next = triangular_forms(n + 1, t).T;
      if (auto why = corollary_violation(prev, next, t, tol)) {
        r.pass = false;
        r.detail = *why + ", n=" + std::to_string(n) + ", t=" + t_string(t);
        return finish(r, timer);
      }
      prev = std::move(next);
      ++cases;
    }
  }
  r.detail = std::to_string(cases) + " (n, t) cases, n <= " + std::to_string(n_max);
  return finish(r, timer);
}

template <class S>
CheckResult type_iv_impl(int n_max, std::span<const S> ts, double tol, Perturb perturb) {
  Timer timer;
  CheckResult r{is_exact_v<S> ? "type_iv_witnesses_exact" : "type_iv_witnesses_double", true, "", 0.0};
  std::size_t cases = 0;
  for (int n = 1; n <= n_max; ++n) {
    const auto z0 = type_iv_fixed_point0<S>(n);
    const auto z1 = type_iv_fixed_point1<S>(n);
    for (const S& t : ts) {
      auto maps = type_iv_ifs(n, t);
      Matrix<S> m0 = maps.M0.matrix();
      Matrix<S> m1 = maps.M1.matrix();
      if (perturb == Perturb::M0) m0(n, n) += perturbation<S>();
      if (perturb == Perturb::M1) m1(n, 0) += perturbation<S>();
      const AffineMapH<S> f0(m0, Rep::IV, 0.0);
      const AffineMapH<S> f1(m1, Rep::IV, 0.0);
      const std::string where = ", n=" + std::to_string(n) + ", t=" + t_string(t);
      if (!is_fixed_point(f0, std::span<const S>(z0), tol)) {
        r.pass = false;
        r.detail = "M0 z0* = z0* with z0* = (1, 0, ..., 0) fails" + where;
        return finish(r, timer);
      }
      if (!is_fixed_point(f1, std::span<const S>(z1), tol)) {
        r.pass = false;
        r.detail = "M1 z1* = z1* with z1* = (C(n,i))_i fails" + where;
        return finish(r, timer);
      }
      const auto a = f0.apply(std::span<const S>(z1));
      const auto b = f1.apply(std::span<const S>(z0));
      for (int i = 0; i <= n; ++i) {
        const S want = from_int<S>(binom(n, i)) * ipow(t, static_cast<unsigned>(i));
        if (!scalar_close(a[i], want, tol) || !scalar_close(b[i], want, tol)) {
          r.pass = false;
          r.detail = "overlap point M0 z1* = M1 z0* = (C(n,i) t^i)_i fails at i=" + std::to_string(i) + where;
          return finish(r, timer);
        }
      }
      ++cases;
    }
  }
  r.detail = std::to_string(cases) + " (n, t) cases, n <= " + std::to_string(n_max);
  return finish(r, timer);
}

std::vector<std::uint8_t> word_bits(std::uint64_t w, int len) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) bits[k] = static_cast<std::uint8_t>((w >> (len - 1 - k)) & 1U);
  return bits;
}

DigitSeq random_word(std::mt19937_64& rng, int len) {
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(len));
  for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
  return DigitSeq(std::move(bits));
}

}  // namespace

CheckResult check_triangular_forms(int n_max, std::span<const ComplexD> ts, Perturb perturb) {
  return triangular_forms_impl<ComplexD>(n_max, ts, 0.0, perturb);
}
CheckResult check_triangular_forms(int n_max, std::span<const Complex> ts, double tol, Perturb perturb) {
  return triangular_forms_impl<Complex>(n_max, ts, tol, perturb);
}
CheckResult check_t_recurrences(int n_max, std::span<const ComplexD> ts) {
  return t_recurrences_impl<ComplexD>(n_max, ts, 0.0);
}
CheckResult check_t_recurrences(int n_max, std::span<const Complex> ts, double tol) {
  return t_recurrences_impl<Complex>(n_max, ts, tol);
}
CheckResult check_type_iv_witnesses(int n_max, std::span<const ComplexD> ts, Perturb perturb) {
  return type_iv_impl<ComplexD>(n_max, ts, 0.0, perturb);
}
CheckResult check_type_iv_witnesses(int n_max, std::span<const Complex> ts, double tol, Perturb perturb) {
  return type_iv_impl<Complex>(n_max, ts, tol, perturb);
}

CheckResult check_orbit_word_product(int n, Perturb perturb) {
  Timer timer;
  CheckResult r{"orbit_word_product", true, "", 0.0};
  if (n < 0 || n > 20) throw ResourceError("orbit word product: 2^" + std::to_string(n) + " words is too many");
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t w = 0; w < count; ++w) {
    const DigitSeq d(word_bits(w, n));
    IBetaPoly z = z_poly(d, static_cast<std::size_t>(n));
    if (perturb == Perturb::Z && w == count - 1) z += IBetaPoly(Dyadic::pow2(-30));
    const IBetaPoly oracle = z_word_product(d, static_cast<std::size_t>(n));
    if (!(z == oracle)) {
      r.pass = false;
      r.detail = "orbit recursion Z_n = word product applied to 0 fails for d=" + d.to_string() + ": " +
                 z.to_string() + " vs " + oracle.to_string();
      return finish(r, timer);
    }
  }
  r.detail = std::to_string(count) + " words of length " + std::to_string(n) + ", exact equality";
  return finish(r, timer);
}

namespace {

std::optional<std::string> bound_violation(const DigitSeq& d, std::size_t n) {
  const IBetaPoly z = z_poly(d, n);
  for (std::size_t k = 0; k < z.coeffs().size(); ++k) {
    if (!(z.coeff(k).abs() < Dyadic::pow2(static_cast<int>(k) + 1))) {
      return "|a_k,n| < 2^(k+1) fails: k=" + std::to_string(k) + ", n=" + std::to_string(n) +
             ", d=" + d.to_string() + ", a=" + z.coeff(k).to_string();
    }
  }
  return std::nullopt;
}

}  // namespace

CheckResult check_coefficient_bound(int n_max, int random_words, int random_length, std::mt19937_64& rng) {
  Timer timer;
  CheckResult r{"coefficient_bound", true, "", 0.0};
  std::size_t words = 0;
  for (int len = 0; len <= n_max; ++len) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w, ++words) {
      if (auto why = bound_violation(DigitSeq(word_bits(w, len)), static_cast<std::size_t>(len))) {
        r.pass = false;
        r.detail = *why;
        return finish(r, timer);
      }
    }
  }
  for (int i = 0; i < random_words; ++i, ++words) {
    if (auto why = bound_violation(random_word(rng, random_length), static_cast<std::size_t>(random_length))) {
      r.pass = false;
      r.detail = *why;
      return finish(r, timer);
    }
  }
  r.detail = std::to_string(words) + " words (all of length <= " + std::to_string(n_max) + ", " +
             std::to_string(random_words) + " random of length " + std::to_string(random_length) + "), all k";
  return finish(r, timer);
}

CheckResult check_takagi_increments(int m_max) {
  Timer timer;
  CheckResult r{"takagi_increments", true, "", 0.0};
  std::size_t cases = 0;
  for (int n = 0; n <= m_max; ++n) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      const DigitSeq d(word_bits(w, n));
      for (int m = std::max(n, 1); m <= m_max; ++m, ++cases) {
        try {
          tak1_increment(d, static_cast<std::size_t>(n), static_cast<std::size_t>(m));
        } catch (const IdentityViolation& e) {
          r.pass = false;
          r.detail = e.what();
          return finish(r, timer);
        }
      }
    }
  }
  r.detail = std::to_string(cases) + " (d, n, m) cases, n <= m <= " + std::to_string(m_max) + ", exact";
  return finish(r, timer);
}

namespace {

std::optional<std::string> a1_violation(const DigitSeq& d, std::size_t n) {
  const IBetaPoly z = z_poly(d, n);
  const Dyadic want = takagi(z.coeff(0)).ldexp(1);
  if (z.coeff(1) == want) return std::nullopt;
  return "a_1,n = 2 T(a_0,n) fails for d=" + d.to_string() + ", n=" + std::to_string(n) + ": " +
         z.coeff(1).to_string() + " vs " + want.to_string();
}

}  // namespace

CheckResult check_a1_takagi(int n_max, int random_words, int random_length, std::mt19937_64& rng) {
  Timer timer;
  CheckResult r{"a1_equals_2T_a0", true, "", 0.0};
  std::size_t words = 0;
  for (int len = 0; len <= n_max; ++len) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w, ++words) {
      if (auto why = a1_violation(DigitSeq(word_bits(w, len)), static_cast<std::size_t>(len))) {
        r.pass = false;
        r.detail = *why;
        return finish(r, timer);
      }
    }
  }
  for (int i = 0; i < random_words; ++i, ++words) {
    if (auto why = a1_violation(random_word(rng, random_length), static_cast<std::size_t>(random_length))) {
      r.pass = false;
      r.detail = *why;
      return finish(r, timer);
    }
  }
  r.detail = std::to_string(words) + " words, exact";
  return finish(r, timer);
}

CheckResult check_degree_m_component(int m_max, int len_max) {
  Timer timer;
  CheckResult r{"degree_m_component", true, "", 0.0};
  std::size_t cases = 0;
  for (int len = 0; len <= len_max; ++len) {
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << len); ++w) {
      const DigitSeq d(word_bits(w, len));
      const IBetaPoly z = z_poly(d, static_cast<std::size_t>(len));
      for (int m = 1; m <= m_max; ++m, ++cases) {
        if (!(degree_m_first_component(m, d, static_cast<std::size_t>(len)) == IBetaPoly(m) * z)) {
          r.pass = false;
          r.detail = "first component of the degree-m word product = m Z_n fails for m=" + std::to_string(m) +
                     ", d=" + d.to_string();
          return finish(r, timer);
        }
      }
    }
  }
  r.detail = std::to_string(cases) + " (m, word) cases, m <= " + std::to_string(m_max) + ", length <= " +
             std::to_string(len_max) + ", exact";
  return finish(r, timer);
}

CheckResult check_vm_samples(int m_max, int grid, int n) {
  Timer timer;
  CheckResult r{"vm_samples", true, "", 0.0};
  const std::int64_t count = std::int64_t{1} << grid;
  std::size_t cases = 0;
  for (int m = 1; m <= m_max; ++m) {
    for (std::int64_t j = 0; j <= count; ++j, ++cases) {
      const Dyadic alpha = Dyadic::ratio(j, static_cast<std::uint32_t>(grid));
      const Dyadic want = takagi(alpha) * Dyadic(2 * m);
      const Dyadic got = vector_field_vm_exact(alpha, m, static_cast<std::size_t>(n));
      const double x = (alpha * Dyadic(m)).to_double();
      const Complex got_d = vector_field_vm(x, m, static_cast<std::size_t>(n));
      if (!(got == want) || got_d.real() != 0.0 || got_d.imag() != want.to_double()) {
        r.pass = false;
        r.detail = "v_m(x) = 2 m i T(x/m) fails at m=" + std::to_string(m) + ", x/m=" + alpha.to_string() +
                   ": " + got.to_string() + " vs " + want.to_string();
        return finish(r, timer);
      }
    }
  }
  r.detail = std::to_string(cases) + " samples, m <= " + std::to_string(m_max) + ", grid 2^-" +
             std::to_string(grid) + ", order n=" + std::to_string(n);
  return finish(r, timer);
}

CheckResult check_control_fixed_points(std::span<const Complex> controls, Complex t, double tol) {
  Timer timer;
  CheckResult r{"control_fixed_points", true, "", 0.0};
  try {
    const auto ifs = build_ifs_from_controls(controls, t);
    const std::size_t n = controls.size() - 1;
    const auto p0 = ifs.P.row(0);
    const auto pn = ifs.P.row(n);
    if (!is_fixed_point(ifs.maps.M0, std::span<const Complex>(p0), tol)) {
      r.pass = false;
      r.detail = "first row of P is not fixed by P^-1 L(t) P";
    } else if (!is_fixed_point(ifs.maps.M1, std::span<const Complex>(pn), tol)) {
      r.pass = false;
      r.detail = "last row of P is not fixed by P^-1 R(t) P";
    } else {
      r.detail = "degree " + std::to_string(n) + ", tol " + std::to_string(tol);
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = e.what();
  }
  return finish(r, timer);
}

std::vector<CheckResult> run_verify(const VerifyOptions& o) {
  if (o.n < 1 || o.n > 20) throw UsageError("verify: n must be in [1, 20]");
  if (o.word_length < 1 || o.word_length > 16) throw UsageError("verify: word length must be in [1, 16]");
  std::mt19937_64 rng(o.seed);
  std::vector<CheckResult> out;
  if (o.exact) {
    std::vector<ComplexD> ts;
    for (int i = 0; i < o.samples; ++i) ts.push_back(random_dyadic_t(rng));
    out.push_back(check_triangular_forms(o.n, ts, o.perturb));
    out.push_back(check_t_recurrences(o.n, ts));
    out.push_back(check_type_iv_witnesses(o.n, ts, o.perturb));
  } else {
    std::vector<Complex> ts;
    for (int i = 0; i < o.samples; ++i) ts.push_back(random_complex_t(rng));
    out.push_back(check_triangular_forms(o.n, ts, o.tol, o.perturb));
    out.push_back(check_t_recurrences(o.n, ts, o.tol));
    out.push_back(check_type_iv_witnesses(o.n, ts, o.tol, o.perturb));
  }
  const Complex fig_controls[] = {{-1, 1}, {0, 1}, {2, 1}};
  out.push_back(check_control_fixed_points(fig_controls, {0.4, -0.55}, 1e-9));
  out.push_back(check_orbit_word_product(o.word_length, o.perturb));
  out.push_back(check_coefficient_bound(o.word_length, 100, 2 * o.word_length, rng));
  out.push_back(check_takagi_increments(o.word_length));
  out.push_back(check_a1_takagi(o.word_length, 100, 2 * o.word_length, rng));
  out.push_back(check_degree_m_component(std::min(o.n, 4), std::min(o.word_length, 8)));
  out.push_back(check_vm_samples(std::min(o.n, 4), std::min(o.word_length, 8), 16));
  return out;
}

std::string format_check(const CheckResult& r) {
  return std::string(r.pass ? "PASS " : "FAIL ") + r.id + ": " + r.detail;
}

}  // namespace bezier_ifs
