#pragma once

#include <array>
#include <cmath>

// Auxiliary real functions used by the inequality certificates. Each is a
// template over the scalar type so the identical expression tree can be
// evaluated at two precisions. Powers (m - x)^x are only ever formed as
// x log(m - x). All logarithms are natural.

namespace pratio::aux {

/// log f_m(x) = x log(m - x).
template <class R>
R log_f(const R& m, const R& x) {
    using std::log;
    return x * log(m - x);
}

/// f_n'(x) / f_n(x).
template <class R>
R g(const R& n, const R& x) {
    using std::log;
    return log(n - x) - n / (n - x) + R(1);
}

template <class R>
R h(const R& x) {
    using std::log;
    using std::sqrt;
    const R L = log(x);
    const R sL = sqrt(L);
    return log(L) / sL * (R(1) + R(1) / sL);
}

template <class R>
R p(const R& x) {
    using std::log;
    using std::sqrt;
    const R L = log(x);
    const R sL = sqrt(L);
    return R(14) / 1000 * x / sL + log(x / L) + x / L + R(11) / 10 * x / (L * sL) -
           R(40) * sL * (L - R(1)) + R(44);
}

/// The three bracketed groups of p'(x); p'(x) is their sum plus 1/x + 20/(x sqrt(log x)).
template <class R>
std::array<R, 3> p_prime_brackets(const R& x) {
    using std::log;
    using std::sqrt;
    const R L = log(x);
    const R sL = sqrt(L);
    return {R(14) / 1000 / sL - R(7) / 1000 / (L * sL),
            R(1) / L - R(1) / (L * L) - R(165) / 100 / (L * L * sL) - R(60) * sL / x,
            R(11) / 10 / (L * sL) - R(1) / (x * L)};
}

template <class R>
R p_prime(const R& x) {
    using std::log;
    using std::sqrt;
    const auto b = p_prime_brackets(x);
    return b[0] + b[1] + b[2] + R(1) / x + R(20) / (x * sqrt(log(x)));
}

template <class R>
R q(const R& x) {
    using std::log;
    const R L = log(x);
    const R LL = log(L);
    return (LL + LL / L - R(1) / (L * L) - R(2)) * x + (R(100) * L - R(199)) / 99 * L -
           R(100) * L * L * L / 99;
}

template <class R>
R q_prime(const R& x) {
    using std::log;
    const R L = log(x);
    const R LL = log(L);
    return LL - R(2) + R(200) * L / (R(99) * x) + LL / L + R(1) / L + R(2) / (L * L * L) -
           LL / (L * L) - R(199) / (R(99) * x) - R(100) * L * L / (R(33) * x);
}

/// The three small terms bounded by 0.1 in the estimate of q'(x).
template <class R>
R q_small_terms(const R& x) {
    using std::log;
    const R L = log(x);
    return log(L) / (L * L) + R(199) / (R(99) * x) + R(100) * L * L / (R(33) * x);
}

template <class R>
R big_a(const R& n) {
    using std::log;
    using std::sqrt;
    const R L = log(n);
    return R(1) + n / L * (R(1) + R(1) / sqrt(L));
}

template <class R>
R big_b(const R& n) {
    using std::log;
    const R L = log(n);
    return n / L * (R(1) + R(1) / L) - R(2);
}

}  // namespace pratio::aux
