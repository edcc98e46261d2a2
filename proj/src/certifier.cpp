#include "pratio/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "pratio/aux_functions.hpp"

namespace pratio {

namespace {

namespace mp = boost::multiprecision;

// IEEE binary128 layout; expression templates off so the aux templates
// return concrete values.
using Extended = mp::number<mp::cpp_bin_float<113, mp::digit_base_2>, mp::et_off>;

constexpr double kAgreementFactor = 10.0;

template <class Margin>
Certificate certify(std::string target, long long n, Margin&& margin) {
    Certificate c;
    c.target = std::move(target);
    c.n = n;
    const double lo = margin(1.0);
    const Extended hi = margin(Extended(1));
    c.margin_lo = lo;
    c.margin_hi = hi.convert_to<double>();

    const Extended discrepancy = mp::abs(hi - Extended(lo));
    const bool finite = std::isfinite(lo) && mp::isfinite(hi);
    if (!finite || lo == 0.0 || hi == 0 || (lo > 0.0) != (hi > 0) ||
        !(mp::abs(hi) > kAgreementFactor * discrepancy)) {
        c.verdict = Verdict::indeterminate;
    } else {
        c.verdict = hi > 0 ? Verdict::holds : Verdict::fails;
    }
    return c;
}

void require_order(CertTarget t, long long n) {
    if (n < min_order(t))
        throw std::invalid_argument(std::string(to_string(t)) + " needs n >= " +
                                    std::to_string(min_order(t)) + " (got " + std::to_string(n) +
                                    ")");
}

std::string at(const std::string& base, long long x) { return base + "@x=" + std::to_string(x); }

}  // namespace

long long min_order(CertTarget t) { return t == CertTarget::lemma23 ? 16 : 5000; }

std::vector<Certificate> check_lemma23(long long n) {
    require_order(CertTarget::lemma23, n);
    std::vector<Certificate> out;
    out.push_back(certify("lemma23.g_positive", n, [n](auto one) {
        using R = decltype(one);
        using std::log;
        using std::sqrt;
        const R nn(n);
        const R L = log(nn);
        return aux::g(nn, nn - nn / L * (R(1) + R(1) / sqrt(L)));
    }));
    out.push_back(certify("lemma23.g_negative", n, [n](auto one) {
        using R = decltype(one);
        using std::log;
        const R nn(n);
        const R L = log(nn);
        return R(-aux::g(nn, nn - nn / L * (R(1) + R(1) / L)));
    }));
    for (long long quarter = 1; quarter <= 3; ++quarter) {
        const long long x = n * quarter / 4;
        out.push_back(certify(at("lemma23.g_decreasing", x), n, [n, x](auto one) {
            using R = decltype(one);
            const R nn(n);
            const R xx(x);
            const R step = nn / 100;
            return R(aux::g(nn, xx) - aux::g(nn, xx + step));
        }));
    }
    return out;
}

std::vector<Certificate> check_appendix_a(long long n) {
    require_order(CertTarget::appendix_a, n);
    std::vector<Certificate> out;
    out.push_back(certify("appendixA.sqrt_chain", n, [n](auto one) {
        using R = decltype(one);
        using std::log;
        using std::sqrt;
        const R L = log(R(n));
        return R(sqrt(L) / 2 - log(L) + R(1));
    }));
    out.push_back(certify("appendixA.loglog_2.125", n, [n](auto one) {
        using R = decltype(one);
        using std::log;
        return R(log(log(R(n))) - R(17) / 8);
    }));
    out.push_back(certify("appendixA.min_at_4", n, [](auto one) {
        using R = decltype(one);
        using std::log;
        return R(R(3) - log(R(16)));
    }));
    return out;
}

std::vector<Certificate> check_appendix_b(long long n) {
    require_order(CertTarget::appendix_b, n);
    std::vector<Certificate> out;
    out.push_back(certify("appendixB.h_at_5000", n, [](auto one) {
        using R = decltype(one);
        return R(R(986) / 1000 - aux::h(R(5000)));
    }));
    out.push_back(certify("appendixB.h", n, [n](auto one) {
        using R = decltype(one);
        return R(R(986) / 1000 - aux::h(R(n)));
    }));
    out.push_back(certify("appendixB.A_logA", n, [n](auto one) {
        using R = decltype(one);
        using std::log;
        using std::sqrt;
        const R nn(n);
        const R L = log(nn);
        const R a = aux::big_a(nn);
        return R(a * log(a) - (nn + R(14) / 1000 * nn / sqrt(L) + log(nn / L)));
    }));
    out.push_back(certify("appendixB.p_at_5000", n, [](auto one) {
        using R = decltype(one);
        return aux::p(R(5000));
    }));
    out.push_back(certify("appendixB.p", n, [n](auto one) {
        using R = decltype(one);
        return aux::p(R(n));
    }));
    const auto samples = n == 5000 ? std::vector<long long>{5000} : log_spaced(5000, n, 5);
    for (long long x : samples) {
        for (int b = 0; b < 3; ++b) {
            out.push_back(certify(at("appendixB.p_prime_bracket" + std::to_string(b + 1), x), n,
                                  [x, b](auto one) {
                                      using R = decltype(one);
                                      return aux::p_prime_brackets(R(x))[b];
                                  }));
        }
    }
    out.push_back(certify("appendixB.inequality6", n, [n](auto one) {
        using R = decltype(one);
        using std::log;
        using std::sqrt;
        const R nn(n);
        const R L = log(nn);
        const R sL = sqrt(L);
        const R lhs = aux::log_f(nn, nn - R(1) - nn / L * (R(1) + R(11) / 10 / sL));
        const R rhs = aux::log_f(R(nn - 2), nn - R(3) - nn / L * (R(1) + R(1) / sL));
        return R(rhs - lhs);
    }));
    return out;
}

std::vector<Certificate> check_appendix_c(long long n) {
    require_order(CertTarget::appendix_c, n);
    std::vector<Certificate> out;
    out.push_back(certify("appendixC.small_terms_0.1", n, [n](auto one) {
        using R = decltype(one);
        return R(R(1) / 10 - aux::q_small_terms(R(n)));
    }));
    out.push_back(certify("appendixC.q_at_5000", n, [](auto one) {
        using R = decltype(one);
        return aux::q(R(5000));
    }));
    out.push_back(certify("appendixC.q", n, [n](auto one) {
        using R = decltype(one);
        return aux::q(R(n));
    }));
    out.push_back(certify("appendixC.loglog_2.1", n, [n](auto one) {
        using R = decltype(one);
        using std::log;
        return R(log(log(R(n))) - R(21) / 10);
    }));
    out.push_back(certify("appendixC.inequality7", n, [n](auto one) {
        using R = decltype(one);
        using std::log;
        const R nn(n);
        const R L = log(nn);
        const R lhs = aux::log_f(nn, nn - R(1) - nn / L * (R(1) - R(1) / L));
        const R rhs = aux::log_f(R(nn - 2), nn - nn / L * (R(1) + R(1) / L));
        return R(rhs - lhs);
    }));
    out.push_back(certify("appendixC.B_logB", n, [n](auto one) {
        using R = decltype(one);
        using std::log;
        const R nn(n);
        const R L = log(nn);
        const R lhs = nn / L * (R(1) + R(1) / L) * (L + R(1) / L - log(L));
        const R rhs = (R(1) - L * L / (R(99) / 100 * nn)) * (nn - nn / L * (R(1) - R(1) / L) - R(1));
        return R(rhs - lhs);
    }));
    return out;
}

std::vector<Certificate> check_target(CertTarget t, long long n) {
    switch (t) {
        case CertTarget::lemma23: return check_lemma23(n);
        case CertTarget::appendix_a: return check_appendix_a(n);
        case CertTarget::appendix_b: return check_appendix_b(n);
        case CertTarget::appendix_c: return check_appendix_c(n);
    }
    throw std::invalid_argument("unknown certificate target");
}

Certificate check_inequality5(long long n, long long k, long long j) {
    if (k < 2 || j < 2 || k > n - 2 || j > n - 2)
        throw std::invalid_argument("inequality5 needs 2 <= k, j <= n - 2");
    return certify("inequality5", n, [n, k, j](auto one) {
        using R = decltype(one);
        using std::log;
        return R(R(k - 1) * log(R(n - k + 1)) - R(j - 1) * log(R(n - j - 1)));
    });
}

SweepSummary sweep(CertTarget t, std::span<const long long> n_values, int threads) {
    if (n_values.empty()) throw std::invalid_argument("sweep needs at least one n");
    for (long long n : n_values) require_order(t, n);

    const int count = static_cast<int>(n_values.size());
    std::vector<std::vector<Certificate>> per_n(count);
    threads = std::clamp(threads, 1, count);
    if (threads == 1) {
        for (int i = 0; i < count; ++i) per_n[i] = check_target(t, n_values[i]);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                for (int i = w; i < count; i += threads) per_n[i] = check_target(t, n_values[i]);
            });
    }

    SweepSummary summary;
    for (auto& certs : per_n) {
        for (auto& c : certs) {
            switch (c.verdict) {
                case Verdict::holds: ++summary.holds; break;
                case Verdict::fails: ++summary.fails; break;
                case Verdict::indeterminate: ++summary.indeterminate; break;
            }
            summary.certificates.push_back(std::move(c));
        }
    }
    return summary;
}

std::vector<long long> log_spaced(long long lo, long long hi, int count) {
    if (count < 1 || lo < 1 || hi < lo) throw std::invalid_argument("log_spaced: bad range");
    if (count == 1) return {lo};
    std::vector<long long> out;
    const double a = std::log(static_cast<double>(lo));
    const double b = std::log(static_cast<double>(hi));
    for (int i = 0; i < count; ++i) {
        if (i == 0) {
            out.push_back(lo);
        } else if (i == count - 1) {
            out.push_back(hi);
        } else {
            out.push_back(std::llround(std::exp(a + (b - a) * i / (count - 1))));
        }
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "?";
}

const char* to_string(CertTarget t) {
    switch (t) {
        case CertTarget::lemma23: return "lemma23";
        case CertTarget::appendix_a: return "appendixA";
        case CertTarget::appendix_b: return "appendixB";
        case CertTarget::appendix_c: return "appendixC";
    }
    return "?";
}

CertTarget parse_cert_target(std::string_view name) {
    for (auto t : {CertTarget::lemma23, CertTarget::appendix_a, CertTarget::appendix_b,
                   CertTarget::appendix_c})
        if (name == to_string(t)) return t;
    throw std::invalid_argument("unknown certificate target '" + std::string(name) + "'");
}

}  // namespace pratio
