#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pratio {

enum class Verdict { holds, fails, indeterminate };

/**
 * One inequality evaluated at one point. The margin is oriented so that a
 * positive value means the inequality holds. It is computed twice, in
 * 53-bit doubles and in 113-bit software floats over the same expression.
 * A verdict other than `indeterminate` is issued only when both agree in
 * sign and |margin_hi| > 10 |margin_hi - margin_lo|.
 */
struct Certificate {
    std::string target;
    long long n = 0;
    Verdict verdict = Verdict::indeterminate;
    double margin_lo = 0.0;
    double margin_hi = 0.0;
    int bits_lo = 53;
    int bits_hi = 113;
};

enum class CertTarget { lemma23, appendix_a, appendix_b, appendix_c };

/// Hypothesis on n for a target: 16 for lemma23, 5000 otherwise.
long long min_order(CertTarget t);

// Each throws std::invalid_argument when n is below the target's hypothesis.

/// [0]: g > 0 at n - (n/log n)(1 + 1/sqrt(log n)); [1]: g < 0 at
/// n - (n/log n)(1 + 1/log n); then g decreasing at n/4, n/2, 3n/4.
std::vector<Certificate> check_lemma23(long long n);
std::vector<Certificate> check_appendix_a(long long n);
std::vector<Certificate> check_appendix_b(long long n);
std::vector<Certificate> check_appendix_c(long long n);
std::vector<Certificate> check_target(CertTarget t, long long n);

/// (n-k+1)^{k-1} > (n-j-1)^{j-1} in log form. Needs 2 <= k, j <= n-2.
Certificate check_inequality5(long long n, long long k, long long j);

struct SweepSummary {
    std::vector<Certificate> certificates;
    int holds = 0;
    int fails = 0;
    int indeterminate = 0;
};

/// Validates every n first; output order follows n_values.
SweepSummary sweep(CertTarget t, std::span<const long long> n_values, int threads = 1);

/// `count` integers rounded from a geometric progression lo..hi inclusive.
std::vector<long long> log_spaced(long long lo, long long hi, int count);

const char* to_string(Verdict v);
const char* to_string(CertTarget t);
CertTarget parse_cert_target(std::string_view name);

}  // namespace pratio
