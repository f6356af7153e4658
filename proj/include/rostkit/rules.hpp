#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace rostkit::rules {

/// Named integer parameters visible to a rule (n, m, p, l, ...).
using Bindings = std::map<std::string, long>;

/// Evaluates an integer rule such as "(n+1)/4" or "log2floor(n-1, 2*i+1)".
///
/// Operators: + - * / (floor division) % ^, comparisons (< <= > >= == !=)
/// yielding 0/1, parentheses. Functions: val(p, x) (p-adic valuation),
/// log2floor(a, b) = floor(log2(a/b)), log2ceil(x), min, max, divides(a, b).
long eval_int(std::string_view rule, const Bindings& vars);

/// Evaluates a sequence rule, e.g. "range(1, n) -- [p^val(p, n)] ++ [2]".
///
/// Terms: [e, ...], range(a, b[, step]) (inclusive), seq(expr, from, to)
/// with `i` bound to each index, prime_divisors(x). `++` concatenates and
/// `--` removes one occurrence of each listed value (an error when absent).
std::vector<long> eval_seq(std::string_view rule, const Bindings& vars);

}  // namespace rostkit::rules
