#ifndef QFANO_INTEGERS_HPP
#define QFANO_INTEGERS_HPP

#include <cstdint>
#include <boost/multiprecision/cpp_int.hpp>

namespace qfano {

// Exact signed integer of unbounded size. Every coefficient in the library
// is one of these; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

// binomial(n, k) with the usual convention: 0 for k < 0 or k > n.
inline Int binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int c = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        c *= n - i;
        c /= i + 1; // exact: c is binomial(n, i+1) times integer factors
    }
    return c;
}

} // namespace qfano

#endif
