#ifndef BP_BIGINT_HPP
#define BP_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace bp {

// Group orders are kept exact; iterated wreath products overflow 64 bits
// long before they stop being interesting.
using BigInt = boost::multiprecision::cpp_int;

} // namespace bp

#endif
