#ifndef DCG_ERRORS_HPP
#define DCG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcg {

// Malformed input: bad graph spec, invalid measure, unparsable file.
// The CLI maps this to exit code 2.
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation was asked outside its domain (t outside [0,1],
// vertex index out of range, mismatched product structure).
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Oracle refused to run because the instance is too large
// (geodesic enumeration past its cap).
class cap_exceeded_error : public std::runtime_error {
public:
    cap_exceeded_error(const std::string& what, std::size_t count, std::size_t cap)
        : std::runtime_error(what), count(count), cap(cap) {}
    std::size_t count;
    std::size_t cap;
};

// The entropy derivative hit log(0): the path leaves the support of the
// starting measure in the -inf direction. Carries the offending edge.
class derivative_undefined_error : public std::runtime_error {
public:
    derivative_undefined_error(const std::string& what, int from, int to)
        : std::runtime_error(what), edge_from(from), edge_to(to) {}
    int edge_from;
    int edge_to;
};

} // namespace dcg

#endif
