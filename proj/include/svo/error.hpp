#ifndef SVO_ERROR_HPP
#define SVO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace svo {

/// Bad user input: malformed files, out-of-range vertices, violated preconditions.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A self-check of the exact arithmetic failed. Always a bug, never bad input.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void check_internal(bool condition, const std::string& what) {
    if (!condition) throw internal_error(what);
}

}  // namespace svo

#endif  // SVO_ERROR_HPP
