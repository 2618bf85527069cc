#ifndef MODK_ERRORS_HPP
#define MODK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modk {

// Thrown when a guaranteed invariant breaks at runtime. Reaching one of
// these is a defect in this library, not a usage error; the CLI maps it
// to exit code 3 (usage errors throw std::invalid_argument, exit code 2).
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline void internal_check(bool ok, const std::string& what)
{
    if (!ok)
        throw internal_error(what);
}

} // namespace modk

#endif
