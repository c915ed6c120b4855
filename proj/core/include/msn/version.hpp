#ifndef MSN_VERSION_HPP
#define MSN_VERSION_HPP

namespace msn {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace msn

#endif  // MSN_VERSION_HPP
