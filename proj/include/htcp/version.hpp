#ifndef HTCP_VERSION_HPP
#define HTCP_VERSION_HPP

namespace htcp {

inline constexpr const char* kToolkitName = "htcp";
inline constexpr const char* kToolkitVersion = "0.1.0";

}  // namespace htcp

#endif  // HTCP_VERSION_HPP
