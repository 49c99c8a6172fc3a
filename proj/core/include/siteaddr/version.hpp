#ifndef SITEADDR_VERSION_HPP
#define SITEADDR_VERSION_HPP

namespace siteaddr {

inline constexpr const char* version_string = "0.1.0";

}

#endif
