#ifndef QFANO_VERSION_HPP
#define QFANO_VERSION_HPP

namespace qfano {

// Bumping the version invalidates every cached CLI result.
inline constexpr const char* kVersion = "0.1.0";

} // namespace qfano

#endif
