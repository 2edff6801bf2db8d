#pragma once

#define ACSCERT_VERSION_STRING "0.1.0"

namespace acs {
inline const char* version() { return ACSCERT_VERSION_STRING; }
}
