#ifndef ENL_VENDOR_NLOHMANN_JSON_FORWARD
#define ENL_VENDOR_NLOHMANN_JSON_FORWARD

#include "../../vendor/json.hpp"

#endif
