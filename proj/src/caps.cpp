#include "regula/caps.hpp"

#include <cstdlib>
#include <string>

namespace regula {

Caps default_caps() {
    Caps caps;
    if (const char* env = std::getenv("REGULA_ELEMENT_CAP")) {
        try {
            const auto value = std::stoull(env);
            if (value > 0) caps.element_cap = value;
        } catch (const std::exception&) {
            // malformed values fall back to the default
        }
    }
    return caps;
}

}  // namespace regula
