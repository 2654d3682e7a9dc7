#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace itinbench {

/// Record a defect for every key of `j` not in `allowed`. File formats are
/// closed: loaders reject unknown fields instead of ignoring them.
inline void reject_unknown_fields(const nlohmann::ordered_json& j,
                                  std::initializer_list<const char*> allowed,
                                  const std::string& context, std::vector<std::string>& defects) {
    if (!j.is_object()) {
        defects.push_back(context + ": expected a JSON object");
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* a : allowed)
            if (it.key() == a) {
                known = true;
                break;
            }
        if (!known) defects.push_back(context + ": unknown field \"" + it.key() + "\"");
    }
}

}  // namespace itinbench
