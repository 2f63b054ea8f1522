#pragma once

/**
 * @file config.hpp
 * @brief Run configuration: enumeration guards, default series order,
 * parallelism width and output precision, loadable from JSON.
 *
 * {
 *   "guards": {"max_n_unrestricted": 11, "max_n_restricted": 14, "qsym_max_n": 8},
 *   "order": 12,
 *   "parallelism": 1,
 *   "precision": "exact"
 * }
 *
 * Every key is optional. Unknown keys are rejected.
 */

#include <fstream>
#include <string>

#include "json.hpp"

#include "bdes/error.hpp"
#include "bdes/permutation.hpp"
#include "bdes/series.hpp"

namespace bdes {

struct Config {
    Guards guards;
    int qsym_max_n = 8;
    int order = kDefaultOrder;
    int parallelism = 1;  // accepted for compatibility; all work runs on one thread
    std::string precision = "exact";

    void validate() const {
        if (guards.max_n_unrestricted < 1 || guards.max_n_restricted < 1 || qsym_max_n < 1)
            throw InvalidInput("config: guards must be positive");
        if (order < 0) throw InvalidInput("config: order must be non-negative");
        if (parallelism < 1) throw InvalidInput("config: parallelism must be at least 1");
        if (precision != "exact") throw InvalidInput("config: precision '" + precision + "' is not supported, only 'exact'");
    }

    static Config from_json(const nlohmann::json& j) {
        Config c;
        if (!j.is_object()) throw InvalidInput("config: top level must be an object");
        auto get_int = [](const nlohmann::json& node, const char* key, int& dst) {
            if (!node.contains(key)) return;
            if (!node[key].is_number_integer()) throw InvalidInput(std::string("config: '") + key + "' must be an integer");
            dst = node[key].get<int>();
        };
        for (const auto& [key, value] : j.items()) {
            if (key == "guards") {
                if (!value.is_object()) throw InvalidInput("config: 'guards' must be an object");
                for (const auto& [g, unused] : value.items())
                    if (g != "max_n_unrestricted" && g != "max_n_restricted" && g != "qsym_max_n")
                        throw InvalidInput("config: unknown guard '" + g + "'");
                get_int(value, "max_n_unrestricted", c.guards.max_n_unrestricted);
                get_int(value, "max_n_restricted", c.guards.max_n_restricted);
                get_int(value, "qsym_max_n", c.qsym_max_n);
            } else if (key == "order") {
                get_int(j, "order", c.order);
            } else if (key == "parallelism") {
                get_int(j, "parallelism", c.parallelism);
            } else if (key == "precision") {
                if (!value.is_string()) throw InvalidInput("config: 'precision' must be a string");
                c.precision = value.get<std::string>();
            } else {
                throw InvalidInput("config: unknown key '" + key + "'");
            }
        }
        c.validate();
        return c;
    }

    static Config load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw InvalidInput("config: cannot open '" + path + "'");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::parse_error& e) {
            throw InvalidInput(std::string("config: ") + e.what());
        }
        return from_json(j);
    }
};

}  // namespace bdes
