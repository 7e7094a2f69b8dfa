/*
   Copyright 2026 The ellrank Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ELLRANK_CACHE_HPP
#define ELLRANK_CACHE_HPP

// Content-addressed result cache: <dir>/<sha256(key)>.json holding
// {"key": key, "value": value}. Needs libcrypto.

#include <json.hpp>
#include <openssl/evp.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

namespace ellrank {

inline std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

class ResultCache
{
    public:
        ResultCache() = default; // disabled
        explicit ResultCache(std::filesystem::path dir) : _dir(std::move(dir))
        {
            std::filesystem::create_directories(*_dir);
        }

        bool enabled() const { return _dir.has_value(); }

        std::filesystem::path path_for(const std::string& key) const { return *_dir / (sha256_hex(key) + ".json"); }

        std::optional<nlohmann::json> get(const std::string& key) const
        {
            if (!_dir)
                return std::nullopt;
            std::ifstream in(path_for(key));
            if (!in)
                return std::nullopt;
            auto doc = nlohmann::json::parse(in, nullptr, false);
            // a hash collision or a torn file reads as a miss
            if (doc.is_discarded() || !doc.is_object() || doc.value("key", "") != key || !doc.contains("value"))
                return std::nullopt;
            return doc["value"];
        }

        void put(const std::string& key, const nlohmann::json& value) const
        {
            if (!_dir)
                return;
            auto target = path_for(key);
            std::ostringstream tag;
            tag << std::this_thread::get_id() << "." << counter()++;
            auto tmp = target;
            tmp += ".tmp." + tag.str();
            {
                std::ofstream out(tmp);
                out << nlohmann::json{{"key", key}, {"value", value}}.dump() << "\n";
                if (!out)
                    throw std::runtime_error("cannot write cache file " + tmp.string());
            }
            std::filesystem::rename(tmp, target);
        }

    private:
        static std::atomic<unsigned long>& counter()
        {
            static std::atomic<unsigned long> c{0};
            return c;
        }

        std::optional<std::filesystem::path> _dir;
};

} // namespace ellrank

#endif
