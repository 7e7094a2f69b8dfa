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

#ifndef ELLRANK_REPORT_HPP
#define ELLRANK_REPORT_HPP

#include <string>
#include <vector>

namespace ellrank {

struct IdentityCheck
{
    std::string name;
    bool holds = false;
    std::string detail;
};

struct IdentityReport
{
    std::string suite;
    std::vector<IdentityCheck> checks;

    bool all_hold() const
    {
        for (const auto& c : checks)
            if (!c.holds)
                return false;
        return !checks.empty();
    }

    void add(std::string name, bool holds, std::string detail = {})
    {
        checks.push_back({std::move(name), holds, std::move(detail)});
    }

    void append(const IdentityReport& other)
    {
        for (const auto& c : other.checks)
            checks.push_back({other.suite + ": " + c.name, c.holds, c.detail});
    }
};

} // namespace ellrank

#endif
