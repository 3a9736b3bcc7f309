/*
 * Copyright 2025-2026 the cheatbot authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace cheatbot {

enum class ErrorKind {
    parameter,  // bad construction parameters (family args, k < 1, ...)
    input,      // malformed files, disconnected graphs, illegal starts
    budget,     // state-space or memory budget exceeded
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_parameter(const std::string& msg) { throw Error(ErrorKind::parameter, msg); }
[[noreturn]] inline void fail_input(const std::string& msg) { throw Error(ErrorKind::input, msg); }
[[noreturn]] inline void fail_budget(const std::string& msg) { throw Error(ErrorKind::budget, msg); }

}  // namespace cheatbot
