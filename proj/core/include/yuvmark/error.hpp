/*
Copyright 2026 the yuvmark authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef YUVMARK_ERROR_HPP
#define YUVMARK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace yuvmark {

enum class errc {
    io_failure,
    malformed_header,
    unsupported_maxval,
    truncated_data,
    bad_sample_domain,
    bad_plane_count,
    bad_dimensions,
    non_integer_plane,
    bad_bit_value,
    bad_attack_spec,
    bad_config,
    image_too_small,
    empty_result,
};

const char* errc_name(errc c);

// All recoverable input/precondition failures surface as Error with a
// machine-checkable code; anything else escaping the library is a bug.
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw Error(code, msg);
}

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::io_failure:         return "io failure";
        case errc::malformed_header:   return "malformed header";
        case errc::unsupported_maxval: return "unsupported maxval";
        case errc::truncated_data:     return "truncated data";
        case errc::bad_sample_domain:  return "bad sample domain";
        case errc::bad_plane_count:    return "bad plane count";
        case errc::bad_dimensions:     return "bad dimensions";
        case errc::non_integer_plane:  return "non-integer plane";
        case errc::bad_bit_value:      return "bad bit value";
        case errc::bad_attack_spec:    return "bad attack spec";
        case errc::bad_config:         return "bad config";
        case errc::image_too_small:    return "image too small";
        case errc::empty_result:       return "empty result";
    }
    return "unknown";
}

} // namespace yuvmark

#endif
