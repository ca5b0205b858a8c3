// Copyright 2026 The loopmesh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "loopmesh/format.h"

#include <cctype>
#include <charconv>
#include <cmath>

namespace loopmesh {

std::string format_real(double value) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        return "nan";
    }
    return std::string(buf, end);
}

std::optional<double> parse_real(std::string_view text) {
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return std::nullopt;
    }
    double value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
        return std::nullopt;
    }
    return value;
}

std::optional<std::complex<double>> parse_complex(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
        text = text.substr(1, text.size() - 2);
    }
    if (text.empty()) {
        return std::nullopt;
    }
    if (text.back() != 'j' && text.back() != 'i') {
        auto re = parse_real(text);
        if (!re) {
            return std::nullopt;
        }
        return std::complex<double>(*re, 0.0);
    }
    text.remove_suffix(1);
    // The imaginary part starts at the last sign that is not an exponent sign.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = text.size(); k-- > 1;) {
        char c = text[k];
        char prev = text[k - 1];
        if ((c == '+' || c == '-') && prev != 'e' && prev != 'E') {
            split = k;
            break;
        }
    }
    std::string_view re_text = split == std::string_view::npos ? std::string_view() : text.substr(0, split);
    std::string_view im_text = split == std::string_view::npos ? text : text.substr(split);
    double re = 0;
    if (!re_text.empty()) {
        auto parsed = parse_real(re_text);
        if (!parsed) {
            return std::nullopt;
        }
        re = *parsed;
    }
    double im = 0;
    if (im_text == "" || im_text == "+") {
        im = 1;
    } else if (im_text == "-") {
        im = -1;
    } else {
        auto parsed = parse_real(im_text);
        if (!parsed) {
            return std::nullopt;
        }
        im = *parsed;
    }
    return std::complex<double>(re, im);
}

std::string format_complex(std::complex<double> value) {
    std::string out = format_real(value.real());
    if (!std::signbit(value.imag())) {
        out += '+';
    }
    out += format_real(value.imag());
    out += 'j';
    return out;
}

}  // namespace loopmesh
