// Copyright 2026 The jonesdqc1 Authors
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

#include "jonesdqc1/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>

#include <nlohmann/json.hpp>
#include "jonesdqc1/errors.hpp"

namespace jonesdqc1 {

BraidWord::BraidWord(int strands, std::vector<int> word) : strands_(strands), word_(std::move(word)) {
    if (strands_ < 1) {
        throw DomainError("braid needs at least one strand, got " + std::to_string(strands_));
    }
    for (int g : word_) {
        if (g == 0 || std::abs(g) > strands_ - 1) {
            throw DomainError("generator out of range: " + std::to_string(g) + " (valid 1.." +
                              std::to_string(strands_ - 1) + ")");
        }
    }
}

std::string BraidWord::str() const {
    std::string out;
    for (size_t k = 0; k < word_.size(); k++) {
        if (k) {
            out += ' ';
        }
        out += std::to_string(word_[k]);
    }
    return out;
}

StrandPermutation::StrandPermutation(std::vector<int> image) : image_(std::move(image)) {}

StrandPermutation StrandPermutation::identity(int strands) {
    std::vector<int> image(strands);
    for (int j = 0; j < strands; j++) {
        image[j] = j + 1;
    }
    return StrandPermutation(std::move(image));
}

bool StrandPermutation::is_bijection() const {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 1 || v > size() || seen[v - 1]) {
            return false;
        }
        seen[v - 1] = true;
    }
    return true;
}

std::vector<std::vector<int>> StrandPermutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(image_.size(), false);
    for (int start = 1; start <= size(); start++) {
        if (seen[start - 1]) {
            continue;
        }
        std::vector<int> cycle;
        for (int j = start; !seen[j - 1]; j = image_[j - 1]) {
            seen[j - 1] = true;
            cycle.push_back(j);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

int StrandPermutation::cycle_count() const { return static_cast<int>(cycles().size()); }

namespace {

bool parse_int(std::string_view s, int &out) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
        if (!s.empty() && s.front() == '-') {
            return false;
        }
    }
    if (s.empty()) {
        return false;
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

/// Returns the signed letter, or throws.
int parse_token(std::string_view token, size_t position, int strands) {
    int g = 0;
    bool ok;
    if (!token.empty() && (token.front() == 's' || token.front() == 'S')) {
        std::string_view body = token.substr(1);
        bool inverse = false;
        if (auto caret = body.find('^'); caret != std::string_view::npos) {
            if (body.substr(caret) != "^-1") {
                throw ParseError(ParseError::Kind::syntax, position,
                                 "syntax error at position " + std::to_string(position) + ": bad exponent in token '" +
                                     std::string(token) + "' (only ^-1 is allowed)");
            }
            inverse = true;
            body = body.substr(0, caret);
        }
        ok = !body.empty() && std::isdigit(static_cast<unsigned char>(body.front())) && parse_int(body, g);
        if (ok && inverse) {
            g = -g;
        }
    } else {
        ok = parse_int(token, g);
    }
    if (!ok) {
        throw ParseError(ParseError::Kind::syntax, position,
                         "syntax error at position " + std::to_string(position) + ": unparsable token '" +
                             std::string(token) + "'");
    }
    if (g == 0 || std::abs(g) > strands - 1) {
        throw ParseError(ParseError::Kind::out_of_range, position,
                         "generator out of range: token '" + std::string(token) + "' at position " +
                             std::to_string(position) + " (valid 1.." + std::to_string(strands - 1) + ")");
    }
    return g;
}

}  // namespace

BraidWord parse_braid(std::string_view text, int strands) {
    if (strands < 1) {
        throw DomainError("braid needs at least one strand, got " + std::to_string(strands));
    }
    std::vector<int> word;
    size_t k = 0;
    while (k < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[k]))) {
            k++;
            continue;
        }
        size_t end = k;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) {
            end++;
        }
        word.push_back(parse_token(text.substr(k, end - k), k, strands));
        k = end;
    }
    return BraidWord(strands, std::move(word));
}

BraidWord parse_braid_json(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(ParseError::Kind::syntax, e.byte, std::string("syntax error in braid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("strands") || !j.contains("word") || !j["strands"].is_number_integer() ||
        !j["word"].is_array()) {
        throw ParseError(ParseError::Kind::syntax, 0,
                         "syntax error: braid JSON must be {\"strands\": int, \"word\": [int, ...]}");
    }
    int strands = j["strands"].get<int>();
    std::vector<int> word;
    for (size_t k = 0; k < j["word"].size(); k++) {
        const auto &v = j["word"][k];
        if (!v.is_number_integer()) {
            throw ParseError(ParseError::Kind::syntax, k,
                             "syntax error: word entry " + std::to_string(k) + " is not an integer");
        }
        int g = v.get<int>();
        if (g == 0 || std::abs(g) > strands - 1) {
            throw ParseError(ParseError::Kind::out_of_range, k,
                             "generator out of range: entry " + std::to_string(k) + " = " + std::to_string(g) +
                                 " (valid 1.." + std::to_string(strands - 1) + ")");
        }
        word.push_back(g);
    }
    return BraidWord(strands, std::move(word));
}

std::string braid_to_json(const BraidWord &braid) {
    nlohmann::json j = {{"strands", braid.strands()}, {"word", braid.word()}};
    return j.dump();
}

int writhe(const BraidWord &braid) {
    int w = 0;
    for (int g : braid.word()) {
        w += g > 0 ? 1 : -1;
    }
    return w;
}

StrandPermutation permutation(const BraidWord &braid) {
    // Compose t_{g1} o t_{g2} o ... as functions: apply the last letter first.
    std::vector<int> image(braid.strands());
    for (int j = 1; j <= braid.strands(); j++) {
        int x = j;
        for (auto it = braid.word().rbegin(); it != braid.word().rend(); ++it) {
            int i = std::abs(*it);
            if (x == i) {
                x = i + 1;
            } else if (x == i + 1) {
                x = i;
            }
        }
        image[j - 1] = x;
    }
    return StrandPermutation(std::move(image));
}

std::vector<BraidWord> enumerate_words(int strands, int length) {
    if (length < 0) {
        throw DomainError("word length must be non-negative");
    }
    if (strands < 2 && length > 0) {
        return {};
    }
    std::vector<int> alphabet;
    for (int g = 1; g < strands; g++) {
        alphabet.push_back(g);
        alphabet.push_back(-g);
    }
    std::vector<BraidWord> out;
    std::vector<size_t> digits(length, 0);
    while (true) {
        std::vector<int> word(length);
        for (int k = 0; k < length; k++) {
            word[k] = alphabet[digits[k]];
        }
        out.emplace_back(strands, std::move(word));
        int k = length - 1;
        while (k >= 0 && ++digits[k] == alphabet.size()) {
            digits[k] = 0;
            k--;
        }
        if (k < 0) {
            break;
        }
    }
    return out;
}

std::vector<BraidWord> relation_rewrites(const BraidWord &braid) {
    const auto &w = braid.word();
    std::vector<BraidWord> out;
    std::set<std::vector<int>> seen;
    auto emit = [&](std::vector<int> word) {
        if (seen.insert(word).second) {
            out.emplace_back(braid.strands(), std::move(word));
        }
    };
    for (size_t k = 0; k + 1 < w.size(); k++) {
        if (std::abs(std::abs(w[k]) - std::abs(w[k + 1])) > 1) {
            auto v = w;
            std::swap(v[k], v[k + 1]);
            emit(std::move(v));
        }
    }
    for (size_t k = 0; k + 2 < w.size(); k++) {
        int a = w[k], b = w[k + 1];
        bool same_sign = (a > 0) == (b > 0);
        if (w[k + 2] == a && same_sign && std::abs(std::abs(a) - std::abs(b)) == 1) {
            auto v = w;
            v[k] = b;
            v[k + 1] = a;
            v[k + 2] = b;
            emit(std::move(v));
        }
    }
    return out;
}

}  // namespace jonesdqc1
