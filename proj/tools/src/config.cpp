// Copyright 2026 The mzx Authors
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

#include "mzx/tools/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "mzx/elements.hpp"

namespace mzx::tools {

namespace {

struct Entry {
    std::string value;
    std::size_t line = 0;
};

std::string_view trim(std::string_view s) {
    const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\r'; };
    const auto b = std::find_if(s.begin(), s.end(), not_space);
    const auto e = std::find_if(s.rbegin(), s.rend(), not_space).base();
    return b < e ? std::string_view(&*b, static_cast<std::size_t>(e - b)) : std::string_view{};
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

class Parser {
  public:
    Parser(std::string_view source, std::map<std::string, Entry> entries)
        : source_(source), entries_(std::move(entries)) {}

    [[noreturn]] void fail(std::string_view key, std::string_view message) const {
        std::ostringstream os;
        os << source_;
        if (auto it = entries_.find(std::string(key)); it != entries_.end()) {
            os << ':' << it->second.line;
        }
        os << ": " << key << ": " << message;
        throw ConfigError(os.str());
    }

    const Entry *find(std::string_view key) const {
        auto it = entries_.find(std::string(key));
        return it == entries_.end() ? nullptr : &it->second;
    }

    const Entry &require(std::string_view key) const {
        if (const Entry *e = find(key)) return *e;
        fail(key, "missing required setting");
    }

    double number(std::string_view key, std::string_view text) const {
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
            fail(key, "expected a finite number, got '" + std::string(text) + "'");
        }
        return value;
    }

    std::uint64_t unsigned_integer(std::string_view key) const {
        const std::string_view text = require(key).value;
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || ptr != text.data() + text.size()) {
            fail(key, "expected a non-negative integer, got '" + std::string(text) + "'");
        }
        return value;
    }

    bool boolean(std::string_view key) const {
        const std::string_view text = require(key).value;
        if (text == "true" || text == "yes" || text == "1") return true;
        if (text == "false" || text == "no" || text == "0") return false;
        fail(key, "expected true or false, got '" + std::string(text) + "'");
    }

    double angle(std::string_view key, std::string_view text, bool degrees) const {
        auto strip = [&](std::string_view suffix) {
            if (text.size() > suffix.size() && text.ends_with(suffix)) {
                text = trim(text.substr(0, text.size() - suffix.size()));
                return true;
            }
            return false;
        };
        if (strip("deg")) degrees = true;
        else if (strip("rad")) degrees = false;
        const double v = number(key, text);
        return degrees ? v * kPi / 180.0 : v;
    }

    std::vector<double> angles(std::string_view key, bool degrees) const {
        const std::string_view text = require(key).value;
        std::vector<double> out;
        if (text.starts_with("sweep")) {
            const std::string_view rest = trim(text.substr(5));
            if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
                fail(key, "expected sweep(start, stop, steps)");
            }
            const auto args = split(rest.substr(1, rest.size() - 2), ',');
            if (args.size() != 3) fail(key, "sweep takes exactly three arguments");
            const double start = angle(key, args[0], degrees);
            const double stop = angle(key, args[1], degrees);
            const double steps = number(key, args[2]);
            if (steps < 1.0 || steps != std::floor(steps) || steps > 1e7) {
                fail(key, "sweep steps must be an integer >= 1");
            }
            const auto n = static_cast<std::size_t>(steps);
            out.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                out.push_back(n == 1 ? start
                                     : start + (stop - start) * static_cast<double>(i) /
                                                   static_cast<double>(n - 1));
            }
            return out;
        }
        for (std::string_view part : split(text, ',')) {
            if (part.empty()) fail(key, "empty value in list");
            out.push_back(angle(key, part, degrees));
        }
        return out;
    }

  private:
    std::string_view source_;
    std::map<std::string, Entry> entries_;
};

constexpr std::string_view kKnownKeys[] = {"preparation", "phi",     "alpha",  "mode",
                                           "shots",       "seed",    "output", "degrees",
                                           "block_size",  "threads"};

}  // namespace

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::analytic: return "analytic";
        case Mode::montecarlo: return "montecarlo";
        case Mode::both: return "both";
    }
    return "?";
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "analytic") return Mode::analytic;
    if (text == "montecarlo") return Mode::montecarlo;
    if (text == "both") return Mode::both;
    return std::nullopt;
}

ExperimentConfig parse_config(std::string_view text, std::string_view source) {
    std::map<std::string, Entry> entries;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    for (std::string raw; std::getline(in, raw);) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        auto where = [&] { return std::string(source) + ":" + std::to_string(line_no) + ": "; };
        if (eq == std::string_view::npos) {
            throw ConfigError(where() + "expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (std::find(std::begin(kKnownKeys), std::end(kKnownKeys), key) == std::end(kKnownKeys)) {
            throw ConfigError(where() + key + ": unknown setting");
        }
        if (value.empty()) {
            throw ConfigError(where() + key + ": empty value");
        }
        if (entries.contains(key)) {
            throw ConfigError(where() + key + ": duplicate setting (first on line " +
                              std::to_string(entries[key].line) + ")");
        }
        entries.emplace(key, Entry{std::string(value), line_no});
    }

    const Parser p(source, std::move(entries));
    ExperimentConfig cfg;

    const auto prep = parse_preparation(p.require("preparation").value);
    if (!prep) p.fail("preparation", "expected product or entangled");
    cfg.preparation = *prep;

    if (p.find("degrees")) cfg.degrees = p.boolean("degrees");
    cfg.phi = p.angles("phi", cfg.degrees);
    cfg.alpha = p.angles("alpha", cfg.degrees);

    if (const Entry *e = p.find("mode")) {
        const auto mode = parse_mode(e->value);
        if (!mode) p.fail("mode", "expected analytic, montecarlo or both");
        cfg.mode = *mode;
    }
    if (p.find("seed")) cfg.seed = p.unsigned_integer("seed");
    if (p.find("shots")) cfg.shots = p.unsigned_integer("shots");
    if (cfg.mode != Mode::analytic && cfg.shots == 0) {
        p.fail("shots", "must be >= 1 when mode is " + std::string(to_string(cfg.mode)));
    }
    if (const Entry *e = p.find("output")) cfg.output = e->value;
    if (p.find("block_size")) {
        cfg.block_size = p.unsigned_integer("block_size");
        if (cfg.block_size == 0) p.fail("block_size", "must be >= 1");
    }
    if (p.find("threads")) cfg.threads = static_cast<unsigned>(p.unsigned_integer("threads"));
    return cfg;
}

ExperimentConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError(path + ": cannot open config file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

}  // namespace mzx::tools
