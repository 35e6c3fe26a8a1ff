// Copyright 2026 The bqt-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bqt/transcript.hpp"

#include <sstream>

#include "bqt/state_vector.hpp"

namespace bqt {

Transcript::Transcript(Json header) : header_(std::move(header)) {
    header_["schema"] = kTranscriptSchema;
}

void Transcript::append(std::string type, Json payload) {
    events_.push_back({events_.size() + 1, std::move(type), std::move(payload)});
}

size_t Transcript::count(std::string_view type) const {
    size_t n = 0;
    for (const auto &e : events_) {
        n += e.type == type;
    }
    return n;
}

std::string Transcript::to_jsonl() const {
    std::string out = header_.dump() + "\n";
    for (const auto &e : events_) {
        Json line;
        line["seq"] = e.seq;
        line["event"] = e.type;
        line["payload"] = e.payload;
        out += line.dump();
        out += '\n';
    }
    return out;
}

Transcript Transcript::from_jsonl(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    Transcript t;
    bool have_header = false;
    try {
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            Json j = Json::parse(line);
            if (!have_header) {
                if (j.value("schema", "") != kTranscriptSchema) {
                    throw BqtError(ErrorKind::InvalidInput, "unsupported transcript schema");
                }
                t.header_ = std::move(j);
                have_header = true;
                continue;
            }
            const auto seq = j.at("seq").get<uint64_t>();
            if (seq != t.events_.size() + 1) {
                throw BqtError(ErrorKind::InvalidInput, "transcript seq out of order");
            }
            t.events_.push_back({seq, j.at("event").get<std::string>(), j.at("payload")});
        }
    } catch (const nlohmann::json::exception &e) {
        throw BqtError(ErrorKind::InvalidInput, std::string("malformed transcript: ") + e.what());
    }
    if (!have_header) {
        throw BqtError(ErrorKind::InvalidInput, "empty transcript");
    }
    return t;
}

}  // namespace bqt
