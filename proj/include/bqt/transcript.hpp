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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace bqt {

using Json = nlohmann::ordered_json;

inline constexpr const char *kTranscriptSchema = "bqt-transcript/1";

struct TranscriptEvent {
    uint64_t seq;
    std::string type;
    Json payload;
};

/// Append-only event log of one session. Serialized as JSON lines: a header
/// object carrying the schema tag, then one object per event.
class Transcript {
   public:
    Transcript() = default;
    explicit Transcript(Json header);

    const Json &header() const {
        return header_;
    }
    const std::vector<TranscriptEvent> &events() const {
        return events_;
    }

    void append(std::string type, Json payload);

    size_t count(std::string_view type) const;
    /// Index of the first event of `type` matching `pred`, or npos.
    template <typename Pred>
    size_t find(std::string_view type, Pred pred) const {
        for (size_t i = 0; i < events_.size(); ++i) {
            if (events_[i].type == type && pred(events_[i].payload)) {
                return i;
            }
        }
        return npos;
    }
    static constexpr size_t npos = static_cast<size_t>(-1);

    std::string to_jsonl() const;
    /// Throws BqtError(InvalidInput) on a bad schema tag or malformed line.
    static Transcript from_jsonl(const std::string &text);

   private:
    Json header_;
    std::vector<TranscriptEvent> events_;
};

}  // namespace bqt
