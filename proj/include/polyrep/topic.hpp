#pragma once
// Information-need topics with five textual representations, and the
// observers that stand for those representations.
//
// Topic text format (UTF-8):
//
//   Topic: 001                      optional; one per topic in a multi-topic file
//   Representation 1: free text...  section headers start at column 0
//   Representation 2: ...
//   ...
//   Representation 5: keyword, multiword keyword, ...
//
// Section text runs until the next header; whitespace is collapsed.

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace polyrep {

inline constexpr int kRepresentationCount = 5;

// Index of each representation within a topic.
enum class RepresentationKind : int {
    Looking = 1,     // what the user is looking for
    Why = 2,         // the work task behind the need
    Background = 3,  // the user's current knowledge
    IdealAnswer = 4,
    Keywords = 5,
};

class Topic {
public:
    // representations[i] holds representation i+1. Text is whitespace-normalized.
    // Throws MalformedTopic when the id is empty or the keyword field yields no
    // keywords.
    static Topic make(std::string id, std::array<std::string, kRepresentationCount> representations);

    const std::string& id() const noexcept { return id_; }
    // index in 1..5; throws std::out_of_range otherwise.
    const std::string& representation(int index) const;
    const std::array<std::string, kRepresentationCount>& representations() const noexcept {
        return representations_;
    }
    // Lowercased keywords of representation 5, in order.
    const std::vector<std::string>& keywords() const noexcept { return keywords_; }

    bool operator==(const Topic&) const = default;

private:
    Topic() = default;
    std::string id_;
    std::array<std::string, kRepresentationCount> representations_;
    std::vector<std::string> keywords_;
};

struct Observer {
    std::string id;
    std::string topic;
    int representation_index = 0;

    // Throws std::out_of_range when index is not in 1..5.
    static Observer make(const Topic& topic, int representation_index);
};

// "rep<i>@<topic-id>"
std::string observer_id(const std::string& topic_id, int representation_index);

// Collapses whitespace runs to one space and trims.
std::string normalize_whitespace(std::string_view text);

// Splits a keyword field on commas; each keyword is lowercased and stripped of
// surrounding punctuation and whitespace. Empty keywords are dropped.
std::vector<std::string> split_keywords(std::string_view field);

// Parses one topic. A leading "Topic: <id>" line sets the id, otherwise
// default_id is used. Throws MalformedTopic naming the first missing or
// duplicated section.
Topic parse_topic(std::string_view text, const std::string& default_id = {});

// Parses a file holding zero or more topics separated by "Topic:" lines. Text
// without any "Topic:" line is a single topic named default_id. Blank input
// yields no topics.
std::vector<Topic> parse_topics(std::string_view text, const std::string& default_id = {});

std::string serialize_topic(const Topic& topic);

}  // namespace polyrep
