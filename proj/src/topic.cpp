#include "polyrep/topic.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>

#include "polyrep/error.hpp"

namespace polyrep {

namespace {

constexpr std::string_view kTopicHeader = "Topic:";
constexpr std::string_view kSectionPrefix = "Representation ";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Bytes >= 0x80 count as word characters so UTF-8 letters stay inside tokens.
bool is_word_byte(char c) {
    const auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || std::isalnum(u) != 0;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

bool is_blank(std::string_view text) {
    for (char c : text) {
        if (!is_space(c)) return false;
    }
    return true;
}

// Returns the section number and the remainder of the line when `line` is a
// section header.
std::optional<std::pair<int, std::string_view>> section_header(std::string_view line) {
    if (!line.starts_with(kSectionPrefix)) return std::nullopt;
    std::size_t pos = kSectionPrefix.size();
    int number = 0;
    std::size_t digits = 0;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos])) && digits < 3) {
        number = number * 10 + (line[pos] - '0');
        ++pos;
        ++digits;
    }
    if (digits == 0 || pos >= line.size() || line[pos] != ':') return std::nullopt;
    return std::make_pair(number, line.substr(pos + 1));
}

std::string to_lower(std::string_view text) {
    std::string out(text);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

std::string normalize_whitespace(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(c);
    }
    return out;
}

std::vector<std::string> split_keywords(std::string_view field) {
    std::vector<std::string> keywords;
    std::size_t start = 0;
    while (start <= field.size()) {
        std::size_t end = field.find(',', start);
        if (end == std::string_view::npos) end = field.size();
        std::string_view kw = field.substr(start, end - start);
        while (!kw.empty() && !is_word_byte(kw.front())) kw.remove_prefix(1);
        while (!kw.empty() && !is_word_byte(kw.back())) kw.remove_suffix(1);
        if (!kw.empty()) keywords.push_back(to_lower(normalize_whitespace(kw)));
        start = end + 1;
    }
    return keywords;
}

Topic Topic::make(std::string id, std::array<std::string, kRepresentationCount> representations) {
    id = normalize_whitespace(id);
    if (id.empty()) throw MalformedTopic("topic has no id");
    Topic t;
    t.id_ = std::move(id);
    for (std::size_t i = 0; i < representations.size(); ++i) {
        t.representations_[i] = normalize_whitespace(representations[i]);
    }
    t.keywords_ = split_keywords(t.representations_[kRepresentationCount - 1]);
    if (t.keywords_.empty()) {
        throw MalformedTopic("topic '" + t.id_ + "': Representation 5 has no keywords");
    }
    return t;
}

const std::string& Topic::representation(int index) const {
    if (index < 1 || index > kRepresentationCount) {
        throw std::out_of_range("representation index " + std::to_string(index) + " not in 1..5");
    }
    return representations_[static_cast<std::size_t>(index - 1)];
}

Observer Observer::make(const Topic& topic, int representation_index) {
    if (representation_index < 1 || representation_index > kRepresentationCount) {
        throw std::out_of_range("representation index " + std::to_string(representation_index) +
                                " not in 1..5");
    }
    return {observer_id(topic.id(), representation_index), topic.id(), representation_index};
}

std::string observer_id(const std::string& topic_id, int representation_index) {
    return "rep" + std::to_string(representation_index) + "@" + topic_id;
}

Topic parse_topic(std::string_view text, const std::string& default_id) {
    std::string id = default_id;
    std::array<std::optional<std::string>, kRepresentationCount> sections;
    std::optional<std::size_t> current;
    bool seen_topic_header = false;

    const auto lines = split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const std::string_view line = lines[n];
        if (line.starts_with(kTopicHeader)) {
            if (seen_topic_header || current) {
                throw MalformedTopic("line " + std::to_string(n + 1) +
                                     ": unexpected Topic header inside a topic");
            }
            seen_topic_header = true;
            id = normalize_whitespace(line.substr(kTopicHeader.size()));
            continue;
        }
        if (auto header = section_header(line)) {
            const int number = header->first;
            const std::string label = "Representation " + std::to_string(number);
            if (number < 1 || number > kRepresentationCount) {
                throw MalformedTopic("line " + std::to_string(n + 1) + ": unknown section " + label);
            }
            const auto slot = static_cast<std::size_t>(number - 1);
            if (sections[slot]) {
                throw MalformedTopic("line " + std::to_string(n + 1) + ": duplicated section " +
                                     label);
            }
            sections[slot] = std::string(header->second);
            current = slot;
            continue;
        }
        if (current) {
            *sections[*current] += '\n';
            *sections[*current] += line;
        } else if (!is_blank(line)) {
            throw MalformedTopic("line " + std::to_string(n + 1) +
                                 ": text before the first Representation section");
        }
    }

    std::array<std::string, kRepresentationCount> reps;
    for (std::size_t i = 0; i < sections.size(); ++i) {
        if (!sections[i]) {
            throw MalformedTopic("missing section Representation " + std::to_string(i + 1));
        }
        reps[i] = std::move(*sections[i]);
    }
    return Topic::make(std::move(id), std::move(reps));
}

std::vector<Topic> parse_topics(std::string_view text, const std::string& default_id) {
    std::vector<Topic> topics;
    const auto lines = split_lines(text);

    // Byte offsets of each "Topic:" line.
    std::vector<std::size_t> starts;
    for (const auto line : lines) {
        if (line.starts_with(kTopicHeader)) {
            starts.push_back(static_cast<std::size_t>(line.data() - text.data()));
        }
    }

    const std::size_t first = starts.empty() ? text.size() : starts.front();
    if (!is_blank(text.substr(0, first))) {
        topics.push_back(parse_topic(text.substr(0, first), default_id));
    }
    for (std::size_t i = 0; i < starts.size(); ++i) {
        const std::size_t end = i + 1 < starts.size() ? starts[i + 1] : text.size();
        topics.push_back(parse_topic(text.substr(starts[i], end - starts[i]), default_id));
    }
    return topics;
}

std::string serialize_topic(const Topic& topic) {
    std::string out = std::string(kTopicHeader) + " " + topic.id() + "\n";
    for (int i = 1; i <= kRepresentationCount; ++i) {
        out += std::string(kSectionPrefix) + std::to_string(i) + ": " + topic.representation(i) + "\n";
    }
    return out;
}

}  // namespace polyrep
