#pragma once
// Evidence extraction: turning representation text into positive/negative
// evidence counts.
//
// The default extractor lowercases the text, splits it on runs of
// non-alphanumeric bytes and drops stopwords. Every remaining token is one
// unit of positive evidence; every token the ambiguity lexicon lists with more
// than one sense is additionally one unit of negative evidence.

#include <array>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "polyrep/opinion.hpp"
#include "polyrep/topic.hpp"

namespace polyrep {

// term -> number of senses. File format: one "term<TAB>sense_count" per line;
// blank lines and lines starting with '#' are skipped.
class Lexicon {
public:
    Lexicon() = default;
    // Throws LexiconUnavailable when the file cannot be read or a line is malformed.
    static Lexicon load(const std::filesystem::path& path);
    static Lexicon parse(std::string_view text, const std::string& source = "<memory>");

    void add(std::string term, int senses);
    // 0 for unknown terms.
    int senses(std::string_view term) const;
    bool is_ambiguous(std::string_view term) const { return senses(term) > 1; }
    std::size_t size() const noexcept { return senses_.size(); }

private:
    std::unordered_map<std::string, int> senses_;
};

// File format: one term per line; blank lines and '#' comments are skipped.
class StopwordList {
public:
    StopwordList() = default;
    static StopwordList load(const std::filesystem::path& path);
    static StopwordList parse(std::string_view text);

    void add(std::string term);
    bool contains(std::string_view term) const;
    std::size_t size() const noexcept { return terms_.size(); }

private:
    std::unordered_set<std::string> terms_;
};

// Lowercased alphanumeric tokens of `text`, in order.
std::vector<std::string> tokenize(std::string_view text);

class EvidenceExtractor {
public:
    virtual ~EvidenceExtractor() = default;
    virtual EvidenceCount extract(std::string_view text) const = 0;
};

class LexicalExtractor final : public EvidenceExtractor {
public:
    LexicalExtractor() = default;
    LexicalExtractor(std::shared_ptr<const Lexicon> lexicon,
                     std::shared_ptr<const StopwordList> stopwords);

    EvidenceCount extract(std::string_view text) const override;

private:
    std::shared_ptr<const Lexicon> lexicon_;
    std::shared_ptr<const StopwordList> stopwords_;
};

struct ResourcePaths {
    std::optional<std::filesystem::path> lexicon;
    std::optional<std::filesystem::path> stopwords;
};

// Resource selection for extraction. Entries in per_representation override
// the matching field of `defaults` for that representation only.
//
// File format, one "key = value" per line, '#' starts a comment:
//   lexicon = ambiguity.tsv
//   stopwords = stopwords.txt
//   rep3.lexicon = other.tsv
// Relative paths are resolved against the config file's directory.
struct ExtractorConfig {
    ResourcePaths defaults;
    std::map<int, ResourcePaths> per_representation;

    // Throws ConfigError.
    static ExtractorConfig load(const std::filesystem::path& path);
    static ExtractorConfig parse(std::string_view text, const std::filesystem::path& base_dir);

    ResourcePaths resolved(int representation_index) const;
};

// One extractor per representation index. Resources are loaded once and
// shared read-only between representations that name the same files.
class ExtractorSet {
public:
    // Five LexicalExtractors without lexicon or stopwords.
    ExtractorSet();
    // Throws LexiconUnavailable.
    static ExtractorSet load(const ExtractorConfig& cfg);

    const EvidenceExtractor& for_representation(int index) const;
    void set(int index, std::shared_ptr<const EvidenceExtractor> extractor);

private:
    std::array<std::shared_ptr<const EvidenceExtractor>, kRepresentationCount> extractors_;
};

EvidenceCount extract_evidence(const Topic& topic, int representation_index,
                               const ExtractorSet& extractors);
EvidenceCount extract_evidence(const Topic& topic, int representation_index,
                               const ExtractorConfig& cfg);

// from_evidence(extract_evidence(...), base_rate), owned by "rep<i>@<topic>"
// and about the topic id.
Opinion representation_opinion(const Topic& topic, int representation_index,
                               const ExtractorSet& extractors, double base_rate = 0.5);
Opinion representation_opinion(const Topic& topic, int representation_index,
                               const ExtractorConfig& cfg, double base_rate = 0.5);

}  // namespace polyrep
