#include "polyrep/extractor.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "polyrep/error.hpp"

namespace polyrep {

namespace {

bool is_word_byte(char c) {
    const auto u = static_cast<unsigned char>(c);
    return u >= 0x80 || std::isalnum(u) != 0;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::optional<std::string> slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t start = 0;
    std::size_t number = 1;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        fn(number++, text.substr(start, end - start));
        start = end + 1;
    }
}

}  // namespace

Lexicon Lexicon::load(const std::filesystem::path& path) {
    auto text = slurp(path);
    if (!text) throw LexiconUnavailable("cannot read lexicon '" + path.string() + "'");
    return parse(*text, path.string());
}

Lexicon Lexicon::parse(std::string_view text, const std::string& source) {
    Lexicon lex;
    for_each_line(text, [&](std::size_t number, std::string_view raw) {
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') return;
        const auto tab = line.find('\t');
        const auto fail = [&] {
            throw LexiconUnavailable(source + ":" + std::to_string(number) +
                                     ": expected 'term<TAB>sense_count'");
        };
        if (tab == std::string_view::npos) fail();
        const std::string_view term = trim(line.substr(0, tab));
        const std::string_view count = trim(line.substr(tab + 1));
        int senses = 0;
        auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), senses);
        if (term.empty() || ec != std::errc{} || ptr != count.data() + count.size() || senses < 0) {
            fail();
        }
        lex.add(std::string(term), senses);
    });
    return lex;
}

void Lexicon::add(std::string term, int senses) { senses_[lower(term)] = senses; }

int Lexicon::senses(std::string_view term) const {
    auto it = senses_.find(std::string(term));
    return it == senses_.end() ? 0 : it->second;
}

StopwordList StopwordList::load(const std::filesystem::path& path) {
    auto text = slurp(path);
    if (!text) throw LexiconUnavailable("cannot read stopword list '" + path.string() + "'");
    return parse(*text);
}

StopwordList StopwordList::parse(std::string_view text) {
    StopwordList list;
    for_each_line(text, [&](std::size_t, std::string_view raw) {
        const std::string_view line = trim(raw);
        if (!line.empty() && line.front() != '#') list.add(std::string(line));
    });
    return list;
}

void StopwordList::add(std::string term) { terms_.insert(lower(term)); }

bool StopwordList::contains(std::string_view term) const {
    return terms_.count(std::string(term)) != 0;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && !is_word_byte(text[i])) ++i;
        const std::size_t start = i;
        while (i < text.size() && is_word_byte(text[i])) ++i;
        if (i > start) tokens.push_back(lower(text.substr(start, i - start)));
    }
    return tokens;
}

LexicalExtractor::LexicalExtractor(std::shared_ptr<const Lexicon> lexicon,
                                   std::shared_ptr<const StopwordList> stopwords)
    : lexicon_(std::move(lexicon)), stopwords_(std::move(stopwords)) {}

EvidenceCount LexicalExtractor::extract(std::string_view text) const {
    EvidenceCount ev;
    for (const auto& token : tokenize(text)) {
        if (stopwords_ && stopwords_->contains(token)) continue;
        ev.positive += 1.0;
        if (lexicon_ && lexicon_->is_ambiguous(token)) ev.negative += 1.0;
    }
    return ev;
}

ExtractorConfig ExtractorConfig::load(const std::filesystem::path& path) {
    auto text = slurp(path);
    if (!text) throw ConfigError("cannot read extractor config '" + path.string() + "'");
    return parse(*text, path.parent_path());
}

ExtractorConfig ExtractorConfig::parse(std::string_view text, const std::filesystem::path& base_dir) {
    ExtractorConfig cfg;
    for_each_line(text, [&](std::size_t number, std::string_view raw) {
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) return;
        const auto where = "extractor config line " + std::to_string(number);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(where + ": expected 'key = value'");
        std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (value.empty()) throw ConfigError(where + ": empty value");

        ResourcePaths* target = &cfg.defaults;
        if (key.starts_with("rep") && key.size() > 4 && key[4] == '.') {
            const int index = key[3] - '0';
            if (index < 1 || index > kRepresentationCount) {
                throw ConfigError(where + ": representation index must be 1..5");
            }
            target = &cfg.per_representation[index];
            key.remove_prefix(5);
        }
        std::filesystem::path path(value);
        if (path.is_relative()) path = base_dir / path;
        if (key == "lexicon") {
            target->lexicon = path;
        } else if (key == "stopwords") {
            target->stopwords = path;
        } else {
            throw ConfigError(where + ": unknown key '" + std::string(key) + "'");
        }
    });
    return cfg;
}

ResourcePaths ExtractorConfig::resolved(int representation_index) const {
    ResourcePaths paths = defaults;
    if (auto it = per_representation.find(representation_index); it != per_representation.end()) {
        if (it->second.lexicon) paths.lexicon = it->second.lexicon;
        if (it->second.stopwords) paths.stopwords = it->second.stopwords;
    }
    return paths;
}

ExtractorSet::ExtractorSet() {
    auto plain = std::make_shared<const LexicalExtractor>();
    extractors_.fill(plain);
}

ExtractorSet ExtractorSet::load(const ExtractorConfig& cfg) {
    std::map<std::filesystem::path, std::shared_ptr<const Lexicon>> lexicons;
    std::map<std::filesystem::path, std::shared_ptr<const StopwordList>> stoplists;

    ExtractorSet set;
    for (int i = 1; i <= kRepresentationCount; ++i) {
        const ResourcePaths paths = cfg.resolved(i);
        std::shared_ptr<const Lexicon> lexicon;
        std::shared_ptr<const StopwordList> stopwords;
        if (paths.lexicon) {
            auto& slot = lexicons[*paths.lexicon];
            if (!slot) slot = std::make_shared<const Lexicon>(Lexicon::load(*paths.lexicon));
            lexicon = slot;
        }
        if (paths.stopwords) {
            auto& slot = stoplists[*paths.stopwords];
            if (!slot) slot = std::make_shared<const StopwordList>(StopwordList::load(*paths.stopwords));
            stopwords = slot;
        }
        set.set(i, std::make_shared<const LexicalExtractor>(std::move(lexicon), std::move(stopwords)));
    }
    return set;
}

const EvidenceExtractor& ExtractorSet::for_representation(int index) const {
    if (index < 1 || index > kRepresentationCount) {
        throw std::out_of_range("representation index " + std::to_string(index) + " not in 1..5");
    }
    return *extractors_[static_cast<std::size_t>(index - 1)];
}

void ExtractorSet::set(int index, std::shared_ptr<const EvidenceExtractor> extractor) {
    if (index < 1 || index > kRepresentationCount) {
        throw std::out_of_range("representation index " + std::to_string(index) + " not in 1..5");
    }
    if (!extractor) throw std::invalid_argument("null extractor");
    extractors_[static_cast<std::size_t>(index - 1)] = std::move(extractor);
}

EvidenceCount extract_evidence(const Topic& topic, int representation_index,
                               const ExtractorSet& extractors) {
    const auto& extractor = extractors.for_representation(representation_index);
    if (representation_index == static_cast<int>(RepresentationKind::Keywords)) {
        EvidenceCount total;
        for (const auto& keyword : topic.keywords()) total = total + extractor.extract(keyword);
        return total;
    }
    return extractor.extract(topic.representation(representation_index));
}

EvidenceCount extract_evidence(const Topic& topic, int representation_index,
                               const ExtractorConfig& cfg) {
    return extract_evidence(topic, representation_index, ExtractorSet::load(cfg));
}

Opinion representation_opinion(const Topic& topic, int representation_index,
                               const ExtractorSet& extractors, double base_rate) {
    return from_evidence(observer_id(topic.id(), representation_index), topic.id(),
                         extract_evidence(topic, representation_index, extractors), base_rate);
}

Opinion representation_opinion(const Topic& topic, int representation_index,
                               const ExtractorConfig& cfg, double base_rate) {
    return representation_opinion(topic, representation_index, ExtractorSet::load(cfg), base_rate);
}

}  // namespace polyrep
