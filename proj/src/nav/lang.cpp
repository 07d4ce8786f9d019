#include "csev/nav/lang.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "csev/resources/nav_lang.hpp"

namespace csev::nav {

namespace {

struct LanguageTable {
  std::string version;
  std::vector<std::string> templates;
  std::map<std::string, std::vector<std::string>> synonyms;
};

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t begin = 0;
  while (begin <= line.size()) {
    const std::size_t tab = line.find('\t', begin);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(begin));
      break;
    }
    fields.push_back(line.substr(begin, tab - begin));
    begin = tab + 1;
  }
  return fields;
}

LanguageTable parse_language() {
  LanguageTable table;
  std::istringstream in{std::string(resources::kNavLanguage)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_tabs(line);
    if (fields[0] == "version" && fields.size() >= 2) {
      table.version = fields[1];
    } else if (fields[0] == "template" && fields.size() >= 3) {
      const auto id = static_cast<std::size_t>(std::stoi(fields[1]));
      if (table.templates.size() <= id) table.templates.resize(id + 1);
      table.templates[id] = fields[2];
    } else if (fields[0] == "synonym" && fields.size() >= 3) {
      table.synonyms[fields[1]] = {fields.begin() + 2, fields.end()};
    }
  }
  return table;
}

const LanguageTable& language() {
  static const LanguageTable table = parse_language();
  return table;
}

void replace_all(std::string& text, const std::string& key, const std::string& value) {
  for (auto at = text.find(key); at != std::string::npos; at = text.find(key)) {
    text.replace(at, key.size(), value);
  }
}

}  // namespace

std::string nav_language_version() { return language().version; }

const std::vector<std::string>& nav_synonyms(const std::string& cls) {
  const auto it = language().synonyms.find(cls);
  if (it == language().synonyms.end()) {
    throw std::invalid_argument("no synonyms for class: " + cls);
  }
  return it->second;
}

std::string render_nav_surface(const core::SemanticFrame& frame, int template_id,
                               int paraphrase_id) {
  const LanguageTable& table = language();
  if (template_id < 0 || static_cast<std::size_t>(template_id) >= table.templates.size()) {
    throw std::invalid_argument("unknown nav template id: " + std::to_string(template_id));
  }
  if (paraphrase_id < 0 || paraphrase_id >= kParaphraseCount) {
    throw std::invalid_argument("unknown nav paraphrase id: " + std::to_string(paraphrase_id));
  }
  const std::vector<std::string>& g1_names = nav_synonyms(frame.source);
  const std::vector<std::string>& g2_names = nav_synonyms(frame.target);
  const std::size_t g1_index =
      static_cast<std::size_t>(paraphrase_id / 2) % g1_names.size();
  const std::size_t g2_index = static_cast<std::size_t>(paraphrase_id) % g2_names.size();

  std::string text = table.templates[static_cast<std::size_t>(template_id)];
  replace_all(text, "{g1}", g1_names[g1_index]);
  replace_all(text, "{g2}", g2_names[g2_index]);
  return text;
}

const std::vector<std::string>& nav_goal_classes() {
  static const std::vector<std::string> classes{"bed", "couch", "table", "bookshelf", "lamp"};
  return classes;
}

const std::vector<std::string>& nav_passive_classes() {
  static const std::vector<std::string> classes{"chair", "plant"};
  return classes;
}

const std::vector<std::string>& nav_familiar_classes() {
  static const std::vector<std::string> classes{"bed",  "couch", "table",
                                                "bookshelf", "lamp",  "chair"};
  return classes;
}

bool is_familiar_class(const std::string& cls) {
  for (const std::string& known : nav_familiar_classes()) {
    if (known == cls) return true;
  }
  return false;
}

}  // namespace csev::nav
