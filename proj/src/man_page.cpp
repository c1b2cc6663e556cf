#include "tagman/man_page.hpp"

#include <sstream>
#include <unordered_set>

#include "tagman/text_util.hpp"

namespace tagman {
namespace {

bool quote_wrapped(std::string_view s) {
  return s.size() >= 2 && s.front() == '"' && s.back() == '"';
}

std::string strip_heading_quotes(std::string_view raw) {
  if (quote_wrapped(raw)) return std::string(raw.substr(1, raw.size() - 2));
  return std::string(raw);
}

// Tokenizes the .TH argument list. A token opening with '"' runs to the
// closing '"' (no escape processing) and may contain spaces.
std::vector<std::string> tokenize_title_args(std::string_view rest,
                                             std::size_t* date_offset) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  *date_offset = rest.size();
  int wanted = 2;  // name and section; the remainder is the opaque date
  while (i < rest.size() && static_cast<int>(tokens.size()) < wanted) {
    while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t')) ++i;
    if (i >= rest.size()) break;
    if (rest[i] == '"') {
      std::size_t close = rest.find('"', i + 1);
      if (close == std::string_view::npos) {
        tokens.emplace_back(rest.substr(i + 1));
        i = rest.size();
      } else {
        tokens.emplace_back(rest.substr(i + 1, close - i - 1));
        i = close + 1;
      }
    } else {
      std::size_t start = i;
      while (i < rest.size() && rest[i] != ' ' && rest[i] != '\t') ++i;
      tokens.emplace_back(rest.substr(start, i - start));
    }
  }
  while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t')) ++i;
  *date_offset = i;
  return tokens;
}

TitleHeader parse_title_line(std::string_view line) {
  std::string_view rest = line.substr(3);  // past ".TH"
  std::size_t date_offset = 0;
  std::vector<std::string> args = tokenize_title_args(rest, &date_offset);
  if (args.size() < 2) {
    throw ManParseError(ManParseError::Code::MalformedTitleHeader,
                        ".TH needs a name and a section number");
  }
  TitleHeader title;
  title.name = args[0];
  if (title.name.empty() ||
      title.name.find_first_of(" \t") != std::string::npos) {
    throw ManParseError(ManParseError::Code::MalformedTitleHeader,
                        ".TH name must be a single non-empty word");
  }
  const std::string& sec = args[1];
  if (sec.size() != 1 || sec[0] < '1' || sec[0] > '9') {
    throw ManParseError(ManParseError::Code::MalformedTitleHeader,
                        ".TH section must be an integer from 1 to 9");
  }
  title.section = sec[0] - '0';
  title.date = std::string(rest.substr(date_offset));
  return title;
}

bool is_title_line(std::string_view line) {
  return line == ".TH" || text::starts_with(line, ".TH ") ||
         text::starts_with(line, ".TH\t");
}

bool is_section_line(std::string_view line) {
  return text::starts_with(line, ".SH ");
}

}  // namespace

SectionKind section_kind_for(std::string_view heading) {
  if (heading == "NAME") return SectionKind::Name;
  if (heading == "SYNOPSIS") return SectionKind::Synopsis;
  if (heading == "DESCRIPTION") return SectionKind::Description;
  if (heading == "OPTIONS") return SectionKind::Options;
  if (heading == "DIAGNOSTICS") return SectionKind::Diagnostics;
  if (heading == "BUGS") return SectionKind::Bugs;
  if (heading == "TAGS") return SectionKind::Tags;
  if (heading == "USAGE HISTORY") return SectionKind::UsageHistory;
  if (heading == "EXAMPLE USAGE") return SectionKind::ExampleUsage;
  return SectionKind::Other;
}

bool is_extended_kind(SectionKind kind) {
  return kind == SectionKind::Tags || kind == SectionKind::UsageHistory ||
         kind == SectionKind::ExampleUsage;
}

ManDocument parse_man_page(std::string_view input) {
  std::vector<std::string> lines = text::split_lines(input);
  if (lines.empty() || !is_title_line(lines[0])) {
    throw ManParseError(ManParseError::Code::MissingTitleHeader,
                        "document must begin with a .TH line");
  }
  ManDocument doc;
  doc.title = parse_title_line(lines[0]);

  std::unordered_set<int> seen_extended;
  bool in_section = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (is_section_line(line)) {
      Section section;
      section.heading = strip_heading_quotes(std::string_view(line).substr(4));
      SectionKind kind = section.kind();
      if (is_extended_kind(kind) &&
          !seen_extended.insert(static_cast<int>(kind)).second) {
        throw ManParseError(ManParseError::Code::DuplicateExtendedSection,
                            "duplicate section: " + section.heading);
      }
      doc.sections.push_back(std::move(section));
      in_section = true;
    } else {
      if (!in_section) {
        // Body text before any .SH line lands in an unnamed leading section.
        doc.sections.push_back(Section{});
        in_section = true;
      }
      doc.sections.back().body.push_back(line);
    }
  }
  return doc;
}

ManDocument parse_man_page(std::istream& input) {
  std::ostringstream buffer;
  buffer << input.rdbuf();
  return parse_man_page(std::string_view(buffer.view()));
}

std::string serialize_man_page(const ManDocument& doc) {
  std::string out = ".TH " + doc.title.name + " " +
                    std::to_string(doc.title.section);
  if (!doc.title.date.empty()) {
    out += " ";
    out += doc.title.date;
  }
  out += "\n";
  for (std::size_t i = 0; i < doc.sections.size(); ++i) {
    const Section& section = doc.sections[i];
    bool unnamed_preamble = i == 0 && section.heading.empty() && !section.body.empty();
    if (!unnamed_preamble) {
      out += ".SH ";
      if (section.heading.empty() || quote_wrapped(section.heading)) {
        // Wrap so that quote stripping on reparse restores the original.
        out += "\"" + section.heading + "\"";
      } else {
        out += section.heading;
      }
      out += "\n";
    }
    for (const std::string& line : section.body) {
      out += line;
      out += "\n";
    }
  }
  return out;
}

std::vector<std::string> extract_tags(const ManDocument& doc) {
  std::vector<std::string> tags;
  std::unordered_set<std::string> seen;
  for (const Section& section : doc.sections) {
    if (section.kind() != SectionKind::Tags) continue;
    for (const std::string& line : section.body) {
      for (std::string& token : text::split_ws(line)) {
        if (seen.insert(token).second) tags.push_back(std::move(token));
      }
    }
    break;
  }
  return tags;
}

std::optional<std::string> extract_usage_pointer(const ManDocument& doc) {
  for (const Section& section : doc.sections) {
    if (section.kind() != SectionKind::UsageHistory) continue;
    for (const std::string& line : section.body) {
      std::string_view trimmed = text::trim(line);
      if (!trimmed.empty()) return std::string(trimmed);
    }
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace tagman
