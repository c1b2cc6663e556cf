#pragma once

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tagman {

// Section kinds recognized in extended man pages. The nine named kinds are
// matched against the heading text exactly (case-sensitive); every other
// heading is Other.
enum class SectionKind {
  Name,
  Synopsis,
  Description,
  Options,
  Diagnostics,
  Bugs,
  Tags,
  UsageHistory,
  ExampleUsage,
  Other,
};

SectionKind section_kind_for(std::string_view heading);
bool is_extended_kind(SectionKind kind);

struct Section {
  std::string heading;
  std::vector<std::string> body;

  SectionKind kind() const { return section_kind_for(heading); }
  bool operator==(const Section&) const = default;
};

struct TitleHeader {
  std::string name;
  int section = 1;
  std::string date;  // opaque remainder of the .TH line, may be empty

  bool operator==(const TitleHeader&) const = default;
};

// A man page as an ordered list of sections under a single title header.
// A leading section with an empty heading holds body lines that appear
// between the .TH line and the first .SH line.
struct ManDocument {
  TitleHeader title;
  std::vector<Section> sections;

  bool operator==(const ManDocument&) const = default;
};

class ManParseError : public std::runtime_error {
 public:
  enum class Code {
    MissingTitleHeader,
    MalformedTitleHeader,
    DuplicateExtendedSection,
  };

  ManParseError(Code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Code code() const { return code_; }

 private:
  Code code_;
};

// Grammar: the first line must be `.TH <name> <section> [date]`; every
// `.SH <heading>` line opens a section; all other lines belong verbatim to
// the current section body. Only the first line is treated as a title
// header; later `.TH` lines are ordinary body text.
ManDocument parse_man_page(std::istream& input);
ManDocument parse_man_page(std::string_view input);

// Inverse of parse_man_page: parse(serialize(d)) == d for any document
// satisfying the ManDocument invariants. Body lines are emitted byte for
// byte; headings are quoted only when reparsing would otherwise alter them.
std::string serialize_man_page(const ManDocument& doc);

// Whitespace-separated tokens of the Tags section body, first occurrence
// wins. Empty when the document has no Tags section.
std::vector<std::string> extract_tags(const ManDocument& doc);

// First non-blank line of the Usage History section, trimmed. This is the
// per-user store indirection, never the tag data itself.
std::optional<std::string> extract_usage_pointer(const ManDocument& doc);

}  // namespace tagman
