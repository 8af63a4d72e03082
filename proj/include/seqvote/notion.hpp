#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace seqvote {

/// Winner notions: weak/strong Condorcet, weak/strong possible, and their
/// balanced-agenda ("fair") variants.
enum class Notion { WC, SC, WP, SP, FWC, FSC, FWP, FSP };

inline constexpr std::array<Notion, 8> kAllNotions{Notion::WC,  Notion::SC,  Notion::WP,  Notion::SP,
                                                   Notion::FWC, Notion::FSC, Notion::FWP, Notion::FSP};

constexpr bool is_fair(Notion n) { return n >= Notion::FWC; }

/// Non-fair counterpart (FWP -> WP, ...).
constexpr Notion base_notion(Notion n) {
  switch (n) {
  case Notion::FWC:
    return Notion::WC;
  case Notion::FSC:
    return Notion::SC;
  case Notion::FWP:
    return Notion::WP;
  case Notion::FSP:
    return Notion::SP;
  default:
    return n;
  }
}

constexpr std::string_view notion_name(Notion n) {
  constexpr std::array<std::string_view, 8> names{"WC", "SC", "WP", "SP", "FWC", "FSC", "FWP", "FSP"};
  return names[static_cast<std::size_t>(n)];
}

/// Case-insensitive lookup ("wp", "FWP", ...).
inline std::optional<Notion> parse_notion(std::string_view text) {
  std::string upper(text);
  for (auto &ch : upper)
    if (ch >= 'a' && ch <= 'z')
      ch = static_cast<char>(ch - 'a' + 'A');
  for (auto n : kAllNotions)
    if (notion_name(n) == upper)
      return n;
  return std::nullopt;
}

enum class Source { Profile, Graph };

struct NotionQuery {
  Notion notion = Notion::WP;
  Source source = Source::Profile;

  bool fair() const { return is_fair(notion); }
};

} // namespace seqvote
