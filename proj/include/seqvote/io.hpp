#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "seqvote/agenda.hpp"
#include "seqvote/candidates.hpp"
#include "seqvote/errors.hpp"
#include "seqvote/model.hpp"
#include "seqvote/notion.hpp"
#include "seqvote/profwin.hpp"

// Profile text format:
//
//   # comment
//   candidates: A B C
//   vote 1: A>B>C
//   vote 2: B>A
//   vote 2: A>B, C>B
//
// Each chain X>Y>Z expands to X>Y, Y>Z; votes are transitively closed on
// load. A vote with an empty body declares nothing.

namespace seqvote {

class IoError : public Error {
public:
  using Error::Error;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n'; };
  while (!s.empty() && is_space(s.front()))
    s.remove_prefix(1);
  while (!s.empty() && is_space(s.back()))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w)
    out.push_back(w);
  return out;
}

} // namespace detail

inline Profile parse_profile(std::string_view text) {
  std::optional<CandidateSet> candidates;
  std::vector<Vote> votes;
  std::size_t line_no = 0;
  for (auto raw : detail::split(text, '\n')) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#')
      continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (!candidates) {
      constexpr std::string_view kHead = "candidates:";
      if (line.substr(0, kHead.size()) != kHead)
        throw SyntaxError(where + "expected 'candidates:' header");
      auto names = detail::split_words(line.substr(kHead.size()));
      try {
        candidates.emplace(std::move(names));
      } catch (const InvalidProfileError &e) {
        throw SyntaxError(where + e.what());
      }
      continue;
    }

    constexpr std::string_view kVote = "vote";
    if (line.substr(0, kVote.size()) != kVote)
      throw SyntaxError(where + "expected 'vote W: ...'");
    const auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw SyntaxError(where + "missing ':' after vote weight");
    if (line[kVote.size()] != ' ' && line[kVote.size()] != '\t')
      throw SyntaxError(where + "expected whitespace after 'vote'");
    const auto weight_text = detail::trim(line.substr(kVote.size(), colon - kVote.size()));
    if (weight_text.empty())
      throw SyntaxError(where + "missing vote weight");
    std::uint64_t weight = 0;
    auto [end, ec] = std::from_chars(weight_text.data(), weight_text.data() + weight_text.size(), weight);
    if (ec != std::errc{} || end != weight_text.data() + weight_text.size())
      throw SyntaxError(where + "vote weight must be a positive integer");
    if (weight < 1 || weight > kMaxWeight)
      throw InvalidProfileError(where + "vote weight must lie in [1, 2^31-1]");

    std::vector<Comparison> comparisons;
    const auto body = detail::trim(line.substr(colon + 1));
    if (!body.empty()) {
      for (auto rel : detail::split(body, ',')) {
        auto chain = detail::split(rel, '>');
        if (chain.size() < 2)
          throw SyntaxError(where + "relation '" + std::string(detail::trim(rel)) + "' is not a chain X>Y");
        std::vector<Candidate> members;
        for (auto name : chain) {
          name = detail::trim(name);
          if (!is_valid_candidate_name(name))
            throw SyntaxError(where + "bad candidate name '" + std::string(name) + "'");
          try {
            members.push_back(candidates->at(name));
          } catch (const UnknownCandidateError &e) {
            throw UnknownCandidateError(where + e.what());
          }
        }
        for (std::size_t i = 0; i + 1 < members.size(); ++i)
          comparisons.push_back({members[i], members[i + 1]});
      }
    }
    try {
      votes.emplace_back(transitive_close(comparisons, candidates->size()), weight);
    } catch (const CycleError &e) {
      throw CycleError(where + e.what());
    }
  }
  if (!candidates)
    throw SyntaxError("missing 'candidates:' header");
  return Profile(std::move(*candidates), std::move(votes));
}

inline std::string read_text_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Profile read_profile_file(const std::string &path) { return parse_profile(read_text_file(path)); }

/// Covering relations of `o` grouped greedily into chains, each chain
/// starting from a cover no remaining cover leads into.
inline std::string render_order(const PartialOrder &o, const CandidateSet &c) {
  auto covers = o.covers();
  std::vector<bool> used(covers.size(), false);
  auto is_head = [&](std::size_t i) {
    for (std::size_t j = 0; j < covers.size(); ++j)
      if (!used[j] && covers[j].worse == covers[i].better)
        return false;
    return true;
  };
  std::string out;
  while (true) {
    std::size_t i = 0;
    while (i < covers.size() && (used[i] || !is_head(i)))
      ++i;
    if (i == covers.size())
      break;
    used[i] = true;
    std::string chain = c.name(covers[i].better) + ">" + c.name(covers[i].worse);
    Candidate tail = covers[i].worse;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t j = 0; j < covers.size(); ++j) {
        if (!used[j] && covers[j].better == tail) {
          used[j] = true;
          chain += ">" + c.name(covers[j].worse);
          tail = covers[j].worse;
          grew = true;
          break;
        }
      }
    }
    if (!out.empty())
      out += ", ";
    out += chain;
  }
  return out;
}

inline std::string render_vote(const Vote &v, const CandidateSet &c) {
  const std::string body = render_order(v.order, c);
  return "vote " + std::to_string(v.weight) + ":" + (body.empty() ? "" : " " + body);
}

inline std::string render_votes(const Profile &p) {
  std::string out;
  for (const auto &v : p.votes())
    out += render_vote(v, p.candidates()) + '\n';
  return out;
}

inline std::string render_profile(const Profile &p) {
  std::string out = "candidates:";
  for (const auto &n : p.candidates().names())
    out += ' ' + n;
  out += '\n';
  return out + render_votes(p);
}

/// "WP: A B C" (declaration order, "-" when empty).
inline std::string render_report_line(Notion n, const CandidateSubset &winners, const CandidateSet &c) {
  return std::string(notion_name(n)) + ": " + format_subset(winners, c) + '\n';
}

inline std::string render_witness(Notion n, const Witness &w) {
  const auto &c = w.completion.candidates();
  return "witness " + std::string(notion_name(n)) + " " + c.name(w.candidate) + ":\n" + render_votes(w.completion) +
         "agenda: " + render_agenda(w.agenda, c) + '\n';
}

} // namespace seqvote
